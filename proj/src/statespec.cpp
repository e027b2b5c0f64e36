#include "qcorr/statespec.hpp"

#include <sstream>

#include <json.hpp>

#include "qcorr/errors.hpp"
#include "qcorr/format.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        std::ostringstream msg;
        msg << "state spec: missing or non-numeric field \"" << key << "\"";
        throw OutOfRange(msg.str());
    }
    return j[key].get<double>();
}

StateSpec from_family(const json& j) {
    const std::string family = j["family"].get<std::string>();
    if (family == "bell") return {"bell", bell_phi()};
    if (family == "werner") {
        const double p = require_number(j, "p");
        std::ostringstream desc;
        desc << "werner p=" << format_number(p);
        return {desc.str(), werner(p)};
    }
    if (family == "horodecki") {
        const double p = require_number(j, "p");
        std::ostringstream desc;
        desc << "horodecki p=" << format_number(p);
        return {desc.str(), horodecki(p)};
    }
    if (family == "classical_diag") {
        if (!j.contains("table")) throw OutOfRange("state spec: classical_diag needs \"table\"");
        const json& t = j["table"];
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 2 ||
            !t[1].is_array() || t[1].size() != 2)
            throw OutOfRange("state spec: \"table\" must be a 2x2 array");
        std::array<std::array<double, 2>, 2> table{};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) table[r][c] = t[r][c].get<double>();
        return {"classical_diag", classical_diag(table)};
    }
    if (family == "standard_form") {
        if (!j.contains("t") || !j["t"].is_array() || j["t"].size() != 3)
            throw OutOfRange("state spec: standard_form needs \"t\" with 3 entries");
        const double t1 = j["t"][0].get<double>();
        const double t2 = j["t"][1].get<double>();
        const double t3 = j["t"][2].get<double>();
        return {"standard_form", standard_form_state(t1, t2, t3)};
    }
    std::ostringstream msg;
    msg << "state spec: unknown family \"" << family << "\"";
    throw OutOfRange(msg.str());
}

StateSpec from_matrix(const json& j) {
    const auto dim = j["dim"].get<std::size_t>();
    if (!j.contains("matrix")) throw OutOfRange("state spec: explicit form needs \"matrix\"");
    const json& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != dim)
        throw OutOfRange("state spec: \"matrix\" must have dim rows");
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!rows[i].is_array() || rows[i].size() != dim)
            throw OutOfRange("state spec: \"matrix\" rows must have dim entries");
        for (std::size_t k = 0; k < dim; ++k) {
            const json& e = rows[i][k];
            if (!e.is_array() || e.size() != 2)
                throw OutOfRange("state spec: matrix entries must be [re, im] pairs");
            m(i, k) = cdouble(e[0].get<double>(), e[1].get<double>());
        }
    }
    return {"explicit", DensityOperator(std::move(m))};
}

} // namespace

StateSpec parse_state_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        std::ostringstream msg;
        msg << "state spec: invalid JSON: " << e.what();
        throw OutOfRange(msg.str());
    }
    if (!j.is_object()) throw OutOfRange("state spec: top level must be an object");
    if (j.contains("family")) return from_family(j);
    if (j.contains("dim")) return from_matrix(j);
    throw OutOfRange("state spec: need either \"family\" or \"dim\"+\"matrix\"");
}

std::string state_to_json(const DensityOperator& s) {
    std::string out = "{\"dim\": " + std::to_string(s.dim()) + ", \"matrix\": [";
    for (std::size_t i = 0; i < s.dim(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t k = 0; k < s.dim(); ++k) {
            const cdouble e = s.matrix()(i, k);
            if (k) out += ", ";
            out += "[" + format_number(e.real()) + ", " + format_number(e.imag()) + "]";
        }
        out += "]";
    }
    out += "]}";
    return out;
}

} // namespace qcorr
