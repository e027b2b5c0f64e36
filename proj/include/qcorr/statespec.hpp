#pragma once

#include <string>

#include "qcorr/density_operator.hpp"

namespace qcorr {

// Parsed form of the JSON state description accepted by the CLI: either a
// named family, e.g.
//   {"family": "werner", "p": 0.5}
//   {"family": "horodecki", "p": 0.3}
//   {"family": "bell"}
//   {"family": "classical_diag", "table": [[0.5, 0], [0, 0.5]]}
//   {"family": "standard_form", "t": [0.3, -0.2, 0.1]}
// or an explicit matrix with [re, im] entry pairs:
//   {"dim": 4, "matrix": [[[0.25, 0], ...], ...]}
// Parsing failures and invariant violations raise Error subclasses whose
// messages name the violated requirement.
struct StateSpec {
    std::string description;
    DensityOperator state;
};

StateSpec parse_state_spec(const std::string& json_text);

// Explicit-matrix StateSpec JSON for a state (the form parse_state_spec
// accepts back); used for counterexample reporting.
std::string state_to_json(const DensityOperator& s);

} // namespace qcorr
