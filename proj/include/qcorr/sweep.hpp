#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcorr/correlations.hpp"

namespace qcorr {

enum class SweepFamily { werner, horodecki };

// One grid point of a family sweep. Optional fields are absent exactly when
// the quantity is undefined (vanishing variance at a pure-product point);
// they render as the literal NA so the grid keeps its shape.
struct SweepRow {
    double p = 0.0;
    std::optional<double> r_value;
    std::optional<double> sum_pauli;
    std::optional<double> pcc_pair[3]; // Pauli order (X, Y, Z)
    double mutual_information = 0.0;
    double negativity = 0.0;
};

SweepRow evaluate_sweep_point(SweepFamily family, double p, const OptimizerOptions& opts);

// Evaluates `steps` evenly spaced points of [p_min, p_max]; grid points may
// run in parallel (opts.exec) with output order fixed by p.
std::vector<SweepRow> run_sweep(SweepFamily family, double p_min, double p_max, int steps,
                                const OptimizerOptions& opts);

// Fixed header, comma separators, LF line endings, %.12g numbers:
// byte-identical output for identical inputs.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

std::string sweep_to_json(const std::vector<SweepRow>& rows);

} // namespace qcorr
