#pragma once

#include <string>

#include "contavg/ft/series.hpp"
#include "contavg/ft/vector_field.hpp"

namespace contavg::ft {

// JSON document {m, K, N, coeffs: [[k, [a...], re, im], ...]} listing the
// nonzero coefficients of the stored half lattice (k >= 0). Multi-frequency
// series add "n_freq" and write k as an array. Doubles are written in
// shortest round-trip form, so parse(serialize(s)) == s exactly.
std::string serialize(const FourierTaylorSeries& s);
FourierTaylorSeries parse_series(const std::string& json_text);

// {"kind": "time_periodic"|"torus", "components": [series, ...]}
std::string serialize(const VectorFieldFT& u);
VectorFieldFT parse_field(const std::string& json_text);

}  // namespace contavg::ft
