#pragma once

#include <functional>
#include <string>

#include "mspoly/multipoly.hpp"
#include "mspoly/series.hpp"

namespace mspoly {

enum class EmitFormat { Text, Json, Latex };

// Default variable namer: X0, X1, ...; the reserved univariate index is "t".
std::string default_var_name(int var);

std::string emit_poly(const MultiPoly& p, EmitFormat format,
                      const std::function<std::string(int)>& var_name = default_var_name);

// JSON schema: [{"coeff": {"num": "...", "den": "..."}, "exps": {"1": 2}}, ...]
// in canonical term order.
MultiPoly parse_poly_json(const std::string& text);

// Series schema: {"order": N, "taylor": ["t0", ...]}.
std::string emit_series_json(const PowerSeries& f);
PowerSeries parse_series_json(const std::string& text);

} // namespace mspoly
