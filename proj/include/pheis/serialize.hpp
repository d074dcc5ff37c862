#pragma once

#include <json.hpp>

#include "pheis/fock.hpp"
#include "pheis/modes.hpp"
#include "pheis/qseries.hpp"

namespace pheis {

// All emitted JSON uses insertion-ordered objects and string-encoded
// rationals ("num/den"), so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// {"base": p, "neg_exponent": "a/b" | "inf"} for the norm p^(-a/b).
Json norm_to_json(const NormValue& n, const Prime& p);

/// [{"partition": [n1,...], "coeff": "num/den"}, ...] in canonical order.
Json state_to_json(const FockState& s);
FockState state_from_json(const Json& j);

/// {"truncation": D, "coeffs": ["num/den", ...]}.
Json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [...]} row-major.
Json matrix_to_json(const RationalMatrix& m);

}  // namespace pheis
