#pragma once

#include <json.hpp>

#include "braidq/hidden_q.hpp"

namespace braidq {

/// JSON renderings. Laurent terms are arrays [j, num, den] (one variable)
/// or [j, k, num, den] (two variables), exponents ascending; numerators and
/// denominators are decimal strings so values stay exact at any size.

nlohmann::ordered_json laurent_a_json(const LaurentA& p);
nlohmann::ordered_json laurent_2_json(const Laurent2& p);
nlohmann::ordered_json invariant_json(const RationalInvariant& v);
nlohmann::ordered_json poly_t_json(const PolyT& p);
nlohmann::ordered_json hidden_polynomial_json(const HiddenPolynomial& hp);

}  // namespace braidq
