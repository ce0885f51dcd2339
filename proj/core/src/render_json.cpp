#include "braidq/render_json.hpp"

namespace braidq {

nlohmann::ordered_json laurent_a_json(const LaurentA& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [j, c] : p.terms()) {
    arr.push_back({j, c.get_num().get_str(), c.get_den().get_str()});
  }
  return arr;
}

nlohmann::ordered_json laurent_2_json(const Laurent2& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [jk, c] : p.terms()) {
    arr.push_back(
        {jk.first, jk.second, c.get_num().get_str(), c.get_den().get_str()});
  }
  return arr;
}

nlohmann::ordered_json invariant_json(const RationalInvariant& v) {
  nlohmann::ordered_json j;
  j["num"] = laurent_2_json(v.num());
  j["dpow"] = v.dpow();
  return j;
}

nlohmann::ordered_json poly_t_json(const PolyT& p) {
  auto arr = nlohmann::ordered_json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k).is_zero()) continue;
    arr.push_back({k, laurent_a_json(p.coeff(k))});
  }
  return arr;
}

nlohmann::ordered_json hidden_polynomial_json(const HiddenPolynomial& hp) {
  nlohmann::ordered_json j;
  j["components"] = hp.components;
  j["coeffs"] = poly_t_json(hp.poly);
  j["T0"] = hp.t0_text();
  j["convention"] = to_string(hp.convention);
  return j;
}

}  // namespace braidq
