#pragma once

// JSON encodings. Rationals are strings "p/q"; a field element is
// {"a": ..., "b": ..., "d": n}; polynomials are coefficient arrays, lowest
// degree first.

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "pellfrac/cfrac.hpp"
#include "pellfrac/ecurve.hpp"
#include "pellfrac/families.hpp"
#include "pellfrac/modcurve.hpp"
#include "pellfrac/qfield.hpp"

namespace pellfrac {

using json = nlohmann::ordered_json;

inline json to_json(const QuadElem& z) {
  return json{{"a", z.a().get_str()}, {"b", z.b().get_str()}, {"d", z.field().d()}};
}

inline QuadElem quad_from_json(const json& j) {
  try {
    FieldTag field = FieldTag::of(j.at("d").get<std::int64_t>());
    return QuadElem(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()), field);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("malformed field element: ") + e.what());
  }
}

inline json to_json(const Poly& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs()) arr.push_back(to_json(c.in(f.field())));
  return arr;
}

inline Poly poly_from_json(const json& j) {
  std::vector<QuadElem> c;
  for (const auto& e : j) c.push_back(quad_from_json(e));
  return Poly(std::move(c));
}

template <class T>
json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, QuadElem>) {
    return to_json(*v);
  } else {
    return *v;
  }
}

inline json to_json(const CFExpansion& e, bool with_steps = true) {
  json j{{"f", to_json(e.f)}, {"f_text", e.f.to_string()}, {"a0", to_json(e.a0())}};
  if (with_steps) {
    json steps = json::array();
    for (const auto& st : e.steps) steps.push_back(json{{"h", st.h}, {"P", to_json(st.P)}, {"Q", to_json(st.Q)}, {"a", to_json(st.a)}});
    j["steps"] = std::move(steps);
  }
  j["r"] = optional_json(e.quasi_period);
  j["k"] = optional_json(e.k);
  j["period"] = optional_json(e.period);
  return j;
}

inline json to_json(const ShortWeierstrass& E) { return json{{"A", to_json(E.A)}, {"B", to_json(E.B)}}; }
inline json to_json(const TateCurve& T) { return json{{"b", to_json(T.b)}, {"c", to_json(T.c)}}; }

inline json to_json(const ECPoint& P) {
  if (P.infinity) return json{{"infinity", true}};
  return json{{"infinity", false}, {"x", to_json(P.x)}, {"y", to_json(P.y)}};
}

inline json to_json(const QuarticModel& M) {
  Poly f = M.f();
  return json{{"u", to_json(M.u)}, {"v", to_json(M.v)}, {"w", to_json(M.w)}, {"f", to_json(f)}, {"f_text", f.to_string()}};
}

inline json to_json(const ModCurvePoint& p) {
  return json{{"curve", std::string(name(p.id))}, {"t", to_json(p.t)}, {"s", to_json(p.s)},
              {"on_curve", p.on_curve}, {"cusp", p.cusp}, {"admissible", p.admissible}};
}

inline json to_json(const OddPeriodCertificate& c) {
  return json{{"n", c.n},
              {"point", to_json(c.point)},
              {"model", to_json(c.model)},
              {"period", c.period},
              {"quasi_period", c.quasi_period},
              {"k", to_json(c.k)},
              {"alpha", to_json(c.alpha)},
              {"k_square", c.k_square},
              {"alpha_square", c.alpha_square},
              {"mu", optional_json(c.mu)},
              {"scaled_period", optional_json(c.scaled_period)}};
}

}  // namespace pellfrac
