#include "catalog_util.hpp"

namespace qcontig::catalog {

namespace {

template <Pattern Pt, bool Star>
auto q_pattern() {
  return [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C q = x.q(), a = x(P::a), b = x(P::b), c = x(P::c), d = x(P::d), e = x(P::e);
    const C z = x.div(b * d, a * c * e, "ace");
    const C zq = z / q;
    x.lhs(x.phi({a, c, e}, {b, d}, z, "bd/ace"));
    auto div = [&x](const C& n, const C& m, std::string_view l) { return x.div(n, m, l); };
    const auto k = pattern_coeffs_q(Pt, a, c, e, b, d, q, div);
    const C q2 = q * q;
    if constexpr (Pt == Pattern::A) {
      x.term(k.script, x.phi({q * a, c, e}, {q * b, d}, z, "bd/ace"));
      if constexpr (Star)
        x.term(k.fraktur, x.phi_star({q * a, c, e}, {q * b, d}, zq, "bd/qace"));
      else
        x.term(k.blackboard, x.phi({q2 * a, q * c, q * e}, {q2 * b, q * d}, zq, "bd/qace"));
    } else if constexpr (Pt == Pattern::B) {
      x.term(k.script, x.phi({a / q, c, e}, {b, d / q}, z, "bd/ace"));
      if constexpr (Star)
        x.term(k.fraktur, x.phi_star({a / q, c, e}, {b, d / q}, zq, "bd/qace"));
      else
        x.term(k.blackboard, x.phi({a, q * c, q * e}, {q * b, d}, zq, "bd/qace"));
    } else if constexpr (Pt == Pattern::C) {
      x.term(k.script, x.phi({a, q * c, q * e}, {q * b, q * d}, z, "bd/ace"));
      if constexpr (Star)
        x.term(k.fraktur, x.phi_star({a, q * c, q * e}, {q * b, q * d}, zq, "bd/qace"));
      else
        x.term(k.blackboard, x.phi({q * a, q2 * c, q2 * e}, {q2 * b, q2 * d}, zq, "bd/qace"));
    } else {
      x.term(k.script, x.phi({a, c / q, e / q}, {b / q, d / q}, z, "bd/ace"));
      if constexpr (Star)
        x.term(k.fraktur, x.phi_star({a, c / q, e / q}, {b / q, d / q}, zq, "bd/qace"));
      else
        x.term(k.blackboard, x.phi({q * a, c, e}, {b, d}, zq, "bd/qace"));
    }
  };
}

template <Pattern Pt, bool Star>
auto classical_pattern() {
  return [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C a = x(P::a), b = x(P::b), c = x(P::c), d = x(P::d), e = x(P::e);
    const C one(1), two(2);
    x.lhs(x.F({a, c, e}, {b, d}));
    auto div = [&x](const C& n, const C& m, std::string_view l) { return x.div(n, m, l); };
    const auto k = pattern_coeffs_classical(Pt, a, c, e, b, d, div);
    if constexpr (Pt == Pattern::A) {
      x.term(k.script, x.F({a + one, c, e}, {b + one, d}));
      if constexpr (Star)
        x.term(k.fraktur, x.F_star({a + one, c, e}, {b + one, d}));
      else
        x.term(k.blackboard, x.F({a + two, c + one, e + one}, {b + two, d + one}));
    } else if constexpr (Pt == Pattern::B) {
      x.term(k.script, x.F({a - one, c, e}, {b, d - one}));
      if constexpr (Star)
        x.term(k.fraktur, x.F_star({a - one, c, e}, {b, d - one}));
      else
        x.term(k.blackboard, x.F({a, c + one, e + one}, {b + one, d}));
    } else if constexpr (Pt == Pattern::C) {
      x.term(k.script, x.F({a, c + one, e + one}, {b + one, d + one}));
      if constexpr (Star)
        x.term(k.fraktur, x.F_star({a, c + one, e + one}, {b + one, d + one}));
      else
        x.term(k.blackboard, x.F({a + one, c + two, e + two}, {b + two, d + two}));
    } else {
      x.term(k.script, x.F({a, c - one, e - one}, {b - one, d - one}));
      if constexpr (Star)
        x.term(k.fraktur, x.F_star({a, c - one, e - one}, {b - one, d - one}));
      else
        x.term(k.blackboard, x.F({a + one, c, e}, {b, d}));
    }
  };
}

template <Pattern Pt, bool Star>
void add_pair(std::vector<Relation>& out, const std::string& id, const std::string& anchor) {
  const std::vector<Param> five = {P::a, P::b, P::c, P::d, P::e};
  add_q(out, id, Family::pattern, five, anchor, q_pattern<Pt, Star>());
  add_classical(out, id, five, anchor + ", classical limit", classical_pattern<Pt, Star>());
}

}  // namespace

void add_patterns(std::vector<Relation>& out) {
  add_pair<Pattern::A, false>(out, "pattern-A-eq-a", "Pattern A, first identity");
  add_pair<Pattern::A, true>(out, "pattern-A-eq-aa", "Pattern A, starred identity");
  add_pair<Pattern::B, false>(out, "pattern-B-eq-b", "Pattern B, first identity");
  add_pair<Pattern::B, true>(out, "pattern-B-eq-bb", "Pattern B, starred identity");
  add_pair<Pattern::C, false>(out, "pattern-C-eq-c", "Pattern C, first identity");
  add_pair<Pattern::C, true>(out, "pattern-C-eq-cc", "Pattern C, starred identity");
  add_pair<Pattern::D, false>(out, "pattern-D-eq-d", "Pattern D, first identity");
  add_pair<Pattern::D, true>(out, "pattern-D-eq-dd", "Pattern D, starred identity");
}

}  // namespace qcontig::catalog
