#pragma once

#include <qcontig/relations.hpp>

namespace qcontig {

enum class Pattern { A, B, C, D };

// The three coefficients of a pattern: the leading one (script), the one in
// front of the doubly shifted series (blackboard) and the one in front of the
// starred series (fraktur).
template <class C>
struct CoefficientSet {
  C script, blackboard, fraktur;
};

// div(num, den, label) must return num / den and may refuse a vanishing den.
template <class C, class Div>
CoefficientSet<C> pattern_coeffs_q(Pattern p, const C& a, const C& c, const C& e, const C& b,
                                   const C& d, const C& q, Div&& div) {
  const C one(1);
  switch (p) {
    case Pattern::A: {
      const C r = div(b * d, q * a * c * e, "qace");
      const C dqa = div(d, q * a, "qa");
      const C base = (one - b) * (one - dqa);
      return {div(base - (one - c) * (one - e) * r, base, "(1-b)(1-d/qa)"),
              div((one - r) * (one - q * a) * (one - c) * (one - e) * r,
                  base * (one - q * b) * (one - d), "(1-b)(1-qb)(1-d)(1-d/qa)"),
              div(one - r, base, "(1-b)(1-d/qa)")};
    }
    case Pattern::B: {
      const C qcd = div(q * c, d, "d"), qed = div(q * e, d, "d");
      const C den = (one - qcd) * (one - qed);
      const C qd = div(q, d, "d");
      const C r = div(b * d, q * a * c * e, "qace");
      const C ri = div(q * a * c * e, b * d, "bd");
      return {div((one - qcd * e) * (one - qd), den, "(1-qc/d)(1-qe/d)"),
              div((one - c) * (one - e) * (one - r) * qd, (one - b) * den, "(1-b)(1-qc/d)(1-qe/d)"),
              div((one - ri) * (one - qd), (one - a / q) * den, "(1-a/q)(1-qc/d)(1-qe/d)")};
    }
    case Pattern::C: {
      const C r = div(b * d, q * a * c * e, "qace");
      const C base = (one - b) * (one - d);
      return {div(base - (one - a) * (one - q * c * e) * r, base, "(1-b)(1-d)"),
              div((one - r) * (one - a) * (one - q * c) * (one - q * e) * r,
                  base * (one - q * b) * (one - q * d), "(1-b)(1-d)(1-qb)(1-qd)"),
              div(one - r, base, "(1-b)(1-d)")};
    }
    case Pattern::D: {
      const C qab = div(q * a, b, "b"), qad = div(q * a, d, "d");
      const C den = (one - qab) * (one - qad);
      const C qb = div(q, b, "b"), qd = div(q, d, "d");
      const C ri = div(q * a * c * e, b * d, "bd");
      return {div((one - qb) * (one - qd) * a, den, "(1-qa/b)(1-qa/d)"),
              div((one - a) * (one - ri) * q, den * c * e, "(1-qa/b)(1-qa/d)ce"),
              div((one - ri) * (one - qb) * (one - qd) * a,
                  den * (one - c / q) * (one - e / q), "(1-qa/b)(1-qa/d)(1-c/q)(1-e/q)")};
    }
  }
  throw DomainViolation("unknown pattern");
}

template <class C, class Div>
CoefficientSet<C> pattern_coeffs_classical(Pattern p, const C& a, const C& c, const C& e,
                                           const C& b, const C& d, Div&& div) {
  const C one(1);
  const C w = one + a + c + e - b - d;
  switch (p) {
    case Pattern::A:
      return {div((one + a - d) * b + c * e, (one + a - d) * b, "(1+a-d)b"),
              div(w * (one + a) * c * e, (one + a - d) * (one + b) * b * d, "(1+a-d)(1+b)bd"),
              div(w, (one + a - d) * b, "(1+a-d)b")};
    case Pattern::B:
      return {div((one + c + e - d) * (one - d), (one + c - d) * (one + e - d), "(1+c-d)(1+e-d)"),
              div(w * c * e, (one + c - d) * (d - e - one) * b, "(1+c-d)(d-e-1)b"),
              div(w * (one - d), (one - a) * (one + c - d) * (d - e - one), "(1-a)(1+c-d)(d-e-1)")};
    case Pattern::C:
      return {div(b * d - a * (one + c + e), b * d, "bd"),
              div(-w * (one + c) * (one + e) * a, (one + b) * (one + d) * b * d, "(1+b)(1+d)bd"),
              div(-w, b * d, "bd")};
    case Pattern::D:
      return {div((one - b) * (one - d), (one + a - b) * (one + a - d), "(1+a-b)(1+a-d)"),
              div(a * w, (one + a - b) * (one + a - d), "(1+a-b)(1+a-d)"),
              div(w * (one - b) * (one - d), (one + a - b) * (one + a - d) * (one - c) * (one - e),
                  "(1+a-b)(1+a-d)(1-c)(1-e)")};
  }
  throw DomainViolation("unknown pattern");
}

// Stand-alone coefficient evaluation; a vanishing denominator raises SingularCoefficient.
template <class C>
CoefficientSet<C> pattern_coeffs(Pattern p, const ParamSet<C>& ps, Side side,
                                 const PrecisionPolicy& policy = PrecisionPolicy::standard()) {
  const real_t<C> thr(policy.singular_threshold());
  auto div = [&](const C& num, const C& den, std::string_view label) -> C {
    if (mag2(den) < thr * thr)
      throw SingularCoefficient("coefficient denominator " + std::string(label) + " vanishes");
    return num / den;
  };
  const C &a = ps.get(Param::a), &b = ps.get(Param::b), &c = ps.get(Param::c),
          &d = ps.get(Param::d), &e = ps.get(Param::e);
  if (side == Side::q) {
    if (!(mag2(ps.q) < real_t<C>(1))) throw BaseOutOfDomain("base q must satisfy |q| < 1");
    return pattern_coeffs_q(p, a, c, e, b, d, ps.q, div);
  }
  return pattern_coeffs_classical(p, a, c, e, b, d, div);
}

}  // namespace qcontig
