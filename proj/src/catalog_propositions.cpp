#include "catalog_util.hpp"

namespace qcontig::catalog {

namespace {

#define PR_SCALARS                                                             \
  using C = typename std::remove_reference_t<decltype(x)>::scalar_type;        \
  const C q = x.q(), q2 = q * q;                                               \
  (void)q2

// phi(a, c, e; qa, d; qd/ce) on the left
#define PR_ACDE                                                                \
  PR_SCALARS;                                                                  \
  const C a = x(P::a), c = x(P::c), d = x(P::d), e = x(P::e);                  \
  const C z = x.div(q * d, c * e, "ce");                                       \
  x.lhs(x.phi({a, c, e}, {q * a, d}, z, "qd/ce"))

// phi(a, c, e; qa, b; qb/ce) on the left
#define PR_ABCE                                                                \
  PR_SCALARS;                                                                  \
  const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);                  \
  const C z = x.div(q * b, c * e, "ce");                                       \
  x.lhs(x.phi({a, c, e}, {q * a, b}, z, "qb/ce"))

#define CL_SCALARS                                                             \
  using C = typename std::remove_reference_t<decltype(x)>::scalar_type;        \
  const C one(1), two(2), three(3);                                            \
  (void)two;                                                                   \
  (void)three

#define CL_ACDE                                                                \
  CL_SCALARS;                                                                  \
  const C a = x(P::a), c = x(P::c), d = x(P::d), e = x(P::e);                  \
  x.lhs(x.F({a, c, e}, {a + one, d}))

#define CL_ABCE                                                                \
  CL_SCALARS;                                                                  \
  const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);                  \
  x.lhs(x.F({a, c, e}, {a + one, b}))

using PV = std::vector<std::pair<Param, cplx>>;

const std::vector<Param> kACDE = {P::a, P::c, P::d, P::e};
const std::vector<Param> kABCE = {P::a, P::b, P::c, P::e};
const std::vector<Param> kACE = {P::a, P::c, P::e};

constexpr std::string_view kDInf = "(d, qd/ce; q)_inf";
constexpr std::string_view kDInf0 = "(d, d/ce; q)_inf";

Relation& prop(std::vector<Relation>& out, int n, const std::vector<Param>& params, auto body) {
  const std::string s = std::to_string(n);
  return add_q(out, "prop-4." + s, Family::proposition, params, "Proposition 4." + s, body);
}

Relation& cor(std::vector<Relation>& out, int n, const std::vector<Param>& params, auto body) {
  const std::string s = std::to_string(n);
  return add_classical(out, "prop-4." + s, params, "Proposition 4." + s + ", classical limit", body);
}

// Parameter maps shared by several reductions.
PV b_to_qa(const ParamSet<cplx>& p, cplx q) {
  const cplx a = p.get(P::a);
  return {{P::a, a}, {P::b, q * a}, {P::c, p.get(P::c)}, {P::d, p.get(P::d)}, {P::e, p.get(P::e)}};
}
PV d_to_qa(const ParamSet<cplx>& p, cplx q) {
  const cplx a = p.get(P::a);
  return {{P::a, a}, {P::b, p.get(P::b)}, {P::c, p.get(P::c)}, {P::d, q * a}, {P::e, p.get(P::e)}};
}

void q_side(std::vector<Relation>& out) {
  auto& p1 = prop(out, 1, kACDE, [](auto& x) {
    PR_ACDE;
    const C den = x.div(C(1), (q - c) * (q * a - d) * (q2 * a - d), "(q-c)(qa-d)(q^2a-d)");
    x.term(x.div((q * a - c) * (q * a - e) * (q - d) * (q2 * a - c) * d, (q * a - 1.0) * c * e,
                 "(qa-1)ce") * den,
           x.phi({q * a, c / q, e}, {q2 * a, d / q}, z, "qd/ce"));
    x.closed_qpoch(x.div((q2 * q * a * a * e + q * a * c * d + a * c * d * e - c * d * e -
                          q2 * a * a * d - q2 * a * a * c * e) *
                             q,
                         e, "e") * den,
                   {d / c, d / e}, {d, z}, kDInf);
  });
  set_parent(p1, "thm-4.1", b_to_qa);

  auto& p2 = prop(out, 2, kACDE, [](auto& x) {
    PR_ACDE;
    x.term(x.div((q * a - c) * (q * a - e) * d, (q * a - 1.0) * (q * a - d) * c * e, "(qa-1)(qa-d)ce"),
           x.phi({q * a, c, e}, {q2 * a, d}, z, "qd/ce"));
    x.closed_qpoch(x.div(q * a, q * a - d, "qa-d"), {d / c, d / e}, {d, z}, kDInf);
  });
  set_parent(p2, "thm-4.2", b_to_qa);

  auto& p3 = prop(out, 3, kACDE, [](auto& x) {
    PR_ACDE;
    const C z0 = z / q;
    x.term(x.div((1.0 - c) * (1.0 - e) * (q * a - c) * (q * a - e) * d * d,
                 (1.0 - d) * (1.0 - q * a) * (1.0 - q2 * a) * (q * a - d) * c * c * e * e,
                 "(1-d)(1-qa)(1-q^2a)(qa-d)c^2e^2"),
           x.phi({q2 * a, q * c, q * e}, {q2 * q * a, q * d}, z0, "d/ce"));
    x.closed_qpoch(x.div(q * a * d + c * d * e + q2 * a * a * c * e - q * a * c * d - q * a * c * e -
                             q * a * d * e,
                         (q * a - 1.0) * (q * a - d) * c * e, "(qa-1)(qa-d)ce"),
                   {d / c, d / e}, {d, z0}, kDInf0);
  });
  set_parent(p3, "thm-4.3", b_to_qa);

  auto& p4 = prop(out, 4, kACE, [](auto& x) {
    PR_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C D = x.div(C(1), q * a + c * e - q * a * c - q * a * e, "qa+ce-qac-qae");
    const C d = q * a * c * e * (1.0 - q * a) * D;
    const C z = q2 * a * (1.0 - q * a) * D;
    x.lhs(x.phi({a, c, e}, {q * a, d}, z, "q^2a(1-qa)/(qa+ce-qac-qae)"));
    x.term(x.div((1.0 - q * a) * (q * a - c) * (q * a - e),
                 (1.0 - q2 * a) * (q * a + c * e + q2 * a * a * c * e - q * a * c - q * a * e -
                                   q * a * c * e),
                 "(1-q^2a)(qa+ce+q^2a^2ce-qac-qae-qace)"),
           x.phi({q2 * a, q * c, q * e}, {q2 * q * a, q * d}, z / q, "qa(1-qa)/(qa+ce-qac-qae)"));
  });
  set_parent(p4, "prop-4.3", [](const ParamSet<cplx>& p, cplx q) {
    const cplx a = p.get(P::a), c = p.get(P::c), e = p.get(P::e);
    return PV{{P::a, a},
              {P::c, c},
              {P::d, q * a * c * e * (1.0 - q * a) / (q * a + c * e - q * a * c - q * a * e)},
              {P::e, e}};
  });

  auto& p5 = prop(out, 5, kACDE, [](auto& x) {
    PR_ACDE;
    const C W = x.div(C(1), q2 * a * d + q2 * c * e + c * d * e - q * c * d - q * d * e - q2 * a * c * e,
                      "q^2ad+q^2ce+cde-qcd-qde-q^2ace");
    x.term(x.div((1.0 - q) * (q - d) * (q * a - c) * (q * a - e) * d, (1.0 - q * a) * (q * a - d),
                 "(1-qa)(qa-d)") * W,
           x.phi({a, c, e}, {q2 * a, d / q}, z, "qd/ce"));
    x.closed_qpoch(x.div((1.0 - a) * (c * e - d) * (q2 * a - d) * q, q * a - d, "qa-d") * W,
                   {d / c, d / e}, {d, z / q}, kDInf0);
  });
  set_parent(p5, "thm-4.4", b_to_qa);

  auto& p6 = prop(out, 6, kABCE, [](auto& x) {
    PR_ABCE;
    x.term(x.div((a - b) * (1.0 - c), (a - c) * (1.0 - b), "(a-c)(1-b)"),
           x.phi({a, q * c, e}, {q * a, q * b}, z, "qb/ce"));
    x.closed_qpoch(x.div((a - 1.0) * c, a - c, "a-c"), {b / c, q * b / e}, {b, z},
                   "(b, qb/ce; q)_inf");
  });
  set_parent(p6, "thm-4.5", [](const ParamSet<cplx>& p, cplx q) {
    const cplx a = p.get(P::a);
    return PV{{P::a, p.get(P::c)}, {P::b, p.get(P::b)}, {P::c, a}, {P::d, q * a}, {P::e, p.get(P::e)}};
  });

  auto& p7 = prop(out, 7, kACDE, [](auto& x) {
    PR_ACDE;
    const C z0 = z / q;
    x.term(x.div((1.0 - c) * (1.0 - e) * (1.0 - q * c) * (a - d) * d,
                 (1.0 - d) * (1.0 - q * d) * (1.0 - q * a) * (c - a) * c * e,
                 "(1-d)(1-qd)(1-qa)(c-a)ce"),
           x.phi({q * a, q2 * c, q * e}, {q2 * a, q2 * d}, z0, "d/ce"));
    x.closed_qpoch(x.div(a * e + c * d * e + d - a * d - d * e - c * e, (a - c) * e, "(a-c)e"),
                   {d / c, q * d / e}, {d, z0}, kDInf0);
  });
  set_parent(p7, "thm-4.6", [](const ParamSet<cplx>& p, cplx q) {
    const cplx a = p.get(P::a);
    return PV{{P::a, p.get(P::c)}, {P::b, a}, {P::c, a}, {P::d, q * p.get(P::d)}, {P::e, p.get(P::e)}};
  });

  auto& p8 = prop(out, 8, kACE, [](auto& x) {
    PR_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C D = x.div(C(1), 1.0 + c * e - a - e, "1+ce-a-e");
    const C d = e * (c - a) * D;
    const C z0 = x.div((c - a) * D, c, "c");
    x.lhs(x.phi({a, c, e}, {q * a, d}, q * z0, "q(c-a)/(c(1+ce-a-e))"));
    x.term(x.div((1.0 - c) * (1.0 - q * c) * (a - c * e),
                 (1.0 - q * a) * (1.0 + c * e + q * a * e - q * c * e - a - e) * c,
                 "(1-qa)(1+ce+qae-qce-a-e)c"),
           x.phi({q * a, q2 * c, q * e}, {q2 * a, q2 * d}, z0, "(c-a)/(c(1+ce-a-e))"));
  });
  set_parent(p8, "prop-4.7", [](const ParamSet<cplx>& p, cplx) {
    const cplx a = p.get(P::a), c = p.get(P::c), e = p.get(P::e);
    return PV{{P::a, a}, {P::c, c}, {P::d, e * (c - a) / (1.0 + c * e - a - e)}, {P::e, e}};
  });

  auto& p9 = prop(out, 9, kABCE, [](auto& x) {
    PR_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C z = x.div(q * b, a * c, "ac");
    x.lhs(x.phi({a, c, e}, {b, q * e}, z, "qb/ac"));
    const C den = x.div(C(1), (a - e) * (c - e), "(a-e)(c-e)");
    x.term(x.div((1.0 - a) * (1.0 - c) * (b - e) * (q * b - e), (1.0 - b) * (1.0 - q * b),
                 "(1-b)(1-qb)") * den,
           x.phi({q * a, q * c, e}, {q2 * b, q * e}, z, "qb/ac"));
    x.closed_qpoch((e - 1.0) * (a * b * c + a * e + c * e - a * c - b * e - a * c * e) * den,
                   {q * b / a, q * b / c}, {b, z}, "(b, qb/ac; q)_inf");
  });
  set_parent(p9, "thm-4.7", [](const ParamSet<cplx>& p, cplx q) {
    const cplx e = p.get(P::e);
    return PV{{P::a, p.get(P::a)}, {P::b, p.get(P::b)}, {P::c, p.get(P::c)}, {P::d, q * e}, {P::e, e}};
  });

  auto& p10 = prop(out, 10, kACDE, [](auto& x) {
    PR_ACDE;
    const C W = x.div(C(1), q2 * a * c * e + q * c * d + d * e - c * d * e - q * c * e - q2 * a * d,
                      "q^2ace+qcd+de-cde-qce-q^2ad");
    x.term(x.div((1.0 - q) * (1.0 - c) * (q * a - c) * (q * a - e) * (q2 * a - e) * d * d,
                 (q * a - d) * (q * a - 1.0) * (q2 * a - 1.0) * c * e, "(qa-d)(qa-1)(q^2a-1)ce") * W,
           x.phi({q * a, q * c, e}, {q2 * q * a, d}, z, "qd/ce"));
    x.closed_qpoch(x.div(q * e * (q2 * a * a * c + a * d + c * d - a * c * d - q * a * c - q * a * d),
                         q * a - d, "qa-d") * W,
                   {d / c, d / e}, {d, z}, kDInf);
  });
  set_parent(p10, "thm-4.8", b_to_qa);

  auto& p11 = prop(out, 11, kACE, [](auto& x) {
    PR_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C D = x.div(C(1), q * a + a * c - a - c, "qa+ac-a-c");
    const C d = q * a * c * (q * a - 1.0) * D;
    const C z = x.div(q2 * a * (q * a - 1.0) * D, e, "e");
    x.lhs(x.phi({a, c, e}, {q * a, d}, z, "q^2a(qa-1)/(e(qa+ac-a-c))"));
    x.term(x.div(q2 * a - e, (q2 * a - 1.0) * e, "(q^2a-1)e"),
           x.phi({q * a, q * c, e}, {q2 * q * a, d}, z, "q^2a(qa-1)/(e(qa+ac-a-c))"));
  });
  set_parent(p11, "prop-4.10", [](const ParamSet<cplx>& p, cplx q) {
    const cplx a = p.get(P::a), c = p.get(P::c);
    return PV{{P::a, a}, {P::c, c}, {P::d, q * a * c * (q * a - 1.0) / (q * a + a * c - a - c)},
              {P::e, p.get(P::e)}};
  });

  auto& p12 = prop(out, 12, kACDE, [](auto& x) {
    PR_ACDE;
    x.term(x.div((q * a - e) * (1.0 - c) * d, (q * a - 1.0) * (1.0 - d) * c * e, "(qa-1)(1-d)ce"),
           x.phi({q * a, q * c, e}, {q2 * a, q * d}, z, "qd/ce"));
    x.closed_qpoch(C(1), {d / c, q * d / e}, {d, z}, kDInf);
  });
  set_parent(p12, "thm-4.9", b_to_qa);

  auto& p13 = prop(out, 13, kABCE, [](auto& x) {
    PR_ABCE;
    x.term(x.div((a - b) * (1.0 - c) * (1.0 - e) * q * b,
                 (1.0 - b) * (1.0 - q * b) * (q * a - 1.0) * c * e, "(1-b)(1-qb)(qa-1)ce"),
           x.phi({q * a, q * c, q * e}, {q2 * a, q2 * b}, z, "qb/ce"));
    x.closed_qpoch(C(1), {q * b / c, q * b / e}, {q * b, z}, "(qb, qb/ce; q)_inf");
  });
  set_parent(p13, "thm-4.10", d_to_qa);

  auto& p14 = prop(out, 14, kACDE, [](auto& x) {
    PR_ACDE;
    const C z0 = z / q;
    x.term(x.div((q * a - c) * (1.0 - e) * d, (1.0 - q * a) * (d - q * a) * c * e, "(1-qa)(d-qa)ce"),
           x.phi({q * a, c, q * e}, {q2 * a, d}, z0, "d/ce"));
    x.closed_qpoch(x.div(q * a * e - d, (q * a - d) * e, "(qa-d)e"), {d / c, d / e}, {d, z0}, kDInf0);
  });
  set_parent(p14, "thm-4.11", [](const ParamSet<cplx>& p, cplx q) {
    const cplx a = p.get(P::a);
    return PV{{P::a, q * a}, {P::b, q * a}, {P::c, p.get(P::c) / q}, {P::d, p.get(P::d)}, {P::e, p.get(P::e)}};
  });

  auto& p15 = prop(out, 15, kACE, [](auto& x) {
    PR_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C z0 = x.div(q * a, c, "c");
    x.lhs(x.phi({a, c, e}, {q * a, q * a * e}, q * z0, "q^2a/c"));
    x.term(x.div(q * a - c, (q * a - 1.0) * c, "(qa-1)c"),
           x.phi({q * a, c, q * e}, {q2 * a, q * a * e}, z0, "qa/c"));
  });
  set_parent(p15, "prop-4.14", [](const ParamSet<cplx>& p, cplx q) {
    const cplx a = p.get(P::a), e = p.get(P::e);
    return PV{{P::a, a}, {P::c, p.get(P::c)}, {P::d, q * a * e}, {P::e, e}};
  });

  auto& p16 = prop(out, 16, kABCE, [](auto& x) {
    PR_ABCE;
    const C z0 = z / q;
    const C den = x.div(C(1), (a - c) * (a - e), "(a-c)(a-e)");
    x.term(x.div((1.0 - c) * (1.0 - e) * (a - b), 1.0 - b, "1-b") * den,
           x.phi({a, q * c, q * e}, {q * a, q * b}, z0, "b/ce"));
    x.closed_qpoch((1.0 - a) * (c * e - a) * den, {b / c, b / e}, {b, z0}, "(b, b/ce; q)_inf");
  });
  set_parent(p16, "thm-4.12", d_to_qa);

  auto& p17 = prop(out, 17, {P::b, P::c, P::e}, [](auto& x) {
    PR_SCALARS;
    const C b = x(P::b), c = x(P::c), e = x(P::e);
    const C ce = c * e;
    const C z0 = x.div(b, ce, "ce");
    x.lhs(x.phi({ce, c, e}, {q * ce, b}, q * z0, "qb/ce"));
    x.term(x.div(b - ce, (b - 1.0) * ce, "(b-1)ce"), x.phi({ce, q * c, q * e}, {q * ce, q * b}, z0, "b/ce"));
  });
  set_parent(p17, "prop-4.16", [](const ParamSet<cplx>& p, cplx) {
    const cplx c = p.get(P::c), e = p.get(P::e);
    return PV{{P::a, c * e}, {P::b, p.get(P::b)}, {P::c, c}, {P::e, e}};
  });

  auto& p18 = prop(out, 18, kABCE, [](auto& x) {
    PR_ABCE;
    const C den = x.div(C(1), (a - c) * (a - q * c) * (a - e) * (q - e) * b * b,
                        "(a-c)(a-qc)(a-e)(q-e)b^2");
    x.term((a - 1.0) * (a - q) * (a - b) * (q - b) * c * c * e * e * den,
           x.phi({a / q2, c, e / q}, {a / q, b / q}, z, "qb/ce"));
    x.closed_qpoch((a - 1.0) * (c * e - b) *
                       (a * a * b * e + q2 * a * b * c + q2 * a * c * e - q2 * b * c * e -
                        q * a * a * c * e - q * a * a * b) *
                       den,
                   {b / c, b / e}, {b, z / q}, "(b, b/ce; q)_inf");
  });
  set_parent(p18, "thm-4.13", d_to_qa);

  auto& p19 = prop(out, 19, kACE, [](auto& x) {
    PR_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C D = x.div(C(1), q2 * a * a * e + q * a * c - c * e - q2 * a * a, "q^2a^2e+qac-ce-q^2a^2");
    const C d = q * a * c * e * (q * a - 1.0) * D;
    const C z = q2 * a * (q * a - 1.0) * D;
    const std::string_view zl = "q^2a(qa-1)/(q^2a^2e+qac-ce-q^2a^2)";
    x.lhs(x.phi({a, c, e}, {q * a, d}, z, zl));
    x.term(x.div((q2 * a - c) * (q * a - e) * (q * a - 1.0),
                 (q2 * a - 1.0) * (q2 * a * a + q2 * a * a * c * e + c * e - q2 * a * a * e -
                                   q * a * c - q * a * c * e),
                 "(q^2a-1)(q^2a^2+q^2a^2ce+ce-q^2a^2e-qac-qace)"),
           x.phi({q2 * a, c, q * e}, {q2 * q * a, q * d}, z, zl));
  });
  set_parent(p19, "prop-4.18", [](const ParamSet<cplx>& p, cplx q) {
    const cplx a = p.get(P::a), c = p.get(P::c), e = p.get(P::e);
    const cplx d = q * a * c * e * (q * a - 1.0) / (q * q * a * a * e + q * a * c - c * e - q * q * a * a);
    return PV{{P::a, q * q * a}, {P::b, q * d}, {P::c, c}, {P::e, q * e}};
  });

  auto& p20 = prop(out, 20, kABCE, [](auto& x) {
    PR_ABCE;
    const C W = x.div(C(1), (a - c) * (a - e) *
                                (a * c * e + q * b * c + q * b * e - q * c * e - q * b * c * e - a * b),
                      "(a-c)(a-e)(ace+qbc+qbe-qce-qbce-ab)");
    x.term(x.div((a - b) * (a - q * b) * (1.0 - q) * (1.0 - c) * (1.0 - e) * c * e, 1.0 - b, "1-b") * W,
           x.phi({a / q, q * c, q * e}, {q * a, q * b}, z, "qb/ce"));
    x.closed_qpoch(c * e * (1.0 - a) * (a * c * e + q * a * c + q * a * e - q * c * e - q * a * c * e - a * a) * W,
                   {b / c, b / e}, {b, z}, "(b, qb/ce; q)_inf");
  });
  set_parent(p20, "thm-4.14", d_to_qa);

  auto& p21 = prop(out, 21, kACDE, [](auto& x) {
    PR_ACDE;
    const C W = x.div(C(1), a * c * e + c * d + d * e - c * d * e - c * e - a * d,
                      "ace+cd+de-cde-ce-ad");
    x.term(x.div((a - d) * (1.0 - q) * (1.0 - c) * (1.0 - e) * d, (1.0 - q * a) * (d - 1.0),
                 "(1-qa)(d-1)") * W,
           x.phi({a, q * c, q * e}, {q2 * a, q * d}, z, "qd/ce"));
    x.closed_qpoch((a - 1.0) * c * e * W, {d / c, d / e}, {d, z}, kDInf);
  });
  set_parent(p21, "thm-4.15", [](const ParamSet<cplx>& p, cplx q) {
    const cplx a = p.get(P::a);
    return PV{{P::a, q * a}, {P::b, q * a}, {P::c, p.get(P::c)}, {P::d, q * p.get(P::d)}, {P::e, p.get(P::e)}};
  });

  auto& p22 = prop(out, 22, kACDE, [](auto& x) {
    PR_ACDE;
    const C den = x.div(C(1), a - c, "a-c");
    x.term((1.0 - c) * den, x.phi({a, q * c, e}, {q * a, d}, z / q, "d/ce"));
    x.closed_qpoch((a - 1.0) * den, {d / c, d / e}, {d, z / q}, kDInf0);
  });
  set_parent(p22, "thm-4.16", [](const ParamSet<cplx>& p, cplx q) {
    const cplx a = p.get(P::a);
    return PV{{P::a, a}, {P::b, a}, {P::c, p.get(P::c)}, {P::d, p.get(P::d)}, {P::e, p.get(P::e) / q}};
  });

  auto& p23 = prop(out, 23, kABCE, [](auto& x) {
    PR_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C z0 = x.div(b, a * e, "ae");
    x.lhs(x.phi({a, c, e}, {q * c, b}, q * z0, "qb/ae"));
    x.term(x.div((1.0 - a) * (q * c - a) * (1.0 - e) * (1.0 - q * e) * b * b,
                 (1.0 - b) * (1.0 - q * b) * (1.0 - q * c) * (1.0 - q2 * c) * a * a * e * e,
                 "(1-b)(1-qb)(1-qc)(1-q^2c)(ae)^2"),
           x.phi({q * a, q2 * c, q2 * e}, {q2 * q * c, q2 * b}, z0, "b/ae"));
    x.closed_qpoch(x.div(a * e * (1.0 - q * c) - b * (1.0 + a * e - a - q * c * e),
                         e * (a - b) * (1.0 - q * c), "e(a-b)(1-qc)"),
                   {b / a, b / e}, {b, z0}, "(b, b/ae; q)_inf");
  });
  set_parent(p23, "thm-4.17", [](const ParamSet<cplx>& p, cplx q) {
    const cplx c = p.get(P::c);
    return PV{{P::a, p.get(P::a)}, {P::b, p.get(P::b)}, {P::c, c}, {P::d, q * c}, {P::e, p.get(P::e)}};
  });

  auto& p24 = prop(out, 24, kACE, [](auto& x) {
    PR_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C D = x.div(C(1), 1.0 + a * e - a - q * c * e, "1+ae-a-qce");
    const C b = a * e * (1.0 - q * c) * D;
    const C z0 = (1.0 - q * c) * D;
    x.lhs(x.phi({a, c, e}, {q * c, b}, q * z0, "q(1-qc)/(1+ae-a-qce)"));
    x.term(x.div((1.0 - e) * (1.0 - q * e) * (1.0 - q * c) * (q * c - a),
                 (1.0 - q2 * c) * (1.0 - q * c * e) *
                     (1.0 + a * e + q2 * a * c * e - q * a * e - q * c * e - a),
                 "(1-q^2c)(1-qce)(1+ae+q^2ace-qae-qce-a)"),
           x.phi({q * a, q2 * c, q2 * e}, {q2 * q * c, q2 * b}, z0, "(1-qc)/(1+ae-a-qce)"));
  });
  set_parent(p24, "prop-4.23", [](const ParamSet<cplx>& p, cplx q) {
    const cplx a = p.get(P::a), c = p.get(P::c), e = p.get(P::e);
    return PV{{P::a, a}, {P::b, a * e * (1.0 - q * c) / (1.0 + a * e - a - q * c * e)}, {P::c, c}, {P::e, e}};
  });
}

void classical_side(std::vector<Relation>& out) {
  cor(out, 1, kACDE, [](auto& x) {
    CL_ACDE;
    const C den = x.div(C(1), (c - 1.0) * (1.0 + a - d) * (2.0 + a - d), "(c-1)(1+a-d)(2+a-d)");
    x.term(x.div((1.0 + a - c) * (2.0 + a - c) * (1.0 + a - e) * (d - 1.0), 1.0 + a, "1+a") * den,
           x.F({a + one, c - one, e}, {a + two, d - one}));
    x.closed_gamma((1.0 + a * e + c * d + e - a - a * a - c - d - c * e) * den, {d, d - c - e + one},
                   {d - c, d - e});
  });

  cor(out, 2, kACDE, [](auto& x) {
    CL_ACDE;
    const C den = x.div(C(1), 1.0 + a - d, "1+a-d");
    x.term(x.div((1.0 + a - c) * (1.0 + a - e), 1.0 + a, "1+a") * den, x.F({a + one, c, e}, {a + two, d}));
    x.closed_gamma(-den, {d, d - c - e + one}, {d - c, d - e});
  });

  cor(out, 3, kACDE, [](auto& x) {
    CL_ACDE;
    x.term(x.div(c * e * (1.0 + a - c) * (1.0 + a - e), d * (1.0 + a) * (2.0 + a) * (d - a - 1.0),
                 "d(1+a)(2+a)(d-a-1)"),
           x.F({a + two, c + one, e + one}, {a + three, d + one}));
    x.closed_gamma(x.div(1.0 + a * a + 2.0 * a + c * e - d - a * d, (1.0 + a) * (1.0 + a - d),
                         "(1+a)(1+a-d)"),
                   {d, d - c - e}, {d - c, d - e});
  });

  auto& c4 = cor(out, 4, kACE, [](auto& x) {
    CL_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C d = 1.0 + a + x.div(c * e, 1.0 + a, "1+a");
    x.lhs(x.F({a, c, e}, {a + one, d}));
    x.term(x.div((1.0 + a) * (1.0 + a - c) * (1.0 + a - e), (2.0 + a) * (1.0 + 2.0 * a + a * a + c * e),
                 "(2+a)(1+2a+a^2+ce)"),
           x.F({a + two, c + one, e + one}, {a + three, d + one}));
  });
  c4.ranges = {{P::a, 5, 7}, {P::c, 0.2, 1.2}, {P::e, 0.2, 1.2}};

  cor(out, 5, kACDE, [](auto& x) {
    CL_ACDE;
    const C V = x.div(C(1), (1.0 + a - d) * (a * c + a * e + c + e - c * e - a * d - 1.0),
                      "(1+a-d)(ac+ae+c+e-ce-ad-1)");
    x.term(x.div((1.0 + a - c) * (1.0 + a - e) * (d - 1.0), 1.0 + a, "1+a") * V,
           x.F({a, c, e}, {a + two, d - one}));
    x.closed_gamma(a * (2.0 + a - d) * (c + e - d) * V, {d, d - c - e}, {d - c, d - e});
  });

  cor(out, 6, kABCE, [](auto& x) {
    CL_ABCE;
    const C den = x.div(C(1), a - c, "a-c");
    x.term(x.div((a - b) * c, b, "b") * den, x.F({a, c + one, e}, {a + one, b + one}));
    x.closed_gamma(a * den, {b, b - c - e + one}, {b - c, b - e + one});
  });

  cor(out, 7, kACDE, [](auto& x) {
    CL_ACDE;
    x.term(x.div(c * e * (1.0 + c) * (a - d), d * (1.0 + a) * (1.0 + d) * (c - a), "d(1+a)(1+d)(c-a)"),
           x.F({a + one, c + two, e + one}, {a + two, d + two}));
    x.closed_gamma(x.div(a * d - c * d - a * e, a - c, "a-c"), {d, d - c - e}, {d - c, d - e + one});
  });

  auto& c8 = cor(out, 8, kACE, [](auto& x) {
    CL_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C d = x.div(a * e, a - c, "a-c");
    x.lhs(x.F({a, c, e}, {a + one, d}));
    x.term(x.div(c * (1.0 + c) * (c + e - a), (1.0 + a) * (a + a * e - c), "(1+a)(a+ae-c)"),
           x.F({a + one, c + two, e + one}, {a + two, two + d}));
  });
  c8.ranges = {{P::a, 1, 1.4}, {P::c, 0.6, 1}, {P::e, 2, 4}};

  cor(out, 9, kABCE, [](auto& x) {
    CL_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    x.lhs(x.F({a, c, e}, {b, e + one}));
    const C den = x.div(C(1), (a - e) * (c - e), "(a-e)(c-e)");
    x.term(x.div(a * c * (b - e) * (1.0 + b - e), b * (1.0 + b), "b(1+b)") * den,
           x.F({a + one, c + one, e}, {b + two, e + one}));
    x.closed_gamma(e * (a * c + b * e - a * b - b * c) * den, {b, b - a - c + one},
                   {b - a + one, b - c + one});
  });

  cor(out, 10, kACDE, [](auto& x) {
    CL_ACDE;
    const C V = x.div(C(1), a * c + a * e + 2.0 * c + e - d - a * d - c * e, "ac+ae+2c+e-d-ad-ce");
    x.term(x.div(c * (1.0 + a - c) * (1.0 + a - e) * (2.0 + a - e), (a + 1.0) * (a + 2.0) * (1.0 + a - d),
                 "(a+1)(a+2)(1+a-d)") * V,
           x.F({a + one, c + one, e}, {a + three, d}));
    x.closed_gamma(x.div(1.0 + 2.0 * a + a * a + c - d - a * d, d - a - 1.0, "d-a-1") * V,
                   {d, d - c - e + one}, {d - c, d - e});
  });

  auto& c11 = cor(out, 11, kACE, [](auto& x) {
    CL_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C d = 1.0 + a + x.div(c, 1.0 + a, "1+a");
    x.lhs(x.F({a, c, e}, {a + one, d}));
    x.term(x.div(2.0 + a - e, 2.0 + a, "2+a"), x.F({a + one, c + one, e}, {a + three, d}));
  });
  c11.ranges = {{P::a, 3, 5}, {P::c, 0.2, 1.5}, {P::e, 0.2, 1.5}};

  cor(out, 12, kACDE, [](auto& x) {
    CL_ACDE;
    x.term(x.div((1.0 + a - e) * c, (1.0 + a) * d, "(1+a)d"), x.F({a + one, c + one, e}, {a + two, d + one}));
    x.closed_gamma(C(1), {d, d - c - e + one}, {d - c, d - e + one});
  });

  cor(out, 13, kABCE, [](auto& x) {
    CL_ABCE;
    x.term(x.div((a - b) * c * e, (1.0 + a) * (1.0 + b) * b, "(1+a)(1+b)b"),
           x.F({a + one, c + one, e + one}, {a + two, b + two}));
    x.closed_gamma(C(1), {b + one, b - c - e + one}, {b - c + one, b - e + one});
  });

  cor(out, 14, kACDE, [](auto& x) {
    CL_ACDE;
    const C den = x.div(C(1), 1.0 + a - d, "1+a-d");
    x.term(x.div(e * (c - a - 1.0), 1.0 + a, "1+a") * den, x.F({a + one, c, e + one}, {a + two, d}));
    x.closed_gamma((1.0 + a + e - d) * den, {d, d - c - e}, {d - c, d - e});
  });

  auto& c15 = cor(out, 15, kACE, [](auto& x) {
    CL_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    x.lhs(x.F({a, c, e}, {a + one, a + e + one}));
    x.term(x.div(1.0 + a - c, 1.0 + a, "1+a"), x.F({a + one, c, e + one}, {a + two, a + e + one}));
  });
  c15.ranges = {{P::a, 3, 5}, {P::c, 0.2, 2.5}, {P::e, 0.2, 2.5}};

  cor(out, 16, kABCE, [](auto& x) {
    CL_ABCE;
    const C den = x.div(C(1), (a - c) * (a - e), "(a-c)(a-e)");
    x.term(x.div(c * e * (b - a), b, "b") * den, x.F({a, c + one, e + one}, {a + one, b + one}));
    x.closed_gamma(a * (a - c - e) * den, {b, b - c - e}, {b - c, b - e});
  });

  cor(out, 17, {P::b, P::c, P::e}, [](auto& x) {
    CL_SCALARS;
    const C b = x(P::b), c = x(P::c), e = x(P::e);
    x.lhs(x.F({c + e, c, e}, {c + e + one, b}));
    x.term(x.div(b - c - e, b, "b"), x.F({c + e, c + one, e + one}, {c + e + one, b + one}));
  });

  auto& c18 = cor(out, 18, kABCE, [](auto& x) {
    CL_ABCE;
    const C den = x.div(C(1), (a - c) * (a - c - 1.0) * (a - e) * (e - 1.0), "(a-c)(a-c-1)(a-e)(e-1)");
    x.term(a * (a - 1.0) * (a - b) * (b - 1.0) * den, x.F({a - two, c, e - one}, {a - one, b - one}));
    x.closed_gamma(a * (c + e - b) * (a * a + c * e + e + b - c - a * e - a * b - 1.0) * den,
                   {b, b - c - e}, {b - c, b - e});
  });
  c18.ranges = {{P::a, 1.3, 3.5}, {P::b, 7, 14}, {P::c, 0.2, 2.5}, {P::e, 0.2, 2.5}};

  auto& c19 = cor(out, 19, kACE, [](auto& x) {
    CL_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C d = 1.0 + a - e + x.div(c * e, a + 1.0, "a+1");
    x.lhs(x.F({a, c, e}, {a + one, d}));
    x.term(x.div((1.0 + a) * (2.0 + a - c) * (1.0 + a - e),
                 (2.0 + a) * (1.0 + 2.0 * a + a * a + c * e - a * e - e), "(2+a)(1+2a+a^2+ce-ae-e)"),
           x.F({a + two, c, e + one}, {a + three, d + one}));
  });
  c19.ranges = {{P::a, 5, 8}, {P::c, 0.2, 1.5}, {P::e, 0.2, 1.5}};

  cor(out, 20, kABCE, [](auto& x) {
    CL_ABCE;
    const C V = x.div(C(1), (a - c) * (a - e) * (c * e + (a - 1.0) * (b - c - e)),
                      "(a-c)(a-e)(ce+(a-1)(b-c-e))");
    x.term(x.div(c * e * (a - b) * (1.0 + b - a), b, "b") * V,
           x.F({a - one, c + one, e + one}, {a + one, b + one}));
    x.closed_gamma(a * (a * a + c * e + c + e - a - a * c - a * e) * V, {b, b - c - e + one},
                   {b - c, b - e});
  });

  cor(out, 21, kACDE, [](auto& x) {
    CL_ACDE;
    const C V = x.div(C(1), a * d + c * e - a * c - a * e, "ad+ce-ac-ae");
    x.term(x.div(c * e * (d - a), d * (1.0 + a), "d(1+a)") * V, x.F({a, c + one, e + one}, {a + two, d + one}));
    x.closed_gamma(a * V, {d, d - c - e + one}, {d - c, d - e});
  });

  cor(out, 22, kACDE, [](auto& x) {
    CL_ACDE;
    x.term(x.div(c, c - a, "c-a"), x.F({a, c + one, e}, {a + one, d}));
    x.closed_gamma(x.div(a, a - c, "a-c"), {d, d - c - e}, {d - c, d - e});
  });

  cor(out, 23, kABCE, [](auto& x) {
    CL_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    x.lhs(x.F({a, c, e}, {c + one, b}));
    x.term(x.div(a * e * (1.0 + e) * (a - c - 1.0), b * (1.0 + b) * (1.0 + c) * (2.0 + c),
                 "b(1+b)(1+c)(2+c)"),
           x.F({a + one, c + two, e + two}, {c + three, b + two}));
    x.closed_gamma(x.div((a - b) * (1.0 + c) + a * e, (a - b) * (1.0 + c), "(a-b)(1+c)"),
                   {b, b - a - e}, {b - a, b - e});
  });

  // The Gamma term of the parent vanishes at b = a + ae/(c+1).
  auto& c24 = cor(out, 24, kACE, [](auto& x) {
    CL_SCALARS;
    const C a = x(P::a), c = x(P::c), e = x(P::e);
    const C b = a + x.div(a * e, c + 1.0, "c+1");
    x.lhs(x.F({a, c, e}, {c + one, b}));
    x.term(x.div((a - c - 1.0) * (1.0 + c) * (1.0 + e) * e,
                 (2.0 + c) * (1.0 + c + e) * (1.0 + c + a + a * c + a * e), "(2+c)(1+c+e)(1+c+a+ac+ae)"),
           x.F({a + one, c + two, e + two}, {c + three, two + b}));
  });
  c24.ranges = {{P::a, 4, 6}, {P::c, 0.2, 0.8}, {P::e, 2.5, 4}};
}

#undef PR_SCALARS
#undef PR_ACDE
#undef PR_ABCE
#undef CL_SCALARS
#undef CL_ACDE
#undef CL_ABCE

}  // namespace

void add_propositions(std::vector<Relation>& out) {
  q_side(out);
  classical_side(out);
}

}  // namespace qcontig::catalog
