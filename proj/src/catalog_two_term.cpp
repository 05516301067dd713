#include "catalog_util.hpp"

namespace qcontig::catalog {

namespace {

#define Q_SCALARS                                                              \
  using C = typename std::remove_reference_t<decltype(x)>::scalar_type;        \
  const C q = x.q();                                                           \
  (void)q

const std::vector<Param> kABCE = {P::a, P::b, P::c, P::e};
const std::vector<Param> kGreek = {P::alpha, P::beta, P::gamma};

void q_side(std::vector<Relation>& out) {
  add_q(out, "thm-3.1", Family::two_term, kABCE, "Theorem 3.1", [](auto& x) {
    Q_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C D0 = q * a * b + c * e - b * c - a * c * e;
    const C d = x.div(q * a * b * e * (q - c), D0, "qab+ce-bc-ace");
    const C z = x.div(q * b * b * (q - c), c * D0, "c(qab+ce-bc-ace)");
    const std::string_view zl = "qb^2(q-c)/(c(qab+ce-bc-ace))";
    x.lhs(x.phi({a, c, e}, {b, d}, z, zl));
    const C k = x.div((1.0 - x.div(q * b, c, "c")) *
                          (q * a * b + a * b * c * e + c * e - b * c - q * a * b * e - a * c * e),
                      (1.0 - b) * (q * a * b + b * c * e + c * e - b * c - q * b * e - a * c * e),
                      "(1-b)(qab+bce+ce-bc-qbe-ace)");
    x.term(k, x.phi({q * a, c / q, e}, {q * b, d / q}, z, zl));
  });

  add_q(out, "thm-3.2", Family::two_term, kABCE, "Theorem 3.2", [](auto& x) {
    Q_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C q2 = q * q;
    const C D0 = q2 * a * b + q * c * e + c * e - q * a * c * e - q * b * c - q * b * e;
    const C d = x.div(q2 * a * c * e * (1.0 - b), D0, "q^2ab+qce+ce-qace-qbc-qbe");
    const C z = x.div(q2 * b * (1.0 - b), D0, "q^2ab+qce+ce-qace-qbc-qbe");
    const std::string_view zl = "q^2b(1-b)/(q^2ab+qce+ce-qace-qbc-qbe)";
    x.lhs(x.phi({a, c, e}, {b, d}, z, zl));
    const C k = x.div((1.0 - q * a) * (c - q * b) * (e - q * b),
                      (1.0 - q * b) *
                          (q2 * a * b + q * b * c * e + c * e - q * a * c * e - q * b * c - q * b * e),
                      "(1-qb)(q^2ab+qbce+ce-qace-qbc-qbe)");
    x.term(k, x.phi({q2 * a, c, e}, {q2 * b, d}, z, zl));
  });

  add_q(out, "thm-3.3", Family::two_term, kABCE, "Theorem 3.3", [](auto& x) {
    Q_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C D0 = q * a * b + c * e - b * c - b * e;
    const C d = x.div(c * e * (q * a - b), D0, "qab+ce-bc-be");
    const C z = x.div(b * (q * a - b), a * D0, "a(qab+ce-bc-be)");
    const std::string_view zl = "b(qa-b)/(a(qab+ce-bc-be))";
    x.lhs(x.phi({a, c, e}, {b, d}, z, zl));
    const C k = x.div((1.0 - q * a) * (b - c) * (b - e),
                      (1.0 - b) * (q * a * b + b * c * e + c * e - b * c - b * e - q * a * c * e),
                      "(1-b)(qab+bce+ce-bc-be-qace)");
    x.term(k, x.phi({q * q * a, c, e}, {q * b, q * d}, z, zl));
  });

  add_q(out, "thm-3.4", Family::two_term, kABCE, "Theorem 3.4", [](auto& x) {
    Q_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C D0 = a + c - a * c - b;
    const C d = x.div(q * a * c * (1.0 - b), D0, "a+c-ac-b");
    const C z = x.div(q * b * (1.0 - b), D0 * e, "(a+c-ac-b)e");
    const std::string_view zl = "qb(1-b)/((a+c-ac-b)e)";
    x.lhs(x.phi({a, c, e}, {b, d}, z, zl));
    const C k = x.div(q * b - e, q * b * e - e, "qbe-e");
    x.term(k, x.phi({q * a, q * c, e}, {q * q * b, d}, z, zl));
  });

  add_q(out, "thm-3.5", Family::two_term, {P::a, P::c, P::d, P::e}, "Theorem 3.5", [](auto& x) {
    Q_SCALARS;
    const C a = x(P::a), c = x(P::c), d = x(P::d), e = x(P::e);
    const C D0 = q * q * a + c * e - q * c - q * e;
    const C b = x.div(q * c * e * (a - 1.0), D0, "q^2a+ce-qc-qe");
    const C z = x.div(q * d * (a - 1.0), a * D0, "a(q^2a+ce-qc-qe)");
    const std::string_view zl = "qd(a-1)/(a(q^2a+ce-qc-qe))";
    x.lhs(x.phi({a, c, e}, {d, b}, z, zl));
    const C k = x.div(1.0 - d / q, 1.0 - x.div(d, q * a, "qa"), "1-d/qa");
    x.term(k, x.phi({q * a, c / q, e / q}, {d / q, b}, z, zl));
  });

  add_q(out, "thm-3.6", Family::two_term, kABCE, "Theorem 3.6", [](auto& x) {
    Q_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C D0 = q * a * b * e + b * c - q * a * b - c * e;
    const C d = x.div(q * a * c * e * (b - 1.0), D0, "qabe+bc-qab-ce");
    const C z = x.div(q * b * (b - 1.0), D0, "qabe+bc-qab-ce");
    const std::string_view zl = "qb(b-1)/(qabe+bc-qab-ce)";
    x.lhs(x.phi({a, c, e}, {b, d}, z, zl));
    const C k = x.div((1.0 - q * a) * (b - e) * (c - q * b),
                      (1.0 - q * b) * (q * a * b * e + q * a * c * e + b * c - q * a * b * c * e -
                                       q * a * b - c * e),
                      "(1-qb)(qabe+qace+bc-qabce-qab-ce)");
    x.term(k, x.phi({q * q * a, c, q * e}, {q * q * b, q * d}, z, zl));
  });

  add_q(out, "thm-3.7", Family::two_term, kABCE, "Theorem 3.7", [](auto& x) {
    Q_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C q2 = q * q, q3 = q2 * q;
    const C D0 = q * a * b + q * a * c * e - q2 * b * c - a * b * e;
    const C d = x.div(q3 * c * e * (a - b), D0, "qab+qace-q^2bc-abe");
    const C z = x.div(q3 * b * (a - b), a * D0, "a(qab+qace-q^2bc-abe)");
    const std::string_view zl = "q^3b(a-b)/(a(qab+qace-q^2bc-abe))";
    x.lhs(x.phi({a, c, e}, {b, d}, z, zl));
    const C k = x.div(
        (a - q * c) * (q - b) *
            (q * a * b + q * a * c * e + q2 * b * c * e - q2 * a * c * e - q2 * b * c - a * b * e),
        (q - a) * (b - q * c) *
            (q * a * b + q * a * c * e + q2 * b * e - q2 * a * e - q2 * b * c - a * b * e),
        "(q-a)(b-qc)(qab+qace+q^2be-q^2ae-q^2bc-abe)");
    x.term(k, x.phi({a / q2, c, e / q}, {b / q, d / q2}, z, zl));
  });

  add_q(out, "thm-3.8", Family::two_term, kABCE, "Theorem 3.8", [](auto& x) {
    Q_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C q2 = q * q;
    const C D0 = q * a * c * e + q * b * c + q * b * e - q * b * c * e - q2 * b * c * e - a * b;
    const C d = x.div(q * a * c * e * (1.0 - b), D0, "qace+qbc+qbe-qbce-q^2bce-ab");
    const C z = x.div(q * b * (1.0 - b), D0, "qace+qbc+qbe-qbce-q^2bce-ab");
    const std::string_view zl = "qb(1-b)/(qace+qbc+qbe-qbce-q^2bce-ab)";
    x.lhs(x.phi({a, c, e}, {b, d}, z, zl));
    const C k = x.div(
        (q * b - a) * (1.0 - q * c) * (1.0 - q * e) *
            (q * a * c * e + q * b * c + q * b * e - q * b * c * e - q2 * c * e - a * b),
        (1.0 - q * b) * (q * a * c * e + q * c + q * e - q * c * e - q2 * c * e - a) *
            (q2 * a * b * c * e + q * a * c * e + q * b * c + q * b * e - q2 * a * c * e -
             q2 * b * c * e - q * b * c * e - a * b),
        "(1-qb)(qace+qc+qe-qce-q^2ce-a)(q^2abce+qace+qbc+qbe-q^2ace-q^2bce-qbce-ab)");
    x.term(k, x.phi({a, q2 * c, q2 * e}, {q2 * b, q2 * d}, z, zl));
  });

  add_q(out, "thm-3.9", Family::two_term, kABCE, "Theorem 3.9", [](auto& x) {
    Q_SCALARS;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C D0 = a * b + b * c - a * c - b;
    const C d = x.div(a * c * (b - 1.0), D0, "ab+bc-ac-b");
    const C z = x.div(b * (b - 1.0), D0 * e, "(ab+bc-ac-b)e");
    const std::string_view zl = "b(b-1)/((ab+bc-ac-b)e)";
    x.lhs(x.phi({a, c, e}, {b, d}, z, zl));
    const C k = x.div((a - b) * (b - c) * (1.0 - q * e),
                      e * (1.0 - q * b) * (a * b + b * c + q * a * c - q * a * b * c - a * c - b),
                      "e(1-qb)(ab+bc+qac-qabc-ac-b)");
    x.term(k, x.phi({q * a, q * c, q * q * e}, {q * q * b, q * q * d}, z, zl));
  });

  auto& p31 = add_q(out, "prop-3.1", Family::proposition, kGreek, "Proposition 3.1", [](auto& x) {
    Q_SCALARS;
    const C al = x(P::alpha), be = x(P::beta), ga = x(P::gamma);
    const C q2 = q * q;
    const C D0 = q2 * al * al + be * ga - q * al * be - al * be * ga;
    const C z = x.div(q2 * q * al * al * (q - be), be * D0, "beta(q^2alpha^2+beta gamma-q alpha beta-alpha beta gamma)");
    const C d = x.div(q2 * al * al * ga * (q - be), D0, "q^2alpha^2+beta gamma-q alpha beta-alpha beta gamma");
    const std::string_view zl = "q^3alpha^2(q-beta)/(beta(q^2alpha^2+beta gamma-q alpha beta-alpha beta gamma))";
    x.lhs(x.phi({al, be, ga}, {q * al, d}, z, zl));
    const C k = x.div(
        (1.0 - x.div(q2 * al, be, "beta")) *
            (q2 * al * al + q * al * al * be * ga + be * ga - q2 * al * al * ga - q * al * be -
             al * be * ga),
        (1.0 - q * al) * (q2 * al * al + q * al * be * ga + be * ga - q2 * al * ga - q * al * be -
                          al * be * ga),
        "(1-q alpha)(q^2alpha^2+q alpha beta gamma+beta gamma-q^2alpha gamma-q alpha beta-alpha beta gamma)");
    x.term(k, x.phi({q * al, be / q, ga}, {q2 * al, d / q}, z, zl));
  });
  set_parent(p31, "thm-3.1", [](const ParamSet<cplx>& p, cplx q) {
    return std::vector<std::pair<Param, cplx>>{{P::a, p.get(P::alpha)},
                                               {P::c, p.get(P::beta)},
                                               {P::e, p.get(P::gamma)},
                                               {P::b, q * p.get(P::alpha)}};
  });

  auto& p32 = add_q(out, "prop-3.2", Family::proposition, kGreek, "Proposition 3.2", [](auto& x) {
    Q_SCALARS;
    const C al = x(P::alpha), be = x(P::beta), ga = x(P::gamma);
    const C q2 = q * q, q3 = q2 * q;
    const C D0 = q3 * al * al + q * be * ga + be * ga - q * al * be * ga - q2 * al * be - q2 * al * ga;
    const std::string_view dl = "q^3alpha^2+q beta gamma+beta gamma-q alpha beta gamma-q^2alpha beta-q^2alpha gamma";
    const C z = x.div(q3 * al * (1.0 - q * al), D0, dl);
    const C d = x.div(q2 * al * be * ga * (1.0 - q * al), D0, dl);
    const std::string_view zl = "q^3alpha(1-q alpha)/(q^3alpha^2+q beta gamma+beta gamma-q alpha beta gamma-q^2alpha beta-q^2alpha gamma)";
    x.lhs(x.phi({al, be, ga}, {q * al, d}, z, zl));
    const C k = x.div((1.0 - q * al) * (be - q2 * al) * (ga - q2 * al),
                      (1.0 - q2 * al) * (q3 * al * al + q2 * al * be * ga + be * ga -
                                         q * al * be * ga - q2 * al * be - q2 * al * ga),
                      "(1-q^2alpha)(q^3alpha^2+q^2alpha beta gamma+beta gamma-q alpha beta gamma-q^2alpha beta-q^2alpha gamma)");
    x.term(k, x.phi({q2 * al, be, ga}, {q3 * al, d}, z, zl));
  });
  set_parent(p32, "thm-3.2", [](const ParamSet<cplx>& p, cplx q) {
    return std::vector<std::pair<Param, cplx>>{{P::a, p.get(P::alpha)},
                                               {P::c, p.get(P::beta)},
                                               {P::e, p.get(P::gamma)},
                                               {P::b, q * p.get(P::alpha)}};
  });

  auto& p33 = add_q(out, "prop-3.3", Family::proposition, kGreek, "Proposition 3.3", [](auto& x) {
    Q_SCALARS;
    const C al = x(P::alpha), be = x(P::beta), ga = x(P::gamma);
    const C bg = x.div(be * ga, al, "alpha");
    const C B0 = x.div(be + ga - al - be * ga, 1.0 - al, "1-alpha");
    const C z = x.div(q * (be + ga - al - be * ga), (1.0 - al) * be * ga, "(1-alpha)beta gamma");
    const std::string_view zl = "q(beta+gamma-alpha-beta gamma)/((1-alpha)beta gamma)";
    x.lhs(x.phi({bg, be, ga}, {q * bg, B0}, z, zl));
    const C k = x.div(al * (q * al + q * be * ga - be * ga - q * be - q * ga) + be * ga,
                      be * ga * (1.0 + q * al + q * be * ga - al - q * be - q * ga),
                      "beta gamma(1+q alpha+q beta gamma-alpha-q beta-q gamma)");
    x.term(k, x.phi({bg, q * be, q * ga}, {q * bg, q * q * B0}, z, zl));
  });
  set_parent(p33, "thm-3.4", [](const ParamSet<cplx>& p, cplx) {
    const cplx al = p.get(P::alpha), be = p.get(P::beta), ga = p.get(P::gamma);
    return std::vector<std::pair<Param, cplx>>{{P::a, be},
                                               {P::c, ga},
                                               {P::e, be * ga / al},
                                               {P::b, (be + ga - al - be * ga) / (1.0 - al)}};
  });
}

const std::vector<SampleRange> kWide = {{P::a, 0.2, 2.5}, {P::b, 7, 14}, {P::c, 0.2, 2.5},
                                        {P::d, 7, 14},    {P::e, 0.2, 2.5}};

void classical_side(std::vector<Relation>& out) {
  auto& c31 = add_classical(out, "thm-3.1", kABCE, "Theorem 3.1, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C D = e - x.div(a * (b - e), 1.0 - c, "1-c");
    x.lhs(x.F({a, c, e}, {b, 1.0 + D}));
    const C k = x.div((1.0 + b - c) * (a * b + c * e - a * e - e),
                      b * (a + a * b + c * e - a * c - a * e - e), "b(a+ab+ce-ac-ae-e)");
    x.term(k, x.F({a + 1.0, c - 1.0, e}, {b + 1.0, D}));
  });
  c31.ranges = {{P::a, 0.2, 2.5}, {P::b, 7, 14}, {P::c, 1.2, 2.5}, {P::e, 0.2, 2.5}};

  auto& cp31 = add_classical(out, "prop-3.1", kGreek, "Proposition 3.1, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C al = x(P::alpha), be = x(P::beta), ga = x(P::gamma);
    const C D = ga + x.div(al * (al - ga + 1.0), be - 1.0, "beta-1");
    x.lhs(x.F({al, be, ga}, {al + 1.0, D + 1.0}));
    const C k = x.div((2.0 + al - be) * (al + al * al + be * ga - al * ga - ga),
                      (1.0 + al) * (2.0 * al + al * al + be * ga - al * be - al * ga - ga),
                      "(1+alpha)(2alpha+alpha^2+beta gamma-alpha beta-alpha gamma-gamma)");
    x.term(k, x.F({al + 1.0, be - 1.0, ga}, {al + 2.0, D}));
  });
  cp31.ranges = {{P::alpha, 2, 4}, {P::beta, 1.1, 1.6}, {P::gamma, 0.2, 2.5}};

  auto& c32 = add_classical(out, "thm-3.2", kABCE, "Theorem 3.2, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C D = 2.0 + 2.0 * a + x.div((a + 1.0) * (1.0 - c - e) + c * e, b, "b");
    x.lhs(x.F({a, c, e}, {b, D}));
    const C k = x.div((1.0 + a) * (1.0 + b - c) * (1.0 + b - e),
                      (1.0 + b) * (1.0 + a + b + a * b + c * e - c - e - a * c - a * e),
                      "(1+b)(1+a+b+ab+ce-c-e-ac-ae)");
    x.term(k, x.F({a + 2.0, c, e}, {b + 2.0, D}));
  });
  c32.ranges = kWide;

  auto& cp32 = add_classical(out, "prop-3.2", kGreek, "Proposition 3.2, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C al = x(P::alpha), be = x(P::beta), ga = x(P::gamma);
    const C D = 3.0 + 2.0 * al - be - ga + x.div(be * ga, al + 1.0, "alpha+1");
    x.lhs(x.F({al, be, ga}, {al + 1.0, D}));
    const C k = x.div((1.0 + al) * (al - be + 2.0) * (al - ga + 2.0),
                      (2.0 + al) * (2.0 + 3.0 * al + al * al + be * ga - al * be - al * ga - be - ga),
                      "(2+alpha)(2+3alpha+alpha^2+beta gamma-alpha beta-alpha gamma-beta-gamma)");
    x.term(k, x.F({al + 2.0, be, ga}, {al + 3.0, D}));
  });
  cp32.ranges = {{P::alpha, 1, 3}, {P::beta, 0.2, 1.5}, {P::gamma, 0.2, 1.5}};

  auto& c33 = add_classical(out, "thm-3.3", kABCE, "Theorem 3.3, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C D = 1.0 + a - x.div((1.0 + a - c) * (1.0 + a - e), 1.0 + a - b, "1+a-b");
    x.lhs(x.F({a, c, e}, {b, D}));
    const C k = x.div((1.0 + a) * (b - c) * (b - e),
                      b * (a * b + c * e + b - c - e - a * c - a * e), "b(ab+ce+b-c-e-ac-ae)");
    x.term(k, x.F({a + 2.0, c, e}, {b + 1.0, D + 1.0}));
  });
  c33.ranges = kWide;

  auto& c34 = add_classical(out, "thm-3.4", kABCE, "Theorem 3.4, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C D = 1.0 + a + c - x.div(a * c, b, "b");
    x.lhs(x.F({a, c, e}, {b, D}));
    const C k = x.div(1.0 + b - e, 1.0 + b, "1+b");
    x.term(k, x.F({a + 1.0, c + 1.0, e}, {b + 2.0, D}));
  });
  c34.ranges = kWide;

  auto& cp33 = add_classical(out, "prop-3.3", kGreek, "Proposition 3.3, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C al = x(P::alpha), be = x(P::beta), ga = x(P::gamma);
    const C s = be + ga - al;
    const C bg = x.div(be * ga, al, "alpha");
    x.lhs(x.F({s, be, ga}, {s + 1.0, bg}));
    const C k = x.div(al + al * al + be * ga - al * be - al * ga, al + be * ga, "alpha+beta gamma");
    x.term(k, x.F({s, be + 1.0, ga + 1.0}, {s + 1.0, bg + 2.0}));
  });
  cp33.ranges = {{P::alpha, 0.2, 0.4}, {P::beta, 2, 3}, {P::gamma, 2, 3}};

  auto& c35 = add_classical(out, "thm-3.5", {P::a, P::c, P::d, P::e}, "Theorem 3.5, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C a = x(P::a), c = x(P::c), d = x(P::d), e = x(P::e);
    const C B = c + e - 1.0 - x.div((1.0 - c) * (1.0 - e), a, "a");
    x.lhs(x.F({a, c, e}, {d, B}));
    const C k = x.div(1.0 - d, 1.0 + a - d, "1+a-d");
    x.term(k, x.F({a + 1.0, c - 1.0, e - 1.0}, {d - 1.0, B}));
  });
  c35.ranges = {{P::a, 0.5, 2.5}, {P::c, 1.2, 2.5}, {P::d, 7, 14}, {P::e, 1.2, 2.5}};

  auto& c36 = add_classical(out, "thm-3.6", kABCE, "Theorem 3.6, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C D = 1.0 + a + x.div(e * (c - a - 1.0), b, "b");
    x.lhs(x.F({a, c, e}, {b, D}));
    const C k = x.div((1.0 + a) * (b - e) * (1.0 + b - c),
                      (1.0 + b) * (a * b + c * e + b - a * e - e), "(1+b)(ab+ce+b-ae-e)");
    x.term(k, x.F({a + 2.0, c, e + 1.0}, {b + 2.0, D + 1.0}));
  });
  c36.ranges = kWide;

  auto& c37 = add_classical(out, "thm-3.7", kABCE, "Theorem 3.7, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C T = x.div((1.0 - e) * (1.0 + c - a), a - b, "a-b");
    x.lhs(x.F({a, c, e}, {b, 2.0 + T}));
    const C k = x.div((1.0 - b) * (1.0 + c - a) * (1.0 + c + a * e - c * e - b - e),
                      (1.0 - a) * (1.0 + c - b) * (1.0 + c + a * e + b * c - a * c - c * e - b - e),
                      "(1-a)(1+c-b)(1+c+ae+bc-ac-ce-b-e)");
    x.term(k, x.F({a - 2.0, c, e - 1.0}, {b - 1.0, T}));
  });
  c37.ranges = kWide;

  auto& c38 = add_classical(out, "thm-3.8", kABCE, "Theorem 3.8, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C W = (a - 1.0) * (c + e + 1.0) - c * e;
    const C T = x.div(W, b, "b");
    x.lhs(x.F({a, c, e}, {b, T}));
    const C k = x.div((1.0 + c) * (1.0 + e) * (a - b - 1.0) * ((c + e - b + 1.0) * (a - 1.0) - c * e),
                      (b + 1.0) * W * (b - c * e + (a - 1.0) * (c + e + 1.0)),
                      "(b+1){(a-1)(c+e+1)-ce}{b-ce+(a-1)(c+e+1)}");
    x.term(k, x.F({a, c + 2.0, e + 2.0}, {b + 2.0, 2.0 + T}));
  });
  c38.ranges = kWide;

  auto& c39 = add_classical(out, "thm-3.9", kABCE, "Theorem 3.9, classical limit", [](auto& x) {
    using C = typename std::remove_reference_t<decltype(x)>::scalar_type;
    const C a = x(P::a), b = x(P::b), c = x(P::c), e = x(P::e);
    const C T = x.div(a * c, b, "b");
    x.lhs(x.F({a, c, e}, {b, T}));
    const C k = x.div((a - b) * (1.0 + e) * (c - b), (1.0 + b) * (b + a * c), "(1+b)(b+ac)");
    x.term(k, x.F({a + 1.0, c + 1.0, e + 2.0}, {b + 2.0, 2.0 + T}));
  });
  c39.ranges = kWide;
}

}  // namespace

void add_two_term(std::vector<Relation>& out) {
  q_side(out);
  classical_side(out);
}

}  // namespace qcontig::catalog
