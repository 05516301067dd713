#include "catalog_util.hpp"

namespace qcontig::catalog {

namespace {

#define TT_Q                                                                   \
  using C = typename std::remove_reference_t<decltype(x)>::scalar_type;        \
  const C q = x.q(), q2 = q * q, q3 = q2 * q;                                  \
  const C a = x(P::a), b = x(P::b), c = x(P::c), d = x(P::d), e = x(P::e);     \
  const C z = x.div(b * d, a * c * e, "ace");                                  \
  const C zq = z / q;                                                          \
  (void)q3;                                                                    \
  x.lhs(x.phi({a, c, e}, {b, d}, z, "bd/ace"))

#define TT_F                                                                   \
  using C = typename std::remove_reference_t<decltype(x)>::scalar_type;        \
  const C a = x(P::a), b = x(P::b), c = x(P::c), d = x(P::d), e = x(P::e);     \
  const C one(1), two(2);                                                      \
  (void)two;                                                                   \
  x.lhs(x.F({a, c, e}, {b, d}))

constexpr std::string_view Z1 = "bd/ace";
constexpr std::string_view Zq = "bd/qace";

const std::vector<Param> kFive = {P::a, P::b, P::c, P::d, P::e};

Relation& thm(std::vector<Relation>& out, int n, auto body) {
  const std::string s = std::to_string(n);
  return add_q(out, "thm-4." + s, Family::three_term, kFive, "Theorem 4." + s, body);
}

Relation& cor(std::vector<Relation>& out, int n, auto body) {
  const std::string s = std::to_string(n);
  return add_classical(out, "thm-4." + s, kFive, "Theorem 4." + s + ", classical limit", body);
}

void q_side(std::vector<Relation>& out) {
  thm(out, 1, [](auto& x) {
    TT_Q;
    const C W = x.div(C(1), q2 * a * b * e + a * c * d * e + b * b * d - b * d * e - q * a * b * d -
                                q * a * b * c * e,
                      "q^2abe+acde+b^2d-bde-qabd-qabce");
    const C Y = x.div((b - c) * (b - e) * (q - d) * (q * b - c) * a * d,
                      (b - 1.0) * (q * a - d) * c, "(b-1)(qa-d)c") * W;
    const C Z = x.div((q * a * c * e - b * d) * (q2 * a * b * e + a * c * d * e + b * c * d -
                                                 c * d * e - q * a * b * d - q * a * b * c * e),
                      (q * a - d) * c * e, "(qa-d)ce") * W;
    x.term(Y, x.phi({q * a, c / q, e}, {q * b, d / q}, z, Z1));
    x.term(Z, x.phi({q * a, c, e}, {b, d}, zq, Zq));
  });

  thm(out, 2, [](auto& x) {
    TT_Q;
    const C Y = x.div((c - d) * q * a, (q * a - d) * c, "(qa-d)c");
    const C Z = x.div((b - e) * (q * a - c) * d, (b - 1.0) * (q * a - d) * c * e, "(b-1)(qa-d)ce");
    x.term(Y, x.phi({q * a, c / q, e}, {b, d}, z, Z1));
    x.term(Z, x.phi({q * a, c, e}, {q * b, d}, z, Z1));
  });

  auto& t3 = thm(out, 3, [](auto& x) {
    TT_Q;
    const C W = x.div(C(1), q * a * b * c * e + b * d + q * a * d * e - q * a * b * d - b * d * e -
                                q * a * c * e,
                      "qabce+bd+qade-qabd-bde-qace");
    const C Y = x.div((c - d) *
                          (q * a * b * c * e + b * d + c * d * e - b * c * d - b * d * e -
                           q * a * c * e) *
                          q * a,
                      (q * a - d) * c, "(qa-d)c") * W;
    const C Z = x.div((1.0 - c) * (1.0 - e) * (1.0 - q * a) * (c - q * a) * (b - e) *
                          (q * a * c * e - b * d) * b * d * d,
                      (1.0 - b) * (1.0 - d) * (1.0 - q * b) * (q * a - d) * q * a * c * c * e * e,
                      "(1-b)(1-d)(1-qb)(qa-d)qac^2e^2") * W;
    x.term(Y, x.phi({q * a, c / q, e}, {b, d}, z, Z1));
    x.term(Z, x.phi({q2 * a, q * c, q * e}, {q2 * b, q * d}, zq, Zq));
  });
  t3.notes = "classical limit uses the corrected sign of the earlier published form";

  thm(out, 4, [](auto& x) {
    TT_Q;
    const C W = x.div(C(1), q * a * b * c * e + b * c * d + b * d * e - b * b * d - a * c * d * e -
                                q * b * c * e,
                      "qabce+bcd+bde-b^2d-acde-qbce");
    const C Y = x.div((a - b) * (b - c) * (b - e) * (d - q) * d, (1.0 - b) * (q * a - d),
                      "(1-b)(qa-d)") * W;
    const C Z = x.div((1.0 - a) * (d - q * b) * (q * a * c * e - b * d), q * a - d, "qa-d") * W;
    x.term(Y, x.phi({a, c, e}, {q * b, d / q}, z, Z1));
    x.term(Z, x.phi({q * a, c, e}, {b, d}, zq, Zq));
  });

  thm(out, 5, [](auto& x) {
    TT_Q;
    const C den = x.div(C(1), (1.0 - b) * (q * a - d), "(1-b)(qa-d)");
    x.term((a - b) * (q - d) * den, x.phi({a, c, e}, {q * b, d / q}, z, Z1));
    x.term((1.0 - a) * (q * b - d) * den, x.phi({q * a, c, e}, {q * b, d}, z, Z1));
  });

  thm(out, 6, [](auto& x) {
    TT_Q;
    const C W = x.div(C(1), q * b * c * e + a * c * d * e + b * d - b * c * d - b * d * e -
                                q * a * c * e,
                      "qbce+acde+bd-bcd-bde-qace");
    const C Y = x.div((a - b) * (q - d) *
                          (q * a * b * c * e + c * d * e + b * d - b * c * d - b * d * e -
                           q * a * c * e),
                      (1.0 - b) * (q * a - d), "(1-b)(qa-d)") * W;
    const C Z = x.div((1.0 - a) * (1.0 - c) * (1.0 - e) * (1.0 - q * a) * (q * b - d) *
                          (q * a * c * e - b * d) * b * d,
                      (1.0 - b) * (1.0 - d) * (1.0 - q * b) * (q * a - d) * q * a * c * e,
                      "(1-b)(1-d)(1-qb)(qa-d)qace") * W;
    x.term(Y, x.phi({a, c, e}, {q * b, d / q}, z, Z1));
    x.term(Z, x.phi({q2 * a, q * c, q * e}, {q2 * b, q * d}, zq, Zq));
  });

  thm(out, 7, [](auto& x) {
    TT_Q;
    const C W = x.div(C(1), q * a * c * e + a * c * d * e + b * d * e - a * d * e - b * c * d -
                                q * a * c * e * e,
                      "qace+acde+bde-ade-bcd-qace^2");
    const C Y = x.div((1.0 - c) * (b - a) * (b - e) * (q * b - e) * (q * a * e - d) * d,
                      (1.0 - b) * (1.0 - q * b) * (q * a - d) * e, "(1-b)(1-qb)(qa-d)e") * W;
    const C Z = x.div((1.0 - e) * (q * a * c * e - b * d) *
                          (q * a * b * c + a * d + c * d - b * d - a * c * d - q * a * c),
                      (1.0 - b) * (d - q * a) * c, "(1-b)(d-qa)c") * W;
    x.term(Y, x.phi({q * a, q * c, e}, {q2 * b, d}, z, Z1));
    x.term(Z, x.phi({q * a, c, q * e}, {q * b, d}, zq, Zq));
  });

  auto& t8 = thm(out, 8, [](auto& x) {
    TT_Q;
    const C W = x.div(C(1), q * a * b * c * e + a * d * e + b * c * d - b * b * d - a * c * d * e -
                                q * a * c * e,
                      "qabce+ade+bcd-b^2d-acde-qace");
    const C Y = x.div((a - b) * (b - c) * (1.0 - c) * (b - e) * (q * b - e) * d * d,
                      (1.0 - b) * (1.0 - q * b) * (q * a - d) * c * e, "(1-b)(1-qb)(qa-d)ce") * W;
    const C Z = x.div((q * a * c * e - b * d) *
                          (q * a * b * c + a * d + c * d - b * d - a * c * d - q * a * c),
                      (q * a - d) * c, "(qa-d)c") * W;
    x.term(Y, x.phi({q * a, q * c, e}, {q2 * b, d}, z, Z1));
    x.term(Z, x.phi({q * a, c, e}, {b, d}, zq, Zq));
  });
  t8.notes = "classical limit uses e (not e+1) in the last series, the corrected form";

  thm(out, 9, [](auto& x) {
    TT_Q;
    const C Y = x.div((1.0 - c) * (b - e) * (d - e) * b * d,
                      (1.0 - b) * (1.0 - d) * (q * a * e - b * d) * c * e,
                      "(1-b)(1-d)(qae-bd)ce");
    const C Z = x.div(q * a * c * e - b * d, (q * a * e - b * d) * c, "(qae-bd)c");
    x.term(Y, x.phi({q * a, q * c, e}, {q * b, q * d}, z, Z1));
    x.term(Z, x.phi({q * a, c, e}, {b, d}, zq, Zq));
  });

  thm(out, 10, [](auto& x) {
    TT_Q;
    const C K = x.div((a - b) * (1.0 - c) * (1.0 - e) * b * d,
                      (1.0 - b) * (1.0 - q * b) * (d - 1.0) * a * c * e, "(1-b)(1-qb)(d-1)ace");
    x.term(K, x.phi({q * a, q * c, q * e}, {q2 * b, q * d}, z, Z1));
    x.term(x.phi({q * a, c, e}, {q * b, d}, z, Z1));
  });

  thm(out, 11, [](auto& x) {
    TT_Q;
    const C Y = x.div((a - d) * (q * c * e - d), (a * e - d) * (q * c - d), "(ae-d)(qc-d)");
    const C Z = x.div((1.0 - e) * (a - q * c) * (q * a * c * e - b * d) * d,
                      (1.0 - b) * (a * e - d) * (q * c - d) * q * a * c * e,
                      "(1-b)(ae-d)(qc-d)qace");
    x.term(Y, x.phi({a / q, q * c, e}, {b, d}, z, Z1));
    x.term(Z, x.phi({a, q * c, q * e}, {q * b, d}, zq, Zq));
  });

  thm(out, 12, [](auto& x) {
    TT_Q;
    const C den = x.div(C(1), (b - 1.0) * (b - c * e) * (q * c - d) * (q * e - d),
                        "(b-1)(b-ce)(qc-d)(qe-d)");
    const C Y = (b - c) * (b - e) * (q - d) * (q * c * e - d) * den;
    const C Z = x.div((1.0 - c) * (1.0 - e) * (d - q * b) * (q * a * c * e - b * d), a, "a") * den;
    x.term(Y, x.phi({a, c, e}, {q * b, d / q}, z, Z1));
    x.term(Z, x.phi({a, q * c, q * e}, {q * b, d}, zq, Zq));
  });

  thm(out, 13, [](auto& x) {
    TT_Q;
    const C den = x.div(C(1),
                        (q - a) * (q * c - d) * (q2 * c - d) * (q * e - d) * (a * e - d) * q * b * b,
                        "(q-a)(qc-d)(q^2c-d)(qe-d)(ae-d)qb^2");
    const C Y = (q - b) * (q - d) * (q2 - d) *
                (b * d * d + q2 * a * b * c * e + q3 * a * c * e - q3 * b * c * e - q * a * b * d -
                 q * a * c * d * e) *
                a * c * e * den;
    const C Z = (q - d) * (q2 - d) * (b * d - q * a * c * e) *
                (a * b * d * e + q2 * b * c * d + q3 * a * c * e - q3 * b * c * e - q * a * b * d -
                 q * a * c * d * e) *
                den;
    x.term(Y, x.phi({a / q2, c, e / q}, {b / q, d / q2}, z, Z1));
    x.term(Z, x.phi({a / q, c, e}, {b, d / q2}, zq, Zq));
  });

  thm(out, 14, [](auto& x) {
    TT_Q;
    const C W = x.div(C(1), q3 * a * c * e + q2 * b * c * d * e + b * d * d - q2 * b * c * d -
                                q2 * b * d * e - q * a * c * d * e,
                      "q^3ace+q^2bcde+bd^2-q^2bcd-q^2bde-qacde");
    const C Y = x.div((a - q * b) * (a - d) * (1.0 - c) * (1.0 - e) *
                          (q3 * a * c * e + q2 * a * b * c * e + b * d * d - q * a * b * d -
                           q3 * b * c * e - q * a * c * d * e) *
                          q * d,
                      (a - q) * (1.0 - b) * (q * c - d) * (q * e - d) * a,
                      "(a-q)(1-b)(qc-d)(qe-d)a") * W;
    const C Z = x.div((q - d) * (q2 - d) * (q * a * c * e - b * d) *
                          (q2 * c * e + q * c * d * e + a * d - q * c * d - q * d * e - q * a * c * e),
                      (q - a) * (q * c - d) * (q * e - d), "(q-a)(qc-d)(qe-d)") * W;
    x.term(Y, x.phi({a / q, q * c, q * e}, {q * b, d}, z, Z1));
    x.term(Z, x.phi({a / q, c, e}, {b, d / q2}, zq, Zq));
  });

  thm(out, 15, [](auto& x) {
    TT_Q;
    const C Y = x.div((a - q * b) * (a - d) * (1.0 - c) * (1.0 - e) * q * d,
                      (a - q) * (1.0 - b) * (q * c - d) * (q * e - d) * a,
                      "(a-q)(1-b)(qc-d)(qe-d)a");
    const C Z = x.div((q - d) * (q * a * c * e + q * c * d + q * d * e - q * c * d * e -
                                 q2 * c * e - a * d),
                      (a - q) * (q * c - d) * (q * e - d), "(a-q)(qc-d)(qe-d)");
    x.term(Y, x.phi({a / q, q * c, q * e}, {q * b, d}, z, Z1));
    x.term(Z, x.phi({a / q, c, e}, {b, d / q}, z, Z1));
  });

  thm(out, 16, [](auto& x) {
    TT_Q;
    const C Y = x.div((b - c) * (q * c * e - d), (b - 1.0) * (q * e - d) * c, "(b-1)(qe-d)c");
    const C Z = x.div((1.0 - c) * (q * a * c * e - b * d), (1.0 - b) * (q * e - d) * a * c,
                      "(1-b)(qe-d)ac");
    x.term(Y, x.phi({a, c, q * e}, {q * b, d}, z, Z1));
    x.term(Z, x.phi({a, q * c, q * e}, {q * b, d}, zq, Zq));
  });

  thm(out, 17, [](auto& x) {
    TT_Q;
    const C W = x.div(C(1), q * a * b * c * e + q * a * c * d * e + b * d - a * b * d * e -
                                q * a * c * e - q * b * c * d,
                      "qabce+qacde+bd-abde-qace-qbcd");
    const C Y = (q * a * b * c * e + q * a * c * d * e + b * d - a * b * d - q * a * c * e -
                 q * b * c * d * e) *
                W;
    const C qace = q * a * c * e;
    const C Z = x.div((1.0 - a) * (a - q * c) * (1.0 - q * c) * (1.0 - q * e) * (1.0 - e) *
                          (qace - b * d) * b * d * b * d,
                      (1.0 - b) * (1.0 - d) * (1.0 - q * b) * (1.0 - q * d) * qace * qace,
                      "(1-b)(1-d)(1-qb)(1-qd)(qace)^2") * W;
    x.term(Y, x.phi({a / q, q * c, e}, {b, d}, z, Z1));
    x.term(Z, x.phi({q * a, q2 * c, q2 * e}, {q2 * b, q2 * d}, zq, Zq));
  });

  thm(out, 18, [](auto& x) {
    TT_Q;
    const C den = x.div(C(1), (q * a - b) * (q * a - d), "(qa-b)(qa-d)");
    const C Y = x.div((a - 1.0) * (c - b) * (c - d) * a * q2, (c - q) * c, "(c-q)c") * den;
    const C Z = x.div((q - b) * (q - d) * (q * a - c) * a, q - c, "q-c") * den;
    x.term(Y, x.phi({q * a, c / q, e}, {b, d}, z, Z1));
    x.term(Z, x.phi({a, c / q, e / q}, {b / q, d / q}, z, Z1));
  });

  thm(out, 19, [](auto& x) {
    TT_Q;
    const C den = x.div(C(1), (q * a - b) * (q * a - d), "(qa-b)(qa-d)");
    const C Y = x.div((c - b) * (c - d) * a * q, c, "c") * den;
    const C Z = x.div((q * a - c) * (q * a * c * e - b * d), c * e, "ce") * den;
    x.term(Y, x.phi({q * a, c / q, e}, {b, d}, z, Z1));
    x.term(Z, x.phi({q * a, c, e}, {b, d}, zq, Zq));
  });
}

void classical_side(std::vector<Relation>& out) {
  cor(out, 1, [](auto& x) {
    TT_F;
    const C V = x.div(C(1), 1.0 + b * b + a * e + c * d + e - c - d - a * b - b * c - b * e,
                      "1+b^2+ae+cd+e-c-d-ab-bc-be");
    const C Y = x.div((1.0 + b - c) * (b - c) * (b - e) * (1.0 - d), b * (1.0 + a - d),
                      "b(1+a-d)") * V;
    const C Z = x.div((1.0 + a + c + e - b - d) * (1.0 + a * e + c * d + e - c - d - a * b - c * e),
                      1.0 + a - d, "1+a-d") * V;
    x.term(Y, x.F({a + one, c - one, e}, {b + one, d - one}));
    x.term(Z, x.F({a + one, c, e}, {b, d}));
  });

  cor(out, 2, [](auto& x) {
    TT_F;
    x.term(x.div(c - d, 1.0 + a - d, "1+a-d"), x.F({a + one, c - one, e}, {b, d}));
    x.term(x.div((b - e) * (1.0 + a - c), b * (1.0 + a - d), "b(1+a-d)"),
           x.F({a + one, c, e}, {b + one, d}));
  });

  cor(out, 3, [](auto& x) {
    TT_F;
    const C Y = x.div((c - d) * (b + a * b + c * e - b * d),
                      (1.0 + a - d) * (b * c + a * e + e - b * d), "(1+a-d)(bc+ae+e-bd)");
    const C Z = x.div(c * e * (1.0 + a) * (b - e) * (1.0 + a - c) * (1.0 + a + c + e - b - d),
                      b * d * (1.0 + b) * (1.0 + a - d) * (b * d - b * c - a * e - e),
                      "bd(1+b)(1+a-d)(bd-bc-ae-e)");
    x.term(Y, x.F({a + one, c - one, e}, {b, d}));
    x.term(Z, x.F({a + two, c + one, e + one}, {b + two, d + one}));
  });

  cor(out, 4, [](auto& x) {
    TT_F;
    const C V = x.div(C(1), a + a * b + b * c + b * e - b * b - c * e - a * d,
                      "a+ab+bc+be-b^2-ce-ad");
    const C Y = x.div((a - b) * (b - c) * (b - e) * (1.0 - d), b * (1.0 + a - d), "b(1+a-d)") * V;
    const C Z = x.div(a * (1.0 + b - d) * (1.0 + a + c + e - b - d), 1.0 + a - d, "1+a-d") * V;
    x.term(Y, x.F({a, c, e}, {b + one, d - one}));
    x.term(Z, x.F({a + one, c, e}, {b, d}));
  });

  cor(out, 5, [](auto& x) {
    TT_F;
    const C den = x.div(C(1), b * (1.0 + a - d), "b(1+a-d)");
    x.term((a - b) * (d - 1.0) * den, x.F({a, c, e}, {b + one, d - one}));
    x.term(a * (1.0 + b - d) * den, x.F({a + one, c, e}, {b + one, d}));
  });

  cor(out, 6, [](auto& x) {
    TT_F;
    const C V = x.div(C(1), a + b * d - a * d - c * e - b, "a+bd-ad-ce-b");
    const C Y = x.div((a - b) * (d - 1.0) * (b * d - a * b - c * e - b), b * (1.0 + a - d),
                      "b(1+a-d)") * V;
    const C Z = x.div(a * c * e * (1.0 + a) * (1.0 + b - d) * (1.0 + a + c + e - b - d),
                      b * d * (1.0 + b) * (1.0 + a - d), "bd(1+b)(1+a-d)") * V;
    x.term(Y, x.F({a, c, e}, {b + one, d - one}));
    x.term(Z, x.F({a + two, c + one, e + one}, {b + two, d + one}));
  });

  cor(out, 7, [](auto& x) {
    TT_F;
    const C V = x.div(C(1), a * c + b * e + d * e - a * e - e - e * e - b * c,
                      "ac+be+de-ae-e-e^2-bc");
    const C Y = x.div(c * (a - b) * (b - e) * (1.0 + b - e) * (1.0 + a + e - d),
                      b * (1.0 + b) * (1.0 + a - d), "b(1+b)(1+a-d)") * V;
    const C Z = x.div(e * (b + d - a - c - e - 1.0) * (b + a * b + b * c - b * d - a * c),
                      b * (1.0 + a - d), "b(1+a-d)") * V;
    x.term(Y, x.F({a + one, c + one, e}, {b + two, d}));
    x.term(Z, x.F({a + one, c, e + one}, {b + one, d}));
  });

  cor(out, 8, [](auto& x) {
    TT_F;
    const C V = x.div(C(1), a * c + c * e + b * d + b * b - b - a * b - b * e - 2.0 * b * c,
                      "ac+ce+bd+b^2-b-ab-be-2bc");
    const C Y = x.div((a - b) * (b - c) * (b - e) * (1.0 + b - e) * c,
                      b * (1.0 + b) * (1.0 + a - d), "b(1+b)(1+a-d)") * V;
    const C Z = x.div((b + d - a - c - e - 1.0) * (a * b + b * c + b - b * d - a * c), 1.0 + a - d,
                      "1+a-d") * V;
    x.term(Y, x.F({a + one, c + one, e}, {b + two, d}));
    x.term(Z, x.F({a + one, c, e}, {b, d}));
  });

  cor(out, 9, [](auto& x) {
    TT_F;
    const C den = x.div(C(1), 1.0 + a + e - b - d, "1+a+e-b-d");
    x.term(x.div(c * (b - e) * (e - d), b * d, "bd") * den, x.F({a + one, c + one, e}, {b + one, d + one}));
    x.term((1.0 + a + c + e - b - d) * den, x.F({a + one, c, e}, {b, d}));
  });

  cor(out, 10, [](auto& x) {
    TT_F;
    x.term(x.div((a - b) * c * e, (1.0 + b) * b * d, "(1+b)bd"),
           x.F({a + one, c + one, e + one}, {b + two, d + one}));
    x.term(x.F({a + one, c, e}, {b + one, d}));
  });

  cor(out, 11, [](auto& x) {
    TT_F;
    const C den = x.div(C(1), (a + e - d) * (1.0 + c - d), "(a+e-d)(1+c-d)");
    x.term((a - d) * (1.0 + c + e - d) * den, x.F({a - one, c + one, e}, {b, d}));
    x.term(x.div(e * (1.0 + c - a) * (b + d - a - c - e - 1.0), b, "b") * den,
           x.F({a, c + one, e + one}, {b + one, d}));
  });

  cor(out, 12, [](auto& x) {
    TT_F;
    const C den = x.div(C(1), b * (1.0 + c - d) * (1.0 + e - d) * (c + e - b),
                        "b(1+c-d)(1+e-d)(c+e-b)");
    x.term((b - c) * (b - e) * (d - 1.0) * (1.0 + c + e - d) * den, x.F({a, c, e}, {b + one, d - one}));
    x.term(c * e * (1.0 + b - d) * (1.0 + a + c + e - b - d) * den,
           x.F({a, c + one, e + one}, {b + one, d}));
  });

  cor(out, 13, [](auto& x) {
    TT_F;
    const C den = x.div(C(1), (a - 1.0) * (1.0 + c - d) * (2.0 + c - d) * (1.0 + e - d) * (d - a - e),
                        "(a-1)(1+c-d)(2+c-d)(1+e-d)(d-a-e)");
    const C Y = (b - 1.0) * (d - 1.0) * (d - 2.0) *
                (2.0 * b + 2.0 * d + c * d + d * e + 2.0 * a * d - a * c - a * e - b * d - 3.0 * a -
                 c - e - d * d - 1.0) *
                den;
    const C Z = (d - 1.0) * (d - 2.0) * (b + d - a - c - e - 1.0) *
                (1.0 + a + c + a * e + b * d - a * d - c * e - 2.0 * b - e) * den;
    x.term(Y, x.F({a - two, c, e - one}, {b - one, d - two}));
    x.term(Z, x.F({a - one, c, e}, {b, d - two}));
  });

  cor(out, 14, [](auto& x) {
    TT_F;
    const C S = b + d - a - c - e - 1.0;
    const C den = x.div(C(1), (1.0 - a) * (1.0 + c - d) * (1.0 + e - d) * (c * e + (d - 2.0) * S),
                        "(1-a)(1+c-d)(1+e-d)(ce+(d-2)(b+d-a-c-e-1))");
    const C Y = x.div(c * e * (a - b - 1.0) * (a - d) * ((a - 1.0) * (1.0 + c + e - d) + (d - 2.0) * S),
                      b, "b") * den;
    const C Z = (d - 1.0) * (d - 2.0) * (1.0 + a + c + e - b - d) *
                (1.0 + c + e + c * e + a * d - a * c - a * e - a - d) * den;
    x.term(Y, x.F({a - one, c + one, e + one}, {b + one, d}));
    x.term(Z, x.F({a - one, c, e}, {b, d - two}));
  });

  cor(out, 15, [](auto& x) {
    TT_F;
    const C den = x.div(C(1), (1.0 - a) * (1.0 + c - d) * (1.0 + e - d), "(1-a)(1+c-d)(1+e-d)");
    x.term(x.div(c * e * (a - d) * (a - b - 1.0), b, "b") * den,
           x.F({a - one, c + one, e + one}, {b + one, d}));
    x.term((d - 1.0) * ((a - 1.0) * (1.0 + c + e - d) - c * e) * den, x.F({a - one, c, e}, {b, d - one}));
  });

  cor(out, 16, [](auto& x) {
    TT_F;
    const C den = x.div(C(1), b * (1.0 + e - d), "b(1+e-d)");
    x.term((b - c) * (1.0 + c + e - d) * den, x.F({a, c, e + one}, {b + one, d}));
    x.term(c * (1.0 + a + c + e - b - d) * den, x.F({a, c + one, e + one}, {b + one, d}));
  });

  cor(out, 17, [](auto& x) {
    TT_F;
    const C Y = x.div(b * d - a * (1.0 + c + e), b * d - (1.0 + c) * (a + e), "bd-(1+c)(a+e)");
    const C Z = x.div(a * e * (1.0 + c) * (1.0 + e) * (1.0 + c - a) * (b + d - a - c - e - 1.0),
                      b * d * (1.0 + b) * (1.0 + d) * (a + e + a * c + c * e - b * d),
                      "bd(1+b)(1+d)(a+e+ac+ce-bd)");
    x.term(Y, x.F({a - one, c + one, e}, {b, d}));
    x.term(Z, x.F({a + one, c + two, e + two}, {b + two, d + two}));
  });

  cor(out, 18, [](auto& x) {
    TT_F;
    const C den = x.div(C(1), (1.0 - c) * (1.0 + a - b) * (1.0 + a - d), "(1-c)(1+a-b)(1+a-d)");
    x.term(a * (b - c) * (c - d) * den, x.F({a + one, c - one, e}, {b, d}));
    x.term((1.0 - b) * (1.0 - d) * (1.0 + a - c) * den, x.F({a, c - one, e - one}, {b - one, d - one}));
  });

  cor(out, 19, [](auto& x) {
    TT_F;
    const C den = x.div(C(1), (1.0 + a - b) * (1.0 + a - d), "(1+a-b)(1+a-d)");
    x.term((c - b) * (c - d) * den, x.F({a + one, c - one, e}, {b, d}));
    x.term((1.0 + a - c) * (1.0 + a + c + e - b - d) * den, x.F({a + one, c, e}, {b, d}));
  });
}

#undef TT_Q
#undef TT_F

}  // namespace

void add_three_term(std::vector<Relation>& out) {
  q_side(out);
  classical_side(out);
}

}  // namespace qcontig::catalog
