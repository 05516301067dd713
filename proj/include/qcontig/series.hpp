#pragma once

#include <qcontig/scalar.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace qcontig {

enum class SeriesKind { q_phi, q_phi_star, classical_F, classical_F_star };

inline bool is_q_kind(SeriesKind k) { return k == SeriesKind::q_phi || k == SeriesKind::q_phi_star; }
inline bool is_star(SeriesKind k) {
  return k == SeriesKind::q_phi_star || k == SeriesKind::classical_F_star;
}

template <class C>
struct SeriesSpec {
  SeriesKind kind = SeriesKind::q_phi;
  std::vector<C> numerators;
  std::vector<C> denominators;
  C base{0};  // ignored by the classical kinds
  C argument{0};
};

template <class C>
struct SeriesValue {
  C value{0};
  long terms_used = 0;
  double tail_bound = 0;  // relative, i.e. divided by max(1, |value|)
  // Running error estimate for the summation itself: unit roundoff times
  // sum (k+1)|term_k|, again relative to max(1, |value|). Large when the
  // terms cancel.
  double rounding_bound = 0;
  bool converged = false;
};

namespace detail {

template <class C>
bool exact_nonpositive_integer(const C& x) {
  using std::floor;
  const real_t<C> r = re(x);
  return im(x) == 0 && r <= 0 && floor(r) == r;
}

// Plain-term ratio t_{k+1}/t_k of the unstarred series; qk = q^k.
template <class C>
C plain_ratio(const SeriesSpec<C>& s, long k, const C& qk) {
  C num = s.argument, den(1);
  if (is_q_kind(s.kind)) {
    for (const C& a : s.numerators) num *= C(1) - a * qk;
    for (const C& b : s.denominators) den *= C(1) - b * qk;
    den *= C(1) - qk * s.base;
    const long balance = 1 + static_cast<long>(s.denominators.size()) -
                         static_cast<long>(s.numerators.size());
    // {(-1)^k q^{k(k-1)/2}}^{balance}: stepping k -> k+1 multiplies by (-q^k)^{balance}
    for (long i = 0; i < balance; ++i) num *= -qk;
    for (long i = 0; i > balance; --i) den *= -qk;
  } else {
    const C kk(static_cast<double>(k));
    for (const C& a : s.numerators) num *= a + kk;
    for (const C& b : s.denominators) den *= b + kk;
    den *= kk + C(1);
  }
  return num / den;
}

template <class C>
void check_domain(const SeriesSpec<C>& s, const PrecisionPolicy& policy) {
  using R = real_t<C>;
  const std::size_t r = s.numerators.size(), sd = s.denominators.size();
  const R z2 = mag2(s.argument);
  bool terminating = false;
  if (is_q_kind(s.kind)) {
    if (!(mag2(s.base) < R(1))) throw DomainViolation("base q must satisfy |q| < 1");
    for (const C& a : s.numerators) terminating = terminating || a == C(1);
    if (r > sd + 1 && z2 != 0 && !terminating)
      throw DomainViolation("series with more than s+1 numerator parameters diverges");
    if (r == sd + 1 && !terminating) {
      const R lim = R(1) - R(10 * policy.tol);
      if (z2 > lim * lim) throw DomainViolation("argument must satisfy |z| <= 1 - 10 tol");
    }
  } else {
    for (const C& a : s.numerators) terminating = terminating || exact_nonpositive_integer(a);
    if (r > sd + 1 && z2 != 0 && !terminating)
      throw DomainViolation("series with more than s+1 numerator parameters diverges");
    if (r == sd + 1 && !terminating) {
      using std::abs;
      const R z = mag(s.argument);
      if (abs(z - R(1)) <= R(policy.tol)) {
        R margin(0);
        for (const C& b : s.denominators) margin += re(b);
        for (const C& a : s.numerators) margin -= re(a);
        if (!(margin > R(1)))
          throw DomainViolation("unit argument needs Re(sum b - sum a) > 1");
      } else if (z > R(1)) {
        throw DomainViolation("argument outside the unit disc");
      }
    }
  }
}

template <class C>
void check_denominators(const SeriesSpec<C>& s, const PrecisionPolicy& policy) {
  using R = real_t<C>;
  const R thr(policy.singular_threshold());
  if (is_q_kind(s.kind)) {
    for (const C& b : s.denominators) {
      // once |b q^k| < 1/2 the factor 1 - b q^k cannot vanish any more
      C w = b;
      for (long k = 0; k <= policy.max_terms && mag2(w) >= R(0.25); ++k, w *= s.base)
        if (mag2(C(1) - w) < thr * thr)
          throw SingularDenominator("denominator factor 1 - b q^k vanishes");
    }
  } else {
    using std::abs;
    using std::round;
    for (const C& b : s.denominators) {
      const R k = -round(re(b));
      if (k >= 0 && k <= R(static_cast<double>(policy.max_terms)) && mag(C(b + C(k))) < thr)
        throw SingularDenominator("denominator parameter is a non-positive integer");
    }
  }
}

}  // namespace detail

// Ratio of consecutive terms t_{k+1}/t_k. Star kinds only for k >= 1, since
// their k = 0 term is zero.
template <class C>
C term_ratio(const SeriesSpec<C>& s, long k) {
  if (k < 0) throw DomainViolation("term index must be non-negative");
  if (is_star(s.kind) && k == 0) throw DomainViolation("starred series: ratio undefined at k = 0");
  C qk(1);
  if (is_q_kind(s.kind))
    for (long i = 0; i < k; ++i) qk *= s.base;
  C r = detail::plain_ratio(s, k, qk);
  if (s.kind == SeriesKind::q_phi_star) r *= (C(1) - qk * s.base) / (C(1) - qk);
  if (s.kind == SeriesKind::classical_F_star)
    r *= C(static_cast<double>(k + 1)) / C(static_cast<double>(k));
  return r;
}

template <class C>
SeriesValue<C> eval_series(const SeriesSpec<C>& s, const PrecisionPolicy& policy) {
  using R = real_t<C>;
  detail::check_domain(s, policy);
  detail::check_denominators(s, policy);

  const bool qkind = is_q_kind(s.kind), star = is_star(s.kind);
  const R tol(policy.tol);
  const R zabs = mag(s.argument);

  // Unit-argument classical series decay algebraically; the tail is then
  // estimated from the exponent margin rather than geometrically.
  bool algebraic = false;
  R margin(0);
  if (!qkind && s.numerators.size() == s.denominators.size() + 1) {
    using std::abs;
    if (abs(zabs - R(1)) <= tol) {
      algebraic = true;
      for (const C& b : s.denominators) margin += re(b);
      for (const C& a : s.numerators) margin -= re(a);
      if (star) margin -= R(1);
    }
  }
  const R rho_inf = (qkind && s.numerators.size() < s.denominators.size() + 1) ? R(0) : zabs;

  SeriesValue<C> out;
  C t(1);                      // plain term t_k
  C qk(1);                     // q^k
  C sum = star ? C(0) : C(1);  // starred k = 0 term is exactly zero
  int quiet = 0;
  long k = 0;
  R tail = std::numeric_limits<double>::infinity();
  R weighted = star ? R(0) : R(1);  // sum (k+1)|c_k|
  for (; k < policy.max_terms; ++k) {
    const C ratio = detail::plain_ratio(s, k, qk);
    t *= ratio;
    if (qkind) qk *= s.base;
    C c = t;
    if (star) c *= qkind ? C(C(1) - qk) : C(static_cast<double>(k + 1));
    sum += c;

    const R scale = std::max(R(1), mag(sum));
    const R cabs = mag(c);
    weighted += cabs * R(static_cast<double>(k + 2));
    if (mag2(t) == 0) {  // terminated
      tail = 0;
      quiet = 3;
    } else {
      if (cabs <= tol * scale)
        ++quiet;
      else
        quiet = 0;
      if (algebraic) {
        tail = margin > 0 ? R(cabs * R(static_cast<double>(k + 1)) / margin)
                          : R(std::numeric_limits<double>::infinity());
      } else {
        const R rho = std::max(mag(ratio), rho_inf);
        tail = rho < R(1) ? R(cabs * rho / (R(1) - rho)) : R(std::numeric_limits<double>::infinity());
      }
      tail /= scale;
    }
    if (quiet >= 3 && tail <= tol) {
      ++k;
      break;
    }
  }
  out.value = sum;
  out.terms_used = k + 1;
  out.tail_bound = to_double(tail);
  out.rounding_bound = to_double(R(weighted * R(scalar_traits<C>::unit_roundoff()) /
                                   std::max(R(1), mag(sum))));
  out.converged = quiet >= 3 && tail <= tol;
  return out;
}

template <class C>
SeriesValue<C> eval_phi(const SeriesSpec<C>& s, const PrecisionPolicy& policy) {
  if (!is_q_kind(s.kind)) throw DomainViolation("eval_phi expects a q-series");
  return eval_series(s, policy);
}

template <class C>
SeriesValue<C> eval_F(const SeriesSpec<C>& s, const PrecisionPolicy& policy) {
  if (is_q_kind(s.kind)) throw DomainViolation("eval_F expects a classical series");
  return eval_series(s, policy);
}

template <class C>
SeriesSpec<C> make_phi(std::vector<C> num, std::vector<C> den, const C& q, const C& z,
                       bool star = false) {
  return {star ? SeriesKind::q_phi_star : SeriesKind::q_phi, std::move(num), std::move(den), q, z};
}

template <class C>
SeriesSpec<C> make_F(std::vector<C> num, std::vector<C> den, const C& z, bool star = false) {
  return {star ? SeriesKind::classical_F_star : SeriesKind::classical_F, std::move(num),
          std::move(den), C(0), z};
}

}  // namespace qcontig
