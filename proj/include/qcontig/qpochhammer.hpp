#pragma once

#include <qcontig/scalar.hpp>

#include <span>
#include <string>

namespace qcontig {

namespace detail {

// Running product that pulls its magnitude back into [2^-500, 2^500]
// and keeps the displaced binary exponent on the side.
template <class C>
class ScaledProduct {
 public:
  using R = real_t<C>;

  void mul(const C& f) {
    value_ *= f;
    renorm();
  }
  void div(const C& f) {
    value_ /= f;
    renorm();
  }

  C result() const {
    C v = value_;
    const R up = step(), down = R(1) / step();
    for (int e = exponent_; e > 0; e -= 500) v *= up;
    for (int e = exponent_; e < 0; e += 500) v *= down;
    return v;
  }

 private:
  static R step() {
    using std::ldexp;
    return ldexp(R(1), 500);
  }

  void renorm() {
    const R m = mag2(value_);
    if (m == 0) return;
    const R hi = step() * step();
    if (m > hi) {
      value_ *= R(1) / step();
      exponent_ += 500;
    } else if (m < R(1) / hi) {
      value_ *= step();
      exponent_ -= 500;
    }
  }

  C value_{1};
  int exponent_ = 0;
};

template <class C>
void check_base(const C& q) {
  if (!(mag2(q) < real_t<C>(1))) throw BaseOutOfDomain("base q must satisfy |q| < 1");
}

// Factor 1 - w, refusing it when it is numerically zero.
template <class C>
C factor(const C& w, const PrecisionPolicy& policy) {
  const C f = C(1) - w;
  const real_t<C> thr(policy.singular_threshold());
  if (mag2(f) < thr * thr) throw SingularFactor("factor 1 - x q^k vanishes");
  return f;
}

}  // namespace detail

// (x;q)_n for any integer n; negative orders use 1 / prod_{j=n}^{-1} (1 - x q^j).
template <class C>
C qpoch_finite(const C& x, const C& q, long n, const PrecisionPolicy& policy) {
  detail::check_base(q);
  detail::ScaledProduct<C> p;
  if (n >= 0) {
    C w = x;
    for (long k = 0; k < n; ++k, w *= q) p.mul(C(1) - w);
  } else {
    if (mag2(q) == 0) throw SingularFactor("negative order with q = 0");
    C w = x / q;  // x q^{-1}
    for (long k = -1; k >= n; --k, w /= q) p.div(detail::factor(w, policy));
  }
  return p.result();
}

namespace detail {

template <class C>
bool infinite_tail_done(const C& w, long k, const PrecisionPolicy& policy) {
  const real_t<C> cut(policy.tol / 10);
  return k >= 8 && mag2(w) < cut * cut;
}

}  // namespace detail

template <class C>
C qpoch_infinite(const C& x, const C& q, const PrecisionPolicy& policy) {
  detail::check_base(q);
  detail::ScaledProduct<C> p;
  C w = x;
  for (long k = 0;; ++k, w *= q) {
    if (detail::infinite_tail_done(w, k, policy)) break;
    p.mul(C(1) - w);
  }
  return p.result();
}

// prod (num_i;q)_n / prod (den_j;q)_n with the factors interleaved, so the
// intermediate never grows like a single long product would.
template <class C>
C qpoch_ratio(std::span<const C> num, std::span<const C> den, const C& q, long n,
              const PrecisionPolicy& policy) {
  detail::check_base(q);
  detail::ScaledProduct<C> p;
  if (n >= 0) {
    C qk(1);
    for (long k = 0; k < n; ++k, qk *= q) {
      for (const C& a : num) p.mul(C(1) - a * qk);
      for (const C& b : den) p.div(detail::factor(C(b * qk), policy));
    }
  } else {
    if (mag2(q) == 0) throw SingularFactor("negative order with q = 0");
    C qk = C(1) / q;
    for (long k = -1; k >= n; --k, qk /= q) {
      for (const C& b : den) p.mul(C(1) - b * qk);
      for (const C& a : num) p.div(detail::factor(C(a * qk), policy));
    }
  }
  return p.result();
}

template <class C>
C qpoch_ratio_infinite(std::span<const C> num, std::span<const C> den, const C& q,
                       const PrecisionPolicy& policy) {
  detail::check_base(q);
  detail::ScaledProduct<C> p;
  C qk(1);
  for (long k = 0;; ++k, qk *= q) {
    bool done = k >= 8;
    for (const C& a : num) done = done && detail::infinite_tail_done(C(a * qk), k, policy);
    for (const C& b : den) done = done && detail::infinite_tail_done(C(b * qk), k, policy);
    if (done) break;
    for (const C& a : num) p.mul(C(1) - a * qk);
    for (const C& b : den) p.div(detail::factor(C(b * qk), policy));
  }
  return p.result();
}

}  // namespace qcontig
