#pragma once

#include <qcontig/scalar.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <span>

namespace qcontig {

// Shifted factorial (x)_n, negative n included: (x)_{-m} = 1 / prod_{j=1}^{m} (x - j).
template <class C>
C pochhammer(const C& x, long n, const PrecisionPolicy& policy = PrecisionPolicy::standard()) {
  const real_t<C> thr(policy.singular_threshold());
  C p(1);
  if (n >= 0) {
    for (long k = 0; k < n; ++k) p *= x + C(static_cast<double>(k));
  } else {
    for (long j = 1; j <= -n; ++j) {
      const C f = x - C(static_cast<double>(j));
      if (mag2(f) < thr * thr) throw SingularFactor("(x)_n with x - j = 0");
      p /= f;
    }
  }
  return p;
}

struct GammaValue {
  cplx value;
  bool low_accuracy = false;  // argument outside |Re z| <= 50, |Im z| <= 20
};

inline bool in_gamma_box(const cplx& z) {
  return std::abs(z.real()) <= 50 && std::abs(z.imag()) <= 20;
}

namespace detail {

// Lanczos approximation, g = 7, nine coefficients.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline void check_pole(const cplx& z, const PrecisionPolicy& policy) {
  const double r = std::round(z.real());
  if (r <= 0 && std::abs(z - cplx(r, 0)) < policy.singular_threshold())
    throw Pole("Gamma pole at a non-positive integer");
}

// log Gamma for Re z >= 1/2 (any branch of the log is fine for our uses)
inline cplx lgamma_right(cplx z) {
  z -= 1.0;
  cplx x = lanczos_p[0];
  for (std::size_t i = 1; i < lanczos_p.size(); ++i) x += lanczos_p[i] / (z + static_cast<double>(i));
  const cplx t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline cplx gamma_right(cplx z) {
  z -= 1.0;
  cplx x = lanczos_p[0];
  for (std::size_t i = 1; i < lanczos_p.size(); ++i) x += lanczos_p[i] / (z + static_cast<double>(i));
  const cplx t = z + lanczos_g + 0.5;
  return std::sqrt(2 * std::numbers::pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace detail

inline GammaValue gamma(const cplx& z, const PrecisionPolicy& policy = PrecisionPolicy::standard()) {
  detail::check_pole(z, policy);
  using std::numbers::pi;
  cplx v = z.real() < 0.5 ? pi / (std::sin(pi * z) * detail::gamma_right(1.0 - z))
                          : detail::gamma_right(z);
  return {v, !in_gamma_box(z)};
}

inline cplx lgamma(const cplx& z, const PrecisionPolicy& policy = PrecisionPolicy::standard()) {
  detail::check_pole(z, policy);
  using std::numbers::pi;
  if (z.real() < 0.5)
    return std::log(pi) - std::log(std::sin(pi * z)) - detail::lgamma_right(1.0 - z);
  return detail::lgamma_right(z);
}

// prod Gamma(num) / prod Gamma(den), through log Gamma.
inline cplx gamma_ratio(std::span<const cplx> num, std::span<const cplx> den,
                        const PrecisionPolicy& policy = PrecisionPolicy::standard()) {
  cplx s = 0;
  for (const cplx& a : num) s += lgamma(a, policy);
  for (const cplx& b : den) s -= lgamma(b, policy);
  return std::exp(s);
}

}  // namespace qcontig
