#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qcontig {

namespace bmp = boost::multiprecision;

using cplx = std::complex<double>;

template <unsigned Digits>
using mp_real = bmp::number<bmp::cpp_bin_float<Digits>, bmp::et_off>;
template <unsigned Digits>
using mp_cplx = bmp::number<bmp::complex_adaptor<bmp::cpp_bin_float<Digits>>, bmp::et_off>;

using cplx34 = mp_cplx<34>;
using cplx50 = mp_cplx<50>;
using cplx100 = mp_cplx<100>;

template <class C>
struct scalar_traits;

template <>
struct scalar_traits<cplx> {
  using real_type = double;
  // max_digits10 of binary64; this is what the tolerance floor is measured against.
  static constexpr int digits10 = 17;
  static double unit_roundoff() { return 0x1.0p-53; }
};

template <unsigned D>
struct scalar_traits<mp_cplx<D>> {
  using real_type = mp_real<D>;
  static constexpr int digits10 = static_cast<int>(D);
  static double unit_roundoff() {
    return static_cast<double>(std::numeric_limits<real_type>::epsilon()) / 2;
  }
};

template <class C>
using real_t = typename scalar_traits<C>::real_type;

template <class C>
real_t<C> re(const C& z) {
  using std::real;
  return real(z);
}

template <class C>
real_t<C> im(const C& z) {
  using std::imag;
  return imag(z);
}

// Squared modulus; cheaper than abs() in inner loops.
template <class C>
real_t<C> mag2(const C& z) {
  const real_t<C> x = re(z), y = im(z);
  return x * x + y * y;
}

template <class C>
real_t<C> mag(const C& z) {
  using std::abs;
  return abs(z);
}

template <class R>
double to_double(const R& x) {
  return static_cast<double>(x);
}

template <class C>
cplx to_cplx(const C& z) {
  return {to_double(re(z)), to_double(im(z))};
}

template <class C>
C from_cplx(const cplx& z) {
  return C(z.real(), z.imag());
}

// ----------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define QCONTIG_ERROR(Name)              \
  struct Name : Error {                  \
    using Error::Error;                  \
  }

QCONTIG_ERROR(SingularFactor);
QCONTIG_ERROR(BaseOutOfDomain);
QCONTIG_ERROR(SingularDenominator);
QCONTIG_ERROR(DomainViolation);
QCONTIG_ERROR(Pole);
QCONTIG_ERROR(SingularCoefficient);
QCONTIG_ERROR(UnknownRelation);
QCONTIG_ERROR(SamplingExhausted);
QCONTIG_ERROR(LengthMismatch);
QCONTIG_ERROR(UnknownPair);
QCONTIG_ERROR(NotConverged);
QCONTIG_ERROR(InvalidPolicy);

#undef QCONTIG_ERROR

struct ConstraintViolated : Error {
  explicit ConstraintViolated(std::string predicate_)
      : Error("constraint violated: " + predicate_), predicate(std::move(predicate_)) {}
  std::string predicate;
};

// ----------------------------------------------------------------------------
// Precision policy

enum class PrecisionMode { standard, extended };

struct PrecisionPolicy {
  PrecisionMode mode = PrecisionMode::standard;
  int decimal_digits = scalar_traits<cplx>::digits10;
  double tol = 1e-12;
  long max_terms = 10000;

  static PrecisionPolicy standard(double tol = 1e-12, long max_terms = 10000) {
    return {PrecisionMode::standard, scalar_traits<cplx>::digits10, tol, max_terms};
  }

  // Default tolerance sits at the floor 10^(5 - digits).
  static PrecisionPolicy extended(int digits = 34, double tol = 0.0, long max_terms = 10000) {
    if (tol == 0.0) tol = std::pow(10.0, 5 - digits);
    return {PrecisionMode::extended, digits, tol, max_terms};
  }

  double singular_threshold() const { return 10.0 * tol; }

  void validate() const {
    if (mode == PrecisionMode::standard && decimal_digits != scalar_traits<cplx>::digits10)
      throw InvalidPolicy("standard mode carries exactly 17 significant digits");
    if (mode == PrecisionMode::extended && (decimal_digits < 30 || decimal_digits > 100))
      throw InvalidPolicy("extended mode supports 30 to 100 decimal digits");
    // small slack so that 1e-12 at 17 digits is admitted despite decimal rounding
    if (!(tol > 0) || tol < std::pow(10.0, 5 - decimal_digits) * (1 - 1e-9))
      throw InvalidPolicy("tolerance below the precision floor 10^(5 - digits)");
    if (max_terms < 100) throw InvalidPolicy("max_terms must be at least 100");
  }
};

inline const char* to_string(PrecisionMode m) {
  return m == PrecisionMode::standard ? "standard" : "extended";
}

}  // namespace qcontig
