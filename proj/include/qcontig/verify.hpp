#pragma once

#include <qcontig/relations.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qcontig {

// Uniform doubles built straight from the 64-bit engine output, so that the
// stream is identical on every standard library.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream);
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

inline constexpr int kMaxRejections = 10000;
inline constexpr double kClassicalThreshold = 1e-8;

struct SampleBatch {
  std::string relation_id;
  std::uint64_t seed = 0;
  std::vector<ParamSet<cplx>> points;
  long rejected = 0;
};

// q-side: parameters in the annulus 0.1 <= |w| <= 0.9, q real in [0.2, 0.8].
// Classical side: real parameters from the relation's sampling box.
SampleBatch sample_params(const Relation& rel, std::uint64_t seed, int count);

struct FailureRecord {
  ParamSet<cplx> point;
  double residual = std::numeric_limits<double>::quiet_NaN();
  std::string error;
};

struct VerificationReport {
  std::string relation_id;
  Side side = Side::q;
  int samples = 0;
  long rejected = 0;
  double max_residual = 0;
  double mean_residual = 0;
  double threshold = 0;
  std::vector<FailureRecord> failures;
  PrecisionPolicy policy;
  double wall_time = 0;  // seconds; not serialised, to keep reports reproducible

  bool pass() const { return failures.empty(); }
};

// Residual threshold for a relation under a policy: 5 tol on the q side,
// a fixed 1e-8 for the classical corollaries.
double pass_threshold(const Relation& rel, const PrecisionPolicy& policy);

VerificationReport verify_relation(const Relation& rel, std::uint64_t seed, int count,
                                   const PrecisionPolicy& policy,
                                   const Mutation* mutation = nullptr);
VerificationReport verify_relation(std::string_view id, std::uint64_t seed, int count,
                                   const PrecisionPolicy& policy,
                                   const Mutation* mutation = nullptr);

struct CampaignOptions {
  std::uint64_t seed = 42;
  int q_samples = 50;
  int classical_samples = 20;
  PrecisionPolicy policy = PrecisionPolicy::standard();
  unsigned jobs = 1;
  std::optional<Mutation> mutation;
};

// Verifies the given relations; reports come back in the order of `ids`.
std::vector<VerificationReport> verify_campaign(const std::vector<std::string>& ids,
                                                const CampaignOptions& options);

struct LimitReport {
  std::string q_relation_id;
  std::string classical_id;
  std::vector<double> epsilons;
  std::vector<double> coefficient_gaps;  // max over sample points and terms
  std::vector<std::string> exponent_assignment;
  int points = 0;
  bool decreasing = false;
};

LimitReport limit_check(std::string_view q_id, std::string_view classical_id,
                        const std::vector<double>& epsilons, std::uint64_t seed, int points = 8);

// |sum U_k (V_k - V_{k+1}) - sum V_k (U_k - U_{k-1}) - (U_{-1} V_0 - U_K V_{K+1})|
// with U given as U_{-1..K} and V as V_{0..K+1}.
template <class C>
real_t<C> abel_check(std::span<const C> U, std::span<const C> V) {
  if (U.size() != V.size() || U.size() < 2)
    throw LengthMismatch("abel_check needs U_{-1..K} and V_{0..K+1} of equal length");
  const std::size_t K1 = U.size() - 1;  // K + 1
  C lhs(0), rhs(0);
  for (std::size_t k = 0; k < K1; ++k) {
    lhs += U[k + 1] * (V[k] - V[k + 1]);
    rhs += V[k] * (U[k + 1] - U[k]);
  }
  const C boundary = U[0] * V[0] - U[K1] * V[K1];
  return mag(C(lhs - rhs - boundary));
}

// Magnitude scale of the products entering abel_check; defect / (eps * scale)
// is the defect in ulp-equivalents.
template <class C>
real_t<C> abel_scale(std::span<const C> U, std::span<const C> V) {
  if (U.size() != V.size() || U.size() < 2)
    throw LengthMismatch("abel_scale needs sequences of equal length");
  const std::size_t K1 = U.size() - 1;
  real_t<C> s = mag(C(U[0] * V[0])) + mag(C(U[K1] * V[K1]));
  for (std::size_t k = 0; k < K1; ++k)
    s += mag(U[k + 1]) * (mag(V[k]) + mag(V[k + 1])) + mag(V[k]) * (mag(U[k + 1]) + mag(U[k]));
  return s;
}

}  // namespace qcontig
