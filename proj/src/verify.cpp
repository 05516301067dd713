#include <qcontig/verify.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

namespace qcontig {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool admissible(const Relation& rel, const ParamSet<cplx>& p) {
  try {
    run_builder(rel, p, PrecisionPolicy::standard(), BuildMode::check);
    return true;
  } catch (const Error&) {
    return false;
  }
}

template <class F>
decltype(auto) with_tier(const PrecisionPolicy& policy, F&& f) {
  if (policy.mode == PrecisionMode::standard) return f(cplx{});
  if (policy.decimal_digits <= 34) return f(cplx34{});
  if (policy.decimal_digits <= 50) return f(cplx50{});
  return f(cplx100{});
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view stream)
    : engine_(splitmix64(seed ^ splitmix64(fnv1a(stream)))) {}

SampleBatch sample_params(const Relation& rel, std::uint64_t seed, int count) {
  SampleBatch batch{rel.id, seed, {}, 0};
  Rng rng(seed, rel.id);
  for (int i = 0; i < count; ++i) {
    int attempts = 0;
    for (;;) {
      ParamSet<cplx> p;
      if (rel.side == Side::q) {
        for (Param fp : rel.free_params) {
          const double r = rng.uniform(0.1, 0.9);
          const double t = rng.uniform(-std::numbers::pi, std::numbers::pi);
          p.set(fp, std::polar(r, t));
        }
        p.q = rng.uniform(0.2, 0.8);
      } else {
        for (const SampleRange& sr : rel.ranges) p.set(sr.param, rng.uniform(sr.lo, sr.hi));
        p.q = 0.5;
      }
      if (admissible(rel, p)) {
        batch.points.push_back(p);
        break;
      }
      ++batch.rejected;
      if (++attempts >= kMaxRejections)
        throw SamplingExhausted(rel.id + ": no admissible point after 10000 draws");
    }
  }
  return batch;
}

double pass_threshold(const Relation& rel, const PrecisionPolicy& policy) {
  return rel.side == Side::classical ? kClassicalThreshold : 5 * policy.tol;
}

VerificationReport verify_relation(const Relation& rel, std::uint64_t seed, int count,
                                   const PrecisionPolicy& policy, const Mutation* mutation) {
  policy.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.relation_id = rel.id;
  rep.side = rel.side;
  // classical corollaries always run on binary64
  rep.policy = rel.side == Side::classical && policy.mode == PrecisionMode::extended
                   ? PrecisionPolicy::standard(1e-12, policy.max_terms)
                   : policy;
  rep.threshold = pass_threshold(rel, rep.policy);

  SampleBatch batch;
  try {
    batch = sample_params(rel, seed, count);
  } catch (const SamplingExhausted& e) {
    rep.failures.push_back({ParamSet<cplx>{}, std::numeric_limits<double>::quiet_NaN(), e.what()});
    rep.max_residual = std::numeric_limits<double>::infinity();
    return rep;
  }
  rep.samples = static_cast<int>(batch.points.size());
  rep.rejected = batch.rejected;

  double sum = 0;
  for (const ParamSet<cplx>& p : batch.points) {
    try {
      const double r = with_tier(rep.policy, [&](auto tag) {
        using C = decltype(tag);
        return instantiate<C>(rel, convert<C>(p), rep.policy, mutation).residual;
      });
      sum += r;
      rep.max_residual = std::max(rep.max_residual, std::isnan(r) ? INFINITY : r);
      if (!(r < rep.threshold)) rep.failures.push_back({p, r, ""});
    } catch (const Error& e) {
      rep.max_residual = std::numeric_limits<double>::infinity();
      rep.failures.push_back({p, std::numeric_limits<double>::quiet_NaN(), e.what()});
    }
  }
  rep.mean_residual = rep.samples ? sum / rep.samples : 0;
  rep.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

VerificationReport verify_relation(std::string_view id, std::uint64_t seed, int count,
                                   const PrecisionPolicy& policy, const Mutation* mutation) {
  return verify_relation(find_relation(id), seed, count, policy, mutation);
}

std::vector<VerificationReport> verify_campaign(const std::vector<std::string>& ids,
                                                const CampaignOptions& opt) {
  std::vector<const Relation*> rels;
  for (const auto& id : ids) rels.push_back(&find_relation(id));
  std::vector<VerificationReport> out(rels.size());
  const Mutation* mut = opt.mutation ? &*opt.mutation : nullptr;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < rels.size();) {
      const Relation& r = *rels[i];
      const int n = r.side == Side::q ? opt.q_samples : opt.classical_samples;
      out[i] = verify_relation(r, opt.seed, n, opt.policy, mut);
    }
  };
  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return out;
}

// ---------------------------------------------------------------------------
// q -> 1

namespace {

template <class C>
std::vector<C> coefficients(const Builder<C>& b, const C& q) {
  std::vector<C> out;
  for (const Term<C>& t : b.terms()) {
    C v = t.coefficient;
    // starred q-series grow like 1/(1-q); compare (1-q) times the coefficient
    if (t.series && t.series->kind == SeriesKind::q_phi_star) v *= C(1) - q;
    out.push_back(v);
  }
  return out;
}

}  // namespace

LimitReport limit_check(std::string_view q_id, std::string_view classical_id,
                        const std::vector<double>& eps, std::uint64_t seed, int points) {
  const Relation& rq = find_relation(q_id);
  const Relation& rc = find_relation(classical_id);
  if (rq.side != Side::q || rc.side != Side::classical || rc.counterpart != rq.id)
    throw UnknownPair(std::string(q_id) + ":" + std::string(classical_id) +
                      " is not a recorded q/classical pair");
  if (eps.empty()) throw DomainViolation("at least one epsilon is required");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0 && eps[i] < 0.5)) throw DomainViolation("epsilon must lie in (0, 0.5)");
    if (i && !(eps[i] < eps[i - 1])) throw DomainViolation("epsilons must decrease strictly");
  }

  using CQ = cplx34;  // q-side coefficients cancel heavily near q = 1
  PrecisionPolicy qpol = PrecisionPolicy::extended(34);
  qpol.max_terms = std::numeric_limits<long>::max() / 2;
  const PrecisionPolicy cpol = PrecisionPolicy::standard();

  LimitReport rep;
  rep.q_relation_id = rq.id;
  rep.classical_id = rc.id;
  rep.epsilons = eps;
  rep.coefficient_gaps.assign(eps.size(), 0.0);
  rep.points = points;
  for (Param p : rc.free_params)
    rep.exponent_assignment.push_back(std::string(name_of(p)) + " -> q^" + std::string(name_of(p)));

  Rng rng(seed, "limit:" + rc.id);
  for (int n = 0; n < points; ++n) {
    std::vector<std::vector<double>> gaps;  // per epsilon, per term
    for (int attempts = 0;; ++attempts) {
      if (attempts >= kMaxRejections)
        throw SamplingExhausted(rc.id + ": no admissible exponent point");
      ParamSet<cplx> x;
      for (Param p : rc.free_params) x.set(p, rng.uniform(0.2, 2.5));
      x.q = 0.5;
      gaps.clear();
      try {
        const Builder<cplx> bc = run_builder(rc, x, cpol, BuildMode::coefficients);
        const std::vector<cplx> kc = coefficients(bc, cplx(0));
        bool tame = true;
        for (const cplx& k : kc) tame = tame && std::abs(k) <= 100;
        if (!tame) continue;
        for (double e : eps) {
          const mp_real<34> q = mp_real<34>(1) - mp_real<34>(e);
          const mp_real<34> lq = log(q);
          ParamSet<CQ> w;
          w.q = CQ(q);
          for (Param p : rq.free_params) {
            const double xv = x.get(p).real();
            w.set(p, CQ(exp(mp_real<34>(xv) * lq)));
          }
          const Builder<CQ> bq = run_builder(rq, w, qpol, BuildMode::coefficients);
          const std::vector<CQ> kq = coefficients(bq, w.q);
          if (kq.size() != kc.size()) throw DomainViolation("term counts differ across the pair");
          std::vector<double> g;
          for (std::size_t i = 0; i < kq.size(); ++i)
            g.push_back(std::abs(to_cplx(kq[i]) - kc[i]));
          gaps.push_back(std::move(g));
        }
      } catch (const ConstraintViolated&) {
        continue;
      } catch (const SingularFactor&) {
        continue;
      }
      break;
    }
    for (std::size_t i = 0; i < eps.size(); ++i)
      for (double g : gaps[i]) rep.coefficient_gaps[i] = std::max(rep.coefficient_gaps[i], g);
  }
  rep.decreasing = true;
  for (std::size_t i = 1; i < eps.size(); ++i)
    rep.decreasing = rep.decreasing && rep.coefficient_gaps[i] < rep.coefficient_gaps[i - 1];
  return rep;
}

}  // namespace qcontig
