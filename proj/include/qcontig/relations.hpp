#pragma once

#include <qcontig/classical.hpp>
#include <qcontig/qpochhammer.hpp>
#include <qcontig/scalar.hpp>
#include <qcontig/series.hpp>

#include <array>
#include <bitset>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace qcontig {

enum class Param : std::uint8_t { a, b, c, d, e, alpha, beta, gamma };
inline constexpr std::array<std::string_view, 8> kParamNames = {"a", "b", "c", "d",
                                                                 "e", "alpha", "beta", "gamma"};
inline std::string_view name_of(Param p) { return kParamNames[static_cast<std::size_t>(p)]; }

template <class C>
struct ParamSet {
  std::array<C, 8> values{};
  std::bitset<8> present;
  C q{0};

  ParamSet& set(Param p, const C& v) {
    values[static_cast<std::size_t>(p)] = v;
    present.set(static_cast<std::size_t>(p));
    return *this;
  }
  bool has(Param p) const { return present.test(static_cast<std::size_t>(p)); }
  const C& get(Param p) const {
    if (!has(p)) throw DomainViolation("parameter '" + std::string(name_of(p)) + "' not supplied");
    return values[static_cast<std::size_t>(p)];
  }
};

template <class To, class From>
ParamSet<To> convert(const ParamSet<From>& p) {
  ParamSet<To> out;
  for (std::size_t i = 0; i < 8; ++i)
    if (p.present.test(i)) out.set(static_cast<Param>(i), from_cplx<To>(to_cplx(p.values[i])));
  out.q = from_cplx<To>(to_cplx(p.q));
  return out;
}

enum class Family { pattern, two_term, three_term, proposition, corollary_classical };
enum class Side { q, classical };
enum class FactorKind { unity, rational, qpoch_infinite_ratio, gamma_ratio };

std::string_view to_string(Family f);
std::string_view to_string(Side s);
std::string_view to_string(FactorKind k);
std::optional<Family> parse_family(std::string_view s);

// Perturbs one right-hand coefficient by a multiplicative factor.
struct Mutation {
  std::string relation_id;
  int term = 0;
  double factor = 1.01;
};

// Modes for running a relation body:
//   evaluate      all constraints enforced, series summed
//   check         all constraints enforced, nothing summed (used by the sampler)
//   record        nothing enforced, predicate labels collected
//   coefficients  only coefficient denominators enforced (q -> 1 comparisons)
enum class BuildMode { evaluate, check, record, coefficients };

inline constexpr double kArgumentBound = 0.9;
// Every sampled unit-argument series keeps Re(sum b - sum a) at least this large.
inline constexpr double kClassicalMargin = 3.0;

template <class C>
struct Term {
  FactorKind kind = FactorKind::rational;
  C coefficient{1};
  std::optional<SeriesSpec<C>> series;
};

template <class C>
class Builder {
 public:
  using scalar_type = C;
  using R = real_t<C>;

  Builder(const ParamSet<C>& params, const PrecisionPolicy& policy, BuildMode mode)
      : params_(params), policy_(policy), mode_(mode), thr_(policy.singular_threshold()) {
    require(mag2(params_.q) < R(1) && mag2(params_.q) > R(0), "0 < |q| < 1", "");
  }

  void set_mutation(int term, double factor) {
    mutation_term_ = term;
    mutation_factor_ = factor;
  }
  C operator()(Param p) const { return params_.get(p); }
  const C& q() const { return params_.q; }
  BuildMode mode() const { return mode_; }

  // num / den, with "den != 0" recorded as a constraint.
  C div(const C& num, const C& den, std::string_view label) {
    require(mag2(den) >= thr_ * thr_, label, " != 0");
    return num / den;
  }

  SeriesSpec<C> phi(std::initializer_list<C> num, std::initializer_list<C> den, const C& z,
                    std::string_view zlabel) {
    return make_q(SeriesKind::q_phi, num, den, z, zlabel);
  }
  SeriesSpec<C> phi_star(std::initializer_list<C> num, std::initializer_list<C> den, const C& z,
                         std::string_view zlabel) {
    return make_q(SeriesKind::q_phi_star, num, den, z, zlabel);
  }
  SeriesSpec<C> F(std::initializer_list<C> num, std::initializer_list<C> den) {
    return make_classical(SeriesKind::classical_F, num, den);
  }
  SeriesSpec<C> F_star(std::initializer_list<C> num, std::initializer_list<C> den) {
    return make_classical(SeriesKind::classical_F_star, num, den);
  }

  void lhs(SeriesSpec<C> s) {
    if (mode_ == BuildMode::coefficients && !is_q_kind(s.kind))
      require(margin(s) > R(1), "Re(sum b - sum a) > 1 on the left-hand side", "");
    lhs_ = std::move(s);
  }

  void term(const C& coefficient, SeriesSpec<C> s) {
    push({FactorKind::rational, coefficient, std::move(s)});
  }
  void term(SeriesSpec<C> s) { push({FactorKind::unity, C(1), std::move(s)}); }

  // rational * prod (num;q)_inf / prod (den;q)_inf
  void closed_qpoch(const C& rational, std::initializer_list<C> num, std::initializer_list<C> den,
                    std::string_view label) {
    C v = rational;
    if (mode_ != BuildMode::record) {
      try {
        v *= qpoch_ratio_infinite<C>(std::span<const C>(num.begin(), num.size()),
                                     std::span<const C>(den.begin(), den.size()), params_.q,
                                     policy_);
      } catch (const SingularFactor&) {
        violate(std::string(label) + " != 0");
      }
    } else {
      record(std::string(label) + " != 0");
    }
    push({FactorKind::qpoch_infinite_ratio, v, std::nullopt});
  }

  // rational * prod Gamma(num) / prod Gamma(den)
  void closed_gamma(const C& rational, std::initializer_list<C> num, std::initializer_list<C> den) {
    static constexpr std::string_view label = "Gamma arguments inside the accuracy box, off the poles";
    C v = rational;
    if (mode_ != BuildMode::record) {
      if constexpr (std::is_same_v<C, cplx>) {
        bool ok = true;
        for (const C& x : num) ok = ok && in_gamma_box(x);
        for (const C& x : den) ok = ok && in_gamma_box(x);
        if (!ok) violate(std::string(label));
        try {
          v *= gamma_ratio(std::span<const C>(num.begin(), num.size()),
                           std::span<const C>(den.begin(), den.size()), policy_);
        } catch (const Pole&) {
          violate(std::string(label));
        }
      } else {
        throw DomainViolation("Gamma ratios are evaluated in standard precision only");
      }
    } else {
      record(std::string(label));
    }
    push({FactorKind::gamma_ratio, v, std::nullopt});
  }

  const SeriesSpec<C>& lhs_spec() const { return lhs_; }
  const std::vector<Term<C>>& terms() const { return terms_; }
  const std::vector<std::string>& recorded() const { return recorded_; }

 private:
  SeriesSpec<C> make_q(SeriesKind kind, std::initializer_list<C> num, std::initializer_list<C> den,
                       const C& z, std::string_view zlabel) {
    if (mode_ != BuildMode::coefficients) {
      const R bound(kArgumentBound);
      require(mag2(z) <= bound * bound, zlabel, "", "|", "| <= 0.9");
      for (const C& b : den) {
        bool ok = true;
        if (mode_ != BuildMode::record) {
          C w = b;
          for (long k = 0; k <= policy_.max_terms && mag2(w) >= R(0.25); ++k, w *= params_.q)
            ok = ok && mag2(C(1) - w) >= thr_ * thr_;
        }
        require(ok, "series denominators avoid q^-m", "");
      }
    }
    return SeriesSpec<C>{kind, std::vector<C>(num), std::vector<C>(den), params_.q, z};
  }

  SeriesSpec<C> make_classical(SeriesKind kind, std::initializer_list<C> num,
                               std::initializer_list<C> den) {
    SeriesSpec<C> s{kind, std::vector<C>(num), std::vector<C>(den), C(0), C(1)};
    if (mode_ == BuildMode::coefficients) return s;
    require(margin(s) >= R(kClassicalMargin), "Re(sum b - sum a) >= 3 for every series (minus 1 if starred)", "");
    bool ok = true;
    if (mode_ != BuildMode::record) {
      using std::round;
      for (const C& b : s.denominators) {
        const R k = -round(re(b));
        ok = ok && !(k >= 0 && mag(C(b + C(k))) < R(0.01));
      }
    }
    require(ok, "series denominators stay off the non-positive integers", "");
    return s;
  }

  static R margin(const SeriesSpec<C>& s) {
    R m(0);
    for (const C& b : s.denominators) m += re(b);
    for (const C& a : s.numerators) m -= re(a);
    if (is_star(s.kind)) m -= R(1);
    return m;
  }

  void push(Term<C> t) {
    if (static_cast<int>(terms_.size()) == mutation_term_)
      t.coefficient *= C(mutation_factor_);
    terms_.push_back(std::move(t));
  }

  void require(bool ok, std::string_view label, std::string_view suffix,
               std::string_view prefix = "", std::string_view tail = "") {
    if (mode_ == BuildMode::record) {
      record(std::string(prefix) + std::string(label) + std::string(tail) + std::string(suffix));
      return;
    }
    if (!ok) violate(std::string(prefix) + std::string(label) + std::string(tail) + std::string(suffix));
  }

  void record(std::string s) {
    for (const auto& r : recorded_)
      if (r == s) return;
    recorded_.push_back(std::move(s));
  }

  [[noreturn]] void violate(std::string s) { throw ConstraintViolated(std::move(s)); }

  ParamSet<C> params_;
  PrecisionPolicy policy_;
  BuildMode mode_;
  R thr_;
  int mutation_term_ = -1;
  double mutation_factor_ = 1.0;
  SeriesSpec<C> lhs_;
  std::vector<Term<C>> terms_;
  std::vector<std::string> recorded_;
};

template <class C>
using BuildFn = std::function<void(Builder<C>&)>;

struct Evaluators {
  BuildFn<cplx> standard;
  BuildFn<cplx34> d34;
  BuildFn<cplx50> d50;
  BuildFn<cplx100> d100;

  template <class C>
  const BuildFn<C>& get() const {
    if constexpr (std::is_same_v<C, cplx>) return standard;
    else if constexpr (std::is_same_v<C, cplx34>) return d34;
    else if constexpr (std::is_same_v<C, cplx50>) return d50;
    else return d100;
  }
};

struct SampleRange {
  Param param;
  double lo, hi;
};

struct Relation {
  std::string id;
  Family family = Family::pattern;
  Side side = Side::q;
  std::vector<Param> free_params;
  std::vector<std::string> constraints;
  std::string paper_anchor;
  std::string notes;
  std::string counterpart;  // classical entries: id of the q-relation they descend from
  // Derived q-relations: the relation they specialise and how the parameters map.
  std::string parent;
  std::function<ParamSet<cplx>(const ParamSet<cplx>&)> to_parent;
  std::vector<SampleRange> ranges;  // classical sampling box, one per free parameter
  Evaluators eval;
};

const std::vector<Relation>& registry();
const Relation& find_relation(std::string_view id);
std::vector<std::string> relation_ids();
// numeric-aware ordering, so that thm-4.2 sorts before thm-4.10
bool id_less(std::string_view x, std::string_view y);

template <class C>
struct Instantiated {
  SeriesValue<C> lhs;
  std::vector<Term<C>> terms;
  std::vector<C> rhs_values;
  double residual = 0;
};

template <class C>
Builder<C> run_builder(const Relation& rel, const ParamSet<C>& p, const PrecisionPolicy& policy,
                       BuildMode mode, const Mutation* mutation = nullptr) {
  const auto& fn = rel.eval.get<C>();
  if (!fn)
    throw DomainViolation("relation " + rel.id + " is evaluated in standard precision only");
  ParamSet<C> pp = p;
  if (rel.side == Side::classical) pp.q = C(0.5);  // unused by classical bodies
  Builder<C> b(pp, policy, mode);
  if (mutation && mutation->relation_id == rel.id) b.set_mutation(mutation->term, mutation->factor);
  fn(b);
  return b;
}

// q-side sums run three orders tighter than the policy tolerance:
// a large coefficient in front of a small series would otherwise turn the
// series' own truncation error into residual.
template <class C>
PrecisionPolicy series_policy_for(const Relation& rel, const PrecisionPolicy& policy) {
  PrecisionPolicy sp = policy;
  if (rel.side == Side::classical)
    sp.max_terms = std::max(policy.max_terms, 400000L);
  else
    sp.tol = std::max(policy.tol * 1e-3, std::pow(10.0, 2 - scalar_traits<C>::digits10));
  return sp;
}

namespace detail {

template <class C>
struct wider;
template <>
struct wider<cplx> { using type = cplx34; };
template <>
struct wider<cplx34> { using type = cplx50; };
template <>
struct wider<cplx50> { using type = cplx100; };

template <class To, class From>
To rescale(const From& z) {
  using RT = real_t<To>;
  return To(RT(z.real()), RT(z.imag()));
}

// Sums whose rounding estimate eats into the residual budget are redone in
// the next wider type and rounded back.
template <class C>
SeriesValue<C> sum_for_relation(const SeriesSpec<C>& s, const PrecisionPolicy& series_policy,
                                const PrecisionPolicy& policy, Side side) {
  SeriesValue<C> v = eval_series(s, series_policy);
  if constexpr (!std::is_same_v<C, cplx100>) {
    if (side == Side::q && v.converged && v.rounding_bound > policy.tol / 10) {
      using W = typename wider<C>::type;
      auto up = [](const std::vector<C>& xs) {
        std::vector<W> r;
        for (const C& x : xs) r.push_back(rescale<W>(x));
        return r;
      };
      const SeriesSpec<W> sw{s.kind, up(s.numerators), up(s.denominators), rescale<W>(s.base),
                             rescale<W>(s.argument)};
      PrecisionPolicy pw = PrecisionPolicy::extended(scalar_traits<W>::digits10);
      pw.tol = series_policy.tol;
      pw.max_terms = series_policy.max_terms;
      const SeriesValue<W> w = eval_series(sw, pw);
      v.value = rescale<C>(w.value);
      v.terms_used = w.terms_used;
      v.tail_bound = w.tail_bound;
      v.rounding_bound = scalar_traits<C>::unit_roundoff();
      v.converged = w.converged;
    }
  }
  return v;
}

}  // namespace detail

template <class C>
Instantiated<C> instantiate(const Relation& rel, const ParamSet<C>& p,
                            const PrecisionPolicy& policy, const Mutation* mutation = nullptr) {
  using R = real_t<C>;
  for (Param fp : rel.free_params) (void)p.get(fp);
  Builder<C> b = run_builder(rel, p, policy, BuildMode::evaluate, mutation);
  const PrecisionPolicy series_policy = series_policy_for<C>(rel, policy);

  Instantiated<C> out;
  out.lhs = detail::sum_for_relation(b.lhs_spec(), series_policy, policy, rel.side);
  if (!out.lhs.converged) throw NotConverged(rel.id + ": left-hand series did not converge");
  out.terms = b.terms();
  R denom = mag(out.lhs.value) + R(1);
  C rhs(0);
  for (std::size_t i = 0; i < out.terms.size(); ++i) {
    const Term<C>& t = out.terms[i];
    C v = t.coefficient;
    if (t.series) {
      const SeriesValue<C> s = detail::sum_for_relation(*t.series, series_policy, policy, rel.side);
      if (!s.converged)
        throw NotConverged(rel.id + ": right-hand series " + std::to_string(i) + " did not converge");
      v *= s.value;
    }
    out.rhs_values.push_back(v);
    rhs += v;
    denom += mag(v);
  }
  out.residual = to_double(R(mag(C(out.lhs.value - rhs)) / denom));
  return out;
}

Instantiated<cplx> instantiate(std::string_view id, const ParamSet<cplx>& p,
                               const PrecisionPolicy& policy = PrecisionPolicy::standard(),
                               const Mutation* mutation = nullptr);

}  // namespace qcontig
