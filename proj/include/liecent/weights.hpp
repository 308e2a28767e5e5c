#pragma once

#include <map>
#include <queue>
#include <set>
#include <vector>

#include "algebra.hpp"

/// Weyl-group actions, orbits, multiplicity computation by the Freudenthal
/// recursion, dimensions, and full weight systems (including direct sums).
namespace liecent {

/// Default cap on the total multiplicity a weight-system enumeration may reach.
inline constexpr long long kDefaultWeightCapacity = 10'000'000;

/// Reflect a weight (omega-coordinates) in the hyperplane of simple root
/// alpha_i (1-based): m -> m - m_i * (Cartan row i).
inline Weight simple_reflection(const SimpleAlgebra& g, int i, const Weight& w) {
  if (i < 1 || i > g.rank)
    throw DomainError("node index " + std::to_string(i) + " out of range for " + g.name());
  Weight out = w;
  Int c = w[i - 1];
  if (c == 0) return out;
  for (int j = 0; j < g.rank; ++j) out[j] -= c * g.cartan[i - 1][j];
  return out;
}

inline bool is_dominant(const Weight& w) {
  for (const Int& x : w)
    if (x < 0) return false;
  return true;
}

/// The dominant Weyl-chamber representative of a weight.
inline Weight dominant_representative(const SimpleAlgebra& g, Weight w) {
  for (;;) {
    int neg = -1;
    for (int i = 0; i < g.rank; ++i)
      if (w[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return w;
    w = simple_reflection(g, neg + 1, w);
  }
}

/// Weyl-group order by the classical product formulas.
inline Int weyl_order(const SimpleAlgebra& g) {
  auto factorial = [](int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  int n = g.rank;
  switch (g.type.series) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return factorial(n) << n;
    case 'D': return factorial(n) << (n - 1);
    case 'E': return n == 6 ? Int(51840) : n == 7 ? Int(2903040) : Int(696729600);
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw InternalError("unknown series");
}

/// Full Weyl orbit of a dominant weight, sorted lexicographically.
/// Throws DomainError when the seed is not dominant.
inline std::vector<Weight> weyl_orbit(const SimpleAlgebra& g, const Weight& seed) {
  if (!is_dominant(seed))
    throw DomainError("weyl_orbit requires a dominant seed weight");
  std::set<Weight> seen{seed};
  std::vector<Weight> frontier{seed};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier)
      for (int i = 1; i <= g.rank; ++i) {
        Weight r = simple_reflection(g, i, w);
        if (seen.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

/// Coordinates of a weight in the simple-root basis: c with A^T c = w.
inline RVec alpha_coordinates(const SimpleAlgebra& g, const RVec& w) {
  RVec c(g.rank, Rat(0));
  // c = (A^{-1})^T w, i.e. c_i = sum_j inv[j][i] * w_j
  for (int i = 0; i < g.rank; ++i)
    for (int j = 0; j < g.rank; ++j) c[i] += g.cartan_inv[j][i] * w[j];
  return c;
}

/// Level of w below lambda: the coordinate sum of lambda - w in the
/// simple-root basis (rational in general, a nonnegative integer inside a rep).
inline Rat level_below(const SimpleAlgebra& g, const Weight& lambda, const Weight& w) {
  RVec diff(g.rank);
  for (int i = 0; i < g.rank; ++i) diff[i] = Rat(lambda[i] - w[i]);
  RVec c = alpha_coordinates(g, diff);
  Rat s = 0;
  for (const Rat& x : c) s += x;
  return s;
}

/// Dimension of the irrep with the given dominant highest weight (Weyl formula).
inline Int weyl_dimension(const SimpleAlgebra& g, const Weight& lambda) {
  if (!is_dominant(lambda)) throw DomainError("highest weight must be dominant");
  RVec lam = to_rational(lambda);
  Rat num = 1, den = 1;
  for (const Root& b : g.positive_roots) {
    RVec beta = to_rational(IVec(b.omega.begin(), b.omega.end()));
    Rat lb = weight_inner(g, lam, beta);
    Rat rb = 0;
    for (int j = 0; j < g.rank; ++j)
      for (int i = 0; i < g.rank; ++i) rb += g.quad_form[i][j] * beta[j];  // (rho, beta)
    num *= lb + rb;
    den *= rb;
  }
  Rat d = num / den;
  if (denominator(d) != 1) throw InternalError("Weyl dimension not integral");
  return numerator(d);
}

/// Dominant weights of the irrep V(lambda) with their multiplicities,
/// computed by the Freudenthal recursion in increasing level order.
inline std::map<Weight, Int> freudenthal_table(const SimpleAlgebra& g, const Weight& lambda) {
  if (!is_dominant(lambda)) throw DomainError("highest weight must be dominant");
  RVec lam = to_rational(lambda);
  Weight rho(g.rank, Int(1));
  RVec lam_rho = lam;
  for (Rat& x : lam_rho) x += 1;
  Rat lam_rho_sq = weight_inner(g, lam_rho, lam_rho);
  Rat lam_sq = weight_inner(g, lam, lam);

  // enumerate the weight hull by subtracting simple roots, bounded by |w|<=|lambda|
  std::set<Weight> hull{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier)
      for (int i = 0; i < g.rank; ++i) {
        Weight v = w;
        for (int j = 0; j < g.rank; ++j) v[j] -= g.cartan[i][j];
        if (hull.count(v)) continue;
        if (weight_inner(g, to_rational(v), to_rational(v)) > lam_sq) continue;
        hull.insert(v);
        next.push_back(v);
      }
    frontier = std::move(next);
  }

  // dominant candidates sorted by level, then lexicographically
  std::vector<std::pair<Rat, Weight>> dominants;
  for (const Weight& w : hull)
    if (is_dominant(w)) dominants.push_back({level_below(g, lambda, w), w});
  std::sort(dominants.begin(), dominants.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });

  std::map<Weight, Int> table;
  auto mult_of = [&](const Weight& w) -> Int {
    auto it = table.find(dominant_representative(g, w));
    return it == table.end() ? Int(0) : it->second;
  };
  for (const auto& [lvl, mu] : dominants) {
    if (mu == lambda) {
      table[mu] = 1;
      continue;
    }
    RVec mu_rho = to_rational(mu);
    for (Rat& x : mu_rho) x += 1;
    Rat denom = lam_rho_sq - weight_inner(g, mu_rho, mu_rho);
    Rat numer = 0;
    // mu + j*beta must stay below lambda: j is bounded by level / height(beta)
    Rat level = lvl;
    for (const Root& b : g.positive_roots) {
      RVec beta = to_rational(IVec(b.omega.begin(), b.omega.end()));
      Int height = 0;
      for (const Int& c : b.alpha) height += c;
      Int jmax = numerator(level) / (denominator(level) * height);
      for (Int j = 1; j <= jmax; ++j) {
        Weight w = mu;
        for (int t = 0; t < g.rank; ++t) w[t] = mu[t] + j * b.omega[t];
        Int m = mult_of(w);
        if (m != 0) numer += 2 * Rat(m) * weight_inner(g, to_rational(w), beta);
      }
    }
    if (denom == 0) throw InternalError("Freudenthal denominator vanished");
    Rat m = numer / denom;
    if (denominator(m) != 1) throw InternalError("Freudenthal multiplicity not integral");
    if (numerator(m) > 0) table[mu] = numerator(m);
  }
  return table;
}

/// Multiplicity of an arbitrary weight mu in V(lambda) (0 when absent).
inline Int freudenthal_multiplicity(const SimpleAlgebra& g, const Weight& lambda,
                                    const Weight& mu) {
  auto table = freudenthal_table(g, lambda);
  auto it = table.find(dominant_representative(g, mu));
  return it == table.end() ? Int(0) : it->second;
}

/// All weights of V(lambda) with multiplicities.  Throws CapacityError when
/// the total multiplicity (the dimension) exceeds max_weights.
inline std::map<Weight, Int> weight_system(const SimpleAlgebra& g, const Weight& lambda,
                                           long long max_weights = kDefaultWeightCapacity) {
  Int dim = weyl_dimension(g, lambda);
  if (dim > max_weights)
    throw CapacityError("weight system of " + g.name() + " exceeds the capacity of " +
                        std::to_string(max_weights) + " weights");
  std::map<Weight, Int> out;
  for (const auto& [mu, m] : freudenthal_table(g, lambda))
    for (const Weight& w : weyl_orbit(g, mu)) out[w] = m;
  return out;
}

/// Direct sum of simple algebras; weights are concatenated omega-coordinates.
struct SumAlgebra {
  std::vector<SimpleAlgebra> factors;
  std::vector<int> offsets;  // factor i occupies [offsets[i], offsets[i]+rank_i)
  int total_rank = 0;

  static SumAlgebra of(std::vector<SimpleAlgebra> f) {
    SumAlgebra s;
    s.factors = std::move(f);
    for (const SimpleAlgebra& g : s.factors) {
      s.offsets.push_back(s.total_rank);
      s.total_rank += g.rank;
    }
    return s;
  }

  std::string name() const {
    if (factors.empty()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "+";
      out += factors[i].name();
    }
    return out;
  }

  std::vector<Weight> split(const Weight& w) const {
    std::vector<Weight> parts;
    for (std::size_t i = 0; i < factors.size(); ++i)
      parts.emplace_back(w.begin() + offsets[i], w.begin() + offsets[i] + factors[i].rank);
    return parts;
  }

  Weight join(const std::vector<Weight>& parts) const {
    Weight w;
    for (const Weight& p : parts) w.insert(w.end(), p.begin(), p.end());
    return w;
  }
};

inline Int weyl_dimension(const SumAlgebra& s, const Weight& lambda) {
  Int d = 1;
  auto parts = s.split(lambda);
  for (std::size_t i = 0; i < s.factors.size(); ++i) d *= weyl_dimension(s.factors[i], parts[i]);
  return d;
}

inline Rat level_below(const SumAlgebra& s, const Weight& lambda, const Weight& w) {
  Rat lvl = 0;
  auto lp = s.split(lambda), wp = s.split(w);
  for (std::size_t i = 0; i < s.factors.size(); ++i) lvl += level_below(s.factors[i], lp[i], wp[i]);
  return lvl;
}

/// Weight system of a direct-sum irrep: the product of the factor systems.
inline std::map<Weight, Int> weight_system(const SumAlgebra& s, const Weight& lambda,
                                           long long max_weights = kDefaultWeightCapacity) {
  Int dim = weyl_dimension(s, lambda);
  if (dim > max_weights)
    throw CapacityError("weight system of " + s.name() + " exceeds the capacity of " +
                        std::to_string(max_weights) + " weights");
  std::map<Weight, Int> out;
  out[{}] = 1;
  auto parts = s.split(lambda);
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    auto factor_ws = weight_system(s.factors[i], parts[i], max_weights);
    std::map<Weight, Int> next;
    for (const auto& [prefix, m1] : out)
      for (const auto& [w, m2] : factor_ws) {
        Weight joined = prefix;
        joined.insert(joined.end(), w.begin(), w.end());
        next[joined] = m1 * m2;
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace liecent
