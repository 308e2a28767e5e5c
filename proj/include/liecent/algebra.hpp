#pragma once

#include <algorithm>
#include <set>
#include <string>

#include "numeric.hpp"

/// Catalog of compact simple Lie algebras: Cartan matrices in the fixed node
/// numbering used throughout this library, highest-root marks, dual
/// fundamental coweights, invariant quadratic forms, root systems, and
/// extended (affine) Dynkin diagrams.
namespace liecent {

/// Series letter and rank, e.g. {'D', 5}.
struct AlgebraType {
  char series = 'A';
  int rank = 0;

  bool operator==(const AlgebraType&) const = default;
  auto operator<=>(const AlgebraType&) const = default;

  std::string name() const { return std::string(1, series) + std::to_string(rank); }
};

/// Throws DomainError unless the (series, rank) pair denotes a simple algebra:
/// A n>=1, B n>=2, C n>=2, D n>=4, E n in {6,7,8}, F n=4, G n=2.
inline void validate_type(const AlgebraType& t) {
  int n = t.rank;
  bool ok = false;
  switch (t.series) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n == 6 || n == 7 || n == 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw DomainError("no simple algebra of type " + std::string(1, t.series) +
                      std::to_string(n) + ": rank out of bounds for the series");
}

/// A root in both coordinate systems: alpha (simple-root basis, integers) and
/// omega (fundamental-weight basis, the values on the simple coroots).
struct Root {
  IVec alpha;
  Weight omega;
};

/// Extended Dynkin diagram: pairing matrix over nodes {0,...,n} where node 0
/// carries the negative of the highest root, plus the marks (node 0 has mark 1).
struct ExtendedDiagram {
  IMat pairing;  // (n+1) x (n+1); pairing[i][j] = <alpha_i, alpha_j-check>
  IVec marks;    // size n+1, marks[0] = 1

  int node_count() const { return static_cast<int>(marks.size()); }

  /// Neighbors of node i (nodes j != i with nonzero pairing), ascending.
  std::vector<int> neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < node_count(); ++j)
      if (j != i && pairing[i][j] != 0) out.push_back(j);
    return out;
  }
};

/// One simple algebra with every derived datum precomputed.
struct SimpleAlgebra {
  AlgebraType type;
  int rank = 0;
  IMat cartan;          // A[i][j] = <alpha_{i+1}, alpha_{j+1}-check>, 0-based storage
  Int det_cartan = 0;   // determinant of the Cartan matrix
  IVec marks;           // highest root in the simple-root basis
  IVec comarks;         // highest coroot in the simple-coroot basis
  IVec symmetrizer;     // integer d with diag(d) * A symmetric positive definite
  RVec root_norms;      // (alpha_i, alpha_i) / 2, long roots normalized to 1
  RMat cartan_inv;      // A^{-1}; column j-1 is the dual fundamental coweight j
  RMat quad_form;       // Gram matrix of the fundamental weights
  RMat coweight_gram;   // Gram matrix of the simple coroots
  ExtendedDiagram extended;
  std::vector<Root> roots;           // all roots, deterministic order
  std::vector<Root> positive_roots;  // the positive half

  std::string name() const { return type.name(); }

  /// Cartan row for node i (1-based) as a weight: the omega-coordinates of
  /// the simple root alpha_i.
  Weight simple_root_weight(int i) const {
    Weight w(cartan[i - 1].begin(), cartan[i - 1].end());
    return w;
  }
};

namespace detail {

/// Base Cartan matrix for a validated type, 0-based storage.
inline IMat build_cartan(const AlgebraType& t) {
  int n = t.rank;
  IMat a(n, IVec(n, Int(0)));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) {  // single bond between 1-based nodes
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (t.series) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n is the short root
      break;
    case 'C':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n is the long root
      break;
    case 'D':
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case 'E':
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      bond(n == 8 ? 5 : 3, n);
      break;
    case 'F':
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 long, alpha_2 short
      a[1][0] = -1;
      break;
  }
  return a;
}

/// Squared-length halves d_i = (alpha_i, alpha_i)/2 from the Cartan matrix,
/// normalized so long roots have d = 1.  Uses l_i A_{ji} = l_j A_{ij} along
/// the connected diagram.
inline RVec build_root_norms(const IMat& a) {
  int n = static_cast<int>(a.size());
  RVec l(n, Rat(0));
  l[0] = 1;
  // propagate across edges until stable (diagram is connected)
  for (int pass = 0; pass < n; ++pass)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && a[i][j] != 0 && l[i] != 0)
          l[j] = l[i] * Rat(a[j][i]) / Rat(a[i][j]);
  Rat longest = 0;
  for (const Rat& x : l) longest = std::max(longest, x);
  for (Rat& x : l) x /= longest;
  return l;
}

/// All roots by reflection closure from the simple roots; deterministic order
/// (sorted by alpha-coordinates).
inline std::vector<Root> build_roots(const IMat& a) {
  int n = static_cast<int>(a.size());
  std::set<IVec> seen;
  std::vector<IVec> frontier;
  for (int i = 0; i < n; ++i) {
    IVec e(n, Int(0));
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const IVec& c : frontier) {
      for (int j = 0; j < n; ++j) {
        Int pair = 0;  // <beta, alpha_j-check> = sum_i c_i A_{ij}
        for (int i = 0; i < n; ++i) pair += c[i] * a[i][j];
        IVec r = c;
        r[j] -= pair;
        if (seen.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Root> roots;
  roots.reserve(seen.size());
  for (const IVec& c : seen) {
    Weight w(n, Int(0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) w[j] += c[i] * a[i][j];
    roots.push_back({c, std::move(w)});
  }
  return roots;
}

}  // namespace detail

/// Build (and fully precompute) the algebra of the given type.
/// Throws DomainError when the rank is out of bounds for the series.
inline SimpleAlgebra catalog(const AlgebraType& t) {
  validate_type(t);
  SimpleAlgebra g;
  g.type = t;
  g.rank = t.rank;
  int n = t.rank;
  g.cartan = detail::build_cartan(t);
  g.root_norms = detail::build_root_norms(g.cartan);

  g.symmetrizer.resize(n);
  for (int i = 0; i < n; ++i) {
    Rat s = 1 / g.root_norms[i];
    if (denominator(s) != 1) throw InternalError("symmetrizer not integral");
    g.symmetrizer[i] = numerator(s);
  }

  RMat ar = to_rational(g.cartan);
  g.det_cartan = numerator(det(ar));
  g.cartan_inv = invert(ar);

  g.quad_form.assign(n, RVec(n));
  g.coweight_gram.assign(n, RVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g.quad_form[i][j] = g.cartan_inv[i][j] * g.root_norms[j];
      g.coweight_gram[i][j] = Rat(g.cartan[i][j]) / g.root_norms[i];
    }

  g.roots = detail::build_roots(g.cartan);
  for (const Root& r : g.roots) {
    Int height = 0;
    for (const Int& c : r.alpha) height += c;
    if (height > 0) g.positive_roots.push_back(r);
  }

  // highest root: the positive root of maximal height
  const Root* top = nullptr;
  Int best = 0;
  for (const Root& r : g.positive_roots) {
    Int height = 0;
    for (const Int& c : r.alpha) height += c;
    if (top == nullptr || height > best) {
      top = &r;
      best = height;
    }
  }
  g.marks = top->alpha;
  g.comarks.resize(n);
  for (int i = 0; i < n; ++i) {
    Rat c = Rat(g.marks[i]) * g.root_norms[i];
    if (denominator(c) != 1) throw InternalError("comarks not integral");
    g.comarks[i] = numerator(c);
  }

  // extended diagram: node 0 carries -theta
  g.extended.marks.resize(n + 1);
  g.extended.marks[0] = 1;
  for (int i = 0; i < n; ++i) g.extended.marks[i + 1] = g.marks[i];
  g.extended.pairing.assign(n + 1, IVec(n + 1, Int(0)));
  g.extended.pairing[0][0] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.extended.pairing[i + 1][j + 1] = g.cartan[i][j];
  for (int j = 0; j < n; ++j) {
    Int p0j = 0, pj0 = 0;  // <-theta, alpha_j-check> and <alpha_j, -theta-check>
    for (int i = 0; i < n; ++i) {
      p0j -= g.marks[i] * g.cartan[i][j];
      pj0 -= g.comarks[i] * g.cartan[j][i];
    }
    g.extended.pairing[0][j + 1] = p0j;
    g.extended.pairing[j + 1][0] = pj0;
  }
  return g;
}

inline SimpleAlgebra catalog(char series, int rank) { return catalog(AlgebraType{series, rank}); }

/// Dual fundamental coweight omega-hat_j (1-based j) in simple-coroot
/// coordinates: column j of the inverse Cartan matrix.
inline RVec dual_fundamental_coweight(const SimpleAlgebra& g, int j) {
  if (j < 1 || j > g.rank)
    throw DomainError("node index " + std::to_string(j) + " out of range for " + g.name());
  RVec w(g.rank);
  for (int i = 0; i < g.rank; ++i) w[i] = g.cartan_inv[i][j - 1];
  return w;
}

/// Gram matrix of the fundamental weights under the invariant form with long
/// roots of squared length 2; (lambda, mu) = lambda^T Q mu on omega-coordinates.
inline const RMat& quadratic_form(const SimpleAlgebra& g) { return g.quad_form; }

/// Highest root in omega-coordinates.
inline Weight highest_root(const SimpleAlgebra& g) {
  Weight w(g.rank, Int(0));
  for (int j = 0; j < g.rank; ++j)
    for (int i = 0; i < g.rank; ++i) w[j] += g.marks[i] * g.cartan[i][j];
  return w;
}

/// Extended Dynkin diagram of the algebra.
inline const ExtendedDiagram& extended_diagram(const SimpleAlgebra& g) { return g.extended; }

/// Invariant-form inner product of two weights given in omega-coordinates.
inline Rat weight_inner(const SimpleAlgebra& g, const RVec& a, const RVec& b) {
  return dot(a, mat_vec(g.quad_form, b));
}

inline Rat weight_inner(const SimpleAlgebra& g, const Weight& a, const Weight& b) {
  return weight_inner(g, to_rational(a), to_rational(b));
}

/// Inner product of two coweights given in simple-coroot coordinates.
inline Rat coweight_inner(const SimpleAlgebra& g, const RVec& a, const RVec& b) {
  return dot(a, mat_vec(g.coweight_gram, b));
}

}  // namespace liecent
