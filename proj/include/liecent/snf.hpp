#pragma once

#include <cstdlib>

#include "numeric.hpp"

/// Exact integer lattice algorithms: Smith normal form with unimodular
/// transform tracking, Hermite-style row bases, and lattice quotients.
namespace liecent {

/// u * input * v = d with u, v unimodular and d diagonal with a divisibility
/// chain d_1 | d_2 | ...; v_inv is the inverse of v.
struct SmithResult {
  IMat u, d, v, v_inv;
  std::vector<Int> diagonal() const {
    std::vector<Int> out;
    std::size_t n = std::min(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t i = 0; i < n; ++i) out.push_back(d[i][i]);
    return out;
  }
};

inline IMat identity_matrix(std::size_t n) {
  IMat m(n, IVec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Smith normal form by exact integer elimination.
inline SmithResult smith_normal_form(IMat m) {
  std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  SmithResult res;
  res.u = identity_matrix(rows);
  res.v = identity_matrix(cols);
  res.v_inv = identity_matrix(cols);

  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    std::swap(res.u[a], res.u[b]);
  };
  auto row_sub = [&](std::size_t a, std::size_t b, const Int& q) {  // row a -= q * row b
    for (std::size_t j = 0; j < cols; ++j) m[a][j] -= q * m[b][j];
    for (std::size_t j = 0; j < rows; ++j) res.u[a][j] -= q * res.u[b][j];
  };
  auto row_negate = [&](std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) m[a][j] = -m[a][j];
    for (std::size_t j = 0; j < rows; ++j) res.u[a][j] = -res.u[a][j];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(res.v[i][a], res.v[i][b]);
    std::swap(res.v_inv[a], res.v_inv[b]);
  };
  auto col_sub = [&](std::size_t a, std::size_t b, const Int& q) {  // col a -= q * col b
    for (std::size_t i = 0; i < rows; ++i) m[i][a] -= q * m[i][b];
    for (std::size_t i = 0; i < cols; ++i) res.v[i][a] -= q * res.v[i][b];
    for (std::size_t j = 0; j < cols; ++j) res.v_inv[b][j] += q * res.v_inv[a][j];
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot of minimal absolute value in the trailing block
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (!found || boost::multiprecision::abs(m[i][j]) <
                           boost::multiprecision::abs(m[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q = m[i][t] / m[t][t];
        row_sub(i, t, q);
        if (m[i][t] != 0) {  // remainder becomes the new, smaller pivot
          row_swap(i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q = m[t][j] / m[t][t];
        col_sub(j, t, q);
        if (m[t][j] != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // enforce divisibility of the trailing block by the pivot
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            row_sub(t, i, Int(-1));  // pull row i into row t, then re-eliminate
            clean = false;
          }
    }
    if (m[t][t] < 0) row_negate(t);
    ++t;
  }
  res.d = std::move(m);
  return res;
}

/// Hermite-style row basis of the lattice spanned by the given integer rows:
/// row-echelon with positive pivots and entries above each pivot reduced into
/// [0, pivot).  Returns the nonzero rows (one per pivot column).
inline IMat lattice_row_basis(IMat rows) {
  std::size_t r = rows.size(), n = rows.empty() ? 0 : rows[0].size();
  std::size_t p = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < n && p < r; ++c) {
    // gcd-eliminate column c below row p
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = p; i < r; ++i)
        if (rows[i][c] != 0 &&
            (best == r || boost::multiprecision::abs(rows[i][c]) <
                              boost::multiprecision::abs(rows[best][c])))
          best = i;
      if (best == r) break;
      std::swap(rows[p], rows[best]);
      bool done = true;
      for (std::size_t i = p + 1; i < r; ++i) {
        if (rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[p][c];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[p][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (p < r && rows[p][c] != 0) {
      if (rows[p][c] < 0)
        for (std::size_t j = 0; j < n; ++j) rows[p][j] = -rows[p][j];
      pivot_cols.push_back(c);
      ++p;
    }
  }
  rows.resize(p);
  // reduce entries above each pivot for a canonical basis
  for (std::size_t k = p; k-- > 0;) {
    std::size_t c = pivot_cols[k];
    for (std::size_t i = 0; i < k; ++i) {
      Int q = rows[i][c] / rows[k][c];
      if (rows[i][c] - q * rows[k][c] < 0) q -= 1;  // floor division
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[k][j];
    }
  }
  return rows;
}

/// A finitely generated finite abelian group presented as a torus subgroup:
/// invariant factors (each >= 2, divisibility chain) with one realizing
/// generator per factor, given as a rational coweight with entries in [0, 1).
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;
  std::vector<RVec> generators;

  bool trivial() const { return invariant_factors.empty(); }
  Int order() const {
    Int o = 1;
    for (const Int& f : invariant_factors) o *= f;
    return o;
  }
};

/// Quotient (span_Z(a_gens) + Z^n) / (span_Z(b_gens) + Z^n) of two rational
/// cofinite lattices; the denominator must be contained in the numerator.
/// Returns invariant factors >= 2 and, when requested, realizing generators.
inline FiniteAbelianGroup lattice_quotient(const std::vector<RVec>& a_gens,
                                           const std::vector<RVec>& b_gens, int n,
                                           bool want_generators = true) {
  FiniteAbelianGroup out;
  if (n == 0) return out;
  Int den = 1;
  for (const RVec& v : a_gens)
    for (const Rat& x : v) den = lcm(den, denominator(x));
  for (const RVec& v : b_gens)
    for (const Rat& x : v) den = lcm(den, denominator(x));

  auto scaled = [&](const RVec& v) {
    IVec w(n);
    for (int i = 0; i < n; ++i) w[i] = numerator(v[i]) * (den / denominator(v[i]));
    return w;
  };
  IMat a_rows, b_rows;
  for (const RVec& v : a_gens) a_rows.push_back(scaled(v));
  for (const RVec& v : b_gens) b_rows.push_back(scaled(v));
  for (int j = 0; j < n; ++j) {
    IVec e(n, Int(0));
    e[j] = den;
    a_rows.push_back(e);
    b_rows.push_back(e);
  }

  IMat h = lattice_row_basis(a_rows);
  if (static_cast<int>(h.size()) != n) throw InternalError("lattice basis is rank deficient");
  RMat ht = transpose(to_rational(h));

  // express the denominator lattice in the h basis; must be integral
  IMat rel;
  for (const IVec& b : b_rows) {
    auto x = solve(ht, to_rational(b));
    if (!x) throw InternalError("denominator lattice escapes the numerator lattice");
    IVec xi(n);
    for (int i = 0; i < n; ++i) {
      if (denominator((*x)[i]) != 1)
        throw InternalError("denominator lattice escapes the numerator lattice");
      xi[i] = numerator((*x)[i]);
    }
    rel.push_back(std::move(xi));
  }

  SmithResult snf = smith_normal_form(rel);
  for (int i = 0; i < n; ++i) {
    Int d = snf.d[i][i];
    if (d < 0) d = -d;
    if (d <= 1) continue;
    out.invariant_factors.push_back(d);
    if (want_generators) {
      // generator i of the quotient is row i of v_inv in the h basis
      RVec gen(n, Rat(0));
      for (int t = 0; t < n; ++t)
        for (int j = 0; j < n; ++j) gen[j] += Rat(snf.v_inv[i][t] * h[t][j], den);
      for (Rat& x : gen) x = frac_part(x);
      out.generators.push_back(std::move(gen));
    }
  }
  return out;
}

}  // namespace liecent
