#pragma once

#include <sstream>

#include "algebra.hpp"
#include "snf.hpp"

/// Finite subgroups of the maximal torus: element orders, canonical
/// representatives, invariant-factor structure, the center, and the
/// congruence forms that give the eigenvalue of a torus element on each
/// weight space.
namespace liecent {

/// Congruence form: weight m maps to (sum_i coeffs_i m_i) mod modulus.
/// Coefficients are canonical residues in [0, modulus); modulus 1 is trivial.
struct CongruenceForm {
  IVec coeffs;
  Int modulus = 1;

  bool operator==(const CongruenceForm&) const = default;
  bool trivial() const { return modulus == 1; }
};

/// Canonical representative of a torus element: every coordinate reduced
/// into [0, 1).
inline RVec canonical_torus_element(const RVec& t) {
  RVec out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = frac_part(t[i]);
  return out;
}

/// Order of exp(2 pi i t) modulo the coroot lattice: the lcm of the
/// coordinate denominators.
inline Int element_order(const RVec& t) {
  Int m = 1;
  for (const Rat& x : t) m = lcm(m, denominator(x));
  return m;
}

/// The congruence form of a torus element t: the minimal-modulus form with
/// evaluate(m) = M * (t . m) mod M on every weight m.
inline CongruenceForm eigenvalue_form(const RVec& t) {
  Int m = element_order(t);
  CongruenceForm f;
  f.coeffs.resize(t.size());
  Int g = m;
  for (std::size_t i = 0; i < t.size(); ++i) {
    f.coeffs[i] = mod_floor(numerator(t[i]) * (m / denominator(t[i])), m);
    g = gcd(g, f.coeffs[i]);
  }
  if (g > 1) {
    m /= g;
    for (Int& c : f.coeffs) c /= g;
  }
  f.modulus = m;
  return f;
}

/// Evaluate a congruence form on a weight, returning a residue in [0, modulus).
inline Int evaluate_form(const CongruenceForm& f, const Weight& m) {
  Int s = 0;
  for (std::size_t i = 0; i < f.coeffs.size() && i < m.size(); ++i) s += f.coeffs[i] * m[i];
  return mod_floor(s, f.modulus);
}

/// Structure of the finite subgroup of T generated by the given coweights
/// (modulo the coroot lattice): invariant factors with realizing generators.
inline FiniteAbelianGroup finite_abelian_structure(const std::vector<RVec>& gens, int rank) {
  return lattice_quotient(gens, {}, rank, /*want_generators=*/true);
}

/// The center of the simply connected group of g: generated by the dual
/// fundamental coweights at the mark-1 nodes.
inline FiniteAbelianGroup center_of(const SimpleAlgebra& g) {
  std::vector<RVec> gens;
  for (int k = 1; k <= g.rank; ++k)
    if (g.marks[k - 1] == 1) gens.push_back(dual_fundamental_coweight(g, k));
  return finite_abelian_structure(gens, g.rank);
}

/// Mark-1 nodes of g, ascending: the nodes whose coweights generate the center.
inline std::vector<int> mark_one_nodes(const SimpleAlgebra& g) {
  std::vector<int> out;
  for (int k = 1; k <= g.rank; ++k)
    if (g.marks[k - 1] == 1) out.push_back(k);
  return out;
}

/// Whether t lies on the one-parameter subgroup through direction w0
/// (a primitive integer coweight), modulo the coroot lattice:
/// t in Q * w0 + Z^n.  Exact rational test.
inline bool on_one_parameter_subgroup(const IVec& w0, const RVec& t) {
  int n = static_cast<int>(w0.size());
  int pivot = -1;
  for (int i = 0; i < n; ++i)
    if (w0[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot < 0) return is_zero(canonical_torus_element(t));
  // project along w0: v -> (v_j * w0_pivot - v_pivot * w0_j), kernel = Q w0
  auto project = [&](const RVec& v) {
    RVec out;
    for (int j = 0; j < n; ++j) {
      if (j == pivot) continue;
      out.push_back(v[j] * Rat(w0[pivot]) - v[pivot] * Rat(w0[j]));
    }
    return out;
  };
  IMat lattice;  // images of the coroot basis vectors (integral by construction)
  for (int k = 0; k < n; ++k) {
    RVec e(n, Rat(0));
    e[k] = 1;
    RVec img = project(e);
    IVec row(n - 1);
    for (int j = 0; j < n - 1; ++j) row[j] = numerator(img[j]);
    lattice.push_back(std::move(row));
  }
  RVec target = project(t);
  IMat h = lattice_row_basis(lattice);
  if (h.empty()) return is_zero(target);
  RMat ht = transpose(to_rational(h));
  auto x = solve(ht, target);
  if (!x) return false;
  for (const Rat& c : *x)
    if (denominator(c) != 1) return false;
  return true;
}

/// Human-readable finite group name: "Z_4 × Z_2" (largest factor first),
/// or "trivial".
inline std::string group_name(const FiniteAbelianGroup& grp) {
  if (grp.trivial()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = grp.invariant_factors.size(); i-- > 0;) {
    os << "Z_" << grp.invariant_factors[i].str();
    if (i != 0) os << " × ";
  }
  return os.str();
}

/// Render a congruence form as "m_2+m_4 mod 3"; the zero form renders as "0".
inline std::string form_to_string(const CongruenceForm& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    if (!first) os << "+";
    if (f.coeffs[i] != 1) os << f.coeffs[i].str();
    os << "m_" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  os << " mod " << f.modulus.str();
  return os.str();
}

/// Render an integer linear form such as "m_1-m_2+m_4-m_5" (no modulus).
inline std::string linear_form_to_string(const IVec& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Int c = coeffs[i];
    if (c < 0) {
      os << "-";
      c = -c;
    } else if (!first) {
      os << "+";
    }
    if (c != 1) os << c.str();
    os << "m_" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace liecent
