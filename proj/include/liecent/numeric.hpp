#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/// Exact arithmetic primitives shared by every module: arbitrary-precision
/// integers and rationals, dense vectors/matrices over them, and exact
/// Gaussian elimination.  Nothing in the library ever touches floating point.
namespace liecent {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Integer weight in fundamental-weight (omega) coordinates.
using Weight = std::vector<Int>;
/// Integer vector / matrix (rows of coroot coordinates, Cartan matrices, ...).
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;
/// Rational vector / matrix (coweights in dual-coroot coordinates, inverses).
using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

/// Input outside an operation's mathematical domain (bad rank, bad node, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A supplied projection matrix failed validation against the claimed type.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A weight-system enumeration exceeded its configured capacity.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed (dimension mismatch, negative residual, ...).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// Floor residue in [0, m); requires m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Fractional part in [0, 1).
inline Rat frac_part(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  return Rat(mod_floor(n, d), d);
}

inline RVec to_rational(const IVec& v) {
  RVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline RMat to_rational(const IMat& m) {
  RMat out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = to_rational(m[i]);
  return out;
}

inline bool is_zero(const RVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

inline RVec add(const RVec& a, const RVec& b) {
  RVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RVec sub(const RVec& a, const RVec& b) {
  RVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline RVec scale(const Rat& c, const RVec& v) {
  RVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline Rat dot(const RVec& a, const RVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Row vector times matrix: (v M)_j = sum_i v_i M_ij.
inline RVec vec_mat(const RVec& v, const RMat& m) {
  RVec out(m.empty() ? 0 : m[0].size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j] += v[i] * m[i][j];
  return out;
}

/// Matrix times column vector.
inline RVec mat_vec(const RMat& m, const RVec& v) {
  RVec out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline RMat mat_mul(const RMat& a, const RMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RMat out(n, RVec(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
  return out;
}

inline RMat transpose(const RMat& m) {
  std::size_t r = m.size(), c = m.empty() ? 0 : m[0].size();
  RMat out(c, RVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out[j][i] = m[i][j];
  return out;
}

inline IMat transpose(const IMat& m) {
  std::size_t r = m.size(), c = m.empty() ? 0 : m[0].size();
  IMat out(c, IVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out[j][i] = m[i][j];
  return out;
}

/// Exact determinant by fraction-free-ish Gaussian elimination on rationals.
inline Rat det(RMat m) {
  std::size_t n = m.size();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

inline Rat det(const IMat& m) { return det(to_rational(m)); }

/// Exact inverse of a square rational matrix; throws on singular input.
inline RMat invert(RMat m) {
  std::size_t n = m.size();
  RMat inv(n, RVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw InternalError("matrix is singular");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rat piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/// Solve A x = b exactly; returns nullopt when no solution exists.
/// A need not be square; with multiple solutions an arbitrary one is returned.
inline std::optional<RVec> solve(RMat a, RVec b) {
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rat piv = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] /= piv;
    b[r] /= piv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][c] == 0) continue;
      Rat f = a[q][c];
      for (std::size_t j = c; j < cols; ++j) a[q][j] -= f * a[r][j];
      b[q] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q)
    if (b[q] != 0) return std::nullopt;
  RVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

/// Scale a rational vector to a primitive integer vector whose first nonzero
/// entry is positive; the zero vector maps to itself.
inline IVec primitive_integer(const RVec& v) {
  Int den = 1;
  for (const Rat& x : v) den = lcm(den, denominator(x));
  IVec w(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (den / denominator(v[i]));
    g = gcd(g, w[i]);
  }
  if (g == 0) return w;
  bool flip = false;
  for (const Int& x : w) {
    if (x != 0) {
      flip = x < 0;
      break;
    }
  }
  for (Int& x : w) {
    x /= g;
    if (flip) x = -x;
  }
  return w;
}

}  // namespace liecent
