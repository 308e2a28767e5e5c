#pragma once

#include <functional>
#include <optional>

#include "torus.hpp"
#include "weights.hpp"

/// Maximal regular subalgebras by node deletion from the (extended) Dynkin
/// diagram, projection-matrix embeddings, and the discrete / continuous
/// centralizers their generators define.
namespace liecent {

enum class EmbeddingKind { Semisimple, Reductive };

/// A regular embedding: the sub's simple coroots as integer rows over the
/// ambient simple-coroot basis, plus the U_1 direction for reductive ones.
struct Embedding {
  SimpleAlgebra ambient;
  SumAlgebra sub;
  std::vector<std::vector<int>> factor_nodes;  // ambient diagram nodes per factor
  IMat coroot_rows;                            // one row per sub simple coroot
  std::optional<IVec> h1_row;                  // primitive U_1 direction (reductive)
  int deleted_node = 0;
  EmbeddingKind kind = EmbeddingKind::Semisimple;
};

/// Centralizer of a subalgebra embedding inside the simply connected group.
struct CentralizerDescription {
  EmbeddingKind kind = EmbeddingKind::Semisimple;
  FiniteAbelianGroup finite_part;         // semisimple case: all of C
  FiniteAbelianGroup quotient_by_center;  // semisimple case: C / Z(G)
  CongruenceForm relative_form;           // semisimple case: labels on weights
  RVec generator;                         // semisimple case: (1/m_k) sigma(omega-hat_k)
  bool has_u1 = false;
  FiniteAbelianGroup u1_quotient;         // reductive case: Z(G) / (Z(G) cap U_1)
  Int u1_center_intersection = 1;         // reductive case: |Z(G) cap U_1|
  IVec h1_form;                           // reductive case: integer label form
};

namespace detail {

inline bool is_prime(const Int& m) {
  if (m < 2) return false;
  for (Int d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

/// A connected diagram piece classified against the catalog: its type and the
/// node order under which the pairing submatrix equals the type's Cartan matrix.
struct ClassifiedComponent {
  AlgebraType type;
  std::vector<int> order;
};

using PairFn = std::function<Int(int, int)>;

inline std::vector<std::vector<int>> connected_components(const std::vector<int>& nodes,
                                                          const PairFn& pair) {
  std::vector<std::vector<int>> comps;
  std::set<int> left(nodes.begin(), nodes.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t t = 0; t < comp.size(); ++t) {
      for (auto it = left.begin(); it != left.end();) {
        if (pair(comp[t], *it) != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());  // by smallest node
  return comps;
}

/// Walk a path graph from an endpoint; the component must be a chain.
inline std::vector<int> walk_chain(const std::vector<int>& comp, const PairFn& pair, int start) {
  std::vector<int> order{start};
  std::set<int> seen{start};
  for (;;) {
    int cur = order.back(), next = -1;
    for (int v : comp)
      if (!seen.count(v) && pair(cur, v) != 0) {
        next = v;
        break;
      }
    if (next < 0) break;
    order.push_back(next);
    seen.insert(next);
  }
  return order;
}

inline bool matches_cartan(const std::vector<int>& order, const PairFn& pair, const IMat& a) {
  int r = static_cast<int>(order.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Int expect = i == j ? Int(2) : a[i][j];
      if (pair(order[i], order[j]) != expect) return false;
    }
  return true;
}

/// Classify one connected component of a Dynkin (sub)diagram.  The ambient
/// series biases only the naming of the rank-2 double-bond component, which is
/// B_2 and C_2 at once (their numberings are interchanged).
inline ClassifiedComponent classify_component(const std::vector<int>& comp, const PairFn& pair,
                                              char ambient_series) {
  int r = static_cast<int>(comp.size());
  if (r == 1) return {AlgebraType{'A', 1}, comp};

  int doubles = 0, triples = 0;
  std::map<int, int> degree;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Int p = pair(comp[i], comp[j]), q = pair(comp[j], comp[i]);
      if (p == 0) continue;
      ++degree[comp[i]];
      ++degree[comp[j]];
      Int m = std::max(boost::multiprecision::abs(p), boost::multiprecision::abs(q));
      if (m == 2) ++doubles;
      if (m == 3) ++triples;
    }

  auto pick_best = [&](const std::vector<AlgebraType>& types,
                       const std::vector<std::vector<int>>& perms) -> ClassifiedComponent {
    for (const AlgebraType& t : types) {
      IMat a = detail::build_cartan(t);
      std::optional<std::vector<int>> best;
      for (const auto& p : perms)
        if (static_cast<int>(p.size()) == r && matches_cartan(p, pair, a))
          if (!best || p < *best) best = p;
      if (best) return {t, *best};
    }
    throw InternalError("diagram component does not match any catalog type");
  };

  if (triples > 0) {
    // G_2: first node long, i.e. pairing -3 from first into second
    std::vector<int> p1{comp[0], comp[1]}, p2{comp[1], comp[0]};
    return pick_best({AlgebraType{'G', 2}}, {p1, p2});
  }

  std::vector<int> endpoints;
  for (int v : comp)
    if (degree[v] == 1) endpoints.push_back(v);

  if (doubles > 0) {
    if (r == 2) {
      AlgebraType t = ambient_series == 'C' ? AlgebraType{'C', 2} : AlgebraType{'B', 2};
      std::vector<int> p1{comp[0], comp[1]}, p2{comp[1], comp[0]};
      return pick_best({t}, {p1, p2});
    }
    // chains: B_r, C_r, or F_4
    std::vector<std::vector<int>> perms;
    for (int e : endpoints) perms.push_back(walk_chain(comp, pair, e));
    std::vector<AlgebraType> cand{AlgebraType{'B', r}, AlgebraType{'C', r}};
    if (r == 4) cand.push_back(AlgebraType{'F', 4});
    return pick_best(cand, perms);
  }

  int maxdeg = 0;
  for (auto& [v, d] : degree) maxdeg = std::max(maxdeg, d);
  if (maxdeg <= 2) {
    std::vector<std::vector<int>> perms;
    for (int e : endpoints) perms.push_back(walk_chain(comp, pair, e));
    return pick_best({AlgebraType{'A', r}}, perms);
  }
  if (maxdeg == 3) {
    int fork = -1;
    for (auto& [v, d] : degree)
      if (d == 3) fork = v;
    std::vector<std::vector<int>> branches;  // ordered outward from the fork
    for (int v : comp) {
      if (v == fork || pair(fork, v) == 0) continue;
      std::vector<int> br{v};
      std::set<int> seen{fork, v};
      for (;;) {
        int cur = br.back(), next = -1;
        for (int u : comp)
          if (!seen.count(u) && pair(cur, u) != 0) {
            next = u;
            break;
          }
        if (next < 0) break;
        br.push_back(next);
        seen.insert(next);
      }
      branches.push_back(std::move(br));
    }
    auto assemble = [&](const std::vector<int>& front, const std::vector<int>& back,
                        const std::vector<int>& tail) {
      std::vector<int> p(front.rbegin(), front.rend());
      p.push_back(fork);
      p.insert(p.end(), back.begin(), back.end());
      p.insert(p.end(), tail.begin(), tail.end());
      return p;
    };
    std::vector<std::size_t> idx{0, 1, 2};
    std::vector<std::vector<int>> perms;
    std::vector<AlgebraType> cand;
    std::vector<std::size_t> lens;
    for (const auto& b : branches) lens.push_back(b.size());
    std::sort(lens.begin(), lens.end());
    if (lens[0] == 1 && lens[1] == 1) {
      cand.push_back(AlgebraType{'D', r});
      // the chain runs through one branch; the other two are the last two nodes
      for (std::size_t li = 0; li < 3; ++li)
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t b = 0; b < 3; ++b) {
            if (a == b || a == li || b == li) continue;
            if (branches[a].size() != 1 || branches[b].size() != 1) continue;
            std::vector<int> tail{branches[a][0], branches[b][0]};
            perms.push_back(assemble(branches[li], {}, tail));
          }
    } else {
      cand.push_back(AlgebraType{'E', r});
      std::size_t front_len = r == 8 ? 4 : 2;
      std::size_t back_len = r == 7 ? 3 : 2;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
          if (a == b) continue;
          std::size_t c = 3 - a - b;
          if (branches[a].size() != front_len || branches[b].size() != back_len ||
              branches[c].size() != 1)
            continue;
          perms.push_back(assemble(branches[a], branches[b], branches[c]));
        }
    }
    return pick_best(cand, perms);
  }
  throw InternalError("diagram component does not match any catalog type");
}

/// Classify every component and assemble the embedding skeleton.
inline Embedding build_embedding(const SimpleAlgebra& g, const std::vector<int>& retained,
                                 const PairFn& pair, int deleted_node, EmbeddingKind kind) {
  Embedding emb;
  emb.ambient = g;
  emb.deleted_node = deleted_node;
  emb.kind = kind;
  std::vector<SimpleAlgebra> factors;
  for (const auto& comp : connected_components(retained, pair)) {
    ClassifiedComponent c = classify_component(comp, pair, g.type.series);
    factors.push_back(catalog(c.type));
    emb.factor_nodes.push_back(c.order);
    for (int node : c.order) {
      IVec row(g.rank, Int(0));
      if (node == 0) {
        for (int j = 0; j < g.rank; ++j) row[j] = -g.comarks[j];
      } else {
        row[node - 1] = 1;
      }
      emb.coroot_rows.push_back(std::move(row));
    }
  }
  emb.sub = SumAlgebra::of(std::move(factors));
  return emb;
}

}  // namespace detail

/// Delete a prime-mark node from the extended diagram, producing the maximal
/// regular semisimple subalgebra of equal rank.  Type A ambients are rejected
/// (every such deletion there returns the whole algebra).
inline Embedding delete_node_semisimple(const SimpleAlgebra& g, int k) {
  if (g.type.series == 'A')
    throw DomainError("ambient type " + g.name() +
                      " is not supported: extended-diagram node deletion in type A never "
                      "produces a proper subalgebra");
  if (k < 1 || k > g.rank)
    throw DomainError("node index " + std::to_string(k) + " out of range for " + g.name());
  Int mark = g.marks[k - 1];
  if (!detail::is_prime(mark))
    throw DomainError("node " + std::to_string(k) + " of " + g.name() + " has mark " +
                      mark.str() + ", which is not prime; no equal-rank semisimple "
                      "subalgebra arises from this deletion");
  std::vector<int> retained;
  for (int i = 0; i <= g.rank; ++i)
    if (i != k) retained.push_back(i);
  const ExtendedDiagram& ext = g.extended;
  auto pair = [&ext](int i, int j) { return ext.pairing[i][j]; };
  return detail::build_embedding(g, retained, pair, k, EmbeddingKind::Semisimple);
}

/// Delete a mark-1 node from the ordinary diagram, producing the maximal
/// regular reductive subalgebra (semisimple part plus a one-dimensional
/// center H_1 in the direction of omega-hat_k).
inline Embedding delete_node_reductive(const SimpleAlgebra& g, int k) {
  if (k < 1 || k > g.rank)
    throw DomainError("node index " + std::to_string(k) + " out of range for " + g.name());
  if (mark_one_nodes(g).empty())
    throw DomainError(g.name() + " has no mark-1 node: every reductive maximal regular "
                      "subalgebra arises from a mark-1 deletion");
  if (g.marks[k - 1] != 1)
    throw DomainError("node " + std::to_string(k) + " of " + g.name() + " has mark " +
                      g.marks[k - 1].str() + "; a reductive deletion requires mark 1");
  std::vector<int> retained;
  for (int i = 1; i <= g.rank; ++i)
    if (i != k) retained.push_back(i);
  auto pair = [&g](int i, int j) { return g.cartan[i - 1][j - 1]; };
  Embedding emb = detail::build_embedding(g, retained, pair, k, EmbeddingKind::Reductive);
  emb.h1_row = primitive_integer(dual_fundamental_coweight(g, k));
  return emb;
}

/// Build a validated embedding from explicit coroot rows.  The pairing matrix
/// of the rows must reproduce the claimed sub's Cartan matrix block-exactly;
/// a reductive embedding additionally carries an h1 row orthogonal (under the
/// coroot inner product) to every coroot row.
inline Embedding embedding_from_projection(const SimpleAlgebra& g, const SumAlgebra& sub,
                                           const IMat& rows,
                                           std::optional<IVec> h1 = std::nullopt,
                                           int deleted_node = 0) {
  if (static_cast<int>(rows.size()) != sub.total_rank)
    throw ValidationError("projection has " + std::to_string(rows.size()) +
                          " coroot rows but the claimed subalgebra " + sub.name() + " has rank " +
                          std::to_string(sub.total_rank));
  for (const IVec& r : rows)
    if (static_cast<int>(r.size()) != g.rank)
      throw ValidationError("projection rows must have " + std::to_string(g.rank) +
                            " columns for ambient " + g.name());

  // expected block-diagonal Cartan matrix of the claimed sub
  int n = sub.total_rank;
  IMat expected(n, IVec(n, Int(0)));
  for (std::size_t f = 0; f < sub.factors.size(); ++f) {
    int off = sub.offsets[f];
    const IMat& a = sub.factors[f].cartan;
    for (int i = 0; i < sub.factors[f].rank; ++i)
      for (int j = 0; j < sub.factors[f].rank; ++j) expected[off + i][off + j] = a[i][j];
  }

  std::vector<RVec> rr;
  for (const IVec& r : rows) rr.push_back(to_rational(r));
  for (int i = 0; i < n; ++i) {
    Rat nrm = coweight_inner(g, rr[i], rr[i]);
    if (nrm == 0) throw ValidationError("coroot row " + std::to_string(i + 1) + " is null");
    for (int j = 0; j < n; ++j) {
      Rat p = 2 * coweight_inner(g, rr[i], rr[j]) / nrm;
      if (p != Rat(expected[i][j]))
        throw ValidationError("pairing entry (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + "): expected " + expected[i][j].str() +
                              ", computed " +
                              (denominator(p) == 1 ? numerator(p).str()
                                                   : numerator(p).str() + "/" +
                                                         denominator(p).str()));
    }
  }

  Embedding emb;
  emb.ambient = g;
  emb.sub = sub;
  emb.coroot_rows = rows;
  emb.deleted_node = deleted_node;
  emb.kind = EmbeddingKind::Semisimple;
  if (h1) {
    const IVec& v = *h1;
    if (static_cast<int>(v.size()) != g.rank)
      throw ValidationError("h1 row must have " + std::to_string(g.rank) + " entries");
    if (primitive_integer(to_rational(v)) != v)
      throw ValidationError("h1 row must be primitive with positive first nonzero entry");
    for (int i = 0; i < n; ++i)
      if (coweight_inner(g, to_rational(v), rr[i]) != 0)
        throw ValidationError("h1 row is not orthogonal to coroot row " + std::to_string(i + 1));
    emb.h1_row = v;
    emb.kind = EmbeddingKind::Reductive;
  }
  return emb;
}

/// Project an ambient weight onto the sub: coroot rows give the sub
/// omega-coordinates; the h1 row (when present) gives the U_1 label.
inline std::pair<Weight, std::optional<Int>> project_weight(const Embedding& emb,
                                                            const Weight& w) {
  Weight out;
  for (const IVec& row : emb.coroot_rows) out.push_back(dot(row, w));
  std::optional<Int> label;
  if (emb.h1_row) label = dot(*emb.h1_row, w);
  return {std::move(out), label};
}

/// Transport omega-hat_k through an embedding: express it over the retained
/// extended coroots (the canonical deletion basis), then recombine with the
/// embedding's rows.  For the canonical embedding this returns omega-hat_k.
inline RVec transport_coweight(const SimpleAlgebra& g, int k, const Embedding& emb) {
  Embedding canonical = delete_node_semisimple(g, k);
  if (canonical.coroot_rows.size() != emb.coroot_rows.size())
    throw ValidationError("embedding rank does not match the canonical deletion at node " +
                          std::to_string(k));
  RMat basis_t(g.rank, RVec(canonical.coroot_rows.size()));
  for (std::size_t t = 0; t < canonical.coroot_rows.size(); ++t)
    for (int j = 0; j < g.rank; ++j) basis_t[j][t] = Rat(canonical.coroot_rows[t][j]);
  auto coeff = solve(basis_t, dual_fundamental_coweight(g, k));
  if (!coeff) throw InternalError("retained coroots do not span the coweight space");
  RVec out(g.rank, Rat(0));
  for (std::size_t t = 0; t < emb.coroot_rows.size(); ++t)
    for (int j = 0; j < g.rank; ++j) out[j] += (*coeff)[t] * Rat(emb.coroot_rows[t][j]);
  return out;
}

/// Discrete centralizer of a semisimple node deletion: generated by the
/// center generators and (1/m_k) sigma(omega-hat_k).
inline CentralizerDescription discrete_centralizer(const SimpleAlgebra& g, int k,
                                                   const Embedding& emb) {
  Int mark = g.marks[k - 1];
  RVec sigma = transport_coweight(g, k, emb);
  RVec gen = scale(Rat(1, mark), sigma);

  std::vector<RVec> zgens;
  for (int j : mark_one_nodes(g)) zgens.push_back(dual_fundamental_coweight(g, j));
  std::vector<RVec> cgens = zgens;
  cgens.push_back(gen);

  CentralizerDescription c;
  c.kind = EmbeddingKind::Semisimple;
  c.finite_part = finite_abelian_structure(cgens, g.rank);
  c.quotient_by_center = lattice_quotient(cgens, zgens, g.rank, /*want_generators=*/false);
  c.relative_form = eigenvalue_form(canonical_torus_element(gen));
  c.generator = canonical_torus_element(gen);
  return c;
}

/// Continuous centralizer of a reductive node deletion: U_1 in the h1
/// direction times the center, described by Z(G)/(Z(G) cap U_1) and the
/// integer label form h1.
inline CentralizerDescription continuous_centralizer(const SimpleAlgebra& g, int k,
                                                     const Embedding& emb) {
  if (!emb.h1_row)
    throw ValidationError("continuous centralizer requires an embedding with an h1 row");
  if (g.marks[k - 1] != 1)
    throw DomainError("node " + std::to_string(k) + " of " + g.name() + " has mark " +
                      g.marks[k - 1].str() + "; a continuous centralizer requires mark 1");
  const IVec& h1 = *emb.h1_row;

  // Z(G) cap U_1 = <exp(2 pi i (1/c) h1)> where c = gcd of the root pairings of h1
  Int c0 = 0;
  for (int j = 0; j < g.rank; ++j) {
    Int p = 0;
    for (int i = 0; i < g.rank; ++i) p += g.cartan[j][i] * h1[i];
    c0 = gcd(c0, p);
  }
  if (c0 == 0) throw InternalError("h1 direction pairs trivially with every root");
  RVec inter = canonical_torus_element(scale(Rat(1, c0), to_rational(h1)));

  std::vector<RVec> zgens;
  for (int j : mark_one_nodes(g)) zgens.push_back(dual_fundamental_coweight(g, j));

  CentralizerDescription c;
  c.kind = EmbeddingKind::Reductive;
  c.has_u1 = true;
  c.u1_center_intersection = element_order(inter);
  c.u1_quotient = lattice_quotient(zgens, {inter}, g.rank, /*want_generators=*/false);
  c.finite_part = c.u1_quotient;
  c.h1_form = h1;
  return c;
}

/// The per-factor center generators used for pulled-back congruence forms:
/// the standard cyclic generator(s) of each factor's center.
inline std::vector<RVec> factor_center_generators(const SimpleAlgebra& f) {
  int n = f.rank;
  switch (f.type.series) {
    case 'A': return {dual_fundamental_coweight(f, n)};
    case 'B': return {dual_fundamental_coweight(f, 1)};
    case 'C': return {dual_fundamental_coweight(f, n)};
    case 'D':
      if (n % 2 == 0)
        return {dual_fundamental_coweight(f, 1), dual_fundamental_coweight(f, n)};
      return {dual_fundamental_coweight(f, n)};
    case 'E':
      if (n == 6) return {dual_fundamental_coweight(f, 1)};
      if (n == 7) return {dual_fundamental_coweight(f, 6)};
      return {};
    default: return {};
  }
}

/// Pull each factor's center generator(s) back through the embedding rows,
/// yielding congruence forms on ambient weights.  One list per factor.
inline std::vector<std::vector<CongruenceForm>> subalgebra_center_forms(const Embedding& emb) {
  std::vector<std::vector<CongruenceForm>> out;
  for (std::size_t f = 0; f < emb.sub.factors.size(); ++f) {
    const SimpleAlgebra& fac = emb.sub.factors[f];
    int off = emb.sub.offsets[f];
    std::vector<CongruenceForm> forms;
    for (const RVec& gen : factor_center_generators(fac)) {
      RVec pulled(emb.ambient.rank, Rat(0));
      for (int i = 0; i < fac.rank; ++i)
        for (int j = 0; j < emb.ambient.rank; ++j)
          pulled[j] += gen[i] * Rat(emb.coroot_rows[off + i][j]);
      forms.push_back(eigenvalue_form(canonical_torus_element(pulled)));
    }
    out.push_back(std::move(forms));
  }
  return out;
}

/// Invariant factors of a direct sum of cyclic groups (one list per summand):
/// the Smith normal form of the diagonal relation matrix.
inline std::vector<Int> combine_invariant_factors(const std::vector<std::vector<Int>>& parts) {
  std::vector<Int> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  if (all.empty()) return {};
  IMat diag(all.size(), IVec(all.size(), Int(0)));
  for (std::size_t i = 0; i < all.size(); ++i) diag[i][i] = all[i];
  SmithResult s = smith_normal_form(diag);
  std::vector<Int> out;
  for (const Int& d : s.diagonal())
    if (d > 1) out.push_back(d);
  return out;
}

/// The types of the root subsystem annihilated by an integer linear form h on
/// omega-coordinates: filter the root system to the kernel of h, extract the
/// base (kernel-positive roots not expressible as sums of two kernel-positive
/// roots), and classify its components.  Validates printed U_1 directions.
inline std::vector<AlgebraType> kernel_base_types(const SimpleAlgebra& g, const IVec& h) {
  std::set<IVec> kernel_pos;  // alpha coordinates, positive half
  std::map<IVec, Weight> omega_of;
  for (const Root& r : g.positive_roots) {
    Int v = 0;
    for (int j = 0; j < g.rank; ++j) v += h[j] * r.omega[j];
    if (v == 0) {
      kernel_pos.insert(r.alpha);
      omega_of[r.alpha] = r.omega;
    }
  }
  std::vector<IVec> base;
  for (const IVec& b : kernel_pos) {
    bool decomposable = false;
    for (const IVec& c : kernel_pos) {
      IVec d(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) d[i] = b[i] - c[i];
      if (d != IVec(b.size(), Int(0)) && kernel_pos.count(d)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base.push_back(b);
  }
  // pairing matrix of the base, then classify components
  int r = static_cast<int>(base.size());
  IMat pairing(r, IVec(r, Int(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      RVec bi = to_rational(IVec(omega_of[base[i]].begin(), omega_of[base[i]].end()));
      RVec bj = to_rational(IVec(omega_of[base[j]].begin(), omega_of[base[j]].end()));
      Rat p = 2 * weight_inner(g, bi, bj) / weight_inner(g, bj, bj);
      if (denominator(p) != 1) throw InternalError("base pairing not integral");
      pairing[i][j] = numerator(p);
    }
  std::vector<int> ids(r);
  for (int i = 0; i < r; ++i) ids[i] = i;
  auto pair = [&pairing](int i, int j) { return pairing[i][j]; };
  std::vector<AlgebraType> types;
  for (const auto& comp : detail::connected_components(ids, pair))
    types.push_back(detail::classify_component(comp, pair, g.type.series).type);
  std::sort(types.begin(), types.end());
  return types;
}

}  // namespace liecent
