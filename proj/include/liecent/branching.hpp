#pragma once

#include "subalgebra.hpp"

/// Branching of an ambient irrep over a maximal regular subalgebra, with the
/// congruence (or U_1) label that the centralizer assigns to each summand.
namespace liecent {

/// One irreducible summand of a branching: highest weight of the sub-irrep,
/// its centralizer label, and its outer multiplicity.
struct LabeledSummand {
  Weight sub_highest;
  Int label = 0;
  Int multiplicity = 1;

  bool operator==(const LabeledSummand&) const = default;
};

/// A full branching: the per-weight projection table and the decomposition
/// into labeled summands.  label_modulus is empty for U_1 (integer) labels.
struct BranchingResult {
  Weight ambient_highest;
  std::vector<LabeledSummand> summands;
  std::optional<Int> label_modulus;

  struct TableRow {
    Weight ambient;
    Int multiplicity = 1;
    Weight image;
    Int label = 0;
  };
  std::vector<TableRow> table;  // ambient level order, then lexicographic
};

/// Project a full ambient weight system through the embedding, labelling each
/// image: keys are (sub weight, label), values are summed multiplicities.
inline std::map<std::pair<Weight, Int>, Int> project_system(
    const Embedding& emb, const std::map<Weight, Int>& system,
    const std::optional<CongruenceForm>& form) {
  std::map<std::pair<Weight, Int>, Int> out;
  for (const auto& [w, m] : system) {
    auto [image, u1] = project_weight(emb, w);
    Int label = form ? evaluate_form(*form, w) : *u1;
    out[{std::move(image), label}] += m;
  }
  return out;
}

/// Decompose one label class (a weight multiset of the sub) into irreducibles
/// by repeatedly peeling the maximal dominant weight.  Throws InternalError
/// when the multiset is not a nonnegative sum of sub weight systems.
inline std::vector<LabeledSummand> decompose_class(const SumAlgebra& sub, const Int& label,
                                                   std::map<Weight, Int> residual,
                                                   long long max_weights) {
  std::vector<LabeledSummand> out;
  auto level_key = [&sub](const Weight& w) {
    // height of w relative to the origin: coordinate sum in the root basis
    Rat lvl = 0;
    auto parts = sub.split(w);
    for (std::size_t i = 0; i < sub.factors.size(); ++i) {
      RVec c = alpha_coordinates(sub.factors[i], to_rational(parts[i]));
      for (const Rat& x : c) lvl += x;
    }
    return lvl;
  };
  for (;;) {
    // drop exhausted entries, detect negatives
    for (auto it = residual.begin(); it != residual.end();) {
      if (it->second < 0)
        throw InternalError("negative multiplicity residual while decomposing label class " +
                            label.str());
      it = it->second == 0 ? residual.erase(it) : std::next(it);
    }
    if (residual.empty()) break;
    const Weight* top = nullptr;
    Rat top_level = 0;
    for (const auto& [w, m] : residual) {
      if (!is_dominant(w)) continue;
      Rat lvl = level_key(w);
      if (top == nullptr || lvl > top_level || (lvl == top_level && w > *top)) {
        top = &w;
        top_level = lvl;
      }
    }
    if (top == nullptr)
      throw InternalError("label class " + label.str() +
                          " is not a weight multiset of " + sub.name());
    Weight head = *top;
    Int mult = residual[head];
    for (const auto& [w, m] : weight_system(sub, head, max_weights)) residual[w] -= mult * m;
    out.push_back({head, label, mult});
  }
  return out;
}

/// Decompose a labeled projected multiset into irreducible summands, one
/// label class at a time, ordered by descending class size (total projected
/// multiplicity), then sub highest weight, then label.
inline std::vector<LabeledSummand> decompose(const Embedding& emb,
                                             const std::map<std::pair<Weight, Int>, Int>& labeled,
                                             long long max_weights = kDefaultWeightCapacity) {
  std::map<Int, std::map<Weight, Int>> classes;
  std::map<Int, Int> class_size;
  for (const auto& [key, m] : labeled) {
    classes[key.second][key.first] += m;
    class_size[key.second] += m;
  }
  std::vector<LabeledSummand> out;
  for (auto& [label, residual] : classes)
    for (LabeledSummand& s : decompose_class(emb.sub, label, std::move(residual), max_weights))
      out.push_back(std::move(s));
  std::sort(out.begin(), out.end(),
            [&class_size](const LabeledSummand& a, const LabeledSummand& b) {
              const Int &sa = class_size.at(a.label), &sb = class_size.at(b.label);
              if (sa != sb) return sa > sb;
              if (a.sub_highest != b.sub_highest) return a.sub_highest < b.sub_highest;
              return a.label < b.label;
            });
  return out;
}

/// Reorder summands by the first row of the ambient projection table whose
/// image and label realize them: the order in which a top-down scan of the
/// weight system discovers each summand's highest weight.
inline void order_by_first_appearance(std::vector<LabeledSummand>& summands,
                                      const std::vector<BranchingResult::TableRow>& table) {
  auto first_row = [&table](const LabeledSummand& s) {
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i].image == s.sub_highest && table[i].label == s.label) return i;
    throw InternalError("summand highest weight never appears as a projected image");
  };
  std::vector<std::pair<std::size_t, LabeledSummand>> keyed;
  keyed.reserve(summands.size());
  for (LabeledSummand& s : summands) keyed.push_back({first_row(s), std::move(s)});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  summands.clear();
  for (auto& [idx, s] : keyed) summands.push_back(std::move(s));
}

/// Branch the irrep with the given highest weight over the embedding.
/// Labels come from the centralizer: the congruence form of the discrete
/// centralizer for semisimple embeddings, the integer h1 form for reductive
/// ones.  Dimension conservation is asserted on every call.
inline BranchingResult branch(const SimpleAlgebra& g, const Embedding& emb,
                              const Weight& highest,
                              long long max_weights = kDefaultWeightCapacity) {
  if (static_cast<int>(highest.size()) != g.rank)
    throw DomainError("highest weight must have " + std::to_string(g.rank) + " coordinates");
  BranchingResult res;
  res.ambient_highest = highest;

  std::optional<CongruenceForm> form;
  if (emb.kind == EmbeddingKind::Semisimple) {
    if (emb.deleted_node < 1)
      throw ValidationError(
          "semisimple branching labels need the deleted node recorded on the embedding");
    CentralizerDescription c = discrete_centralizer(g, emb.deleted_node, emb);
    form = c.relative_form;
    res.label_modulus = c.relative_form.modulus;
  } else if (!emb.h1_row) {
    throw ValidationError("reductive branching requires an embedding with an h1 row");
  }

  auto system = weight_system(g, highest, max_weights);

  // projection table in ambient (level, lexicographic) order
  std::vector<std::pair<Rat, BranchingResult::TableRow>> rows;
  for (const auto& [w, m] : system) {
    auto [image, u1] = project_weight(emb, w);
    Int label = form ? evaluate_form(*form, w) : *u1;
    rows.push_back({level_below(g, highest, w), {w, m, std::move(image), label}});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.ambient < b.second.ambient;
  });
  for (auto& [lvl, row] : rows) res.table.push_back(std::move(row));

  res.summands = decompose(emb, project_system(emb, system, form), max_weights);
  order_by_first_appearance(res.summands, res.table);

  Int total = 0;
  for (const LabeledSummand& s : res.summands)
    total += s.multiplicity * weyl_dimension(emb.sub, s.sub_highest);
  if (total != weyl_dimension(g, highest))
    throw InternalError("branching does not conserve dimension");
  return res;
}

/// Branch via the canonical deletion at node k: reductive for mark-1 nodes,
/// semisimple for prime-mark nodes.
inline BranchingResult branch_at_node(const SimpleAlgebra& g, int k, const Weight& highest,
                                      long long max_weights = kDefaultWeightCapacity) {
  if (k < 1 || k > g.rank)
    throw DomainError("node index " + std::to_string(k) + " out of range for " + g.name());
  Embedding emb = g.marks[k - 1] == 1 ? delete_node_reductive(g, k)
                                      : delete_node_semisimple(g, k);
  return branch(g, emb, highest, max_weights);
}

}  // namespace liecent
