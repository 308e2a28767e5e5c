#pragma once

#include "branching.hpp"
#include "io.hpp"
#include "torus.hpp"

/// Text rendering for branching results: sub-algebra weights split per
/// factor, labeled summands, decomposition lines, and projection-table rows.
namespace liecent {

/// Render a sub-algebra weight with one parenthesized tuple per simple
/// factor, e.g. "(0,2)(1,0)" for an A2+A2 weight.  A rank-0 subalgebra (the
/// torus alone) renders as "()".
inline std::string render_sub_weight(const SumAlgebra& sub, const Weight& w) {
  if (sub.factors.empty()) return "()";
  std::string out;
  for (const Weight& part : sub.split(w)) out += render_weight(part);
  return out;
}

/// Render one labeled summand, e.g. "(0,1,0)[2]" or "2×(1,0,1)[0]" when the
/// outer multiplicity exceeds one.
inline std::string render_summand(const SumAlgebra& sub, const LabeledSummand& s) {
  std::string out;
  if (s.multiplicity != 1) out += s.multiplicity.str() + "×";
  out += render_sub_weight(sub, s.sub_highest);
  out += "[" + s.label.str() + "]";
  return out;
}

/// Render a full decomposition line:
///   "(1,0,0) > (0,1,0)[2] + (0,0,0)[0]"
inline std::string render_branching_line(const SumAlgebra& sub, const BranchingResult& br) {
  std::string out = render_weight(br.ambient_highest) + " >";
  for (std::size_t i = 0; i < br.summands.size(); ++i)
    out += (i == 0 ? " " : " + ") + render_summand(sub, br.summands[i]);
  return out;
}

/// Render one projection-table row as "WEIGHT|LABEL|IMAGE", e.g.
/// "(1,0,0)|2|(0,1,0)"; a row of outer multiplicity m > 1 is prefixed "m×".
inline std::string render_table_row(const SumAlgebra& sub,
                                    const BranchingResult::TableRow& row) {
  std::string out;
  if (row.multiplicity != 1) out += row.multiplicity.str() + "×";
  out += render_weight(row.ambient);
  out += "|" + row.label.str() + "|";
  out += render_sub_weight(sub, row.image);
  return out;
}

}  // namespace liecent
