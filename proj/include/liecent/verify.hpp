#pragma once

#include "branching.hpp"
#include "io.hpp"
#include "render.hpp"
#include "snf.hpp"
#include "subalgebra.hpp"
#include "torus.hpp"
#include "weights.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

/// Replays the library against the bundled data tables and golden worked
/// examples under fixtures/, reporting named pass/fail results with diffs.
/// Every check recomputes its claims from scratch; the centralizer sweep
/// additionally checks the library against an independent lattice-dual
/// construction of the centralizer and of the embedded subgroup's center.
namespace liecent {

/// Outcome of one named verification check.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> diffs;

  void fail(std::string msg) {
    passed = false;
    diffs.push_back(std::move(msg));
  }
};

/// The algebras covered by the bundled tables: classical series up to rank 8
/// plus all exceptional types.
inline std::vector<AlgebraType> verification_algebra_list() {
  std::vector<AlgebraType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'B', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'C', n});
  for (int n = 4; n <= 8; ++n) out.push_back({'D', n});
  out.push_back({'E', 6});
  out.push_back({'E', 7});
  out.push_back({'E', 8});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

namespace detail {

inline std::vector<std::string> read_fixture_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    out.push_back(line.substr(a, line.find_last_not_of(" \t\r") - a + 1));
  }
  return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline Int parse_fixture_int(const std::string& s, const std::string& ctx) {
  std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
  bool ok = k < s.size();
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) ok = false;
  if (!ok) throw FixtureError(ctx + ": bad integer '" + s + "'");
  return Int(s);
}

inline int parse_fixture_index(const std::string& s, const std::string& ctx) {
  Int v = parse_fixture_int(s, ctx);
  if (v < 0 || v > 1000) throw FixtureError(ctx + ": index '" + s + "' out of range");
  return static_cast<int>(v);
}

inline std::vector<Int> parse_int_list(const std::string& s, const std::string& ctx) {
  std::vector<Int> out;
  if (s == "-") return out;
  for (const std::string& tok : split_on(s, ',')) out.push_back(parse_fixture_int(tok, ctx));
  return out;
}

inline IVec parse_fixture_tuple(const std::string& s, const std::string& ctx) {
  try {
    return parse_weight(s);
  } catch (const UsageError& e) {
    throw FixtureError(ctx + ": " + e.what());
  }
}

inline CongruenceForm parse_fixture_form(const std::string& s, const std::string& ctx) {
  auto pct = s.find('%');
  if (pct == std::string::npos)
    throw FixtureError(ctx + ": form '" + s + "' is missing '%modulus'");
  CongruenceForm f;
  f.coeffs = parse_fixture_tuple(s.substr(0, pct), ctx);
  f.modulus = parse_fixture_int(s.substr(pct + 1), ctx);
  if (f.modulus < 1) throw FixtureError(ctx + ": form '" + s + "' has modulus < 1");
  return f;
}

inline AlgebraType parse_fixture_algebra(const std::string& s, const std::string& ctx) {
  try {
    return parse_algebra(s);
  } catch (const std::runtime_error& e) {
    throw FixtureError(ctx + ": " + e.what());
  }
}

inline std::vector<AlgebraType> parse_type_list(const std::string& s, const std::string& ctx) {
  std::vector<AlgebraType> out;
  if (s == "-") return out;
  for (const std::string& tok : split_on(s, '+')) out.push_back(parse_fixture_algebra(tok, ctx));
  return out;
}

/// Parse "kind NAME key=value key=value ...".
inline std::map<std::string, std::string> parse_record_fields(const std::string& line,
                                                              const std::string& kind,
                                                              const std::string& path,
                                                              std::string* name_out) {
  std::istringstream is(line);
  std::string tok;
  if (!(is >> tok) || tok != kind)
    throw FixtureError(path + ": expected a '" + kind + "' record, got '" + line + "'");
  if (!(is >> *name_out)) throw FixtureError(path + ": record is missing a name: '" + line + "'");
  std::map<std::string, std::string> fields;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw FixtureError(path + ": expected key=value, got '" + tok + "'");
    if (!fields.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
      throw FixtureError(path + ": duplicate key '" + tok.substr(0, eq) + "' in '" + line + "'");
  }
  return fields;
}

inline const std::string& record_field(const std::map<std::string, std::string>& fields,
                                       const std::string& key, const std::string& ctx) {
  auto it = fields.find(key);
  if (it == fields.end()) throw FixtureError(ctx + ": missing field '" + key + "'");
  return it->second;
}

inline std::string int_list_to_string(const std::vector<Int>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out;
}

inline std::string type_list_to_string(const std::vector<AlgebraType>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += "+";
    out += v[i].name();
  }
  return out;
}

inline std::string form_signature(const CongruenceForm& f) {
  return render_weight(f.coeffs) + "%" + f.modulus.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fixture tables
// ---------------------------------------------------------------------------

/// One extended-diagram edge: pairing p = <alpha_a, coroot_b>, q the reverse.
struct CatalogEdge {
  int a = 0;
  int b = 0;
  Int p = -1;
  Int q = -1;
};

/// One row of dynkin_catalog.txt.
struct CatalogEntry {
  AlgebraType type;
  std::vector<Int> marks;  // extended marks, node 0 first
  std::vector<CatalogEdge> edges;
};

inline std::vector<CatalogEntry> load_dynkin_catalog(const std::string& dir) {
  const std::string path = dir + "/dynkin_catalog.txt";
  std::vector<CatalogEntry> out;
  for (const std::string& line : detail::read_fixture_lines(path)) {
    std::string name;
    auto fields = detail::parse_record_fields(line, "algebra", path, &name);
    const std::string ctx = path + " [" + name + "]";
    CatalogEntry e;
    e.type = detail::parse_fixture_algebra(name, ctx);
    e.marks = detail::parse_int_list(detail::record_field(fields, "marks", ctx), ctx);
    for (const std::string& tok :
         detail::split_on(detail::record_field(fields, "edges", ctx), ';')) {
      CatalogEdge edge;
      std::string ends = tok;
      if (auto colon = tok.find(':'); colon != std::string::npos) {
        ends = tok.substr(0, colon);
        auto pair = detail::split_on(tok.substr(colon + 1), '/');
        if (pair.size() != 2) throw FixtureError(ctx + ": bad edge pairing '" + tok + "'");
        edge.p = detail::parse_fixture_int(pair[0], ctx);
        edge.q = detail::parse_fixture_int(pair[1], ctx);
      }
      auto dash = ends.find('-');
      if (dash == std::string::npos) throw FixtureError(ctx + ": bad edge '" + tok + "'");
      edge.a = detail::parse_fixture_index(ends.substr(0, dash), ctx);
      edge.b = detail::parse_fixture_index(ends.substr(dash + 1), ctx);
      e.edges.push_back(edge);
    }
    out.push_back(std::move(e));
  }
  if (out.empty()) throw FixtureError(path + ": no records");
  return out;
}

/// One row of table_center.txt.
struct CenterEntry {
  AlgebraType type;
  std::vector<Int> factors;
  std::vector<std::pair<int, CongruenceForm>> forms;  // node -> reduced form
};

inline std::vector<CenterEntry> load_center_table(const std::string& dir) {
  const std::string path = dir + "/table_center.txt";
  std::vector<CenterEntry> out;
  for (const std::string& line : detail::read_fixture_lines(path)) {
    std::string name;
    auto fields = detail::parse_record_fields(line, "center", path, &name);
    const std::string ctx = path + " [" + name + "]";
    CenterEntry e;
    e.type = detail::parse_fixture_algebra(name, ctx);
    e.factors = detail::parse_int_list(detail::record_field(fields, "factors", ctx), ctx);
    const std::string& forms = detail::record_field(fields, "forms", ctx);
    if (forms != "-") {
      for (const std::string& tok : detail::split_on(forms, ';')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
          throw FixtureError(ctx + ": bad node form '" + tok + "'");
        e.forms.emplace_back(detail::parse_fixture_index(tok.substr(0, colon), ctx),
                             detail::parse_fixture_form(tok.substr(colon + 1), ctx));
      }
    }
    out.push_back(std::move(e));
  }
  if (out.empty()) throw FixtureError(path + ": no records");
  return out;
}

/// One row of table_discrete.txt.
struct DiscreteEntry {
  AlgebraType type;
  int node = 0;
  std::vector<AlgebraType> sub;
  std::vector<Int> factors;
  Int quotient = 1;
};

inline std::vector<DiscreteEntry> load_discrete_table(const std::string& dir) {
  const std::string path = dir + "/table_discrete.txt";
  std::vector<DiscreteEntry> out;
  for (const std::string& line : detail::read_fixture_lines(path)) {
    std::string name;
    auto fields = detail::parse_record_fields(line, "discrete", path, &name);
    const std::string ctx = path + " [" + name + "]";
    DiscreteEntry e;
    e.type = detail::parse_fixture_algebra(name, ctx);
    e.node = detail::parse_fixture_index(detail::record_field(fields, "node", ctx), ctx);
    e.sub = detail::parse_type_list(detail::record_field(fields, "sub", ctx), ctx);
    e.factors = detail::parse_int_list(detail::record_field(fields, "c", ctx), ctx);
    e.quotient = detail::parse_fixture_int(detail::record_field(fields, "quotient", ctx), ctx);
    out.push_back(std::move(e));
  }
  if (out.empty()) throw FixtureError(path + ": no records");
  return out;
}

/// One row of table_continuous.txt.
struct ContinuousEntry {
  AlgebraType type;
  int node = 0;
  std::vector<AlgebraType> sub;    // semisimple part ("-" -> empty)
  std::vector<Int> u1_quotient;    // invariant factors of C / U_1
  Int z_cap = 1;                   // |Z(G) cap U_1|
  IVec form;                       // U_1 labelling functional
  bool canonical_rep = true;
};

inline std::vector<ContinuousEntry> load_continuous_table(const std::string& dir) {
  const std::string path = dir + "/table_continuous.txt";
  std::vector<ContinuousEntry> out;
  for (const std::string& line : detail::read_fixture_lines(path)) {
    std::string name;
    auto fields = detail::parse_record_fields(line, "continuous", path, &name);
    const std::string ctx = path + " [" + name + "]";
    ContinuousEntry e;
    e.type = detail::parse_fixture_algebra(name, ctx);
    e.node = detail::parse_fixture_index(detail::record_field(fields, "node", ctx), ctx);
    e.sub = detail::parse_type_list(detail::record_field(fields, "sub", ctx), ctx);
    e.u1_quotient = detail::parse_int_list(detail::record_field(fields, "u1q", ctx), ctx);
    e.z_cap = detail::parse_fixture_int(detail::record_field(fields, "zcap", ctx), ctx);
    e.form = detail::parse_fixture_tuple(detail::record_field(fields, "form", ctx), ctx);
    const std::string& rep = detail::record_field(fields, "rep", ctx);
    if (rep == "canonical")
      e.canonical_rep = true;
    else if (rep == "conjugate")
      e.canonical_rep = false;
    else
      throw FixtureError(ctx + ": rep must be 'canonical' or 'conjugate', got '" + rep + "'");
    out.push_back(std::move(e));
  }
  if (out.empty()) throw FixtureError(path + ": no records");
  return out;
}

/// One [exampleN] block of examples_golden.txt: ordered key=value entries.
struct GoldenExample {
  std::string id;
  std::vector<std::pair<std::string, std::string>> entries;
};

inline std::vector<GoldenExample> load_golden_examples(const std::string& dir) {
  const std::string path = dir + "/examples_golden.txt";
  std::vector<GoldenExample> out;
  for (const std::string& line : detail::read_fixture_lines(path)) {
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3)
        throw FixtureError(path + ": bad block header '" + line + "'");
      out.push_back({line.substr(1, line.size() - 2), {}});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw FixtureError(path + ": expected key=value, got '" + line + "'");
    if (out.empty()) throw FixtureError(path + ": data before the first block header");
    out.back().entries.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  if (out.empty()) throw FixtureError(path + ": no example blocks");
  return out;
}

// ---------------------------------------------------------------------------
// Shared verification helpers
// ---------------------------------------------------------------------------

/// True when a == u * b for some unit u mod the common modulus.  Two reduced
/// congruence forms cut out the same cyclic subgroup exactly when they agree
/// up to a unit multiple.
inline bool forms_equal_up_to_unit(const CongruenceForm& a, const CongruenceForm& b) {
  if (a.modulus != b.modulus || a.coeffs.size() != b.coeffs.size()) return false;
  const Int& m = a.modulus;
  for (Int u = 1; u < m || u == 1; ++u) {
    if (gcd(u, m) != 1) continue;
    bool ok = true;
    for (std::size_t j = 0; j < a.coeffs.size() && ok; ++j)
      if (mod_floor(u * b.coeffs[j], m) != a.coeffs[j]) ok = false;
    if (ok) return true;
    if (m == 1) break;
  }
  return false;
}

/// Dominant Weyl-chamber representative of an integer coweight given in
/// coroot coordinates: while some simple root pairs negatively, reflect there.
inline IVec dominant_coweight_representative(const SimpleAlgebra& g, IVec c) {
  for (;;) {
    bool reflected = false;
    for (int j = 0; j < g.rank && !reflected; ++j) {
      Int v = 0;
      for (int i = 0; i < g.rank; ++i) v += g.cartan[j][i] * c[i];
      if (v < 0) {
        c[j] -= v;
        reflected = true;
      }
    }
    if (!reflected) return c;
  }
}

namespace detail {

/// Weight coordinates (Dynkin labels) of retained extended-diagram node t:
/// row t of the Cartan matrix for 1 <= t <= n, minus the highest root's
/// labels for t = 0.
inline IVec extended_root_row(const SimpleAlgebra& g, int t) {
  if (t >= 1) return g.cartan[t - 1];
  IVec row(g.rank, Int(0));
  for (int i = 0; i < g.rank; ++i)
    for (int j = 0; j < g.rank; ++j) row[j] -= g.marks[i] * g.cartan[i][j];
  return row;
}

/// Coroot coordinates of retained extended-diagram node t's coroot.
inline IVec extended_coroot_row(const SimpleAlgebra& g, int t) {
  IVec row(g.rank, Int(0));
  if (t >= 1) {
    row[t - 1] = 1;
  } else {
    for (int j = 0; j < g.rank; ++j) row[j] = -g.comarks[j];
  }
  return row;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Named checks
// ---------------------------------------------------------------------------

/// "table1": centers of the simply connected groups and the congruence form
/// of every mark-1 central element, against table_center.txt.
inline CheckResult check_center_table(const std::string& dir) {
  CheckResult res{"table1"};
  auto entries = load_center_table(dir);
  std::set<std::string> seen;
  for (const CenterEntry& e : entries) {
    SimpleAlgebra g = catalog(e.type);
    if (!seen.insert(g.name()).second) {
      res.fail(g.name() + ": duplicate fixture row");
      continue;
    }
    FiniteAbelianGroup z = center_of(g);
    if (z.invariant_factors != e.factors)
      res.fail(g.name() + ": center invariant factors: fixture " +
               detail::int_list_to_string(e.factors) + ", computed " +
               detail::int_list_to_string(z.invariant_factors));
    Int det_mag = g.det_cartan < 0 ? Int(-g.det_cartan) : g.det_cartan;
    if (z.order() != det_mag)
      res.fail(g.name() + ": |Z| = " + z.order().str() +
               " does not match |det(Cartan)| = " + det_mag.str());
    std::vector<int> fixture_nodes;
    for (const auto& [node, form] : e.forms) fixture_nodes.push_back(node);
    if (fixture_nodes != mark_one_nodes(g))
      res.fail(g.name() + ": fixture lists forms at different nodes than the mark-1 set");
    for (const auto& [node, form] : e.forms) {
      if (node < 1 || node > g.rank) continue;
      CongruenceForm computed =
          eigenvalue_form(canonical_torus_element(dual_fundamental_coweight(g, node)));
      bool ok = computed == form ||
                (g.type.series == 'A' && forms_equal_up_to_unit(computed, form));
      if (!ok)
        res.fail(g.name() + " node " + std::to_string(node) + ": form: fixture " +
                 detail::form_signature(form) + ", computed " +
                 detail::form_signature(computed));
    }
  }
  for (const AlgebraType& t : verification_algebra_list())
    if (!seen.count(t.name())) res.fail(t.name() + ": missing fixture row");
  return res;
}

/// "lemma41": for every prime-mark node of every cataloged algebra, the
/// centralizer of the node-deletion subgroup has order m_k * |Z(G)|, its
/// quotient by the center is cyclic of order m_k, and it coincides with the
/// center of the embedded subgroup.  The library's answer is compared against
/// a from-scratch construction: the centralizer as the dual lattice of the
/// sub root rows, and the embedded center as the sub coweight lattice, both
/// modulo the ambient coroot lattice.
inline CheckResult check_centralizer_sweep(const std::string& dir) {
  (void)dir;  // oracle-only: no fixture input
  CheckResult res{"lemma41"};
  int swept = 0;
  for (const AlgebraType& t : verification_algebra_list()) {
    SimpleAlgebra g = catalog(t);
    FiniteAbelianGroup z = center_of(g);
    for (int k = 1; k <= g.rank; ++k) {
      if (!detail::is_prime(g.marks[k - 1])) continue;
      ++swept;
      const std::string where = g.name() + " node " + std::to_string(k);
      const Int& mark = g.marks[k - 1];
      int n = g.rank;

      IMat root_rows, coroot_rows;
      for (int t2 = 0; t2 <= n; ++t2) {
        if (t2 == k) continue;
        root_rows.push_back(detail::extended_root_row(g, t2));
        coroot_rows.push_back(detail::extended_coroot_row(g, t2));
      }

      // Oracle 1: C = {x : <beta_i, x> in Z for all sub roots} / Q^, i.e. the
      // lattice spanned by the columns of the inverse root-row matrix.
      RMat rinv = invert(to_rational(root_rows));
      std::vector<RVec> cgens;
      for (int j = 0; j < n; ++j) {
        RVec col(n);
        for (int i = 0; i < n; ++i) col[i] = rinv[i][j];
        cgens.push_back(std::move(col));
      }
      FiniteAbelianGroup c_oracle = lattice_quotient(cgens, {}, n, /*want_generators=*/false);

      // Oracle 2: Z(G') of the embedded subgroup = its coweight lattice
      // (dual basis to the sub roots, expanded over the sub coroots) mod Q^.
      RMat a_sub(n, RVec(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a_sub[i][j] = Rat(dot(root_rows[i], coroot_rows[j]));
        if (a_sub[i][i] != 2) res.fail(where + ": sub pairing diagonal is not 2");
      }
      RMat s = invert(a_sub);
      std::vector<RVec> zgens;
      for (int i = 0; i < n; ++i) {
        RVec v(n, Rat(0));
        for (int j = 0; j < n; ++j)
          for (int t3 = 0; t3 < n; ++t3) v[t3] += s[j][i] * Rat(coroot_rows[j][t3]);
        zgens.push_back(std::move(v));
      }
      FiniteAbelianGroup z_oracle = lattice_quotient(zgens, {}, n, /*want_generators=*/false);

      Embedding emb = delete_node_semisimple(g, k);
      CentralizerDescription c = discrete_centralizer(g, k, emb);

      if (c.finite_part.invariant_factors != c_oracle.invariant_factors)
        res.fail(where + ": centralizer: library " +
                 detail::int_list_to_string(c.finite_part.invariant_factors) +
                 ", dual-lattice oracle " +
                 detail::int_list_to_string(c_oracle.invariant_factors));
      if (z_oracle.invariant_factors != c_oracle.invariant_factors)
        res.fail(where + ": embedded center " +
                 detail::int_list_to_string(z_oracle.invariant_factors) +
                 " differs from centralizer " +
                 detail::int_list_to_string(c_oracle.invariant_factors));
      if (c.finite_part.order() != mark * z.order())
        res.fail(where + ": |C| = " + c.finite_part.order().str() + " but mark * |Z| = " +
                 (mark * z.order()).str());
      std::vector<Int> expected_quotient{mark};
      if (c.quotient_by_center.invariant_factors != expected_quotient)
        res.fail(where + ": C/Z = " +
                 detail::int_list_to_string(c.quotient_by_center.invariant_factors) +
                 ", expected the cyclic group of order " + mark.str());
    }
  }
  if (swept != 90)
    res.fail("expected 90 prime-mark deletions across the catalog, swept " +
             std::to_string(swept));
  return res;
}

/// "table23": semisimple node deletions against table_discrete.txt — factor
/// types in component order, centralizer invariant factors, quotient order —
/// plus completeness of the fixture over all prime-mark nodes.
inline CheckResult check_semisimple_table(const std::string& dir) {
  CheckResult res{"table23"};
  auto entries = load_discrete_table(dir);
  std::set<std::pair<std::string, int>> seen;
  for (const DiscreteEntry& e : entries) {
    SimpleAlgebra g = catalog(e.type);
    const std::string where = g.name() + " node " + std::to_string(e.node);
    if (!seen.insert({g.name(), e.node}).second) {
      res.fail(where + ": duplicate fixture row");
      continue;
    }
    if (e.node < 1 || e.node > g.rank) {
      res.fail(where + ": node out of range");
      continue;
    }
    if (!detail::is_prime(g.marks[e.node - 1])) {
      res.fail(where + ": node mark " + g.marks[e.node - 1].str() + " is not prime");
      continue;
    }
    Embedding emb = delete_node_semisimple(g, e.node);
    std::vector<AlgebraType> types;
    for (const SimpleAlgebra& f : emb.sub.factors) types.push_back(f.type);
    if (types != e.sub)
      res.fail(where + ": subalgebra: fixture " + detail::type_list_to_string(e.sub) +
               ", computed " + detail::type_list_to_string(types));
    CentralizerDescription c = discrete_centralizer(g, e.node, emb);
    if (c.finite_part.invariant_factors != e.factors)
      res.fail(where + ": centralizer: fixture " + detail::int_list_to_string(e.factors) +
               ", computed " + detail::int_list_to_string(c.finite_part.invariant_factors));
    std::vector<Int> expected_quotient;
    if (e.quotient > 1) expected_quotient.push_back(e.quotient);
    if (c.quotient_by_center.invariant_factors != expected_quotient)
      res.fail(where + ": C/Z: fixture order " + e.quotient.str() + ", computed " +
               detail::int_list_to_string(c.quotient_by_center.invariant_factors));
  }
  for (const AlgebraType& t : verification_algebra_list()) {
    SimpleAlgebra g = catalog(t);
    for (int k = 1; k <= g.rank; ++k)
      if (detail::is_prime(g.marks[k - 1]) && !seen.count({g.name(), k}))
        res.fail(g.name() + " node " + std::to_string(k) + ": missing fixture row");
  }
  return res;
}

/// "table4": reductive (mark-1) node deletions against table_continuous.txt —
/// semisimple part, C/U_1 invariant factors, |Z cap U_1|, and the labelling
/// functional.  Canonical rows must equal the library's functional exactly;
/// conjugate rows must be primitive, Weyl-conjugate to it up to sign, and
/// annihilate a root subsystem of the stated type.  Family laws (the A-series
/// gcd rule and the D-series parity split) are asserted independently.
inline CheckResult check_reductive_table(const std::string& dir) {
  CheckResult res{"table4"};
  auto entries = load_continuous_table(dir);
  std::set<std::pair<std::string, int>> seen;
  for (const ContinuousEntry& e : entries) {
    SimpleAlgebra g = catalog(e.type);
    const std::string where = g.name() + " node " + std::to_string(e.node);
    if (!seen.insert({g.name(), e.node}).second) {
      res.fail(where + ": duplicate fixture row");
      continue;
    }
    if (e.node < 1 || e.node > g.rank || g.marks[e.node - 1] != 1) {
      res.fail(where + ": not a mark-1 node");
      continue;
    }
    Embedding emb = delete_node_reductive(g, e.node);
    std::vector<AlgebraType> types;
    for (const SimpleAlgebra& f : emb.sub.factors) types.push_back(f.type);
    if (types != e.sub)
      res.fail(where + ": semisimple part: fixture " + detail::type_list_to_string(e.sub) +
               ", computed " + detail::type_list_to_string(types));

    CentralizerDescription c = continuous_centralizer(g, e.node, emb);
    if (!c.has_u1) res.fail(where + ": centralizer has no U_1 component");
    if (c.u1_quotient.invariant_factors != e.u1_quotient)
      res.fail(where + ": C/U_1: fixture " + detail::int_list_to_string(e.u1_quotient) +
               ", computed " + detail::int_list_to_string(c.u1_quotient.invariant_factors));
    if (c.u1_center_intersection != e.z_cap)
      res.fail(where + ": |Z cap U_1|: fixture " + e.z_cap.str() + ", computed " +
               c.u1_center_intersection.str());
    if (c.u1_quotient.order() * e.z_cap != center_of(g).order())
      res.fail(where + ": |C/U_1| * |Z cap U_1| does not equal |Z|");

    const IVec& canonical = *emb.h1_row;
    if ((int)e.form.size() != g.rank) {
      res.fail(where + ": functional has wrong length");
      continue;
    }
    if (primitive_integer(to_rational(e.form)) != e.form)
      res.fail(where + ": functional " + render_weight(e.form) +
               " is not primitive with positive leading entry");
    if (e.canonical_rep) {
      if (e.form != canonical)
        res.fail(where + ": canonical functional: fixture " + render_weight(e.form) +
                 ", computed " + render_weight(canonical));
    } else {
      if (e.form == canonical)
        res.fail(where + ": row marked conjugate but the functional is the canonical one");
      IVec negated = e.form;
      for (Int& x : negated) x = -x;
      if (dominant_coweight_representative(g, e.form) != canonical &&
          dominant_coweight_representative(g, negated) != canonical)
        res.fail(where + ": functional " + render_weight(e.form) +
                 " is not Weyl-conjugate (up to sign) to the canonical " +
                 render_weight(canonical));
      std::vector<AlgebraType> expected_kernel = e.sub;
      std::sort(expected_kernel.begin(), expected_kernel.end());
      if (kernel_base_types(g, e.form) != expected_kernel)
        res.fail(where + ": kernel root system of " + render_weight(e.form) +
                 " does not have type " + detail::type_list_to_string(expected_kernel));
    }

    if (g.type.series == 'A') {
      Int gc = gcd(Int(e.node), Int(g.rank + 1));
      std::vector<Int> expect_q;
      if (gc > 1) expect_q.push_back(gc);
      if (e.u1_quotient != expect_q || e.z_cap * gc != g.rank + 1)
        res.fail(where + ": violates the gcd(k, n+1) law for the A series");
    }
    if (g.type.series == 'D' && e.node >= g.rank - 1) {
      bool even = g.rank % 2 == 0;
      std::vector<Int> expect_q;
      if (even) expect_q.push_back(2);
      Int expect_cap = even ? 2 : 4;
      if (e.u1_quotient != expect_q || e.z_cap != expect_cap)
        res.fail(where + ": violates the D-series parity split");
    }
  }
  for (const AlgebraType& t : verification_algebra_list()) {
    SimpleAlgebra g = catalog(t);
    for (int k : mark_one_nodes(g))
      if (!seen.count({g.name(), k}))
        res.fail(g.name() + " node " + std::to_string(k) + ": missing fixture row");
  }
  return res;
}

/// Replay of one golden worked-example block (index in 1..4) against the
/// library: embedding, centralizer, congruence forms, dimensions, full
/// projection tables, and rendered decompositions.
inline CheckResult check_example(const std::string& dir, int index) {
  auto blocks = load_golden_examples(dir);
  const std::string id = "example" + std::to_string(index);
  const GoldenExample* block = nullptr;
  for (const GoldenExample& b : blocks)
    if (b.id == id) block = &b;
  if (!block) throw FixtureError(dir + "/examples_golden.txt: no [" + id + "] block");
  CheckResult res{id};

  auto first_value = [&](const std::string& key) -> const std::string* {
    for (const auto& [k, v] : block->entries)
      if (k == key) return &v;
    return nullptr;
  };
  auto need = [&](const std::string& key) -> const std::string& {
    const std::string* v = first_value(key);
    if (!v) throw FixtureError(id + ": missing required key '" + key + "'");
    return *v;
  };

  try {
    SimpleAlgebra g = catalog(detail::parse_fixture_algebra(need("ambient"), id));
    int node = detail::parse_fixture_index(need("node"), id);
    const std::string& kind = need("kind");
    if (kind != "semisimple" && kind != "reductive")
      throw FixtureError(id + ": kind must be semisimple or reductive");
    bool semisimple = kind == "semisimple";

    Embedding canonical =
        semisimple ? delete_node_semisimple(g, node) : delete_node_reductive(g, node);
    ProjectionFile pf = load_projection(dir + "/" + need("projection"));
    Embedding emb = embedding_from_projection(g, canonical.sub, pf.rows, pf.h1, node);
    if (semisimple != (emb.kind == EmbeddingKind::Semisimple))
      res.fail(id + ": projection fixture kind does not match kind=" + kind);

    CentralizerDescription cent = semisimple ? discrete_centralizer(g, node, emb)
                                             : continuous_centralizer(g, node, emb);
    auto factor_forms = subalgebra_center_forms(emb);

    std::map<Weight, BranchingResult> cache;
    std::optional<Int> expected_label_modulus;
    auto get_branch = [&](const Weight& w) -> BranchingResult& {
      auto it = cache.find(w);
      if (it != cache.end()) return it->second;
      it = cache.emplace(w, branch(g, emb, w)).first;
      BranchingResult& br = it->second;
      if (semisimple) {
        if (!br.label_modulus)
          res.fail(id + ": branching of " + render_weight(w) + " carries no label modulus");
        else if (expected_label_modulus && *br.label_modulus != *expected_label_modulus)
          res.fail(id + ": label modulus: fixture " + expected_label_modulus->str() +
                   ", computed " + br.label_modulus->str());
      } else if (br.label_modulus) {
        res.fail(id + ": reductive labels should be plain integers, got modulus " +
                 br.label_modulus->str());
      }
      return br;
    };

    // "(...):tail" entries: split after the closing parenthesis.
    auto split_weight_colon = [&](const std::string& v) -> std::pair<Weight, std::string> {
      auto close = v.find(')');
      auto colon = close == std::string::npos ? std::string::npos : v.find(':', close);
      if (colon == std::string::npos)
        throw FixtureError(id + ": expected '(weight):value', got '" + v + "'");
      return {detail::parse_fixture_tuple(v.substr(0, colon), id), v.substr(colon + 1)};
    };

    std::optional<CongruenceForm> first_center_form;
    std::optional<std::pair<Int, Int>> labels_mod;
    std::optional<Weight> table_weight;
    std::vector<std::string> table_rows;

    auto flush_table = [&]() {
      if (!table_weight) return;
      BranchingResult& br = get_branch(*table_weight);
      const std::string tag = id + ": table " + render_weight(*table_weight);
      if (br.table.size() != table_rows.size()) {
        res.fail(tag + ": fixture has " + std::to_string(table_rows.size()) +
                 " rows, computed " + std::to_string(br.table.size()));
      } else {
        // Published tables are free to order rows within a level however they
        // like; only the content is normative.  Both sides are compared in the
        // library's canonical order: level first, then the ambient weight
        // lexicographically.  Computed rows already come out that way, so only
        // the fixture rows need sorting.
        std::vector<std::pair<std::pair<Rat, Weight>, std::string>> keyed;
        keyed.reserve(table_rows.size());
        for (const std::string& row : table_rows) {
          auto open = row.find('(');
          auto close = row.find(')');
          if (open == std::string::npos || close == std::string::npos || close < open)
            throw FixtureError(id + ": table row '" + row + "' has no leading weight");
          Weight w = detail::parse_fixture_tuple(row.substr(open, close - open + 1), id);
          keyed.push_back({{level_below(g, *table_weight, w), w}, row});
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          std::string got = render_table_row(emb.sub, br.table[i]);
          if (got != keyed[i].second)
            res.fail(tag + " row " + std::to_string(i + 1) + ": fixture '" + keyed[i].second +
                     "', computed '" + got + "'");
        }
      }
      table_weight.reset();
      table_rows.clear();
    };

    for (const auto& [key, value] : block->entries) {
      if (key == "row") {
        if (!table_weight) throw FixtureError(id + ": row entry outside a table");
        table_rows.push_back(value);
        continue;
      }
      if (key != "table") {
        // any non-row key ends a pending table block
        if (table_weight) flush_table();
      }
      if (key == "ambient" || key == "node" || key == "kind" || key == "projection") {
        continue;
      } else if (key == "table") {
        flush_table();
        table_weight = detail::parse_fixture_tuple(value, id);
      } else if (key == "sigma_coweight") {
        std::string got = render_rational_tuple(transport_coweight(g, node, emb));
        if (got != value)
          res.fail(id + ": sigma coweight: fixture " + value + ", computed " + got);
      } else if (key == "centralizer") {
        auto want = detail::parse_int_list(value, id);
        if (cent.finite_part.invariant_factors != want)
          res.fail(id + ": centralizer: fixture " + value + ", computed " +
                   detail::int_list_to_string(cent.finite_part.invariant_factors));
      } else if (key == "quotient_by_center") {
        Int q = detail::parse_fixture_int(value, id);
        std::vector<Int> want;
        if (q > 1) want.push_back(q);
        if (cent.quotient_by_center.invariant_factors != want)
          res.fail(id + ": C/Z: fixture order " + value + ", computed " +
                   detail::int_list_to_string(cent.quotient_by_center.invariant_factors));
      } else if (key == "relative_form") {
        CongruenceForm want = detail::parse_fixture_form(value, id);
        if (cent.relative_form != want)
          res.fail(id + ": relative form: fixture " + value + ", computed " +
                   detail::form_signature(cent.relative_form));
      } else if (key == "factor_form") {
        auto colon = value.find(':');
        if (colon == std::string::npos)
          throw FixtureError(id + ": factor_form needs 'index:form'");
        std::size_t idx = detail::parse_fixture_index(value.substr(0, colon), id);
        CongruenceForm want = detail::parse_fixture_form(value.substr(colon + 1), id);
        if (idx < 1 || idx > factor_forms.size()) {
          res.fail(id + ": factor_form index " + std::to_string(idx) + " out of range");
        } else {
          const auto& forms = factor_forms[idx - 1];
          if (std::find(forms.begin(), forms.end(), want) == forms.end()) {
            std::string got;
            for (const CongruenceForm& f : forms)
              got += (got.empty() ? "" : "; ") + detail::form_signature(f);
            res.fail(id + ": factor " + std::to_string(idx) + " center form: fixture " +
                     detail::form_signature(want) + ", computed " +
                     (got.empty() ? std::string("none") : got));
          }
        }
      } else if (key == "label_modulus") {
        expected_label_modulus = detail::parse_fixture_int(value, id);
        if (semisimple && cent.relative_form.modulus != *expected_label_modulus)
          res.fail(id + ": label modulus " + value + " does not match the relative form");
      } else if (key == "h1") {
        IVec want = detail::parse_fixture_tuple(value, id);
        if (!emb.h1_row || *emb.h1_row != want)
          res.fail(id + ": h1: fixture " + value + ", embedding has " +
                   (emb.h1_row ? render_weight(*emb.h1_row) : std::string("none")));
      } else if (key == "u1_quotient") {
        auto want = detail::parse_int_list(value, id);
        if (cent.u1_quotient.invariant_factors != want)
          res.fail(id + ": C/U_1: fixture " + value + ", computed " +
                   detail::int_list_to_string(cent.u1_quotient.invariant_factors));
      } else if (key == "z_cap_u1") {
        if (cent.u1_center_intersection != detail::parse_fixture_int(value, id))
          res.fail(id + ": |Z cap U_1|: fixture " + value + ", computed " +
                   cent.u1_center_intersection.str());
      } else if (key == "ambient_center_form") {
        auto colon = value.find(':');
        if (colon == std::string::npos)
          throw FixtureError(id + ": ambient_center_form needs 'node:form'");
        int cnode = detail::parse_fixture_index(value.substr(0, colon), id);
        CongruenceForm want = detail::parse_fixture_form(value.substr(colon + 1), id);
        CongruenceForm got =
            eigenvalue_form(canonical_torus_element(dual_fundamental_coweight(g, cnode)));
        if (got != want)
          res.fail(id + ": center form at node " + std::to_string(cnode) + ": fixture " +
                   detail::form_signature(want) + ", computed " +
                   detail::form_signature(got));
        if (!first_center_form) first_center_form = want;
      } else if (key == "dimension") {
        auto [w, tail] = split_weight_colon(value);
        Int want = detail::parse_fixture_int(tail, id);
        Int got = weyl_dimension(g, w);
        if (got != want)
          res.fail(id + ": dim " + render_weight(w) + ": fixture " + want.str() +
                   ", computed " + got.str());
      } else if (key == "branch") {
        auto gt = value.find(" > ");
        if (gt == std::string::npos)
          throw FixtureError(id + ": branch entry needs '(weight) > summands'");
        Weight w = detail::parse_fixture_tuple(value.substr(0, gt), id);
        std::string got = render_branching_line(emb.sub, get_branch(w));
        if (got != value)
          res.fail(id + ": branching: fixture '" + value + "', computed '" + got + "'");
      } else if (key == "labels") {
        auto [w, tail] = split_weight_colon(value);
        auto want = detail::parse_int_list(tail, id);
        std::set<Int> labels;
        for (const LabeledSummand& s : get_branch(w).summands) labels.insert(s.label);
        std::vector<Int> got(labels.begin(), labels.end());
        if (got != want)
          res.fail(id + ": labels of " + render_weight(w) + ": fixture " + tail +
                   ", computed " + detail::int_list_to_string(got));
      } else if (key == "labels_mod") {
        auto colon = value.find(':');
        if (colon == std::string::npos)
          throw FixtureError(id + ": labels_mod needs 'modulus:residue'");
        labels_mod = {detail::parse_fixture_int(value.substr(0, colon), id),
                      detail::parse_fixture_int(value.substr(colon + 1), id)};
      } else if (key == "congruence") {
        auto [w, tail] = split_weight_colon(value);
        Int want = detail::parse_fixture_int(tail, id);
        if (!first_center_form) {
          res.fail(id + ": congruence entry before any ambient_center_form");
        } else if (evaluate_form(*first_center_form, w) != want) {
          res.fail(id + ": congruence of " + render_weight(w) + ": fixture " + want.str() +
                   ", computed " + evaluate_form(*first_center_form, w).str());
        }
      } else {
        throw FixtureError(id + ": unknown key '" + key + "'");
      }
    }
    flush_table();

    if (labels_mod) {
      const auto& [m, r] = *labels_mod;
      for (const auto& [w, br] : cache)
        for (const LabeledSummand& s : br.summands)
          if (mod_floor(s.label, m) != r)
            res.fail(id + ": label " + s.label.str() + " of " + render_weight(w) +
                     " is not " + r.str() + " mod " + m.str());
    }
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    res.fail(id + ": " + e.what());
  }
  return res;
}

/// "examples": all four golden worked examples.
inline CheckResult check_worked_examples(const std::string& dir) {
  CheckResult res{"examples"};
  for (int i = 1; i <= 4; ++i) {
    CheckResult one = check_example(dir, i);
    if (!one.passed) {
      res.passed = false;
      for (std::string& d : one.diffs) res.diffs.push_back(std::move(d));
    }
  }
  return res;
}

/// Names accepted by run_check, in canonical order.
inline std::vector<std::string> verification_check_names() {
  return {"table1", "lemma41", "table23", "table4", "examples"};
}

/// Run one named check against the fixture directory.  Unknown names raise
/// UsageError; missing or unparseable fixture files raise FixtureError.
inline CheckResult run_check(const std::string& name, const std::string& dir) {
  if (name == "table1") return check_center_table(dir);
  if (name == "lemma41") return check_centralizer_sweep(dir);
  if (name == "table23") return check_semisimple_table(dir);
  if (name == "table4") return check_reductive_table(dir);
  if (name == "examples") return check_worked_examples(dir);
  throw UsageError("unknown check '" + name + "': expected one of table1, lemma41, table23, table4, examples");
}

}  // namespace liecent
