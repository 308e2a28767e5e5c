// liecent: exact computations with the maximal regular subalgebras of the
// compact simple Lie groups — centers, centralizers of node-deletion
// subgroups, and branching rules with congruence labels.

#include <liecent/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace liecent;

std::string fixture_directory() {
  const char* env = std::getenv("LIECENT_FIXTURES");
  return (env != nullptr && *env != '\0') ? std::string(env) : std::string("fixtures");
}

/// Bare fixture names resolve inside the fixture directory; anything with a
/// path separator is used as given.
std::string resolve_projection_path(const std::string& arg) {
  if (arg.find('/') != std::string::npos) return arg;
  return fixture_directory() + "/" + arg;
}

Json group_json(const FiniteAbelianGroup& grp) {
  Json out;
  out["name"] = group_name(grp);
  Json factors = Json::array();
  for (const Int& f : grp.invariant_factors) factors.push_back(json_int(f));
  out["invariant_factors"] = factors;
  return out;
}

Json form_json(const CongruenceForm& f) {
  Json out;
  out["coeffs"] = json_ivec(f.coeffs);
  out["modulus"] = json_int(f.modulus);
  out["text"] = form_to_string(f);
  return out;
}

Json sub_weight_json(const SumAlgebra& sub, const Weight& w) {
  Json parts = Json::array();
  for (const Weight& p : sub.split(w)) parts.push_back(json_ivec(p));
  return parts;
}

struct EmbeddingRequest {
  SimpleAlgebra g;
  int node = 0;
  bool semisimple = true;
  Embedding emb;
  std::string echo;  // canonical command echo fragment
};

/// Shared setup for `centralizer` and `branch`: parse the algebra, pick the
/// deletion kind, build the canonical embedding, and overlay a projection
/// file when one is given.
EmbeddingRequest make_embedding(const std::string& alg, int node, const std::string& kind,
                                const std::string& projection) {
  EmbeddingRequest req;
  req.g = catalog(parse_algebra(alg));
  if (node < 1 || node > req.g.rank)
    throw UsageError("node index " + std::to_string(node) + " is out of range for " +
                     req.g.name());
  req.node = node;
  if (kind == "auto")
    req.semisimple = req.g.marks[node - 1] != 1;
  else
    req.semisimple = kind == "semisimple";

  Embedding canonical = req.semisimple ? delete_node_semisimple(req.g, node)
                                       : delete_node_reductive(req.g, node);
  req.emb = canonical;
  if (!projection.empty()) {
    ProjectionFile pf = load_projection(resolve_projection_path(projection));
    req.emb = embedding_from_projection(req.g, canonical.sub, pf.rows, pf.h1, node);
    if (req.semisimple && req.emb.kind != EmbeddingKind::Semisimple)
      throw ValidationError(
          "the projection file carries an h1 row, but the deletion is semisimple");
    if (!req.semisimple && req.emb.kind != EmbeddingKind::Reductive)
      throw ValidationError("a reductive embedding needs an h1 row in the projection file");
  }

  req.echo = req.g.name() + " " + std::to_string(node);
  if (!projection.empty()) req.echo += " --projection " + projection;
  if (kind != "auto") req.echo += " --kind " + kind;
  return req;
}

OutputDocument cmd_info(const std::string& alg) {
  SimpleAlgebra g = catalog(parse_algebra(alg));
  OutputDocument doc = begin_document("info " + g.name(), &g);

  Int dimension = Int(g.rank) + Int(g.roots.size());
  std::string marks_line = "marks:";
  for (int i = 0; i < g.extended.node_count(); ++i)
    marks_line += " " + std::to_string(i) + ":" + g.extended.marks[i].str();
  std::string comarks_line = "comarks:";
  for (int i = 0; i < g.rank; ++i)
    comarks_line += " " + std::to_string(i + 1) + ":" + g.comarks[i].str();
  std::vector<int> m1 = mark_one_nodes(g);
  std::string m1_line = "mark-1 nodes:";
  if (m1.empty()) m1_line += " none";
  for (int k : m1) m1_line += " " + std::to_string(k);

  doc.lines.push_back("algebra: " + g.name());
  doc.lines.push_back("rank: " + std::to_string(g.rank));
  doc.lines.push_back("dimension: " + dimension.str());
  doc.lines.push_back("roots: " + std::to_string(g.roots.size()));
  doc.lines.push_back("det cartan: " + g.det_cartan.str());
  doc.lines.push_back("weyl order: " + weyl_order(g).str());
  doc.lines.push_back(marks_line);
  doc.lines.push_back(comarks_line);
  doc.lines.push_back(m1_line);
  if (g.rank == 2 && (g.type.series == 'B' || g.type.series == 'C'))
    doc.lines.push_back(
        "note: B2 and C2 name the same algebra with the node numbering interchanged; "
        "in B2 node 2 is the short root, in C2 node 2 is the long root");

  Json& p = doc.json["payload"];
  p["dimension"] = json_int(dimension);
  p["root_count"] = static_cast<std::int64_t>(g.roots.size());
  p["weyl_order"] = json_int(weyl_order(g));
  Json marks = Json::array();
  for (int i = 0; i < g.extended.node_count(); ++i) marks.push_back(json_int(g.extended.marks[i]));
  p["extended_marks"] = marks;
  p["comarks"] = json_ivec(g.comarks);
  p["mark_one_nodes"] = m1;
  return doc;
}

OutputDocument cmd_center(const std::string& alg) {
  SimpleAlgebra g = catalog(parse_algebra(alg));
  OutputDocument doc = begin_document("center " + g.name(), &g);
  FiniteAbelianGroup z = center_of(g);

  doc.lines.push_back("center: " + group_name(z));
  Json forms = Json::array();
  for (int k : mark_one_nodes(g)) {
    CongruenceForm f =
        eigenvalue_form(canonical_torus_element(dual_fundamental_coweight(g, k)));
    doc.lines.push_back("node " + std::to_string(k) + ": " + form_to_string(f));
    Json entry = form_json(f);
    entry["node"] = k;
    forms.push_back(entry);
  }

  Json& p = doc.json["payload"];
  p["center"] = group_json(z);
  p["forms"] = forms;
  return doc;
}

OutputDocument cmd_centralizer(const std::string& alg, int node, const std::string& kind,
                               const std::string& projection) {
  EmbeddingRequest req = make_embedding(alg, node, kind, projection);
  OutputDocument doc = begin_document("centralizer " + req.echo, &req.g);
  Json& p = doc.json["payload"];

  doc.lines.push_back("subalgebra: " + req.emb.sub.name());
  p["kind"] = req.semisimple ? "semisimple" : "reductive";
  p["subalgebra"] = req.emb.sub.name();
  p["node"] = req.node;

  if (req.semisimple) {
    CentralizerDescription c = discrete_centralizer(req.g, req.node, req.emb);
    RVec sigma = transport_coweight(req.g, req.node, req.emb);
    doc.lines.push_back("centralizer: " + group_name(c.finite_part));
    doc.lines.push_back("quotient by center: " + group_name(c.quotient_by_center));
    doc.lines.push_back("relative: " + form_to_string(c.relative_form));
    p["sigma_coweight"] = json_rvec(sigma);
    p["generator"] = json_rvec(c.generator);
    p["centralizer"] = group_json(c.finite_part);
    p["quotient_by_center"] = group_json(c.quotient_by_center);
    p["relative_form"] = form_json(c.relative_form);
  } else {
    CentralizerDescription c = continuous_centralizer(req.g, req.node, req.emb);
    std::string name = "U_1";
    if (!c.u1_quotient.trivial()) name += " × " + group_name(c.u1_quotient);
    doc.lines.push_back("centralizer: " + name);
    doc.lines.push_back("quotient by U_1: " + group_name(c.u1_quotient));
    doc.lines.push_back("center within U_1: order " + c.u1_center_intersection.str());
    doc.lines.push_back("relative: " + linear_form_to_string(c.h1_form));
    p["centralizer"] = name;
    p["u1_quotient"] = group_json(c.u1_quotient);
    p["u1_center_intersection"] = json_int(c.u1_center_intersection);
    p["h1_form"] = json_ivec(c.h1_form);
    p["h1_text"] = linear_form_to_string(c.h1_form);
  }

  Json factor_forms = Json::array();
  auto forms = subalgebra_center_forms(req.emb);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Json list = Json::array();
    for (const CongruenceForm& f : forms[i]) {
      doc.lines.push_back("factor " + std::to_string(i + 1) + " center form: " +
                          form_to_string(f));
      list.push_back(form_json(f));
    }
    factor_forms.push_back(list);
  }
  p["factor_center_forms"] = factor_forms;
  return doc;
}

OutputDocument cmd_branch(const std::string& alg, int node, const std::string& weight_str,
                          const std::string& kind, const std::string& projection,
                          long long max_weights) {
  EmbeddingRequest req = make_embedding(alg, node, kind, projection);
  Weight w = parse_weight(weight_str);
  if (static_cast<int>(w.size()) != req.g.rank)
    throw UsageError("weight " + weight_str + " has " + std::to_string(w.size()) +
                     " entries; " + req.g.name() + " needs " + std::to_string(req.g.rank));
  if (!is_dominant(w))
    throw ValidationError("highest weight " + render_weight(w) + " is not dominant");

  BranchingResult br = branch(req.g, req.emb, w, max_weights);
  OutputDocument doc =
      begin_document("branch " + req.echo + " " + render_weight(w), &req.g);
  Json& p = doc.json["payload"];

  std::string line = render_branching_line(req.emb.sub, br);
  doc.lines.push_back(line);
  doc.lines.push_back("dimension: " + weyl_dimension(req.g, w).str());
  if (br.label_modulus)
    doc.lines.push_back("label modulus: " + br.label_modulus->str());
  doc.lines.push_back("table:");
  for (const BranchingResult::TableRow& row : br.table)
    doc.lines.push_back(render_table_row(req.emb.sub, row));

  p["highest"] = json_ivec(br.ambient_highest);
  p["dimension"] = json_int(weyl_dimension(req.g, w));
  p["subalgebra"] = req.emb.sub.name();
  p["label_modulus"] = br.label_modulus ? json_int(*br.label_modulus) : Json(nullptr);
  p["rendered"] = line;
  Json summands = Json::array();
  for (const LabeledSummand& s : br.summands) {
    Json entry;
    entry["weight"] = json_ivec(s.sub_highest);
    entry["parts"] = sub_weight_json(req.emb.sub, s.sub_highest);
    entry["label"] = json_int(s.label);
    entry["multiplicity"] = json_int(s.multiplicity);
    summands.push_back(entry);
  }
  p["summands"] = summands;
  Json table = Json::array();
  for (const BranchingResult::TableRow& row : br.table) {
    Json entry;
    entry["weight"] = json_ivec(row.ambient);
    entry["multiplicity"] = json_int(row.multiplicity);
    entry["label"] = json_int(row.label);
    entry["image"] = json_ivec(row.image);
    table.push_back(entry);
  }
  p["table"] = table;
  return doc;
}

/// Returns the process exit code: 0 when every requested check passes.
int cmd_verify(const std::string& only, bool json_out) {
  std::string dir = fixture_directory();
  std::vector<std::string> names =
      only.empty() ? verification_check_names() : std::vector<std::string>{only};

  std::string echo = "verify-paper";
  if (!only.empty()) echo += " --only " + only;
  OutputDocument doc = begin_document(echo, nullptr);

  bool all_passed = true;
  Json checks = Json::array();
  for (const std::string& name : names) {
    CheckResult r = run_check(name, dir);
    all_passed = all_passed && r.passed;
    doc.lines.push_back(std::string(r.passed ? "PASS " : "FAIL ") + r.name);
    for (const std::string& d : r.diffs) doc.lines.push_back("  " + d);
    Json entry;
    entry["name"] = r.name;
    entry["passed"] = r.passed;
    entry["diffs"] = r.diffs;
    checks.push_back(entry);
  }
  doc.lines.push_back(all_passed ? "all checks passed" : "verification failed");
  doc.json["payload"]["passed"] = all_passed;
  doc.json["payload"]["checks"] = checks;

  if (json_out)
    std::cout << doc.json.dump(2) << "\n";
  else
    std::cout << render_text(doc);
  return all_passed ? 0 : 1;
}

void emit(const OutputDocument& doc, bool json_out) {
  if (json_out)
    std::cout << doc.json.dump(2) << "\n";
  else
    std::cout << render_text(doc);
}

int dispatch(int argc, char** argv) {
  CLI::App app{
      "exact centers, centralizers, and branching rules for the maximal regular "
      "subalgebras of the compact simple Lie groups"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "emit the JSON document instead of text");

  std::string info_alg;
  CLI::App* info = app.add_subcommand("info", "diagram and numeric data for one algebra");
  info->add_option("algebra", info_alg, "algebra name, e.g. E6")->required();

  std::string center_alg;
  CLI::App* center = app.add_subcommand("center", "center of the simply connected group");
  center->add_option("algebra", center_alg, "algebra name, e.g. D5")->required();

  std::string cz_alg, cz_kind = "auto", cz_proj;
  int cz_node = 0;
  CLI::App* cz = app.add_subcommand(
      "centralizer", "centralizer of the subgroup from one extended-diagram node deletion");
  cz->add_option("algebra", cz_alg, "ambient algebra")->required();
  cz->add_option("node", cz_node, "deleted node index (1-based)")->required();
  cz->add_option("--kind", cz_kind, "deletion kind (default: by the node's mark)")
      ->check(CLI::IsMember({"auto", "semisimple", "reductive"}));
  cz->add_option("--projection", cz_proj,
                 "projection matrix file (bare names resolve in the fixture directory)");

  std::string br_alg, br_weight, br_kind = "auto", br_proj;
  int br_node = 0;
  long long br_max = kDefaultWeightCapacity;
  CLI::App* br = app.add_subcommand(
      "branch", "branch an irreducible representation over a node-deletion subalgebra");
  br->add_option("algebra", br_alg, "ambient algebra")->required();
  br->add_option("node", br_node, "deleted node index (1-based)")->required();
  br->add_option("weight", br_weight, "highest weight, e.g. \"(1,0,0)\"")->required();
  br->add_option("--kind", br_kind, "deletion kind (default: by the node's mark)")
      ->check(CLI::IsMember({"auto", "semisimple", "reductive"}));
  br->add_option("--projection", br_proj,
                 "projection matrix file (bare names resolve in the fixture directory)");
  br->add_option("--max-weights", br_max, "weight-system size cap")
      ->check(CLI::PositiveNumber);

  std::string only;
  CLI::App* verify = app.add_subcommand(
      "verify-paper", "replay the bundled data tables and worked examples");
  verify->add_option("--only", only,
                     "run one check: table1, lemma41, table23, table4, or examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*info) {
    emit(cmd_info(info_alg), json_out);
  } else if (*center) {
    emit(cmd_center(center_alg), json_out);
  } else if (*cz) {
    emit(cmd_centralizer(cz_alg, cz_node, cz_kind, cz_proj), json_out);
  } else if (*br) {
    emit(cmd_branch(br_alg, br_node, br_weight, br_kind, br_proj, br_max), json_out);
  } else if (*verify) {
    return cmd_verify(only, json_out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const liecent::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const liecent::FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
