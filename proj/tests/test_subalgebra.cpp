#include <catch2/catch_amalgamated.hpp>

#include <liecent/io.hpp>
#include <liecent/subalgebra.hpp>

using namespace liecent;

namespace {
const std::string kFixtures = LIECENT_FIXTURE_DIR;

RVec rvec(std::initializer_list<Rat> xs) { return RVec(xs); }
}  // namespace

TEST_CASE("semisimple node deletions") {
  SimpleAlgebra f4 = catalog('F', 4);
  Embedding emb = delete_node_semisimple(f4, 2);
  CHECK(emb.sub.name() == "A2+A2");
  CHECK(emb.kind == EmbeddingKind::Semisimple);
  CHECK(emb.deleted_node == 2);
  CHECK_FALSE(emb.h1_row.has_value());
  REQUIRE(emb.coroot_rows.size() == 4);

  CHECK(delete_node_semisimple(catalog('B', 3), 3).sub.name() == "A3");
  CHECK(delete_node_semisimple(catalog('E', 8), 4).sub.name() == "A4+A4");
  CHECK(delete_node_semisimple(catalog('E', 6), 3).sub.name() == "A2+A2+A2");
  CHECK(delete_node_semisimple(catalog('E', 7), 7).sub.name() == "A7");
  CHECK(delete_node_semisimple(catalog('D', 5), 2).sub.name() == "A1+A1+A3");
  CHECK(delete_node_semisimple(catalog('G', 2), 2).sub.name() == "A2");
  CHECK(delete_node_semisimple(catalog('G', 2), 1).sub.name() == "A1+A1");

  CHECK_THROWS_AS(delete_node_semisimple(catalog('A', 3), 1), DomainError);
  CHECK_THROWS_WITH(delete_node_semisimple(catalog('A', 3), 1),
                    Catch::Matchers::ContainsSubstring("never produces a proper subalgebra"));
  CHECK_THROWS_WITH(delete_node_semisimple(catalog('E', 8), 6),
                    Catch::Matchers::ContainsSubstring("mark 4, which is not prime"));
  CHECK_THROWS_WITH(delete_node_semisimple(catalog('E', 6), 1),
                    Catch::Matchers::ContainsSubstring("mark 1, which is not prime"));
  CHECK_THROWS_AS(delete_node_semisimple(catalog('B', 3), 9), DomainError);
}

TEST_CASE("reductive node deletions") {
  Embedding e6 = delete_node_reductive(catalog('E', 6), 1);
  CHECK(e6.kind == EmbeddingKind::Reductive);
  CHECK(e6.sub.name() == "D5");
  REQUIRE(e6.h1_row.has_value());
  CHECK(*e6.h1_row == IVec{4, 5, 6, 4, 2, 3});

  Embedding d4 = delete_node_reductive(catalog('D', 4), 4);
  CHECK(d4.sub.name() == "A3");
  CHECK(*d4.h1_row == IVec{1, 2, 1, 2});

  Embedding b3 = delete_node_reductive(catalog('B', 3), 1);
  CHECK(b3.sub.name() == "B2");
  CHECK(*b3.h1_row == IVec{2, 2, 1});

  CHECK_THROWS_WITH(delete_node_reductive(catalog('E', 8), 1),
                    Catch::Matchers::ContainsSubstring("has no mark-1 node"));
  CHECK_THROWS_WITH(delete_node_reductive(catalog('D', 4), 2),
                    Catch::Matchers::ContainsSubstring(
                        "has mark 2; a reductive deletion requires mark 1"));
  CHECK_THROWS_AS(delete_node_reductive(catalog('D', 4), 7), DomainError);
}

TEST_CASE("embeddings from explicit projections") {
  SimpleAlgebra f4 = catalog('F', 4);
  ProjectionFile pf = load_projection(kFixtures + "/f4_a2a2.proj");
  SumAlgebra sub = SumAlgebra::of({catalog('A', 2), catalog('A', 2)});
  Embedding emb = embedding_from_projection(f4, sub, pf.rows, pf.h1, 2);
  CHECK(emb.kind == EmbeddingKind::Semisimple);
  CHECK(emb.deleted_node == 2);

  // wrong rank
  CHECK_THROWS_AS(
      embedding_from_projection(f4, SumAlgebra::of({catalog('A', 2)}), pf.rows),
      ValidationError);
  // rows that do not realize the claimed Cartan pairing
  IMat bad{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK_THROWS_AS(embedding_from_projection(f4, sub, bad), ValidationError);

  SimpleAlgebra e6 = catalog('E', 6);
  ProjectionFile pe = load_projection(kFixtures + "/e6_d5.proj");
  Embedding red = embedding_from_projection(e6, SumAlgebra::of({catalog('D', 5)}), pe.rows,
                                            pe.h1, 1);
  CHECK(red.kind == EmbeddingKind::Reductive);
  REQUIRE(red.h1_row.has_value());
  CHECK(*red.h1_row == IVec{1, -1, 0, 1, -1, 0});

  // h1 must be primitive with positive leading entry
  IVec doubled{2, -2, 0, 2, -2, 0};
  CHECK_THROWS_WITH(
      embedding_from_projection(e6, SumAlgebra::of({catalog('D', 5)}), pe.rows, doubled, 1),
      Catch::Matchers::ContainsSubstring("primitive"));
  // h1 must annihilate every coroot row
  IVec skew{1, 0, 0, 0, 0, 0};
  CHECK_THROWS_WITH(
      embedding_from_projection(e6, SumAlgebra::of({catalog('D', 5)}), pe.rows, skew, 1),
      Catch::Matchers::ContainsSubstring("not orthogonal"));
}

TEST_CASE("weight projection") {
  SimpleAlgebra b3 = catalog('B', 3);
  ProjectionFile pf = load_projection(kFixtures + "/b3_a3.proj");
  Embedding emb = embedding_from_projection(b3, SumAlgebra::of({catalog('A', 3)}), pf.rows,
                                            pf.h1, 3);
  auto [image, label] = project_weight(emb, Weight{1, 0, 0});
  CHECK(image == Weight{0, 1, 0});
  CHECK_FALSE(label.has_value());

  SimpleAlgebra e6 = catalog('E', 6);
  ProjectionFile pe = load_projection(kFixtures + "/e6_d5.proj");
  Embedding red = embedding_from_projection(e6, SumAlgebra::of({catalog('D', 5)}), pe.rows,
                                            pe.h1, 1);
  auto [img, lab] = project_weight(red, Weight{1, 0, 0, 0, 0, 0});
  CHECK(img == Weight{0, 0, 0, 0, 1});
  REQUIRE(lab.has_value());
  CHECK(*lab == 1);
}

TEST_CASE("coweight transport") {
  SimpleAlgebra f4 = catalog('F', 4);
  // through the canonical deletion the coweight comes back unchanged
  Embedding canon = delete_node_semisimple(f4, 2);
  CHECK(transport_coweight(f4, 2, canon) == dual_fundamental_coweight(f4, 2));
  CHECK(dual_fundamental_coweight(f4, 2) == rvec({3, 6, 4, 2}));

  ProjectionFile pf = load_projection(kFixtures + "/f4_a2a2.proj");
  Embedding emb = embedding_from_projection(
      f4, SumAlgebra::of({catalog('A', 2), catalog('A', 2)}), pf.rows, pf.h1, 2);
  CHECK(transport_coweight(f4, 2, emb) == rvec({0, -2, -3, -2}));

  Embedding wrong = delete_node_semisimple(catalog('B', 3), 3);
  CHECK_THROWS_AS(transport_coweight(f4, 2, wrong), ValidationError);
}

TEST_CASE("discrete centralizers") {
  SimpleAlgebra f4 = catalog('F', 4);
  ProjectionFile pf = load_projection(kFixtures + "/f4_a2a2.proj");
  Embedding emb = embedding_from_projection(
      f4, SumAlgebra::of({catalog('A', 2), catalog('A', 2)}), pf.rows, pf.h1, 2);
  CentralizerDescription c = discrete_centralizer(f4, 2, emb);
  CHECK(c.finite_part.invariant_factors == std::vector<Int>{3});
  CHECK(c.quotient_by_center.invariant_factors == std::vector<Int>{3});
  CHECK(c.relative_form == CongruenceForm{IVec{0, 1, 0, 1}, 3});
  CHECK_FALSE(c.has_u1);

  SimpleAlgebra b3 = catalog('B', 3);
  ProjectionFile pb = load_projection(kFixtures + "/b3_a3.proj");
  Embedding eb = embedding_from_projection(b3, SumAlgebra::of({catalog('A', 3)}), pb.rows,
                                           pb.h1, 3);
  CentralizerDescription cb = discrete_centralizer(b3, 3, eb);
  CHECK(cb.finite_part.invariant_factors == std::vector<Int>{4});
  CHECK(cb.quotient_by_center.invariant_factors == std::vector<Int>{2});
  CHECK(cb.relative_form == CongruenceForm{IVec{2, 0, 3}, 4});

  // |C| = m_k * |Z| in both cases
  CHECK(cb.finite_part.order() == 2 * center_of(b3).order());
  CHECK(c.finite_part.order() == 3 * center_of(f4).order());
}

TEST_CASE("continuous centralizers") {
  SimpleAlgebra e6 = catalog('E', 6);
  Embedding ce = delete_node_reductive(e6, 1);
  CentralizerDescription c = continuous_centralizer(e6, 1, ce);
  CHECK(c.has_u1);
  CHECK(c.u1_quotient.trivial());
  CHECK(c.u1_center_intersection == 3);
  CHECK(c.h1_form == IVec{4, 5, 6, 4, 2, 3});

  SimpleAlgebra d4 = catalog('D', 4);
  ProjectionFile pd = load_projection(kFixtures + "/d4_a3.proj");
  Embedding ed = embedding_from_projection(d4, SumAlgebra::of({catalog('A', 3)}), pd.rows,
                                           pd.h1, 4);
  CentralizerDescription cd = continuous_centralizer(d4, 4, ed);
  CHECK(cd.u1_quotient.invariant_factors == std::vector<Int>{2});
  CHECK(cd.u1_center_intersection == 2);
  CHECK(cd.h1_form == IVec{1, 0, 1, 0});

  CHECK_THROWS_WITH(continuous_centralizer(d4, 2, delete_node_reductive(d4, 4)),
                    Catch::Matchers::ContainsSubstring("a continuous centralizer requires mark 1"));
}

TEST_CASE("subalgebra center forms") {
  SimpleAlgebra f4 = catalog('F', 4);
  ProjectionFile pf = load_projection(kFixtures + "/f4_a2a2.proj");
  Embedding emb = embedding_from_projection(
      f4, SumAlgebra::of({catalog('A', 2), catalog('A', 2)}), pf.rows, pf.h1, 2);
  auto forms = subalgebra_center_forms(emb);
  REQUIRE(forms.size() == 2);
  REQUIRE(forms[0].size() == 1);
  REQUIRE(forms[1].size() == 1);
  CHECK(forms[0][0] == CongruenceForm{IVec{0, 1, 0, 1}, 3});
  CHECK(forms[1][0] == CongruenceForm{IVec{0, 1, 0, 1}, 3});

  SimpleAlgebra e6 = catalog('E', 6);
  ProjectionFile pe = load_projection(kFixtures + "/e6_d5.proj");
  Embedding red = embedding_from_projection(e6, SumAlgebra::of({catalog('D', 5)}), pe.rows,
                                            pe.h1, 1);
  auto fe = subalgebra_center_forms(red);
  REQUIRE(fe.size() == 1);
  REQUIRE(fe[0].size() == 1);
  CHECK(fe[0][0] == CongruenceForm{IVec{1, 3, 0, 1, 3, 0}, 4});

  SimpleAlgebra d4 = catalog('D', 4);
  ProjectionFile pd = load_projection(kFixtures + "/d4_a3.proj");
  Embedding ed = embedding_from_projection(d4, SumAlgebra::of({catalog('A', 3)}), pd.rows,
                                           pd.h1, 4);
  auto fd = subalgebra_center_forms(ed);
  REQUIRE(fd.size() == 1);
  CHECK(fd[0][0] == CongruenceForm{IVec{1, 0, 3, 2}, 4});
}

TEST_CASE("kernel base types validate U_1 directions") {
  auto types_name = [](const std::vector<AlgebraType>& ts) {
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i) out += "+";
      out += ts[i].name();
    }
    return out;
  };
  SimpleAlgebra e6 = catalog('E', 6);
  CHECK(types_name(kernel_base_types(e6, IVec{4, 5, 6, 4, 2, 3})) == "D5");
  CHECK(types_name(kernel_base_types(e6, IVec{1, -1, 0, 1, -1, 0})) == "D5");
  SimpleAlgebra d4 = catalog('D', 4);
  CHECK(types_name(kernel_base_types(d4, IVec{1, 0, 1, 0})) == "A3");
  CHECK(types_name(kernel_base_types(d4, IVec{1, 2, 1, 2})) == "A3");
  SimpleAlgebra b3 = catalog('B', 3);
  CHECK(types_name(kernel_base_types(b3, IVec{2, 2, 1})) == "B2");
  SimpleAlgebra e7 = catalog('E', 7);
  IVec h7 = primitive_integer(dual_fundamental_coweight(e7, 6));
  CHECK(types_name(kernel_base_types(e7, h7)) == "E6");
}

TEST_CASE("combining invariant factors") {
  CHECK(combine_invariant_factors({{2}, {4}}) == std::vector<Int>{2, 4});
  CHECK(combine_invariant_factors({{2}, {3}}) == std::vector<Int>{6});
  CHECK(combine_invariant_factors({{3}, {3}}) == std::vector<Int>{3, 3});
  CHECK(combine_invariant_factors({}).empty());
  CHECK(combine_invariant_factors({{}, {2}}) == std::vector<Int>{2});
}
