#include <catch2/catch_amalgamated.hpp>

#include <liecent/torus.hpp>

using namespace liecent;

namespace {
RVec rvec(std::initializer_list<Rat> xs) { return RVec(xs); }

RMat to_rmat(const IMat& m) { return to_rational(m); }
}  // namespace

TEST_CASE("Smith normal form") {
  IMat m{{2, 0}, {0, 3}};
  SmithResult s = smith_normal_form(m);
  CHECK(s.diagonal() == IVec{1, 6});
  // decomposition u * m * v == d with unimodular u, v
  RMat lhs = mat_mul(mat_mul(to_rmat(s.u), to_rmat(m)), to_rmat(s.v));
  CHECK(lhs == to_rmat(s.d));
  CHECK((det(to_rmat(s.u)) == 1 || det(to_rmat(s.u)) == -1));
  CHECK((det(to_rmat(s.v)) == 1 || det(to_rmat(s.v)) == -1));
  CHECK(mat_mul(to_rmat(s.v), to_rmat(s.v_inv)) == to_rmat(identity_matrix(2)));

  SmithResult t = smith_normal_form(IMat{{4, 6}, {2, 2}});
  CHECK(t.diagonal() == IVec{2, 2});

  SmithResult r = smith_normal_form(IMat{{1, 2, 3}, {4, 5, 6}});
  auto diag = r.diagonal();
  REQUIRE(diag.size() == 2);
  CHECK(diag[0] == 1);
  CHECK(diag[1] == 3);

  // divisibility chain on a Cartan matrix quotient: D4 has Z_2 x Z_2
  SmithResult d4 = smith_normal_form(catalog('D', 4).cartan);
  CHECK(d4.diagonal() == IVec{1, 1, 2, 2});
  SmithResult a5 = smith_normal_form(catalog('A', 5).cartan);
  CHECK(a5.diagonal() == IVec{1, 1, 1, 1, 6});
}

TEST_CASE("lattice row basis") {
  IMat basis = lattice_row_basis(IMat{{2, 0}, {0, 2}, {1, 1}});
  REQUIRE(basis.size() == 2);
  Rat d = det(to_rmat(basis));
  CHECK((d == 2 || d == -2));
  // (1,1) and (2,0) lie in the span
  RMat bt = transpose(to_rmat(basis));
  for (IVec v : {IVec{1, 1}, IVec{2, 0}, IVec{1, -1}}) {
    auto x = solve(bt, to_rational(v));
    REQUIRE(x.has_value());
    for (const Rat& c : *x) REQUIRE(denominator(c) == 1);
  }
  CHECK(lattice_row_basis(IMat{{0, 0}}).empty());
}

TEST_CASE("lattice quotients") {
  auto q1 = lattice_quotient({rvec({Rat(1, 2), 0}), rvec({0, Rat(1, 2)})}, {}, 2);
  CHECK(q1.invariant_factors == std::vector<Int>{2, 2});
  CHECK(q1.order() == 4);

  auto q2 = lattice_quotient({rvec({Rat(1, 2), 0}), rvec({0, Rat(1, 3)})}, {}, 2);
  CHECK(q2.invariant_factors == std::vector<Int>{6});

  // Z_4 generated by (1/4, 1/2) modulo the Z_2 generated by (1/2, 0)
  auto q3 = lattice_quotient({rvec({Rat(1, 4), Rat(1, 2)})}, {rvec({Rat(1, 2), 1})}, 2);
  CHECK(q3.invariant_factors == std::vector<Int>{2});

  auto q4 = lattice_quotient({rvec({Rat(1, 2), Rat(1, 2)})}, {rvec({Rat(1, 2), Rat(1, 2)})}, 2);
  CHECK(q4.trivial());
  CHECK(q4.order() == 1);
  CHECK(lattice_quotient({}, {}, 3).trivial());

  // generators realize the invariant factors
  REQUIRE(q1.generators.size() == 2);
  for (std::size_t i = 0; i < q1.generators.size(); ++i)
    CHECK(element_order(q1.generators[i]) == q1.invariant_factors[i]);
  auto q5 = lattice_quotient({rvec({Rat(1, 2), 0})}, {}, 2, /*want_generators=*/false);
  CHECK(q5.invariant_factors == std::vector<Int>{2});
  CHECK(q5.generators.empty());
}

TEST_CASE("centers of the simply connected groups") {
  CHECK(center_of(catalog('A', 1)).invariant_factors == std::vector<Int>{2});
  CHECK(center_of(catalog('A', 3)).invariant_factors == std::vector<Int>{4});
  CHECK(center_of(catalog('A', 7)).invariant_factors == std::vector<Int>{8});
  CHECK(center_of(catalog('B', 3)).invariant_factors == std::vector<Int>{2});
  CHECK(center_of(catalog('C', 4)).invariant_factors == std::vector<Int>{2});
  CHECK(center_of(catalog('D', 4)).invariant_factors == std::vector<Int>{2, 2});
  CHECK(center_of(catalog('D', 5)).invariant_factors == std::vector<Int>{4});
  CHECK(center_of(catalog('D', 6)).invariant_factors == std::vector<Int>{2, 2});
  CHECK(center_of(catalog('E', 6)).invariant_factors == std::vector<Int>{3});
  CHECK(center_of(catalog('E', 7)).invariant_factors == std::vector<Int>{2});
  CHECK(center_of(catalog('E', 8)).trivial());
  CHECK(center_of(catalog('F', 4)).trivial());
  CHECK(center_of(catalog('G', 2)).trivial());

  // |Z| = det of the Cartan matrix
  for (auto [s, n] : {std::pair{'A', 6}, {'B', 7}, {'C', 5}, {'D', 7}, {'E', 7}}) {
    SimpleAlgebra g = catalog(s, n);
    CHECK(center_of(g).order() == g.det_cartan);
  }

  CHECK(mark_one_nodes(catalog('D', 4)) == std::vector<int>{1, 3, 4});
  CHECK(mark_one_nodes(catalog('E', 6)) == std::vector<int>{1, 5});
  CHECK(mark_one_nodes(catalog('E', 7)) == std::vector<int>{6});
  CHECK(mark_one_nodes(catalog('E', 8)).empty());
  CHECK(mark_one_nodes(catalog('A', 4)) == std::vector<int>{1, 2, 3, 4});

  // the first fundamental coweight generates the full A_n center
  SimpleAlgebra a3 = catalog('A', 3);
  RVec w1 = dual_fundamental_coweight(a3, 1);
  CHECK(element_order(w1) == 4);
  CHECK(finite_abelian_structure({w1}, 3).invariant_factors == std::vector<Int>{4});
}

TEST_CASE("torus element helpers") {
  RVec t = canonical_torus_element(rvec({Rat(3, 2), Rat(-1, 4)}));
  CHECK(t == rvec({Rat(1, 2), Rat(3, 4)}));
  CHECK(element_order(t) == 4);
  CHECK(element_order(rvec({0, 0})) == 1);

  CongruenceForm f = eigenvalue_form(rvec({Rat(1, 2), Rat(3, 4)}));
  CHECK(f.coeffs == IVec{2, 3});
  CHECK(f.modulus == 4);
  CongruenceForm g = eigenvalue_form(rvec({Rat(1, 3), Rat(2, 3)}));
  CHECK(g.coeffs == IVec{1, 2});
  CHECK(g.modulus == 3);
  CHECK(eigenvalue_form(rvec({0, 0})).trivial());

  CongruenceForm h{IVec{2, 0, 3}, 4};
  CHECK(evaluate_form(h, Weight{1, 0, 0}) == 2);
  CHECK(evaluate_form(h, Weight{0, 0, 1}) == 3);
  CHECK(evaluate_form(h, Weight{-1, 0, 0}) == 2);
  CHECK(evaluate_form(h, Weight{1, 5, 2}) == 0);
}

TEST_CASE("one parameter subgroup membership") {
  IVec w0{1, 0, 1, 0};
  CHECK(on_one_parameter_subgroup(w0, rvec({Rat(1, 2), 0, Rat(1, 2), 0})));
  CHECK(on_one_parameter_subgroup(w0, rvec({Rat(1, 3), 0, Rat(1, 3), 0})));
  CHECK(on_one_parameter_subgroup(w0, rvec({Rat(3, 2), 1, Rat(1, 2), 2})));
  CHECK_FALSE(on_one_parameter_subgroup(w0, rvec({Rat(1, 2), 0, 0, 0})));
  CHECK(on_one_parameter_subgroup(w0, rvec({0, 0, 0, 0})));
  CHECK(on_one_parameter_subgroup(IVec{0, 0}, rvec({1, 2})));
  CHECK_FALSE(on_one_parameter_subgroup(IVec{0, 0}, rvec({Rat(1, 2), 0})));
}

TEST_CASE("renderings") {
  FiniteAbelianGroup grp;
  grp.invariant_factors = {2, 4};
  CHECK(group_name(grp) == "Z_4 × Z_2");
  CHECK(group_name(FiniteAbelianGroup{}) == "trivial");
  FiniteAbelianGroup one;
  one.invariant_factors = {3};
  CHECK(group_name(one) == "Z_3");

  CHECK(form_to_string(CongruenceForm{IVec{0, 1, 0, 1}, 3}) == "m_2+m_4 mod 3");
  CHECK(form_to_string(CongruenceForm{IVec{2, 0, 3}, 4}) == "2m_1+3m_3 mod 4");
  CHECK(form_to_string(CongruenceForm{IVec{0, 0}, 1}) == "0 mod 1");

  CHECK(linear_form_to_string(IVec{1, -1, 0, 1}) == "m_1-m_2+m_4");
  CHECK(linear_form_to_string(IVec{2, 0, -3}) == "2m_1-3m_3");
  CHECK(linear_form_to_string(IVec{0, 0}) == "0");
}
