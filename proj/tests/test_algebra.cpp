#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringext/fixtures.hpp"

using namespace ringext;

TEST_CASE("fixture algebras validate") {
  for (const std::string& name : fixture_names()) {
    Fixture f = make_fixture(name);
    CAPTURE(name);
    CHECK(validate_algebra(f.ext.A).ok());
    CHECK(validate_algebra(f.ext.B).ok());
  }
}

TEST_CASE("matrix units satisfy e_ij e_kl = [j==k] e_il (oracle for M2)") {
  Algebra m2 = matrix_algebra(2);
  auto idx = [](int i, int j) { return i * 2 + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          Vec prod = m2.mul(m2.basis(idx(i, j)), m2.basis(idx(k, l)));
          Vec expect(4);
          if (j == k) expect[idx(i, l)] = Scalar(1);
          CHECK(prod == expect);
        }
  CHECK(validate_algebra(m2).ok());
}

TEST_CASE("a perturbed structure constant is reported with its triple") {
  Fixture f = make_fixture("E1");
  Algebra bad = f.ext.A;
  bad.sc(0, 0, 1) += Scalar(1);
  ValidationReport rep = validate_algebra(bad);
  CHECK(!rep.ok());
  bool found = false;
  for (const auto& iss : rep.issues)
    if (iss.kind == ValidationIssue::kAssociativity) found = true;
  CHECK((found || rep.issues[0].i >= 0));
}

TEST_CASE("extension construction: centralizers") {
  SUBCASE("E6: R = Z(A), dim 3 via class sums") {
    Fixture f = make_fixture("E6");
    CHECK(f.ext.R == center(f.ext.A));
    CHECK(f.ext.R.dim() == 3);
  }
  SUBCASE("E1: A commutative so R = A") {
    Fixture f = make_fixture("E1");
    CHECK(f.ext.R == Subspace::full(2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(f.ext.A.mul(f.ext.A.basis(i), f.ext.A.basis(j)) ==
              f.ext.A.mul(f.ext.A.basis(j), f.ext.A.basis(i)));
  }
  SUBCASE("E2: commutant of scalars is everything, dim 4") {
    Fixture f = make_fixture("E2");
    CHECK(f.ext.R.dim() == 4);
  }
}

TEST_CASE("centers") {
  CHECK(center(group_algebra(closure(3, {{1, 2, 0}}))).dim() == 3);
  CHECK(center(matrix_algebra(2)).dim() == 1);
  // class-sum oracle for S3: one basis vector per conjugacy class
  PermGroup s3 = closure(3, {{1, 2, 0}, {1, 0, 2}});
  Algebra a = group_algebra(s3);
  Subspace z = center(a);
  CHECK(z.dim() == 3);
  std::vector<std::vector<int>> classes;
  std::vector<bool> used(6, false);
  for (int i = 0; i < 6; ++i) {
    if (used[i]) continue;
    std::vector<int> cls;
    for (const Perm& g : s3.elements) {
      int j = s3.index_of(
          perm_compose(g, perm_compose(s3.elements[i], perm_inverse(g))));
      if (!used[j]) {
        used[j] = true;
        cls.push_back(j);
      }
    }
    classes.push_back(cls);
  }
  CHECK(classes.size() == 3);
  for (const auto& cls : classes) {
    Vec sum(6);
    for (int idx : cls) sum[idx] = Scalar(1);
    CHECK(z.contains(sum));
  }
}

TEST_CASE("invalid morphisms are rejected with a reason") {
  Fixture f = make_fixture("E1");
  // Q -> QxQ, 1 |-> e0: multiplicative but not unital
  Mat bad(2, 1);
  bad.at(0, 0) = Scalar(1);
  CHECK_THROWS_AS(
      (void)make_extension(f.ext.B, f.ext.A,
                           make_morphism(f.ext.B, f.ext.A, bad)),
      input_error);
  Mat collapse(2, 2);
  collapse.at(0, 0) = Scalar(1);
  collapse.at(1, 0) = Scalar(1);
  collapse.at(0, 1) = Scalar(1);
  collapse.at(1, 1) = Scalar(1);
  CHECK_THROWS_AS(
      (void)make_extension(f.ext.A, f.ext.A,
                           make_morphism(f.ext.A, f.ext.A, collapse)),
      input_error);
}

TEST_CASE("extension invariants on all fixtures") {
  for (const std::string& name : fixture_names()) {
    Fixture f = make_fixture(name);
    CAPTURE(name);
    const Extension& e = f.ext;
    CHECK(e.iota_image.contains(e.A.unit()));
    CHECK(e.R.contains(e.A.unit()));
    CHECK(e.R.contains(center(e.A).basis_vec(0)));
    for (int i = 0; i < e.R.dim(); ++i)
      for (int j = 0; j < e.R.dim(); ++j)
        CHECK(e.R.contains(e.A.mul(e.R.basis_vec(i), e.R.basis_vec(j))));
    // iota(B) n R = iota(Z(B))
    std::vector<Vec> zb_gens;
    Subspace zb = center(e.B);
    for (int i = 0; i < zb.dim(); ++i) zb_gens.push_back(e.iota_of(zb.basis_vec(i)));
    CHECK(intersect(e.iota_image, e.R) ==
          Subspace::from_span(e.dimA(), zb_gens));
    CHECK(e.lambda_of(e.A.unit()) == Mat::identity(e.dimA()));
    CHECK(e.rho_of(e.A.unit()) == Mat::identity(e.dimA()));
    for (int i = 0; i < e.dimA(); ++i)
      for (int j = 0; j < e.dimA(); ++j)
        CHECK(e.lambda_basis[i] * e.rho_basis[j] ==
              e.rho_basis[j] * e.lambda_basis[i]);
  }
}

TEST_CASE("sugano identity") {
  Fixture f = make_fixture("E2");
  SUBCASE("zero and unit ideals") {
    CHECK(sugano_ideal_identity(f.ext, Ideal{Subspace::zero(4)}));
    CHECK(sugano_ideal_identity(f.ext, Ideal{Subspace::full(4)}));
  }
  SUBCASE("M2 is simple: the ideal generated by any basis element is A") {
    for (int i = 0; i < 4; ++i) {
      Subspace cur = Subspace::from_span(4, {f.ext.A.basis(i)});
      while (true) {
        Subspace bigger = sum(left_module_span(f.ext.A, cur),
                              right_module_span(f.ext.A, cur));
        bigger = sum(bigger, cur);
        if (bigger.dim() == cur.dim()) break;
        cur = bigger;
      }
      CHECK(cur.dim() == 4);
    }
  }
  SUBCASE("non-ideal input is rejected") {
    Subspace line = Subspace::from_span(4, {f.ext.A.basis(1)});
    CHECK(!is_ideal(f.ext.A, line));
    CHECK_THROWS_AS((void)sugano_ideal_identity(f.ext, Ideal{line}), input_error);
  }
  SUBCASE("E5 has a proper ideal where the identity fails") {
    Fixture e5 = make_fixture("E5");
    Subspace rad = Subspace::from_span(3, {e5.ext.A.basis(1)});
    CHECK(is_ideal(e5.ext.A, rad));
    CHECK(!sugano_ideal_identity(e5.ext, Ideal{rad}));
  }
}

TEST_CASE("subalgebra closure and extension-from-subalgebra") {
  Algebra m2 = matrix_algebra(2);
  Subspace sub = subalgebra_closure(m2, {m2.basis(0)});
  CHECK(sub.dim() == 2);
  Extension ext = extension_from_subalgebra(m2, sub);
  CHECK(validate_algebra(ext.B).ok());
  CHECK(ext.dimB() == 2);
  CHECK(ext.R.dim() == 2);
}
