#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringext/bicoring.hpp"
#include "ringext/fixtures.hpp"

using namespace ringext;

namespace {

struct Lab {
  Fixture fx;
  TensorSquare ts;
  TRing tr;
  Subspace s;
  D2Result d2;

  explicit Lab(const std::string& name)
      : fx(make_fixture(name)),
        ts(build_tensor_square(fx.ext)),
        tr(t_ring(ts)),
        s(s_subspace(fx.ext)),
        d2(check_d2(ts, s, fx.hints)) {}
};

}  // namespace

TEST_CASE("pairing") {
  for (const char* name : {"E3", "E6", "E1", "E2"}) {
    CAPTURE(name);
    Lab lab(name);
    PairingResult p = pairing(lab.fx.ext, lab.ts, lab.s);
    CHECK(p.values_in_r);
    CHECK(p.left_nondegenerate);
    CHECK(p.right_nondegenerate);
    // <id, 1_T> = 1
    auto idc = lab.s.coords_of(Mat::identity(lab.fx.ext.dimA()).vectorized());
    REQUIRE(idc.has_value());
    Vec val(lab.fx.ext.R.dim());
    for (int l = 0; l < lab.s.dim(); ++l) {
      if ((*idc)[l].is_zero()) continue;
      for (int k = 0; k < lab.tr.dim(); ++k) {
        if (lab.tr.unit_tcoords[k].is_zero()) continue;
        Vec term = vec_scaled(p.values[l][k], (*idc)[l] * lab.tr.unit_tcoords[k]);
        for (size_t q = 0; q < val.size(); ++q) val[q] += term[q];
      }
    }
    CHECK(lab.fx.ext.R.from_coords(val) == lab.fx.ext.A.unit());
  }
}

TEST_CASE("T bialgebroid axioms on the D2 fixtures") {
  for (const char* name : {"E1", "E2", "E3", "E6"}) {
    CAPTURE(name);
    Lab lab(name);
    REQUIRE(lab.d2.right.has_value());
    TBialgebroid bia =
        build_t_bialgebroid(lab.fx.ext, lab.ts, lab.tr, *lab.d2.right);
    for (const auto& [item, ok] : bia.checks.items) {
      CAPTURE(item);
      CHECK(ok);
    }
  }
}

TEST_CASE("E1: eps_T(class(x (x) y)) = xy in the commutative fixture") {
  Lab lab("E1");
  REQUIRE(lab.d2.right.has_value());
  TBialgebroid bia = build_t_bialgebroid(lab.fx.ext, lab.ts, lab.tr, *lab.d2.right);
  const Algebra& A = lab.fx.ext.A;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Vec cls = lab.ts.project(TensorSquare::kron(A.basis(i), A.basis(j)));
      auto tc = lab.tr.from_q(cls);
      REQUIRE(tc.has_value());
      Vec eps = lab.fx.ext.R.from_coords(bia.counit.apply(*tc));
      CHECK(eps == A.mul(A.basis(i), A.basis(j)));
    }
}

TEST_CASE("coproduct independence from the quasibase choice") {
  // when the right quasibase solution space is positive-dimensional, a
  // second solution must give the same Delta_T
  Lab lab("E1");
  D2Result d2 = check_d2(lab.ts, lab.s, {}, /*want_second=*/true);
  REQUIRE(d2.right.has_value());
  if (d2.right_second.has_value()) {
    TBialgebroid b1 = build_t_bialgebroid(lab.fx.ext, lab.ts, lab.tr, *d2.right);
    TBialgebroid b2 =
        build_t_bialgebroid(lab.fx.ext, lab.ts, lab.tr, *d2.right_second);
    CHECK(b1.coproduct == b2.coproduct);
  }
  Lab lab2("E2");
  D2Result d22 = check_d2(lab2.ts, lab2.s, {}, /*want_second=*/true);
  REQUIRE(d22.right.has_value());
  if (d22.right_second.has_value()) {
    TBialgebroid b1 = build_t_bialgebroid(lab2.fx.ext, lab2.ts, lab2.tr, *d22.right);
    TBialgebroid b2 =
        build_t_bialgebroid(lab2.fx.ext, lab2.ts, lab2.tr, *d22.right_second);
    CHECK(b1.coproduct == b2.coproduct);
  }
}

TEST_CASE("coring + coaction + galois on every D2 fixture") {
  for (const char* name : {"E1", "E2", "E3", "E6"}) {
    CAPTURE(name);
    Lab lab(name);
    REQUIRE(lab.d2.right.has_value());
    TBialgebroid bia =
        build_t_bialgebroid(lab.fx.ext, lab.ts, lab.tr, *lab.d2.right);
    Coring c = build_coring(lab.fx.ext, lab.ts, lab.tr, bia);
    for (const auto& [item, ok] : c.checks.items) {
      CAPTURE(item);
      CHECK(ok);
    }
    GaloisRecord g = galois_check(lab.fx.ext, lab.ts, c);
    for (const auto& [item, ok] : g.checks.items) {
      CAPTURE(item);
      CHECK(ok);
    }
    CheckRecord co = coaction_checks(lab.fx.ext, lab.ts, lab.tr, bia, c);
    for (const auto& [item, ok] : co.items) {
      CAPTURE(item);
      CHECK(ok);
    }
    // dim C = dim A (x)_B A via beta
    CHECK(c.C.dim() == lab.ts.dim());
  }
}

TEST_CASE("coinvariants") {
  for (const char* name : {"E1", "E3", "E6"}) {
    CAPTURE(name);
    Lab lab(name);
    REQUIRE(lab.d2.right.has_value());
    TBialgebroid bia =
        build_t_bialgebroid(lab.fx.ext, lab.ts, lab.tr, *lab.d2.right);
    Coring c = build_coring(lab.fx.ext, lab.ts, lab.tr, bia);
    CoinvariantsResult ci = coinvariants(lab.fx.ext, lab.tr, c);
    CHECK(ci.equals_iota_b);  // all three are balanced
    CHECK(ci.excess_dim == 0);
    CHECK(ci.space.contains(lab.fx.ext.iota_image));
  }
}

TEST_CASE("integrals") {
  SUBCASE("E6: t0 = 1 (x) 1, k = 1") {
    Lab lab("E6");
    auto frob = check_frobenius(lab.fx.ext);
    REQUIRE(frob.has_value());
    IntegralsResult r = integrals(lab.fx.ext, lab.ts, lab.tr, lab.s, *frob);
    CHECK(r.t0_in_t);
    CHECK(r.t0_nonzero);
    CHECK(r.integral_law);
    CHECK(r.z_invertible);
    CHECK(r.z_inverse_central);
    REQUIRE(r.k.has_value());
    CHECK(*r.k == Scalar(1));
    CHECK(r.e_integral);
  }
  SUBCASE("E2: trace-form dual bases give k = 1/2") {
    Lab lab("E2");
    auto frob = check_frobenius(lab.fx.ext);
    REQUIRE(frob.has_value());
    IntegralsResult r = integrals(lab.fx.ext, lab.ts, lab.tr, lab.s, *frob);
    CHECK(r.t0_in_t);
    CHECK(r.integral_law);
    REQUIRE(r.k.has_value());
    CHECK(*r.k == Scalar(1, 2));
    CHECK(r.e_integral);
  }
  SUBCASE("E3: group-algebra dual bases; integral law on every basis t") {
    Lab lab("E3");
    auto frob = check_frobenius(lab.fx.ext);
    REQUIRE(frob.has_value());
    IntegralsResult r = integrals(lab.fx.ext, lab.ts, lab.tr, lab.s, *frob);
    CHECK(r.t0_in_t);
    CHECK(r.t0_nonzero);
    CHECK(r.integral_law);
    CHECK(r.z_invertible);
    CHECK(r.z_inverse_central);
    CHECK(r.e_integral);
  }
}

TEST_CASE("closing criterion: beta + projectivity vs right D2, all fixtures") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    Lab lab(name);
    Section5Criterion crit = section5_criterion(lab.fx.ext, lab.ts, lab.tr,
                                                lab.d2.right.has_value());
    CHECK(crit.agree);
  }
}
