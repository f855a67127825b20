#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringext/fixtures.hpp"

using namespace ringext;

TEST_CASE("closures") {
  CHECK(closure(2, {{1, 0}}).order() == 2);
  CHECK(closure(3, {{1, 2, 0}, {1, 0, 2}}).order() == 6);  // S3 by hand count
  CHECK(closure(1, {}).order() == 1);
  // identity is the lexicographically first element
  PermGroup s3 = closure(3, {{1, 2, 0}, {1, 0, 2}});
  CHECK(s3.elements[0] == perm_identity(3));
}

TEST_CASE("catalog groups have the expected orders") {
  std::map<std::string, int> expected = {
      {"C1", 1},   {"C2", 2},  {"C3", 3},  {"C4", 4},  {"C5", 5},
      {"C6", 6},   {"C7", 7},  {"C8", 8},  {"C9", 9},  {"C10", 10},
      {"C11", 11}, {"C12", 12}, {"C2xC2", 4}, {"C2xC2xC2", 8},
      {"C2xC4", 8}, {"C2xC6", 12}, {"S3", 6}, {"D4", 8}, {"D5", 10},
      {"D6", 12},  {"Q8", 8},  {"A4", 12}};
  for (const CatalogGroup& cg : catalog_groups()) {
    CAPTURE(cg.name);
    PermGroup g = closure(cg.degree, cg.gens);
    CHECK(g.order() == expected.at(cg.name));
  }
}

TEST_CASE("Q8: nonabelian with a unique involution") {
  auto cat = catalog_groups();
  const CatalogGroup* q8 = nullptr;
  for (const auto& cg : cat)
    if (cg.name == "Q8") q8 = &cg;
  REQUIRE(q8);
  PermGroup g = closure(q8->degree, q8->gens);
  REQUIRE(g.order() == 8);
  int involutions = 0;
  bool abelian = true;
  for (const Perm& x : g.elements) {
    if (!(x == perm_identity(8)) && perm_compose(x, x) == perm_identity(8))
      ++involutions;
    for (const Perm& y : g.elements)
      if (perm_compose(x, y) != perm_compose(y, x)) abelian = false;
  }
  CHECK(involutions == 1);
  CHECK(!abelian);
  // every subgroup of Q8 is normal
  for (const PermGroup& h : all_subgroups(g)) CHECK(is_normal(g, h));
}

TEST_CASE("normality") {
  PermGroup s3 = closure(3, {{1, 2, 0}, {1, 0, 2}});
  PermGroup a3 = closure(3, {{1, 2, 0}});
  PermGroup c2 = closure(3, {{1, 0, 2}});
  CHECK(is_normal(s3, a3));
  CHECK(!is_normal(s3, c2));
  CHECK(is_normal(s3, s3));
  // conjugation-table oracle for the non-normal case: (012)(01)(021) = (12)
  Perm c = {1, 2, 0}, t = {1, 0, 2};
  Perm conj = perm_compose(c, perm_compose(t, perm_inverse(c)));
  CHECK(!c2.contains(conj));
}

TEST_CASE("subgroup enumeration matches known counts") {
  auto count = [](const char* name) {
    for (const CatalogGroup& cg : catalog_groups())
      if (cg.name == name)
        return (int)all_subgroups(closure(cg.degree, cg.gens)).size();
    return -1;
  };
  CHECK(count("S3") == 6);
  CHECK(count("C12") == 6);
  CHECK(count("C2xC2") == 5);
  CHECK(count("D4") == 10);
  CHECK(count("Q8") == 6);
  CHECK(count("A4") == 10);
  CHECK(count("D6") == 16);
  CHECK(count("C2xC2xC2") == 16);
}

TEST_CASE("group algebra and subgroup extension") {
  Fixture e3 = make_fixture("E3");
  CHECK(e3.ext.dimA() == 6);
  CHECK(e3.ext.dimB() == 3);
  CHECK(!e3.hints.left.empty());
  Fixture e4 = make_fixture("E4");
  CHECK(e4.ext.dimB() == 2);
  CHECK(e4.hints.left.empty());  // non-normal: no candidate
  // trivial subgroup: B = Q
  PermGroup s3 = closure(3, {{1, 2, 0}, {1, 0, 2}});
  SubgroupExtension triv = subgroup_extension(s3, closure(3, {}));
  CHECK(triv.ext.dimB() == 1);
  CHECK(triv.normal);
  // H not inside G rejected
  PermGroup c4 = closure(4, {{1, 2, 3, 0}});
  PermGroup other = closure(4, {{1, 0, 3, 2}});
  CHECK_THROWS_AS((void)subgroup_extension(c4, other), input_error);
}

TEST_CASE("hopf structure on group algebras") {
  PermGroup s3 = closure(3, {{1, 2, 0}, {1, 0, 2}});
  HopfData h = hopf_on_group_algebra(s3);
  CHECK(validate_hopf(h));
  // eps(sum over group) = |G|
  Scalar total;
  for (int i = 0; i < 6; ++i) total += h.counit[i];
  CHECK(total == Scalar(6));
  // antipode is an involution on the basis
  CHECK(h.antipode * h.antipode == Mat::identity(6));
}

TEST_CASE("hopf normality tests agree with group normality") {
  PermGroup s3 = closure(3, {{1, 2, 0}, {1, 0, 2}});
  HopfData h = hopf_on_group_algebra(s3);
  for (const PermGroup& sub : all_subgroups(s3)) {
    SubgroupExtension se = subgroup_extension(s3, sub);
    bool normal = is_normal(s3, sub);
    CAPTURE(sub.order());
    CHECK(hopf_normal_check(h, se.ext.iota) == normal);
    CHECK(bplus_criterion(h, se.ext.iota) == normal);
  }
  // (A, A) is always normal
  SubgroupExtension full = subgroup_extension(s3, s3);
  CHECK(hopf_normal_check(h, full.ext.iota));
  CHECK(bplus_criterion(h, full.ext.iota));
}

TEST_CASE("non-Hopf-subalgebra input is rejected") {
  PermGroup s3 = closure(3, {{1, 2, 0}, {1, 0, 2}});
  HopfData h = hopf_on_group_algebra(s3);
  Algebra a = group_algebra(s3);
  // group subalgebras pass the closure check
  for (const PermGroup& subg : all_subgroups(s3)) {
    SubgroupExtension se = subgroup_extension(s3, subg);
    CHECK_NOTHROW(require_hopf_subalgebra(h, se.ext.iota));
  }
  // span{1, e} for the averaging idempotent e = (1+c+c^2)/3 is a unital
  // subalgebra but Delta(e) lands outside span{1,e} (x) span{1,e}
  int cidx = s3.index_of({1, 2, 0});
  int c2idx = s3.index_of({2, 0, 1});
  Vec e(6);
  e[s3.index_of(perm_identity(3))] = Scalar(1, 3);
  e[cidx] = Scalar(1, 3);
  e[c2idx] = Scalar(1, 3);
  Subspace sub = subalgebra_closure(a, {e});
  REQUIRE(sub.dim() == 2);
  Extension bad = extension_from_subalgebra(a, sub);
  CHECK_THROWS_AS((void)hopf_normal_check(h, bad.iota), input_error);
}
