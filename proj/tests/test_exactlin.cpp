#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringext/matrix.hpp"

using namespace ringext;

namespace {

Mat mat2(std::initializer_list<long long> vals, int rows, int cols) {
  Mat m(rows, cols);
  auto it = vals.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar(*it++);
  return m;
}

// simple deterministic PRNG for property-style tests
struct XorShift {
  uint64_t s;
  explicit XorShift(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long long small(int lo, int hi) { return lo + (long long)(next() % (hi - lo + 1)); }
};

}  // namespace

TEST_CASE("scalar arithmetic stays exact and reduced") {
  Scalar a(1, 2), b(1, 3);
  CHECK((a + b) == Scalar(5, 6));
  CHECK((a * b) == Scalar(1, 6));
  CHECK((a - b) == Scalar(1, 6));
  CHECK((a / b) == Scalar(3, 2));
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK(Scalar(-2, -4) == Scalar(1, 2));
  CHECK(Scalar(0, 7) == Scalar(0));
  CHECK(Scalar(7).str_pq() == "7/1");
  CHECK(Scalar(-1, 2).str_pq() == "-1/2");
}

TEST_CASE("scalar overflow promotes and demotes transparently") {
  Scalar big(1);
  for (int i = 0; i < 5; ++i) big *= Scalar(1000000000000LL);  // 10^60
  CHECK(big.is_big());
  Scalar back = big;
  for (int i = 0; i < 5; ++i) back /= Scalar(1000000000000LL);
  CHECK(back == Scalar(1));
  CHECK(!back.is_big());
  // fractions with huge intermediate values cancel back down
  Scalar x(1, 3);
  Scalar y = x * big;
  CHECK(y / big == x);
}

TEST_CASE("scalar parse") {
  CHECK(*Scalar::parse("3/4") == Scalar(3, 4));
  CHECK(*Scalar::parse("-3/4") == Scalar(-3, 4));
  CHECK(*Scalar::parse("12") == Scalar(12));
  CHECK(!Scalar::parse("1/0").has_value());
  CHECK(!Scalar::parse("x").has_value());
  CHECK(!Scalar::parse("1/").has_value());
  CHECK(!Scalar::parse("").has_value());
}

TEST_CASE("rref identity and zero") {
  Mat id = Mat::identity(3);
  RrefResult r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<int>{0, 1, 2});
  CHECK(r.rank == 3);

  Mat z(2, 2);
  RrefResult rz = rref(z);
  CHECK(rz.reduced == z);
  CHECK(rz.pivots.empty());
  CHECK(rz.rank == 0);
}

TEST_CASE("rref on a rank-1 matrix matches hand elimination") {
  // [[1,2],[2,4]] -> [[1,2],[0,0]]
  Mat m = mat2({1, 2, 2, 4}, 2, 2);
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.reduced == mat2({1, 2, 0, 0}, 2, 2));
}

TEST_CASE("rref is idempotent") {
  XorShift rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 1 + (int)(rng.next() % 5), cols = 1 + (int)(rng.next() % 5);
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar(rng.small(-3, 3));
    Mat once = rref(m).reduced;
    CHECK(rref(once).reduced == once);
  }
}

TEST_CASE("solve: identity, zero, and the substitution oracle") {
  Vec b{Scalar(3), Scalar(-5)};
  auto r = solve(Mat::identity(2), b);
  REQUIRE(r.has_value());
  CHECK(r->particular == b);
  CHECK(r->homogeneous.dim() == 0);

  auto rz = solve(Mat(2, 2), Vec(2));
  REQUIRE(rz.has_value());
  CHECK(rz->particular == Vec(2));
  CHECK(rz->homogeneous == Subspace::full(2));

  // m = [[1,1],[1,1]], b = (1,1): particular (1,0), kernel = line (1,-1)
  Mat m = mat2({1, 1, 1, 1}, 2, 2);
  auto rs = solve(m, Vec{Scalar(1), Scalar(1)});
  REQUIRE(rs.has_value());
  CHECK(rs->particular == Vec{Scalar(1), Scalar(0)});
  // substitution oracle: m * particular == b exactly
  CHECK(m.apply(rs->particular) == Vec{Scalar(1), Scalar(1)});
  CHECK(rs->homogeneous.dim() == 1);
  CHECK(rs->homogeneous ==
        Subspace::from_span(2, {Vec{Scalar(1), Scalar(-1)}}));
  // infeasible
  CHECK(!solve(m, Vec{Scalar(1), Scalar(2)}).has_value());
}

TEST_CASE("solve success properties on random systems") {
  XorShift rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 1 + (int)(rng.next() % 4), cols = 1 + (int)(rng.next() % 4);
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar(rng.small(-2, 2));
    Vec x(cols);
    for (int c = 0; c < cols; ++c) x[c] = Scalar(rng.small(-2, 2));
    Vec b = m.apply(x);
    auto s = solve(m, b);
    REQUIRE(s.has_value());
    CHECK(m.apply(s->particular) == b);
    for (int k = 0; k < s->homogeneous.dim(); ++k)
      CHECK(vec_is_zero(m.apply(s->homogeneous.basis_vec(k))));
    // rank-nullity
    CHECK(s->homogeneous.dim() + rank_of(m) == cols);
  }
}

TEST_CASE("kernel: identity, zero, rank-nullity oracle") {
  CHECK(kernel(Mat::identity(4)).dim() == 0);
  CHECK(kernel(Mat(3, 3)) == Subspace::full(3));
  Mat m = mat2({1, 2, 2, 4}, 2, 2);
  Subspace k = kernel(m);
  CHECK(k.dim() == 1);  // rank-nullity: 2 - rank 1
  CHECK(k == Subspace::from_span(2, {Vec{Scalar(2), Scalar(-1)}}));
}

TEST_CASE("intersect") {
  Subspace u = Subspace::from_span(2, {Vec{Scalar(1), Scalar(0)}});
  Subspace v = Subspace::from_span(2, {Vec{Scalar(0), Scalar(1)}});
  CHECK(intersect(u, u) == u);
  CHECK(intersect(u, v).dim() == 0);

  // two distinct planes in 3-space meet in a line; oracle: the kernel of the
  // stacked normal equations
  Subspace p1 = Subspace::from_span(
      3, {Vec{Scalar(1), Scalar(0), Scalar(0)}, Vec{Scalar(0), Scalar(1), Scalar(0)}});
  Subspace p2 = Subspace::from_span(
      3, {Vec{Scalar(0), Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(0), Scalar(1)}});
  Subspace line = intersect(p1, p2);
  CHECK(line.dim() == 1);
  CHECK(line.contains(Vec{Scalar(0), Scalar(1), Scalar(0)}));
  CHECK(input_error("x").what() != nullptr);
  CHECK_THROWS_AS((void)intersect(p1, u), input_error);
}

TEST_CASE("subspace canonical equality") {
  Subspace a = Subspace::from_span(3, {Vec{Scalar(2), Scalar(0), Scalar(2)},
                                       Vec{Scalar(0), Scalar(3), Scalar(0)}});
  Subspace b = Subspace::from_span(3, {Vec{Scalar(1), Scalar(1), Scalar(1)},
                                       Vec{Scalar(0), Scalar(-1), Scalar(0)}});
  CHECK(a == b);
}

TEST_CASE("quotient: project/section identities") {
  // quotient of Q^3 by span{(1,1,0)}
  QuotientSpace q(3, {Vec{Scalar(1), Scalar(1), Scalar(0)}});
  CHECK(q.dim() == 2);
  for (int i = 0; i < q.dim(); ++i) {
    Vec coords(q.dim());
    coords[i] = Scalar(1);
    CHECK(q.project(q.section(i)) == coords);
  }
  // the class of (1,0,0) equals the class of (0,-1,0)
  CHECK(q.project(unit_vec(3, 0)) == q.project(Vec{Scalar(0), Scalar(-1), Scalar(0)}));
}

TEST_CASE("generic invertibility: trivial families") {
  GenInvResult yes = generic_invertibility({Mat::identity(2)}, 2);
  CHECK(yes.invertible);
  CHECK(*yes.witness == Vec{Scalar(1)});

  GenInvResult no = generic_invertibility({Mat(2, 2)}, 2);
  CHECK(!no.invertible);

  GenInvResult empty = generic_invertibility({}, 2);
  CHECK(!empty.invertible);

  GenInvResult zero_dim = generic_invertibility({}, 0);
  CHECK(zero_dim.invertible);  // det of the 0x0 matrix is 1
}

TEST_CASE("generic invertibility: {E11, E22} needs the combination (1,1)") {
  Mat e11(2, 2), e22(2, 2);
  e11.at(0, 0) = Scalar(1);
  e22.at(1, 1) = Scalar(1);
  GenInvResult r = generic_invertibility({e11, e22}, 2);
  CHECK(r.invertible);
  CHECK(*r.witness == Vec{Scalar(1), Scalar(1)});  // det = l1*l2
}

TEST_CASE("generic invertibility agrees with exhaustive grid search") {
  XorShift rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + (int)(rng.next() % 2);
    int k = 1 + (int)(rng.next() % 2);
    std::vector<Mat> fam;
    for (int i = 0; i < k; ++i) {
      Mat m(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          m.at(r, c) = (rng.next() % 3 == 0) ? Scalar(rng.small(-1, 1)) : Scalar(0);
      fam.push_back(m);
    }
    GenInvResult fast = generic_invertibility(fam, n);
    // brute force over the full grid
    bool brute = false;
    std::vector<long long> idx(k, 0);
    while (!brute) {
      Mat m(n, n);
      for (int i = 0; i < k; ++i) m = m + fam[i].scaled(Scalar(idx[i]));
      if (!det(m).is_zero()) brute = true;
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n) idx[pos--] = 0;
      if (pos < 0) break;
      ++idx[pos];
    }
    CHECK(fast.invertible == brute);
    if (fast.invertible) {
      Mat m(n, n);
      for (int i = 0; i < k; ++i) m = m + fam[i].scaled((*fast.witness)[i]);
      CHECK(!det(m).is_zero());
    }
  }
}
