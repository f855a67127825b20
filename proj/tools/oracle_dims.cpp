// Standalone brute-force oracle for the dimension fixtures used by the
// acceptance suite.  Deliberately self-contained: it has its own fraction
// type, its own Gaussian elimination and its own hardcoded descriptions of
// the small builtin extensions, so its numbers are an independent check on
// the main library.
//
// Usage:
//   oracle_dims            print the table
//   oracle_dims --check F  compare against a frozen table F (exit 1 on drift)

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Frac {
  long long n = 0, d = 1;
  void reduce() {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }
};

Frac frac(long long n, long long d = 1) {
  Frac f{n, d};
  f.reduce();
  return f;
}

Frac add(Frac a, Frac b) { return frac(a.n * b.d + b.n * a.d, a.d * b.d); }
Frac mul(Frac a, Frac b) { return frac(a.n * b.n, a.d * b.d); }
Frac neg(Frac a) { return frac(-a.n, a.d); }
Frac divi(Frac a, Frac b) { return frac(a.n * b.d, a.d * b.n); }
bool is_zero(Frac a) { return a.n == 0; }

using Row = std::vector<Frac>;

// Row-reduces in place, returns the rank.
int rank_of(std::vector<Row>& m) {
  if (m.empty()) return 0;
  size_t cols = m[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols; ++c) {
    int sel = -1;
    for (size_t r = rank; r < m.size(); ++r)
      if (!is_zero(m[r][c])) { sel = (int)r; break; }
    if (sel < 0) continue;
    std::swap(m[rank], m[sel]);
    Frac inv = divi(frac(1), m[rank][c]);
    for (size_t j = 0; j < cols; ++j) m[rank][j] = mul(m[rank][j], inv);
    for (size_t r = 0; r < m.size(); ++r) {
      if ((int)r == rank || is_zero(m[r][c])) continue;
      Frac f = m[r][c];
      for (size_t j = 0; j < cols; ++j)
        m[r][j] = add(m[r][j], neg(mul(f, m[rank][j])));
    }
    ++rank;
    if (rank == (int)m.size()) break;
  }
  return rank;
}

// A tiny algebra description: structure constants c[i][j][k] with
// x_i x_j = sum_k c[i][j][k] x_k, a unit vector, and the embedding matrix
// iota (dimA x dimB) of the subalgebra B.
struct Ext {
  const char* name;
  int nA, nB;
  std::vector<Frac> scA, scB;   // nA^3 / nB^3, index ((i*n)+j)*n+k
  std::vector<Frac> unitA, unitB;
  std::vector<Frac> iota;       // nA x nB, row-major
};

Frac& sc(std::vector<Frac>& v, int n, int i, int j, int k) {
  return v[((size_t)i * n + j) * n + k];
}

std::vector<Frac> mulvec(const Ext& e, const std::vector<Frac>& a,
                         const std::vector<Frac>& b) {
  int n = e.nA;
  std::vector<Frac> out(n);
  for (int i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (is_zero(b[j])) continue;
      Frac ab = mul(a[i], b[j]);
      for (int k = 0; k < n; ++k) {
        Frac c = e.scA[((size_t)i * n + j) * n + k];
        if (!is_zero(c)) out[k] = add(out[k], mul(ab, c));
      }
    }
  }
  return out;
}

std::vector<Frac> basis_vec(int n, int i) {
  std::vector<Frac> v(n);
  v[i] = frac(1);
  return v;
}

std::vector<Frac> iota_col(const Ext& e, int b) {
  std::vector<Frac> v(e.nA);
  for (int i = 0; i < e.nA; ++i) v[i] = e.iota[(size_t)i * e.nB + b];
  return v;
}

// Relation rows of A (x) A  ->  A (x)_B A :  x_i.b (x) x_j - x_i (x) b.x_j.
std::vector<Row> tensor_relations(const Ext& e) {
  int n = e.nA;
  std::vector<Row> rel;
  for (int b = 0; b < e.nB; ++b) {
    std::vector<Frac> bv = iota_col(e, b);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Frac> xb = mulvec(e, basis_vec(n, i), bv);
        std::vector<Frac> bx = mulvec(e, bv, basis_vec(n, j));
        Row row((size_t)n * n);
        for (int k = 0; k < n; ++k) {
          row[(size_t)k * n + j] = add(row[(size_t)k * n + j], xb[k]);
          row[(size_t)i * n + k] = add(row[(size_t)i * n + k], neg(bx[k]));
        }
        rel.push_back(std::move(row));
      }
  }
  return rel;
}

// dim of { w in Q^(n^2) : all given linear maps send w into span(rel) },
// minus dim span(rel).  Maps are given as (n^2 x n^2) matrices.
int quotient_kernel_dim(const std::vector<Row>& rel,
                        const std::vector<std::vector<Row>>& maps, int nn) {
  // Echelonize the relation span once.
  std::vector<Row> relred = rel;
  int relrank = rank_of(relred);
  relred.resize(relrank);
  auto reduce_mod = [&](Row v) {
    for (int r = 0; r < relrank; ++r) {
      int lead = -1;
      for (int c = 0; c < nn; ++c)
        if (!is_zero(relred[r][c])) { lead = c; break; }
      if (lead < 0 || is_zero(v[lead])) continue;
      Frac f = v[lead];
      for (int c = 0; c < nn; ++c)
        v[c] = add(v[c], neg(mul(f, relred[r][c])));
    }
    return v;
  };
  // Kernel of w -> (reduce(map_t * w))_t : build stacked matrix, kernel dim =
  // nn - rank.
  std::vector<Row> stacked;
  for (const auto& m : maps) {
    for (int out = 0; out < nn; ++out) (void)out;
    // columns are images of basis vectors; assemble row-major afterwards
    std::vector<Row> cols;
    for (int c = 0; c < nn; ++c) {
      Row img(nn);
      for (int r = 0; r < nn; ++r) img[r] = m[r][c];
      cols.push_back(reduce_mod(img));
    }
    for (int r = 0; r < nn; ++r) {
      Row row(nn);
      for (int c = 0; c < nn; ++c) row[c] = cols[c][r];
      stacked.push_back(std::move(row));
    }
  }
  int k = nn - rank_of(stacked);
  return k - relrank;
}

std::vector<Row> left_mult_on_tensor(const Ext& e, const std::vector<Frac>& a) {
  int n = e.nA, nn = n * n;
  std::vector<Row> m(nn, Row(nn));
  for (int i = 0; i < n; ++i) {
    std::vector<Frac> ai = mulvec(e, a, basis_vec(n, i));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m[(size_t)k * n + j][(size_t)i * n + j] =
            add(m[(size_t)k * n + j][(size_t)i * n + j], ai[k]);
  }
  return m;
}

std::vector<Row> right_mult_on_tensor(const Ext& e, const std::vector<Frac>& a) {
  int n = e.nA, nn = n * n;
  std::vector<Row> m(nn, Row(nn));
  for (int j = 0; j < n; ++j) {
    std::vector<Frac> ja = mulvec(e, basis_vec(n, j), a);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        m[(size_t)i * n + k][(size_t)i * n + j] =
            add(m[(size_t)i * n + k][(size_t)i * n + j], ja[k]);
  }
  return m;
}

struct Dims {
  int q, t, s, e;
};

Dims oracle_dims(const Ext& ex) {
  int n = ex.nA, nn = n * n;
  std::vector<Row> rel = tensor_relations(ex);
  std::vector<Row> relcopy = rel;
  int relrank = rank_of(relcopy);
  Dims d{};
  d.q = nn - relrank;

  // T = (A (x)_B A)^B: commutator maps per B-basis element.
  std::vector<std::vector<Row>> comms;
  for (int b = 0; b < ex.nB; ++b) {
    std::vector<Frac> bv = iota_col(ex, b);
    std::vector<Row> L = left_mult_on_tensor(ex, bv);
    std::vector<Row> R = right_mult_on_tensor(ex, bv);
    for (int r = 0; r < nn; ++r)
      for (int c = 0; c < nn; ++c) L[r][c] = add(L[r][c], neg(R[r][c]));
    comms.push_back(std::move(L));
  }
  d.t = quotient_kernel_dim(rel, comms, nn);

  // S and E: endomorphisms of A as matrices M (n x n), vectorized row-major.
  // Conditions: M commutes with right mult by iota(b) (for E), plus left
  // mult (for S).
  auto lambda_of = [&](const std::vector<Frac>& a) {
    std::vector<Row> m(n, Row(n));
    for (int j = 0; j < n; ++j) {
      std::vector<Frac> aj = mulvec(ex, a, basis_vec(n, j));
      for (int k = 0; k < n; ++k) m[k][j] = aj[k];
    }
    return m;
  };
  auto rho_of = [&](const std::vector<Frac>& a) {
    std::vector<Row> m(n, Row(n));
    for (int i = 0; i < n; ++i) {
      std::vector<Frac> ia = mulvec(ex, basis_vec(n, i), a);
      for (int k = 0; k < n; ++k) m[k][i] = ia[k];
    }
    return m;
  };
  auto commut_rows = [&](const std::vector<std::vector<Row>>& gens) {
    // rows of constraints  M*G - G*M = 0  in the nn unknowns M[r][c]
    std::vector<Row> rows;
    for (const auto& g : gens)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          Row row(nn);
          for (int k = 0; k < n; ++k) {
            // (M g)[r][c] = sum_k M[r][k] g[k][c]
            row[(size_t)r * n + k] = add(row[(size_t)r * n + k], g[k][c]);
            // (g M)[r][c] = sum_k g[r][k] M[k][c]
            row[(size_t)k * n + c] =
                add(row[(size_t)k * n + c], neg(g[r][k]));
          }
          rows.push_back(std::move(row));
        }
    return rows;
  };
  std::vector<std::vector<Row>> rgens, lgens;
  for (int b = 0; b < ex.nB; ++b) {
    rgens.push_back(rho_of(iota_col(ex, b)));
    lgens.push_back(lambda_of(iota_col(ex, b)));
  }
  std::vector<Row> erows = commut_rows(rgens);
  d.e = nn - rank_of(erows);
  std::vector<Row> srows = commut_rows(rgens);
  std::vector<Row> more = commut_rows(lgens);
  srows.insert(srows.end(), more.begin(), more.end());
  d.s = nn - rank_of(srows);
  return d;
}

Ext make_E1() {
  Ext e;
  e.name = "E1";
  e.nA = 2; e.nB = 1;
  e.scA.assign(8, frac(0));
  sc(e.scA, 2, 0, 0, 0) = frac(1);
  sc(e.scA, 2, 1, 1, 1) = frac(1);
  e.scB.assign(1, frac(1));
  e.unitA = {frac(1), frac(1)};
  e.unitB = {frac(1)};
  e.iota = {frac(1), frac(1)};
  return e;
}

Ext make_E2() {
  // M2(Q), basis e11,e12,e21,e22 ; e_ij e_kl = [j==k] e_il
  Ext e;
  e.name = "E2";
  e.nA = 4; e.nB = 1;
  e.scA.assign(64, frac(0));
  auto idx = [](int i, int j) { return i * 2 + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) sc(e.scA, 4, idx(i, j), idx(k, l), idx(i, l)) = frac(1);
  e.scB.assign(1, frac(1));
  e.unitA = {frac(1), frac(0), frac(0), frac(1)};
  e.unitB = {frac(1)};
  e.iota = {frac(1), frac(0), frac(0), frac(1)};
  return e;
}

Ext make_E5() {
  // Upper triangular 2x2: basis e11, e12, e22; B = diagonal: e11, e22.
  Ext e;
  e.name = "E5";
  e.nA = 3; e.nB = 2;
  e.scA.assign(27, frac(0));
  // products: e11*e11=e11, e11*e12=e12, e12*e22=e12, e22*e22=e22
  sc(e.scA, 3, 0, 0, 0) = frac(1);
  sc(e.scA, 3, 0, 1, 1) = frac(1);
  sc(e.scA, 3, 1, 2, 1) = frac(1);
  sc(e.scA, 3, 2, 2, 2) = frac(1);
  e.scB.assign(8, frac(0));
  sc(e.scB, 2, 0, 0, 0) = frac(1);
  sc(e.scB, 2, 1, 1, 1) = frac(1);
  e.unitA = {frac(1), frac(0), frac(1)};
  e.unitB = {frac(1), frac(1)};
  e.iota = {frac(1), frac(0), frac(0), frac(0), frac(0), frac(1)};
  return e;
}

std::string table() {
  std::ostringstream os;
  for (const Ext& ex : {make_E1(), make_E2(), make_E5()}) {
    Dims d = oracle_dims(ex);
    os << ex.name << " dimQ " << d.q << " dimT " << d.t << " dimS " << d.s
       << " dimE " << d.e << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string t = table();
  if (argc == 3 && std::strcmp(argv[1], "--check") == 0) {
    std::ifstream in(argv[2]);
    if (!in) {
      std::cerr << "cannot open " << argv[2] << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() != t) {
      std::cerr << "oracle drift!\nexpected:\n" << buf.str() << "\ngot:\n" << t;
      return 1;
    }
    std::cout << "oracle dims match frozen fixtures\n";
    return 0;
  }
  std::cout << t;
  return 0;
}
