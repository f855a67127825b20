#pragma once

// Dense exact linear algebra over Scalar: matrices, reduced row echelon
// form, solving, kernels, canonical subspaces and balanced-quotient spaces.
// Subspaces are always stored in RREF so equality of subspaces is equality
// of representations.

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "ringext/scalar.hpp"

namespace ringext {

using Vec = std::vector<Scalar>;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// An internal consistency check failed; the theory (or the engine) is broken.
struct selfcheck_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool vec_is_zero(const Vec& v) {
  for (const Scalar& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// y += c * x
inline void vec_axpy(Vec& y, const Scalar& c, const Vec& x) {
  assert(y.size() == x.size());
  if (c.is_zero()) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

inline Vec vec_scaled(const Vec& v, const Scalar& c) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = c * v[i];
  return out;
}

inline Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

  Vec row(int r) const {
    return Vec(a_.begin() + (size_t)r * cols_, a_.begin() + (size_t)(r + 1) * cols_);
  }
  void set_row(int r, const Vec& v) {
    assert((int)v.size() == cols_);
    std::copy(v.begin(), v.end(), a_.begin() + (size_t)r * cols_);
  }

  Vec apply(const Vec& x) const {
    assert((int)x.size() == cols_);
    Vec y(rows_);
    for (int r = 0; r < rows_; ++r) {
      Scalar acc;
      const Scalar* p = &a_[(size_t)r * cols_];
      for (int c = 0; c < cols_; ++c)
        if (!p[c].is_zero() && !x[c].is_zero()) acc += p[c] * x[c];
      y[r] = acc;
    }
    return y;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.rows_);
    Mat out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
    return out;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
    return out;
  }

  Mat scaled(const Scalar& c) const {
    Mat out = *this;
    for (Scalar& x : out.a_) x *= c;
    return out;
  }

  Mat transpose() const {
    Mat out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
  }

  bool is_zero() const { return vec_is_zero(a_); }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  // Row-major matrix <-> vector of length rows*cols.
  Vec vectorized() const { return a_; }
  static Mat from_vector(int rows, int cols, const Vec& v) {
    Mat m(rows, cols);
    assert((int)v.size() == rows * cols);
    m.a_ = v;
    return m;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Incremental Gaussian eliminator.  Maintains one normalized pivot row per
// pivot column, stored sparsely; with `rref` true rows are kept fully
// back-eliminated (true RREF), otherwise plain echelon, which is cheaper
// and enough for reducing vectors modulo a span.
class RowReducer {
 public:
  // sparse row: sorted (column, value) pairs, leading entry first
  using SparseRow = std::vector<std::pair<int, Scalar>>;

  explicit RowReducer(int cols, bool rref = true)
      : cols_(cols), rref_(rref), col_to_row_(cols, -1) {}

  int cols() const { return cols_; }
  int rank() const { return (int)rows_.size(); }

  // Eliminates all pivot columns from v in place.
  void reduce(Vec& v) const {
    for (int c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      int r = col_to_row_[c];
      if (r < 0) continue;
      Scalar f = v[c];
      for (const auto& [j, x] : rows_[r]) v[j] -= f * x;
    }
  }

  // Returns true if v contributed a new pivot (false: v was in the span).
  bool insert(Vec v) {
    SparseRow in;
    for (int c = 0; c < cols_; ++c)
      if (!v[c].is_zero()) in.emplace_back(c, v[c]);
    return insert_sparse(std::move(in));
  }

  // Sparse insertion; entries may be unsorted and may repeat (they are
  // accumulated).  Reduction cost is proportional to the fill actually
  // touched, never to the ambient width.
  bool insert_sparse(const SparseRow& in) {
    if ((int)scratch_.size() != cols_) scratch_.assign(cols_, Scalar());
    std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
    for (const auto& [c, x] : in) {
      if (x.is_zero()) continue;
      if (scratch_[c].is_zero()) heap.push(c);
      scratch_[c] += x;
    }
    SparseRow out;
    while (!heap.empty()) {
      int c = heap.top();
      heap.pop();
      while (!heap.empty() && heap.top() == c) heap.pop();
      if (scratch_[c].is_zero()) continue;
      int r = col_to_row_[c];
      if (r < 0) {
        out.emplace_back(c, scratch_[c]);
        scratch_[c] = Scalar();
        continue;
      }
      Scalar f = scratch_[c];
      scratch_[c] = Scalar();
      for (const auto& [j, x] : rows_[r]) {
        if (j == c) continue;  // the lead cancels exactly
        bool was_zero = scratch_[j].is_zero();
        scratch_[j] -= f * x;
        if (was_zero && !scratch_[j].is_zero()) heap.push(j);
      }
    }
    if (out.empty()) return false;
    int lead = out[0].first;
    Scalar inv = out[0].second.inv();
    if (!inv.is_one())
      for (auto& [j, x] : out) x *= inv;
    if (rref_) {
      for (SparseRow& old : rows_) {
        auto it = std::lower_bound(
            old.begin(), old.end(), lead,
            [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
        if (it == old.end() || it->first != lead) continue;
        old = axpy_sparse(old, it->second, out, lead);
      }
    }
    col_to_row_[lead] = (int)rows_.size();
    rows_.push_back(std::move(out));
    leads_.push_back(lead);
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return vec_is_zero(v);
  }

  const std::vector<int>& leads() const { return leads_; }
  Vec pivot_row(int i) const {
    Vec v(cols_);
    for (const auto& [j, x] : rows_[i]) v[j] = x;
    return v;
  }
  // value of the pivot row at a column (sparse lookup)
  Scalar pivot_entry(int i, int col) const {
    auto it = std::lower_bound(
        rows_[i].begin(), rows_[i].end(), col,
        [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
    if (it != rows_[i].end() && it->first == col) return it->second;
    return Scalar();
  }
  int row_of_col(int c) const { return col_to_row_[c]; }

  // Pivot columns in increasing order.
  std::vector<int> sorted_pivots() const {
    std::vector<int> p = leads_;
    std::sort(p.begin(), p.end());
    return p;
  }

  // Columns without a pivot, increasing.
  std::vector<int> free_columns() const {
    std::vector<int> f;
    for (int c = 0; c < cols_; ++c)
      if (col_to_row_[c] < 0) f.push_back(c);
    return f;
  }

 private:
  // old - f * row, where row's lead column must vanish from old
  static SparseRow axpy_sparse(const SparseRow& old, const Scalar& f,
                               const SparseRow& row, int lead) {
    SparseRow out;
    out.reserve(old.size() + row.size());
    size_t a = 0, b = 0;
    while (a < old.size() || b < row.size()) {
      int ca = a < old.size() ? old[a].first : INT32_MAX;
      int cb = b < row.size() ? row[b].first : INT32_MAX;
      if (ca < cb) {
        out.push_back(old[a++]);
      } else if (cb < ca) {
        Scalar v = -(f * row[b].second);
        if (!v.is_zero()) out.emplace_back(cb, v);
        ++b;
      } else {
        Scalar v = old[a].second - f * row[b].second;
        if (!v.is_zero()) out.emplace_back(ca, v);
        ++a;
        ++b;
      }
    }
    (void)lead;
    return out;
  }

  int cols_;
  bool rref_;
  std::vector<SparseRow> rows_;
  std::vector<int> leads_;
  std::vector<int> col_to_row_;
  mutable Vec scratch_;
};

struct RrefResult {
  Mat reduced;
  std::vector<int> pivots;
  int rank = 0;
};

// Unique reduced row echelon form (pivot rows sorted by pivot column,
// zero rows at the bottom).
inline RrefResult rref(const Mat& m) {
  RowReducer red(m.cols(), /*rref=*/true);
  for (int r = 0; r < m.rows(); ++r) red.insert(m.row(r));
  RrefResult out;
  out.pivots = red.sorted_pivots();
  out.rank = red.rank();
  out.reduced = Mat(m.rows(), m.cols());
  for (int i = 0; i < out.rank; ++i)
    out.reduced.set_row(i, red.pivot_row(red.row_of_col(out.pivots[i])));
  return out;
}

inline int rank_of(const Mat& m) {
  RowReducer red(m.cols(), /*rref=*/false);
  for (int r = 0; r < m.rows(); ++r) red.insert(m.row(r));
  return red.rank();
}

// A linear subspace of Q^ambient with RREF-canonical basis rows.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(int ambient) { return Subspace(ambient); }

  static Subspace full(int ambient) {
    Subspace s(ambient);
    s.basis_ = Mat::identity(ambient);
    for (int i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  static Subspace from_span(int ambient, const std::vector<Vec>& gens) {
    RowReducer red(ambient, /*rref=*/true);
    for (const Vec& g : gens) red.insert(g);
    Subspace s(ambient);
    s.pivots_ = red.sorted_pivots();
    s.basis_ = Mat((int)s.pivots_.size(), ambient);
    for (size_t i = 0; i < s.pivots_.size(); ++i)
      s.basis_.set_row((int)i, red.pivot_row(red.row_of_col(s.pivots_[i])));
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vec(int i) const { return basis_.row(i); }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const {
    Vec r = v;
    reduce_mod(r);
    return vec_is_zero(r);
  }

  bool contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vec(i))) return false;
    return true;
  }

  // Coordinates w.r.t. the canonical basis (nullopt if v is outside).
  std::optional<Vec> coords_of(const Vec& v) const {
    Vec r = v;
    Vec coords(dim());
    for (int i = 0; i < dim(); ++i) {
      const Scalar& c = r[pivots_[i]];
      if (c.is_zero()) continue;
      coords[i] = c;
      for (int j = 0; j < ambient_; ++j)
        if (!basis_.at(i, j).is_zero()) r[j] -= coords[i] * basis_.at(i, j);
    }
    if (!vec_is_zero(r)) return std::nullopt;
    return coords;
  }

  Vec from_coords(const Vec& coords) const {
    assert((int)coords.size() == dim());
    Vec v(ambient_);
    for (int i = 0; i < dim(); ++i) vec_axpy(v, coords[i], basis_.row(i));
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  void reduce_mod(Vec& v) const {
    for (int i = 0; i < dim(); ++i) {
      const Scalar& c = v[pivots_[i]];
      if (c.is_zero()) continue;
      Scalar f = c;
      for (int j = 0; j < ambient_; ++j)
        if (!basis_.at(i, j).is_zero()) v[j] -= f * basis_.at(i, j);
    }
  }

  int ambient_ = 0;
  Mat basis_;
  std::vector<int> pivots_;
};

inline Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw input_error("subspace ambient mismatch");
  std::vector<Vec> gens;
  for (int i = 0; i < u.dim(); ++i) gens.push_back(u.basis_vec(i));
  for (int i = 0; i < v.dim(); ++i) gens.push_back(v.basis_vec(i));
  return Subspace::from_span(u.ambient(), gens);
}

// Exact kernel with canonical basis.
inline Subspace kernel(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::from_span(m.cols(), gens);
}

inline Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw input_error("subspace ambient mismatch");
  // Solve  sum a_i u_i - sum b_j v_j = 0 ; intersection = { sum a_i u_i }.
  int du = u.dim(), dv = v.dim();
  Mat sys(u.ambient(), du + dv);
  for (int i = 0; i < du; ++i)
    for (int c = 0; c < u.ambient(); ++c) sys.at(c, i) = u.basis().at(i, c);
  for (int j = 0; j < dv; ++j)
    for (int c = 0; c < u.ambient(); ++c) sys.at(c, du + j) = -v.basis().at(j, c);
  Subspace ker = kernel(sys);
  std::vector<Vec> gens;
  for (int k = 0; k < ker.dim(); ++k) {
    Vec coef = ker.basis_vec(k);
    Vec w(u.ambient());
    for (int i = 0; i < du; ++i) vec_axpy(w, coef[i], u.basis().row(i));
    gens.push_back(std::move(w));
  }
  return Subspace::from_span(u.ambient(), gens);
}

struct SolveResult {
  Vec particular;
  Subspace homogeneous;
};

// Exact solve m x = b.  Returns nullopt iff b is outside the column space.
// The particular solution is the RREF-canonical one (free variables zero).
inline std::optional<SolveResult> solve(const Mat& m, const Vec& b) {
  if ((int)b.size() != m.rows()) throw input_error("solve dimension mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  RrefResult rr = rref(aug);
  Vec particular(m.cols());
  for (int i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;  // inconsistent
    particular[rr.pivots[i]] = rr.reduced.at(i, m.cols());
  }
  return SolveResult{std::move(particular), kernel(m)};
}

// Streaming variant for large systems: rows are fed one at a time and the
// kernel is never materialized.
class LinearSystem {
 public:
  explicit LinearSystem(int unknowns)
      : unknowns_(unknowns), red_(unknowns + 1, /*rref=*/true) {}

  void add_row(Vec lhs, const Scalar& rhs) {
    if (!feasible_) return;
    lhs.push_back(rhs);
    if (red_.insert(std::move(lhs)) && red_.row_of_col(unknowns_) >= 0)
      feasible_ = false;
  }

  bool feasible() const { return feasible_; }
  int rank() const { return red_.rank(); }

  // RREF-canonical particular solution (free unknowns zero).
  Vec particular() const {
    assert(feasible_);
    Vec x(unknowns_);
    for (int c = 0; c < unknowns_; ++c) {
      int r = red_.row_of_col(c);
      if (r >= 0) x[c] = red_.pivot_entry(r, unknowns_);
    }
    return x;
  }

  // A second solution differing along the first free column with a
  // nontrivial constraint, if the solution space is not a point.
  std::optional<Vec> second_solution() const {
    assert(feasible_);
    for (int f = 0; f < unknowns_; ++f) {
      if (red_.row_of_col(f) >= 0) continue;
      Vec x = particular();
      x[f] += Scalar(1);
      for (int c = 0; c < unknowns_; ++c) {
        int r = red_.row_of_col(c);
        if (r >= 0) x[c] -= red_.pivot_entry(r, f);
      }
      return x;
    }
    return std::nullopt;
  }

 private:
  int unknowns_;
  RowReducer red_;
  bool feasible_ = true;
};

// Quotient of Q^ambient by the span of relation vectors.  Classes are
// represented canonically on the non-pivot coordinates of the relation
// span's echelon form, so project(section(i)) is exact.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(int ambient, const std::vector<Vec>& relations)
      : ambient_(ambient), rel_(ambient, /*rref=*/true), col_index_(ambient, -1) {
    for (const Vec& r : relations) rel_.insert(r);
    finish();
  }

  // Streaming construction.
  explicit QuotientSpace(int ambient)
      : ambient_(ambient), rel_(ambient, /*rref=*/true), col_index_(ambient, -1) {}
  void add_relation(Vec r) {
    assert(!finished_);
    rel_.insert(std::move(r));
  }
  void add_relation_sparse(const RowReducer::SparseRow& r) {
    assert(!finished_);
    rel_.insert_sparse(r);
  }
  void finish() {
    free_cols_ = rel_.free_columns();
    for (size_t i = 0; i < free_cols_.size(); ++i) col_index_[free_cols_[i]] = (int)i;
    finished_ = true;
  }

  int ambient() const { return ambient_; }
  int dim() const { return (int)free_cols_.size(); }
  int relation_rank() const { return rel_.rank(); }
  const std::vector<int>& free_cols() const { return free_cols_; }

  Vec project(Vec amb) const {
    assert(finished_);
    rel_.reduce(amb);
    Vec out(dim());
    for (int i = 0; i < dim(); ++i) out[i] = amb[free_cols_[i]];
    return out;
  }

  // Ambient representative of the i-th coordinate class.
  Vec section(int i) const { return unit_vec(ambient_, free_cols_[i]); }

  Vec section_of(const Vec& coords) const {
    Vec v(ambient_);
    for (int i = 0; i < dim(); ++i) v[free_cols_[i]] = coords[i];
    return v;
  }

  bool relation_contains(Vec v) const { return rel_.contains(std::move(v)); }

 private:
  int ambient_ = 0;
  RowReducer rel_{0, true};
  std::vector<int> free_cols_;
  std::vector<int> col_index_;
  bool finished_ = false;
};

inline Scalar det(Mat m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  Scalar d(1);
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int r = c; r < n; ++r)
      if (!m.at(r, c).is_zero()) { sel = r; break; }
    if (sel < 0) return Scalar();
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(sel, j));
      d = -d;
    }
    d *= m.at(c, c);
    Scalar inv = m.at(c, c).inv();
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Scalar f = m.at(r, c) * inv;
      for (int j = c; j < n; ++j)
        if (!m.at(c, j).is_zero()) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

struct GenInvResult {
  bool invertible = false;
  std::optional<Vec> witness;  // coefficients over the family
};

// Decides whether some linear combination of the family is invertible.
// Complete on the deterministic grid {0..n}^k (the determinant polynomial
// has degree <= n in each variable); two cheap passes run first so feasible
// instances terminate long before the grid does.
inline GenInvResult generic_invertibility(const std::vector<Mat>& family, int n) {
  GenInvResult out;
  if (family.empty()) {
    if (n == 0) {
      out.invertible = true;
      out.witness = Vec{};
    }
    return out;
  }
  int k = (int)family.size();
  auto combo = [&](const Vec& lambda) {
    Mat m(n, n);
    for (int i = 0; i < k; ++i)
      if (!lambda[i].is_zero()) m = m + family[i].scaled(lambda[i]);
    return m;
  };
  if (n == 0) {
    out.invertible = true;
    out.witness = Vec(k);
    return out;
  }
  // Pass 1: single members.
  for (int i = 0; i < k; ++i) {
    if (!det(family[i]).is_zero()) {
      out.invertible = true;
      out.witness = unit_vec(k, i);
      return out;
    }
  }
  // Pass 2: deterministic greedy rank accumulation.
  {
    Vec lambda(k);
    Mat cur(n, n);
    int cur_rank = 0;
    bool improved = true;
    while (improved && cur_rank < n) {
      improved = false;
      for (int i = 0; i < k && !improved; ++i)
        for (long long c = 1; c <= n && !improved; ++c) {
          Mat cand = cur + family[i].scaled(Scalar(c));
          int rk = rank_of(cand);
          if (rk > cur_rank) {
            cur = cand;
            cur_rank = rk;
            lambda[i] += Scalar(c);
            improved = true;
          }
        }
    }
    if (cur_rank == n) {
      out.invertible = true;
      out.witness = lambda;
      return out;
    }
  }
  // Pass 3: exhaustive grid (side n+1 per variable), lexicographic.
  Vec lambda(k);
  std::vector<long long> idx(k, 0);
  while (true) {
    // advance odometer
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
    for (int i = 0; i < k; ++i) lambda[i] = Scalar(idx[i]);
    if (!det(combo(lambda)).is_zero()) {
      out.invertible = true;
      out.witness = lambda;
      return out;
    }
  }
  return out;
}

}  // namespace ringext
