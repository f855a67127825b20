#pragma once

// Finite-dimensional unital associative algebras over exact rationals,
// algebra morphisms, and ring extensions A|B with their cached derived
// data (centralizer R, regular representations).
//
// Conventions: structure constants c[i][j][k] mean x_i x_j = sum_k c[i][j][k] x_k.
// Morphisms are matrices of size target.dim x source.dim acting on
// coordinate columns.  Subalgebras are always carried as morphisms, never
// as index subsets.

#include <optional>
#include <string>
#include <vector>

#include "ringext/matrix.hpp"

namespace ringext {

class Algebra {
 public:
  Algebra() = default;
  Algebra(int dim, std::vector<Scalar> sc, Vec unit)
      : dim_(dim), sc_(std::move(sc)), unit_(std::move(unit)) {
    assert((int)sc_.size() == dim_ * dim_ * dim_);
    assert((int)unit_.size() == dim_);
  }

  int dim() const { return dim_; }
  const Vec& unit() const { return unit_; }

  const Scalar& sc(int i, int j, int k) const {
    return sc_[((size_t)i * dim_ + j) * dim_ + k];
  }
  Scalar& sc(int i, int j, int k) {
    return sc_[((size_t)i * dim_ + j) * dim_ + k];
  }

  Vec basis(int i) const { return unit_vec(dim_, i); }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec out(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        Scalar ab = a[i] * b[j];
        for (int k = 0; k < dim_; ++k) {
          const Scalar& c = sc(i, j, k);
          if (!c.is_zero()) out[k] += ab * c;
        }
      }
    }
    return out;
  }

  // Left regular representation: lambda(a) * v = a.v
  Mat lambda(const Vec& a) const {
    Mat m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
          const Scalar& c = sc(i, j, k);
          if (!c.is_zero()) m.at(k, j) += a[i] * c;
        }
    }
    return m;
  }

  // Right regular representation: rho(a) * v = v.a
  Mat rho(const Vec& a) const {
    Mat m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      if (a[j].is_zero()) continue;
      for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
          const Scalar& c = sc(i, j, k);
          if (!c.is_zero()) m.at(k, i) += a[j] * c;
        }
    }
    return m;
  }

  bool is_unit(const Vec& v) const { return v == unit_; }

 private:
  int dim_ = 0;
  std::vector<Scalar> sc_;
  Vec unit_;
};

struct ValidationIssue {
  enum Kind { kAssociativity, kLeftUnit, kRightUnit } kind;
  int i = -1, j = -1, k = -1;  // offending basis triple (unit checks use i)
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Total check of associativity on all basis triples and of the two-sided
// unit on all basis vectors.
inline ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport rep;
  int n = a.dim();
  for (int i = 0; i < n; ++i) {
    if (a.mul(a.unit(), a.basis(i)) != a.basis(i))
      rep.issues.push_back({ValidationIssue::kLeftUnit, i, -1, -1});
    if (a.mul(a.basis(i), a.unit()) != a.basis(i))
      rep.issues.push_back({ValidationIssue::kRightUnit, i, -1, -1});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ij = a.mul(a.basis(i), a.basis(j));
      for (int k = 0; k < n; ++k) {
        Vec left = a.mul(ij, a.basis(k));
        Vec right = a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k)));
        if (left != right)
          rep.issues.push_back({ValidationIssue::kAssociativity, i, j, k});
      }
    }
  return rep;
}

struct Morphism {
  int source_dim = 0, target_dim = 0;
  Mat matrix;  // target_dim x source_dim

  Vec apply(const Vec& v) const { return matrix.apply(v); }
  Vec column(int j) const {
    Vec v(target_dim);
    for (int i = 0; i < target_dim; ++i) v[i] = matrix.at(i, j);
    return v;
  }
  Subspace image() const {
    std::vector<Vec> cols;
    for (int j = 0; j < source_dim; ++j) cols.push_back(column(j));
    return Subspace::from_span(target_dim, cols);
  }
};

inline Morphism make_morphism(const Algebra& src, const Algebra& tgt, Mat m) {
  if (m.rows() != tgt.dim() || m.cols() != src.dim())
    throw input_error("morphism matrix has wrong shape");
  return Morphism{src.dim(), tgt.dim(), std::move(m)};
}

// Checks unitality and multiplicativity on basis pairs; returns the first
// offending pair, if any.
inline std::optional<std::pair<int, int>> morphism_defect(const Algebra& src,
                                                          const Algebra& tgt,
                                                          const Morphism& f) {
  if (f.apply(src.unit()) != tgt.unit()) return std::make_pair(-1, -1);
  for (int i = 0; i < src.dim(); ++i)
    for (int j = 0; j < src.dim(); ++j) {
      Vec lhs = f.apply(src.mul(src.basis(i), src.basis(j)));
      Vec rhs = tgt.mul(f.column(i), f.column(j));
      if (lhs != rhs) return std::make_pair(i, j);
    }
  return std::nullopt;
}

// A ring extension A|B: an injective unital algebra morphism iota: B -> A,
// with the centralizer R = C_A(B) and the regular representations cached.
struct Extension {
  Algebra B, A;
  Morphism iota;
  Subspace R;                 // centralizer, RREF-canonical in A-coordinates
  Subspace iota_image;        // iota(B) as a subspace of A
  std::vector<Mat> lambda_basis;  // lambda(x_i) per A-basis element
  std::vector<Mat> rho_basis;

  int dimA() const { return A.dim(); }
  int dimB() const { return B.dim(); }
  Vec iota_of(const Vec& b) const { return iota.apply(b); }
  Vec iota_col(int j) const { return iota.column(j); }

  Mat lambda_of(const Vec& a) const {
    Mat m(dimA(), dimA());
    for (int i = 0; i < dimA(); ++i)
      if (!a[i].is_zero()) m = m + lambda_basis[i].scaled(a[i]);
    return m;
  }
  Mat rho_of(const Vec& a) const {
    Mat m(dimA(), dimA());
    for (int i = 0; i < dimA(); ++i)
      if (!a[i].is_zero()) m = m + rho_basis[i].scaled(a[i]);
    return m;
  }
};

inline Extension make_extension(const Algebra& B, const Algebra& A,
                                const Morphism& iota) {
  if (!validate_algebra(B).ok()) throw input_error("B is not a valid algebra");
  if (!validate_algebra(A).ok()) throw input_error("A is not a valid algebra");
  if (iota.source_dim != B.dim() || iota.target_dim != A.dim())
    throw input_error("iota has wrong shape");
  if (auto bad = morphism_defect(B, A, iota)) {
    if (bad->first < 0) throw input_error("iota does not map unit to unit");
    throw input_error("iota not multiplicative on basis pair (" +
                      std::to_string(bad->first) + "," +
                      std::to_string(bad->second) + ")");
  }
  if (kernel(iota.matrix).dim() != 0)
    throw input_error("iota is not injective");

  Extension e;
  e.B = B;
  e.A = A;
  e.iota = iota;
  int n = A.dim();
  for (int i = 0; i < n; ++i) {
    e.lambda_basis.push_back(A.lambda(A.basis(i)));
    e.rho_basis.push_back(A.rho(A.basis(i)));
  }
  // R = joint kernel of the commutator maps [., iota(b_j)]
  Mat stacked(n * B.dim(), n);
  for (int j = 0; j < B.dim(); ++j) {
    Mat comm = A.lambda(iota.column(j)) - A.rho(iota.column(j));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked.at(j * n + r, c) = comm.at(r, c);
  }
  e.R = kernel(stacked);
  e.iota_image = iota.image();
  return e;
}

// Exact center of an algebra.
inline Subspace center(const Algebra& a) {
  int n = a.dim();
  Mat stacked(n * n, n);
  for (int j = 0; j < n; ++j) {
    Mat comm = a.lambda(a.basis(j)) - a.rho(a.basis(j));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked.at(j * n + r, c) = comm.at(r, c);
  }
  return kernel(stacked);
}

struct Ideal {
  Subspace span;
};

// Two-sided ideal check: closed under multiplication by every basis element
// on both sides.
inline bool is_ideal(const Algebra& a, const Subspace& span) {
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < span.dim(); ++k) {
      Vec v = span.basis_vec(k);
      if (!span.contains(a.mul(a.basis(i), v))) return false;
      if (!span.contains(a.mul(v, a.basis(i)))) return false;
    }
  return true;
}

// Subspace spanned by { a.v : a in A-basis, v in span-basis }.
inline Subspace left_module_span(const Algebra& a, const Subspace& span) {
  std::vector<Vec> gens;
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < span.dim(); ++k)
      gens.push_back(a.mul(a.basis(i), span.basis_vec(k)));
  return Subspace::from_span(a.dim(), gens);
}

inline Subspace right_module_span(const Algebra& a, const Subspace& span) {
  std::vector<Vec> gens;
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < span.dim(); ++k)
      gens.push_back(a.mul(span.basis_vec(k), a.basis(i)));
  return Subspace::from_span(a.dim(), gens);
}

// I = A(I n B) = (I n B)A ?  (the inducing/contracting identity)
inline bool sugano_ideal_identity(const Extension& ext, const Ideal& ideal) {
  if (!is_ideal(ext.A, ideal.span)) throw input_error("not a two-sided ideal");
  Subspace contracted = intersect(ideal.span, ext.iota_image);
  Subspace left = left_module_span(ext.A, contracted);
  Subspace right = right_module_span(ext.A, contracted);
  return left == ideal.span && right == ideal.span;
}

// Basis of the unital subalgebra generated by the given elements
// (multiplicative span closure).
inline Subspace subalgebra_closure(const Algebra& a, std::vector<Vec> gens) {
  gens.push_back(a.unit());
  Subspace cur = Subspace::from_span(a.dim(), gens);
  while (true) {
    std::vector<Vec> next;
    for (int i = 0; i < cur.dim(); ++i) next.push_back(cur.basis_vec(i));
    for (int i = 0; i < cur.dim(); ++i)
      for (int j = 0; j < cur.dim(); ++j)
        next.push_back(a.mul(cur.basis_vec(i), cur.basis_vec(j)));
    Subspace bigger = Subspace::from_span(a.dim(), next);
    if (bigger.dim() == cur.dim()) return cur;
    cur = bigger;
  }
}

// Extension B -> A where B is the abstract algebra on a subspace basis of A
// (structure constants re-expressed in the subspace coordinates).
inline Extension extension_from_subalgebra(const Algebra& a, const Subspace& sub) {
  int m = sub.dim();
  std::vector<Scalar> sc((size_t)m * m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec prod = a.mul(sub.basis_vec(i), sub.basis_vec(j));
      auto coords = sub.coords_of(prod);
      if (!coords) throw input_error("subspace is not multiplicatively closed");
      for (int k = 0; k < m; ++k) sc[((size_t)i * m + j) * m + k] = (*coords)[k];
    }
  auto unit_coords = sub.coords_of(a.unit());
  if (!unit_coords) throw input_error("subspace does not contain the unit");
  Algebra b(m, std::move(sc), *unit_coords);
  Mat iota(a.dim(), m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < a.dim(); ++i) iota.at(i, j) = sub.basis().at(j, i);
  return make_extension(b, a, make_morphism(b, a, std::move(iota)));
}

}  // namespace ringext
