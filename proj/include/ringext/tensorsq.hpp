#pragma once

// The tensor-square A (x)_B A as an exact quotient of A (x) A, the ring
// T = (A (x)_B A)^B, the multiplication map mu, the Miyashita-Ulbrich
// action of T on the centralizer R, and the ternary map
// gamma: R (x)_T (A (x)_B A) -> A, r (x) a (x) a' -> a r a'.
//
// Ambient coordinates: x_i (x) x_j sits at index i*n + j.

#include <vector>

#include "ringext/algebra.hpp"

namespace ringext {

class TensorSquare {
 public:
  Extension ext;
  QuotientSpace Q;          // ambient n^2
  std::vector<Mat> lact;    // class(a (x) b) -> class(x_i a (x) b), q x q
  std::vector<Mat> ract;    // class(a (x) b) -> class(a (x) b x_j)
  Mat mu;                   // n x q, class(a (x) a') -> a a'
  Subspace Tspace;          // B-central part, in quotient coordinates

  int n() const { return ext.dimA(); }
  int dim() const { return Q.dim(); }

  // --- ambient helpers -----------------------------------------------------

  static Vec kron(const Vec& a, const Vec& b) {
    int n = (int)a.size(), m = (int)b.size();
    Vec out((size_t)n * m);
    for (int i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < m; ++j)
        if (!b[j].is_zero()) out[(size_t)i * m + j] = a[i] * b[j];
    }
    return out;
  }

  // (lambda(a) (x) I) w
  Vec amb_left(const Vec& a, const Vec& w) const {
    int N = n();
    Vec out((size_t)N * N);
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        const Scalar& c = w[(size_t)p * N + q];
        if (c.is_zero()) continue;
        for (int i = 0; i < N; ++i) {
          if (a[i].is_zero()) continue;
          for (int k = 0; k < N; ++k) {
            const Scalar& s = ext.A.sc(i, p, k);
            if (!s.is_zero()) out[(size_t)k * N + q] += c * a[i] * s;
          }
        }
      }
    return out;
  }

  // (I (x) rho(a)) w
  Vec amb_right(const Vec& a, const Vec& w) const {
    int N = n();
    Vec out((size_t)N * N);
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        const Scalar& c = w[(size_t)p * N + q];
        if (c.is_zero()) continue;
        for (int j = 0; j < N; ++j) {
          if (a[j].is_zero()) continue;
          for (int k = 0; k < N; ++k) {
            const Scalar& s = ext.A.sc(q, j, k);
            if (!s.is_zero()) out[(size_t)p * N + k] += c * a[j] * s;
          }
        }
      }
    return out;
  }

  // apply an endomorphism to the first / second tensorand
  Vec amb_map_first(const Mat& f, const Vec& w) const {
    int N = n();
    Vec out((size_t)N * N);
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        const Scalar& c = w[(size_t)p * N + q];
        if (c.is_zero()) continue;
        for (int k = 0; k < N; ++k)
          if (!f.at(k, p).is_zero()) out[(size_t)k * N + q] += c * f.at(k, p);
      }
    return out;
  }

  Vec amb_map_second(const Mat& f, const Vec& w) const {
    int N = n();
    Vec out((size_t)N * N);
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        const Scalar& c = w[(size_t)p * N + q];
        if (c.is_zero()) continue;
        for (int k = 0; k < N; ++k)
          if (!f.at(k, q).is_zero()) out[(size_t)p * N + k] += c * f.at(k, q);
      }
    return out;
  }

  // t . w  =  w^1 t^1 (x) t^2 w^2   (the product extending T's ring law
  // t t' = t'^1 t^1 (x) t^2 t'^2 with w in the t' slot)
  Vec amb_prod(const Vec& t, const Vec& w) const {
    int N = n();
    Vec out((size_t)N * N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        const Scalar& tc = t[(size_t)i * N + j];
        if (tc.is_zero()) continue;
        for (int k = 0; k < N; ++k)
          for (int l = 0; l < N; ++l) {
            const Scalar& wc = w[(size_t)k * N + l];
            if (wc.is_zero()) continue;
            Scalar c = tc * wc;
            // (x_k x_i) (x) (x_j x_l)
            for (int p = 0; p < N; ++p) {
              const Scalar& s1 = ext.A.sc(k, i, p);
              if (s1.is_zero()) continue;
              for (int q = 0; q < N; ++q) {
                const Scalar& s2 = ext.A.sc(j, l, q);
                if (!s2.is_zero()) out[(size_t)p * N + q] += c * s1 * s2;
              }
            }
          }
      }
    return out;
  }

  // --- quotient-level helpers ---------------------------------------------

  Vec project(const Vec& amb) const { return Q.project(amb); }
  Vec section_of(const Vec& coords) const { return Q.section_of(coords); }

  Vec class_of_pair(int i, int j) const {
    return Q.project(unit_vec(n() * n(), i * n() + j));
  }

  Vec class_one_one() const {
    return Q.project(kron(ext.A.unit(), ext.A.unit()));
  }

  Vec q_left(const Vec& a, const Vec& w) const {
    Vec out(dim());
    for (int i = 0; i < n(); ++i)
      if (!a[i].is_zero()) vec_axpy_mat(out, a[i], lact[i], w);
    return out;
  }

  Vec q_right(const Vec& a, const Vec& w) const {
    Vec out(dim());
    for (int j = 0; j < n(); ++j)
      if (!a[j].is_zero()) vec_axpy_mat(out, a[j], ract[j], w);
    return out;
  }

  Vec mu_of(const Vec& w) const { return mu.apply(w); }

 private:
  static void vec_axpy_mat(Vec& out, const Scalar& c, const Mat& m, const Vec& w) {
    for (int r = 0; r < m.rows(); ++r) {
      Scalar acc;
      for (int k = 0; k < m.cols(); ++k)
        if (!m.at(r, k).is_zero() && !w[k].is_zero()) acc += m.at(r, k) * w[k];
      if (!acc.is_zero()) out[r] += c * acc;
    }
  }
};

inline TensorSquare build_tensor_square(const Extension& ext) {
  TensorSquare ts;
  ts.ext = ext;
  int n = ext.dimA(), nn = n * n, m = ext.dimB();

  QuotientSpace q(nn);
  for (int b = 0; b < m; ++b) {
    Vec bv = ext.iota_col(b);
    Mat rb = ext.rho_of(bv), lb = ext.lambda_of(bv);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RowReducer::SparseRow rel;
        for (int k = 0; k < n; ++k) {
          if (!rb.at(k, i).is_zero()) rel.emplace_back(k * n + j, rb.at(k, i));
          if (!lb.at(k, j).is_zero()) rel.emplace_back(i * n + k, -lb.at(k, j));
        }
        q.add_relation_sparse(rel);
      }
  }
  q.finish();
  ts.Q = std::move(q);
  int qd = ts.Q.dim();

  // action matrices on quotient coordinates
  for (int i = 0; i < n; ++i) {
    Mat l(qd, qd), r(qd, qd);
    for (int w = 0; w < qd; ++w) {
      Vec lw = ts.Q.project(ts.amb_left(ext.A.basis(i), ts.Q.section(w)));
      Vec rw = ts.Q.project(ts.amb_right(ext.A.basis(i), ts.Q.section(w)));
      for (int k = 0; k < qd; ++k) {
        l.at(k, w) = lw[k];
        r.at(k, w) = rw[k];
      }
    }
    ts.lact.push_back(std::move(l));
    ts.ract.push_back(std::move(r));
  }

  // mu: well-defined multiplication map; the relation span must map to zero
  ts.mu = Mat(n, qd);
  for (int w = 0; w < qd; ++w) {
    int amb = ts.Q.free_cols()[w];
    Vec prod = ext.A.mul(ext.A.basis(amb / n), ext.A.basis(amb % n));
    for (int k = 0; k < n; ++k) ts.mu.at(k, w) = prod[k];
  }
  for (int b = 0; b < m; ++b) {
    Vec bv = ext.iota_col(b);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = ext.A.mul(ext.A.mul(ext.A.basis(i), bv), ext.A.basis(j));
        Vec rhs = ext.A.mul(ext.A.basis(i), ext.A.mul(bv, ext.A.basis(j)));
        if (lhs != rhs)
          throw selfcheck_error("mu is not well-defined on the quotient");
      }
  }

  // T = B-central part
  Mat stacked(m * qd, qd);
  for (int b = 0; b < m; ++b) {
    Vec bv = ext.iota_col(b);
    for (int w = 0; w < qd; ++w) {
      Vec diff = ts.q_left(bv, unit_vec(qd, w));
      Vec rw = ts.q_right(bv, unit_vec(qd, w));
      for (int k = 0; k < qd; ++k) stacked.at(b * qd + k, w) = diff[k] - rw[k];
    }
  }
  ts.Tspace = kernel(stacked);
  return ts;
}

enum class CentralizeBy { B, A };

// Subspace of quotient classes commuting with every selected basis element
// (left action on the first tensorand, right action on the second).
inline Subspace centralized_part(const TensorSquare& ts, CentralizeBy by) {
  int qd = ts.dim();
  std::vector<Vec> gens;
  if (by == CentralizeBy::B)
    for (int b = 0; b < ts.ext.dimB(); ++b) gens.push_back(ts.ext.iota_col(b));
  else
    for (int i = 0; i < ts.n(); ++i) gens.push_back(ts.ext.A.basis(i));
  Mat stacked((int)gens.size() * qd, qd);
  for (size_t g = 0; g < gens.size(); ++g)
    for (int w = 0; w < qd; ++w) {
      Vec l = ts.q_left(gens[g], unit_vec(qd, w));
      Vec r = ts.q_right(gens[g], unit_vec(qd, w));
      for (int k = 0; k < qd; ++k) stacked.at((int)g * qd + k, w) = l[k] - r[k];
    }
  return kernel(stacked);
}

// T with its induced ring structure t t' = t'^1 t^1 (x) t^2 t'^2.
struct TRing {
  Subspace carrier;   // inside quotient coordinates
  Algebra ring;       // structure constants on the carrier basis
  Vec unit_tcoords;

  int dim() const { return ring.dim(); }

  Vec to_q(const Vec& tcoords) const { return carrier.from_coords(tcoords); }
  std::optional<Vec> from_q(const Vec& qcoords) const {
    return carrier.coords_of(qcoords);
  }
  Vec mul(const Vec& t, const Vec& u) const { return ring.mul(t, u); }
};

inline TRing t_ring(const TensorSquare& ts) {
  const Subspace& T = ts.Tspace;
  int t = T.dim();
  std::vector<Scalar> sc((size_t)t * t * t);
  std::vector<Vec> amb_reps;
  for (int k = 0; k < t; ++k) amb_reps.push_back(ts.section_of(T.basis_vec(k)));
  for (int k = 0; k < t; ++k)
    for (int l = 0; l < t; ++l) {
      Vec prod = ts.project(ts.amb_prod(amb_reps[k], amb_reps[l]));
      auto coords = T.coords_of(prod);
      if (!coords)
        throw selfcheck_error("T is not closed under its multiplication");
      for (int p = 0; p < t; ++p) sc[((size_t)k * t + l) * t + p] = (*coords)[p];
    }
  Vec one = ts.class_one_one();
  auto unit = T.coords_of(one);
  if (!unit) throw selfcheck_error("class(1 (x) 1) is not B-central");
  TRing tr{T, Algebra(t, std::move(sc), *unit), *unit};
  ValidationReport rep = validate_algebra(tr.ring);
  if (!rep.ok()) throw selfcheck_error("T ring structure fails validation");
  return tr;
}

// sigma(r) = class(r (x) 1), an antihomomorphism R -> T.
inline Vec t_source(const TensorSquare& ts, const TRing& tr, const Vec& r) {
  auto c = tr.from_q(ts.project(TensorSquare::kron(r, ts.ext.A.unit())));
  if (!c) throw selfcheck_error("sigma(r) not in T");
  return *c;
}

// ttilde(r) = class(1 (x) r), an antihomomorphism R -> T.
inline Vec t_target(const TensorSquare& ts, const TRing& tr, const Vec& r) {
  auto c = tr.from_q(ts.project(TensorSquare::kron(ts.ext.A.unit(), r)));
  if (!c) throw selfcheck_error("ttilde(r) not in T");
  return *c;
}

// Miyashita-Ulbrich action r . t = t^1 r t^2 (a right T-action on R).
inline Vec mu_action(const TensorSquare& ts, const Vec& r, const Vec& t_qcoords) {
  if (!ts.ext.R.contains(r)) throw input_error("mu_action: r is not in R");
  Vec amb = ts.section_of(t_qcoords);
  int n = ts.n();
  Vec out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& c = amb[(size_t)i * n + j];
      if (c.is_zero()) continue;
      vec_axpy(out, c,
               ts.ext.A.mul(ts.ext.A.basis(i), ts.ext.A.mul(r, ts.ext.A.basis(j))));
    }
  if (!ts.ext.R.contains(out))
    throw selfcheck_error("Miyashita-Ulbrich action left R");
  return out;
}

// left R-action r |> t = class(r t^1 (x) t^2) on T (equals t . sigma(r))
inline Vec r_tri_t(const TensorSquare& ts, const TRing& tr, const Vec& r,
                   const Vec& tcoords) {
  Vec q = ts.q_left(r, tr.to_q(tcoords));
  auto c = tr.from_q(q);
  if (!c) throw selfcheck_error("r |> t left the subspace T");
  return *c;
}

// right R-action t <| r = class(t^1 (x) t^2 r)
inline Vec t_tri_r(const TensorSquare& ts, const TRing& tr, const Vec& tcoords,
                   const Vec& r) {
  Vec q = ts.q_right(r, tr.to_q(tcoords));
  auto c = tr.from_q(q);
  if (!c) throw selfcheck_error("t <| r left the subspace T");
  return *c;
}

struct GammaResult {
  QuotientSpace domain;  // R (x)_T (A (x)_B A), ambient dim(R) * dim(Q)
  Mat map;               // n x domain.dim
  bool well_defined = false;
  bool bijective = false;
};

// gamma: R (x)_T (A (x)_B A) -> A, gamma(r (x) w) = w^1 r w^2.
inline GammaResult gamma_map(const TensorSquare& ts, const TRing& tr) {
  const Subspace& R = ts.ext.R;
  int rd = R.dim(), qd = ts.dim(), n = ts.n();
  int amb = rd * qd;

  auto gamma_amb = [&](const Vec& v) {
    Vec out(n);
    for (int ri = 0; ri < rd; ++ri) {
      Vec r = R.basis_vec(ri);
      for (int qi = 0; qi < qd; ++qi) {
        const Scalar& c = v[(size_t)ri * qd + qi];
        if (c.is_zero()) continue;
        Vec w = ts.section_of(unit_vec(qd, qi));
        for (int p = 0; p < n; ++p)
          for (int q2 = 0; q2 < n; ++q2) {
            const Scalar& wc = w[(size_t)p * n + q2];
            if (wc.is_zero()) continue;
            vec_axpy(out, c * wc,
                     ts.ext.A.mul(ts.ext.A.basis(p),
                                  ts.ext.A.mul(r, ts.ext.A.basis(q2))));
          }
      }
    }
    return out;
  };

  GammaResult res;
  res.well_defined = true;
  QuotientSpace dom(amb);
  std::vector<Vec> amb_t;
  for (int k = 0; k < tr.dim(); ++k)
    amb_t.push_back(ts.section_of(ts.Tspace.basis_vec(k)));
  for (int ri = 0; ri < rd; ++ri)
    for (int k = 0; k < tr.dim(); ++k) {
      Vec rt = mu_action(ts, R.basis_vec(ri), ts.Tspace.basis_vec(k));
      Vec rt_coords = *R.coords_of(rt);
      for (int qi = 0; qi < qd; ++qi) {
        Vec tw = ts.project(ts.amb_prod(amb_t[k], ts.Q.section(qi)));
        Vec rel(amb);
        for (int c = 0; c < rd; ++c)
          if (!rt_coords[c].is_zero()) rel[(size_t)c * qd + qi] += rt_coords[c];
        for (int d = 0; d < qd; ++d)
          if (!tw[d].is_zero()) rel[(size_t)ri * qd + d] -= tw[d];
        if (!vec_is_zero(gamma_amb(rel))) res.well_defined = false;
        RowReducer::SparseRow srel;
        for (int c = 0; c < amb; ++c)
          if (!rel[c].is_zero()) srel.emplace_back(c, rel[c]);
        dom.add_relation_sparse(srel);
      }
    }
  dom.finish();
  res.map = Mat(n, dom.dim());
  for (int w = 0; w < dom.dim(); ++w) {
    Vec img = gamma_amb(dom.section(w));
    for (int k = 0; k < n; ++k) res.map.at(k, w) = img[k];
  }
  res.bijective = dom.dim() == n && rank_of(res.map) == n;
  res.domain = std::move(dom);
  return res;
}

}  // namespace ringext
