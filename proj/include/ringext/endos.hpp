#pragma once

// Endomorphism rings of the extension: E = End(A_B), S = End(_B A_B), the
// evaluation action of S on A and on R, the module _S R with its projective
// and generator witnesses, the balanced-module test, and the smash /
// evaluation isomorphisms.
//
// Endomorphisms are carried as n x n matrices vectorized row-major, so
// every ring here is a matrix subspace with explicit structure constants.

#include <optional>
#include <vector>

#include "ringext/algebra.hpp"

namespace ringext {

struct EndRing {
  Subspace carrier;  // inside the n^2-dimensional space of matrices
  Algebra ring;      // composition structure constants on the carrier basis

  int dim() const { return ring.dim(); }
  int n = 0;  // matrices are n x n

  Mat mat_of_coords(const Vec& coords) const {
    return Mat::from_vector(n, n, carrier.from_coords(coords));
  }
  Mat basis_mat(int i) const { return mat_of_coords(ring.basis(i)); }
  std::optional<Vec> coords_of_mat(const Mat& m) const {
    return carrier.coords_of(m.vectorized());
  }
};

namespace detail {

// Rows expressing M G - G M = 0 in the unknown matrix M (vectorized).
inline void append_commutation_rows(std::vector<Vec>& rows, const Mat& g) {
  int n = g.rows();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Vec row((size_t)n * n);
      for (int k = 0; k < n; ++k) {
        if (!g.at(k, c).is_zero()) row[(size_t)r * n + k] += g.at(k, c);
        if (!g.at(r, k).is_zero()) row[(size_t)k * n + c] -= g.at(r, k);
      }
      rows.push_back(std::move(row));
    }
}

inline Subspace kernel_of_rows(int ambient, const std::vector<Vec>& rows) {
  Mat m((int)rows.size(), ambient);
  for (size_t r = 0; r < rows.size(); ++r) m.set_row((int)r, rows[r]);
  return kernel(m);
}

}  // namespace detail

// Subspace of matrices commuting with every rho(iota(b)) - i.e. right
// B-module endomorphisms of A.
inline Subspace e_subspace(const Extension& ext) {
  std::vector<Vec> rows;
  for (int b = 0; b < ext.dimB(); ++b)
    detail::append_commutation_rows(rows, ext.rho_of(ext.iota_col(b)));
  return detail::kernel_of_rows(ext.dimA() * ext.dimA(), rows);
}

// B-B-bimodule endomorphisms of A.
inline Subspace s_subspace(const Extension& ext) {
  std::vector<Vec> rows;
  for (int b = 0; b < ext.dimB(); ++b) {
    detail::append_commutation_rows(rows, ext.rho_of(ext.iota_col(b)));
    detail::append_commutation_rows(rows, ext.lambda_of(ext.iota_col(b)));
  }
  return detail::kernel_of_rows(ext.dimA() * ext.dimA(), rows);
}

inline EndRing make_end_ring(const Extension& ext, Subspace carrier) {
  int n = ext.dimA();
  int d = carrier.dim();
  std::vector<Scalar> sc((size_t)d * d * d);
  std::vector<Mat> mats;
  for (int i = 0; i < d; ++i)
    mats.push_back(Mat::from_vector(n, n, carrier.basis_vec(i)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto coords = carrier.coords_of((mats[i] * mats[j]).vectorized());
      if (!coords) throw selfcheck_error("endomorphism space not composition-closed");
      for (int k = 0; k < d; ++k) sc[((size_t)i * d + j) * d + k] = (*coords)[k];
    }
  auto unit = carrier.coords_of(Mat::identity(n).vectorized());
  if (!unit) throw selfcheck_error("identity map missing from endomorphism space");
  EndRing er{std::move(carrier), Algebra(d, std::move(sc), *unit)};
  er.n = n;
  if (!validate_algebra(er.ring).ok())
    throw selfcheck_error("endomorphism ring fails validation");
  return er;
}

inline EndRing compute_E(const Extension& ext) {
  EndRing er = make_end_ring(ext, e_subspace(ext));
  for (int i = 0; i < ext.dimA(); ++i)
    if (!er.carrier.contains(ext.lambda_basis[i].vectorized()))
      throw selfcheck_error("lambda(A) not inside End(A_B)");
  return er;
}

inline EndRing compute_S(const Extension& ext) {
  EndRing er = make_end_ring(ext, s_subspace(ext));
  for (int i = 0; i < ext.R.dim(); ++i) {
    if (!er.carrier.contains(ext.lambda_of(ext.R.basis_vec(i)).vectorized()))
      throw selfcheck_error("lambda(R) not inside S");
    if (!er.carrier.contains(ext.rho_of(ext.R.basis_vec(i)).vectorized()))
      throw selfcheck_error("rho(R) not inside S");
  }
  return er;
}

struct SActionResult {
  Subspace invariants;  // A^S = { a : alpha(a) = alpha(1) a for all alpha }
  bool equals_iota_b = false;
};

inline SActionResult s_action(const Extension& ext, const EndRing& S) {
  int n = ext.dimA();
  std::vector<Vec> rows;
  for (int l = 0; l < S.dim(); ++l) {
    Mat sig = S.basis_mat(l);
    Mat diff = sig - ext.lambda_of(sig.apply(ext.A.unit()));
    for (int r = 0; r < n; ++r) rows.push_back(diff.row(r));
  }
  SActionResult res;
  res.invariants = detail::kernel_of_rows(n, rows);
  res.equals_iota_b = res.invariants == ext.iota_image;
  return res;
}

struct SRModule {
  std::vector<Mat> action;  // per S-basis element, dim(R) x dim(R)
  // witness for _S R projective: an S-linear splitting j: R -> S of
  // evaluation-at-1, as a dim(S) x dim(R) matrix
  std::optional<Mat> projective;
  // witness for _S R generator: pairs (x_i in R, g_i: R -> S) with
  // sum_i g_i(alpha(x_i)) = alpha
  struct GenWitness {
    std::vector<Vec> xs;       // elements of R (A-coordinates)
    std::vector<Mat> gs;       // S-linear maps R -> S
  };
  std::optional<GenWitness> generator;
};

// Space of S-linear maps R -> S as dim(S) x dim(R) matrices J:
//   J . act_l(:, i) = sum_p J[p][i] * (sigma_l o S_p)   for all l, i.
inline Subspace hom_s_r_to_s(const Extension& ext, const EndRing& S,
                             const std::vector<Mat>& act) {
  int s = S.dim(), r = ext.R.dim();
  std::vector<Vec> rows;
  for (int l = 0; l < s; ++l)
    for (int i = 0; i < r; ++i)
      for (int out = 0; out < s; ++out) {
        Vec row((size_t)s * r);  // unknown J[p][i2] at p*r + i2
        for (int q = 0; q < r; ++q)
          if (!act[l].at(q, i).is_zero())
            row[(size_t)out * r + q] += act[l].at(q, i);
        for (int p = 0; p < s; ++p) {
          const Scalar& c = S.ring.sc(l, p, out);
          if (!c.is_zero()) row[(size_t)p * r + i] -= c;
        }
        rows.push_back(std::move(row));
      }
  return detail::kernel_of_rows(s * r, rows);
}

// Evaluation action matrices of S on R, one dim(R) x dim(R) matrix per
// S-basis element.
inline std::vector<Mat> s_action_on_r(const Extension& ext, const EndRing& S) {
  int s = S.dim(), r = ext.R.dim();
  std::vector<Mat> action;
  for (int l = 0; l < s; ++l) {
    Mat sig = S.basis_mat(l);
    Mat act(r, r);
    for (int i = 0; i < r; ++i) {
      Vec img = sig.apply(ext.R.basis_vec(i));
      auto coords = ext.R.coords_of(img);
      if (!coords) throw selfcheck_error("evaluation action left R");
      for (int q = 0; q < r; ++q) act.at(q, i) = (*coords)[q];
    }
    action.push_back(std::move(act));
  }
  return action;
}

inline SRModule sr_module(const Extension& ext, const EndRing& S) {
  int s = S.dim(), r = ext.R.dim(), n = ext.dimA();
  SRModule mod;
  mod.action = s_action_on_r(ext, S);

  // projective: S-linear j with j(r)(1) = r, i.e. a splitting of ev_1
  {
    LinearSystem sys(s * r);
    for (int l = 0; l < s; ++l)
      for (int i = 0; i < r; ++i)
        for (int out = 0; out < s; ++out) {
          Vec row((size_t)s * r);
          for (int q = 0; q < r; ++q)
            if (!mod.action[l].at(q, i).is_zero())
              row[(size_t)out * r + q] += mod.action[l].at(q, i);
          for (int p = 0; p < s; ++p) {
            const Scalar& c = S.ring.sc(l, p, out);
            if (!c.is_zero()) row[(size_t)p * r + i] -= c;
          }
          sys.add_row(std::move(row), Scalar(0));
        }
    for (int i = 0; i < r; ++i) {
      Vec ri = ext.R.basis_vec(i);
      for (int k = 0; k < n; ++k) {
        Vec row((size_t)s * r);
        for (int p = 0; p < s; ++p) {
          Vec ev1 = S.basis_mat(p).apply(ext.A.unit());
          if (!ev1[k].is_zero()) row[(size_t)p * r + i] = ev1[k];
        }
        sys.add_row(std::move(row), ri[k]);
      }
    }
    if (sys.feasible()) {
      Vec sol = sys.particular();
      Mat j(s, r);
      for (int p = 0; p < s; ++p)
        for (int i = 0; i < r; ++i) j.at(p, i) = sol[(size_t)p * r + i];
      mod.projective = std::move(j);
    }
  }

  // generator: id_S in span{ g o f_x } with f_x(alpha) = alpha(x)
  {
    Subspace homs = hom_s_r_to_s(ext, S, mod.action);
    std::vector<Mat> gs;
    for (int m = 0; m < homs.dim(); ++m)
      gs.push_back(Mat::from_vector(s, r, homs.basis_vec(m)));
    // composite (m, x=i): sigma_l -> g_m( act_l(:, i-th column times) x )
    std::vector<Vec> cols;
    for (int m = 0; m < (int)gs.size(); ++m)
      for (int i = 0; i < r; ++i) {
        Mat comp(s, s);
        for (int l = 0; l < s; ++l) {
          Vec ax(r);
          for (int q = 0; q < r; ++q) ax[q] = mod.action[l].at(q, i);
          Vec img = gs[m].apply(ax);
          for (int out = 0; out < s; ++out) comp.at(out, l) = img[out];
        }
        cols.push_back(comp.vectorized());
      }
    Mat sys((int)((size_t)s * s), (int)cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
      for (int row = 0; row < s * s; ++row) sys.at(row, (int)c) = cols[c][row];
    auto sol = solve(sys, Mat::identity(s).vectorized());
    if (sol) {
      SRModule::GenWitness w;
      for (int m = 0; m < (int)gs.size(); ++m)
        for (int i = 0; i < r; ++i) {
          const Scalar& c = sol->particular[(size_t)m * r + i];
          if (c.is_zero()) continue;
          w.xs.push_back(vec_scaled(ext.R.basis_vec(i), c));
          w.gs.push_back(gs[m]);
        }
      mod.generator = std::move(w);
    }
  }
  return mod;
}

// End(_E A) = rho(iota(B)) ?
inline bool balanced_check(const Extension& ext, const EndRing& E) {
  std::vector<Vec> rows;
  for (int l = 0; l < E.dim(); ++l)
    detail::append_commutation_rows(rows, E.basis_mat(l));
  Subspace commutant =
      detail::kernel_of_rows(ext.dimA() * ext.dimA(), rows);
  std::vector<Vec> gens;
  for (int b = 0; b < ext.dimB(); ++b)
    gens.push_back(ext.rho_of(ext.iota_col(b)).vectorized());
  return commutant == Subspace::from_span(ext.dimA() * ext.dimA(), gens);
}

struct TensorIsoResult {
  int domain_dim = 0;
  bool bijective = false;
};

// A (x)_R S -> E via a (x) alpha -> lambda(a) o alpha,
// with relations a r (x) alpha - a (x) lambda(r) alpha.
inline TensorIsoResult smash_iso(const Extension& ext, const EndRing& S,
                                 const EndRing& E) {
  int n = ext.dimA(), s = S.dim(), r = ext.R.dim();
  QuotientSpace dom(n * s);
  for (int i = 0; i < n; ++i)
    for (int ri = 0; ri < r; ++ri) {
      Vec ar = ext.A.mul(ext.A.basis(i), ext.R.basis_vec(ri));
      Mat lr = ext.lambda_of(ext.R.basis_vec(ri));
      for (int l = 0; l < s; ++l) {
        auto la = S.coords_of_mat(lr * S.basis_mat(l));
        if (!la) throw selfcheck_error("lambda(r) o alpha left S");
        RowReducer::SparseRow rel;
        for (int k = 0; k < n; ++k)
          if (!ar[k].is_zero()) rel.emplace_back(k * s + l, ar[k]);
        for (int p = 0; p < s; ++p)
          if (!(*la)[p].is_zero()) rel.emplace_back(i * s + p, -(*la)[p]);
        dom.add_relation_sparse(rel);
      }
    }
  dom.finish();
  Mat map(E.dim(), dom.dim());
  for (int w = 0; w < dom.dim(); ++w) {
    int amb = dom.free_cols()[w];
    int i = amb / s, l = amb % s;
    auto coords = E.coords_of_mat(ext.lambda_basis[i] * S.basis_mat(l));
    if (!coords) throw selfcheck_error("lambda(a) o alpha left End(A_B)");
    for (int k = 0; k < E.dim(); ++k) map.at(k, w) = (*coords)[k];
  }
  return {dom.dim(), dom.dim() == E.dim() && rank_of(map) == E.dim()};
}

struct EvaluationIsoResult {
  int domain_dim = 0;
  bool bijective = false;
  bool inverse_ok = false;  // a -> lambda(a) (x) 1 inverts evaluation
};

// E (x)_S R -> A via f (x) r -> f(r), relations (f o alpha) (x) r - f (x) alpha(r).
inline EvaluationIsoResult e_tensor_r(const Extension& ext, const EndRing& S,
                                      const EndRing& E) {
  int n = ext.dimA(), e = E.dim(), s = S.dim(), r = ext.R.dim();
  QuotientSpace dom(e * r);
  for (int fi = 0; fi < e; ++fi) {
    Mat f = E.basis_mat(fi);
    for (int l = 0; l < s; ++l) {
      auto fa = E.coords_of_mat(f * S.basis_mat(l));
      if (!fa) throw selfcheck_error("f o alpha left End(A_B)");
      for (int ri = 0; ri < r; ++ri) {
        Vec ar = S.basis_mat(l).apply(ext.R.basis_vec(ri));
        auto arc = ext.R.coords_of(ar);
        if (!arc) throw selfcheck_error("alpha(r) left R");
        RowReducer::SparseRow rel;
        for (int k = 0; k < e; ++k)
          if (!(*fa)[k].is_zero()) rel.emplace_back(k * r + ri, (*fa)[k]);
        for (int q = 0; q < r; ++q)
          if (!(*arc)[q].is_zero()) rel.emplace_back(fi * r + q, -(*arc)[q]);
        dom.add_relation_sparse(rel);
      }
    }
  }
  dom.finish();
  Mat map(n, dom.dim());
  for (int w = 0; w < dom.dim(); ++w) {
    int amb = dom.free_cols()[w];
    Vec img = E.basis_mat(amb / r).apply(ext.R.basis_vec(amb % r));
    for (int k = 0; k < n; ++k) map.at(k, w) = img[k];
  }
  EvaluationIsoResult res;
  res.domain_dim = dom.dim();
  res.bijective = dom.dim() == n && rank_of(map) == n;
  if (res.bijective) {
    // spot-check the stated inverse a -> lambda(a) (x) 1
    res.inverse_ok = true;
    auto unit_r = ext.R.coords_of(ext.A.unit());
    for (int i = 0; i < n && res.inverse_ok; ++i) {
      auto lc = E.coords_of_mat(ext.lambda_basis[i]);
      Vec amb((size_t)e * r);
      for (int k = 0; k < e; ++k)
        for (int q = 0; q < r; ++q) amb[(size_t)k * r + q] = (*lc)[k] * (*unit_r)[q];
      Vec cls = dom.project(amb);
      if (map.apply(cls) != ext.A.basis(i)) res.inverse_ok = false;
    }
  }
  return res;
}

struct EndSrResult {
  Subspace endos;        // commutant of the S-action on R, inside R-matrices
  bool equals_zb = false;
};

// End(_S R) compared against lambda(iota(Z(B))) restricted to R.
inline EndSrResult end_sr(const Extension& ext, const EndRing& S) {
  int r = ext.R.dim();
  std::vector<Vec> rows;
  for (const Mat& act : s_action_on_r(ext, S))
    detail::append_commutation_rows(rows, act);
  EndSrResult res;
  res.endos = detail::kernel_of_rows(r * r, rows);
  Subspace zb = center(ext.B);
  std::vector<Vec> gens;
  for (int i = 0; i < zb.dim(); ++i) {
    Vec z = ext.iota_of(zb.basis_vec(i));
    Mat act(r, r);
    for (int q = 0; q < r; ++q) {
      auto coords = ext.R.coords_of(ext.A.mul(z, ext.R.basis_vec(q)));
      if (!coords) throw selfcheck_error("Z(B) action left R");
      for (int p = 0; p < r; ++p) act.at(p, q) = (*coords)[p];
    }
    gens.push_back(act.vectorized());
  }
  res.equals_zb = res.endos == Subspace::from_span(r * r, gens);
  return res;
}

}  // namespace ringext
