#pragma once

// Permutation groups, group algebras over Q, subgroup extensions with
// quasibase hints for normal subgroups, and the Hopf structure on group
// algebras (grouplike comultiplication, inversion antipode) together with
// the normal-Hopf-subalgebra and B+ ideal tests.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ringext/algebra.hpp"

namespace ringext {

using Perm = std::vector<int>;  // one-line notation, images of 0..deg-1

inline Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

// (p * q)(x) = p(q(x))
inline Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = (int)i;
  return r;
}

inline bool perm_valid(const Perm& p, int degree) {
  if ((int)p.size() != degree) return false;
  std::vector<bool> seen(degree, false);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

struct PermGroup {
  int degree = 1;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // closure, sorted lexicographically

  int order() const { return (int)elements.size(); }

  int index_of(const Perm& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) return -1;
    return (int)(it - elements.begin());
  }

  bool contains(const Perm& p) const { return index_of(p) >= 0; }

  bool contains_group(const PermGroup& h) const {
    if (h.degree != degree) return false;
    for (const Perm& p : h.elements)
      if (!contains(p)) return false;
    return true;
  }
};

inline PermGroup closure(int degree, std::vector<Perm> generators) {
  for (const Perm& g : generators)
    if (!perm_valid(g, degree)) throw input_error("invalid permutation");
  std::set<Perm> seen;
  std::vector<Perm> queue{perm_identity(degree)};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    Perm cur = queue.back();
    queue.pop_back();
    for (const Perm& g : generators) {
      Perm next = perm_compose(cur, g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  PermGroup grp;
  grp.degree = degree;
  grp.generators = std::move(generators);
  grp.elements.assign(seen.begin(), seen.end());  // set is sorted
  return grp;
}

inline bool is_subgroup(const PermGroup& g, const PermGroup& h) {
  return g.contains_group(h);
}

// gHg^-1 = H for every generator g of G (conjugation by products follows).
inline bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(g, h)) throw input_error("H is not a subgroup of G");
  for (const Perm& gen : g.generators) {
    Perm inv = perm_inverse(gen);
    for (const Perm& x : h.elements)
      if (!h.contains(perm_compose(gen, perm_compose(x, inv)))) return false;
  }
  return true;
}

inline Algebra group_algebra(const PermGroup& g) {
  int n = g.order();
  std::vector<Scalar> sc((size_t)n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = g.index_of(perm_compose(g.elements[i], g.elements[j]));
      sc[((size_t)i * n + j) * n + k] = Scalar(1);
    }
  int e = g.index_of(perm_identity(g.degree));
  return Algebra(n, std::move(sc), unit_vec(n, e));
}

// Explicit quasibase candidates for a D2 check; verified before use, so
// they are an accelerator, not an assumption.
struct D2Hints {
  // left terms (t, beta): t given in ambient A (x) A coordinates
  std::vector<std::pair<Vec, Mat>> left;
  // right terms (gamma, u)
  std::vector<std::pair<Mat, Vec>> right;
};

struct SubgroupExtension {
  Extension ext;
  bool normal = false;
  D2Hints hints;  // nonempty iff normal
};

inline SubgroupExtension subgroup_extension(const PermGroup& g, const PermGroup& h) {
  if (g.degree != h.degree || !is_subgroup(g, h))
    throw input_error("H is not a subgroup of G");
  Algebra A = group_algebra(g);
  Algebra B = group_algebra(h);
  int n = g.order(), m = h.order();
  Mat iota(n, m);
  for (int j = 0; j < m; ++j) {
    int idx = g.index_of(h.elements[j]);
    iota.at(idx, j) = Scalar(1);
  }
  SubgroupExtension out{make_extension(B, A, make_morphism(B, A, std::move(iota))),
                        is_normal(g, h),
                        {}};
  if (!out.normal) return out;

  // For normal H the left cosets gH give an explicit quasibase:
  //   a (x) 1 = sum_C class(g_C (x) g_C^-1) . pi_C(a)
  //   1 (x) a = sum_C pi_C(a) . class(g_C^-1 (x) g_C)
  // with pi_C the coset projection (a B-B-bimodule map by normality).
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (coset_of[i] >= 0) continue;
    reps.push_back(i);
    for (int j = 0; j < m; ++j) {
      int idx = g.index_of(perm_compose(g.elements[i], h.elements[j]));
      coset_of[idx] = i;
    }
  }
  for (int rep : reps) {
    int inv = g.index_of(perm_inverse(g.elements[rep]));
    Mat proj(n, n);
    for (int i = 0; i < n; ++i)
      if (coset_of[i] == rep) proj.at(i, i) = Scalar(1);
    Vec t((size_t)n * n), u((size_t)n * n);
    t[(size_t)rep * n + inv] = Scalar(1);
    u[(size_t)inv * n + rep] = Scalar(1);
    out.hints.left.emplace_back(std::move(t), proj);
    out.hints.right.emplace_back(proj, std::move(u));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hopf structure on group algebras

struct HopfData {
  Algebra algebra;
  Mat comult;    // (n*n) x n : column i = Delta(x_i) in A (x) A coordinates
  Vec counit;    // n entries: eps(x_i)
  Mat antipode;  // n x n
};

inline HopfData hopf_on_group_algebra(const PermGroup& g) {
  Algebra a = group_algebra(g);
  int n = a.dim();
  HopfData h{a, Mat((int)((size_t)n * n), n), Vec(n), Mat(n, n)};
  for (int i = 0; i < n; ++i) {
    h.comult.at(i * n + i, i) = Scalar(1);  // Delta(g) = g (x) g
    h.counit[i] = Scalar(1);                // eps(g) = 1
    int inv = g.index_of(perm_inverse(g.elements[i]));
    h.antipode.at(inv, i) = Scalar(1);      // tau(g) = g^-1
  }
  return h;
}

// Coassociativity, counit laws and both antipode laws on all basis vectors.
inline bool validate_hopf(const HopfData& h) {
  const Algebra& a = h.algebra;
  int n = a.dim();
  for (int i = 0; i < n; ++i) {
    Vec d = h.comult.apply(a.basis(i));  // n^2 coordinates
    // counit laws
    Vec left(n), right(n), anti1(n), anti2(n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const Scalar& c = d[(size_t)p * n + q];
        if (c.is_zero()) continue;
        left[q] += c * h.counit[p];
        right[p] += c * h.counit[q];
        Vec tp(n), tq(n);
        for (int k = 0; k < n; ++k) {
          tp[k] = h.antipode.at(k, p);
          tq[k] = h.antipode.at(k, q);
        }
        vec_axpy(anti1, c, a.mul(tp, a.basis(q)));
        vec_axpy(anti2, c, a.mul(a.basis(p), tq));
      }
    if (left != a.basis(i) || right != a.basis(i)) return false;
    Vec ue = vec_scaled(a.unit(), h.counit[i]);
    if (anti1 != ue || anti2 != ue) return false;
    // coassociativity
    Vec d1((size_t)n * n * n), d2((size_t)n * n * n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const Scalar& c = d[(size_t)p * n + q];
        if (c.is_zero()) continue;
        Vec dp = h.comult.apply(a.basis(p));
        Vec dq = h.comult.apply(a.basis(q));
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) {
            if (!dp[(size_t)r * n + s].is_zero())
              d1[((size_t)r * n + s) * n + q] += c * dp[(size_t)r * n + s];
            if (!dq[(size_t)r * n + s].is_zero())
              d2[((size_t)p * n + r) * n + s] += c * dq[(size_t)r * n + s];
          }
      }
    if (d1 != d2) return false;
  }
  return true;
}

// Verifies K's image is closed under Delta and tau; throws naming the
// violated closure otherwise.
inline void require_hopf_subalgebra(const HopfData& h, const Morphism& k) {
  const Algebra& a = h.algebra;
  int n = a.dim();
  Subspace image = k.image();
  std::vector<Vec> pair_gens;
  for (int i = 0; i < image.dim(); ++i)
    for (int j = 0; j < image.dim(); ++j) {
      Vec v((size_t)n * n);
      const Vec x = image.basis_vec(i), y = image.basis_vec(j);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (!x[p].is_zero() && !y[q].is_zero())
            v[(size_t)p * n + q] = x[p] * y[q];
      pair_gens.push_back(std::move(v));
    }
  Subspace image2 = Subspace::from_span(n * n, pair_gens);
  for (int j = 0; j < k.source_dim; ++j) {
    Vec kj = k.column(j);
    if (!image.contains(h.antipode.apply(kj)))
      throw input_error("subalgebra image not closed under the antipode");
    if (!image2.contains(h.comult.apply(kj)))
      throw input_error("subalgebra image not closed under the comultiplication");
  }
}

// Normality of the Hopf subalgebra K: tau(a_(1)) K a_(2) and
// a_(1) K tau(a_(2)) both land in K, for all basis a and K-basis k.
inline bool hopf_normal_check(const HopfData& h, const Morphism& k) {
  require_hopf_subalgebra(h, k);
  const Algebra& a = h.algebra;
  int n = a.dim();
  Subspace image = k.image();
  for (int i = 0; i < n; ++i) {
    Vec d = h.comult.apply(a.basis(i));
    for (int j = 0; j < k.source_dim; ++j) {
      Vec kj = k.column(j);
      Vec adj1(n), adj2(n);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const Scalar& c = d[(size_t)p * n + q];
          if (c.is_zero()) continue;
          Vec tp(n), tq(n);
          for (int t = 0; t < n; ++t) {
            tp[t] = h.antipode.at(t, p);
            tq[t] = h.antipode.at(t, q);
          }
          vec_axpy(adj1, c, a.mul(tp, a.mul(kj, a.basis(q))));
          vec_axpy(adj2, c, a.mul(a.basis(p), a.mul(kj, tq)));
        }
      if (!image.contains(adj1) || !image.contains(adj2)) return false;
    }
  }
  return true;
}

// AB+ = B+A where B+ = ker(eps|B); also checks B+ = A+ n iota(B).
inline bool bplus_criterion(const HopfData& h, const Morphism& k) {
  require_hopf_subalgebra(h, k);
  const Algebra& a = h.algebra;
  int n = a.dim();
  // eps restricted to K's image, as a 1 x (source_dim) matrix
  Mat eps_b(1, k.source_dim);
  for (int j = 0; j < k.source_dim; ++j) {
    Scalar v;
    Vec kj = k.column(j);
    for (int p = 0; p < n; ++p)
      if (!kj[p].is_zero()) v += kj[p] * h.counit[p];
    eps_b.at(0, j) = v;
  }
  Subspace bplus_src = kernel(eps_b);
  std::vector<Vec> bplus_gens;
  for (int i = 0; i < bplus_src.dim(); ++i)
    bplus_gens.push_back(k.apply(bplus_src.basis_vec(i)));
  Subspace bplus = Subspace::from_span(n, bplus_gens);

  Mat eps_a(1, n);
  for (int p = 0; p < n; ++p) eps_a.at(0, p) = h.counit[p];
  Subspace aplus = kernel(eps_a);
  if (intersect(aplus, k.image()) != bplus) return false;

  std::vector<Vec> lgens, rgens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < bplus.dim(); ++j) {
      lgens.push_back(a.mul(a.basis(i), bplus.basis_vec(j)));
      rgens.push_back(a.mul(bplus.basis_vec(j), a.basis(i)));
    }
  return Subspace::from_span(n, lgens) == Subspace::from_span(n, rgens);
}

// ---------------------------------------------------------------------------
// Subgroup enumeration and the fixed group catalog for the sweep

inline std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out, frontier;
  PermGroup triv = closure(g.degree, {});
  seen.insert(triv.elements);
  out.push_back(triv);
  frontier.push_back(triv);
  while (!frontier.empty()) {
    std::vector<PermGroup> next;
    for (const PermGroup& h : frontier)
      for (const Perm& x : g.elements) {
        if (h.contains(x)) continue;
        std::vector<Perm> gens = h.generators;
        gens.push_back(x);
        PermGroup bigger = closure(g.degree, gens);
        if (seen.insert(bigger.elements).second) {
          out.push_back(bigger);
          next.push_back(bigger);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

struct CatalogGroup {
  std::string name;
  int degree;
  std::vector<Perm> gens;
};

// Fixed generator catalog used by the order <= 12 sweep.
inline std::vector<CatalogGroup> catalog_groups() {
  std::vector<CatalogGroup> cat;
  cat.push_back({"C1", 1, {}});
  for (int k = 2; k <= 12; ++k) {
    Perm cyc(k);
    for (int i = 0; i < k; ++i) cyc[i] = (i + 1) % k;
    cat.push_back({"C" + std::to_string(k), k, {cyc}});
  }
  cat.push_back({"C2xC2", 4, {{1, 0, 2, 3}, {0, 1, 3, 2}}});
  cat.push_back({"C2xC2xC2", 6, {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}}});
  cat.push_back({"C2xC4", 6, {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 4, 5, 2}}});
  cat.push_back({"C2xC6", 8, {{1, 0, 2, 3, 4, 5, 6, 7}, {0, 1, 3, 4, 5, 6, 7, 2}}});
  for (int k = 3; k <= 6; ++k) {
    Perm rot(k), refl(k);
    for (int i = 0; i < k; ++i) {
      rot[i] = (i + 1) % k;
      refl[i] = (k - i) % k;
    }
    cat.push_back({(k == 3 ? std::string("S3") : "D" + std::to_string(k)), k, {rot, refl}});
  }
  // Q8 acting on {1,-1,i,-i,j,-j,k,-k} = indices 0..7 by left multiplication
  cat.push_back({"Q8", 8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}});
  cat.push_back({"A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}});
  return cat;
}

}  // namespace ringext
