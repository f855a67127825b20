#pragma once

// The builtin extension catalog used by tests and the CLI.

#include <string>
#include <vector>

#include "ringext/grouphopf.hpp"

namespace ringext {

// Full matrix algebra M_d(Q), basis e_ij in row-major order.
inline Algebra matrix_algebra(int d) {
  int n = d * d;
  std::vector<Scalar> sc((size_t)n * n * n);
  auto idx = [d](int i, int j) { return i * d + j; };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          if (j == k)
            sc[((size_t)idx(i, j) * n + idx(k, l)) * n + idx(i, l)] = Scalar(1);
  Vec unit(n);
  for (int i = 0; i < d; ++i) unit[idx(i, i)] = Scalar(1);
  return Algebra(n, std::move(sc), unit);
}

inline Algebra rationals_algebra() {
  return Algebra(1, {Scalar(1)}, {Scalar(1)});
}

struct Fixture {
  std::string name;
  std::string description;
  Extension ext;
  D2Hints hints;  // explicit quasibase candidates where the construction is known
};

inline std::vector<std::string> fixture_names() {
  return {"E1", "E2", "E3", "E4", "E5", "E6"};
}

inline Fixture make_fixture(const std::string& name) {
  if (name == "E1") {
    // A = Q x Q over B = Q (unit embedding)
    std::vector<Scalar> sc(8);
    sc[0] = Scalar(1);                    // e0 e0 = e0
    sc[((size_t)1 * 2 + 1) * 2 + 1] = Scalar(1);  // e1 e1 = e1
    Algebra A(2, std::move(sc), {Scalar(1), Scalar(1)});
    Algebra B = rationals_algebra();
    Mat iota(2, 1);
    iota.at(0, 0) = Scalar(1);
    iota.at(1, 0) = Scalar(1);
    return {name, "Q x Q over Q",
            make_extension(B, A, make_morphism(B, A, std::move(iota))), {}};
  }
  if (name == "E2") {
    Algebra A = matrix_algebra(2);
    Algebra B = rationals_algebra();
    Mat iota(4, 1);
    iota.at(0, 0) = Scalar(1);
    iota.at(3, 0) = Scalar(1);
    return {name, "M2(Q) over Q",
            make_extension(B, A, make_morphism(B, A, std::move(iota))), {}};
  }
  if (name == "E3" || name == "E4" || name == "E6") {
    PermGroup s3 = closure(3, {{1, 2, 0}, {1, 0, 2}});
    PermGroup h = name == "E3"   ? closure(3, {{1, 2, 0}})
                  : name == "E4" ? closure(3, {{1, 0, 2}})
                                 : s3;
    SubgroupExtension se = subgroup_extension(s3, h);
    std::string desc = name == "E3"   ? "Q[S3] over Q[A3] (normal)"
                       : name == "E4" ? "Q[S3] over Q[<(12)>] (non-normal)"
                                      : "Q[S3] over itself";
    return {name, desc, std::move(se.ext), std::move(se.hints)};
  }
  if (name == "E5") {
    // Upper triangular 2x2 over the diagonal; basis e11, e12, e22.
    std::vector<Scalar> sc(27);
    auto at = [&sc](int i, int j, int k) -> Scalar& {
      return sc[((size_t)i * 3 + j) * 3 + k];
    };
    at(0, 0, 0) = Scalar(1);
    at(0, 1, 1) = Scalar(1);
    at(1, 2, 1) = Scalar(1);
    at(2, 2, 2) = Scalar(1);
    Algebra A(3, std::move(sc), {Scalar(1), Scalar(0), Scalar(1)});
    std::vector<Scalar> scb(8);
    scb[0] = Scalar(1);
    scb[((size_t)1 * 2 + 1) * 2 + 1] = Scalar(1);
    Algebra B(2, std::move(scb), {Scalar(1), Scalar(1)});
    Mat iota(3, 2);
    iota.at(0, 0) = Scalar(1);
    iota.at(2, 1) = Scalar(1);
    return {name, "upper triangular 2x2 over diagonal",
            make_extension(B, A, make_morphism(B, A, std::move(iota))), {}};
  }
  throw input_error("unknown fixture " + name);
}

}  // namespace ringext
