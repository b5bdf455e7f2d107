#pragma once

// Shared in-code fixtures: the coefficient algebras and pi-structures the
// suites exercise.

#include "orelab/orering.hpp"

namespace orelab::fixtures {

inline std::vector<Scalar> sc_zero(BaseRing base, std::size_t dim) {
  return std::vector<Scalar>(dim * dim * dim, zero_of(base));
}

inline void set_sc(std::vector<Scalar>& sc, std::size_t dim, std::size_t i,
                   std::size_t j, std::size_t k, std::int64_t v, BaseRing base) {
  sc[(i * dim + j) * dim + k] = Scalar::from_int(base, v);
}

/// F_p (or Q) as a one-dimensional algebra.
inline Algebra scalar_algebra(BaseRing base) {
  auto sc = sc_zero(base, 1);
  set_sc(sc, 1, 0, 0, 0, 1, base);
  return Algebra(base, 1, sc, {one_of(base)});
}

/// F_2 x F_2 with componentwise product, unit (1,1).
inline Algebra f2xf2() {
  BaseRing base = BaseRing::fp(2);
  auto sc = sc_zero(base, 2);
  set_sc(sc, 2, 0, 0, 0, 1, base);
  set_sc(sc, 2, 1, 1, 1, 1, base);
  return Algebra(base, 2, sc, {one_of(base), one_of(base)});
}

/// F_4 = F_2[w]/(w^2+w+1), basis {1, w}.
inline Algebra f4() {
  BaseRing base = BaseRing::fp(2);
  auto sc = sc_zero(base, 2);
  set_sc(sc, 2, 0, 0, 0, 1, base);
  set_sc(sc, 2, 0, 1, 1, 1, base);
  set_sc(sc, 2, 1, 0, 1, 1, base);
  set_sc(sc, 2, 1, 1, 0, 1, base);  // w^2 = 1 + w
  set_sc(sc, 2, 1, 1, 1, 1, base);
  AlgElem unit = {one_of(base), zero_of(base)};
  return Algebra(base, 2, sc, unit, {"1", "w"});
}

/// K[y]/(y^n), basis {1, y, ..., y^{n-1}}.
inline Algebra truncated_poly(BaseRing base, std::size_t n) {
  auto sc = sc_zero(base, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) set_sc(sc, n, i, j, i + j, 1, base);
  AlgElem unit = zero_vec(base, n);
  unit[0] = one_of(base);
  std::vector<std::string> names{"1", "y"};
  for (std::size_t i = 2; i < n; ++i) names.push_back("y" + std::to_string(i));
  names.resize(n);
  return Algebra(base, n, sc, unit, names);
}

/// d/dy on K[y]/(y^n).
inline AddMap ddy(const Algebra& alg) {
  AddMap m(alg.base(), alg.dim());
  for (std::size_t j = 1; j < alg.dim(); ++j)
    m.at(j - 1, j) = Scalar::from_int(alg.base(), static_cast<std::int64_t>(j));
  return m;
}

/// F_3[u,v]/(u^3,v^3), basis u^i v^j at index 3i+j.
inline Algebra f3uv() {
  BaseRing base = BaseRing::fp(3);
  const std::size_t dim = 9;
  auto sc = sc_zero(base, dim);
  for (std::size_t i1 = 0; i1 < 3; ++i1)
    for (std::size_t j1 = 0; j1 < 3; ++j1)
      for (std::size_t i2 = 0; i2 < 3; ++i2)
        for (std::size_t j2 = 0; j2 < 3; ++j2)
          if (i1 + i2 < 3 && j1 + j2 < 3)
            set_sc(sc, dim, 3 * i1 + j1, 3 * i2 + j2,
                   3 * (i1 + i2) + (j1 + j2), 1, base);
  AlgElem unit = zero_vec(base, dim);
  unit[0] = one_of(base);
  return Algebra(base, dim, sc, unit);
}

inline AddMap du_f3uv(const Algebra& alg) {
  AddMap m(alg.base(), 9);
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m.at(3 * (i - 1) + j, 3 * i + j) =
          Scalar::from_int(alg.base(), static_cast<std::int64_t>(i));
  return m;
}

inline AddMap dv_f3uv(const Algebra& alg) {
  AddMap m(alg.base(), 9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 1; j < 3; ++j)
      m.at(3 * i + (j - 1), 3 * i + j) =
          Scalar::from_int(alg.base(), static_cast<std::int64_t>(j));
  return m;
}

/// 2x2 matrix algebra over F_3, basis {E11, E12, E21, E22}.
inline Algebra m2_f3() {
  BaseRing base = BaseRing::fp(3);
  const std::size_t dim = 4;
  auto idx = [](std::size_t a, std::size_t b) { return 2 * a + b; };
  auto sc = sc_zero(base, dim);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          if (b == c) set_sc(sc, dim, idx(a, b), idx(c, d), idx(a, d), 1, base);
  AlgElem unit = zero_vec(base, dim);
  unit[idx(0, 0)] = one_of(base);
  unit[idx(1, 1)] = one_of(base);
  return Algebra(base, dim, sc, unit);
}

/// A deliberately non-associative unital algebra over F_2:
/// basis {1, a, b} with a*a = b, a*b = a, b*a = 0, b*b = 0.
inline Algebra nonassoc_f2() {
  BaseRing base = BaseRing::fp(2);
  auto sc = sc_zero(base, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    set_sc(sc, 3, 0, i, i, 1, base);
    if (i) set_sc(sc, 3, i, 0, i, 1, base);
  }
  set_sc(sc, 3, 1, 1, 2, 1, base);
  set_sc(sc, 3, 1, 2, 1, 1, base);
  AlgElem unit = zero_vec(base, 3);
  unit[0] = one_of(base);
  return Algebra(base, 3, sc, unit, {"1", "a", "b"});
}

/// The two-element cyclic monoid {0, g} with g+g = g, ordered 0 < g.
inline MonoidSpec two_element_monoid() {
  FiniteMonoid fm;
  fm.size = 2;
  fm.identity = 0;
  fm.cayley = {{0, 1}, {1, 1}};
  fm.order = {0, 1};
  fm.names = {"0", "g"};
  return fm;
}

/// pi on {0,g} with pi^g_0 = P (pi^0_0 = pi^g_g = id implicit).
inline PiStructure cyclic2_pi(const Algebra& alg, const AddMap& p) {
  return PiStructure::explicit_table(
      two_element_monoid(), alg.base(), alg.dim(),
      {PiTableEntry{MonoidElem{std::size_t{1}}, MonoidElem{std::size_t{0}}, p}});
}

/// P(a,b) = (0, a+b) on F_2 x F_2.
inline AddMap projection_sum(const Algebra& alg) {
  AddMap p(alg.base(), 2);
  p.at(1, 0) = one_of(alg.base());
  p.at(1, 1) = one_of(alg.base());
  return p;
}

/// P(x + y w) = y w on F_4 (projection onto the w-line along F_2).
inline AddMap projection_w(const Algebra& alg) {
  AddMap p(alg.base(), 2);
  p.at(1, 1) = one_of(alg.base());
  return p;
}

/// The untwisted pi (every off-diagonal map zero) on {0,g}.
inline PiStructure untwisted_pi(const Algebra& alg) {
  return PiStructure::explicit_table(two_element_monoid(), alg.base(),
                                     alg.dim(), {});
}

inline PiStructure delta_pi(const Algebra& alg, std::vector<AddMap> deltas) {
  return PiStructure::delta_generated(DeltaFamily(alg, std::move(deltas)));
}

}  // namespace orelab::fixtures
