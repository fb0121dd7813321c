#pragma once

// Hand-written structure constants used as independent oracles.

#include "hopf/bialgebra.hpp"

namespace fixtures {

using namespace hopf;

// Sweedler's algebra on the basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx.
inline FiniteHopf sweedler(const Field& f = Field::rationals()) {
  FiniteBialgebra b = FiniteBialgebra::empty(f, 4);
  b.labels = {"1", "g", "x", "gx"};
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long long c) { b.m(i, j, k) = Scalar(f, c); };
  for (std::size_t i = 0; i < 4; ++i) {
    set(0, i, i, 1);
    set(i, 0, i, 1);
  }
  set(1, 1, 0, 1);
  set(1, 2, 3, 1);
  set(1, 3, 2, 1);
  set(2, 1, 3, -1);
  set(3, 1, 2, -1);
  b.unit = unit_vector(f, 4, 0);
  b.counit = {Scalar(f, 1), Scalar(f, 1), Scalar(f, 0), Scalar(f, 0)};
  Scalar one(f, 1);
  b.comult[0] = {{0, 0, one}};
  b.comult[1] = {{1, 1, one}};
  b.comult[2] = {{2, 0, one}, {1, 2, one}};
  b.comult[3] = {{3, 1, one}, {0, 3, one}};
  FiniteHopf h;
  static_cast<FiniteBialgebra&>(h) = b;
  h.antipode = Matrix::from_ints(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  h.antipode_inverse = Matrix::from_ints(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  return h;
}

// k[t]/(t^2) with t grouplike: a bialgebra without antipode.
inline FiniteBialgebra dual_numbers_grouplike(const Field& f = Field::rationals()) {
  FiniteBialgebra b = FiniteBialgebra::empty(f, 2);
  b.labels = {"1", "t"};
  b.m(0, 0, 0) = Scalar(f, 1);
  b.m(0, 1, 1) = Scalar(f, 1);
  b.m(1, 0, 1) = Scalar(f, 1);
  b.unit = unit_vector(f, 2, 0);
  b.counit = {Scalar(f, 1), Scalar(f, 1)};
  b.comult[0] = {{0, 0, Scalar(f, 1)}};
  b.comult[1] = {{1, 1, Scalar(f, 1)}};
  return b;
}

}  // namespace fixtures

#include "hopf/yd.hpp"

namespace fixtures {

// k[x]/(x^2) over k[Z/2] with x of degree g, g.x = chi x and x primitive.
inline YDBialgebra dual_numbers_over_z2(const HopfPtr& h, long long chi) {
  const Field& f = h->field;
  AbelianGroup z2({2});
  YDModule v = diagonal_yd_module(h, z2, {1}, {{Scalar(f, chi)}});
  YDBialgebra r;
  r.module.base = h;
  r.module.dim = 2;
  r.module.labels = {"1", "x"};
  r.module.action = {Matrix::identity(f, 2), Matrix::from_ints(f, {{1, 0}, {0, chi}})};
  r.module.coaction = {{{0, 0, Scalar(f, 1)}}, {{1, 1, Scalar(f, 1)}}};
  r.mult = Matrix(f, 2, 4);
  r.mult(0, 0) = Scalar(f, 1);
  r.mult(1, 1) = Scalar(f, 1);
  r.mult(1, 2) = Scalar(f, 1);
  r.unit = unit_vector(f, 2, 0);
  r.comult = Matrix(f, 4, 2);
  r.comult(0, 0) = Scalar(f, 1);
  r.comult(2, 1) = Scalar(f, 1);  // x (x) 1
  r.comult(1, 1) = Scalar(f, 1);  // 1 (x) x
  r.counit = unit_vector(f, 2, 0);
  return r;
}

}  // namespace fixtures
