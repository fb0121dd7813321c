#include <doctest.h>

#include "fixtures.hpp"
#include "hopf/errors.hpp"
#include "hopf/yd.hpp"

using namespace hopf;

namespace {

HopfPtr z2(const Field& f = Field::rationals()) { return share(group_algebra(AbelianGroup({2}), f)); }

}  // namespace

TEST_CASE("one-dimensional diagonal module and its braiding") {
  HopfPtr h = z2();
  YDModule v = diagonal_yd_module(h, AbelianGroup({2}), {1}, {{Scalar(h->field, -1)}});
  CHECK(check_yd(v).ok());
  Matrix c = braiding(v, v);
  CHECK(c(0, 0).to_string() == "-1");
  YDModule vv = tensor_product(v, v);
  CHECK(check_yd(vv).ok());
  CHECK(check_yd(tensor_power(v, 3)).ok());
  CHECK(check_yd(trivial_yd_module(h)).ok());
}

TEST_CASE("action not preserving the grading violates both compatibility forms") {
  HopfPtr h = z2();
  const Field& f = h->field;
  YDModule m;
  m.base = h;
  m.dim = 2;
  m.labels = {"a", "b"};
  m.action = {Matrix::identity(f, 2), Matrix::from_ints(f, {{0, 1}, {1, 0}})};
  m.coaction = {{{0, 0, Scalar(f, 1)}}, {{1, 1, Scalar(f, 1)}}};
  Report r = check_yd(m);
  CHECK(r.has_failure("yd_compatibility"));
  CHECK(r.has_failure("yd_coaction_of_action"));
  CHECK_FALSE(r.has_failure("yd_forms_disagree"));
}

TEST_CASE("braiding is a morphism and satisfies the braid relation") {
  HopfPtr h = share(group_algebra(AbelianGroup({3}), Field::prime(7)));
  const Field& f = h->field;
  YDModule v = diagonal_yd_module(h, AbelianGroup({3}), {1, 2}, {{Scalar(f, 2)}, {Scalar(f, 4)}});
  CHECK(check_yd(v).ok());
  Matrix c = braiding(v, v);
  CHECK(check_yd_morphism(c, tensor_product(v, v), tensor_product(v, v)).ok());
  Matrix id = Matrix::identity(f, 2);
  Matrix c1 = tensor_of_maps(c, id), c2 = tensor_of_maps(id, c);
  CHECK(c1 * c2 * c1 == c2 * c1 * c2);
  // Diagonal braiding: c(v_i (x) v_j) = chi_j(g_i) v_j (x) v_i.
  CHECK(c(1 * 2 + 0, 0 * 2 + 1).to_string() == "4");  // chi_2(g_1) = 4
  CHECK(c(0 * 2 + 1, 1 * 2 + 0).to_string() == "4");  // chi_1(g_2) = 2^2
}

TEST_CASE("braided Hopf algebra k[x]/(x^2)") {
  HopfPtr h = z2();
  YDBialgebra r = fixtures::dual_numbers_over_z2(h, -1);
  CHECK(check_yd_bialgebra(r).ok());

  YDBialgebra rop = underline_op_bialgebra(r);
  CHECK(check_yd_bialgebra(rop).ok());
  // Delta_op(x) = x (x) 1 + 1 (x) x
  CHECK(rop.comult.column(1) == r.comult.column(1));

  YDBialgebra rd = underline_dual_bialgebra(r);
  CHECK(check_yd(rd.module).ok());
  CHECK(check_yd_bialgebra(rd).ok());
  CHECK(check_yd_bialgebra(underline_dual_bialgebra(rop)).ok());
  CHECK(check_yd_bialgebra(underline_op_bialgebra(rd)).ok());

  YDAlgebra t = braided_tensor_algebra(r.algebra(), r.algebra());
  CHECK(check_yd_algebra(t).ok());
  YDCoalgebra tc = braided_tensor_coalgebra(r.coalgebra(), r.coalgebra());
  CHECK(check_yd_coalgebra(tc).ok());
}

TEST_CASE("trivial character breaks the braided compatibility") {
  HopfPtr h = z2();
  YDBialgebra r = fixtures::dual_numbers_over_z2(h, 1);
  Report rep = check_yd_bialgebra(r);
  CHECK(rep.has_failure("comult_multiplicative"));
  CHECK(check_yd_algebra(r.algebra()).ok());
  CHECK(check_yd_coalgebra(r.coalgebra()).ok());
}

TEST_CASE("opposite transport and braiding relations") {
  HopfPtr h = share(group_algebra(AbelianGroup({3}), Field::prime(7)));
  const Field& f = h->field;
  YDModule v = diagonal_yd_module(h, AbelianGroup({3}), {1}, {{Scalar(f, 2)}});
  // S^{-1}(g).v = g^{-1}.v = 4 v for chi(g) = 2
  CHECK(op_transport(v, v)(0, 0).to_string() == "4");
  YDModule vop = underline_op_module(v);
  CHECK(check_yd(vop).ok());
  CHECK(check_yd(underline_dual_module(v)).ok());
  CHECK(check_yd(underline_dual_module(vop)).ok());
}
