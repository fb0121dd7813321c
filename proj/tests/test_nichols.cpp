#include <doctest.h>

#include "fixtures.hpp"
#include "hopf/errors.hpp"
#include "hopf/nichols.hpp"

using namespace hopf;

namespace {

struct Diagonal {
  HopfPtr h;
  YDModule v;
};

// Generators of Z/order, each graded by the generator g with character value q.
Diagonal cyclic(const Field& f, std::size_t order, const std::vector<long long>& qs) {
  AbelianGroup g({order});
  HopfPtr h = share(group_algebra(g, f));
  std::vector<std::size_t> grades(qs.size(), 1);
  std::vector<Vector> chars;
  for (auto q : qs) chars.push_back({Scalar(f, q)});
  return {h, diagonal_yd_module(h, g, grades, chars)};
}

// H itself with the adjoint action and the regular coaction.
YDModule adjoint_module(const HopfPtr& h) {
  YDModule m;
  m.base = h;
  m.dim = h->dim;
  m.labels = h->labels;
  const Field& f = h->field;
  for (std::size_t x = 0; x < h->dim; ++x) {
    Matrix a(f, h->dim, h->dim);
    for (std::size_t y = 0; y < h->dim; ++y) {
      Vector img = zero_vector(f, h->dim);
      for (const auto& t : h->comult[x])
        axpy(img, t.coeff, h->product(h->basis_product(t.left, y), h->antipode.column(t.right)));
      a.set_column(y, img);
    }
    m.action.push_back(std::move(a));
  }
  m.coaction = h->comult;
  return m;
}

}  // namespace

TEST_CASE("Nichols dimensions of the desk fixtures") {
  auto sw = cyclic(Field::rationals(), 2, {-1});
  NicholsTruncation n1 = nichols_truncate(sw.v, 4);
  CHECK(n1.dims() == std::vector<std::size_t>{1, 1, 0, 0, 0});
  CHECK(n1.complete);

  auto taft = cyclic(Field::prime(7), 3, {2});
  NicholsTruncation n2 = nichols_truncate(taft.v, 4);
  CHECK(n2.dims() == std::vector<std::size_t>{1, 1, 1, 0, 0});
  CHECK(n2.complete);

  auto plane = cyclic(Field::rationals(), 2, {-1, -1});
  NicholsTruncation n3 = nichols_truncate(plane.v, 4);
  CHECK(n3.dims() == std::vector<std::size_t>{1, 2, 1, 0, 0});

  for (auto* n : {&n1, &n2, &n3}) {
    CHECK(check_yd_bialgebra(n->algebra).ok());
    CHECK(check_truncation(*n).ok());
  }
}

TEST_CASE("incomplete truncation of a polynomial algebra") {
  auto poly = cyclic(Field::rationals(), 2, {1});
  NicholsTruncation n = nichols_truncate(poly.v, 3);
  CHECK(n.dims() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK_FALSE(n.complete);
  CHECK(check_truncation(n).ok());
  // Above the cap the truncated product loses x^4.
  CHECK(check_yd_bialgebra(n.algebra).has_failure("comult_multiplicative"));
}

TEST_CASE("symmetrizer of a one-dimensional braiding") {
  // (1 + q)(1 + q + q^2) in degree three
  auto a = cyclic(Field::prime(7), 3, {2});
  CHECK(quantum_symmetrizer(a.v, 3)(0, 0).is_zero());
  auto b = cyclic(Field::prime(7), 6, {3});
  CHECK(quantum_symmetrizer(b.v, 3)(0, 0).to_string() == "3");
  CHECK(quantum_symmetrizer(b.v, 2)(0, 0).to_string() == "4");
}

TEST_CASE("recursive symmetrizer matches the sum over permutations") {
  auto taft = cyclic(Field::prime(7), 3, {2, 4});
  for (std::size_t d = 1; d <= 4; ++d) CHECK(quantum_symmetrizer(taft.v, d) == quantum_symmetrizer_brute_force(taft.v, d));
  HopfPtr sw = share(fixtures::sweedler());
  YDModule adj = adjoint_module(sw);
  REQUIRE(check_yd(adj).ok());
  for (std::size_t d = 1; d <= 3; ++d) CHECK(quantum_symmetrizer(adj, d) == quantum_symmetrizer_brute_force(adj, d));
}

TEST_CASE("braided shuffle coproduct satisfies the braid relation and coassociativity") {
  auto plane = cyclic(Field::prime(5), 4, {2, 3});
  NicholsTruncation n = free_truncate(plane.v, 3);
  CHECK(check_truncation(n).ok());
  Matrix c1 = braid_generator(plane.v, 3, 1), c2 = braid_generator(plane.v, 3, 2);
  CHECK(c1 * c2 * c1 == c2 * c1 * c2);
  // Degree (1, 2) component agrees with id + c1 + c2 c1 summed over shuffles.
  CHECK(n.tensor_coproduct.at({1, 1}) == Matrix::identity(plane.v.field(), 4) + braid_generator(plane.v, 2, 1));
}

TEST_CASE("no primitives above degree one") {
  for (auto fx : {cyclic(Field::rationals(), 2, {-1, -1}), cyclic(Field::prime(7), 3, {2})}) {
    NicholsTruncation n = nichols_truncate(fx.v, 5);
    CHECK(primitives(n, 1).size() == fx.v.dim);
    for (std::size_t d = 2; d < 5; ++d) CHECK(primitives(n, d).empty());
  }
  auto sw = cyclic(Field::rationals(), 2, {-1});
  NicholsTruncation corrupted = free_truncate(sw.v, 3);
  CHECK(primitives(corrupted, 2).size() == 1);
}

TEST_CASE("dimension bound") {
  auto plane = cyclic(Field::rationals(), 2, {1, 1});
  NicholsOptions opts;
  opts.dimension_bound = 16;
  CHECK_THROWS_AS(nichols_truncate(plane.v, 6, opts), DimensionBlowup);
}

TEST_CASE("lifting maps of generators") {
  auto plane = cyclic(Field::rationals(), 2, {-1, -1});
  auto line = cyclic(Field::rationals(), 2, {-1});
  // line and plane share the same base by structure.
  NicholsTruncation np = nichols_truncate(plane.v, 4), nl = nichols_truncate(line.v, 4);
  Matrix proj = Matrix::from_ints(plane.v.field(), {{1, 0}});
  LiftedMap l = lift_map(proj, np, nl);
  CHECK(l.report.ok());
  CHECK(l.blocks[1].rows() == 1);
  CHECK(l.blocks[2].rows() == 0);
  Matrix incl = Matrix::from_ints(plane.v.field(), {{1}, {0}});
  LiftedMap li = lift_map(incl, nl, np);
  CHECK(li.report.ok());

  auto poly = cyclic(Field::rationals(), 2, {1});
  NicholsTruncation npoly = nichols_truncate(poly.v, 4);
  CHECK_THROWS_AS(lift_map(Matrix::identity(poly.v.field(), 1), nl, npoly), DoesNotDescend);
}

TEST_CASE("lifted pairing in the one-dimensional case") {
  Field f = Field::prime(7);
  AbelianGroup z3({3});
  HopfPtr k = share(group_algebra(z3, f, "z"));
  HopfPtr h = share(group_algebra(z3, f, "g"));
  YDModule w = diagonal_yd_module(k, z3, {1}, {{Scalar(f, 4)}}, "u");
  YDModule v = diagonal_yd_module(h, z3, {1}, {{Scalar(f, 2)}}, "a");
  NicholsTruncation bw = nichols_truncate(w, 4), bv = nichols_truncate(v, 4);
  Form b = lift_pairing(Matrix::from_ints(f, {{1}}), bw, bv);
  // Hand expansion of the left product rule: beta(u u, a a) = (1 + q) q^{-1}
  // with q = chi(g) = 2, using Delta(a^2) = (1 + q) a (x) a.
  Scalar q(f, 2);
  Scalar expected = (Scalar::one(f) + q) * q.inverse();
  CHECK(b(2, 2) == expected);
  CHECK(b(2, 2).to_string() == "5");
  CHECK(b(1, 1).is_one());
  CHECK(b(0, 0).is_one());
  CHECK(b(1, 2).is_zero());

  // With the same braiding on both sides the two product rules disagree.
  YDModule w2 = diagonal_yd_module(k, z3, {1}, {{Scalar(f, 2)}}, "u");
  NicholsTruncation bw2 = nichols_truncate(w2, 4);
  CHECK_THROWS_AS(lift_pairing(Matrix::from_ints(f, {{1}}), bw2, bv), Inconsistent);
}

TEST_CASE("opposite Nichols algebra") {
  for (auto fx : {cyclic(Field::rationals(), 2, {-1, -1}), cyclic(Field::prime(7), 3, {2, 4})}) {
    NicholsTruncation n = nichols_truncate(fx.v, 4);
    OpNichols o = underline_op_nichols(n);
    CHECK(o.report.ok());
    CHECK(o.op_truncation.dims() == n.dims());
  }
}
