#include <doctest.h>

#include "fixtures.hpp"
#include "hopf/errors.hpp"
#include "hopf/twist.hpp"

using namespace hopf;

namespace {

HopfPtr cyclic_group(std::size_t n, const Field& f, const std::string& letter) {
  return share(group_algebra(AbelianGroup({n}), f, letter));
}

Form form_of(Matrix m) {
  Form out;
  out.matrix = std::move(m);
  return out;
}

// tau(z^a, g^b) = (-1)^(ab) on k[Z/2] (x) k[Z/2]
Form sign_bicharacter(const Field& f) { return form_of(Matrix::from_ints(f, {{1, 1}, {1, -1}})); }

// One generator on each side over Z/2 with all characters -1: the two
// biproducts are Sweedler algebras.
GroupTwistDatum sweedler_datum(long long lambda = 1, long long phi = -1) {
  const Field f = Field::rationals();
  GroupTwistDatum d;
  d.field = f;
  d.lambda_orders = {2};
  d.gamma_orders = {2};
  d.z = {1};
  d.eta = {{Scalar(f, -1)}};
  d.g = {1};
  d.chi = {{Scalar(f, -1)}};
  d.phi = {{Scalar(f, phi)}};
  d.s = {0};
  d.lambda = {Scalar(f, lambda)};
  return d;
}

// Z/3 over F_7 with chi(g) = 2, so phi(z)(g) = 4 and eta(z) = 4.
GroupTwistDatum taft_datum() {
  const Field f = Field::prime(7);
  GroupTwistDatum d;
  d.field = f;
  d.lambda_orders = {3};
  d.gamma_orders = {3};
  d.z = {1};
  d.eta = {{Scalar(f, 4)}};
  d.g = {1};
  d.chi = {{Scalar(f, 2)}};
  d.phi = {{Scalar(f, 4)}};
  d.s = {0};
  d.lambda = {Scalar(f, 1)};
  return d;
}

// Two W generators over Z/2 both paired against the single V generator.
GroupTwistDatum two_by_one(long long l1, long long l2) {
  GroupTwistDatum d = sweedler_datum();
  const Field& f = d.field;
  d.z = {1, 1};
  d.eta = {{Scalar(f, -1)}, {Scalar(f, -1)}};
  d.s = {0, 0};
  d.lambda = {Scalar(f, l1), Scalar(f, l2)};
  return d;
}

}  // namespace

TEST_CASE("pairing axioms on group algebras") {
  const Field f = Field::rationals();
  HopfPtr k = cyclic_group(2, f, "z"), h = cyclic_group(2, f, "g");

  Form trivial = form_of(Matrix::from_ints(f, {{1, 1}, {1, 1}}));
  CHECK(check_axioms_A(trivial, *k, *h).ok());
  Report sign = check_axioms_A(sign_bicharacter(f), *k, *h);
  CHECK(sign.ok());
  CHECK(sign.count("equivalence") == 0);

  // 2 is no square root of 1: tau(z z, g) = 1 but tau(z, g)^2 = 4.
  Report bad = check_axioms_A(form_of(Matrix::from_ints(f, {{1, 1}, {1, 2}})), *k, *h);
  CHECK(bad.has_failure("A.3"));
  CHECK(bad.has_failure("A.1"));
  CHECK_FALSE(bad.has_failure("equivalence"));
  CHECK_FALSE(bad.has_failure("A.2"));
}

TEST_CASE("pairing axioms on Sweedler algebras") {
  const Field f = Field::rationals();
  FiniteHopf sw = fixtures::sweedler(f);
  // The counit pairing eps (x) eps.
  Matrix eps(f, 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) eps(i, j) = Scalar::one(f);
  CHECK(check_axioms_A(form_of(eps), sw, sw).ok());
  // Not zero on the grouplikes: fails the counit conditions.
  CHECK_FALSE(check_axioms_A(form_of(Matrix(f, 4, 4)), sw, sw).ok());
}

TEST_CASE("braided pairing axioms") {
  const Field f = Field::rationals();
  HopfPtr k = cyclic_group(2, f, "z"), h = cyclic_group(2, f, "g");
  YDBialgebra t = fixtures::dual_numbers_over_z2(k, -1);
  YDBialgebra r = fixtures::dual_numbers_over_z2(h, -1);
  for (long long l : {0, 1, 3}) {
    Form b = form_of(Matrix::from_ints(f, {{1, 0}, {0, l}}));
    CHECK(check_axioms_B(b, t, r).ok());
  }
  // beta(1, x) = 1 breaks both the counit and product rules.
  Report bad = check_axioms_B(form_of(Matrix::from_ints(f, {{1, 1}, {0, 1}})), t, r);
  CHECK(bad.has_failure("B.1"));
  CHECK(bad.has_failure("B.2"));
  CHECK_FALSE(bad.has_failure("equivalence"));
}

TEST_CASE("compatibility of tau and beta") {
  const Field f = Field::rationals();
  HopfPtr k = cyclic_group(2, f, "z"), h = cyclic_group(2, f, "g");
  YDModule w = diagonal_yd_module(k, AbelianGroup({2}), {1}, {{Scalar(f, -1)}}, "u");
  YDModule v = diagonal_yd_module(h, AbelianGroup({2}), {1}, {{Scalar(f, -1)}}, "a");
  Form one = form_of(Matrix::from_ints(f, {{1}}));
  Form zero = form_of(Matrix::from_ints(f, {{0}}));

  CHECK(check_axioms_C(sign_bicharacter(f), one, w, v).ok());
  CHECK(check_axioms_C(sign_bicharacter(f), zero, w, v).ok());
  CHECK(check_axioms_C(form_of(Matrix::from_ints(f, {{1, 1}, {1, 1}})), zero, w, v).ok());
  // Trivial tau with a nonzero beta: phi(z) is not chi^-1.
  Report bad = check_axioms_C(form_of(Matrix::from_ints(f, {{1, 1}, {1, 1}})), one, w, v);
  CHECK(bad.has_failure("C.1"));
  CHECK(bad.has_failure("C.2"));
  CHECK_FALSE(bad.has_failure("equivalence"));
}

TEST_CASE("convolution inverse of a pairing") {
  const Field f = Field::prime(7);
  HopfPtr k = cyclic_group(3, f, "z"), h = cyclic_group(3, f, "g");
  // tau(z^a, g^b) = 4^(ab)
  Matrix t(f, 3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) t(a, b) = Scalar(f, 4).pow(static_cast<long long>(a * b));
  Form tau = form_of(t);
  REQUIRE(check_axioms_A(tau, *k, *h).ok());
  Form left = convolution_inverse_form(tau, *k, *h, InverseVia::left_antipode);
  Form right = convolution_inverse_form(tau, *k, *h, InverseVia::right_antipode);
  CHECK(left.matrix == right.matrix);
  // 4 * 2 = 1 in F_7
  CHECK(left(1, 1).to_string() == "2");
  CHECK(left(2, 1).to_string() == "4");
  CHECK(left(0, 2).is_one());

  FiniteBialgebra nb = fixtures::dual_numbers_grouplike(Field::rationals());
  FiniteHopf no_antipode;
  static_cast<FiniteBialgebra&>(no_antipode) = nb;
  Form eps = form_of(Matrix::from_ints(Field::rationals(), {{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(convolution_inverse_form(eps, no_antipode, no_antipode), NoAntipode);
}

TEST_CASE("cocycle from a pairing") {
  const Field f = Field::rationals();
  HopfPtr k = cyclic_group(2, f, "z"), h = cyclic_group(2, f, "g");
  Cocycle c = sigma_from_tau(sign_bicharacter(f), *k, *h);
  CHECK(c.report.ok());
  CHECK(c.carrier.dim == 4);
  // sigma(1 (x) g, z (x) 1) = tau(z, g) = -1 and sigma(z (x) 1, 1 (x) g) = 1.
  CHECK(c.sigma(1, 2) == Scalar(f, -1));
  CHECK(c.sigma(2, 1).is_one());

  Matrix broken = c.sigma.matrix;
  broken(1, 2) = Scalar(f, 2);
  Report bad = check_cocycle(broken, c.sigma_inv.matrix, c.carrier);
  CHECK(bad.has_failure("cocycle"));
  CHECK(bad.has_failure("sigma_inverse"));
}

TEST_CASE("twists of group algebras") {
  const Field f = Field::rationals();
  HopfPtr k = cyclic_group(2, f, "z"), h = cyclic_group(2, f, "g");
  FiniteHopf untwisted = tensor_product_hopf(*k, *h);
  // Commutative and cocommutative: every twist is trivial.
  for (const Form& tau : {form_of(Matrix::from_ints(f, {{1, 1}, {1, 1}})), sign_bicharacter(f)}) {
    Twist t = twist_bialgebra(*k, *h, tau);
    CHECK(t.report.ok());
    CHECK(static_cast<const FiniteBialgebra&>(t.H) == static_cast<const FiniteBialgebra&>(untwisted));
  }
  CHECK_THROWS_AS(twist_bialgebra(*k, *h, form_of(Matrix::from_ints(f, {{1, 1}, {1, 2}}))), VerificationFailure);
}

TEST_CASE("trivial pairing gives the tensor product") {
  const Field f = Field::rationals();
  FiniteHopf sw = fixtures::sweedler(f);
  Matrix eps(f, 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) eps(i, j) = Scalar::one(f);
  Twist t = twist_bialgebra(sw, sw, form_of(eps));
  CHECK(t.report.ok());
  CHECK(static_cast<const FiniteBialgebra&>(t.H) == static_cast<const FiniteBialgebra&>(tensor_product_hopf(sw, sw)));
}

TEST_CASE("group datum validation") {
  GroupTwistDatum d = sweedler_datum();
  CHECK_NOTHROW(d.validate());
  GroupTwistDatum e = d;
  e.chi = {{Scalar(d.field, 1)}};
  CHECK_THROWS_AS(e.validate(), SchemaError);
  e = d;
  e.phi = {{Scalar(d.field, 2)}};
  CHECK_THROWS_AS(e.validate(), SchemaError);
  e = d;
  e.s = {1};
  CHECK_THROWS_AS(e.validate(), SchemaError);
  e = d;
  e.z = {2};
  CHECK_THROWS_AS(e.validate(), SchemaError);
  e = d;
  e.lambda = {};
  CHECK_THROWS_AS(e.validate(), SchemaError);
}

TEST_CASE("datum condition") {
  CHECK(datum_condition_violations(sweedler_datum()).empty());
  CHECK(datum_condition_violations(sweedler_datum(1, 1)) == std::vector<std::size_t>{0});
  // Only the support of lambda is constrained.
  CHECK(datum_condition_violations(sweedler_datum(0, 1)).empty());
  CHECK(datum_condition_violations(taft_datum()).empty());

  try {
    build_group_datum(sweedler_datum(1, 1), 4);
    FAIL("expected a datum condition violation");
  } catch (const DatumConditionViolation& e) {
    CHECK(e.index() == 0);
  }
  CHECK_NOTHROW(build_group_datum(sweedler_datum(0, 1), 4));
}

TEST_CASE("Sweedler datum") {
  const Field f = Field::rationals();
  GroupTwist t = build_group_datum(sweedler_datum(), 4);
  CHECK(t.report.ok());
  CHECK(t.U.A.dim == 4);
  CHECK(t.A.A.dim == 4);
  CHECK(t.smash.report.ok());
  CHECK(rank(t.smash.form.matrix) == 4);

  GeneratorImages im = phi_generators(t);
  CHECK(im.report.ok());
  REQUIRE(im.gamma.size() == 1);
  // A basis: 1#1, 1#g, a#1, a#g
  CHECK(im.gamma[0] == Vector{Scalar(f, 1), Scalar(f, -1), Scalar(f, 0), Scalar(f, 0)});
  CHECK(im.delta[0] == Vector{Scalar(f, 0), Scalar(f, 0), Scalar(f, 1), Scalar(f, -1)});

  Twist tw = twist_bialgebra(t.U.A, t.A.A, t.smash.form);
  CHECK(tw.report.ok());
  CHECK(tw.H.dim == 16);
  CHECK(tw.cocycle.report.ok());
  CHECK(tw.H.antipode_inverse.has_value());
  // The twist is not the tensor product: (1 (x) a#1)(u#1 (x) 1) picks up beta.
  CHECK_FALSE(static_cast<const FiniteBialgebra&>(tw.H) ==
              static_cast<const FiniteBialgebra&>(tensor_product_hopf(t.U.A, t.A.A)));
}

TEST_CASE("cocycle with the counit on the wrong factor") {
  // sigma(u (x) a, u' (x) a') = eps(a) tau(u', a) eps(a')
  GroupTwist t = build_group_datum(sweedler_datum(), 4);
  const FiniteHopf& u = t.U.A;
  const FiniteHopf& a = t.A.A;
  Cocycle c = sigma_from_tau(t.smash.form, u, a);
  REQUIRE(c.report.ok());
  const Field& f = u.field;
  const std::size_t na = a.dim, d = c.carrier.dim;
  Form inv = convolution_inverse_form(t.smash.form, u, a);
  Matrix s(f, d, d), si(f, d, d);
  for (std::size_t x = 0; x < u.dim; ++x)
    for (std::size_t p = 0; p < na; ++p)
      for (std::size_t y = 0; y < u.dim; ++y)
        for (std::size_t q = 0; q < na; ++q) {
          Scalar e = a.counit[p] * a.counit[q];
          s(x * na + p, y * na + q) = e * t.smash.form(y, p);
          si(x * na + p, y * na + q) = e * inv(y, p);
        }
  CHECK(check_cocycle(s, si, c.carrier).has_failure("cocycle"));
}

TEST_CASE("Taft datum") {
  GroupTwist t = build_group_datum(taft_datum(), 4);
  CHECK(t.report.ok());
  CHECK(t.U.A.dim == 9);
  CHECK(t.A.A.dim == 9);
  CHECK(t.nichols_beta(2, 2).to_string() == "5");
  GeneratorImages im = phi_generators(t);
  CHECK(im.report.ok());
  CHECK(im.gamma[0][1].to_string() == "4");
  CHECK(im.gamma[0][2].to_string() == "2");
  CHECK(im.delta[0][3].is_one());
  CHECK(im.delta[0][4].to_string() == "4");
}

TEST_CASE("datum without generators") {
  GroupTwistDatum d = sweedler_datum();
  d.z.clear();
  d.eta.clear();
  d.g.clear();
  d.chi.clear();
  d.s.clear();
  d.lambda.clear();
  d.phi = {{Scalar(d.field, 1)}};
  GroupTwist t = build_group_datum(d, 2);
  CHECK(t.report.ok());
  CHECK(t.U.A.dim == 2);
  Twist tw = twist_bialgebra(t.U.A, t.A.A, t.smash.form);
  CHECK(tw.H.dim == 4);
}

TEST_CASE("reduction to the support of lambda") {
  const Field f = Field::rationals();
  GroupTwist t = build_group_datum(two_by_one(1, 0), 4);
  CHECK(t.report.ok());
  CHECK(t.U.A.dim == 8);
  Reduction r = reduce_datum(t);
  CHECK(r.report.ok());
  CHECK(r.support == std::vector<std::size_t>{0});
  CHECK(r.v_perp == Matrix::from_ints(f, {{0}, {1}}));
  CHECK(r.w_perp.cols() == 0);
  CHECK(r.reduced.U.A.dim == 4);
  CHECK(r.source.H.dim == 32);
  CHECK(r.target.H.dim == 16);
  CHECK(rank(r.F) == 16);

  CHECK_THROWS_AS(reduce_datum(build_group_datum(two_by_one(1, 1), 4)), NotInjectiveOnSupport);
}

TEST_CASE("reduction on the V side") {
  const Field f = Field::rationals();
  GroupTwistDatum d = sweedler_datum();
  d.g = {1, 1};
  d.chi = {{Scalar(f, -1)}, {Scalar(f, -1)}};
  d.s = {1};
  GroupTwist t = build_group_datum(d, 4);
  Reduction r = reduce_datum(t);
  CHECK(r.report.ok());
  CHECK(r.v_perp.cols() == 0);
  CHECK(r.w_perp == Matrix::from_ints(f, {{1}, {0}}));
  CHECK(r.pi_V == Matrix::from_ints(f, {{0, 1}}));
  CHECK(r.target.H.dim == 16);
}
