#include <doctest.h>

#include "fixtures.hpp"
#include "hopf/errors.hpp"
#include "hopf/serialize.hpp"

using namespace hopf;

TEST_CASE("group algebras are Hopf algebras") {
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    FiniteHopf h = group_algebra(AbelianGroup({2, 3}), f);
    CHECK(h.dim == 6);
    CHECK(check_bialgebra(h).ok());
    CHECK(compute_antipode(h) == h.antipode);
    CHECK(h.labels[4] == "g1*g2");
  }
  FiniteHopf trivial = group_algebra(AbelianGroup({}), Field::rationals());
  CHECK(trivial.dim == 1);
  CHECK(check_bialgebra(trivial).ok());
}

TEST_CASE("Sweedler algebra antipode by linear solve") {
  FiniteHopf s = fixtures::sweedler();
  CHECK(check_bialgebra(s).ok());
  Matrix anti = compute_antipode(s);
  CHECK(anti == s.antipode);
  Matrix s2 = anti * anti;
  CHECK(s2 != Matrix::identity(s.field, 4));
  CHECK(s2 * s2 == Matrix::identity(s.field, 4));
  CHECK(convolution(Matrix::identity(s.field, 4), anti, s, s) == unit_counit(s, s));
  FiniteHopf h = make_hopf(s);
  REQUIRE(h.antipode_inverse);
  CHECK(*h.antipode_inverse == *s.antipode_inverse);
}

TEST_CASE("grouplike nilpotent has no antipode") {
  CHECK_THROWS_AS(compute_antipode(fixtures::dual_numbers_grouplike()), NoAntipode);
}

TEST_CASE("corrupted coproduct is reported") {
  FiniteHopf h = group_algebra(AbelianGroup({2}), Field::rationals());
  FiniteBialgebra bad = h;
  bad.comult[1] = {{1, 0, Scalar(bad.field, 1)}};
  Report r = check_bialgebra(bad);
  CHECK_FALSE(r.ok());
  CHECK(r.has_failure("left_counit"));
  CHECK_FALSE(r.has_failure("right_counit"));
  // g -> g (x) 1 is still coassociative.
  CHECK_FALSE(r.has_failure("coassociativity"));
}

TEST_CASE("bialgebra map checks") {
  FiniteHopf h = group_algebra(AbelianGroup({2}), Field::rationals());
  CHECK(check_bialgebra_map(Matrix::identity(h.field, 2), h, h).ok());
  Matrix bad = Matrix::from_ints(h.field, {{1, 1}, {0, 1}});  // g -> 1 + g
  Report r = check_bialgebra_map(bad, h, h);
  CHECK(r.has_failure("map_multiplicative"));
  CHECK(r.has_failure("map_comultiplicative"));
  CHECK(r.has_failure("map_counit"));
}

TEST_CASE("opposite, coopposite, dual and tensor constructions") {
  FiniteHopf s = fixtures::sweedler();
  for (const FiniteHopf& h : {opposite_hopf(s), coopposite_hopf(s), dual_hopf(s), tensor_product_hopf(s, s)}) {
    CHECK(check_bialgebra(h).ok());
    CHECK(check_antipode(h, h.antipode).ok());
  }
  FiniteHopf dd = dual_hopf(dual_hopf(s));
  CHECK(static_cast<const FiniteBialgebra&>(dd) == static_cast<const FiniteBialgebra&>(s));
  // The Sweedler algebra is self-dual but not via the dual basis.
  CHECK_FALSE(static_cast<const FiniteBialgebra&>(dual_hopf(s)) == static_cast<const FiniteBialgebra&>(s));
}

TEST_CASE("JSON round trip is bit-exact") {
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    FiniteHopf s = make_hopf(fixtures::sweedler(f));
    std::string text = dump(to_json(s));
    FiniteHopf back = hopf_from_json(Json::parse(text));
    CHECK(back == s);
    CHECK(dump(to_json(back)) == text);
  }
  Json broken = to_json(fixtures::sweedler());
  broken["dim"] = 3;
  CHECK_THROWS_AS(hopf_from_json(broken), SchemaError);
}
