#include <doctest.h>

#include <random>

#include "hopf/errors.hpp"
#include "hopf/matrix.hpp"

using namespace hopf;

TEST_CASE("rational arithmetic is exact and canonical") {
  Field q = Field::rationals();
  CHECK((Scalar::fraction(q, 1, 2) + Scalar::fraction(q, 1, 3)).to_string() == "5/6");
  CHECK(Scalar::parse(q, "-4/6").to_string() == "-2/3");
  CHECK(Scalar::parse(q, "3/-6").to_string() == "-1/2");
  CHECK(Scalar::parse(q, "8/4").to_string() == "2");
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), DivisionByZero);
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), DivisionByZero);
  CHECK(Scalar(q, 2).pow(-3).to_string() == "1/8");
}

TEST_CASE("prime field residues") {
  Field f7 = Field::prime(7);
  CHECK(Scalar(f7, 3).inverse().to_string() == "5");
  CHECK(Scalar::parse(f7, "-1").to_string() == "6");
  CHECK(Scalar::parse(f7, "1/3").to_string() == "5");
  CHECK((Scalar(f7, 4) * Scalar(f7, 2)).is_one());
  CHECK_THROWS_AS(Scalar(f7, 1) + Scalar(Field::rationals(), 1), FieldMismatch);
  CHECK_THROWS(Field::prime(9));
  CHECK_THROWS(Field::prime(1));
  CHECK(Field::prime(2147483647).characteristic() == 2147483647u);
  CHECK_THROWS(Field::prime(2147483659ull));
  CHECK(Field::parse("F_7") == f7);
  CHECK(Field::parse("Q") == Field::rationals());
}

TEST_CASE("kernel basis in reduced column echelon form") {
  Field f7 = Field::prime(7);
  Matrix k = kernel_basis(Matrix::from_ints(f7, {{3, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0).to_string() == "1");
  CHECK(k(1, 0).to_string() == "4");

  Field q = Field::rationals();
  CHECK(kernel_basis(Matrix(q, 2, 2)) == Matrix::identity(q, 2));
  CHECK(kernel_basis(Matrix::identity(q, 3)).cols() == 0);

  Matrix m = Matrix::from_ints(q, {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}});
  Matrix kb = kernel_basis(m);
  CHECK(kb.cols() == 2);
  CHECK((m * kb).is_zero());
  CHECK(rank(kb) == 2);
  auto leads = echelon_leads(kb);
  for (std::size_t c = 0; c < kb.cols(); ++c) {
    CHECK(kb(leads[c], c).is_one());
    for (std::size_t o = 0; o < kb.cols(); ++o)
      if (o != c) CHECK(kb(leads[c], o).is_zero());
  }
}

TEST_CASE("primitive roots of unity") {
  Field f7 = Field::prime(7);
  CHECK(primitive_root_of_unity(3, f7).to_string() == "2");
  CHECK(primitive_root_of_unity(6, f7).to_string() == "3");
  CHECK(primitive_root_of_unity(2, f7).to_string() == "6");
  CHECK_THROWS_AS(primitive_root_of_unity(4, f7), NoSuchRoot);
  CHECK(primitive_root_of_unity(2, Field::rationals()).to_string() == "-1");
  CHECK_THROWS_AS(primitive_root_of_unity(3, Field::rationals()), NoSuchRoot);
  CHECK(primitive_root_of_unity(1, Field::prime(2)).is_one());
}

TEST_CASE("tensor of maps follows row-major flattening") {
  Field q = Field::rationals();
  Matrix f = Matrix::from_ints(q, {{1, 2}, {3, 4}});
  Matrix g = Matrix::from_ints(q, {{0, 1, 5}, {2, 0, 1}});
  Matrix fg = tensor_of_maps(f, g);
  CHECK(fg.rows() == 4);
  CHECK(fg.cols() == 6);
  TensorIndex src({2, 3}), dst({2, 2});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          CHECK(fg(dst.flatten({c, d}), src.flatten({a, b})) == f(c, a) * g(d, b));
  CHECK(src.unflatten(4) == std::vector<std::size_t>{1, 1});
  CHECK_THROWS(src.flatten({2, 0}));
}

TEST_CASE("sparse solver agrees with dense elimination") {
  std::mt19937 rng(7);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6;
      Matrix m(f, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if (rng() % 3 == 0) m(i, j) = Scalar(f, static_cast<long long>(rng() % 7) - 3);
      Vector b = zero_vector(f, rows);
      for (auto& x : b) x = Scalar(f, static_cast<long long>(rng() % 5) - 2);
      std::vector<SparseRow> sr(rows);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if (!m(i, j).is_zero()) sr[i].emplace_back(j, m(i, j));
      auto dense = solve(m, b);
      auto sparse = solve_sparse(f, sr, b, cols);
      CHECK(dense.has_value() == sparse.has_value());
      if (sparse) CHECK(m * *sparse == b);
    }
  }
}

TEST_CASE("inverse and rank") {
  Field q = Field::rationals();
  Matrix m = Matrix::from_ints(q, {{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(q, 2));
  CHECK_FALSE(inverse(Matrix::from_ints(q, {{1, 2}, {2, 4}})));
  CHECK(rank(Matrix::from_ints(q, {{1, 2}, {2, 4}})) == 1);
}
