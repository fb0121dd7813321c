#pragma once

#include <set>
#include <string>

#include "hopf/matrix.hpp"

namespace hopf {

// Bilinear form U (x) V -> k; rows index a basis of U, columns one of V.
struct Form {
  Matrix matrix;
  std::set<std::string> verified;

  std::size_t left_dim() const { return matrix.rows(); }
  std::size_t right_dim() const { return matrix.cols(); }
  const Scalar& operator()(std::size_t u, std::size_t v) const { return matrix(u, v); }
  Scalar eval(const Vector& u, const Vector& v) const { return dot(u, matrix * v); }
  // u -> form(u, -) as a map U -> V*
  Matrix left_curried() const { return matrix.transpose(); }
  // v -> form(-, v) as a map V -> U*
  Matrix right_curried() const { return matrix; }
};

}  // namespace hopf
