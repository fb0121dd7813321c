#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hopf/form.hpp"
#include "hopf/yd.hpp"

namespace hopf {

struct NicholsOptions {
  // Largest tensor power dimension dim(V)^d that will be materialized.
  std::size_t dimension_bound = 512;
};

// Homogeneous component of degree d: V^(x)d modulo the kernel of the
// quantum symmetrizer.
struct NicholsDegree {
  std::size_t dim = 0;
  std::size_t tensor_dim = 0;       // dim(V)^d
  Matrix quotient;                  // dim x tensor_dim, the class map
  std::vector<std::size_t> words;   // lex-first preimages of the basis classes
  Matrix kernel;                    // tensor_dim x (tensor_dim - dim)
  bool computed = false;            // false above the first vanishing degree
};

struct NicholsTruncation {
  YDModule generators;
  std::size_t cap = 0;
  std::vector<NicholsDegree> degrees;  // 0..cap
  bool complete = false;               // some positive degree <= cap vanishes
  YDBialgebra algebra;                 // direct sum of degrees 0..cap, products above cap dropped
  std::vector<std::size_t> offsets;    // first basis index of each degree
  std::vector<std::size_t> degree_of;  // degree of each basis element

  // Tensor powers of the generators and the components (a, b) of the braided
  // shuffle coproduct on V^(x)(a+b), kept for lifting maps and pairings.
  std::vector<YDModule> powers;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> tensor_coproduct;

  std::vector<std::size_t> dims() const;
  std::size_t total_dim() const { return algebra.dim(); }
  // Coordinates of the class of a tensor word in the total basis.
  Vector class_of(std::size_t degree, std::size_t word) const;
};

// c_j = braiding in tensor slots j, j+1 (1-based) on V^(x)d.
Matrix braid_generator(const YDModule& v, std::size_t d, std::size_t j);
Matrix quantum_symmetrizer(const YDModule& v, std::size_t d);
// Brute force sum over all permutations via reduced words; for testing.
Matrix quantum_symmetrizer_brute_force(const YDModule& v, std::size_t d);

NicholsTruncation nichols_truncate(const YDModule& v, std::size_t cap, const NicholsOptions& opts = {});
// Truncated tensor algebra with the same coproduct and no relations.
NicholsTruncation free_truncate(const YDModule& v, std::size_t cap, const NicholsOptions& opts = {});

// Braided bialgebra axioms of the truncation; compatibility of product and
// coproduct is only required for products of total degree <= cap.
Report check_truncation(const NicholsTruncation& n);

// Primitive elements of degree d as coordinate vectors in that degree.
std::vector<Vector> primitives(const NicholsTruncation& n, std::size_t d);

struct LiftedMap {
  std::vector<Matrix> blocks;  // degree-wise
  Matrix total;
  Report report;
};

// Extends f: V -> V' (linear over base_map) to the truncations; throws
// DoesNotDescend if f^(x)d does not preserve the relations.
LiftedMap lift_map(const Matrix& f, const NicholsTruncation& src, const NicholsTruncation& tgt,
                   const std::optional<Matrix>& base_map = std::nullopt);

// Extends a pairing W (x) V -> k to the truncations of B(W) and B(V), degree
// by degree, using the product rule on the left argument. The rule on the
// right argument is evaluated independently and must agree; throws
// Inconsistent otherwise or if the form does not descend.
Form lift_pairing(const Matrix& beta, const NicholsTruncation& w, const NicholsTruncation& v);

struct OpNichols {
  NicholsTruncation op_truncation;  // of the generators over the opposite Hopf algebra
  YDBialgebra underline_op;         // opposite structure on the original truncation
  Matrix iso;                       // op_truncation -> underline_op, identity on generators
  Report report;
};
OpNichols underline_op_nichols(const NicholsTruncation& n);

}  // namespace hopf
