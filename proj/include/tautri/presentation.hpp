// presentation.hpp
//
// Bound quiver presentations: a quiver, admissible relations (linear
// combinations of paths of length >= 2 with common endpoints), a nilpotency
// cap and a field spec.  Also the constructors used throughout: tensor
// products, triangular matrix algebras T_n, radical-square truncation,
// Nakayama and local algebras.

#pragma once

#include <string>
#include <vector>

#include "tautri/field.hpp"
#include "tautri/quiver.hpp"

namespace tautri {

struct RelationTerm {
  long long num = 1;
  long long den = 1;
  std::vector<int> path;  // arrow indices, composed left to right
};
using Relation = std::vector<RelationTerm>;

struct BoundPresentation;

struct ConstructionTag {
  enum class Kind { None, TriangularMatrix, Tensor, RadSquareTruncation };
  Kind kind = Kind::None;
  int n = 0;                                // TriangularMatrix only
  std::vector<BoundPresentation> factors;   // Tensor: the factors; TriangularMatrix/RadSquare: the base
};

struct BoundPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  int nilpotency_cap = 2;
  FieldSpec field;
  ConstructionTag tag;

  void validate() const;

  // source/target vertex of a composable path (throws on empty/incomposable)
  int path_source(const std::vector<int>& path) const;
  int path_target(const std::vector<int>& path) const;
};

// path algebra of an arbitrary quiver, no relations
BoundPresentation path_algebra(Quiver q, int cap, FieldSpec field = FieldSpec{});

// K A_n with linear orientation
BoundPresentation linear_path_algebra(int n, FieldSpec field = FieldSpec{});

// the ground field as a one-vertex quiver algebra
BoundPresentation ground_field(FieldSpec field = FieldSpec{});

BoundPresentation tensor_product(const BoundPresentation& a, const BoundPresentation& b);
BoundPresentation triangular_matrix(const BoundPresentation& a, int n);
BoundPresentation radical_square_truncation(const BoundPresentation& a);
BoundPresentation build_nakayama(int r, bool cyclic, int length_cap, FieldSpec field = FieldSpec{});
BoundPresentation build_truncated_polynomial(int m, FieldSpec field = FieldSpec{});

}  // namespace tautri
