#pragma once

#include <vector>

#include "adhmlab/fixed_points.hpp"

namespace adhmlab {

// Integer cocharacter (a1, a2, b_1..b_r) of the big torus.
struct Cocharacter {
  long long a1 = 0;
  long long a2 = 0;
  std::vector<long long> b;

  int rank() const { return static_cast<int>(b.size()); }
  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

using CharVec = std::vector<long long>;  // length 2 + r

long long pair_character(const Cocharacter& lam, const CharVec& chi);

// Two-sided deformation complex at a datum x:
//   d0 : End(V) -> End(V)^2 + Hom(W,V) + Hom(V,W),  a |-> ([a,B1],[a,B2], a i, -j a)
//   d1 : (b1,b2,iota,kappa) |-> [b1,B2] + [B1,b2] + i kappa + iota j
// Middle coordinates are laid out as [beta1 | beta2 | iota | kappa], each
// block row-major.
struct DeformationComplex {
  int n = 0, r = 1;
  MatrixQ d0;  // (2n^2 + 2nr) x n^2
  MatrixQ d1;  // n^2 x (2n^2 + 2nr)
  int middle_dim() const { return 2 * n * n + 2 * n * r; }
};

DeformationComplex build_complex(const AdhmDatum& x);

// Basis of a complement of im(d0) inside ker(d1), dimension exactly 2rn.
// Stability forces d0 injective; both that and the chain identity are
// checked, not assumed.
std::vector<std::vector<Rational>> tangent_basis(const AdhmDatum& x);

// Tangent characters at a fixed point, computed blockwise on the character
// grading of the complex: multiplicity of chi equals
// dim ker(d1 | chi) - dim End(V)_chi. Sorted multiset of 2rn vectors.
std::vector<CharVec> tangent_characters(const PartitionTuple& pt);

// Cached access through a record.
const std::vector<CharVec>& characters_of(FixedPointRecord& rec);

// Pairings of the tangent characters with lam; sorted multiset of size 2rn.
std::vector<long long> tangent_weights(FixedPointRecord& rec, const Cocharacter& lam);

}  // namespace adhmlab
