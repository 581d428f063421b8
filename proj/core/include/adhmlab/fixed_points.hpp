#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adhmlab/adhm.hpp"
#include "adhmlab/partitions.hpp"

namespace adhmlab {

// Box (p, q) of component s, with the basis index it occupies in the
// monomial representative. Rows grow with p under B1, columns with q under
// B2.
struct Box {
  int s;  // component, 0-based
  int p;  // row, 1-based
  int q;  // column, 1-based
  int index;
};

std::vector<Box> boxes_of(const PartitionTuple& pt);

// Monomial representative: one basis vector per box, B1 shifts p, B2 shifts
// q, the s-th column of i hits the corner box (1,1) of component s, j = 0.
AdhmDatum adhm_representative(const PartitionTuple& pt);

// Character exponents (a1-slot, a2-slot, b_1..b_r slots) of a box: the box
// (p,q) of component s pairs with a cocharacter as a1(p-1) + a2(q-1) - b_s.
std::vector<long long> box_character(const Box& box, int r);

inline Rational pow_scalar(const Rational& s, long long e) { return rational_pow(s, e); }
inline Laurent pow_scalar(const Laurent& s, long long e) { return s.pow(e); }

// Diagonal gauge undoing the torus action on the representative:
// gauge_act(g, torus_act(tau, rep)) == rep, exactly. The diagonal entry on a
// box is the inverse of the box character evaluated at tau.
template <class S>
Gauge<S> compensating_gauge(const PartitionTuple& pt, const FramedTorus<S>& tau) {
  int r = pt.rank();
  if (static_cast<int>(tau.e.size()) != r)
    throw std::invalid_argument("torus element rank mismatch");
  auto boxes = boxes_of(pt);
  std::vector<S> diag(boxes.size(), S(1));
  for (const Box& box : boxes) {
    S value = pow_scalar(tau.t1, 1 - box.p) * pow_scalar(tau.t2, 1 - box.q) * tau.e[box.s];
    diag[box.index] = value;
  }
  return Gauge<S>::diagonal(std::move(diag));
}

// Exact fixedness of the class of the representative: checks the defining
// equation of the compensating gauge against the unit cocharacters, which
// pins every exponent coordinate.
bool representative_is_torus_fixed(const PartitionTuple& pt);

// Label with cached representative; weight data is filled by the tangent
// computations.
struct FixedPointRecord {
  PartitionTuple label;
  AdhmDatum representative;
  // Tangent characters as (2+r)-vectors, filled lazily.
  std::optional<std::vector<std::vector<long long>>> characters;
  // Pairings of the characters with a chosen cocharacter.
  std::optional<std::vector<long long>> weights;
};

std::vector<FixedPointRecord> build_fixed_point_records(int r, int n);

}  // namespace adhmlab
