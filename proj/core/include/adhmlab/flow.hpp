#pragma once

#include <optional>

#include "adhmlab/cells.hpp"

namespace adhmlab {

// Adapted basis for the one-parameter flow through x: basis vectors are
// generated greedily at the lowest reachable weight (seed column s of i at
// weight -b_s, B1 adds a1, B2 adds a2; ties by word length, then word, then
// seed index). grading[k] is the weight at which basis column k first
// appeared.
struct AdaptedBasis {
  MatrixQ basis;  // columns in generation order
  std::vector<long long> grading;
};

AdaptedBasis adapted_grading_basis(const AdhmDatum& x, const Cocharacter& lam);
std::vector<long long> adapted_grading(const AdhmDatum& x, const Cocharacter& lam);

struct FlowResult {
  AdhmDatum limit_datum;      // expressed in the original frame
  PartitionTuple fixed_point;
  MatrixL gauge_used;         // diagonal t^(-grading) in the adapted frame
  std::vector<long long> grading;
};

// Forward limit of lam(t) . x as t -> 0. For a regular contracting lam the
// transported Laurent family never has a pole; one would be an internal
// defect and throws. The limit is identified with its partition tuple and
// certified gauge-equivalent to the enumerated representative.
FlowResult limit_plus(const AdhmDatum& x, const Cocharacter& lam);

struct MinusOutcome {
  std::optional<FlowResult> result;            // engaged iff the limit exists
  std::vector<std::pair<int, int>> pole_positions;
};

// Backward limit (t -> infinity), computed as the forward limit for -lam.
// Exists exactly for central-fiber data; a disagreement between the pole
// test and the invariant test throws a diagnostic error.
MinusOutcome limit_minus(const AdhmDatum& x, const Cocharacter& lam);

struct FlowSampleRecord {
  PartitionTuple plus_label;
  std::optional<PartitionTuple> minus_label;
  long long v_plus = 0;
  std::optional<long long> v_minus;
  bool monotone = true;  // v_plus <= v_minus whenever both exist
};

FlowSampleRecord flow_sample_check(const AdhmDatum& x, const Cocharacter& lam);

inline FlowSample to_flow_sample(const FlowSampleRecord& rec) {
  return FlowSample{rec.plus_label, rec.minus_label};
}

}  // namespace adhmlab
