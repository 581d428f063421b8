#pragma once

#include <optional>
#include <span>
#include <vector>

#include "adhmlab/tangent.hpp"

namespace adhmlab {

// Betti coefficient vector: entry k is b_{2k}. Coefficients sum to the
// number of fixed points.
using PoincarePolynomial = std::vector<long long>;

// A cocharacter drives the whole flow pipeline only if it both separates
// every tangent character (no zero weight anywhere) and contracts the
// invariant-theoretic quotient: a1, a2 >= 1 and max(b) - min(b) < a1 + a2.
// The second condition is what makes every forward limit exist.
bool is_contracting(const Cocharacter& lam);
bool is_regular(const Cocharacter& lam, std::vector<FixedPointRecord>& records);

// Deterministic search: max-norm shells, inside a shell lexicographic with
// per-coordinate value order 0, 1, -1, 2, -2, ...; first `count` regular
// cocharacters. Throws when the shell bound cap is exhausted.
std::vector<Cocharacter> select_regular_cocharacters(int r, int n, int count,
                                                     std::vector<FixedPointRecord>& records);
Cocharacter select_regular_cocharacter(int r, int n);

struct CellDims {
  int plus_dim = 0;
  int minus_dim = 0;
};

// Signs of the tangent weights; throws if lam has a zero weight there.
CellDims cell_dimensions(FixedPointRecord& rec, const Cocharacter& lam);

// Scalar ordering value: the lam-weight of the total box character of the
// fixed point. Used for the filtration order and the flow monotonicity
// certificate.
long long order_value(const PartitionTuple& pt, const Cocharacter& lam);

struct CellRow {
  PartitionTuple label;
  std::vector<long long> weights;
  int plus_dim = 0;
  int minus_dim = 0;
  long long order_value = 0;
  int filtration_rank = 0;
};

struct CellTable {
  Cocharacter lambda;
  std::vector<CellRow> rows;  // canonical fixed-point order
  PoincarePolynomial poincare_ambient;  // codimensions of plus cells
  PoincarePolynomial poincare_fiber;    // dimensions of minus cells
  bool equal = false;
  int max_minus_dim = 0;
  // Observation only: whether the weight multiset is symmetric about
  // (a1 + a2) / 2 at every fixed point. Logged, never asserted.
  bool weight_duality_observed = false;
};

CellTable compute_cell_table(std::vector<FixedPointRecord>& records, const Cocharacter& lam,
                             int threads = 0);

struct PoincareReport {
  PoincarePolynomial poincare_ambient;
  PoincarePolynomial poincare_fiber;
  bool equal = false;
};

PoincareReport poincare_polynomials(int r, int n, const Cocharacter& lam);

// One flow experiment outcome, as consumed by the filtration certificate.
struct FlowSample {
  PartitionTuple plus_label;
  std::optional<PartitionTuple> minus_label;
};

struct MonotonicityCertificate {
  int samples = 0;
  int both_exist = 0;
  std::vector<std::pair<PartitionTuple, PartitionTuple>> violations;
};

struct FiltrationResult {
  CellTable table;
  MonotonicityCertificate certificate;
};

// Total order by ascending order value (ties by canonical enumeration
// order); checks v(plus limit) <= v(minus limit) on every supplied sample
// and throws if any sample violates it.
FiltrationResult filtration_order(std::vector<FixedPointRecord>& records,
                                  const Cocharacter& lam, std::span<const FlowSample> samples);

}  // namespace adhmlab
