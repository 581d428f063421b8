#pragma once

#include <compare>
#include <string>
#include <vector>

namespace adhmlab {

// Weakly decreasing positive parts; the empty partition is allowed.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  // parts[0] of the empty partition is 0 by convention
  int first_part() const { return parts.empty() ? 0 : parts.front(); }
  Partition conjugate() const;
  // Number of columns in row p (1-based); 0 when the row is absent.
  int row_length(int p) const {
    return (p >= 1 && p <= length()) ? parts[p - 1] : 0;
  }
  bool contains_box(int p, int q) const { return q >= 1 && q <= row_length(p); }

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Canonical order used throughout: larger size first, then lexicographically
// larger parts first ((3) before (2,1) before (1,1,1)).
bool partition_before(const Partition& a, const Partition& b);

// All partitions of m, in the canonical order.
std::vector<Partition> partitions_of(int m);

struct PartitionTuple {
  std::vector<Partition> components;

  int rank() const { return static_cast<int>(components.size()); }
  int total_size() const;
  std::string str() const;

  friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
};

// All r-tuples with total size n, ordered lexicographically by component in
// the canonical partition order. The count realizes the coefficient of q^n
// in the r-th power of the partition generating series.
std::vector<PartitionTuple> enumerate_fixed_points(int r, int n);

}  // namespace adhmlab
