#include "adhmlab/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace adhmlab {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) throw std::invalid_argument("partition part must be positive");
    if (k > 0 && parts[k] > parts[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::conjugate() const {
  Partition out;
  if (parts.empty()) return out;
  out.parts.resize(parts[0]);
  for (int col = 1; col <= parts[0]; ++col) {
    int count = 0;
    for (int p : parts)
      if (p >= col) ++count;
    out.parts[col - 1] = count;
  }
  return out;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) os << ",";
    os << parts[k];
  }
  os << ")";
  return os.str();
}

bool partition_before(const Partition& a, const Partition& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa > sb;
  return a.parts > b.parts;  // lexicographically larger first
}

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      Partition p;
      p.parts = current;
      out.push_back(std::move(p));
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      current.push_back(k);
      self(self, remaining - k, k);
      current.pop_back();
    }
  };
  rec(rec, m, m == 0 ? 1 : m);
  return out;
}

int PartitionTuple::total_size() const {
  int total = 0;
  for (const auto& p : components) total += p.size();
  return total;
}

std::string PartitionTuple::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < components.size(); ++k) {
    if (k) os << ",";
    os << components[k].str();
  }
  os << "]";
  return os.str();
}

std::vector<PartitionTuple> enumerate_fixed_points(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("enumerate_fixed_points: bad (r, n)");
  // Candidate component partitions of every size up to n, canonical order.
  std::vector<Partition> candidates;
  for (int m = n; m >= 0; --m)
    for (auto& p : partitions_of(m)) candidates.push_back(std::move(p));

  std::vector<PartitionTuple> out;
  std::vector<Partition> current(r);
  auto rec = [&](auto&& self, int comp, int remaining) -> void {
    if (comp == r) {
      if (remaining == 0) out.push_back(PartitionTuple{current});
      return;
    }
    for (const auto& p : candidates) {
      if (p.size() > remaining) continue;
      current[comp] = p;
      self(self, comp + 1, remaining - p.size());
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace adhmlab
