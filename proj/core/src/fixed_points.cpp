#include "adhmlab/fixed_points.hpp"

namespace adhmlab {

std::vector<Box> boxes_of(const PartitionTuple& pt) {
  std::vector<Box> boxes;
  int index = 0;
  for (int s = 0; s < pt.rank(); ++s) {
    const Partition& lambda = pt.components[s];
    for (int p = 1; p <= lambda.length(); ++p)
      for (int q = 1; q <= lambda.parts[p - 1]; ++q)
        boxes.push_back(Box{s, p, q, index++});
  }
  return boxes;
}

AdhmDatum adhm_representative(const PartitionTuple& pt) {
  int r = pt.rank();
  int n = pt.total_size();
  AdhmDatum x(n, r);
  auto boxes = boxes_of(pt);
  // index lookup per component
  auto find_index = [&boxes](int s, int p, int q) -> int {
    for (const Box& b : boxes)
      if (b.s == s && b.p == p && b.q == q) return b.index;
    return -1;
  };
  for (const Box& b : boxes) {
    const Partition& lambda = pt.components[b.s];
    if (lambda.contains_box(b.p + 1, b.q))
      x.b1(find_index(b.s, b.p + 1, b.q), b.index) = 1;
    if (lambda.contains_box(b.p, b.q + 1))
      x.b2(find_index(b.s, b.p, b.q + 1), b.index) = 1;
    if (b.p == 1 && b.q == 1) x.i(b.index, b.s) = 1;
  }
  return x;
}

std::vector<long long> box_character(const Box& box, int r) {
  std::vector<long long> chi(2 + r, 0);
  chi[0] = box.p - 1;
  chi[1] = box.q - 1;
  chi[2 + box.s] = -1;
  return chi;
}

bool representative_is_torus_fixed(const PartitionTuple& pt) {
  AdhmDatumL rep = to_laurent(adhm_representative(pt));
  int r = pt.rank();
  for (int coord = 0; coord < 2 + r; ++coord) {
    FramedTorusElementL tau;
    tau.t1 = coord == 0 ? Laurent::t() : Laurent(1);
    tau.t2 = coord == 1 ? Laurent::t() : Laurent(1);
    tau.e.assign(r, Laurent(1));
    if (coord >= 2) tau.e[coord - 2] = Laurent::t();
    auto g = compensating_gauge(pt, tau);
    if (!(gauge_act(g, torus_act(tau, rep)) == rep)) return false;
  }
  return true;
}

std::vector<FixedPointRecord> build_fixed_point_records(int r, int n) {
  std::vector<FixedPointRecord> records;
  for (auto& pt : enumerate_fixed_points(r, n)) {
    FixedPointRecord rec;
    rec.representative = adhm_representative(pt);
    rec.label = std::move(pt);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace adhmlab
