#include "adhmlab/flow.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace adhmlab {

namespace {

struct Candidate {
  long long weight;
  std::vector<uint8_t> word;  // generator indices in application order
  int seed;
  std::vector<Rational> vec;

  // Priority: lowest weight, then shortest word, then lexicographic word,
  // then seed index. std::priority_queue pops the largest, so the comparator
  // is reversed.
  bool operator<(const Candidate& o) const {
    if (weight != o.weight) return weight > o.weight;
    if (word.size() != o.word.size()) return word.size() > o.word.size();
    if (word != o.word) return word > o.word;
    return seed > o.seed;
  }
};

}  // namespace

AdaptedBasis adapted_grading_basis(const AdhmDatum& x, const Cocharacter& lam) {
  if (!is_admissible(x)) throw std::invalid_argument("datum not admissible");
  if (x.r != lam.rank()) throw std::invalid_argument("cocharacter rank mismatch");
  int n = x.n;
  AdaptedBasis out;
  out.basis = MatrixQ(n, n);
  if (n == 0) return out;

  std::priority_queue<Candidate> queue;
  for (int s = 0; s < x.r; ++s)
    queue.push(Candidate{-lam.b[s], {}, s, x.i.column(s)});

  Subspace chosen(n);
  int found = 0;
  while (!queue.empty() && found < n) {
    Candidate cand = queue.top();
    queue.pop();
    if (!chosen.insert(cand.vec)) continue;
    for (int k = 0; k < n; ++k) out.basis(k, found) = cand.vec[k];
    out.grading.push_back(cand.weight);
    ++found;
    for (uint8_t g = 0; g < 2; ++g) {
      Candidate child;
      child.weight = cand.weight + (g == 0 ? lam.a1 : lam.a2);
      child.word = cand.word;
      child.word.push_back(g);
      child.seed = cand.seed;
      child.vec = (g == 0 ? x.b1 : x.b2).apply(cand.vec);
      queue.push(std::move(child));
    }
  }
  if (found < n) throw std::invalid_argument("datum not stable: spanning failed");
  return out;
}

std::vector<long long> adapted_grading(const AdhmDatum& x, const Cocharacter& lam) {
  return adapted_grading_basis(x, lam).grading;
}

namespace {

// Transported Laurent family in the adapted frame. Every entry is a single
// monomial: the d-grading makes the B and i exponents non-negative by
// construction; only the j block can carry poles.
MatrixL monomial_matrix(const MatrixQ& coeff,
                        const std::function<long long(int, int)>& exponent) {
  MatrixL out(coeff.rows(), coeff.cols());
  for (int a = 0; a < coeff.rows(); ++a)
    for (int b = 0; b < coeff.cols(); ++b)
      if (coeff(a, b) != 0) out(a, b) = Laurent::monomial(exponent(a, b), coeff(a, b));
  return out;
}

struct TransportedFamily {
  MatrixL b1, b2, i, j;
};

TransportedFamily transported_family(const AdhmDatum& x, const Cocharacter& lam,
                                     const AdaptedBasis& adapted) {
  MatrixQ c_inv = inverse(adapted.basis);
  MatrixQ b1 = c_inv * x.b1 * adapted.basis;
  MatrixQ b2 = c_inv * x.b2 * adapted.basis;
  MatrixQ i = c_inv * x.i;
  MatrixQ j = x.j * adapted.basis;
  const auto& d = adapted.grading;
  TransportedFamily fam;
  fam.b1 = monomial_matrix(b1, [&](int a, int b) { return lam.a1 + d[b] - d[a]; });
  fam.b2 = monomial_matrix(b2, [&](int a, int b) { return lam.a2 + d[b] - d[a]; });
  fam.i = monomial_matrix(i, [&](int a, int s) { return -d[a] - lam.b[s]; });
  fam.j = monomial_matrix(
      j, [&](int s, int b) { return lam.a1 + lam.a2 + lam.b[s] + d[b]; });
  return fam;
}

// Extract the partition tuple of a torus-fixed admissible datum with j = 0:
// per summand, the invariant subspace generated by the seed column, with row
// lengths read off from ranks of B1 powers. Returns nullopt when the
// structure does not decompose (which a genuine fixed datum always does).
std::optional<PartitionTuple> extract_label(const AdhmDatum& y) {
  int n = y.n, r = y.r;
  PartitionTuple pt;
  pt.components.resize(r);
  int total = 0;
  Subspace direct_sum(n);
  for (int s = 0; s < r; ++s) {
    auto basis = smallest_invariant_subspace({y.b1, y.b2}, {y.i.column(s)});
    int dim = static_cast<int>(basis.size());
    total += dim;
    for (const auto& v : basis)
      if (!direct_sum.insert(v)) return std::nullopt;
    if (dim == 0) continue;
    // Restrict B1 to the summand: ranks of successive powers give the
    // cumulative row counts of the partition.
    MatrixQ sub(n, dim);
    for (int c = 0; c < dim; ++c)
      for (int a = 0; a < n; ++a) sub(a, c) = basis[c][a];
    std::vector<int> ranks{dim};
    MatrixQ power = sub;
    for (int k = 0; k < dim && ranks.back() > 0; ++k) {
      power = y.b1 * power;
      ranks.push_back(rank_of(power));
    }
    if (ranks.back() > 0) return std::nullopt;  // B1 not nilpotent on the summand
    std::vector<int> parts;
    for (size_t k = 0; k + 1 < ranks.size(); ++k) {
      int part = ranks[k] - ranks[k + 1];
      if (part <= 0) return std::nullopt;
      if (!parts.empty() && part > parts.back()) return std::nullopt;
      parts.push_back(part);
    }
    pt.components[s].parts = std::move(parts);
  }
  if (total != n) return std::nullopt;
  return pt;
}

FlowResult limit_along(const AdhmDatum& x, const Cocharacter& lam, bool forward,
                       std::vector<std::pair<int, int>>* poles_out) {
  AdaptedBasis adapted = adapted_grading_basis(x, lam);
  TransportedFamily fam = transported_family(x, lam, adapted);

  int n = x.n, r = x.r;
  MatrixL stacked(n + r, n + r);  // [B1 B2; i^T-ish] packing is clumsy; check blocks directly
  LaurentLimit lb1 = laurent_limit_at_zero(fam.b1);
  LaurentLimit lb2 = laurent_limit_at_zero(fam.b2);
  LaurentLimit li = laurent_limit_at_zero(fam.i);
  LaurentLimit lj = laurent_limit_at_zero(fam.j);
  if (!lb1.exists || !lb2.exists || !li.exists) {
    // Impossible by the grading construction; a pole here is a defect.
    throw std::logic_error("adapted family has a pole outside the j block");
  }
  if (!lj.exists) {
    if (!poles_out)
      throw std::logic_error(forward
                                 ? "forward limit family has a pole"
                                 : "backward limit family has a pole without a pole handler");
    *poles_out = lj.poles;
    return FlowResult{};
  }

  AdhmDatum limit(n, r);
  limit.b1 = lb1.value;
  limit.b2 = lb2.value;
  limit.i = li.value;
  limit.j = lj.value;
  // Back to the original frame.
  AdhmDatum in_frame =
      gauge_act(GaugeElement::from_rational(adapted.basis), limit);
  if (!check_equation(in_frame) || !is_stable(in_frame))
    throw std::logic_error("flow limit is not admissible");

  FlowResult out;
  out.limit_datum = in_frame;
  out.grading = adapted.grading;
  out.gauge_used = MatrixL(n, n);
  for (int k = 0; k < n; ++k)
    out.gauge_used(k, k) = Laurent::monomial(-adapted.grading[k], 1);

  std::optional<PartitionTuple> label = extract_label(in_frame);
  if (label && label->total_size() == n) {
    if (auto g = find_gauge_transport(adhm_representative(*label), in_frame)) {
      out.fixed_point = *label;
      return out;
    }
  }
  // Fallback: certified scan over all candidates.
  for (auto& pt : enumerate_fixed_points(r, n)) {
    if (find_gauge_transport(adhm_representative(pt), in_frame)) {
      out.fixed_point = std::move(pt);
      return out;
    }
  }
  throw std::logic_error("flow limit matches no enumerated fixed point");
}

}  // namespace

FlowResult limit_plus(const AdhmDatum& x, const Cocharacter& lam) {
  if (!is_contracting(lam))
    throw std::invalid_argument("limit_plus needs a contracting cocharacter");
  return limit_along(x, lam, /*forward=*/true, nullptr);
}

MinusOutcome limit_minus(const AdhmDatum& x, const Cocharacter& lam) {
  if (!is_contracting(lam))
    throw std::invalid_argument("limit_minus needs a contracting cocharacter");
  Cocharacter neg{-lam.a1, -lam.a2, lam.b};
  for (auto& v : neg.b) v = -v;
  MinusOutcome out;
  std::vector<std::pair<int, int>> poles;
  FlowResult res = limit_along(x, neg, /*forward=*/false, &poles);
  bool central = is_in_central_fiber(x);
  if (poles.empty()) {
    if (!central)
      throw std::logic_error(
          "backward limit exists for a datum outside the central fiber");
    out.result = std::move(res);
  } else {
    if (central)
      throw std::logic_error(
          "backward limit family has a pole on the central fiber");
    out.pole_positions = std::move(poles);
  }
  return out;
}

FlowSampleRecord flow_sample_check(const AdhmDatum& x, const Cocharacter& lam) {
  FlowSampleRecord rec;
  FlowResult plus = limit_plus(x, lam);
  rec.plus_label = plus.fixed_point;
  rec.v_plus = order_value(rec.plus_label, lam);
  MinusOutcome minus = limit_minus(x, lam);
  if (minus.result) {
    rec.minus_label = minus.result->fixed_point;
    rec.v_minus = order_value(*rec.minus_label, lam);
    rec.monotone = rec.v_plus <= *rec.v_minus;
  }
  return rec;
}

}  // namespace adhmlab
