#include "adhmlab/tangent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace adhmlab {

bool Cocharacter::is_zero() const {
  if (a1 != 0 || a2 != 0) return false;
  for (long long v : b)
    if (v != 0) return false;
  return true;
}

std::string Cocharacter::str() const {
  std::ostringstream os;
  os << "(" << a1 << "," << a2 << ";";
  for (size_t k = 0; k < b.size(); ++k) {
    if (k) os << ",";
    os << b[k];
  }
  os << ")";
  return os.str();
}

long long pair_character(const Cocharacter& lam, const CharVec& chi) {
  if (chi.size() != static_cast<size_t>(2 + lam.rank()))
    throw std::invalid_argument("character length mismatch");
  long long v = lam.a1 * chi[0] + lam.a2 * chi[1];
  for (int s = 0; s < lam.rank(); ++s) v += lam.b[s] * chi[2 + s];
  return v;
}

DeformationComplex build_complex(const AdhmDatum& x) {
  x.check_shapes();
  int n = x.n, r = x.r;
  DeformationComplex cx;
  cx.n = n;
  cx.r = r;
  int mid = cx.middle_dim();
  cx.d0 = MatrixQ(mid, n * n);
  cx.d1 = MatrixQ(n * n, mid);

  auto off_beta1 = [n](int a, int b) { return a * n + b; };
  auto off_beta2 = [n](int a, int b) { return n * n + a * n + b; };
  auto off_iota = [n, r](int a, int s) { return 2 * n * n + a * r + s; };
  auto off_kappa = [n, r](int s, int b) { return 2 * n * n + n * r + s * n + b; };
  auto end_idx = [n](int a, int b) { return a * n + b; };

  // d0 on the matrix unit E_ab of End(V).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int col = end_idx(a, b);
      for (int c = 0; c < n; ++c) {
        // [E_ab, B1] = E_ab B1 - B1 E_ab
        cx.d0(off_beta1(a, c), col) += x.b1(b, c);
        cx.d0(off_beta1(c, b), col) -= x.b1(c, a);
        cx.d0(off_beta2(a, c), col) += x.b2(b, c);
        cx.d0(off_beta2(c, b), col) -= x.b2(c, a);
      }
      for (int s = 0; s < r; ++s) cx.d0(off_iota(a, s), col) += x.i(b, s);
      for (int s = 0; s < r; ++s) cx.d0(off_kappa(s, b), col) -= x.j(s, a);
    }

  // d1 on the middle matrix units.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int col1 = off_beta1(a, b);
      int col2 = off_beta2(a, b);
      for (int c = 0; c < n; ++c) {
        // [E_ab, B2] into the target
        cx.d1(end_idx(a, c), col1) += x.b2(b, c);
        cx.d1(end_idx(c, b), col1) -= x.b2(c, a);
        // [B1, E_ab]
        cx.d1(end_idx(c, b), col2) += x.b1(c, a);
        cx.d1(end_idx(a, c), col2) -= x.b1(b, c);
      }
    }
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < r; ++s) {
      int col = off_iota(a, s);
      for (int c = 0; c < n; ++c) cx.d1(end_idx(a, c), col) += x.j(s, c);
    }
  for (int s = 0; s < r; ++s)
    for (int b = 0; b < n; ++b) {
      int col = off_kappa(s, b);
      for (int c = 0; c < n; ++c) cx.d1(end_idx(c, b), col) += x.i(c, s);
    }
  return cx;
}

std::vector<std::vector<Rational>> tangent_basis(const AdhmDatum& x) {
  if (!is_admissible(x)) throw std::invalid_argument("datum not admissible");
  DeformationComplex cx = build_complex(x);
  int n = x.n, r = x.r;

  if (!(cx.d1 * cx.d0).is_zero()) throw std::logic_error("chain condition d1 d0 != 0");
  if (n > 0 && rank_of(cx.d0) != n * n)
    throw std::logic_error("d0 not injective at a stable datum");

  RankKernel ker = rank_kernel(cx.d1);
  // Extend the image of d0 by canonical kernel vectors; the added vectors
  // form the tangent basis.
  Subspace span(cx.middle_dim());
  for (int c = 0; c < cx.d0.cols(); ++c) span.insert(cx.d0.column(c));
  std::vector<std::vector<Rational>> basis;
  for (auto& v : ker.kernel_basis)
    if (span.insert(v)) basis.push_back(std::move(v));
  if (static_cast<int>(basis.size()) != 2 * r * n)
    throw std::logic_error("tangent dimension mismatch");
  return basis;
}

namespace {

CharVec negate(CharVec v) {
  for (auto& x : v) x = -x;
  return v;
}
CharVec add(CharVec a, const CharVec& b) {
  for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

}  // namespace

std::vector<CharVec> tangent_characters(const PartitionTuple& pt) {
  AdhmDatum x = adhm_representative(pt);
  int n = x.n, r = x.r;
  DeformationComplex cx = build_complex(x);
  auto boxes = boxes_of(pt);
  std::vector<CharVec> box_chi(n);
  for (const Box& b : boxes) box_chi[b.index] = box_character(b, r);

  CharVec unit1(2 + r, 0), unit2(2 + r, 0), unit12(2 + r, 0);
  unit1[0] = 1;
  unit2[1] = 1;
  unit12[0] = unit12[1] = 1;
  auto unit_b = [r](int s) {
    CharVec u(2 + r, 0);
    u[2 + s] = 1;
    return u;
  };

  // Character of every middle coordinate and of every target coordinate.
  int mid = cx.middle_dim();
  std::vector<CharVec> mid_chi(mid), target_chi(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CharVec diff = add(box_chi[b], negate(box_chi[a]));
      mid_chi[a * n + b] = add(unit1, diff);
      mid_chi[n * n + a * n + b] = add(unit2, diff);
      target_chi[a * n + b] = add(unit12, diff);
    }
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < r; ++s)
      mid_chi[2 * n * n + a * r + s] = add(negate(box_chi[a]), negate(unit_b(s)));
  for (int s = 0; s < r; ++s)
    for (int b = 0; b < n; ++b)
      mid_chi[2 * n * n + n * r + s * n + b] = add(add(unit12, unit_b(s)), box_chi[b]);

  // Both differentials must respect the grading; a violation means the
  // conventions drifted.
  for (int col = 0; col < mid; ++col)
    for (int row = 0; row < n * n; ++row)
      if (cx.d1(row, col) != 0 && target_chi[row] != mid_chi[col])
        throw std::logic_error("tangent grading violated by d1");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CharVec chi = add(box_chi[b], negate(box_chi[a]));
      for (int row = 0; row < mid; ++row)
        if (cx.d0(row, a * n + b) != 0 && mid_chi[row] != chi)
          throw std::logic_error("tangent grading violated by d0");
    }

  if (n > 0 && rank_of(cx.d0) != n * n)
    throw std::logic_error("d0 not injective at a fixed point");

  std::map<CharVec, std::vector<int>> groups;
  for (int col = 0; col < mid; ++col) groups[mid_chi[col]].push_back(col);
  std::map<CharVec, int> end_count;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) ++end_count[add(box_chi[b], negate(box_chi[a]))];

  std::vector<CharVec> result;
  for (const auto& [chi, cols] : groups) {
    MatrixQ sub(n * n, static_cast<int>(cols.size()));
    for (size_t k = 0; k < cols.size(); ++k)
      for (int row = 0; row < n * n; ++row) sub(row, static_cast<int>(k)) = cx.d1(row, cols[k]);
    int ker_dim = static_cast<int>(cols.size()) - rank_of(sub);
    auto it = end_count.find(chi);
    int gauge_dim = it == end_count.end() ? 0 : it->second;
    int mult = ker_dim - gauge_dim;
    if (mult < 0) throw std::logic_error("negative tangent multiplicity");
    for (int k = 0; k < mult; ++k) result.push_back(chi);
  }
  // Characters not hit by any middle coordinate cannot contribute, but the
  // gauge directions there must cancel inside some middle block; end_count
  // entries outside `groups` would signal a grading bug.
  for (const auto& [chi, cnt] : end_count)
    if (cnt > 0 && groups.find(chi) == groups.end())
      throw std::logic_error("gauge character outside the middle grading");

  if (static_cast<int>(result.size()) != 2 * r * n)
    throw std::logic_error("tangent character count mismatch");
  std::sort(result.begin(), result.end());
  return result;
}

const std::vector<CharVec>& characters_of(FixedPointRecord& rec) {
  if (!rec.characters) rec.characters = tangent_characters(rec.label);
  return *rec.characters;
}

std::vector<long long> tangent_weights(FixedPointRecord& rec, const Cocharacter& lam) {
  const auto& chars = characters_of(rec);
  std::vector<long long> w;
  w.reserve(chars.size());
  for (const auto& chi : chars) w.push_back(pair_character(lam, chi));
  std::sort(w.begin(), w.end());
  rec.weights = w;
  return w;
}

}  // namespace adhmlab
