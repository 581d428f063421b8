#include "adhmlab/cells.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "adhmlab/parallel.hpp"

namespace adhmlab {

bool is_contracting(const Cocharacter& lam) {
  if (lam.a1 < 1 || lam.a2 < 1) return false;
  if (lam.b.empty()) return false;
  auto [mn, mx] = std::minmax_element(lam.b.begin(), lam.b.end());
  return *mx - *mn < lam.a1 + lam.a2;
}

bool is_regular(const Cocharacter& lam, std::vector<FixedPointRecord>& records) {
  if (!is_contracting(lam)) return false;
  for (auto& rec : records)
    for (const auto& chi : characters_of(rec))
      if (pair_character(lam, chi) == 0) return false;
  return true;
}

namespace {

// Values in the order 0, 1, -1, 2, -2, ..., up to magnitude bound.
std::vector<long long> signed_values(long long bound) {
  std::vector<long long> v{0};
  for (long long k = 1; k <= bound; ++k) {
    v.push_back(k);
    v.push_back(-k);
  }
  return v;
}

}  // namespace

std::vector<Cocharacter> select_regular_cocharacters(int r, int n, int count,
                                                     std::vector<FixedPointRecord>& records) {
  constexpr long long kShellCap = 64;
  std::vector<Cocharacter> found;
  for (long long shell = 1; shell <= kShellCap && static_cast<int>(found.size()) < count;
       ++shell) {
    // a1, a2 >= 1 by the contracting condition.
    for (long long a1 = 1; a1 <= shell && static_cast<int>(found.size()) < count; ++a1)
      for (long long a2 = 1; a2 <= shell && static_cast<int>(found.size()) < count; ++a2) {
        std::vector<long long> b_values = signed_values(shell);
        std::vector<long long> b(r, 0);
        auto rec_fill = [&](auto&& self, int idx) -> void {
          if (static_cast<int>(found.size()) >= count) return;
          if (idx == r) {
            Cocharacter lam{a1, a2, b};
            long long maxc = std::max(a1, a2);
            for (long long v : b) maxc = std::max(maxc, std::abs(v));
            if (maxc != shell) return;  // visited in an earlier shell
            if (is_regular(lam, records)) found.push_back(std::move(lam));
            return;
          }
          for (long long v : b_values) {
            b[idx] = v;
            self(self, idx + 1);
          }
        };
        rec_fill(rec_fill, 0);
      }
  }
  if (static_cast<int>(found.size()) < count)
    throw std::runtime_error("regular cocharacter search exhausted the shell cap");
  return found;
}

Cocharacter select_regular_cocharacter(int r, int n) {
  auto records = build_fixed_point_records(r, n);
  return select_regular_cocharacters(r, n, 1, records).front();
}

CellDims cell_dimensions(FixedPointRecord& rec, const Cocharacter& lam) {
  CellDims dims;
  for (long long w : tangent_weights(rec, lam)) {
    if (w == 0)
      throw std::invalid_argument("cocharacter not regular: zero tangent weight at " +
                                  rec.label.str());
    if (w > 0)
      ++dims.plus_dim;
    else
      ++dims.minus_dim;
  }
  return dims;
}

long long order_value(const PartitionTuple& pt, const Cocharacter& lam) {
  if (pt.rank() != lam.rank()) throw std::invalid_argument("rank mismatch");
  long long v = 0;
  for (const Box& box : boxes_of(pt))
    v += lam.a1 * (box.p - 1) + lam.a2 * (box.q - 1) - lam.b[box.s];
  return v;
}

CellTable compute_cell_table(std::vector<FixedPointRecord>& records, const Cocharacter& lam,
                             int threads) {
  CellTable table;
  table.lambda = lam;

  // Character computation dominates; it is pure per record.
  parallel_for_each(records.size(), threads,
                    [&](size_t k) { characters_of(records[k]); });

  int ambient_dim = 0;
  table.weight_duality_observed = true;
  for (auto& rec : records) {
    CellRow row;
    row.label = rec.label;
    row.weights = tangent_weights(rec, lam);
    CellDims dims = cell_dimensions(rec, lam);
    row.plus_dim = dims.plus_dim;
    row.minus_dim = dims.minus_dim;
    row.order_value = order_value(rec.label, lam);
    ambient_dim = 2 * rec.label.rank() * rec.label.total_size();
    if (row.plus_dim + row.minus_dim != ambient_dim)
      throw std::logic_error("weight signs do not fill the tangent dimension");
    // Duality observation: w and (a1 + a2) - w occur equally often.
    std::vector<long long> mirrored;
    mirrored.reserve(row.weights.size());
    for (long long w : row.weights) mirrored.push_back(lam.a1 + lam.a2 - w);
    std::sort(mirrored.begin(), mirrored.end());
    if (mirrored != row.weights) table.weight_duality_observed = false;
    table.rows.push_back(std::move(row));
  }

  // Coefficient k of the ambient polynomial counts plus cells of
  // codimension k; the fiber polynomial counts minus cells of dimension k.
  auto bump = [](PoincarePolynomial& p, int k) {
    if (static_cast<int>(p.size()) <= k) p.resize(k + 1, 0);
    ++p[k];
  };
  table.max_minus_dim = 0;
  for (const auto& row : table.rows) {
    bump(table.poincare_ambient, ambient_dim - row.plus_dim);
    bump(table.poincare_fiber, row.minus_dim);
    table.max_minus_dim = std::max(table.max_minus_dim, row.minus_dim);
  }
  table.equal = table.poincare_ambient == table.poincare_fiber;

  // Filtration rank: ascending order value, ties by canonical position.
  std::vector<size_t> idx(table.rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return table.rows[a].order_value < table.rows[b].order_value;
  });
  for (size_t rank = 0; rank < idx.size(); ++rank)
    table.rows[idx[rank]].filtration_rank = static_cast<int>(rank);
  return table;
}

PoincareReport poincare_polynomials(int r, int n, const Cocharacter& lam) {
  auto records = build_fixed_point_records(r, n);
  CellTable table = compute_cell_table(records, lam);
  return PoincareReport{table.poincare_ambient, table.poincare_fiber, table.equal};
}

FiltrationResult filtration_order(std::vector<FixedPointRecord>& records,
                                  const Cocharacter& lam, std::span<const FlowSample> samples) {
  FiltrationResult out;
  out.table = compute_cell_table(records, lam);
  out.certificate.samples = static_cast<int>(samples.size());
  for (const FlowSample& s : samples) {
    if (!s.minus_label) continue;
    ++out.certificate.both_exist;
    if (order_value(s.plus_label, lam) > order_value(*s.minus_label, lam))
      out.certificate.violations.emplace_back(s.plus_label, *s.minus_label);
  }
  if (!out.certificate.violations.empty()) {
    std::ostringstream os;
    os << "filtration monotonicity violated on " << out.certificate.violations.size()
       << " of " << out.certificate.both_exist << " samples; first: plus "
       << out.certificate.violations.front().first.str() << " vs minus "
       << out.certificate.violations.front().second.str();
    throw std::runtime_error(os.str());
  }
  return out;
}

}  // namespace adhmlab
