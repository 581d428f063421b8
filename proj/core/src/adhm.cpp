#include "adhmlab/adhm.hpp"

#include <deque>
#include <functional>

namespace adhmlab {

bool is_stable(const AdhmDatum& x) {
  x.check_shapes();
  std::vector<std::vector<Rational>> seeds;
  seeds.reserve(x.r);
  for (int s = 0; s < x.r; ++s) seeds.push_back(x.i.column(s));
  auto basis = smallest_invariant_subspace({x.b1, x.b2}, seeds);
  return static_cast<int>(basis.size()) == x.n;
}

std::optional<TransportSpace> solve_transport(const AdhmDatum& x, const AdhmDatum& y) {
  x.check_shapes();
  y.check_shapes();
  if (x.n != y.n || x.r != y.r) return std::nullopt;
  int n = x.n, r = x.r;
  if (n == 0) return TransportSpace{MatrixQ(0, 0), {}};

  // Unknown vec(g), row-major. Equations: gB - B'g = 0 for both B, gi = i',
  // j' g = j.
  int unknowns = n * n;
  int eqs = 2 * n * n + n * r + r * n;
  MatrixQ sys(eqs, unknowns + 1);  // last column: right-hand side
  int row = 0;
  auto var = [n](int a, int b) { return a * n + b; };
  for (const auto* pair : {&x.b1, &x.b2}) {
    const MatrixQ& B = *pair;
    const MatrixQ& Bp = (pair == &x.b1) ? y.b1 : y.b2;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          sys(row, var(a, c)) += B(c, b);
          sys(row, var(c, b)) -= Bp(a, c);
        }
        ++row;
      }
  }
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < r; ++s) {
      for (int c = 0; c < n; ++c) sys(row, var(a, c)) += x.i(c, s);
      sys(row, unknowns) = y.i(a, s);
      ++row;
    }
  for (int s = 0; s < r; ++s)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) sys(row, var(c, b)) += y.j(s, c);
      sys(row, unknowns) = x.j(s, b);
      ++row;
    }

  std::vector<int> pivots = rref(sys);
  // Inconsistent iff some pivot lands in the RHS column.
  for (int p : pivots)
    if (p == unknowns) return std::nullopt;

  std::vector<int> pivot_of_col(unknowns, -1);
  for (size_t k = 0; k < pivots.size(); ++k) pivot_of_col[pivots[k]] = static_cast<int>(k);

  TransportSpace space;
  space.particular = MatrixQ(n, n);
  for (size_t k = 0; k < pivots.size(); ++k) {
    int col = pivots[k];
    space.particular(col / n, col % n) = sys(static_cast<int>(k), unknowns);
  }
  for (int col = 0; col < unknowns; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    MatrixQ basis_el(n, n);
    basis_el(col / n, col % n) = 1;
    for (size_t k = 0; k < pivots.size(); ++k)
      basis_el(pivots[k] / n, pivots[k] % n) = -sys(static_cast<int>(k), col);
    space.kernel.push_back(std::move(basis_el));
  }
  return space;
}

namespace {

MatrixQ combine(const TransportSpace& space, const std::vector<Rational>& coeffs) {
  MatrixQ g = space.particular;
  for (size_t k = 0; k < space.kernel.size(); ++k)
    if (coeffs[k] != 0) g = g + coeffs[k] * space.kernel[k];
  return g;
}

// Deterministic invertibility search over the affine solution space. The
// determinant of particular + sum(u_k * kernel_k) has degree <= n in each
// u_k, so vanishing on the grid {0..n}^d means it vanishes identically.
std::optional<MatrixQ> invertible_element(const TransportSpace& space, int n) {
  size_t d = space.kernel.size();
  if (d == 0) {
    if (determinant(space.particular) != 0) return space.particular;
    return std::nullopt;
  }
  // Quick randomized probe: a handful of integer combinations.
  unsigned long long state = 0x9e3779b97f4a7c15ULL;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> coeffs(d);
    for (auto& c : coeffs) c = Rational(static_cast<long long>(next() % 21) - 10);
    MatrixQ g = combine(space, coeffs);
    if (determinant(g) != 0) return g;
  }
  if (d > 3)
    throw std::runtime_error(
        "gauge transport: solution space too large for the exact fallback");
  std::vector<Rational> coeffs(d, Rational(0));
  std::function<std::optional<MatrixQ>(size_t)> scan = [&](size_t k) -> std::optional<MatrixQ> {
    if (k == d) {
      MatrixQ g = combine(space, coeffs);
      if (determinant(g) != 0) return g;
      return std::nullopt;
    }
    for (int v = 0; v <= n; ++v) {
      coeffs[k] = v;
      if (auto g = scan(k + 1)) return g;
    }
    return std::nullopt;
  };
  return scan(0);
}

}  // namespace

std::optional<MatrixQ> find_gauge_transport(const AdhmDatum& x, const AdhmDatum& y) {
  auto space = solve_transport(x, y);
  if (!space) return std::nullopt;
  if (x.n == 0) return MatrixQ(0, 0);
  auto g = invertible_element(*space, x.n);
  if (!g) return std::nullopt;
  // Certify the found element exactly before reporting it.
  if (!(gauge_act(GaugeElement::from_rational(*g), x) == y))
    throw std::logic_error("gauge transport certificate failed");
  return g;
}

bool are_gauge_equivalent(const AdhmDatum& x, const AdhmDatum& y) {
  if (!is_admissible(x) || !is_admissible(y))
    throw std::invalid_argument("are_gauge_equivalent expects admissible data");
  if (x.n != y.n || x.r != y.r) return false;
  return find_gauge_transport(x, y).has_value();
}

bool is_in_central_fiber(const AdhmDatum& x) {
  if (!is_admissible(x)) throw std::invalid_argument("datum not admissible");
  int n = x.n;
  if (n == 0) return true;

  auto vectorize = [n](const MatrixQ& m) {
    std::vector<Rational> v(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) v[static_cast<size_t>(a) * n + b] = m(a, b);
    return v;
  };

  // Basis of the span of all nonempty words in B1, B2. Each accepted element
  // is itself a word, so left-multiplying by the generators saturates the
  // span.
  Subspace span(n * n);
  std::deque<MatrixQ> work;
  for (const MatrixQ* g : {&x.b1, &x.b2})
    if (span.insert(vectorize(*g))) work.push_back(*g);
  std::vector<MatrixQ> basis(work.begin(), work.end());
  while (!work.empty()) {
    MatrixQ w = std::move(work.front());
    work.pop_front();
    for (const MatrixQ* g : {&x.b1, &x.b2}) {
      MatrixQ longer = *g * w;
      if (span.insert(vectorize(longer))) {
        basis.push_back(longer);
        work.push_back(std::move(longer));
      }
    }
  }

  auto trace = [n](const MatrixQ& m) {
    Rational t(0);
    for (int k = 0; k < n; ++k) t += m(k, k);
    return t;
  };
  for (const auto& w : basis)
    if (trace(w) != 0) return false;
  if (!(x.j * x.i).is_zero()) return false;
  for (const auto& w : basis)
    if (!(x.j * w * x.i).is_zero()) return false;
  return true;
}

}  // namespace adhmlab
