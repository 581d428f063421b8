#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "adhmlab/matrix.hpp"

namespace adhmlab {

// Linear datum (B1, B2, i, j) with B1,B2 : V -> V, i : W -> V, j : V -> W,
// dim V = n, dim W = r. Admissible means the commutator equation holds and
// the datum is stable.
template <class S>
struct AdhmData {
  int n = 0;
  int r = 1;
  Matrix<S> b1, b2, i, j;

  AdhmData() = default;
  AdhmData(int n_, int r_)
      : n(n_), r(r_), b1(n_, n_), b2(n_, n_), i(n_, r_), j(r_, n_) {
    if (n_ < 0 || r_ < 1) throw std::invalid_argument("bad (n, r)");
  }

  void check_shapes() const {
    if (n < 0 || r < 1) throw std::invalid_argument("bad (n, r)");
    if (b1.rows() != n || b1.cols() != n || b2.rows() != n || b2.cols() != n ||
        i.rows() != n || i.cols() != r || j.rows() != r || j.cols() != n)
      throw std::invalid_argument("adhm datum shape mismatch");
  }

  friend bool operator==(const AdhmData& a, const AdhmData& b) {
    return a.n == b.n && a.r == b.r && a.b1 == b.b1 && a.b2 == b.b2 &&
           a.i == b.i && a.j == b.j;
  }
};

using AdhmDatum = AdhmData<Rational>;
using AdhmDatumL = AdhmData<Laurent>;

inline AdhmDatumL to_laurent(const AdhmDatum& x) {
  AdhmDatumL out(x.n, x.r);
  out.b1 = to_laurent(x.b1);
  out.b2 = to_laurent(x.b2);
  out.i = to_laurent(x.i);
  out.j = to_laurent(x.j);
  return out;
}

// Element (t1, t2, e_1..e_r) of the big torus; every entry invertible.
template <class S>
struct FramedTorus {
  S t1 = S(1);
  S t2 = S(1);
  std::vector<S> e;

  FramedTorus() = default;
  FramedTorus(S t1_, S t2_, std::vector<S> e_)
      : t1(std::move(t1_)), t2(std::move(t2_)), e(std::move(e_)) {}
};

using FramedTorusElement = FramedTorus<Rational>;
using FramedTorusElementL = FramedTorus<Laurent>;

namespace detail {
inline Rational scalar_inverse(const Rational& s) {
  if (s == 0) throw std::invalid_argument("torus entry not invertible");
  return Rational(1) / s;
}
inline Laurent scalar_inverse(const Laurent& s) { return s.inverse(); }
}  // namespace detail

// Invertible gauge transformation; the inverse is carried along so the
// action also works over scalars without general division (Laurent).
template <class S>
struct Gauge {
  Matrix<S> g;
  Matrix<S> g_inv;

  static Gauge from_rational(const MatrixQ& m)
    requires std::same_as<S, Rational>
  {
    return Gauge{m, inverse(m)};
  }
  static Gauge diagonal(std::vector<S> entries) {
    int n = static_cast<int>(entries.size());
    Gauge out{Matrix<S>(n, n), Matrix<S>(n, n)};
    for (int k = 0; k < n; ++k) {
      out.g(k, k) = entries[k];
      out.g_inv(k, k) = detail::scalar_inverse(entries[k]);
    }
    return out;
  }
  static Gauge identity(int n) {
    return Gauge{Matrix<S>::identity(n), Matrix<S>::identity(n)};
  }
};

using GaugeElement = Gauge<Rational>;
using GaugeElementL = Gauge<Laurent>;

// [B1,B2] + ij = 0, exactly.
template <class S>
bool check_equation(const AdhmData<S>& x) {
  x.check_shapes();
  return (x.b1 * x.b2 - x.b2 * x.b1 + x.i * x.j).is_zero();
}

// No proper subspace is preserved by B1, B2 while containing the image of i:
// the smallest invariant subspace generated by the columns of i is everything.
bool is_stable(const AdhmDatum& x);

inline bool is_admissible(const AdhmDatum& x) {
  return check_equation(x) && is_stable(x);
}

// (g B1 g^-1, g B2 g^-1, g i, j g^-1)
template <class S>
AdhmData<S> gauge_act(const Gauge<S>& g, const AdhmData<S>& x) {
  x.check_shapes();
  if (g.g.rows() != x.n || g.g.cols() != x.n)
    throw std::invalid_argument("gauge size mismatch");
  AdhmData<S> out(x.n, x.r);
  out.b1 = g.g * x.b1 * g.g_inv;
  out.b2 = g.g * x.b2 * g.g_inv;
  out.i = g.g * x.i;
  out.j = x.j * g.g_inv;
  return out;
}

// (t1 B1, t2 B2, i e^-1, t1 t2 e j)
template <class S>
AdhmData<S> torus_act(const FramedTorus<S>& tau, const AdhmData<S>& x) {
  x.check_shapes();
  if (static_cast<int>(tau.e.size()) != x.r)
    throw std::invalid_argument("torus element rank mismatch");
  AdhmData<S> out(x.n, x.r);
  out.b1 = tau.t1 * x.b1;
  out.b2 = tau.t2 * x.b2;
  for (int a = 0; a < x.n; ++a)
    for (int s = 0; s < x.r; ++s)
      out.i(a, s) = x.i(a, s) * detail::scalar_inverse(tau.e[s]);
  S t12 = tau.t1 * tau.t2;
  for (int s = 0; s < x.r; ++s)
    for (int a = 0; a < x.n; ++a) out.j(s, a) = t12 * tau.e[s] * x.j(s, a);
  return out;
}

// Whether some invertible g carries x to y. Solves the linear transport
// system {g B1 = B1' g, g B2 = B2' g, g i = i', j = j' g} and searches the
// solution space for an invertible element.
bool are_gauge_equivalent(const AdhmDatum& x, const AdhmDatum& y);

// Transporter solution space as (particular, kernel basis), or nullopt when
// the system is inconsistent. Exposed for the flow pipeline, which wants the
// explicit g.
struct TransportSpace {
  MatrixQ particular;
  std::vector<MatrixQ> kernel;
};
std::optional<TransportSpace> solve_transport(const AdhmDatum& x, const AdhmDatum& y);

// Invertible transporter g with gauge_act(g, x) == y, if one exists.
std::optional<MatrixQ> find_gauge_transport(const AdhmDatum& x, const AdhmDatum& y);

// Trace words tr(w(B1,B2)) for nonempty words up to length max_len (ordered
// by length then lexicographically with B1 < B2), followed by the entries of
// j w(B1,B2) i for words up to the same length including the empty word.
template <class S>
std::vector<S> evaluate_invariants(const AdhmData<S>& x, int max_len) {
  x.check_shapes();
  if (max_len < 1) throw std::invalid_argument("invariant word bound must be >= 1");
  std::vector<S> out;
  std::vector<Matrix<S>> level = {Matrix<S>::identity(x.n)};
  std::vector<std::vector<Matrix<S>>> levels;  // levels[k]: words of length k+1
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Matrix<S>> next;
    next.reserve(level.size() * 2);
    for (const auto& w : level) {
      next.push_back(w * x.b1);
      next.push_back(w * x.b2);
    }
    for (const auto& w : next) {
      S tr(0);
      for (int k = 0; k < x.n; ++k) tr += w(k, k);
      out.push_back(tr);
    }
    levels.push_back(next);
    level = std::move(next);
  }
  auto emit_jwi = [&](const Matrix<S>& w) {
    Matrix<S> m = x.j * w * x.i;
    for (int a = 0; a < m.rows(); ++a)
      for (int b = 0; b < m.cols(); ++b) out.push_back(m(a, b));
  };
  emit_jwi(Matrix<S>::identity(x.n));
  for (const auto& lvl : levels)
    for (const auto& w : lvl) emit_jwi(w);
  return out;
}

// Membership in the fiber of the quotient map over the cone point: every
// invariant vanishes. Decided by saturating the span of all words in B1, B2
// (which stabilizes within n^2 rounds) instead of enumerating the words of
// bounded length one by one; the two tests agree exactly.
bool is_in_central_fiber(const AdhmDatum& x);

}  // namespace adhmlab
