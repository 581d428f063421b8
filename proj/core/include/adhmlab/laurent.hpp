#pragma once

#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "adhmlab/rational.hpp"

namespace adhmlab {

// Laurent polynomial in one parameter t over Rational. The coefficient map
// never stores zeros, so the exponent support is exact.
class Laurent {
 public:
  Laurent() = default;
  Laurent(const Rational& c) {  // NOLINT: implicit from constants is intended
    if (c != 0) coeffs_[0] = c;
  }
  Laurent(int c) : Laurent(Rational(c)) {}

  static Laurent monomial(long long exponent, const Rational& c) {
    Laurent p;
    if (c != 0) p.coeffs_[exponent] = c;
    return p;
  }
  static Laurent t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  Rational coefficient(long long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  long long min_exponent() const {
    if (is_zero()) throw std::domain_error("min_exponent of zero");
    return coeffs_.begin()->first;
  }
  long long max_exponent() const {
    if (is_zero()) throw std::domain_error("max_exponent of zero");
    return coeffs_.rbegin()->first;
  }

  const std::map<long long, Rational>& terms() const { return coeffs_; }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) {
    return !(a == b);
  }

  bool is_monomial() const { return coeffs_.size() == 1; }

  // Inverse exists in the Laurent ring only for monomials.
  Laurent inverse() const {
    if (!is_monomial()) throw std::domain_error("Laurent inverse needs a monomial");
    const auto& [e, c] = *coeffs_.begin();
    return monomial(-e, Rational(1) / c);
  }

  Laurent pow(long long k) const {
    if (k == 0) return Laurent(1);
    Laurent base = k > 0 ? *this : inverse();
    unsigned long long m = k > 0 ? static_cast<unsigned long long>(k)
                                 : static_cast<unsigned long long>(-k);
    Laurent acc(1);
    while (m) {
      if (m & 1) acc *= base;
      base *= base;
      m >>= 1;
    }
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      if (!first) os << " + ";
      first = false;
      if (e == 0) {
        os << c.str();
      } else {
        if (c != 1) os << c.str() << "*";
        os << "t";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void add_term(long long e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<long long, Rational> coeffs_;
};

}  // namespace adhmlab
