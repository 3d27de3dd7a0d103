#pragma once

// Exact univariate polynomials over Q, stored in either the binomial basis
// (coefficient i multiplies C(X,i)) or the monomial basis (X^i).

#include "chromatic/types.hpp"

#include <json.hpp>

#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chromatic {

enum class Basis { binomial, monomial };

inline std::string to_string(Basis b) { return b == Basis::binomial ? "binomial" : "monomial"; }

inline Basis parse_basis(std::string_view s) {
  if (s == "binomial") return Basis::binomial;
  if (s == "monomial") return Basis::monomial;
  throw InputError("unknown basis '" + std::string(s) + "'");
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

/// C(x, k) = x(x-1)...(x-k+1)/k! for any rational x.
inline Rational binomial(const Rational& x, int k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= (x - i);
  return r / Rational(factorial(static_cast<unsigned>(k)));
}

inline BigInt multinomial(int n, std::span<const int> parts) {
  long long sum = 0;
  for (int p : parts) {
    if (p < 0) throw InputError("multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw InputError("multinomial: parts sum to " + std::to_string(sum) + ", expected " + std::to_string(n));
  BigInt r = factorial(static_cast<unsigned>(n));
  for (int p : parts) r /= factorial(static_cast<unsigned>(p));
  return r;
}

class Poly {
 public:
  Poly() = default;
  Poly(Basis basis, std::vector<Rational> coeffs) : basis_(basis), coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rational& c) { return Poly(Basis::monomial, {c}); }
  static Poly x() { return Poly(Basis::monomial, {0, 1}); }
  static Poly from_integers(Basis basis, const std::vector<BigInt>& coeffs) {
    std::vector<Rational> r(coeffs.begin(), coeffs.end());
    return Poly(basis, std::move(r));
  }

  Basis basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial. Identical in both bases.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& x) const {
    Rational sum = 0;
    if (basis_ == Basis::monomial) {
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) sum = sum * x + *it;
      return sum;
    }
    Rational term = 1;  // C(x, i), built incrementally
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i > 0) term = term * (x - Rational(static_cast<long long>(i) - 1)) / Rational(static_cast<long long>(i));
      sum += coeffs_[i] * term;
    }
    return sum;
  }

  Poly to_monomial() const {
    if (basis_ == Basis::monomial) return *this;
    std::vector<Rational> out(coeffs_.size());
    std::vector<Rational> falling{1};  // X_(i) in the monomial basis
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i > 0) falling = mul_monomial(falling, {-Rational(static_cast<long long>(i) - 1), 1});
      Rational scale = coeffs_[i] / Rational(factorial(static_cast<unsigned>(i)));
      for (std::size_t j = 0; j < falling.size(); ++j) out[j] += scale * falling[j];
    }
    return Poly(Basis::monomial, std::move(out));
  }

  /// Binomial coefficients are the forward differences at 0.
  Poly to_binomial() const {
    if (basis_ == Basis::binomial) return *this;
    std::vector<Rational> values;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) values.push_back((*this)(Rational(static_cast<long long>(i))));
    std::vector<Rational> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      out.push_back(values[0]);
      for (std::size_t j = 0; j + 1 < values.size() - i; ++j) values[j] = values[j + 1] - values[j];
    }
    return Poly(Basis::binomial, std::move(out));
  }

  Poly in_basis(Basis b) const { return b == Basis::monomial ? to_monomial() : to_binomial(); }

  /// p(X + shift), monomial basis.
  Poly shifted(const Rational& shift) const {
    auto m = to_monomial().coeffs_;
    std::vector<Rational> out;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      out = mul_monomial(out, {shift, 1});
      if (out.empty()) out.push_back(0);
      out[0] += *it;
    }
    return Poly(Basis::monomial, std::move(out));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.basis_ == b.basis_) return Poly(a.basis_, add_vectors(a.coeffs_, b.coeffs_));
    return Poly(Basis::monomial, add_vectors(a.to_monomial().coeffs_, b.to_monomial().coeffs_));
  }

  friend Poly operator-(const Poly& a) {
    auto c = a.coeffs_;
    for (auto& v : c) v = -v;
    return Poly(a.basis_, std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    return Poly(Basis::monomial, mul_monomial(a.to_monomial().coeffs_, b.to_monomial().coeffs_));
  }

  friend Poly operator*(const Rational& s, const Poly& p) {
    auto c = p.coeffs_;
    for (auto& v : c) v *= s;
    return Poly(p.basis_, std::move(c));
  }

  /// Equality as polynomials, independent of storage basis.
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.basis_ == b.basis_) return a.coeffs_ == b.coeffs_;
    return a.to_monomial().coeffs_ == b.to_monomial().coeffs_;
  }

  /// Whether every coefficient in the current basis is an integer >= 0.
  bool has_nonnegative_integer_coeffs() const {
    for (const auto& c : coeffs_)
      if (c < 0 || boost::multiprecision::denominator(c) != 1) return false;
    return true;
  }

  /// Human-readable form, e.g. "X^3 - 3*X^2 + 2*X" or "2*C(X,2)".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      std::string term = basis_ == Basis::monomial
                             ? (i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i)))
                             : (i == 0 ? "" : "C(X," + std::to_string(i) + ")");
      Rational mag = c < 0 ? Rational(-c) : c;
      std::string coef = (mag == 1 && !term.empty()) ? "" : chromatic::to_string(mag);
      std::string body = coef.empty() ? term : (term.empty() ? coef : coef + "*" + term);
      if (out.empty()) {
        out = (c < 0 ? "-" : "") + body;
      } else {
        out += (c < 0 ? " - " : " + ") + body;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  static std::vector<Rational> add_vectors(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
  }

  static std::vector<Rational> mul_monomial(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  }

  Basis basis_ = Basis::monomial;
  std::vector<Rational> coeffs_;
};

/// X_(n) = X(X-1)...(X-n+1), monomial basis.
inline Poly falling_factorial(int n) {
  if (n < 0) throw InputError("falling_factorial: negative order");
  Poly p = Poly::constant(1);
  for (int i = 0; i < n; ++i) p = p * Poly(Basis::monomial, {Rational(-i), 1});
  return p;
}

inline Rational eval(const Poly& p, const Rational& x) { return p(x); }

/// Unique polynomial of degree < |points| through the points, built from
/// Newton divided differences. Points may be appended in any order.
inline Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  if (points.empty()) throw InputError("interpolation needs at least one point");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first) throw InputError("interpolation: duplicate x-value " + to_string(points[i].first));
  std::vector<Rational> table;
  for (const auto& p : points) table.push_back(p.second);
  std::vector<Rational> newton{table[0]};
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      table[i] = (table[i] - table[i - 1]) / (points[i].first - points[i - level].first);
    }
    newton.push_back(table[level]);
  }
  Poly result = Poly::constant(newton[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * Poly(Basis::monomial, {-points[i].first, 1}) + Poly::constant(newton[i]);
  }
  return result;
}

inline Poly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  return lagrange_interpolate(std::span<const std::pair<Rational, Rational>>(points));
}

inline nlohmann::ordered_json to_json(const Poly& p) {
  nlohmann::ordered_json j;
  j["basis"] = to_string(p.basis());
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  j["coeffs"] = coeffs;
  return j;
}

inline Poly poly_from_json(const nlohmann::ordered_json& j) {
  if (!j.contains("basis") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw InputError("poly json: expected {\"basis\":..., \"coeffs\":[...]}");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw InputError("poly json: coefficients must be decimal strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Poly(parse_basis(j["basis"].get<std::string>()), std::move(coeffs));
}

}  // namespace chromatic
