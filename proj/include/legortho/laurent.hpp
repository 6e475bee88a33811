#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace legortho {

/**
 * Finitely supported series in z with possibly negative exponents.
 *
 * Coefficient i of `coefficients()` multiplies z^(min_exponent() + i). The
 * representation is kept trimmed: the first and last stored coefficients are
 * nonzero, and the zero polynomial has no coefficients and min_exponent 0.
 * An ordinary polynomial is a LaurentPoly whose min_exponent is >= 0.
 */
template <typename Scalar> class LaurentPoly {
public:
  using scalar_type = Scalar;

  LaurentPoly() = default;

  LaurentPoly(int min_exponent, std::vector<Scalar> coefficients)
      : min_exponent_(min_exponent), coefficients_(std::move(coefficients)) {
    trim();
  }

  /// Polynomial with coefficients[i] multiplying z^i.
  static LaurentPoly polynomial(std::vector<Scalar> coefficients) {
    return LaurentPoly(0, std::move(coefficients));
  }

  static LaurentPoly monomial(Scalar c, int exponent) {
    return LaurentPoly(exponent, std::vector<Scalar>{std::move(c)});
  }

  static LaurentPoly constant(Scalar c) { return monomial(std::move(c), 0); }

  int min_exponent() const noexcept { return min_exponent_; }

  /// Highest exponent present; -1 for the zero polynomial.
  int degree() const noexcept {
    return min_exponent_ + static_cast<int>(coefficients_.size()) - 1;
  }

  bool is_zero() const noexcept { return coefficients_.empty(); }

  bool is_polynomial() const noexcept {
    return is_zero() || min_exponent_ >= 0;
  }

  const std::vector<Scalar> &coefficients() const noexcept {
    return coefficients_;
  }

  Scalar coeff(int exponent) const {
    const int i = exponent - min_exponent_;
    if (i < 0 || i >= static_cast<int>(coefficients_.size())) {
      return Scalar(0);
    }
    return coefficients_[static_cast<std::size_t>(i)];
  }

  Scalar leading_coefficient() const {
    return is_zero() ? Scalar(0) : coefficients_.back();
  }

  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coefficients_.begin(), coefficients_.end(),
                      [](const Scalar &c) { return !(c == Scalar(0)); }));
  }

  LaurentPoly &operator+=(const LaurentPoly &other) {
    accumulate(other, false);
    return *this;
  }

  LaurentPoly &operator-=(const LaurentPoly &other) {
    accumulate(other, true);
    return *this;
  }

  LaurentPoly &operator*=(const Scalar &s) {
    for (auto &c : coefficients_) {
      c *= s;
    }
    trim();
    return *this;
  }

  LaurentPoly &operator/=(const Scalar &s) {
    for (auto &c : coefficients_) {
      c /= s;
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) {
    return a -= b;
  }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Scalar(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Scalar &s) {
    return a *= s;
  }
  friend LaurentPoly operator*(const Scalar &s, LaurentPoly a) {
    return a *= s;
  }
  friend LaurentPoly operator/(LaurentPoly a, const Scalar &s) {
    return a /= s;
  }

  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<Scalar> out(a.coefficients_.size() + b.coefficients_.size() -
                                1,
                            Scalar(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
      if (a.coefficients_[i] == Scalar(0)) {
        continue;
      }
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
        out[i + j] += a.coefficients_[i] * b.coefficients_[j];
      }
    }
    return LaurentPoly(a.min_exponent_ + b.min_exponent_, std::move(out));
  }

  LaurentPoly &operator*=(const LaurentPoly &other) {
    return *this = *this * other;
  }

  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
    return a.min_exponent_ == b.min_exponent_ &&
           a.coefficients_ == b.coefficients_;
  }

private:
  void trim() {
    const auto nonzero = [](const Scalar &c) { return !(c == Scalar(0)); };
    auto first =
        std::find_if(coefficients_.begin(), coefficients_.end(), nonzero);
    if (first == coefficients_.end()) {
      coefficients_.clear();
      min_exponent_ = 0;
      return;
    }
    auto last =
        std::find_if(coefficients_.rbegin(), coefficients_.rend(), nonzero)
            .base();
    coefficients_.erase(last, coefficients_.end());
    min_exponent_ += static_cast<int>(first - coefficients_.begin());
    coefficients_.erase(coefficients_.begin(), first);
  }

  void accumulate(const LaurentPoly &other, bool subtract) {
    if (other.is_zero()) {
      return;
    }
    if (is_zero()) {
      *this = other;
      if (subtract) {
        *this *= Scalar(-1);
      }
      return;
    }
    const int lo = std::min(min_exponent_, other.min_exponent_);
    const int hi = std::max(degree(), other.degree());
    std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
      out[static_cast<std::size_t>(min_exponent_ - lo) + i] =
          std::move(coefficients_[i]);
    }
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
      auto &slot = out[static_cast<std::size_t>(other.min_exponent_ - lo) + i];
      if (subtract) {
        slot -= other.coefficients_[i];
      } else {
        slot += other.coefficients_[i];
      }
    }
    min_exponent_ = lo;
    coefficients_ = std::move(out);
    trim();
  }

  int min_exponent_ = 0;
  std::vector<Scalar> coefficients_;
};

/// a(z) * z^shift.
template <typename Scalar>
LaurentPoly<Scalar> shift(LaurentPoly<Scalar> a, int exponent) {
  if (a.is_zero()) {
    return a;
  }
  return LaurentPoly<Scalar>(a.min_exponent() + exponent, a.coefficients());
}

/// Term-by-term derivative d/dz.
template <typename Scalar>
LaurentPoly<Scalar> derivative(const LaurentPoly<Scalar> &a) {
  if (a.is_zero()) {
    return a;
  }
  std::vector<Scalar> out;
  out.reserve(a.coefficients().size());
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    const int e = a.min_exponent() + static_cast<int>(i);
    out.push_back(a.coefficients()[i] * Scalar(e));
  }
  return LaurentPoly<Scalar>(a.min_exponent() - 1, std::move(out));
}

/// The substitution z -> 1/z: the coefficient of z^k moves to z^-k.
template <typename Scalar>
LaurentPoly<Scalar> reciprocal_substitution(const LaurentPoly<Scalar> &a) {
  if (a.is_zero()) {
    return a;
  }
  std::vector<Scalar> reversed(a.coefficients().rbegin(),
                               a.coefficients().rend());
  return LaurentPoly<Scalar>(-a.degree(), std::move(reversed));
}

/// p(z^factor): every exponent e becomes factor * e.
template <typename Scalar>
LaurentPoly<Scalar> substitute_power(const LaurentPoly<Scalar> &a,
                                     int factor) {
  if (a.is_zero()) {
    return a;
  }
  const std::size_t step = static_cast<std::size_t>(factor);
  std::vector<Scalar> out((a.coefficients().size() - 1) * step + 1, Scalar(0));
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    out[i * step] = a.coefficients()[i];
  }
  return LaurentPoly<Scalar>(a.min_exponent() * factor, std::move(out));
}

/// Inverse of substitute_power for a series supported on multiples of
/// `factor`; throws if another exponent carries a nonzero coefficient.
template <typename Scalar>
LaurentPoly<Scalar> decimate(const LaurentPoly<Scalar> &a, int factor) {
  if (a.is_zero()) {
    return a;
  }
  std::vector<Scalar> out;
  for (int e = a.min_exponent(); e <= a.degree(); ++e) {
    const bool aligned = e % factor == 0;
    if (!aligned && !(a.coeff(e) == Scalar(0))) {
      throw std::invalid_argument("decimate: support not on the lattice");
    }
  }
  int lo = a.min_exponent();
  while (lo % factor != 0) {
    ++lo;
  }
  for (int e = lo; e <= a.degree(); e += factor) {
    out.push_back(a.coeff(e));
  }
  return LaurentPoly<Scalar>(lo / factor, std::move(out));
}

/// Part of the series with exponents in [lo, hi].
template <typename Scalar>
LaurentPoly<Scalar> truncate(const LaurentPoly<Scalar> &a, int lo, int hi) {
  std::vector<Scalar> out;
  for (int e = lo; e <= hi; ++e) {
    out.push_back(a.coeff(e));
  }
  return LaurentPoly<Scalar>(lo, std::move(out));
}

/**
 * Evaluates a at z by Horner's rule, separately on the nonnegative powers
 * (in z) and on the negative powers (in 1/z).
 */
template <typename Scalar, typename Arg>
auto evaluate(const LaurentPoly<Scalar> &a, const Arg &z)
    -> decltype(Scalar() * Arg()) {
  using Result = decltype(Scalar() * Arg());
  if (a.is_zero()) {
    return Result(0);
  }
  if (a.min_exponent() < 0 && z == Arg(0)) {
    throw std::domain_error("evaluate: negative powers at z = 0");
  }
  Result positive(0);
  for (int e = a.degree(); e >= 0; --e) {
    positive = positive * z + a.coeff(e);
  }
  if (a.min_exponent() >= 0) {
    return positive;
  }
  const Arg inv = Arg(1) / z;
  Result negative(0);
  for (int e = a.min_exponent(); e <= -1; ++e) {
    negative = negative * inv + a.coeff(e);
  }
  return positive + negative * inv;
}

template <typename To, typename From>
LaurentPoly<To> cast(const LaurentPoly<From> &a) {
  std::vector<To> out;
  out.reserve(a.coefficients().size());
  for (const auto &c : a.coefficients()) {
    out.push_back(static_cast<To>(c));
  }
  return LaurentPoly<To>(a.min_exponent(), std::move(out));
}

/// J(z) = (z + 1/z) / 2.
template <typename Scalar> LaurentPoly<Scalar> joukowski() {
  const Scalar half = Scalar(1) / Scalar(2);
  return LaurentPoly<Scalar>(-1, {half, Scalar(0), half});
}

/// p(J(z)) for an ordinary polynomial p.
template <typename Scalar>
LaurentPoly<Scalar> compose_joukowski(const LaurentPoly<Scalar> &p) {
  if (!p.is_polynomial()) {
    throw std::invalid_argument("compose_joukowski: argument has negative "
                                "powers");
  }
  const auto j = joukowski<Scalar>();
  LaurentPoly<Scalar> result;
  for (int e = p.degree(); e >= 0; --e) {
    result = result * j + LaurentPoly<Scalar>::constant(p.coeff(e));
  }
  return result;
}

/// Quotient and remainder of ordinary polynomials, deg(remainder) < deg(b).
template <typename Scalar>
std::pair<LaurentPoly<Scalar>, LaurentPoly<Scalar>>
divide(const LaurentPoly<Scalar> &a, const LaurentPoly<Scalar> &b) {
  if (b.is_zero()) {
    throw std::domain_error("divide: zero divisor");
  }
  if (!a.is_polynomial() || !b.is_polynomial()) {
    throw std::invalid_argument("divide: arguments must be polynomials");
  }
  const int db = b.degree();
  const Scalar lead = b.leading_coefficient();
  std::vector<Scalar> rem(static_cast<std::size_t>(std::max(a.degree(), 0) + 1),
                          Scalar(0));
  for (int e = 0; e <= a.degree(); ++e) {
    rem[static_cast<std::size_t>(e)] = a.coeff(e);
  }
  const int dq = a.degree() - db;
  std::vector<Scalar> quot(static_cast<std::size_t>(std::max(dq, -1) + 1),
                           Scalar(0));
  for (int e = a.degree(); e >= db; --e) {
    const Scalar q = rem[static_cast<std::size_t>(e)] / lead;
    quot[static_cast<std::size_t>(e - db)] = q;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(e - db + i)] -= q * b.coeff(i);
    }
  }
  return {LaurentPoly<Scalar>::polynomial(std::move(quot)),
          LaurentPoly<Scalar>::polynomial(std::move(rem))};
}

} // namespace legortho
