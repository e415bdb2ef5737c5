#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qlc {

/// Exact element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept in lowest terms with positive
/// denominators. Values are immutable from the outside; arithmetic returns
/// new values.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I v) : re_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);
  Scalar(long num, long den) : re_(num, den) { re_.canonicalize(); }

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses "a/b", "a/b+c/d*i", "c/d*i", "i", "-i", "3+4i".
  static Scalar parse(std::string_view text);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Total order (real part first, then imaginary part) used only to make
  /// outputs deterministic; it is not a field order.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Canonical serialization: "a/b", "c/d*i" or "a/b+c/d*i"; integers drop "/1".
  std::string str() const;

  /// Approximate value, for numeric root isolation only.
  double re_approx() const { return re_.get_d(); }
  double im_approx() const { return im_.get_d(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Square root in Q(i) if one exists (the root with nonnegative real part,
/// or positive imaginary part when the real part is zero).
std::optional<Scalar> exact_sqrt(const Scalar& s);

inline Scalar unit_like(const Scalar&) { return Scalar(1); }

}  // namespace qlc
