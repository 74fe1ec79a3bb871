#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace crlie {

/// Element of the Gaussian rationals Q(i) with arbitrary-precision parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(int re) : re_(re) {}   // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re) : re_(std::move(re)) {}  // NOLINT
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussRational(long re_num, long re_den, long im_num, long im_den);

  static GaussRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  /// Both parts have denominator 1.
  bool is_gaussian_integer() const;

  GaussRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  GaussRational operator-() const { return {-re_, -im_}; }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  /// Total order (re, then im); only for canonical sorting, not a field order.
  friend bool lex_less(const GaussRational& a, const GaussRational& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
  }

  /// Canonical text: "0", "3/2", "-i", "2/3i", "1/2-3i".
  std::string str() const;
  /// Accepts the canonical forms plus "a+bi" with optional spaces and "*i".
  static GaussRational parse(std::string_view text);

  std::size_t hash() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& x);

inline GaussRational conj(const GaussRational& x) { return x.conj(); }

}  // namespace crlie

template <>
struct std::hash<crlie::GaussRational> {
  std::size_t operator()(const crlie::GaussRational& x) const { return x.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<crlie::GaussRational> : GenericNumTraits<crlie::GaussRational> {
  using Real = crlie::GaussRational;
  using NonInteger = crlie::GaussRational;
  using Nested = crlie::GaussRational;
  using Literal = crlie::GaussRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static Real highest() { return 0; }
  static Real lowest() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
