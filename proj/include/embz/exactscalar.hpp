#pragma once

// Exact arithmetic in the ring of finite sums  sum_m c_m * sqrt(m)  where the
// c_m are Gaussian rationals and the m are squarefree positive integers.
//
// Every value has exactly one representation (sorted keys, reduced
// coefficients, no zero terms), so structural equality is numeric equality.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace embz {

using Rational = mpq_class;

/// Factoring bound used by sqrt_of_rational and friends.
inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000'000ULL;

Rational make_rational(long numerator, long denominator = 1);

/// `p` or `p/q`, sign on the numerator.
std::string to_string(const Rational& r);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(Rational re, Rational im);

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Real part alone when the imaginary part vanishes, otherwise `(a+bi)` with
/// both parts as rationals, e.g. `(0+1i)`, `(1/2-3/4i)`.
std::string to_string(const GaussianRational& g);

class RadicalScalar {
 public:
  using Term = std::pair<std::uint64_t, GaussianRational>;

  RadicalScalar() = default;
  RadicalScalar(long v) : RadicalScalar(GaussianRational(Rational(v))) {}
  RadicalScalar(const Rational& r) : RadicalScalar(GaussianRational(r)) {}
  RadicalScalar(const GaussianRational& g);

  /// c * sqrt(m); m must be squarefree and nonzero.
  static RadicalScalar term(const GaussianRational& c, std::uint64_t m);
  /// sqrt(n) for a nonnegative integer n (square part extracted).
  static RadicalScalar sqrt_int(std::uint64_t n, std::uint64_t factor_bound = kDefaultFactorBound);
  static RadicalScalar i() { return RadicalScalar(GaussianRational::i()); }

  /// Keys ascending, coefficients nonzero.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_real() const;
  /// True if only the m = 1 key is present (or the value is zero).
  bool is_gaussian_rational() const;
  bool is_rational() const { return is_gaussian_rational() && is_real(); }
  /// Coefficient of sqrt(1); zero when absent.
  GaussianRational rational_part() const;

  RadicalScalar conj() const;
  /// Multiplicative inverse via conjugation over each prime dividing a key.
  /// Throws DomainError on zero.
  RadicalScalar inverse() const;

  RadicalScalar& operator+=(const RadicalScalar& o);
  RadicalScalar& operator-=(const RadicalScalar& o);
  RadicalScalar& operator*=(const RadicalScalar& o);
  RadicalScalar& operator/=(const RadicalScalar& o) { return *this *= o.inverse(); }

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
  friend RadicalScalar operator/(RadicalScalar a, const RadicalScalar& b) { return a /= b; }
  friend RadicalScalar operator-(const RadicalScalar& a);

  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

RadicalScalar scalar_add(const RadicalScalar& a, const RadicalScalar& b);
RadicalScalar scalar_mul(const RadicalScalar& a, const RadicalScalar& b);

/// sqrt(p/q) = (1/q) sqrt(pq), with pq split into c^2 * m by trial division.
/// Throws DomainError for r <= 0 and CapacityError when pq > factor_bound.
RadicalScalar sqrt_of_rational(const Rational& r, std::uint64_t factor_bound = kDefaultFactorBound);

/// n = root^2 * squarefree.
struct SquarefreeSplit {
  std::uint64_t root = 1;
  std::uint64_t squarefree = 1;
};
SquarefreeSplit squarefree_decompose(std::uint64_t n, std::uint64_t factor_bound = kDefaultFactorBound);

/// Rational approximation of a scalar; each component is within
/// 10^-digits of the exact value.
struct ScalarApprox {
  Rational re;
  Rational im;
  double real() const { return re.get_d(); }
  double imag() const { return im.get_d(); }
};
ScalarApprox scalar_to_float(const RadicalScalar& a, int digits);

/// Exact sign (-1, 0, +1) of a real scalar, by refining approximations until
/// the error interval excludes zero. Throws DomainError if `a` is not real.
int sign(const RadicalScalar& a);
/// sign(a - b) for real a, b.
int compare(const RadicalScalar& a, const RadicalScalar& b);

/// Canonical text: terms by ascending key joined with `+`; sqrt(1) elided,
/// e.g. `1/3`, `(2/3)*sqrt(2)`, `1+(1)*sqrt(3)`, `(0+1i)`, `0`.
std::string to_string(const RadicalScalar& a);

}  // namespace embz
