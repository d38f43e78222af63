#include "embz/exactscalar.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "embz/errors.hpp"

namespace embz {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > static_cast<unsigned __int128>(INT64_MAX)) {
    throw CapacityError("radical key overflow while multiplying square roots");
  }
  return static_cast<std::uint64_t>(p);
}

// Sort by key, merge equal keys, drop zeros.
std::vector<RadicalScalar::Term> normalize(std::vector<RadicalScalar::Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<RadicalScalar::Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  if (n > kDefaultFactorBound) {
    throw CapacityError("radical key " + std::to_string(n) + " exceeds the factoring bound");
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// sqrt(p) -> -sqrt(p); fixes every other square root.
RadicalScalar flip_prime(const RadicalScalar& a, std::uint64_t p) {
  RadicalScalar out;
  for (const auto& [m, c] : a.terms()) {
    out += RadicalScalar::term(m % p == 0 ? -c : c, m);
  }
  return out;
}

}  // namespace

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (n == 0) throw DomainError("division by zero");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const GaussianRational& g) {
  if (g.is_real()) return to_string(g.re());
  std::string s = "(" + to_string(g.re());
  s += g.im() > 0 ? "+" : "-";
  s += to_string(Rational(abs(g.im()))) + "i)";
  return s;
}

RadicalScalar::RadicalScalar(const GaussianRational& g) {
  if (!g.is_zero()) terms_.emplace_back(1, g);
}

RadicalScalar RadicalScalar::term(const GaussianRational& c, std::uint64_t m) {
  if (m == 0) throw DomainError("sqrt(0) is not a radical key");
  RadicalScalar s;
  if (!c.is_zero()) s.terms_.emplace_back(m, c);
  return s;
}

RadicalScalar RadicalScalar::sqrt_int(std::uint64_t n, std::uint64_t factor_bound) {
  if (n == 0) return {};
  SquarefreeSplit split = squarefree_decompose(n, factor_bound);
  return term(GaussianRational(Rational(static_cast<unsigned long>(split.root))), split.squarefree);
}

bool RadicalScalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 1 && terms_[0].second == GaussianRational(Rational(1));
}

bool RadicalScalar::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_real(); });
}

bool RadicalScalar::is_gaussian_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
}

GaussianRational RadicalScalar::rational_part() const {
  if (!terms_.empty() && terms_[0].first == 1) return terms_[0].second;
  return {};
}

RadicalScalar RadicalScalar::conj() const {
  RadicalScalar out = *this;
  for (auto& t : out.terms_) t.second = t.second.conj();
  return out;
}

RadicalScalar RadicalScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  std::set<std::uint64_t> primes;
  for (const auto& t : terms_) {
    for (auto p : prime_factors(t.first)) primes.insert(p);
  }
  // cur * flip_p(cur) is fixed by flip_p, hence free of sqrt(p); it stays free
  // of every prime already eliminated because the flips commute.
  RadicalScalar cur = *this;
  RadicalScalar acc(1);
  for (auto p : primes) {
    RadicalScalar f = flip_prime(cur, p);
    acc *= f;
    cur *= f;
  }
  return acc * RadicalScalar(cur.rational_part().inverse());
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
  std::vector<Term> raw = terms_;
  raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
  terms_ = normalize(std::move(raw));
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) { return *this += -o; }

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& o) {
  *this = *this * o;
  return *this;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  std::vector<RadicalScalar::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : b.terms_) {
      // sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)); the cofactors are coprime
      // squarefree numbers, so their product is squarefree.
      std::uint64_t g = std::gcd(m1, m2);
      GaussianRational c = c1 * c2;
      if (g != 1) c *= GaussianRational(Rational(static_cast<unsigned long>(g)));
      raw.emplace_back(checked_mul(m1 / g, m2 / g), std::move(c));
    }
  }
  RadicalScalar out;
  out.terms_ = normalize(std::move(raw));
  return out;
}

RadicalScalar operator-(const RadicalScalar& a) {
  RadicalScalar out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

RadicalScalar scalar_add(const RadicalScalar& a, const RadicalScalar& b) { return a + b; }
RadicalScalar scalar_mul(const RadicalScalar& a, const RadicalScalar& b) { return a * b; }

SquarefreeSplit squarefree_decompose(std::uint64_t n, std::uint64_t factor_bound) {
  if (n == 0) throw DomainError("squarefree decomposition of zero");
  if (n > factor_bound) {
    throw CapacityError("integer " + std::to_string(n) + " exceeds the factoring bound " +
                        std::to_string(factor_bound));
  }
  SquarefreeSplit out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) out.root *= p;
    if (e % 2) out.squarefree *= p;
  }
  out.squarefree *= n;
  return out;
}

RadicalScalar sqrt_of_rational(const Rational& r, std::uint64_t factor_bound) {
  if (r <= 0) throw DomainError("square root of non-positive rational " + to_string(r));
  Rational c = r;
  c.canonicalize();
  mpz_class pq = c.get_num() * c.get_den();
  if (pq > mpz_class(std::to_string(factor_bound))) {
    throw CapacityError("sqrt_of_rational: " + pq.get_str() + " exceeds the factoring bound " +
                        std::to_string(factor_bound));
  }
  SquarefreeSplit split = squarefree_decompose(std::stoull(pq.get_str()), factor_bound);
  Rational coef(mpz_class(std::to_string(split.root)), c.get_den());
  coef.canonicalize();
  return RadicalScalar::term(GaussianRational(coef), split.squarefree);
}

ScalarApprox scalar_to_float(const RadicalScalar& a, int digits) {
  if (digits < 1) throw DomainError("scalar_to_float needs digits >= 1");
  Rational mass = 0;
  for (const auto& [m, c] : a.terms()) mass += abs(c.re()) + abs(c.im());
  mpz_class mass_ceil;
  mpz_cdiv_q(mass_ceil.get_mpz_t(), mass.get_num_mpz_t(), mass.get_den_mpz_t());
  // mass * 10^-k < 10^-digits
  const unsigned long k = static_cast<unsigned long>(digits) + mass_ceil.get_str().size() + 1;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
  const mpz_class scale_sq = scale * scale;

  ScalarApprox out{Rational(0), Rational(0)};
  for (const auto& [m, c] : a.terms()) {
    Rational root;
    if (m == 1) {
      root = 1;
    } else {
      mpz_class s = mpz_class(std::to_string(m)) * scale_sq;
      mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
      root = Rational(s, scale);
      root.canonicalize();
    }
    out.re += c.re() * root;
    out.im += c.im() * root;
  }
  out.re.canonicalize();
  out.im.canonicalize();
  return out;
}

int sign(const RadicalScalar& a) {
  if (!a.is_real()) throw DomainError("sign of a non-real scalar " + to_string(a));
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sgn(a.rational_part().re());
  for (int digits = 8;; digits *= 2) {
    ScalarApprox ap = scalar_to_float(a, digits);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational eps(mpz_class(1), p);
    if (ap.re > eps) return 1;
    if (ap.re < -eps) return -1;
  }
}

int compare(const RadicalScalar& a, const RadicalScalar& b) { return sign(a - b); }

std::string to_string(const RadicalScalar& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    if (!out.empty()) out += "+";
    if (m == 1) {
      out += to_string(c);
    } else if (c.is_real()) {
      out += "(" + to_string(c.re()) + ")*sqrt(" + std::to_string(m) + ")";
    } else {
      out += to_string(c) + "*sqrt(" + std::to_string(m) + ")";
    }
  }
  return out;
}

}  // namespace embz
