#include "embz/registry.hpp"

#include <bit>

#include "embz/errors.hpp"

namespace embz {

namespace {

unsigned width_for_length(std::size_t len) {
  if (len < 2 || !std::has_single_bit(len)) {
    throw ShapeError("Schmidt vector length " + std::to_string(len) + " is not 2^n with n >= 1");
  }
  return static_cast<unsigned>(std::countr_zero(len));
}

std::string join_key(const char* prefix, unsigned width, const std::vector<std::string>& items) {
  std::string s = std::string(prefix) + "[" + std::to_string(width) + ";";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ",";
    s += items[i];
  }
  return s + "]";
}

}  // namespace

SchmidtVector SchmidtVector::from_ratios(std::span<const Rational> ratios) {
  SchmidtVector v;
  v.width_ = width_for_length(ratios.size());
  Rational total = 0;
  std::size_t nonzero = 0;
  for (const auto& r : ratios) {
    if (r < 0) throw DomainError("negative Schmidt ratio " + to_string(r));
    if (r != 0) ++nonzero;
    total += r;
  }
  if (nonzero < 2) throw NotEntangledError("target needs at least two nonzero Schmidt coefficients");

  mpz_class den_lcm = 1;
  for (const auto& r : ratios) {
    Rational w = r / total;
    w.canonicalize();
    v.amplitudes_.push_back(w == 0 ? RadicalScalar() : sqrt_of_rational(w));
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), w.get_den_mpz_t());
    v.ratios_.push_back(w);
  }
  mpz_class num_gcd = 0;
  for (auto& w : v.ratios_) {
    w *= den_lcm;
    w.canonicalize();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), w.get_num_mpz_t());
  }
  for (auto& w : v.ratios_) {
    w /= num_gcd;
    w.canonicalize();
  }
  v.mode_ = KeyMode::Dense;
  v.norm_sq_ = RadicalScalar(1);
  v.finish();
  return v;
}

SchmidtVector SchmidtVector::from_amplitudes(std::span<const RadicalScalar> amplitudes) {
  const unsigned width = width_for_length(amplitudes.size());
  std::size_t nonzero = 0;
  const RadicalScalar* first = nullptr;
  for (const auto& a : amplitudes) {
    if (!a.is_real() || sign(a) < 0) {
      throw DomainError("Schmidt amplitude " + to_string(a) + " is not real and nonnegative");
    }
    if (!a.is_zero()) {
      ++nonzero;
      if (!first) first = &a;
    }
  }
  if (nonzero < 2) throw NotEntangledError("target needs at least two nonzero Schmidt coefficients");

  const RadicalScalar scale = first->inverse();
  std::vector<RadicalScalar> scaled;
  RadicalScalar norm_sq;
  for (const auto& a : amplitudes) {
    scaled.push_back(a * scale);
    norm_sq += scaled.back() * scaled.back();
  }
  const RadicalScalar inv_norm = norm_sq.inverse();
  std::vector<Rational> weights;
  for (const auto& a : scaled) {
    RadicalScalar w = a * a * inv_norm;
    if (!w.is_rational()) break;
    weights.push_back(w.rational_part().re());
  }
  if (weights.size() == scaled.size()) return from_ratios(weights);

  SchmidtVector v;
  v.width_ = width;
  v.mode_ = KeyMode::Exact;
  v.amplitudes_ = std::move(scaled);
  v.norm_sq_ = std::move(norm_sq);
  v.finish();
  return v;
}

void SchmidtVector::finish() {
  const std::size_t d = amplitudes_.size();
  const RadicalScalar inv_norm = norm_sq_.inverse();
  pairs_.assign(d * d, RadicalScalar());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      pairs_[i * d + j] = amplitudes_[i].conj() * amplitudes_[j] * inv_norm;
    }
  }
  std::vector<std::string> items;
  if (mode_ == KeyMode::Dense) {
    for (const auto& r : ratios_) items.push_back(to_string(r));
    key_ = join_key("q", width_, items);
  } else {
    for (const auto& a : amplitudes_) items.push_back(to_string(a));
    key_ = join_key("qx", width_, items);
  }
}

SchmidtVector make_schmidt_from_ratios(std::span<const Rational> ratios) {
  return SchmidtVector::from_ratios(ratios);
}

std::string canonical_key(const SchmidtVector& v) { return v.key(); }

RegisterKey::RegisterKey(SchmidtVector v) : kind_(Catalyst{std::move(v)}) {
  text_ = std::get<Catalyst>(kind_).schmidt.key();
}

RegisterKey::RegisterKey(unsigned slot) : kind_(Ancilla{slot}), text_("t" + std::to_string(slot)) {}

const SchmidtVector& RegisterKey::schmidt() const {
  if (auto* c = std::get_if<Catalyst>(&kind_)) return c->schmidt;
  throw DomainError("register " + text_ + " is an ancilla slot, not a catalyst register");
}

unsigned RegisterKey::slot() const {
  if (auto* a = std::get_if<Ancilla>(&kind_)) return a->slot;
  throw DomainError("register " + text_ + " is a catalyst register, not an ancilla slot");
}

RegisterHandle catalyst_register(const SchmidtVector& v) { return std::make_shared<const RegisterKey>(v); }

RegisterHandle ancilla_register(unsigned slot) { return std::make_shared<const RegisterKey>(slot); }

void SystemLayout::admit(const SchmidtVector& v) const {
  if (mode_ == KeyMode::Dense && v.mode() == KeyMode::Exact) {
    throw DomainError("register " + v.key() + " has irrational weights; it needs exact mode");
  }
}

void SystemLayout::add_slot(unsigned slot, unsigned width) {
  if (width == 0) throw ShapeError("ancilla slot width must be positive");
  slots_[slot] = width;
}

}  // namespace embz
