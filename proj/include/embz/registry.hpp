#pragma once

// Register address space: catalyst registers are named by the Schmidt vector
// they hold, ancilla registers by a slot number.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "embz/exactscalar.hpp"

namespace embz {

enum class KeyMode { Dense, Exact };

/// Ordered nonnegative Schmidt coefficients of sum_i q_i |i>|i> on n qubits
/// per party. Stored as ring amplitudes a_i together with norm_sq = sum a_i^2,
/// i.e. q_i = a_i / sqrt(norm_sq). Dense vectors have norm_sq = 1 and
/// a_i = sqrt(w_i) with rational weights w_i; exact vectors are scaled so the
/// first nonzero amplitude is 1, which keeps q_i q_j = a_i a_j / norm_sq in the
/// ring even when q_i itself is a nested radical.
class SchmidtVector {
 public:
  /// Dense vector from 2^n nonnegative weights proportional to q_i^2.
  static SchmidtVector from_ratios(std::span<const Rational> ratios);
  /// Vector proportional to the given real nonnegative amplitudes. Collapses to
  /// the dense form when every normalized weight is rational.
  static SchmidtVector from_amplitudes(std::span<const RadicalScalar> amplitudes);

  unsigned width() const { return width_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  KeyMode mode() const { return mode_; }
  const std::vector<RadicalScalar>& amplitudes() const { return amplitudes_; }
  const RadicalScalar& norm_sq() const { return norm_sq_; }

  /// q_i * q_j.
  const RadicalScalar& pair_product(std::size_t i, std::size_t j) const {
    return pairs_[i * amplitudes_.size() + j];
  }
  /// q_i^2.
  const RadicalScalar& weight(std::size_t i) const { return pair_product(i, i); }

  /// Reduced coprime integer weights; dense vectors only.
  const std::vector<Rational>& ratios() const { return ratios_; }

  /// `q[n;k_0,...]` (dense, coprime integer weights) or `qx[n;a_0,...]`
  /// (exact, canonical scalar text with first nonzero amplitude 1).
  const std::string& key() const { return key_; }

  friend bool operator==(const SchmidtVector& a, const SchmidtVector& b) { return a.key_ == b.key_; }

 private:
  SchmidtVector() = default;
  void finish();

  unsigned width_ = 0;
  KeyMode mode_ = KeyMode::Dense;
  std::vector<RadicalScalar> amplitudes_;
  RadicalScalar norm_sq_{1};
  std::vector<Rational> ratios_;
  std::vector<RadicalScalar> pairs_;
  std::string key_;
};

SchmidtVector make_schmidt_from_ratios(std::span<const Rational> ratios);
std::string canonical_key(const SchmidtVector& v);

class RegisterKey {
 public:
  struct Catalyst {
    SchmidtVector schmidt;
  };
  struct Ancilla {
    unsigned slot;
  };

  explicit RegisterKey(SchmidtVector v);
  explicit RegisterKey(unsigned slot);

  bool is_catalyst() const { return std::holds_alternative<Catalyst>(kind_); }
  bool is_ancilla() const { return !is_catalyst(); }
  /// Throws DomainError on ancilla keys.
  const SchmidtVector& schmidt() const;
  /// Throws DomainError on catalyst keys.
  unsigned slot() const;
  /// Lane count of a catalyst register. Ancilla widths live in the state.
  unsigned width() const { return schmidt().width(); }

  const std::string& text() const { return text_; }

 private:
  std::variant<Catalyst, Ancilla> kind_;
  std::string text_;
};

using RegisterHandle = std::shared_ptr<const RegisterKey>;

RegisterHandle catalyst_register(const SchmidtVector& v);
RegisterHandle ancilla_register(unsigned slot);

/// Registers are ordered and compared by key text.
inline bool same_register(const RegisterHandle& a, const RegisterHandle& b) {
  return a == b || a->text() == b->text();
}

class SystemLayout {
 public:
  explicit SystemLayout(KeyMode mode) : mode_(mode) {}

  KeyMode mode() const { return mode_; }
  /// Rejects exact-mode vectors under KeyMode::Dense.
  void admit(const SchmidtVector& v) const;
  void add_slot(unsigned slot, unsigned width);
  const std::map<unsigned, unsigned>& ancilla_slots() const { return slots_; }

 private:
  KeyMode mode_;
  std::map<unsigned, unsigned> slots_;
};

}  // namespace embz
