#pragma once

// Word-by-word verification of the embezzlement identity
//
//   (catalyst (x) |00><00| on the slot)(alpha(w)) == (catalyst (x) |phi><phi|)(w)
//
// with exact scalar equality, for single targets, sequences of targets, and
// rational approximations of arbitrary targets.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "embz/morphisms.hpp"
#include "embz/states.hpp"

namespace embz {

/// Deliberately broken protocol variants used as negative controls.
enum class Corruption {
  None,
  ShiftBackward,  ///< shift by -1 instead of +1
  SwapSite,       ///< swap site 1 instead of site 0
  ReversedOrder,  ///< shift before swap
};

std::string to_string(Corruption c);
/// Accepts `none`, `shift`, `swap-site`, `order`.
Corruption parse_corruption(const std::string& text);

Morphism protocol_morphism(const RegisterHandle& reg, unsigned slot, Corruption c = Corruption::None);

enum class Tier { Exhaustive, Random };

struct VerificationCase {
  RegisterHandle target;
  unsigned slot = 0;
  PauliWord word;
  RadicalScalar lhs;
  RadicalScalar rhs;
  bool equal = false;
  Tier tier = Tier::Exhaustive;
};

VerificationCase verify_word(const SchmidtVector& target, unsigned slot, const PauliWord& w,
                             Corruption c = Corruption::None);

enum class Record { All, Failures };

struct SuiteParams {
  int radius = 3;
  std::size_t max_support = 8;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  Record record = Record::All;
  Corruption corruption = Corruption::None;
};

struct SuiteCounts {
  std::size_t exhaustive = 0;
  std::size_t random = 0;
  std::size_t failed = 0;
  /// Words that touch no ancilla slot (sequential suites only).
  std::size_t catalyst_only = 0;
};

struct SuiteReport {
  std::string command;
  SuiteParams params;
  std::vector<std::string> targets;
  std::vector<VerificationCase> cases;
  std::optional<VerificationCase> first_failure;
  SuiteCounts counts;
  bool pass = true;
  double elapsed_ms = 0;
};

/// Catalyst sites -radius..radius+1 on both parties plus every slot lane.
std::vector<QubitAddress> suite_window(const RegisterHandle& reg, int radius, unsigned slot, unsigned slot_width);

/// Every word with support <= min(max_support, 3) on the window, in a fixed
/// generation order.
std::vector<PauliWord> exhaustive_words(std::span<const QubitAddress> window, std::size_t max_support);

/// Seed of the i-th random case.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

SuiteReport verify_suite(const SchmidtVector& target, unsigned slot, const SuiteParams& params);

struct SequentialTarget {
  SchmidtVector target;
  unsigned slot = 0;
};

/// Embezzles every target into its own slot with one composed morphism.
/// Throws DomainError on repeated slots.
SuiteReport sequential_verify(const std::vector<SequentialTarget>& targets, const SuiteParams& params);

struct Approximation {
  SchmidtVector target;
  std::vector<Rational> ratios;  ///< coprime integer weights of `target`
  unsigned denominator = 0;      ///< common denominator d that produced them
  RadicalScalar fidelity;        ///< (sum p_i q_i)^2 / sum p_i^2
  std::vector<Rational> input;   ///< parsed decimals
};

/// Exact rational value of a decimal literal such as `0.7071067811`, `3/4`, `1e-3`.
Rational parse_decimal(const std::string& text);

/// Best approximation whose weights share a denominator d <= max_denominator:
/// for each d the candidates are the floor/ceil roundings of w_i * d that sum
/// to d; the one with the largest exact fidelity wins (ties: smaller max
/// weight error, then smaller d).
Approximation approximate_target(const std::vector<std::string>& amplitudes, unsigned max_denominator);

}  // namespace embz
