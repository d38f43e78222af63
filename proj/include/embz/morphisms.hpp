#pragma once

// *-automorphisms of the register algebra that permute qubit addresses.
// Letters travel unchanged, so every step is sign-free and word products,
// adjoints and the anticommutation parity are preserved exactly.

#include <string>
#include <variant>
#include <vector>

#include "embz/pauli.hpp"

namespace embz {

/// Site j -> j + offset on one party's copy of a catalyst register.
struct ShiftStep {
  RegisterHandle reg;
  Party party = Party::Alice;
  int offset = 1;
};

/// Exchanges (reg, party, site, lane l) with (slot, party, lane l) for every
/// lane of the register. The embezzlement protocol always swaps site 0.
struct SwapStep {
  RegisterHandle reg;
  Party party = Party::Alice;
  unsigned slot = 0;
  std::int64_t site = 0;
};

using MorphismStep = std::variant<ShiftStep, SwapStep>;

/// Steps act on operators in sequence order: apply() feeds every address
/// through steps[0], then steps[1], ...
class Morphism {
 public:
  Morphism() = default;
  explicit Morphism(std::vector<MorphismStep> steps);

  const std::vector<MorphismStep>& steps() const { return steps_; }
  bool is_identity() const { return steps_.empty(); }

  QubitAddress map(const QubitAddress& a) const;

  /// `this` first, then `next`.
  Morphism then(const Morphism& next) const;

  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  std::vector<MorphismStep> steps_;
};

Morphism shift_morphism(const RegisterHandle& reg, Party party, int offset = 1);
Morphism swap_morphism(const RegisterHandle& reg, Party party, unsigned slot);

/// Per party: swap site 0 with the slot, then shift by +1. Matches the
/// operator composition alpha = (shift (x) id) o swap.
Morphism embezzle_morphism(const RegisterHandle& reg, unsigned slot);

PauliWord shift_word(const RegisterHandle& reg, Party party, const PauliWord& w, int offset = 1);
PauliWord swap_word(const RegisterHandle& reg, Party party, unsigned slot, const PauliWord& w);

PauliWord apply(const Morphism& m, const PauliWord& w);
AlgebraElement apply(const Morphism& m, const AlgebraElement& a);

/// Reverse step order, negate shifts; swaps are involutions.
Morphism inverse(const Morphism& m);

/// Script form, e.g. `swap(q[1;1,1], A, t0); shift(q[1;1,1], A, +1)`.
std::string to_string(const Morphism& m);

}  // namespace embz
