#pragma once

// Product-state functionals on the register lattice.
//
// Every catalyst register carries the same fixed rule: the Alice/Bob pair at
// site j is |0...0>|0...0> for j <= 0 and the register's own Schmidt state
// |phi_q> for j >= 1. Ancilla slots are assigned explicitly.

#include <map>
#include <optional>
#include <span>
#include <variant>

#include "embz/pauli.hpp"

namespace embz {

struct ZeroZero {
  unsigned width = 1;
};

using AncillaAssignment = std::variant<ZeroZero, SchmidtVector>;

unsigned assignment_width(const AncillaAssignment& a);

class ProductState {
 public:
  ProductState& assign_zero(unsigned slot, unsigned width = 1);
  ProductState& assign_target(unsigned slot, const SchmidtVector& v);

  const AncillaAssignment* find(unsigned slot) const;
  const std::map<unsigned, AncillaAssignment>& ancilla() const { return ancilla_; }

 private:
  std::map<unsigned, AncillaAssignment> ancilla_;
};

/// <0...0| P |0...0> for the letters of one party: 1 iff no letter has an X.
RadicalScalar zero_expect(std::span<const PauliLetter> letters);

/// <phi_q| P_A (x) P_B |phi_q>. Zero unless x_A = x_B = x; otherwise
/// sum_j q_{j^x} q_j (-1)^{(z_A ^ z_B).j}. Lane l is bit (n-1-l) of the
/// Schmidt index. Throws ShapeError when lane counts differ from v.width().
RadicalScalar phi_expect(const SchmidtVector& v, std::span<const PauliLetter> letters_a,
                         std::span<const PauliLetter> letters_b);

/// Exact expectation; only the finitely many touched (register, site) blocks
/// contribute. Throws EvaluationError on unassigned slots.
RadicalScalar evaluate(const ProductState& s, const PauliWord& w);
RadicalScalar evaluate(const ProductState& s, const AlgebraElement& a);

}  // namespace embz
