#pragma once

// Finite-window cross-check: writes the product state out as an explicit
// (sparse) state vector over a window of sites and evaluates Pauli words by
// their action on basis strings. Shares no code path with states::evaluate.

#include <cstdint>
#include <map>
#include <vector>

#include "embz/states.hpp"

namespace embz {

inline constexpr std::size_t kDefaultQubitCap = 24;

/// EMBZ_QUBIT_CAP if set, otherwise kDefaultQubitCap.
std::size_t qubit_cap();

struct TruncationWindow {
  RegisterHandle reg;
  std::int64_t site_lo = 0;
  std::int64_t site_hi = 1;
  std::vector<unsigned> include_slots;
};

/// Window qubits in address order: both parties, sites site_lo..site_hi, all
/// lanes, plus every lane of each included slot (width from `s`).
std::vector<QubitAddress> window_addresses(const ProductState& s, const TruncationWindow& w);

class DenseState {
 public:
  DenseState(std::vector<QubitAddress> order, std::map<std::uint64_t, RadicalScalar> amplitudes,
             RadicalScalar norm_sq);

  /// Bit k of a basis string is window qubit order()[k].
  const std::vector<QubitAddress>& order() const { return order_; }
  const std::map<std::uint64_t, RadicalScalar>& amplitudes() const { return amplitudes_; }
  /// The state is amplitudes / sqrt(norm_sq).
  const RadicalScalar& norm_sq() const { return norm_sq_; }

  /// Bit position of an address, or -1 when outside the window.
  int index_of(const QubitAddress& a) const;
  RadicalScalar amplitude(std::uint64_t basis) const;
  /// Overwrites one amplitude; used to build negative controls.
  void set_amplitude(std::uint64_t basis, const RadicalScalar& value);
  /// sum |amplitude|^2 == norm_sq.
  bool is_normalized() const;

 private:
  std::vector<QubitAddress> order_;
  std::map<std::uint64_t, RadicalScalar> amplitudes_;
  RadicalScalar norm_sq_;
};

/// Throws CapacityError above qubit_cap(), DomainError on a malformed window,
/// EvaluationError on unassigned slots.
DenseState build_window_vector(const ProductState& s, const TruncationWindow& w);

/// sum_b conj(amp_{b^x}) (-1)^{z.b} amp_b / norm_sq. Throws DomainError when
/// the word leaves the window.
RadicalScalar oracle_expect(const DenseState& v, const PauliWord& w);

struct OracleReport {
  RadicalScalar symbolic;
  RadicalScalar oracle;
  bool equal = false;
};

OracleReport oracle_compare(const ProductState& s, const PauliWord& w, const TruncationWindow& window);
OracleReport oracle_compare(const ProductState& s, const PauliWord& w, const DenseState& v);

}  // namespace embz
