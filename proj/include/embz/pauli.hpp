#pragma once

// Pauli words X^a Z^b with finite support on addressed qubits, in X-before-Z
// normal form, and finite linear combinations of them.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "embz/exactscalar.hpp"
#include "embz/registry.hpp"

namespace embz {

enum class Party : std::uint8_t { Alice, Bob };

inline char party_char(Party p) { return p == Party::Alice ? 'A' : 'B'; }

/// One qubit: party, register, site (catalyst registers only; 0 for ancilla
/// slots) and lane within the register width.
struct QubitAddress {
  Party party = Party::Alice;
  RegisterHandle reg;
  std::int64_t site = 0;
  unsigned lane = 0;

  /// `A:q[1;1,1]:3`, `B:t0`, lane appended when nonzero.
  std::string text() const;
};

/// Total order (party, register key text, site, lane).
std::strong_ordering operator<=>(const QubitAddress& a, const QubitAddress& b);
bool operator==(const QubitAddress& a, const QubitAddress& b);

QubitAddress catalyst_address(Party party, const RegisterHandle& reg, std::int64_t site, unsigned lane = 0);
QubitAddress ancilla_address(Party party, const RegisterHandle& reg, unsigned lane = 0);

struct PauliLetter {
  bool x = false;
  bool z = false;

  bool is_identity() const { return !x && !z; }
  friend bool operator==(PauliLetter, PauliLetter) = default;
  friend auto operator<=>(PauliLetter a, PauliLetter b) {
    return std::pair{a.x, a.z} <=> std::pair{b.x, b.z};
  }
};

inline constexpr PauliLetter kLetterX{true, false};
inline constexpr PauliLetter kLetterZ{false, true};
inline constexpr PauliLetter kLetterXZ{true, true};

class PauliWord {
 public:
  using Entry = std::pair<QubitAddress, PauliLetter>;

  PauliWord() = default;
  /// Entries may come in any order; duplicates are an error, identities dropped.
  explicit PauliWord(std::vector<Entry> entries);
  static PauliWord single(const QubitAddress& addr, PauliLetter letter);

  /// Sorted by address, identity letters never present.
  const std::vector<Entry>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  bool is_identity() const { return support_.empty(); }
  PauliLetter letter_at(const QubitAddress& addr) const;

  /// Canonical text: `X@A:q[1;1,1]:3 Z@B:q[1;1,1]:3`; XZ prints as `X@a Z@a`;
  /// the identity word prints as `I`.
  std::string text() const;

  friend bool operator==(const PauliWord& a, const PauliWord& b);
  friend std::strong_ordering operator<=>(const PauliWord& a, const PauliWord& b);

 private:
  std::vector<Entry> support_;
};

struct SignedWord {
  int sign = 1;
  PauliWord word;
  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// Parity of sum over shared addresses of z_left(q) * x_right(q).
int sign_parity(const PauliWord& left_z, const PauliWord& right_x);

SignedWord word_mul(const PauliWord& u, const PauliWord& v);
/// (X^x Z^z)^* = Z^z X^x = (-1)^{x.z} X^x Z^z.
SignedWord word_adjoint(const PauliWord& w);

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const PauliWord& w, RadicalScalar coefficient = RadicalScalar(1));
  static AlgebraElement identity() { return AlgebraElement(PauliWord{}); }
  static AlgebraElement scalar(const RadicalScalar& c) { return AlgebraElement(PauliWord{}, c); }

  const std::map<PauliWord, RadicalScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RadicalScalar coefficient(const PauliWord& w) const;

  AlgebraElement adjoint() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const RadicalScalar& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const RadicalScalar& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void accumulate(const PauliWord& w, const RadicalScalar& c);
  std::map<PauliWord, RadicalScalar> terms_;
};

AlgebraElement elem_mul(const AlgebraElement& a, const AlgebraElement& b);

/// Seeded word on `window` with at most `max_support` non-identity letters,
/// each uniform over {X, Z, XZ}. Throws DomainError on an empty window.
PauliWord random_word(std::span<const QubitAddress> window, std::size_t max_support, std::uint64_t seed);

}  // namespace embz
