#pragma once

// Expression language for scalars, register keys, algebra elements and
// morphism scripts.
//
//   element  := term (("+" | "-") term)*
//   term     := "-"? (product ("*" (factor+ | "I"))? | factor+ | "I")
//   factor   := ("I" | "X" | "Y" | "Z") "@" address
//   address  := party ":" register (":" site)? (":" lane)?
//   party    := "A" | "B"
//   register := "q[" width ";" ratio ("," ratio)* "]"
//             | "qx[" width ";" amplitude ("," amplitude)* "]"
//             | "t" slot
//   product  := atom (("*" | "/") atom)*
//   sum      := ("+" | "-")? product (("+" | "-") product)*
//   atom     := number | "i" | "sqrt(" sum ")" | "(" sum ")"
//   number   := digits ("." digits)? ("/" digits)? "i"?
//
// Site is required for q/qx registers and absent for t slots; an omitted lane
// is 0. Y@a is i * (X Z)@a. Ratios and amplitudes inside brackets are full
// sums.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "embz/morphisms.hpp"
#include "embz/pauli.hpp"

namespace embz {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string message, std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

RadicalScalar parse_scalar(std::string_view text);
RegisterHandle parse_register(std::string_view text);
QubitAddress parse_address(std::string_view text);
AlgebraElement parse_element(std::string_view text);
/// An element that is a single word with coefficient 1.
PauliWord parse_word(std::string_view text);
/// `;`-separated `embezzle(key, tS)`, `shift(key, A|B, +1|-1)`,
/// `swap(key, A|B, tS)` statements.
Morphism parse_morphism(std::string_view text);

/// Canonical element text; parse_element(format_element(a)) == a.
std::string format_element(const AlgebraElement& a);

}  // namespace embz
