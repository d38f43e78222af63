#include "embz/parser.hpp"

#include <cctype>
#include <map>

#include "embz/errors.hpp"

namespace embz {

namespace {

std::string describe(const std::string& message, const SourceSpan& span, const std::vector<std::string>& expected) {
  std::string s = std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message;
  if (!expected.empty()) {
    s += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
    s += ")";
  }
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  void expect_end() {
    if (!at_end()) fail(pos_, pos_ + 1, "unexpected trailing input", {"end of input"});
  }

  // ---- scalars -------------------------------------------------------------

  RadicalScalar sum() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    RadicalScalar acc = product();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      RadicalScalar rhs = product();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  // Stops before a `*` that introduces Pauli factors.
  RadicalScalar product() {
    RadicalScalar acc = atom();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        std::size_t save = pos_++;
        if (at_factor() || bare_identity(false)) {
          pos_ = save;
          return acc;
        }
        acc *= atom();
      } else if (c == '/') {
        std::size_t op = pos_++;
        RadicalScalar d = atom();
        if (d.is_zero()) fail(op, pos_, "division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RadicalScalar atom() {
    skip_ws();
    const std::size_t start = pos_;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '(') {
      ++pos_;
      RadicalScalar inner = sum();
      consume(')', "')'");
      return inner;
    }
    if (text_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      RadicalScalar inner = sum();
      consume(')', "')'");
      if (!inner.is_rational() || inner.rational_part().re() < 0) {
        fail(start, pos_, "sqrt() takes a nonnegative rational argument");
      }
      const Rational r = inner.rational_part().re();
      if (r == 0) return {};
      try {
        return sqrt_of_rational(r);
      } catch (const CapacityError& e) {
        fail(start, pos_, e.what());
      }
    }
    if (c == 'i' && !ident_char(peek(1))) {
      ++pos_;
      return RadicalScalar::i();
    }
    fail(start, start + 1, "expected a scalar", {"number", "i", "sqrt(", "("});
  }

  RadicalScalar number() {
    const std::size_t start = pos_;
    std::string digits = take_digits();
    mpz_class num(digits, 10);
    mpz_class den = 1;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      std::string frac = take_digits();
      num = mpz_class(digits + frac, 10);
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    }
    if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      mpz_class d(take_digits(), 10);
      if (d == 0) fail(start, pos_, "zero denominator");
      den *= d;
    }
    Rational r(num, den);
    r.canonicalize();
    if (peek() == 'i' && !ident_char(peek(1))) {
      ++pos_;
      return RadicalScalar(GaussianRational(Rational(0), r));
    }
    return RadicalScalar(r);
  }

  // ---- registers and addresses ---------------------------------------------

  RegisterHandle reg() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == 't') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(pos_, pos_ + 1, "expected slot number", {"digits"});
      return ancilla_register(static_cast<unsigned>(std::stoul(take_digits())));
    }
    bool exact = false;
    if (text_.substr(pos_, 3) == "qx[") {
      exact = true;
      pos_ += 3;
    } else if (text_.substr(pos_, 2) == "q[") {
      pos_ += 2;
    } else {
      fail(start, start + 1, "expected a register", {"q[", "qx[", "t<slot>"});
    }
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(pos_, pos_ + 1, "expected register width", {"digits"});
    const unsigned long width = std::stoul(take_digits());
    consume(';', "';'");
    std::vector<RadicalScalar> items{sum()};
    for (;;) {
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        items.push_back(sum());
        continue;
      }
      consume(']', "']'");
      break;
    }
    const std::string raw(text_.substr(start, pos_ - start));
    if (auto it = cache_.find(raw); it != cache_.end()) return it->second;
    if (width > 16 || items.size() != (std::size_t{1} << width)) {
      fail(start, pos_, "register of width " + std::to_string(width) + " needs " +
                            (width > 16 ? std::string("fewer lanes") : std::to_string(1UL << width)) + " entries");
    }
    try {
      RegisterHandle h;
      if (exact) {
        h = catalyst_register(SchmidtVector::from_amplitudes(items));
      } else {
        std::vector<Rational> ratios;
        for (const auto& s : items) {
          if (!s.is_rational()) fail(start, pos_, "q[...] ratios must be rational; use qx[...] for radicals");
          ratios.push_back(s.rational_part().re());
        }
        h = catalyst_register(SchmidtVector::from_ratios(ratios));
      }
      cache_.emplace(raw, h);
      return h;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(start, pos_, e.what());
    }
  }

  QubitAddress address() {
    skip_ws();
    const std::size_t start = pos_;
    QubitAddress a;
    char p = peek();
    if (p != 'A' && p != 'B') fail(start, start + 1, "expected a party", {"A", "B"});
    ++pos_;
    a.party = p == 'A' ? Party::Alice : Party::Bob;
    consume(':', "':'");
    a.reg = reg();
    std::vector<long long> numbers;
    while (peek() == ':') {
      ++pos_;
      const std::size_t nstart = pos_;
      bool neg = peek() == '-';
      if (neg || peek() == '+') ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(nstart, pos_ + 1, "expected an integer", {"digits"});
      long long v = std::stoll(take_digits());
      numbers.push_back(neg ? -v : v);
    }
    if (a.reg->is_catalyst()) {
      if (numbers.empty()) fail(start, pos_, "catalyst address needs a site", {"':' site"});
      if (numbers.size() > 2) fail(start, pos_, "too many address components");
      a.site = numbers[0];
      if (numbers.size() == 2) {
        if (numbers[1] < 0 || numbers[1] >= a.reg->width()) fail(start, pos_, "lane outside register width");
        a.lane = static_cast<unsigned>(numbers[1]);
      }
    } else {
      if (numbers.size() > 1) fail(start, pos_, "ancilla slots take a lane only, no site");
      if (!numbers.empty()) {
        if (numbers[0] < 0) fail(start, pos_, "negative lane");
        a.lane = static_cast<unsigned>(numbers[0]);
      }
    }
    return a;
  }

  // ---- elements ------------------------------------------------------------

  AlgebraElement element() {
    AlgebraElement acc;
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    for (;;) {
      AlgebraElement t = term();
      if (negate) t *= RadicalScalar(-1);
      acc += t;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        negate = text_[pos_++] == '-';
        continue;
      }
      return acc;
    }
  }

  AlgebraElement term() {
    skip_ws();
    RadicalScalar coef(1);
    if (!at_factor() && !bare_identity(false)) {
      coef = product();
      skip_ws();
      if (peek() != '*') return AlgebraElement::scalar(coef);
      ++pos_;
      if (!at_factor() && !bare_identity(false)) {
        fail(pos_, pos_ + 1, "expected a Pauli factor", {"I", "I@", "X@", "Y@", "Z@"});
      }
    }
    PauliWord word;
    for (;;) {
      if (!bare_identity()) {
        skip_ws();
        const char letter = text_[pos_];
        pos_ += 1;
        skip_ws();
        ++pos_;  // '@'
        QubitAddress a = address();
        PauliLetter l;
        switch (letter) {
          case 'X': l = kLetterX; break;
          case 'Z': l = kLetterZ; break;
          case 'Y':
            l = kLetterXZ;
            coef *= RadicalScalar::i();
            break;
          default: break;
        }
        if (!l.is_identity()) {
          SignedWord prod = word_mul(word, PauliWord::single(a, l));
          if (prod.sign < 0) coef = -coef;
          word = std::move(prod.word);
        }
      }
      skip_ws();
      if (peek() == '*') {
        std::size_t save = pos_++;
        if (at_factor() || bare_identity(false)) continue;
        pos_ = save;
        break;
      }
      if (!at_factor() && !bare_identity(false)) break;
    }
    return AlgebraElement(word, coef);
  }

  // ---- morphism scripts ----------------------------------------------------

  Morphism script() {
    Morphism m;
    for (;;) {
      m = m.then(statement());
      skip_ws();
      if (peek() == ';') {
        ++pos_;
        if (at_end()) return m;
        continue;
      }
      return m;
    }
  }

  Morphism statement() {
    skip_ws();
    const std::size_t start = pos_;
    std::string name;
    while (std::isalpha(static_cast<unsigned char>(peek()))) name += text_[pos_++];
    consume('(', "'('");
    RegisterHandle r = reg();
    if (!r->is_catalyst()) fail(start, pos_, "morphisms act on catalyst registers");
    consume(',', "','");
    if (name == "embezzle") {
      unsigned slot = slot_ref();
      consume(')', "')'");
      return embezzle_morphism(r, slot);
    }
    if (name != "shift" && name != "swap") fail(start, pos_, "unknown statement '" + name + "'", {"embezzle", "shift", "swap"});
    skip_ws();
    char p = peek();
    if (p != 'A' && p != 'B') fail(pos_, pos_ + 1, "expected a party", {"A", "B"});
    ++pos_;
    const Party party = p == 'A' ? Party::Alice : Party::Bob;
    consume(',', "','");
    if (name == "shift") {
      skip_ws();
      const std::size_t ostart = pos_;
      bool neg = peek() == '-';
      if (neg || peek() == '+') ++pos_;
      if (take_digits() != "1") fail(ostart, pos_, "shift offset must be +1 or -1", {"+1", "-1"});
      consume(')', "')'");
      return shift_morphism(r, party, neg ? -1 : 1);
    }
    unsigned slot = slot_ref();
    std::int64_t site = 0;
    skip_ws();
    if (peek() == ',') {
      ++pos_;
      skip_ws();
      bool neg = peek() == '-';
      if (neg) ++pos_;
      site = std::stoll(take_digits());
      if (neg) site = -site;
    }
    consume(')', "')'");
    return Morphism({SwapStep{r, party, slot, site}});
  }

 private:
  [[noreturn]] void fail(std::size_t start, std::size_t end, const std::string& msg,
                         std::vector<std::string> expected = {}) {
    SourceSpan span;
    span.start = std::min(start, text_.size());
    span.end = std::max(span.start, std::min(end, text_.size()));
    for (std::size_t i = 0; i < span.start; ++i) {
      if (text_[i] == '\n') {
        ++span.line;
        span.column = 1;
      } else {
        ++span.column;
      }
    }
    throw ParseError(span, msg, std::move(expected));
  }

  unsigned slot_ref() {
    skip_ws();
    if (peek() != 't' || !std::isdigit(static_cast<unsigned char>(peek(1)))) {
      fail(pos_, pos_ + 1, "expected an ancilla slot", {"t<slot>"});
    }
    ++pos_;
    return static_cast<unsigned>(std::stoul(take_digits()));
  }

  bool at_factor() {
    skip_ws();
    char c = peek();
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') return false;
    std::size_t j = pos_ + 1;
    while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    return j < text_.size() && text_[j] == '@';
  }

  // "I" on its own is the identity word.
  bool bare_identity(bool consume = true) {
    skip_ws();
    if (peek() != 'I' || ident_char(peek(1))) return false;
    std::size_t j = pos_ + 1;
    while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    if (j < text_.size() && text_[j] == '@') return false;
    if (consume) ++pos_;
    return true;
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string take_digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
    return s;
  }

  void consume(char c, const char* what) {
    skip_ws();
    if (peek() != c) fail(pos_, pos_ + 1, std::string("expected ") + what, {what});
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, RegisterHandle> cache_;
};

}  // namespace

ParseError::ParseError(SourceSpan span, std::string message, std::vector<std::string> expected)
    : std::runtime_error(describe(message, span, expected)),
      span_(span),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

RadicalScalar parse_scalar(std::string_view text) {
  Parser p(text);
  RadicalScalar s = p.sum();
  p.expect_end();
  return s;
}

RegisterHandle parse_register(std::string_view text) {
  Parser p(text);
  RegisterHandle r = p.reg();
  p.expect_end();
  return r;
}

QubitAddress parse_address(std::string_view text) {
  Parser p(text);
  QubitAddress a = p.address();
  p.expect_end();
  return a;
}

AlgebraElement parse_element(std::string_view text) {
  Parser p(text);
  AlgebraElement a = p.element();
  p.expect_end();
  return a;
}

PauliWord parse_word(std::string_view text) {
  AlgebraElement a = parse_element(text);
  if (a.terms().size() != 1 || !a.terms().begin()->second.is_one()) {
    throw ParseError(SourceSpan{0, text.size(), 1, 1}, "expected a single Pauli word with coefficient 1");
  }
  return a.terms().begin()->first;
}

Morphism parse_morphism(std::string_view text) {
  Parser p(text);
  if (p.at_end()) return {};
  Morphism m = p.script();
  p.expect_end();
  return m;
}

std::string format_element(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    if (w.is_identity()) {
      out += "(" + to_string(c) + ")";
    } else if (c.is_one()) {
      out += w.text();
    } else {
      out += "(" + to_string(c) + ")*" + w.text();
    }
  }
  return out;
}

}  // namespace embz
