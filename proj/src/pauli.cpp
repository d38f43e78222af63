#include "embz/pauli.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "embz/errors.hpp"

namespace embz {

std::string QubitAddress::text() const {
  std::string s{party_char(party)};
  s += ":" + reg->text();
  if (reg->is_catalyst()) s += ":" + std::to_string(site);
  if (lane != 0) s += ":" + std::to_string(lane);
  return s;
}

std::strong_ordering operator<=>(const QubitAddress& a, const QubitAddress& b) {
  if (auto c = a.party <=> b.party; c != 0) return c;
  if (a.reg != b.reg) {
    if (int c = a.reg->text().compare(b.reg->text()); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  if (auto c = a.site <=> b.site; c != 0) return c;
  return a.lane <=> b.lane;
}

bool operator==(const QubitAddress& a, const QubitAddress& b) { return (a <=> b) == 0; }

QubitAddress catalyst_address(Party party, const RegisterHandle& reg, std::int64_t site, unsigned lane) {
  if (!reg->is_catalyst()) throw DomainError("catalyst address on ancilla register " + reg->text());
  if (lane >= reg->width()) {
    throw ShapeError("lane " + std::to_string(lane) + " outside register " + reg->text());
  }
  return {party, reg, site, lane};
}

QubitAddress ancilla_address(Party party, const RegisterHandle& reg, unsigned lane) {
  if (!reg->is_ancilla()) throw DomainError("ancilla address on catalyst register " + reg->text());
  return {party, reg, 0, lane};
}

PauliWord::PauliWord(std::vector<Entry> entries) {
  std::erase_if(entries, [](const Entry& e) { return e.second.is_identity(); });
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].first == entries[i].first) {
      throw DomainError("address " + entries[i].first.text() + " appears twice in one word");
    }
  }
  support_ = std::move(entries);
}

PauliWord PauliWord::single(const QubitAddress& addr, PauliLetter letter) {
  return PauliWord(std::vector<Entry>{{addr, letter}});
}

PauliLetter PauliWord::letter_at(const QubitAddress& addr) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), addr,
                             [](const Entry& e, const QubitAddress& a) { return e.first < a; });
  if (it != support_.end() && it->first == addr) return it->second;
  return {};
}

std::string PauliWord::text() const {
  if (support_.empty()) return "I";
  std::string s;
  for (const auto& [addr, letter] : support_) {
    const std::string a = addr.text();
    if (letter.x) s += (s.empty() ? "" : " ") + std::string("X@") + a;
    if (letter.z) s += (s.empty() ? "" : " ") + std::string("Z@") + a;
  }
  return s;
}

bool operator==(const PauliWord& a, const PauliWord& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const PauliWord& a, const PauliWord& b) {
  const std::size_t n = std::min(a.support_.size(), b.support_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.support_[i].first <=> b.support_[i].first; c != 0) return c;
    if (auto c = a.support_[i].second <=> b.support_[i].second; c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return a.support_.size() <=> b.support_.size();
}

int sign_parity(const PauliWord& left_z, const PauliWord& right_x) {
  int parity = 0;
  auto i = left_z.support().begin();
  auto j = right_x.support().begin();
  while (i != left_z.support().end() && j != right_x.support().end()) {
    auto c = i->first <=> j->first;
    if (c < 0) {
      ++i;
    } else if (c > 0) {
      ++j;
    } else {
      parity ^= static_cast<int>(i->second.z && j->second.x);
      ++i;
      ++j;
    }
  }
  return parity;
}

SignedWord word_mul(const PauliWord& u, const PauliWord& v) {
  // X^a Z^b X^c Z^d = (-1)^{f(b,c)} X^{a+c} Z^{b+d}
  std::vector<PauliWord::Entry> out;
  out.reserve(u.size() + v.size());
  int parity = 0;
  auto i = u.support().begin();
  auto j = v.support().begin();
  const auto ie = u.support().end();
  const auto je = v.support().end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == ie || j->first < i->first) {
      out.push_back(*j++);
    } else {
      parity ^= static_cast<int>(i->second.z && j->second.x);
      PauliLetter l{i->second.x != j->second.x, i->second.z != j->second.z};
      if (!l.is_identity()) out.emplace_back(i->first, l);
      ++i;
      ++j;
    }
  }
  SignedWord r;
  r.sign = parity ? -1 : 1;
  r.word = PauliWord(std::move(out));
  return r;
}

SignedWord word_adjoint(const PauliWord& w) {
  int parity = 0;
  for (const auto& [addr, l] : w.support()) parity ^= static_cast<int>(l.x && l.z);
  return {parity ? -1 : 1, w};
}

AlgebraElement::AlgebraElement(const PauliWord& w, RadicalScalar coefficient) {
  accumulate(w, coefficient);
}

void AlgebraElement::accumulate(const PauliWord& w, const RadicalScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RadicalScalar AlgebraElement::coefficient(const PauliWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RadicalScalar() : it->second;
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement out;
  for (const auto& [w, c] : terms_) {
    SignedWord a = word_adjoint(w);
    out.accumulate(a.word, a.sign > 0 ? c.conj() : -c.conj());
  }
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) accumulate(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) accumulate(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const RadicalScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      SignedWord p = word_mul(u, v);
      RadicalScalar c = cu * cv;
      out.accumulate(p.word, p.sign > 0 ? c : -c);
    }
  }
  return out;
}

AlgebraElement elem_mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

PauliWord random_word(std::span<const QubitAddress> window, std::size_t max_support, std::uint64_t seed) {
  if (window.empty()) throw DomainError("random_word needs a non-empty window");
  if (max_support > window.size()) {
    throw DomainError("max_support " + std::to_string(max_support) + " exceeds window size " +
                      std::to_string(window.size()));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(0, max_support);
  std::uniform_int_distribution<int> letter_dist(0, 2);
  const std::size_t k = size_dist(rng);
  std::vector<std::size_t> idx(window.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<PauliWord::Entry> entries;
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
    std::swap(idx[i], idx[pick(rng)]);
    static constexpr PauliLetter kLetters[] = {kLetterX, kLetterZ, kLetterXZ};
    entries.emplace_back(window[idx[i]], kLetters[letter_dist(rng)]);
  }
  return PauliWord(std::move(entries));
}

}  // namespace embz
