#include "embz/morphisms.hpp"

#include "embz/errors.hpp"

namespace embz {

namespace {

void require_catalyst(const RegisterHandle& reg) {
  if (!reg || !reg->is_catalyst()) {
    throw DomainError("shift/swap need a catalyst register, got " + (reg ? reg->text() : std::string("null")));
  }
}

QubitAddress step_map(const ShiftStep& s, QubitAddress a) {
  if (a.party == s.party && same_register(a.reg, s.reg)) a.site += s.offset;
  return a;
}

QubitAddress step_map(const SwapStep& s, QubitAddress a) {
  if (a.party != s.party) return a;
  if (same_register(a.reg, s.reg) && a.site == s.site) {
    a.reg = ancilla_register(s.slot);
    a.site = 0;
    return a;
  }
  if (a.reg->is_ancilla() && a.reg->slot() == s.slot) {
    if (a.lane >= s.reg->width()) {
      throw ShapeError("swap: ancilla lane " + std::to_string(a.lane) + " exceeds width of " + s.reg->text());
    }
    a.reg = s.reg;
    a.site = s.site;
  }
  return a;
}

bool same_step(const MorphismStep& x, const MorphismStep& y) {
  if (x.index() != y.index()) return false;
  if (auto* a = std::get_if<ShiftStep>(&x)) {
    const auto& b = std::get<ShiftStep>(y);
    return same_register(a->reg, b.reg) && a->party == b.party && a->offset == b.offset;
  }
  const auto& a = std::get<SwapStep>(x);
  const auto& b = std::get<SwapStep>(y);
  return same_register(a.reg, b.reg) && a.party == b.party && a.slot == b.slot && a.site == b.site;
}

}  // namespace

Morphism::Morphism(std::vector<MorphismStep> steps) : steps_(std::move(steps)) {
  for (const auto& s : steps_) {
    std::visit([](const auto& step) { require_catalyst(step.reg); }, s);
  }
}

QubitAddress Morphism::map(const QubitAddress& a) const {
  QubitAddress out = a;
  for (const auto& s : steps_) {
    out = std::visit([&](const auto& step) { return step_map(step, out); }, s);
  }
  return out;
}

Morphism Morphism::then(const Morphism& next) const {
  std::vector<MorphismStep> steps = steps_;
  steps.insert(steps.end(), next.steps_.begin(), next.steps_.end());
  return Morphism(std::move(steps));
}

bool operator==(const Morphism& a, const Morphism& b) {
  if (a.steps_.size() != b.steps_.size()) return false;
  for (std::size_t i = 0; i < a.steps_.size(); ++i) {
    if (!same_step(a.steps_[i], b.steps_[i])) return false;
  }
  return true;
}

Morphism shift_morphism(const RegisterHandle& reg, Party party, int offset) {
  return Morphism({ShiftStep{reg, party, offset}});
}

Morphism swap_morphism(const RegisterHandle& reg, Party party, unsigned slot) {
  return Morphism({SwapStep{reg, party, slot, 0}});
}

Morphism embezzle_morphism(const RegisterHandle& reg, unsigned slot) {
  return Morphism({SwapStep{reg, Party::Alice, slot, 0}, ShiftStep{reg, Party::Alice, 1},
                   SwapStep{reg, Party::Bob, slot, 0}, ShiftStep{reg, Party::Bob, 1}});
}

PauliWord shift_word(const RegisterHandle& reg, Party party, const PauliWord& w, int offset) {
  return apply(shift_morphism(reg, party, offset), w);
}

PauliWord swap_word(const RegisterHandle& reg, Party party, unsigned slot, const PauliWord& w) {
  return apply(swap_morphism(reg, party, slot), w);
}

PauliWord apply(const Morphism& m, const PauliWord& w) {
  if (m.is_identity()) return w;
  std::vector<PauliWord::Entry> entries;
  entries.reserve(w.size());
  for (const auto& [addr, letter] : w.support()) entries.emplace_back(m.map(addr), letter);
  return PauliWord(std::move(entries));
}

AlgebraElement apply(const Morphism& m, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [w, c] : a.terms()) out += AlgebraElement(apply(m, w), c);
  return out;
}

Morphism inverse(const Morphism& m) {
  std::vector<MorphismStep> steps;
  for (auto it = m.steps().rbegin(); it != m.steps().rend(); ++it) {
    MorphismStep s = *it;
    if (auto* shift = std::get_if<ShiftStep>(&s)) shift->offset = -shift->offset;
    steps.push_back(std::move(s));
  }
  return Morphism(std::move(steps));
}

std::string to_string(const Morphism& m) {
  std::string out;
  for (const auto& s : m.steps()) {
    if (!out.empty()) out += "; ";
    if (auto* shift = std::get_if<ShiftStep>(&s)) {
      out += "shift(" + shift->reg->text() + ", " + party_char(shift->party) + ", " +
             (shift->offset >= 0 ? "+" : "") + std::to_string(shift->offset) + ")";
    } else {
      const auto& swap = std::get<SwapStep>(s);
      out += "swap(" + swap.reg->text() + ", " + party_char(swap.party) + ", t" + std::to_string(swap.slot);
      if (swap.site != 0) out += ", " + std::to_string(swap.site);
      out += ")";
    }
  }
  return out;
}

}  // namespace embz
