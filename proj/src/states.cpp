#include "embz/states.hpp"

#include <bit>
#include <string>
#include <vector>

#include "embz/errors.hpp"

namespace embz {

namespace {

struct Block {
  const RegisterKey* reg = nullptr;
  std::int64_t site = 0;
  std::vector<PauliLetter> alice;
  std::vector<PauliLetter> bob;
};

std::size_t lane_bits(std::span<const PauliLetter> letters, bool take_x) {
  std::size_t bits = 0;
  const std::size_t n = letters.size();
  for (std::size_t l = 0; l < n; ++l) {
    if (take_x ? letters[l].x : letters[l].z) bits |= std::size_t{1} << (n - 1 - l);
  }
  return bits;
}

}  // namespace

unsigned assignment_width(const AncillaAssignment& a) {
  if (auto* z = std::get_if<ZeroZero>(&a)) return z->width;
  return std::get<SchmidtVector>(a).width();
}

ProductState& ProductState::assign_zero(unsigned slot, unsigned width) {
  if (width == 0) throw ShapeError("ancilla slot width must be positive");
  ancilla_.insert_or_assign(slot, ZeroZero{width});
  return *this;
}

ProductState& ProductState::assign_target(unsigned slot, const SchmidtVector& v) {
  ancilla_.insert_or_assign(slot, v);
  return *this;
}

const AncillaAssignment* ProductState::find(unsigned slot) const {
  auto it = ancilla_.find(slot);
  return it == ancilla_.end() ? nullptr : &it->second;
}

RadicalScalar zero_expect(std::span<const PauliLetter> letters) {
  for (const auto& l : letters) {
    if (l.x) return {};
  }
  return RadicalScalar(1);
}

RadicalScalar phi_expect(const SchmidtVector& v, std::span<const PauliLetter> letters_a,
                         std::span<const PauliLetter> letters_b) {
  if (letters_a.size() != v.width() || letters_b.size() != v.width()) {
    throw ShapeError("phi_expect: lane counts " + std::to_string(letters_a.size()) + "/" +
                     std::to_string(letters_b.size()) + " do not match width " + std::to_string(v.width()));
  }
  const std::size_t xa = lane_bits(letters_a, true);
  const std::size_t xb = lane_bits(letters_b, true);
  if (xa != xb) return {};
  const std::size_t zmask = lane_bits(letters_a, false) ^ lane_bits(letters_b, false);
  RadicalScalar sum;
  for (std::size_t j = 0; j < v.dimension(); ++j) {
    const RadicalScalar& p = v.pair_product(j ^ xa, j);
    if (p.is_zero()) continue;
    if (std::popcount(zmask & j) & 1) {
      sum -= p;
    } else {
      sum += p;
    }
  }
  return sum;
}

RadicalScalar evaluate(const ProductState& s, const PauliWord& w) {
  // Blocks keyed by (register text, site); ancilla blocks use site 0.
  std::map<std::pair<std::string, std::int64_t>, Block> blocks;
  for (const auto& [addr, letter] : w.support()) {
    unsigned width;
    if (addr.reg->is_catalyst()) {
      width = addr.reg->width();
    } else {
      const AncillaAssignment* a = s.find(addr.reg->slot());
      if (!a) throw EvaluationError("ancilla slot " + addr.reg->text() + " is not assigned in the state");
      width = assignment_width(*a);
    }
    if (addr.lane >= width) {
      throw ShapeError("lane " + std::to_string(addr.lane) + " outside register " + addr.reg->text() +
                       " of width " + std::to_string(width));
    }
    Block& b = blocks[{addr.reg->text(), addr.site}];
    if (!b.reg) {
      b.reg = addr.reg.get();
      b.site = addr.site;
      b.alice.assign(width, PauliLetter{});
      b.bob.assign(width, PauliLetter{});
    }
    (addr.party == Party::Alice ? b.alice : b.bob)[addr.lane] = letter;
  }

  RadicalScalar value(1);
  for (const auto& [id, b] : blocks) {
    RadicalScalar factor;
    if (b.reg->is_catalyst()) {
      factor = b.site <= 0 ? zero_expect(b.alice) * zero_expect(b.bob)
                           : phi_expect(b.reg->schmidt(), b.alice, b.bob);
    } else {
      const AncillaAssignment& a = *s.find(b.reg->slot());
      if (const auto* v = std::get_if<SchmidtVector>(&a)) {
        factor = phi_expect(*v, b.alice, b.bob);
      } else {
        factor = zero_expect(b.alice) * zero_expect(b.bob);
      }
    }
    if (factor.is_zero()) return {};
    value *= factor;
  }
  return value;
}

RadicalScalar evaluate(const ProductState& s, const AlgebraElement& a) {
  RadicalScalar sum;
  for (const auto& [w, c] : a.terms()) sum += c * evaluate(s, w);
  return sum;
}

}  // namespace embz
