#include "embz/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "embz/errors.hpp"

namespace embz {

namespace {

// Tensors one Schmidt pair onto every basis string of `amps`.
void tensor_pair(std::map<std::uint64_t, RadicalScalar>& amps, const SchmidtVector& v,
                 const std::vector<int>& alice_bits, const std::vector<int>& bob_bits) {
  const unsigned n = v.width();
  std::map<std::uint64_t, RadicalScalar> next;
  for (const auto& [basis, c] : amps) {
    for (std::size_t i = 0; i < v.dimension(); ++i) {
      const RadicalScalar& a = v.amplitudes()[i];
      if (a.is_zero()) continue;
      std::uint64_t b = basis;
      for (unsigned l = 0; l < n; ++l) {
        if ((i >> (n - 1 - l)) & 1) {
          b |= std::uint64_t{1} << alice_bits[l];
          b |= std::uint64_t{1} << bob_bits[l];
        }
      }
      next[b] += c * a;
    }
  }
  amps = std::move(next);
}

}  // namespace

std::size_t qubit_cap() {
  if (const char* env = std::getenv("EMBZ_QUBIT_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw DomainError(std::string("EMBZ_QUBIT_CAP is not a number: ") + env);
    }
  }
  return kDefaultQubitCap;
}

std::vector<QubitAddress> window_addresses(const ProductState& s, const TruncationWindow& w) {
  if (!w.reg || !w.reg->is_catalyst()) throw DomainError("truncation window needs a catalyst register");
  if (!(w.site_lo <= 0 && 0 < w.site_hi)) {
    throw DomainError("truncation window must satisfy site_lo <= 0 < site_hi");
  }
  std::vector<QubitAddress> out;
  for (Party p : {Party::Alice, Party::Bob}) {
    for (std::int64_t j = w.site_lo; j <= w.site_hi; ++j) {
      for (unsigned l = 0; l < w.reg->width(); ++l) out.push_back(catalyst_address(p, w.reg, j, l));
    }
    for (unsigned slot : w.include_slots) {
      const AncillaAssignment* a = s.find(slot);
      if (!a) throw EvaluationError("ancilla slot t" + std::to_string(slot) + " is not assigned in the state");
      auto reg = ancilla_register(slot);
      for (unsigned l = 0; l < assignment_width(*a); ++l) out.push_back(ancilla_address(p, reg, l));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DenseState::DenseState(std::vector<QubitAddress> order, std::map<std::uint64_t, RadicalScalar> amplitudes,
                       RadicalScalar norm_sq)
    : order_(std::move(order)), amplitudes_(std::move(amplitudes)), norm_sq_(std::move(norm_sq)) {}

int DenseState::index_of(const QubitAddress& a) const {
  auto it = std::lower_bound(order_.begin(), order_.end(), a);
  if (it == order_.end() || !(*it == a)) return -1;
  return static_cast<int>(it - order_.begin());
}

RadicalScalar DenseState::amplitude(std::uint64_t basis) const {
  auto it = amplitudes_.find(basis);
  return it == amplitudes_.end() ? RadicalScalar() : it->second;
}

void DenseState::set_amplitude(std::uint64_t basis, const RadicalScalar& value) {
  if (value.is_zero()) {
    amplitudes_.erase(basis);
  } else {
    amplitudes_[basis] = value;
  }
}

bool DenseState::is_normalized() const {
  RadicalScalar total;
  for (const auto& [b, c] : amplitudes_) total += c.conj() * c;
  return total == norm_sq_;
}

DenseState build_window_vector(const ProductState& s, const TruncationWindow& w) {
  std::vector<QubitAddress> order = window_addresses(s, w);
  const std::size_t cap = std::min<std::size_t>(qubit_cap(), 63);
  if (order.size() > cap) {
    throw CapacityError("truncation window has " + std::to_string(order.size()) + " qubits, cap is " +
                        std::to_string(cap));
  }
  auto bit_of = [&](const QubitAddress& a) {
    return static_cast<int>(std::lower_bound(order.begin(), order.end(), a) - order.begin());
  };

  std::map<std::uint64_t, RadicalScalar> amps{{0, RadicalScalar(1)}};
  RadicalScalar norm_sq(1);
  auto add_pair = [&](const SchmidtVector& v, auto&& address_of) {
    std::vector<int> alice, bob;
    for (unsigned l = 0; l < v.width(); ++l) {
      alice.push_back(bit_of(address_of(Party::Alice, l)));
      bob.push_back(bit_of(address_of(Party::Bob, l)));
    }
    tensor_pair(amps, v, alice, bob);
    norm_sq *= v.norm_sq();
  };

  for (std::int64_t j = std::max<std::int64_t>(w.site_lo, 1); j <= w.site_hi; ++j) {
    add_pair(w.reg->schmidt(), [&](Party p, unsigned l) { return catalyst_address(p, w.reg, j, l); });
  }
  for (unsigned slot : w.include_slots) {
    if (const auto* v = std::get_if<SchmidtVector>(s.find(slot))) {
      auto reg = ancilla_register(slot);
      add_pair(*v, [&](Party p, unsigned l) { return ancilla_address(p, reg, l); });
    }
  }
  return DenseState(std::move(order), std::move(amps), std::move(norm_sq));
}

RadicalScalar oracle_expect(const DenseState& v, const PauliWord& w) {
  std::uint64_t xmask = 0, zmask = 0;
  for (const auto& [addr, letter] : w.support()) {
    int k = v.index_of(addr);
    if (k < 0) throw DomainError("word letter at " + addr.text() + " lies outside the truncation window");
    if (letter.x) xmask |= std::uint64_t{1} << k;
    if (letter.z) zmask |= std::uint64_t{1} << k;
  }
  // X^x Z^z |b> = (-1)^{z.b} |b ^ x>
  RadicalScalar sum;
  for (const auto& [b, amp] : v.amplitudes()) {
    auto it = v.amplitudes().find(b ^ xmask);
    if (it == v.amplitudes().end()) continue;
    RadicalScalar term = it->second.conj() * amp;
    if (std::popcount(zmask & b) & 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum / v.norm_sq();
}

OracleReport oracle_compare(const ProductState& s, const PauliWord& w, const DenseState& v) {
  OracleReport r;
  r.symbolic = evaluate(s, w);
  r.oracle = oracle_expect(v, w);
  r.equal = r.symbolic == r.oracle;
  return r;
}

OracleReport oracle_compare(const ProductState& s, const PauliWord& w, const TruncationWindow& window) {
  return oracle_compare(s, w, build_window_vector(s, window));
}

}  // namespace embz
