#include "embz/protocol.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <regex>
#include <set>

#include "embz/errors.hpp"

namespace embz {

namespace {

// Exact LHS/RHS functionals for one protocol instance.
struct Instance {
  Morphism morphism;
  ProductState before;
  ProductState after;

  VerificationCase check(const RegisterHandle& target, unsigned slot, const PauliWord& w, Tier tier) const {
    VerificationCase vc;
    vc.target = target;
    vc.slot = slot;
    vc.word = w;
    vc.tier = tier;
    vc.lhs = evaluate(before, apply(morphism, w));
    vc.rhs = evaluate(after, w);
    vc.equal = vc.lhs == vc.rhs;
    return vc;
  }
};

void for_each_exhaustive_word(std::span<const QubitAddress> window, std::size_t max_support,
                              const std::function<void(const PauliWord&)>& fn) {
  static constexpr PauliLetter kLetters[] = {kLetterX, kLetterZ, kLetterXZ};
  const std::size_t k_max = std::min<std::size_t>({max_support, 3, window.size()});
  std::vector<std::size_t> idx;
  std::vector<int> letters;
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      const std::size_t k = idx.size();
      letters.assign(k, 0);
      for (;;) {
        std::vector<PauliWord::Entry> entries;
        entries.reserve(k);
        for (std::size_t t = 0; t < k; ++t) entries.emplace_back(window[idx[t]], kLetters[letters[t]]);
        fn(PauliWord(std::move(entries)));
        std::size_t t = 0;
        while (t < k && letters[t] == 2) letters[t++] = 0;
        if (t == k) break;
        ++letters[t];
      }
      return;
    }
    for (std::size_t i = start; i + remaining <= window.size(); ++i) {
      idx.push_back(i);
      choose(i + 1, remaining - 1);
      idx.pop_back();
    }
  };
  for (std::size_t k = 0; k <= k_max; ++k) choose(0, k);
}

bool touches_ancilla(const PauliWord& w) {
  return std::any_of(w.support().begin(), w.support().end(),
                     [](const PauliWord::Entry& e) { return e.first.reg->is_ancilla(); });
}

void record_case(SuiteReport& r, VerificationCase vc) {
  if (vc.tier == Tier::Exhaustive) {
    ++r.counts.exhaustive;
  } else {
    ++r.counts.random;
  }
  if (!vc.equal) {
    ++r.counts.failed;
    r.pass = false;
    if (!r.first_failure) r.first_failure = vc;
  }
  if (r.params.record == Record::All || !vc.equal) r.cases.push_back(std::move(vc));
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string to_string(Corruption c) {
  switch (c) {
    case Corruption::None: return "none";
    case Corruption::ShiftBackward: return "shift";
    case Corruption::SwapSite: return "swap-site";
    case Corruption::ReversedOrder: return "order";
  }
  return "none";
}

Corruption parse_corruption(const std::string& text) {
  for (Corruption c : {Corruption::None, Corruption::ShiftBackward, Corruption::SwapSite, Corruption::ReversedOrder}) {
    if (to_string(c) == text) return c;
  }
  throw DomainError("unknown corruption '" + text + "' (expected none, shift, swap-site, order)");
}

Morphism protocol_morphism(const RegisterHandle& reg, unsigned slot, Corruption c) {
  std::vector<MorphismStep> steps;
  for (Party p : {Party::Alice, Party::Bob}) {
    switch (c) {
      case Corruption::None:
        steps.push_back(SwapStep{reg, p, slot, 0});
        steps.push_back(ShiftStep{reg, p, 1});
        break;
      case Corruption::ShiftBackward:
        steps.push_back(SwapStep{reg, p, slot, 0});
        steps.push_back(ShiftStep{reg, p, -1});
        break;
      case Corruption::SwapSite:
        steps.push_back(SwapStep{reg, p, slot, 1});
        steps.push_back(ShiftStep{reg, p, 1});
        break;
      case Corruption::ReversedOrder:
        steps.push_back(ShiftStep{reg, p, 1});
        steps.push_back(SwapStep{reg, p, slot, 0});
        break;
    }
  }
  return Morphism(std::move(steps));
}

VerificationCase verify_word(const SchmidtVector& target, unsigned slot, const PauliWord& w, Corruption c) {
  RegisterHandle reg = catalyst_register(target);
  Instance inst{protocol_morphism(reg, slot, c), {}, {}};
  inst.before.assign_zero(slot, target.width());
  inst.after.assign_target(slot, target);
  return inst.check(reg, slot, w, Tier::Exhaustive);
}

std::vector<QubitAddress> suite_window(const RegisterHandle& reg, int radius, unsigned slot, unsigned slot_width) {
  if (radius < 0) throw DomainError("window radius must be nonnegative");
  std::vector<QubitAddress> out;
  RegisterHandle anc = ancilla_register(slot);
  for (Party p : {Party::Alice, Party::Bob}) {
    for (std::int64_t j = -radius; j <= radius + 1; ++j) {
      for (unsigned l = 0; l < reg->width(); ++l) out.push_back(catalyst_address(p, reg, j, l));
    }
    for (unsigned l = 0; l < slot_width; ++l) out.push_back(ancilla_address(p, anc, l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PauliWord> exhaustive_words(std::span<const QubitAddress> window, std::size_t max_support) {
  std::vector<PauliWord> out;
  for_each_exhaustive_word(window, max_support, [&](const PauliWord& w) { out.push_back(w); });
  return out;
}

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SuiteReport verify_suite(const SchmidtVector& target, unsigned slot, const SuiteParams& params) {
  const auto t0 = std::chrono::steady_clock::now();
  RegisterHandle reg = catalyst_register(target);
  Instance inst{protocol_morphism(reg, slot, params.corruption), {}, {}};
  inst.before.assign_zero(slot, target.width());
  inst.after.assign_target(slot, target);

  SuiteReport r;
  r.command = "verify";
  r.params = params;
  r.targets.push_back(target.key() + "->t" + std::to_string(slot));

  const std::vector<QubitAddress> window = suite_window(reg, params.radius, slot, target.width());
  for_each_exhaustive_word(window, params.max_support, [&](const PauliWord& w) {
    record_case(r, inst.check(reg, slot, w, Tier::Exhaustive));
  });
  const std::size_t support = std::min(params.max_support, window.size());
  for (std::size_t i = 0; i < params.samples; ++i) {
    record_case(r, inst.check(reg, slot, random_word(window, support, case_seed(params.seed, i)), Tier::Random));
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

SuiteReport sequential_verify(const std::vector<SequentialTarget>& targets, const SuiteParams& params) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  r.command = "verify-seq";
  r.params = params;

  std::set<unsigned> slots;
  Instance inst;
  std::vector<QubitAddress> window;
  std::vector<RegisterHandle> regs;
  for (const auto& t : targets) {
    if (!slots.insert(t.slot).second) {
      throw DomainError("slot t" + std::to_string(t.slot) + " is used by more than one target");
    }
    RegisterHandle reg = catalyst_register(t.target);
    inst.morphism = inst.morphism.then(protocol_morphism(reg, t.slot, params.corruption));
    inst.before.assign_zero(t.slot, t.target.width());
    inst.after.assign_target(t.slot, t.target);
    std::vector<QubitAddress> part = suite_window(reg, params.radius, t.slot, t.target.width());
    window.insert(window.end(), part.begin(), part.end());
    regs.push_back(reg);
    r.targets.push_back(t.target.key() + "->t" + std::to_string(t.slot));
  }
  std::sort(window.begin(), window.end());
  window.erase(std::unique(window.begin(), window.end()), window.end());
  if (targets.empty()) {
    r.elapsed_ms = ms_since(t0);
    return r;
  }

  auto run = [&](const PauliWord& w, Tier tier) {
    VerificationCase vc = inst.check(regs.front(), targets.front().slot, w, tier);
    if (!touches_ancilla(w)) ++r.counts.catalyst_only;
    record_case(r, std::move(vc));
  };
  for_each_exhaustive_word(window, params.max_support, [&](const PauliWord& w) { run(w, Tier::Exhaustive); });
  const std::size_t support = std::min(params.max_support, window.size());
  for (std::size_t i = 0; i < params.samples; ++i) {
    run(random_word(window, support, case_seed(params.seed, i)), Tier::Random);
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

Rational parse_decimal(const std::string& text) {
  static const std::regex kDecimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  static const std::regex kFraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, kFraction)) {
    mpz_class den(m[2].str(), 10);
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    std::string num = m[1].str();
    if (num[0] == '+') num.erase(0, 1);
    Rational r(mpz_class(num, 10), den);
    r.canonicalize();
    return r;
  }
  if (!std::regex_match(text, m, kDecimal) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw DomainError("not a decimal literal: '" + text + "'");
  }
  const std::string int_part = m[2].str();
  const std::string frac_part = m[3].str();
  mpz_class digits(int_part + frac_part, 10);
  long exponent = -static_cast<long>(frac_part.size());
  if (m[4].matched) exponent += std::stol(m[4].str());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational r = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
  r.canonicalize();
  return m[1].str() == "-" ? Rational(-r) : r;
}

Approximation approximate_target(const std::vector<std::string>& amplitudes, unsigned max_denominator) {
  if (max_denominator < 1) throw DomainError("max denominator must be at least 1");
  std::vector<Rational> p;
  for (const auto& a : amplitudes) {
    p.push_back(parse_decimal(a));
    if (p.back() < 0) throw DomainError("negative amplitude " + a);
  }
  const std::size_t n = p.size();
  if (n < 2 || !std::has_single_bit(n)) throw ShapeError("amplitude count must be 2^n with n >= 1");
  if (std::count_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; }) < 2) {
    throw NotEntangledError("degenerate target: fewer than two nonzero amplitudes");
  }
  Rational total = 0;
  for (const auto& x : p) total += x * x;
  std::vector<Rational> w;
  for (const auto& x : p) w.push_back(Rational(x * x / total));
  const RadicalScalar inv_total(Rational(1 / total));

  std::optional<Approximation> best;
  Rational best_err;
  for (unsigned d = 1; d <= max_denominator; ++d) {
    std::vector<mpz_class> floors;
    mpz_class assigned = 0;
    for (const auto& wi : w) {
      Rational scaled = wi * d;
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      floors.push_back(f);
      assigned += f;
    }
    const std::size_t missing = static_cast<std::size_t>(mpz_class(d - assigned).get_ui());
    // All ways to round `missing` of the entries up. Exhaustive up to 8
    // entries; above that only the largest remainders are rounded up.
    std::vector<std::vector<bool>> choices;
    if (n <= 8) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != missing) continue;
        std::vector<bool> up(n);
        for (std::size_t i = 0; i < n; ++i) up[i] = (mask >> i) & 1;
        choices.push_back(std::move(up));
      }
    } else {
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return w[a] * d - floors[a] > w[b] * d - floors[b];
      });
      std::vector<bool> up(n);
      for (std::size_t i = 0; i < missing; ++i) up[order[i]] = true;
      choices.push_back(std::move(up));
    }

    for (const auto& up : choices) {
      std::vector<Rational> k;
      std::size_t nonzero = 0;
      for (std::size_t i = 0; i < n; ++i) {
        k.emplace_back(floors[i] + (up[i] ? 1 : 0));
        if (k.back() != 0) ++nonzero;
      }
      if (nonzero < 2) continue;
      RadicalScalar overlap;
      Rational err = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Rational ki = k[i] / d;
        ki.canonicalize();
        if (ki != 0) overlap += RadicalScalar(p[i]) * sqrt_of_rational(ki);
        err = std::max<Rational>(err, abs(ki - w[i]));
      }
      RadicalScalar fidelity = overlap * overlap * inv_total;
      bool better = !best;
      if (!better) {
        int c = compare(fidelity, best->fidelity);
        better = c > 0 || (c == 0 && err < best_err);
      }
      if (better) {
        best = Approximation{SchmidtVector::from_ratios(k), k, d, fidelity, p};
        best_err = err;
      }
    }
  }
  if (!best) {
    throw NotEntangledError("no entangled approximation with denominator <= " + std::to_string(max_denominator));
  }
  best->ratios = best->target.ratios();
  return *best;
}

}  // namespace embz
