#include "embz/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "embz/errors.hpp"
#include "embz/oracle.hpp"
#include "embz/parser.hpp"
#include "embz/protocol.hpp"
#include "embz/report.hpp"

namespace embz {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

SchmidtVector target_from_ratios(const std::vector<std::string>& items) {
  std::vector<Rational> ratios;
  for (const auto& t : items) {
    RadicalScalar s = parse_scalar(t);
    if (!s.is_rational()) throw UsageError("ratio '" + t + "' is not rational; use amplitudes for radicals");
    ratios.push_back(s.rational_part().re());
  }
  return SchmidtVector::from_ratios(ratios);
}

SchmidtVector target_from_amplitudes(const std::vector<std::string>& items) {
  std::vector<RadicalScalar> amps;
  for (const auto& t : items) amps.push_back(parse_scalar(t));
  return SchmidtVector::from_amplitudes(amps);
}

SchmidtVector target_from_flags(unsigned width, const std::string& ratios, const std::string& amps) {
  if (ratios.empty() == amps.empty()) throw UsageError("give exactly one of --ratios or --amps");
  std::vector<std::string> items = split_commas(ratios.empty() ? amps : ratios);
  if (width == 0 || width > 16 || items.size() != (std::size_t{1} << width)) {
    throw UsageError("width " + std::to_string(width) + " needs 2^width entries, got " + std::to_string(items.size()));
  }
  return ratios.empty() ? target_from_amplitudes(items) : target_from_ratios(items);
}

std::string json_item_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw UsageError("target entries must be integers or strings, got " + j.dump());
}

std::vector<SequentialTarget> load_targets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open targets file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("targets file " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw UsageError("targets file must hold a JSON array");
  std::vector<SequentialTarget> out;
  for (const auto& item : doc) {
    if (!item.contains("width") || !item.contains("slot")) throw UsageError("target needs width and slot: " + item.dump());
    const unsigned width = item.at("width").get<unsigned>();
    std::vector<std::string> entries;
    const bool exact = item.contains("amplitudes");
    for (const auto& e : item.at(exact ? "amplitudes" : "ratios")) entries.push_back(json_item_text(e));
    if (entries.size() != (std::size_t{1} << width)) throw UsageError("target width mismatch: " + item.dump());
    out.push_back({exact ? target_from_amplitudes(entries) : target_from_ratios(entries), item.at("slot").get<unsigned>()});
  }
  return out;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << j.dump(2) << "\n";
}

void print_summary(std::ostream& out, const SuiteReport& r) {
  out << r.command << " " ;
  for (std::size_t i = 0; i < r.targets.size(); ++i) out << (i ? ", " : "") << r.targets[i];
  out << ": radius " << r.params.radius << ", max support " << r.params.max_support << ", " << r.params.samples
      << " samples, seed " << r.params.seed;
  if (r.params.corruption != Corruption::None) out << ", corruption " << to_string(r.params.corruption);
  out << "\n";
  out << "exhaustive " << r.counts.exhaustive << ", random " << r.counts.random << ", failed " << r.counts.failed;
  if (r.command == "verify-seq") out << ", catalyst-only " << r.counts.catalyst_only;
  out << "\n";
  if (r.first_failure) {
    out << "counterexample: " << r.first_failure->word.text() << "  lhs=" << to_string(r.first_failure->lhs)
        << "  rhs=" << to_string(r.first_failure->rhs) << "\n";
  }
  out << (r.pass ? "PASS" : "FAIL") << " (" << static_cast<long long>(r.elapsed_ms) << " ms)\n";
}

struct SuiteFlags {
  SuiteParams params;
  std::string record = "all";
  std::string corrupt = "none";
  std::string json_path;

  void add(CLI::App* cmd) {
    cmd->add_option("--radius", params.radius, "catalyst sites -radius..radius+1")->capture_default_str();
    cmd->add_option("--max-support", params.max_support, "support bound of random words")->capture_default_str();
    cmd->add_option("--samples", params.samples, "number of seeded random words")->capture_default_str();
    cmd->add_option("--seed", params.seed, "random seed")->capture_default_str();
    cmd->add_option("--record", record, "cases kept in the report: all | failures")->capture_default_str();
    cmd->add_option("--corrupt", corrupt, "negative control: none | shift | swap-site | order")->capture_default_str();
    cmd->add_option("--json", json_path, "write the JSON report here");
  }

  SuiteParams resolve() {
    SuiteParams p = params;
    if (record == "all") {
      p.record = Record::All;
    } else if (record == "failures") {
      p.record = Record::Failures;
    } else {
      throw UsageError("--record must be all or failures");
    }
    p.corruption = parse_corruption(corrupt);
    return p;
  }
};

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of catalytic embezzlement protocols", "embz"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "verify one target against the catalyst");
  unsigned v_width = 1, v_slot = 0;
  std::string v_ratios, v_amps;
  SuiteFlags v_flags;
  verify->add_option("--width", v_width, "qubits per party of the target")->required();
  verify->add_option("--ratios", v_ratios, "comma-separated weights proportional to q_i^2");
  verify->add_option("--amps", v_amps, "comma-separated exact amplitudes, e.g. 1+sqrt(2),1");
  verify->add_option("--slot", v_slot, "ancilla slot receiving the target")->capture_default_str();
  v_flags.add(verify);

  // verify-seq
  auto* seq = app.add_subcommand("verify-seq", "verify several targets embezzled in sequence");
  std::string s_targets;
  SuiteFlags s_flags;
  seq->add_option("--targets", s_targets, "JSON array of {width, ratios|amplitudes, slot}")->required();
  s_flags.add(seq);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate an element in the catalyst state");
  std::string e_expr;
  std::vector<std::string> e_targets, e_zeros;
  eval->add_option("--expr", e_expr, "algebra element")->required();
  eval->add_option("--target-slot", e_targets, "tS=r0,r1,... assigns a target to slot S");
  eval->add_option("--zero-slot", e_zeros, "tS or tS:width assigns |0..0> to slot S");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "cross-check evaluation against an explicit window vector");
  unsigned o_width = 1;
  std::string o_ratios, o_amps, o_json;
  int o_radius = 3;
  std::size_t o_samples = 1000, o_support = 6;
  std::uint64_t o_seed = 42;
  long o_slot = -1;
  oracle->add_option("--width", o_width, "qubits per party")->required();
  oracle->add_option("--ratios", o_ratios, "comma-separated weights");
  oracle->add_option("--amps", o_amps, "comma-separated exact amplitudes");
  oracle->add_option("--radius", o_radius, "window sites -radius..radius+1")->capture_default_str();
  oracle->add_option("--samples", o_samples, "random words")->capture_default_str();
  oracle->add_option("--max-support", o_support, "support bound")->capture_default_str();
  oracle->add_option("--seed", o_seed, "random seed")->capture_default_str();
  oracle->add_option("--slot", o_slot, "also include this slot, holding the same target");
  oracle->add_option("--json", o_json, "write the JSON report here");

  // approx
  auto* approx = app.add_subcommand("approx", "rational approximation of a target");
  std::string a_amps;
  unsigned a_den = 100;
  approx->add_option("--amps", a_amps, "comma-separated decimal amplitudes")->required();
  approx->add_option("--max-den", a_den, "largest common denominator")->capture_default_str();

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      SchmidtVector target = target_from_flags(v_width, v_ratios, v_amps);
      SuiteReport r = verify_suite(target, v_slot, v_flags.resolve());
      print_summary(out, r);
      write_json(v_flags.json_path, to_json(r));
      return r.pass ? kExitPass : kExitFailed;
    }
    if (seq->parsed()) {
      SuiteReport r = sequential_verify(load_targets(s_targets), s_flags.resolve());
      print_summary(out, r);
      write_json(s_flags.json_path, to_json(r));
      return r.pass ? kExitPass : kExitFailed;
    }
    if (eval->parsed()) {
      ProductState state;
      for (const auto& spec : e_targets) {
        auto eq = spec.find('=');
        if (eq == std::string::npos || spec.size() < 2 || spec[0] != 't') {
          throw UsageError("--target-slot expects tS=r0,r1,...");
        }
        const unsigned slot = static_cast<unsigned>(std::stoul(spec.substr(1, eq - 1)));
        state.assign_target(slot, target_from_ratios(split_commas(spec.substr(eq + 1))));
      }
      for (const auto& spec : e_zeros) {
        if (spec.size() < 2 || spec[0] != 't') throw UsageError("--zero-slot expects tS or tS:width");
        auto colon = spec.find(':');
        const unsigned slot = static_cast<unsigned>(std::stoul(spec.substr(1, colon - 1)));
        const unsigned width = colon == std::string::npos ? 1 : static_cast<unsigned>(std::stoul(spec.substr(colon + 1)));
        state.assign_zero(slot, width);
      }
      out << to_string(evaluate(state, parse_element(e_expr))) << "\n";
      return kExitPass;
    }
    if (oracle->parsed()) {
      SchmidtVector target = target_from_flags(o_width, o_ratios, o_amps);
      RegisterHandle reg = catalyst_register(target);
      ProductState state;
      TruncationWindow window{reg, -o_radius, o_radius + 1, {}};
      if (o_radius < 0) throw UsageError("--radius must be nonnegative");
      if (o_slot >= 0) {
        state.assign_target(static_cast<unsigned>(o_slot), target);
        window.include_slots.push_back(static_cast<unsigned>(o_slot));
      }
      const auto t0 = std::chrono::steady_clock::now();
      DenseState dense = build_window_vector(state, window);
      std::vector<QubitAddress> addrs = window_addresses(state, window);
      SuiteReport r;
      r.command = "oracle";
      r.params.radius = o_radius;
      r.params.max_support = o_support;
      r.params.samples = o_samples;
      r.params.seed = o_seed;
      r.targets.push_back(target.key());
      const std::size_t support = std::min(o_support, addrs.size());
      for (std::size_t i = 0; i < o_samples; ++i) {
        PauliWord w = random_word(addrs, support, case_seed(o_seed, i));
        OracleReport rep = oracle_compare(state, w, dense);
        VerificationCase vc{reg, 0, w, rep.symbolic, rep.oracle, rep.equal, Tier::Random};
        ++r.counts.random;
        if (!vc.equal) {
          ++r.counts.failed;
          r.pass = false;
          if (!r.first_failure) r.first_failure = vc;
        }
        r.cases.push_back(std::move(vc));
      }
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      print_summary(out, r);
      write_json(o_json, to_json(r));
      return r.pass ? kExitPass : kExitFailed;
    }
    if (approx->parsed()) {
      Approximation a = approximate_target(split_commas(a_amps), a_den);
      out << "ratios ";
      for (std::size_t i = 0; i < a.ratios.size(); ++i) out << (i ? "," : "") << to_string(a.ratios[i]);
      out << "\ndenominator " << a.denominator << "\nfidelity " << to_string(a.fidelity) << "\n";
      std::ostringstream approx_text;
      approx_text.precision(15);
      approx_text << scalar_to_float(a.fidelity, 15).real();
      out << "fidelity~ " << approx_text.str() << "\nkey " << a.target.key() << "\n";
      return kExitPass;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace embz
