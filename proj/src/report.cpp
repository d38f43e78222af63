#include "embz/report.hpp"

namespace embz {

nlohmann::json to_json(const VerificationCase& c) {
  return {{"word", c.word.text()},
          {"lhs", to_string(c.lhs)},
          {"rhs", to_string(c.rhs)},
          {"equal", c.equal},
          {"tier", c.tier == Tier::Exhaustive ? "exhaustive" : "random"}};
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  nlohmann::json counts = {
      {"exhaustive", r.counts.exhaustive}, {"random", r.counts.random}, {"failed", r.counts.failed}};
  if (r.command == "verify-seq") counts["catalyst_only"] = r.counts.catalyst_only;
  return {{"command", r.command},
          {"params",
           {{"radius", r.params.radius},
            {"max_support", r.params.max_support},
            {"samples", r.params.samples},
            {"record", r.params.record == Record::All ? "all" : "failures"},
            {"corruption", to_string(r.params.corruption)},
            {"targets", r.targets}}},
          {"seed", r.params.seed},
          {"cases", std::move(cases)},
          {"pass", r.pass},
          {"counts", std::move(counts)},
          {"counterexample", r.first_failure ? to_json(*r.first_failure) : nlohmann::json(nullptr)},
          {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace embz
