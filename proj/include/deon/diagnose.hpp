#pragma once

// Violation-versus-exception diagnosis.
//
// Atoms are split into parameters (outside the agent's control) and
// decision variables. A state is a violation of a duty proper when every
// most normal world that can still be realized is dominated by a strictly
// better world that can no longer be realized, is at least as normal, and
// agrees with it on all parameters. Facts that merely moved deliberation
// into an exceptional context produce no such witness.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deon/errors.hpp"
#include "deon/formula.hpp"
#include "deon/state.hpp"
#include "deon/worlds.hpp"

namespace deon {

struct AtomPartition {
  std::vector<std::string> parameters;
  std::vector<std::string> decision_variables;

  // Builds the partition from the parameter list; every other vocabulary
  // atom becomes a decision variable.
  static AtomPartition with_parameters(const Vocabulary& vocab,
                                       const std::vector<std::string>& params) {
    AtomPartition part;
    for (const auto& p : params) {
      if (!vocab.index_of(p)) throw Error("parameter '" + p + "' is not a vocabulary atom");
      for (const auto& q : part.parameters)
        if (q == p) throw Error("duplicate parameter '" + p + "'");
      part.parameters.push_back(p);
    }
    for (const auto& a : vocab.atoms()) {
      bool is_param = false;
      for (const auto& p : part.parameters)
        if (p == a) is_param = true;
      if (!is_param) part.decision_variables.push_back(a);
    }
    return part;
  }

  // Bitmask of parameter atom positions.
  std::uint32_t parameter_mask(const Vocabulary& vocab) const {
    std::uint32_t mask = 0;
    for (const auto& p : parameters) {
      auto i = vocab.index_of(p);
      if (!i) throw Error("parameter '" + p + "' is not a vocabulary atom");
      mask |= std::uint32_t{1} << *i;
    }
    return mask;
  }
};

// Strict ideality dominance: w_good is at least as ideal as w_bad and not
// conversely.
inline bool strictly_better(const DeonticState& s, World w_good, World w_bad) {
  return s.ideality.contains(w_good.index, w_bad.index) &&
         !s.ideality.contains(w_bad.index, w_good.index);
}

struct DiagnosisReport {
  bool violation = false;
  // One (realizable most normal world, lost better world) pair per most
  // normal realizable world when the verdict is positive.
  std::vector<std::pair<World, World>> witnesses;
  // A most normal realizable world with no qualifying witness when the
  // verdict is negative.
  std::optional<World> unwitnessed;
};

inline DiagnosisReport violation_proper(const DeonticState& s, const AtomPartition& part) {
  if (s.wstar.empty())
    throw AbsurdStateError("diagnosis needs a realizable world: the deliberation set is empty");

  std::uint32_t params = part.parameter_mask(*s.vocab);
  WorldSet realizable_minimal = most_normal(s, s.wstar);
  WorldSet lost = s.wstar.complement();

  DiagnosisReport report;
  report.violation = true;
  for (std::uint32_t w : realizable_minimal.indices()) {
    std::optional<World> witness;
    for (std::uint32_t v : lost.indices()) {
      if ((v ^ w) & params) continue;  // must agree on all parameters
      if (!s.normality.contains(v, w)) continue;
      if (!strictly_better(s, World{v}, World{w})) continue;
      witness = World{v};
      break;
    }
    if (!witness) {
      report.violation = false;
      report.witnesses.clear();
      report.unwitnessed = World{w};
      return report;
    }
    report.witnesses.emplace_back(World{w}, *witness);
  }
  return report;
}

}  // namespace deon
