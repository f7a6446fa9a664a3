#pragma once

// Graphviz rendering of a state's orderings.
//
// One node per world: the id is the valuation bitstring (atoms()[0]
// first), the label the signed atom list ("f ~c w"). One edge per
// non-reflexive relation pair, drawn from the dominated world to the
// dominating world, so arrows point toward the better/more normal world.
// Worlds in the deliberation subset get peripheries=2. Node and edge
// order is fixed (ascending world index, then target index), so output
// is byte-deterministic.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include "deon/state.hpp"

namespace deon {

enum class RelationKind { Ideality, Normality };

inline std::string world_bitstring(World w, const Vocabulary& vocab) {
  std::string out;
  for (std::size_t i = 0; i < vocab.size(); ++i)
    out += ((w.index >> i) & 1) ? '1' : '0';
  return out;
}

inline std::string world_label(World w, const Vocabulary& vocab) {
  std::string out;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (i) out += ' ';
    if (!((w.index >> i) & 1)) out += '~';
    out += vocab.name(i);
  }
  return out;
}

inline void export_dot(const DeonticState& s, RelationKind which, std::ostream& out) {
  const Relation& rel = which == RelationKind::Ideality ? s.ideality : s.normality;
  out << "digraph " << (which == RelationKind::Ideality ? "ideality" : "normality") << " {\n";
  std::size_t n = s.world_count();
  for (std::uint32_t w = 0; w < n; ++w) {
    out << "  \"" << world_bitstring(World{w}, *s.vocab) << "\" [label=\""
        << world_label(World{w}, *s.vocab) << "\"";
    if (s.wstar.test(w)) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::uint32_t dominated = 0; dominated < n; ++dominated)
    for (std::uint32_t dominating = 0; dominating < n; ++dominating) {
      if (dominated == dominating) continue;
      if (!rel.contains(dominating, dominated)) continue;
      out << "  \"" << world_bitstring(World{dominated}, *s.vocab) << "\" -> \""
          << world_bitstring(World{dominating}, *s.vocab) << "\";\n";
    }
  out << "}\n";
}

inline std::string export_dot(const DeonticState& s, RelationKind which) {
  std::ostringstream out;
  export_dot(s, which, out);
  return out.str();
}

}  // namespace deon
