// Incompressible Burnside classes of intransitive actions: the two symbols
// contributed by the invariant line, (C_t, Gbar acting on k(l), (chi)) and
// its (-chi) partner, kept only when the residual group is noncyclic.
// Classes of matched actions are compared strictly or up to an
// automorphism of the abstract group.

#pragma once

#include <map>

#include "cremona/action.hpp"
#include "cremona/classify.hpp"
#include "cremona/group_table.hpp"

namespace cremona {

struct NotApplicable : std::runtime_error {
  explicit NotApplicable(const std::string& what)
      : std::runtime_error("NotApplicable: " + what) {}
};

struct BurnsideSymbol {
  std::vector<int> stabilizer;  // element ids of C_t in the action's closure
  int generator = 0;            // chosen generator of C_t
  long t = 1;
  long weight = 0;  // chi exponent mod t on the chosen generator
  // unordered eigenvalue-ratio pair on P^1 for every abstract element,
  // used as the fast residual-action fingerprint
  std::vector<std::string> residual_fingerprint;
};

struct BurnsideClass {
  std::vector<BurnsideSymbol> symbols;  // 0 or 2 entries, (chi) and (-chi)
  // residual images of every abstract element (by element id), used for
  // the confirming conjugator search and for automorphism twists
  std::vector<Transform> residual_by_element;
  std::vector<int> generator_ids;  // abstract ids of the action's generators
  long group_order = 0;
  GroupTable table;  // abstract group with words, for transport and twists
  ResidualTag residual_tag = ResidualTag::Cyclic;
  long residual_order = 1;
};

// The incompressible class of an intransitive action with t >= 2; an empty
// class when the residual is cyclic.  NotApplicable when t <= 1 or the
// action is not intransitive.
BurnsideClass burnside_class(const GroupAction& g);

// Equality in Burn_2^inc for matched actions of one abstract group: equal
// stabilizer subgroups, residual actions isomorphic (fingerprint filter
// plus conjugator confirmation), and weights equal up to simultaneous sign.
bool classes_equal(const BurnsideClass& c1, const BurnsideClass& c2,
                   CompareMode mode);

std::string class_to_text(const BurnsideClass& c);

}  // namespace cremona
