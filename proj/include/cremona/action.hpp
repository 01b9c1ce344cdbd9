// A group action: named, matched generator list plus the enumerated
// projective group it generates.  Matched pairs of actions share the
// generator name list, so words in one evaluate in the other.

#pragma once

#include <string>
#include <vector>

#include "cremona/projective.hpp"

namespace cremona {

struct GroupAction {
  std::vector<std::string> gen_names;
  std::vector<Transform> gens;
  long conductor = 1;  // conductor declared by the source (file or catalog)
  std::string note;    // catalog normalization remarks
  FiniteLinearGroup group;
};

inline GroupAction make_action(std::vector<std::string> names,
                               std::vector<Transform> gens,
                               long order_bound = 20000) {
  GroupAction a;
  a.gen_names = std::move(names);
  a.gens = gens;
  a.group = close_group(gens, order_bound);
  a.conductor = a.group.conductor;
  return a;
}

}  // namespace cremona
