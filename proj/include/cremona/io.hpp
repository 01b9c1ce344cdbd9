// Text formats: action files (conductor, dim, named generator matrices)
// and map files (conductor, degree, three polynomial components).  Field
// elements use the shared `z` grammar of parse_cyclo, with z = zeta_N for
// the declared conductor N.  Writers emit canonical, byte-deterministic
// output.

#pragma once

#include <iosfwd>
#include <string>

#include "cremona/action.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

GroupAction parse_action_text(const std::string& text, long order_bound = 20000);
GroupAction read_action_file(const std::string& path, long order_bound = 20000);
std::string action_to_text(const GroupAction& a);
void write_action_file(const std::string& path, const GroupAction& a);

RationalMap parse_map_text(const std::string& text);
RationalMap read_map_file(const std::string& path);
std::string map_to_text(const RationalMap& f);
void write_map_file(const std::string& path, const RationalMap& f);

std::string hompoly_to_text(const HomPoly& p, long conductor);
HomPoly parse_hompoly(const std::string& text, long conductor);

}  // namespace cremona
