// Type classification of plane actions (intransitive / transitive
// imprimitive / primitive) and the intransitive invariants: fixed point,
// invariant line, generic line stabilizer C_t with its normal-bundle
// character, and the residual action on the line.

#pragma once

#include "cremona/action.hpp"
#include "cremona/group_table.hpp"

namespace cremona {

struct NotIntransitive : std::runtime_error {
  NotIntransitive() : std::runtime_error("NotIntransitive") {}
};
struct NotClassified : std::runtime_error {
  explicit NotClassified(const std::string& what)
      : std::runtime_error("NotClassified: " + what) {}
};

enum class ActionTypeTag { I, T, P };

struct ActionType {
  ActionTypeTag tag;
  std::vector<Point> fixed_points;   // type I witnesses (all of them)
  std::vector<Point> witness_orbit;  // type T: one orbit of length 3
};

ActionType action_type(const GroupAction& g);

enum class ResidualTag { Cyclic, Dihedral, A4, S4, A5 };
std::string residual_tag_name(ResidualTag t);

struct IntransitiveData {
  Point fixed_point;
  Point line;  // dual coordinates of the invariant line
  std::vector<std::vector<Cyclo>> line_basis;  // two points spanning the line
  long t = 1;               // order of the generic stabilizer C_t
  std::vector<int> c_t_elements;  // element ids in the action's closure
  int c_t_generator = 0;          // element id generating C_t
  long chi = 0;  // chi(generator) = zeta_t^chi, normal/line eigenvalue ratio
  std::vector<Transform> residual;  // matched 2x2 generator images on the line
  ResidualTag residual_tag = ResidualTag::Cyclic;
  long residual_order = 1;
};

// One record per (fixed point, complementary invariant line) choice; a
// single record when the fixed point is unique (nonabelian residual).
std::vector<IntransitiveData> intransitive_data_all(const GroupAction& g);
IntransitiveData intransitive_data(const GroupAction& g);

enum class CompareMode { Strict, UpToAut };

struct P1IsoResult {
  bool isomorphic = false;
  Transform conjugator;       // on P^1, valid when isomorphic
  int automorphism = -1;      // index into automorphisms(...) when UpToAut
};

// Decides whether two matched residual actions on P^1 are isomorphic,
// either with matched generators (Strict) or after twisting by an
// automorphism of the quotient group (UpToAut).
P1IsoResult p1_actions_isomorphic(const std::vector<Transform>& res1,
                                  const std::vector<Transform>& res2,
                                  CompareMode mode);

}  // namespace cremona
