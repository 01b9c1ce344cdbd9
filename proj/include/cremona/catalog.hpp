// Constructors for the classified subgroup families: the transitive
// imprimitive families, the intransitive families with their weight
// parameters, and the six primitive groups (bundled as action data files).
// Also the normalizer-finiteness classifier.

#pragma once

#include <optional>

#include "cremona/action.hpp"

namespace cremona {

enum class Family {
  IMPRIM_CN2_C3,
  IMPRIM_CN2_S3,
  IMPRIM_CNCNR_C3,
  IMPRIM_CNCN3_S3,
  INTR_CYCLIC,
  INTR_DN_ODD,
  INTR_DN_EVEN_A,
  INTR_DN_EVEN_B,
  INTR_DN_EVEN_C,
  INTR_A4_A,
  INTR_A4_B,
  INTR_S4,
  INTR_A5,
  PRIM_A5,
  PRIM_A6,
  PRIM_PSL27,
  PRIM_HESSIAN,
  PRIM_PSU3F2,
  PRIM_C32C4,
};

struct FamilySpec {
  Family family = Family::IMPRIM_CN2_C3;
  long n = 1, r = 1, m = 0, s = 1;
  long t1 = 1, t2 = 1, t3 = 1, t4 = 1;  // weight parameters (intransitive)
};

std::string family_to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);
std::vector<Family> all_families();

// Parameter constraints of the defining proposition; empty = valid.
std::vector<std::string> validate(const FamilySpec& spec);

// Builds the action with exactly the proposition's generator matrices over
// the minimal conductor.  Throws InvalidParams when validate fails.
GroupAction build(const FamilySpec& spec);

// Theorem 1.3: the normalizer of G in the Cremona group is finite iff the
// action is transitive (type T or P) and the abstract group is none of
// A4, C_3^2, C_3 x| S_3, C_7 x| C_3, C_3^2 x| C_4.
bool normalizer_finite(const GroupAction& g);

// Directory holding the bundled primitive generator files.
std::string data_directory();

}  // namespace cremona
