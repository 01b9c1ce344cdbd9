// The Cremona-conjugacy decision procedure: combines the type
// classification, the conjugator search, the Burnside class, and the
// certified birational moves into a verdict with a machine-checkable
// certificate, plus the action-counting table.

#pragma once

#include "cremona/action.hpp"
#include "cremona/burnside.hpp"
#include "cremona/classify.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

struct MismatchedGroups : std::runtime_error {
  explicit MismatchedGroups(const std::string& what)
      : std::runtime_error("MismatchedGroups: " + what) {}
};

enum class Answer { ConjugateInPGL3, ConjugateInCr2, NotConjugate, OutOfScope };
std::string answer_name(Answer a);

struct Verdict {
  Answer answer = Answer::OutOfScope;
  CompareMode mode = CompareMode::Strict;
  // ConjugateInPGL3: the conjugating transform
  Transform pgl_conjugator;
  // ConjugateInCr2 with a chain: maps composed left to right conjugate the
  // first action onto the second; empty when the certificate is a table or
  // no-name-lemma citation (certificate_kind says which)
  std::vector<RationalMap> chain;
  std::string certificate_kind;  // "pgl", "chain", "table", "no-name"
  std::string invariant;         // NotConjugate: the distinguishing invariant
  std::string detail;
  // psi on generator names, when an automorphism twist was used
  std::vector<int> psi_gen_images;
};

Verdict decide_cr2(const GroupAction& a, const GroupAction& b,
                   CompareMode mode = CompareMode::Strict);

// Re-runs a chain certificate: composes the maps, conjugates the first
// action, and checks exact generator-wise agreement with the second.
bool verify_chain(const Verdict& v, const GroupAction& a, const GroupAction& b);

struct CountResult {
  bool known = false;
  long count = 0;
};

// Number of actions with the given image, up to regular (PGL_3) or
// birational conjugation, for the tabulated catalog cases.
CountResult count_actions(const GroupAction& g, bool birational);

}  // namespace cremona
