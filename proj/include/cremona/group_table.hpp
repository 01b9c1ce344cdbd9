// Abstract finite groups as multiplication tables, shared by the matched
// actions of one group: element ids come from the closure of the first
// action, and any matched action can be evaluated over the stored words.
// Also hosts the automorphism machinery (backtracking over generator
// images) and the isomorphism-type signatures used by the classifiers.

#pragma once

#include <string>
#include <vector>

#include "cremona/projective.hpp"

namespace cremona {

struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string& what)
      : std::runtime_error("BoundExceeded: " + what) {}
};

class GroupTable {
 public:
  static GroupTable from_group(const FiniteLinearGroup& g);

  int size() const { return static_cast<int>(table_.size()); }
  int mul(int i, int j) const { return table_[i][j]; }
  int inv(int i) const { return inv_[i]; }
  long order(int i) const;
  bool is_abelian() const;
  const std::vector<int>& generator_ids() const { return gen_ids_; }
  const std::vector<std::vector<int>>& words() const { return words_; }

  int evaluate_word(const std::vector<int>& word) const;  // gen indices
  std::vector<int> subgroup(std::vector<int> generators) const;  // sorted ids
  bool subset_is_cyclic(const std::vector<int>& elems) const;
  std::vector<long> element_orders() const;  // sorted with multiplicity
  std::vector<int> center() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<int> gen_ids_;
  std::vector<std::vector<int>> words_;
};

// An automorphism stored as the full image vector on element ids.
struct AutomorphismTable {
  std::vector<std::vector<int>> maps;  // each a permutation of 0..n-1
  std::vector<bool> inner;
  long inner_order() const;
  long outer_order() const { return static_cast<long>(maps.size()) / inner_order(); }
};

// All automorphisms via backtracking over generator images constrained by
// element orders, verified against the full multiplication table.
AutomorphismTable automorphisms(const GroupTable& g, long bound = 600);

// Isomorphism-type signature: (order, abelian, sorted element orders).
struct GroupSignature {
  long order = 0;
  bool abelian = false;
  std::vector<long> element_orders;
  bool operator==(const GroupSignature& o) const = default;
};
GroupSignature signature_of(const GroupTable& g);

// Signatures of the named exceptional groups of Theorem 1.3 and the
// polyhedral groups; sufficient to separate them from everything else of
// the same order arising here.
GroupSignature signature_a4();
GroupSignature signature_s4();
GroupSignature signature_a5();
GroupSignature signature_c3c3();
GroupSignature signature_c3_s3();   // C_3 x| S_3 of order 18
GroupSignature signature_c7_c3();   // C_7 x| C_3 of order 21
GroupSignature signature_c32_c4();  // C_3^2 x| C_4 of order 36

}  // namespace cremona
