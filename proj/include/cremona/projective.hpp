// Projective transforms over cyclotomic fields, finite group closure,
// orbits, eigenstructure, and conjugator search in PGL2/PGL3.
//
// Transforms and points are stored canonically scaled: the first nonzero
// entry in row-major (resp. coordinate) order is 1, so projective equality
// is entrywise equality.  Groups are immutable after close_group; every
// element records one word in the generators, and a finite-order matrix
// lift of any element can be recovered by evaluating its word over the
// generator lifts.

#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cremona/cyclotomic.hpp"

namespace cremona {

struct OrderBoundExceeded : std::runtime_error {
  explicit OrderBoundExceeded(const std::string& what)
      : std::runtime_error("OrderBoundExceeded: " + what) {}
};
struct NotFiniteOrder : std::runtime_error {
  explicit NotFiniteOrder(const std::string& what)
      : std::runtime_error("NotFiniteOrder: " + what) {}
};
struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("SingularMatrix") {}
};
struct DegenerateFrame : std::runtime_error {
  DegenerateFrame() : std::runtime_error("DegenerateFrame") {}
};

// Dense n x n matrix over a cyclotomic field, n = 2 or 3.
class Mat {
 public:
  Mat() : n_(0) {}
  explicit Mat(int n) : n_(n), a_(n * n, Cyclo(0)) {}
  static Mat identity(int n);
  static Mat diagonal(const std::vector<Cyclo>& d);

  int n() const { return n_; }
  Cyclo& at(int i, int j) { return a_[i * n_ + j]; }
  const Cyclo& at(int i, int j) const { return a_[i * n_ + j]; }

  Mat operator*(const Mat& o) const;
  std::vector<Cyclo> apply(const std::vector<Cyclo>& v) const;
  Mat transpose() const;
  Cyclo det() const;
  Mat inverse() const;  // throws SingularMatrix
  Mat scaled(const Cyclo& c) const;
  Mat pow(long e) const;
  bool operator==(const Mat& o) const;
  bool is_scalar() const;

  // Monic characteristic polynomial, coefficient of t^i at index i.
  std::vector<Cyclo> char_poly() const;

  // Entries rewritten with the given conductor (must be compatible).
  Mat embedded(long m) const;
  long entry_conductor_lcm() const;
  std::string str() const;

 private:
  int n_;
  std::vector<Cyclo> a_;
};

// Point of P^{n-1} (or a line of P^2 in dual coordinates): nonzero vector,
// canonically scaled so the first nonzero coordinate is 1.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Cyclo> v);
  const std::vector<Cyclo>& coords() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()); }
  bool operator==(const Point& o) const;
  bool operator!=(const Point& o) const { return !(*this == o); }
  std::size_t hash() const;
  std::string str() const;
  Point embedded(long m) const;

 private:
  std::vector<Cyclo> v_;
};

// Invertible matrix identified up to scalar, canonically scaled.
class Transform {
 public:
  Transform() = default;
  explicit Transform(const Mat& m);  // throws SingularMatrix
  static Transform identity(int n);

  const Mat& mat() const { return m_; }
  // the matrix as constructed, before canonical scaling; finite-order
  // rescaling is often only recoverable from this form
  const Mat& raw() const { return raw_; }
  int n() const { return m_.n(); }
  long conductor() const { return conductor_; }

  Transform operator*(const Transform& o) const;
  Transform inverse() const;
  Point apply(const Point& p) const;
  bool operator==(const Transform& o) const;
  bool operator!=(const Transform& o) const { return !(*this == o); }
  bool is_identity() const;
  std::size_t hash() const { return hash_; }
  Transform embedded(long m) const;
  std::string str() const { return m_.str(); }

 private:
  Mat m_;
  Mat raw_;
  long conductor_ = 1;
  std::size_t hash_ = 0;
};

// Smallest k >= 1 with m^k scalar; throws NotFiniteOrder past the bound.
long projective_order(const Mat& m, long bound = 4096);

// Rescales m so that some power is the identity matrix (all eigenvalues
// roots of unity).  Throws NotFiniteOrder when impossible over a
// cyclotomic field.
Mat finite_order_lift(const Mat& m, long bound = 4096);

// A multiple of the matrix order of a finite-order matrix.
long matrix_order_multiple(const Mat& lift, long bound = 4096);

struct FixedLocus {
  bool whole_space = false;          // scalar matrix: everything fixed
  std::vector<Point> points;         // isolated eigenpoints
  std::vector<Cyclo> point_values;   // eigenvalues, parallel to points
  std::vector<Point> lines;          // pointwise-fixed lines (dual coords)
  std::vector<Cyclo> line_values;
};

// Eigenstructure of any scalar multiple of a finite-order transform.
FixedLocus fixed_points(const Mat& g);

class FiniteLinearGroup {
 public:
  int n = 0;                   // matrix size; acts on P^{n-1}
  long conductor = 1;          // all stored transforms use this conductor
  std::vector<Transform> gens;
  std::vector<Mat> gen_lifts;  // finite-order lifts, same order as gens
  std::vector<Transform> elements;            // [0] = identity
  std::vector<std::vector<int>> words;        // word in gens per element
  // BFS provenance: element i = elements[parent[i]] * gens[via_gen[i]]
  std::vector<int> parent, via_gen;

  std::size_t size() const { return elements.size(); }
  int find(const Transform& t) const;  // -1 when absent
  int mul(int i, int j) const;
  int inverse_of(int i) const;
  long order_of(int i) const;
  Mat lift(int i) const;  // finite-order lift via the element's word
  bool is_abelian() const;
  std::vector<long> element_orders() const;  // sorted, with multiplicity

 private:
  friend FiniteLinearGroup close_group(const std::vector<Transform>&, long);
  std::unordered_map<std::size_t, std::vector<int>> index_;
};

FiniteLinearGroup close_group(const std::vector<Transform>& gens,
                              long bound = 20000);

Transform evaluate_word(const std::vector<Transform>& gens,
                        const std::vector<int>& word, int n);
Mat evaluate_word_lift(const std::vector<Mat>& gen_lifts,
                       const std::vector<int>& word, int n);

std::vector<Point> orbit(const Point& p, const FiniteLinearGroup& g);

// Orbit scan result.  Families describe pointwise-fixed lines whose generic
// point has a finite orbit of the stated length (infinitely many orbits,
// reported symbolically by the parametrizing line).
struct OrbitRecord {
  bool is_family = false;
  long length = 0;
  std::vector<Point> points;  // finite orbit, sorted; empty for families
  Point family_line;          // dual coordinates, for families
  std::string key;            // deterministic sort key
};

std::vector<OrbitRecord> small_orbits(const FiniteLinearGroup& g, long max_len);

struct GeneralPositionReport {
  bool any_three_collinear = false;
  bool on_common_conic = false;
};
GeneralPositionReport general_position(const std::vector<Point>& pts);

struct ConjugacyResult {
  bool conjugate = false;
  Transform h;              // valid when conjugate
  std::string certificate;  // witness for NotConjugate
};

// Decides projective conjugacy of matched generator tuples: looks for h
// with h phi1[i] h^-1 = phi2[i] for every i.  Frame search over
// characteristic eigenpoint sets first, exhaustive linear intertwining
// solve as the complete fallback.
ConjugacyResult find_conjugator(const std::vector<Transform>& phi1,
                                const std::vector<Transform>& phi2);

// Multiset of eigenvalue ratios {l_i/l_j : i != j} as sorted strings; a
// conjugation invariant used as the fast NotConjugate prefilter.
std::vector<std::string> eigenvalue_ratio_fingerprint(const Mat& lift);

}  // namespace cremona
