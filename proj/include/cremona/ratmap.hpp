// Exact rational self-maps of the plane: homogeneous polynomial triples
// with cyclotomic coefficients, composition with gcd cancellation,
// involution and equivariance certificates, and constructors for the
// explicit birational maps used by the conjugacy machinery.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/action.hpp"
#include "cremona/projective.hpp"

namespace cremona {

struct IndeterminateCollapse : std::runtime_error {
  IndeterminateCollapse()
      : std::runtime_error("IndeterminateCollapse: composition undefined") {}
};
struct NotRegularizable : std::runtime_error {
  explicit NotRegularizable(const std::string& what)
      : std::runtime_error("NotRegularizable: " + what) {}
};
struct InverseUnknown : std::runtime_error {
  explicit InverseUnknown(const std::string& what)
      : std::runtime_error("InverseUnknown: " + what) {}
};
struct NoSuchOrbit : std::runtime_error {
  explicit NoSuchOrbit(const std::string& what)
      : std::runtime_error("NoSuchOrbit: " + what) {}
};
struct InvalidParams : std::runtime_error {
  explicit InvalidParams(const std::string& what)
      : std::runtime_error("InvalidParams: " + what) {}
};
struct CertificateFail : std::runtime_error {
  explicit CertificateFail(const std::string& what)
      : std::runtime_error("CertificateFail: " + what) {}
};

// Homogeneous polynomial in x1, x2, x3 (sparse).  The zero polynomial has
// degree -1; all other arithmetic keeps operands of equal degree.
class HomPoly {
 public:
  using Exp = std::array<int, 3>;

  HomPoly() = default;
  static HomPoly monomial(const Cyclo& c, int a, int b, int cc);
  static HomPoly variable(int i);  // x_{i+1}

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  const std::map<Exp, Cyclo>& terms() const { return terms_; }
  const Cyclo& coeff(int a, int b, int c) const;

  HomPoly operator-() const;
  friend HomPoly operator+(const HomPoly& p, const HomPoly& q);
  friend HomPoly operator-(const HomPoly& p, const HomPoly& q);
  friend HomPoly operator*(const HomPoly& p, const HomPoly& q);
  HomPoly& operator+=(const HomPoly& o) { return *this = *this + o; }
  bool operator==(const HomPoly& o) const { return terms_ == o.terms_; }

  HomPoly scaled(const Cyclo& c) const;
  HomPoly pow(int e) const;
  // substitute x_i -> linear forms given by the rows of m applied to x
  HomPoly substitute_linear(const Mat& m) const;
  Cyclo eval(const std::vector<Cyclo>& x) const;

  // lexicographically largest exponent (x1 > x2 > x3); zero poly throws
  Exp leading_exponent() const;
  std::string str() const;

 private:
  std::map<Exp, Cyclo> terms_;
  void insert(const Exp& e, const Cyclo& c);
};

// gcd of homogeneous polynomials (monic w.r.t. the lex-leading coefficient)
HomPoly hompoly_gcd(const HomPoly& p, const HomPoly& q);
// exact division; throws std::logic_error on nonzero remainder
HomPoly hompoly_div(const HomPoly& p, const HomPoly& q);

// Binary forms in x2, x3 are HomPoly values with no x1 part.
HomPoly binary_form_from_roots(const std::vector<Point>& pts_on_line);

// A rational self-map of P^2: three coprime homogeneous components of
// equal degree, gcd cancelled, lex-leading coefficient of the first
// nonzero component scaled to 1.
class RationalMap {
 public:
  RationalMap() = default;
  RationalMap(HomPoly f1, HomPoly f2, HomPoly f3);
  static RationalMap identity();
  static RationalMap from_matrix(const Mat& m);

  int degree() const { return comp_[0].degree(); }
  const HomPoly& comp(int i) const { return comp_[i]; }
  bool is_linear() const { return degree() == 1; }
  Mat to_matrix() const;  // requires is_linear

  bool operator==(const RationalMap& o) const;
  Point apply(const Point& p) const;  // throws IndeterminateCollapse at base points
  std::string str() const;

 private:
  std::array<HomPoly, 3> comp_;
};

RationalMap compose(const RationalMap& f, const RationalMap& g);
bool is_involution(const RationalMap& f);

// The linear action g -> f g f^-1, when every conjugate is linear.  No
// explicit inverse is needed: for each generator the matrix M with
// M . f = f . g is solved for directly.
GroupAction conjugate_action(const RationalMap& f, const GroupAction& phi);

// Certificate that f is G-birational from phi1 to phi2: for each generator
// g a group element psi(g) with f . phi1(g) = phi2(psi(g)) . f, where psi
// extends to an automorphism of the abstract group.
struct EquivarianceCertificate {
  bool ok = false;
  std::vector<int> psi_gen_images;  // element ids in phi2's closure
  bool psi_is_identity_on_gens = false;
  std::string failure;  // first violated generator when !ok
};
EquivarianceCertificate equivariance_certificate(const RationalMap& f,
                                                 const GroupAction& phi1,
                                                 const GroupAction& phi2);

// Named constructors for the explicit maps.
enum class MapName {
  IOTA,         // (x2 x3, x1 x3, x1 x2)
  GAMMA_DN,     // even-dihedral degree n+1 map, parameter n
  TAU_DN,       // even-dihedral map tau_lambda, parameters n, lambda, variant
  THETA_A4,     // quintic involution, parameter lambda
  SIGMA_A4,     // (x1 h4, x2 f4, x3 f4)
  GAMMA_A4,     // (f6 h4, x1 x2 f4^2, x1 x3 f4^2)
  SIGMA_S4,     // (x1 h12, x2 f12, x3 f12)
  GAMMA_S4,     // (f8, x1 x2 f6, x1 x3 f6)
  SIGMA_A5,     // (f12 f20, x1 x2 f30, x1 x3 f30)
};

struct MapParams {
  long n = 0;
  Cyclo lambda = Cyclo(0);
  // TAU_DN: false = the printed factors in x1, x2; true = the variant in
  // x2, x3 (see tau_variant_report)
  bool tau_in_x2x3 = true;
};

RationalMap build_map(MapName name, const MapParams& params = {});

// Semi-invariant binary form of a finite 2x2 action vanishing on one orbit
// of the given length on P^1; certified form . g = scalar * form.
HomPoly semiinvariant_form(const std::vector<Transform>& residual_gens,
                           long target_orbit_length);

}  // namespace cremona
