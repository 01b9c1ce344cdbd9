// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// Canonical basis: the power basis 1, z, z^2, ..., z^{phi(N)-1} with
// z = zeta_N = exp(2*pi*i/N), i.e. coefficient vectors are reduced modulo
// the N-th cyclotomic polynomial Phi_N.  Two elements of the same conductor
// are equal iff their coefficient vectors are identical; mixed-conductor
// operations promote both operands to the lcm of the conductors.
// All coefficients are arbitrary-precision rationals; the core never
// touches floating point (approx() exists for test oracles only).

#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

using Rational = mpq_class;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("DivisionByZero") {}
};
struct IncompatibleConductor : std::runtime_error {
  explicit IncompatibleConductor(const std::string& what)
      : std::runtime_error("IncompatibleConductor: " + what) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what)
      : std::runtime_error("ParseError: " + what) {}
};

std::size_t hash_mpz(const mpz_class& z);
std::size_t hash_rational(const Rational& q);

long euler_phi(long n);

class Cyclo {
 public:
  Cyclo() : conductor_(1), coeffs_(1, Rational(0)) {}
  Cyclo(long v) : Cyclo(Rational(v)) {}          // NOLINT: implicit by design
  Cyclo(const Rational& v) : conductor_(1), coeffs_(1, v) {
    coeffs_[0].canonicalize();
  }

  // zeta_N^e
  static Cyclo zeta(long n, long e = 1);
  // Reduces sum_e raw[e] * zeta_N^e to the canonical basis.  raw may have
  // any length; exponents are taken mod N.
  static Cyclo from_raw(long n, const std::vector<Rational>& raw);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo inverse() const;  // throws DivisionByZero on zero
  Cyclo pow(long e) const;

  // Same field element written with conductor m; requires conductor() | m.
  Cyclo embedded(long m) const;
  // Galois conjugation zeta_N -> zeta_N^k, gcd(k, N) = 1.
  Cyclo galois(long k) const;
  // Complex conjugation (the Galois map k = -1).
  Cyclo conj() const { return galois(conductor_ - 1); }

  // If *this is a root of unity, returns (order, exponent) with
  // *this == zeta(order)^exponent and order = lcm(2, conductor).
  std::optional<std::pair<long, long>> root_of_unity() const;

  // The same value rewritten over its minimal conductor (never 2 mod 4).
  // Minimal representations are unique, so str() and hash() of minimal
  // forms are canonical keys across mixed-conductor computations.
  Cyclo minimal() const;

  std::size_t hash() const;
  std::string str() const;              // grammar of parse_cyclo, canonical
  std::complex<double> approx() const;  // test oracle use only

 private:
  long conductor_;
  std::vector<Rational> coeffs_;  // size phi(conductor_)
};

// Exact square root of a rational, as a cyclotomic number (Gauss sums);
// for q < 0 the result is i times the square root of -q.
Cyclo sqrt_rational(const Rational& q);

// Parses the field-element grammar shared by all file formats:
//   expr := term (('+'|'-') term)*
//   term := rational ('*' 'z' ('^' int)?)? | 'z' ('^' int)?
// with 'z' standing for zeta_N of the given conductor.
Cyclo parse_cyclo(const std::string& text, long conductor);

inline Cyclo operator*(const Rational& a, const Cyclo& b) { return Cyclo(a) * b; }

}  // namespace cremona
