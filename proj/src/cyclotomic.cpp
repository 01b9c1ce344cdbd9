#include "cremona/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cremona {

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = mpz_sgn(z.get_mpz_t()) < 0 ? 0x9e3779b97f4a7c15ull : 0x2545f4914f6cdd1dull;
  const mp_size_t n = mpz_size(z.get_mpz_t());
  for (mp_size_t i = 0; i < n; ++i)
    h = (h * 1099511628211ull) ^ static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
  return h;
}

std::size_t hash_rational(const Rational& q) {
  return hash_mpz(q.get_num()) * 31 + hash_mpz(q.get_den());
}

long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Dense univariate polynomials over Q, coefficient of x^i at index i.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division; remainder must be zero.
QPoly qpoly_div(const QPoly& a, const QPoly& b) {
  QPoly rem = a, quo(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  trim(rem);
  while (rem.size() >= b.size() && !rem.empty()) {
    Rational c = rem.back() / b.back();
    std::size_t shift = rem.size() - b.size();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  if (!rem.empty()) throw std::logic_error("qpoly_div: nonzero remainder");
  trim(quo);
  return quo;
}

QPoly cyclotomic_polynomial(long n) {
  static std::map<long, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<QPoly(long)> compute = [&](long m) -> QPoly {
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;
    QPoly num(m + 1, Rational(0));  // x^m - 1
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) num = qpoly_div(num, compute(d));
    cache[m] = num;
    return num;
  };
  return compute(n);
}

// Precomputed reduction data for one conductor.
struct ConductorData {
  long n = 1;
  long phi = 1;
  // reduced[e] = coefficient vector of zeta_N^e in the power basis,
  // for 0 <= e < max(n, 2*phi - 1).
  std::vector<std::vector<Rational>> reduced;
};

const ConductorData& conductor_data(long n) {
  static std::map<long, ConductorData> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  ConductorData d;
  d.n = n;
  d.phi = euler_phi(n);
  QPoly minpoly = cyclotomic_polynomial(n);  // monic, degree phi
  long count = std::max(n, 2 * d.phi - 1);
  d.reduced.resize(count);
  for (long e = 0; e < count; ++e) {
    std::vector<Rational> row(d.phi, Rational(0));
    if (e < d.phi) {
      row[e] = 1;
    } else {
      // zeta^e = zeta * zeta^{e-1} followed by one reduction step.
      row = d.reduced[e - 1];
      Rational top = row[d.phi - 1];
      for (long i = d.phi - 1; i > 0; --i) row[i] = row[i - 1];
      row[0] = 0;
      if (top != 0)
        for (long i = 0; i < d.phi; ++i) row[i] -= top * minpoly[i];
    }
    d.reduced[e] = std::move(row);
  }
  cache[n] = std::move(d);
  return cache[n];
}

long safe_lcm(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

Cyclo Cyclo::from_raw(long n, const std::vector<Rational>& raw) {
  if (n < 1) throw std::invalid_argument("conductor must be >= 1");
  const ConductorData& cd = conductor_data(n);
  Cyclo out;
  out.conductor_ = n;
  out.coeffs_.assign(cd.phi, Rational(0));
  for (std::size_t e = 0; e < raw.size(); ++e) {
    if (raw[e] == 0) continue;
    const auto& row = cd.reduced[static_cast<long>(e) % n];
    for (long i = 0; i < cd.phi; ++i) out.coeffs_[i] += raw[e] * row[i];
  }
  for (auto& c : out.coeffs_) c.canonicalize();
  return out;
}

Cyclo Cyclo::zeta(long n, long e) {
  e %= n;
  if (e < 0) e += n;
  std::vector<Rational> raw(e + 1, Rational(0));
  raw[e] = 1;
  return from_raw(n, raw);
}

bool Cyclo::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclo::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool Cyclo::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

Rational Cyclo::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value on irrational element");
  return coeffs_[0];
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  long m = safe_lcm(a.conductor_, b.conductor_);
  Cyclo x = a.embedded(m), y = b.embedded(m);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  long m = safe_lcm(a.conductor_, b.conductor_);
  Cyclo x = a.embedded(m), y = b.embedded(m);
  const ConductorData& cd = conductor_data(m);
  // Convolution in the power basis, then reduce exponents >= phi.
  std::vector<Rational> conv(2 * cd.phi - 1, Rational(0));
  for (long i = 0; i < cd.phi; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (long j = 0; j < cd.phi; ++j) {
      if (y.coeffs_[j] == 0) continue;
      conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  Cyclo out;
  out.conductor_ = m;
  out.coeffs_.assign(cd.phi, Rational(0));
  for (long e = 0; e < static_cast<long>(conv.size()); ++e) {
    if (conv[e] == 0) continue;
    const auto& row = cd.reduced[e];
    for (long i = 0; i < cd.phi; ++i) out.coeffs_[i] += conv[e] * row[i];
  }
  for (auto& c : out.coeffs_) c.canonicalize();
  return out;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  long m = safe_lcm(a.conductor_, b.conductor_);
  return a.embedded(m).coeffs_ == b.embedded(m).coeffs_;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Cyclo(Rational(1) / coeffs_[0]);
  // Extended Euclid of (this, Phi_N) over Q: u*this + v*Phi = 1.
  QPoly r0 = cyclotomic_polynomial(conductor_);
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0(1, Rational(0)), s1(1, Rational(1));  // coefficients of `this`
  while (true) {
    // r0 = q*r1 + r2
    QPoly rem = r0;
    QPoly quo(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, Rational(0));
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      quo[shift] += c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      trim(rem);
    }
    trim(quo);
    // s2 = s0 - q*s1
    QPoly s2 = s0;
    s2.resize(std::max(s2.size(), quo.size() + s1.size()), Rational(0));
    for (std::size_t i = 0; i < quo.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= quo[i] * s1[j];
    trim(s2);
    if (rem.empty()) {
      // r1 is the gcd; it must be a nonzero constant since Phi_N is the
      // minimal polynomial and `this` is nonzero of smaller degree.
      if (r1.size() != 1) throw std::logic_error("inverse: gcd not constant");
      std::vector<Rational> inv(conductor_data(conductor_).phi, Rational(0));
      for (std::size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / r1[0];
      Cyclo out;
      out.conductor_ = conductor_;
      out.coeffs_ = std::move(inv);
      for (auto& c : out.coeffs_) c.canonicalize();
      return out;
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Cyclo Cyclo::embedded(long m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0)
    throw IncompatibleConductor(std::to_string(conductor_) + " does not divide " +
                                std::to_string(m));
  long scale = m / conductor_;
  std::vector<Rational> raw(static_cast<std::size_t>(conductor_data(conductor_).phi - 1) * scale + 1,
                            Rational(0));
  for (std::size_t e = 0; e < coeffs_.size(); ++e) raw[e * scale] = coeffs_[e];
  return from_raw(m, raw);
}

Cyclo Cyclo::galois(long k) const {
  long n = conductor_;
  k %= n;
  if (k < 0) k += n;
  if (n == 1) return *this;
  if (std::gcd(k, n) != 1) throw std::invalid_argument("galois: k not coprime to conductor");
  std::vector<Rational> raw(n, Rational(0));
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    raw[(e * k) % n] += coeffs_[e];
  return from_raw(n, raw);
}

std::optional<std::pair<long, long>> Cyclo::root_of_unity() const {
  if (is_zero()) return std::nullopt;
  long order = conductor_ % 2 == 0 ? conductor_ : 2 * conductor_;
  Cyclo z = zeta(order), p(1);
  for (long j = 0; j < order; ++j) {
    if (*this == p) return std::make_pair(order, j);
    p = p * z;
  }
  return std::nullopt;
}

Cyclo Cyclo::minimal() const {
  if (is_rational()) return Cyclo(coeffs_[0]);
  Cyclo cur = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    long n = cur.conductor_;
    std::vector<long> primes;
    long m = n;
    for (long p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
    for (long p : primes) {
      long d = n / p;
      // invariance under Gal(Q(zeta_n)/Q(zeta_d)) = {k == 1 mod d}
      bool invariant = true;
      for (long k = 2; k < n && invariant; ++k) {
        if (k % d != 1 % d || std::gcd(k, n) != 1) continue;
        if (!(cur.galois(k) == cur)) invariant = false;
      }
      if (!invariant) continue;
      // rewrite in the power basis of Q(zeta_d)
      long phid = euler_phi(d), phin = euler_phi(n);
      std::vector<std::vector<Rational>> mtx(phin,
                                             std::vector<Rational>(phid + 1, Rational(0)));
      for (long i = 0; i < phid; ++i) {
        Cyclo col = Cyclo::zeta(d, i).embedded(n);
        for (long r = 0; r < phin; ++r) mtx[r][i] = col.coeffs()[r];
      }
      for (long r = 0; r < phin; ++r) mtx[r][phid] = cur.coeffs_[r];
      // Gaussian elimination over Q
      long row = 0;
      std::vector<long> pivot(phid, -1);
      for (long c = 0; c < phid && row < phin; ++c) {
        long pr = row;
        while (pr < phin && mtx[pr][c] == 0) ++pr;
        if (pr == phin) continue;
        std::swap(mtx[pr], mtx[row]);
        for (long r = 0; r < phin; ++r) {
          if (r == row || mtx[r][c] == 0) continue;
          Rational f = mtx[r][c] / mtx[row][c];
          for (long cc = c; cc <= phid; ++cc) mtx[r][cc] -= f * mtx[row][cc];
        }
        pivot[c] = row;
        ++row;
      }
      bool consistent = true;
      for (long r = 0; r < phin && consistent; ++r) {
        bool all_zero = true;
        for (long c = 0; c < phid; ++c)
          if (mtx[r][c] != 0) all_zero = false;
        if (all_zero && mtx[r][phid] != 0) consistent = false;
      }
      if (!consistent) throw std::logic_error("minimal: Galois descent failed");
      std::vector<Rational> raw(phid, Rational(0));
      for (long c = 0; c < phid; ++c)
        if (pivot[c] >= 0) raw[c] = mtx[pivot[c]][phid] / mtx[pivot[c]][c];
      cur = Cyclo::from_raw(d, raw);
      changed = true;
      break;
    }
  }
  return cur;
}

std::size_t Cyclo::hash() const {
  std::size_t h = static_cast<std::size_t>(conductor_) * 0x9e3779b97f4a7c15ull;
  for (const auto& c : coeffs_) h = h * 131 + hash_rational(c);
  return h;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const Rational& c = coeffs_[e];
    if (c == 0) continue;
    Rational a = c > 0 ? c : Rational(-c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z";
      if (e > 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::complex<double> Cyclo::approx() const {
  std::complex<double> out(0.0, 0.0);
  const double tau = 6.283185307179586476925286766559;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    double arg = tau * static_cast<double>(e) / static_cast<double>(conductor_);
    out += coeffs_[e].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return out;
}

namespace {

// quadratic Gauss sum: sqrt(p) for p == 1 mod 4, i*sqrt(p) for p == 3 mod 4
Cyclo gauss_sum(long p) {
  std::vector<Rational> raw(p, Rational(0));
  for (long a = 1; a < p; ++a) {
    long sq = (a * a) % p;
    raw[sq] += 1;  // counts quadratic residues twice; adjust below
  }
  // sum_{a} legendre(a) zeta^a = 2*sum_{QR} zeta^a - sum_{a != 0} zeta^a
  std::vector<Rational> leg(p, Rational(-1));
  leg[0] = 0;
  for (long a = 1; a < p; ++a)
    if (raw[a] != 0) leg[a] = 1;
  return Cyclo::from_raw(p, leg);
}

Cyclo sqrt_prime(long p) {
  if (p == 2) return Cyclo::zeta(8) + Cyclo::zeta(8, 7);
  Cyclo g = gauss_sum(p);
  if (p % 4 == 1) return g;
  return g * Cyclo::zeta(4, 3);  // divide by i
}

}  // namespace

Cyclo sqrt_rational(const Rational& q) {
  if (q == 0) return Cyclo(0);
  Rational a = q > 0 ? q : Rational(-q);
  // sqrt(n/d) = sqrt(n*d)/d
  mpz_class nd = a.get_num() * a.get_den();
  Cyclo out(Rational(1, a.get_den()));
  mpz_class square_part = 1, rest = nd;
  for (mpz_class f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      square_part *= f;
      rest /= f * f;
    }
  }
  out = out * Cyclo(Rational(square_part));
  // rest is squarefree; take prime square roots
  mpz_class m = rest;
  for (mpz_class f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      out = out * sqrt_prime(f.get_si());
      m /= f;
    }
  }
  if (m > 1) out = out * sqrt_prime(m.get_si());
  if (q < 0) out = out * Cyclo::zeta(4);
  return out;
}

namespace {

struct Tokenizer {
  const std::string& s;
  std::size_t i = 0;
  explicit Tokenizer(const std::string& str) : s(str) {}
  void skip() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool peek(char c) {
    skip();
    return i < s.size() && s[i] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_end() {
    skip();
    return i >= s.size();
  }
  bool digit_next() {
    skip();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  mpz_class read_integer() {
    skip();
    bool neg = accept('-');
    if (!neg) accept('+');
    skip();
    std::string num;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
    if (num.empty()) throw ParseError("expected integer in '" + s + "'");
    mpz_class v(num);
    return neg ? mpz_class(-v) : v;
  }
  Rational read_rational() {
    mpz_class num = read_integer();
    if (accept('/')) {
      mpz_class den = read_integer();
      if (den == 0) throw ParseError("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }
};

}  // namespace

Cyclo parse_cyclo(const std::string& text, long conductor) {
  Tokenizer tk(text);
  Cyclo total(0);
  bool first = true;
  while (!tk.at_end()) {
    bool neg = false;
    if (!first || tk.peek('+') || tk.peek('-')) {
      if (tk.accept('-'))
        neg = true;
      else if (!tk.accept('+') && !first)
        throw ParseError("expected '+' or '-' in '" + text + "'");
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    if (tk.digit_next()) {
      coef = tk.read_rational();
      have_coef = true;
    }
    long exponent = 0;
    bool have_z = false;
    if (have_coef) {
      if (tk.accept('*')) {
        if (!tk.accept('z')) throw ParseError("expected 'z' after '*' in '" + text + "'");
        have_z = true;
      }
    } else {
      if (!tk.accept('z')) throw ParseError("expected term in '" + text + "'");
      have_z = true;
    }
    if (have_z) {
      exponent = 1;
      if (tk.accept('^')) exponent = tk.read_integer().get_si();
    }
    Cyclo term = have_z ? Cyclo::zeta(conductor, exponent) : Cyclo(1);
    term = Cyclo(coef) * term;
    total = total + (neg ? -term : term);
  }
  return total.embedded(conductor);
}

}  // namespace cremona
