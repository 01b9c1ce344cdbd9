#include "cremona/ratmap.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cremona/group_table.hpp"
#include "cremona/linalg.hpp"

namespace cremona {

void HomPoly::insert(const Exp& e, const Cyclo& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HomPoly HomPoly::monomial(const Cyclo& c, int a, int b, int cc) {
  HomPoly p;
  p.insert({a, b, cc}, c);
  return p;
}

HomPoly HomPoly::variable(int i) {
  Exp e = {0, 0, 0};
  e[i] = 1;
  return monomial(Cyclo(1), e[0], e[1], e[2]);
}

int HomPoly::degree() const {
  if (terms_.empty()) return -1;
  const Exp& e = terms_.begin()->first;
  return e[0] + e[1] + e[2];
}

const Cyclo& HomPoly::coeff(int a, int b, int c) const {
  static const Cyclo zero(0);
  auto it = terms_.find({a, b, c});
  return it == terms_.end() ? zero : it->second;
}

HomPoly HomPoly::operator-() const {
  HomPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

HomPoly operator+(const HomPoly& p, const HomPoly& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  if (p.degree() != q.degree())
    throw std::logic_error("HomPoly: degree mismatch in addition");
  HomPoly r = p;
  for (const auto& [e, c] : q.terms_) r.insert(e, c);
  return r;
}

HomPoly operator-(const HomPoly& p, const HomPoly& q) { return p + (-q); }

HomPoly operator*(const HomPoly& p, const HomPoly& q) {
  HomPoly r;
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : q.terms_)
      r.insert({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  return r;
}

HomPoly HomPoly::scaled(const Cyclo& c) const {
  HomPoly p;
  if (c.is_zero()) return p;
  for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
  return p;
}

HomPoly HomPoly::pow(int e) const {
  HomPoly r = monomial(Cyclo(1), 0, 0, 0);
  HomPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

HomPoly HomPoly::substitute_linear(const Mat& m) const {
  std::array<HomPoly, 3> forms;
  for (int i = 0; i < 3; ++i) {
    HomPoly f;
    for (int j = 0; j < 3; ++j)
      f += HomPoly::monomial(m.at(i, j), j == 0 ? 1 : 0, j == 1 ? 1 : 0,
                             j == 2 ? 1 : 0);
    forms[i] = f;
  }
  int d = degree();
  std::array<std::vector<HomPoly>, 3> pows;
  for (int i = 0; i < 3; ++i) {
    pows[i].push_back(HomPoly::monomial(Cyclo(1), 0, 0, 0));
    for (int k = 1; k <= d; ++k) pows[i].push_back(pows[i].back() * forms[i]);
  }
  HomPoly r;
  for (const auto& [e, c] : terms_)
    r += (pows[0][e[0]] * pows[1][e[1]] * pows[2][e[2]]).scaled(c);
  return r;
}

Cyclo HomPoly::eval(const std::vector<Cyclo>& x) const {
  Cyclo out(0);
  for (const auto& [e, c] : terms_)
    out += c * x[0].pow(e[0]) * x[1].pow(e[1]) * x[2].pow(e[2]);
  return out;
}

HomPoly::Exp HomPoly::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("leading_exponent of zero");
  // map keys ascend lexicographically; the last is the lex-largest
  return terms_.rbegin()->first;
}

std::string HomPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out += " + ";
    first = false;
    Cyclo cm = c.minimal();
    bool simple = cm.is_rational();
    if (!simple) {
      int nonzero = 0;
      for (const auto& cf : cm.coeffs())
        if (!(cf == 0)) ++nonzero;
      simple = nonzero <= 1;
    }
    out += simple ? cm.str() : "(" + cm.str() + ")";
    if (e[0] + e[1] + e[2] > 0) out += " *";
    const char* names[3] = {" x1", " x2", " x3"};
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      out += names[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// gcd machinery: univariate Euclid over the field, bivariate primitive
// PRS, and the homogeneous trivariate reduction.

namespace {

using UPoly = std::vector<Cyclo>;  // coefficients of u^i
using VPoly = std::vector<UPoly>;  // coefficients of v^i over Q(z)[u]

void utrim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Cyclo(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  utrim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Cyclo(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  utrim(r);
  return r;
}

UPoly urem(UPoly a, const UPoly& b) {
  utrim(a);
  Cyclo lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    Cyclo f = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
    utrim(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Cyclo inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

UPoly udiv_exact(UPoly a, const UPoly& b) {
  utrim(a);
  if (a.empty()) return {};
  UPoly q(a.size() - b.size() + 1, Cyclo(0));
  Cyclo lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    Cyclo f = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
    utrim(a);
  }
  if (!a.empty()) throw std::logic_error("udiv_exact: nonzero remainder");
  return q;
}

void vtrim(VPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly vcontent(const VPoly& p) {
  UPoly g;
  for (const auto& c : p)
    if (!c.empty()) g = ugcd(g, c);
  return g;
}

VPoly vprimitive(const VPoly& p, const UPoly& content) {
  VPoly r = p;
  for (auto& c : r)
    if (!c.empty()) c = udiv_exact(c, content);
  return r;
}

VPoly vpseudo_rem(VPoly a, const VPoly& b) {
  vtrim(a);
  const UPoly& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    UPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    VPoly scaled(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) scaled[i] = umul(a[i], lb);
    for (std::size_t i = 0; i < b.size(); ++i)
      scaled[shift + i] = usub(scaled[shift + i], umul(b[i], la));
    a = std::move(scaled);
    vtrim(a);
    // strip content every step; unchecked pseudo-division growth is
    // exponential in the quotient degree
    if (!a.empty()) {
      UPoly ca = vcontent(a);
      if (ca.size() > 1 || (ca.size() == 1 && !ca[0].is_one())) a = vprimitive(a, ca);
    }
  }
  return a;
}

VPoly bivariate_gcd(VPoly a, VPoly b) {
  vtrim(a);
  vtrim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  UPoly ca = vcontent(a), cb = vcontent(b);
  UPoly cg = ugcd(ca, cb);
  a = vprimitive(a, ca);
  b = vprimitive(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    VPoly r = vpseudo_rem(a, b);
    vtrim(r);
    if (r.empty()) break;
    UPoly cr = vcontent(r);
    r = vprimitive(r, cr);
    a = std::move(b);
    b = std::move(r);
  }
  VPoly out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = umul(b[i], cg);
  return out;
}

int min_x1_power(const HomPoly& p) {
  int m = 1 << 20;
  for (const auto& [e, c] : p.terms()) m = std::min(m, e[0]);
  return m;
}

// substitute x1 = 1 (u = x2, v = x3); only valid after pulling x1 powers
VPoly dehomogenize(const HomPoly& p) {
  VPoly out;
  for (const auto& [e, c] : p.terms()) {
    std::size_t vd = static_cast<std::size_t>(e[2]);
    std::size_t ud = static_cast<std::size_t>(e[1]);
    if (out.size() <= vd) out.resize(vd + 1);
    UPoly& row = out[vd];
    if (row.size() <= ud) row.resize(ud + 1, Cyclo(0));
    row[ud] += c;
  }
  for (auto& row : out) utrim(row);
  vtrim(out);
  return out;
}

HomPoly homogenize(const VPoly& p, int total_degree, int x1_power) {
  HomPoly out;
  for (std::size_t vd = 0; vd < p.size(); ++vd)
    for (std::size_t ud = 0; ud < p[vd].size(); ++ud) {
      if (p[vd][ud].is_zero()) continue;
      int rest = total_degree - static_cast<int>(ud) - static_cast<int>(vd);
      if (rest < 0) throw std::logic_error("homogenize: degree too small");
      out += HomPoly::monomial(p[vd][ud], rest + x1_power, static_cast<int>(ud),
                               static_cast<int>(vd));
    }
  return out;
}

int vpoly_total_degree(const VPoly& p) {
  int d = -1;
  for (std::size_t vd = 0; vd < p.size(); ++vd)
    for (std::size_t ud = 0; ud < p[vd].size(); ++ud)
      if (!p[vd][ud].is_zero()) d = std::max(d, static_cast<int>(ud + vd));
  return d;
}

}  // namespace

namespace {

HomPoly::Exp min_exponents(const HomPoly& p) {
  HomPoly::Exp m = {1 << 20, 1 << 20, 1 << 20};
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

bool uses_variable(const HomPoly& p, int v) {
  for (const auto& [e, c] : p.terms())
    if (e[v] > 0) return true;
  return false;
}

// univariate coefficients of a form in two variables (va as the
// dehomogenizing variable, vb carrying the degree)
UPoly binary_to_upoly(const HomPoly& p, int va, int vb) {
  UPoly out;
  for (const auto& [e, c] : p.terms()) {
    std::size_t d = static_cast<std::size_t>(e[vb]);
    if (out.size() <= d) out.resize(d + 1, Cyclo(0));
    out[d] += c;
  }
  utrim(out);
  return out;
}

HomPoly upoly_to_binary(const UPoly& p, int va, int vb, int degree) {
  HomPoly out;
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (p[d].is_zero()) continue;
    HomPoly::Exp e = {0, 0, 0};
    e[vb] = static_cast<int>(d);
    e[va] = degree - static_cast<int>(d);
    out += HomPoly::monomial(p[d], e[0], e[1], e[2]);
  }
  return out;
}

// restriction to the plane x3 = a x1 + b x2, a binary form in x1, x2
HomPoly restrict_to_line(const HomPoly& p, long a, long b) {
  Mat m(3);
  m.at(0, 0) = Cyclo(1);
  m.at(1, 1) = Cyclo(1);
  m.at(2, 0) = Cyclo(a);
  m.at(2, 1) = Cyclo(b);
  return p.substitute_linear(m);
}

}  // namespace

HomPoly hompoly_gcd(const HomPoly& p, const HomPoly& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  // monomial content: gcd(x^a p', x^b q') = x^min(a,b) gcd(p', q')
  HomPoly::Exp mp = min_exponents(p), mq = min_exponents(q);
  HomPoly ps = hompoly_div(p, HomPoly::monomial(Cyclo(1), mp[0], mp[1], mp[2]));
  HomPoly qs = hompoly_div(q, HomPoly::monomial(Cyclo(1), mq[0], mq[1], mq[2]));
  HomPoly mono = HomPoly::monomial(Cyclo(1), std::min(mp[0], mq[0]),
                                   std::min(mp[1], mq[1]), std::min(mp[2], mq[2]));

  HomPoly core;
  bool have_core = false;
  // binary fast path: a variable absent from both reduces to one-variable
  // Euclid
  for (int missing = 0; missing < 3 && !have_core; ++missing) {
    if (uses_variable(ps, missing) || uses_variable(qs, missing)) continue;
    int va = missing == 0 ? 1 : 0;
    int vb = missing == 2 ? 1 : 2;
    UPoly g = ugcd(binary_to_upoly(ps, va, vb), binary_to_upoly(qs, va, vb));
    int gd = static_cast<int>(g.size()) - 1;
    core = upoly_to_binary(g, va, vb, gd);
    have_core = true;
  }
  if (!have_core) {
    // coprimality certificate: a nonzero restriction to a generic line has
    // gcd 1 only if the forms are coprime
    for (long attempt = 0; attempt < 4 && !have_core; ++attempt) {
      long a = attempt + 1, b = 2 * attempt + 1;
      HomPoly rp = restrict_to_line(ps, a, b), rq = restrict_to_line(qs, a, b);
      if (rp.is_zero() || rq.is_zero()) continue;
      UPoly g = ugcd(binary_to_upoly(rp, 0, 1), binary_to_upoly(rq, 0, 1));
      if (g.size() == 1) {
        core = HomPoly::monomial(Cyclo(1), 0, 0, 0);
        have_core = true;
      }
      break;
    }
  }
  if (!have_core) {
    VPoly g = bivariate_gcd(dehomogenize(ps), dehomogenize(qs));
    int gd = vpoly_total_degree(g);
    core = homogenize(g, gd, 0);
  }
  HomPoly out = core * mono;
  Cyclo lead = out.terms().rbegin()->second;
  return out.scaled(lead.inverse());
}

HomPoly hompoly_div(const HomPoly& p, const HomPoly& q) {
  if (p.is_zero()) return HomPoly();
  HomPoly rem = p, quo;
  while (!rem.is_zero()) {
    auto el = rem.leading_exponent();
    auto eq = q.leading_exponent();
    HomPoly::Exp diff = {el[0] - eq[0], el[1] - eq[1], el[2] - eq[2]};
    if (diff[0] < 0 || diff[1] < 0 || diff[2] < 0)
      throw std::logic_error("hompoly_div: not divisible");
    Cyclo c = rem.terms().rbegin()->second * q.terms().rbegin()->second.inverse();
    HomPoly t = HomPoly::monomial(c, diff[0], diff[1], diff[2]);
    quo += t;
    rem = rem - t * q;
  }
  return quo;
}

HomPoly binary_form_from_roots(const std::vector<Point>& pts) {
  HomPoly form = HomPoly::monomial(Cyclo(1), 0, 0, 0);
  for (const auto& p : pts) {
    const auto& v = p.coords();
    HomPoly lin = HomPoly::monomial(v[1], 0, 1, 0) - HomPoly::monomial(v[0], 0, 0, 1);
    form = form * lin;
  }
  return form;
}

RationalMap::RationalMap(HomPoly f1, HomPoly f2, HomPoly f3)
    : comp_{std::move(f1), std::move(f2), std::move(f3)} {
  if (comp_[0].is_zero() && comp_[1].is_zero() && comp_[2].is_zero())
    throw IndeterminateCollapse();
  int deg = -1;
  for (const auto& c : comp_)
    if (!c.is_zero()) {
      if (deg >= 0 && c.degree() != deg)
        throw std::invalid_argument("RationalMap: mixed degrees");
      deg = c.degree();
    }
  HomPoly g;
  for (const auto& c : comp_)
    if (!c.is_zero()) g = g.is_zero() ? c : hompoly_gcd(g, c);
  if (g.degree() > 0)
    for (auto& c : comp_)
      if (!c.is_zero()) c = hompoly_div(c, g);
  for (const auto& c : comp_)
    if (!c.is_zero()) {
      Cyclo inv = c.terms().rbegin()->second.inverse();
      for (auto& cc : comp_) cc = cc.scaled(inv);
      break;
    }
}

RationalMap RationalMap::identity() {
  return RationalMap(HomPoly::variable(0), HomPoly::variable(1),
                     HomPoly::variable(2));
}

RationalMap RationalMap::from_matrix(const Mat& m) {
  std::array<HomPoly, 3> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      c[i] += HomPoly::monomial(m.at(i, j), j == 0 ? 1 : 0, j == 1 ? 1 : 0,
                                j == 2 ? 1 : 0);
  return RationalMap(c[0], c[1], c[2]);
}

Mat RationalMap::to_matrix() const {
  if (!is_linear()) throw std::logic_error("to_matrix on nonlinear map");
  Mat m(3);
  for (int i = 0; i < 3; ++i) {
    m.at(i, 0) = comp_[i].coeff(1, 0, 0);
    m.at(i, 1) = comp_[i].coeff(0, 1, 0);
    m.at(i, 2) = comp_[i].coeff(0, 0, 1);
  }
  return m;
}

bool RationalMap::operator==(const RationalMap& o) const {
  return comp_[0] == o.comp_[0] && comp_[1] == o.comp_[1] && comp_[2] == o.comp_[2];
}

Point RationalMap::apply(const Point& p) const {
  std::vector<Cyclo> img(3);
  for (int i = 0; i < 3; ++i) img[i] = comp_[i].eval(p.coords());
  if (img[0].is_zero() && img[1].is_zero() && img[2].is_zero())
    throw IndeterminateCollapse();
  return Point(img);
}

std::string RationalMap::str() const {
  return "(" + comp_[0].str() + ", " + comp_[1].str() + ", " + comp_[2].str() + ")";
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  int d = f.degree();
  std::array<std::vector<HomPoly>, 3> pows;
  for (int i = 0; i < 3; ++i) {
    pows[i].push_back(HomPoly::monomial(Cyclo(1), 0, 0, 0));
    for (int k = 1; k <= d; ++k) pows[i].push_back(pows[i].back() * g.comp(i));
  }
  std::array<HomPoly, 3> out;
  for (int i = 0; i < 3; ++i)
    for (const auto& [e, c] : f.comp(i).terms())
      out[i] += (pows[0][e[0]] * pows[1][e[1]] * pows[2][e[2]]).scaled(c);
  if (out[0].is_zero() && out[1].is_zero() && out[2].is_zero())
    throw IndeterminateCollapse();
  return RationalMap(out[0], out[1], out[2]);
}

bool is_involution(const RationalMap& f) {
  return compose(f, f) == RationalMap::identity();
}

namespace {

// M with M . (f1,f2,f3)^T = (r1,r2,r3)^T as exact polynomial identities.
std::optional<Mat> solve_linear_factor(const RationalMap& f,
                                       const std::array<HomPoly, 3>& rhs) {
  std::vector<HomPoly::Exp> monomials;
  {
    std::set<HomPoly::Exp> s;
    for (int i = 0; i < 3; ++i) {
      for (const auto& [e, c] : f.comp(i).terms()) s.insert(e);
      for (const auto& [e, c] : rhs[i].terms()) s.insert(e);
    }
    monomials.assign(s.begin(), s.end());
  }
  CycloMatrix sys;
  std::vector<Cyclo> b;
  for (int i = 0; i < 3; ++i)
    for (const auto& e : monomials) {
      std::vector<Cyclo> row(9, Cyclo(0));
      for (int j = 0; j < 3; ++j) row[i * 3 + j] = f.comp(j).coeff(e[0], e[1], e[2]);
      sys.push_back(std::move(row));
      b.push_back(rhs[i].coeff(e[0], e[1], e[2]));
    }
  auto x = solve(sys, b);
  if (!x) return std::nullopt;
  Mat m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = (*x)[i * 3 + j];
  if (m.det().is_zero()) return std::nullopt;
  for (int i = 0; i < 3; ++i) {
    HomPoly lhs;
    for (int j = 0; j < 3; ++j) lhs += f.comp(j).scaled(m.at(i, j));
    if (!(lhs == rhs[i])) return std::nullopt;
  }
  return m;
}

std::array<HomPoly, 3> substitute_map(const RationalMap& f, const Mat& g) {
  return {f.comp(0).substitute_linear(g), f.comp(1).substitute_linear(g),
          f.comp(2).substitute_linear(g)};
}

}  // namespace

GroupAction conjugate_action(const RationalMap& f, const GroupAction& phi) {
  std::vector<Transform> conj;
  for (std::size_t k = 0; k < phi.gens.size(); ++k) {
    auto rhs = substitute_map(f, phi.gens[k].mat());
    auto m = solve_linear_factor(f, rhs);
    if (!m)
      throw NotRegularizable("conjugate of generator " + phi.gen_names[k] +
                             " is not linear");
    conj.push_back(Transform(*m));
  }
  GroupAction out = make_action(phi.gen_names, conj);
  out.note = phi.note;
  return out;
}

EquivarianceCertificate equivariance_certificate(const RationalMap& f,
                                                 const GroupAction& phi1,
                                                 const GroupAction& phi2) {
  EquivarianceCertificate cert;
  if (phi1.gens.size() != phi2.gens.size()) {
    cert.failure = "mismatched generator lists";
    return cert;
  }
  std::vector<int> images;
  for (std::size_t k = 0; k < phi1.gens.size(); ++k) {
    auto rhs = substitute_map(f, phi1.gens[k].mat());
    auto m = solve_linear_factor(f, rhs);
    if (!m) {
      cert.failure = "f . phi1(" + phi1.gen_names[k] + ") . f^-1 is not linear";
      return cert;
    }
    int id = phi2.group.find(Transform(*m));
    if (id < 0) {
      cert.failure = "conjugate of " + phi1.gen_names[k] + " lies outside phi2(G)";
      return cert;
    }
    images.push_back(id);
  }
  GroupTable t = GroupTable::from_group(phi2.group);
  int s = t.size();
  std::vector<int> fmap(s);
  std::vector<bool> hit(s, false);
  for (int e = 0; e < s; ++e) {
    int x = 0;
    for (int k : t.words()[e]) x = t.mul(x, images[k]);
    fmap[e] = x;
    if (hit[x]) {
      cert.failure = "generator images do not extend to an automorphism";
      return cert;
    }
    hit[x] = true;
  }
  for (int a2 = 0; a2 < s; ++a2)
    for (int b2 = 0; b2 < s; ++b2)
      if (fmap[t.mul(a2, b2)] != t.mul(fmap[a2], fmap[b2])) {
        cert.failure = "generator images do not extend to an automorphism";
        return cert;
      }
  cert.ok = true;
  cert.psi_gen_images = images;
  cert.psi_is_identity_on_gens = true;
  for (std::size_t k = 0; k < images.size(); ++k)
    if (images[k] != t.generator_ids()[k]) cert.psi_is_identity_on_gens = false;
  return cert;
}

namespace {

HomPoly x1() { return HomPoly::variable(0); }
HomPoly x2() { return HomPoly::variable(1); }
HomPoly x3() { return HomPoly::variable(2); }

HomPoly binary_substitute(const HomPoly& form, const Mat& b2) {
  Mat m = Mat::identity(3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i + 1, j + 1) = b2.at(i, j);
  return form.substitute_linear(m);
}

std::optional<Cyclo> proportionality(const HomPoly& p, const HomPoly& q) {
  if (p.is_zero()) return q.is_zero() ? std::optional<Cyclo>(Cyclo(0)) : std::nullopt;
  if (q.is_zero() || p.degree() != q.degree()) return std::nullopt;
  auto it = p.terms().begin();
  const Cyclo& qc = q.coeff(it->first[0], it->first[1], it->first[2]);
  if (qc.is_zero()) return std::nullopt;
  Cyclo c = qc * it->second.inverse();
  if (q == p.scaled(c)) return c;
  return std::nullopt;
}

std::pair<Mat, Mat> s4_residual_gens() {
  Cyclo z8 = Cyclo::zeta(8);
  Cyclo s1 = z8.pow(3) + z8 - Cyclo(1);
  Cyclo s2 = z8.pow(3) + z8 + Cyclo(1);
  Mat b(2), c(2);
  b.at(0, 0) = Cyclo(-2);
  b.at(0, 1) = s1;
  b.at(1, 0) = s2;
  b.at(1, 1) = Cyclo(2);
  c.at(0, 0) = -s2;
  c.at(0, 1) = Cyclo(-1);
  c.at(1, 0) = s1;
  c.at(1, 1) = s1 + Cyclo(1);
  return {b, c};
}

std::pair<Mat, Mat> a5_residual_gens() {
  Cyclo z = Cyclo::zeta(5);
  Mat a(2), b(2);
  a.at(0, 0) = z.pow(3) + z.pow(4);
  a.at(0, 1) = -(z.pow(4) + Cyclo(1));
  a.at(1, 0) = z.pow(3);
  a.at(1, 1) = z.pow(2) + z;
  b.at(0, 0) = Cyclo(0);
  b.at(0, 1) = z.pow(2);
  b.at(1, 0) = -z.pow(3);
  b.at(1, 1) = Cyclo(0);
  return {a, b};
}

HomPoly a4_h4() {
  Cyclo w = Cyclo::zeta(3);
  Cyclo a = (Cyclo(8) * w + Cyclo(4)) * Cyclo(Rational(1, 3));
  return HomPoly::monomial(Cyclo(1), 0, 4, 0) - HomPoly::monomial(a, 0, 3, 1) -
         HomPoly::monomial(Cyclo(2), 0, 2, 2) + HomPoly::monomial(a, 0, 1, 3) +
         HomPoly::monomial(Cyclo(1), 0, 0, 4);
}

HomPoly a4_f4() {
  Cyclo w = Cyclo::zeta(3);
  return HomPoly::monomial(Cyclo(1), 0, 3, 1) +
         HomPoly::monomial(-Cyclo(2) * w - Cyclo(1), 0, 2, 2) -
         HomPoly::monomial(Cyclo(1), 0, 1, 3);
}

HomPoly a4_f6() {
  Cyclo w = Cyclo::zeta(3);
  Cyclo a = Cyclo(4) * w + Cyclo(2);
  return HomPoly::monomial(Cyclo(1), 0, 6, 0) - HomPoly::monomial(a, 0, 5, 1) -
         HomPoly::monomial(Cyclo(5), 0, 4, 2) - HomPoly::monomial(Cyclo(5), 0, 2, 4) +
         HomPoly::monomial(a, 0, 1, 5) + HomPoly::monomial(Cyclo(1), 0, 0, 6);
}

}  // namespace

HomPoly semiinvariant_form(const std::vector<Transform>& residual_gens,
                           long target_orbit_length) {
  FiniteLinearGroup g = close_group(residual_gens);
  if (g.n != 2) throw std::invalid_argument("semiinvariant_form wants a P^1 action");
  std::map<std::string, Point> candidates;
  for (std::size_t i = 1; i < g.size(); ++i) {
    FixedLocus f = fixed_points(g.lift(static_cast<int>(i)));
    for (const auto& p : f.points) candidates.emplace(p.str(), p);
  }
  if (g.size() == 1) {
    Point p(std::vector<Cyclo>{Cyclo(1), Cyclo(0)});
    candidates.emplace(p.str(), p);
  }
  std::map<std::string, std::vector<Point>> orbits;
  for (auto& [key, p] : candidates) {
    auto orb = orbit(p, g);
    std::string okey;
    for (const auto& q : orb) okey += q.str() + ";";
    orbits.emplace(okey, orb);
  }
  for (auto& [key, orb] : orbits) {
    if (static_cast<long>(orb.size()) != target_orbit_length) continue;
    HomPoly form = HomPoly::monomial(Cyclo(1), 0, 0, 0);
    for (const auto& p : orb) {
      HomPoly lin = HomPoly::monomial(p.coords()[1], 0, 1, 0) -
                    HomPoly::monomial(p.coords()[0], 0, 0, 1);
      form = form * lin;
    }
    form = form.scaled(form.terms().rbegin()->second.inverse());
    for (const auto& t : residual_gens) {
      HomPoly image = binary_substitute(form, t.mat());
      if (!proportionality(form, image))
        throw std::logic_error("semiinvariant_form: orbit form not semi-invariant");
    }
    return form;
  }
  throw NoSuchOrbit("no orbit of length " + std::to_string(target_orbit_length));
}

RationalMap build_map(MapName name, const MapParams& params) {
  switch (name) {
    case MapName::IOTA:
      return RationalMap(x2() * x3(), x1() * x3(), x1() * x2());
    case MapName::GAMMA_DN: {
      long n = params.n;
      if (n < 2 || n % 2 != 0) throw InvalidParams("gamma_n needs even n >= 2");
      HomPoly fn = x2().pow(static_cast<int>(n)) - x3().pow(static_cast<int>(n));
      return RationalMap(x1() * x2().pow(static_cast<int>(n / 2)) *
                             x3().pow(static_cast<int>(n / 2)),
                         x2() * fn, x3() * fn);
    }
    case MapName::TAU_DN: {
      long n = params.n;
      if (n < 2 || n % 2 != 0) throw InvalidParams("tau needs even n >= 2");
      Cyclo ln = params.lambda.pow(n);
      if (ln.is_one()) throw InvalidParams("tau needs lambda^n != 1");
      HomPoly a = params.tau_in_x2x3 ? x2() : x1();
      HomPoly b = params.tau_in_x2x3 ? x3() : x2();
      HomPoly fl =
          (a.pow(static_cast<int>(n)) - b.pow(static_cast<int>(n)).scaled(ln)) *
          (b.pow(static_cast<int>(n)) - a.pow(static_cast<int>(n)).scaled(ln));
      HomPoly lead =
          x2().pow(static_cast<int>(2 * n)) - x3().pow(static_cast<int>(2 * n));
      return RationalMap(x1() * lead, x2() * fl, x3() * fl);
    }
    case MapName::THETA_A4: {
      const Cyclo& l = params.lambda;
      if (l.is_zero() || l.is_one()) throw InvalidParams("theta needs lambda not 0, 1");
      if ((l.pow(6) + Cyclo(1)).is_zero())
        throw InvalidParams("theta needs lambda^6 != -1");
      Cyclo l2 = l.pow(2), l4 = l.pow(4), l6 = l.pow(6), l8 = l.pow(8);
      Cyclo mix = (l.pow(12) + Cyclo(1)) * l2.inverse();
      HomPoly f1 = HomPoly::monomial(Cyclo(1), 4, 0, 1) -
                   HomPoly::monomial(mix, 2, 2, 1) + HomPoly::monomial(l8, 0, 4, 1) -
                   HomPoly::monomial(Cyclo(2) * l2, 2, 0, 3) -
                   HomPoly::monomial(Cyclo(2) * l6, 0, 2, 3) +
                   HomPoly::monomial(l4, 0, 0, 5);
      HomPoly f2 = HomPoly::monomial(l8, 4, 1, 0) -
                   HomPoly::monomial(Cyclo(2) * l6, 2, 3, 0) +
                   HomPoly::monomial(l4, 0, 5, 0) - HomPoly::monomial(mix, 2, 1, 2) -
                   HomPoly::monomial(Cyclo(2) * l2, 0, 3, 2) +
                   HomPoly::monomial(Cyclo(1), 0, 1, 4);
      HomPoly f3 = HomPoly::monomial(l4, 5, 0, 0) -
                   HomPoly::monomial(Cyclo(2) * l2, 3, 2, 0) +
                   HomPoly::monomial(Cyclo(1), 1, 4, 0) -
                   HomPoly::monomial(Cyclo(2) * l6, 3, 0, 2) -
                   HomPoly::monomial(mix, 1, 2, 2) + HomPoly::monomial(l8, 1, 0, 4);
      return RationalMap(f1, f2, f3);
    }
    case MapName::SIGMA_A4:
      return RationalMap(x1() * a4_h4(), x2() * a4_f4(), x3() * a4_f4());
    case MapName::GAMMA_A4:
      return RationalMap(a4_f6() * a4_h4(), x1() * x2() * a4_f4().pow(2),
                         x1() * x3() * a4_f4().pow(2));
    case MapName::SIGMA_S4: {
      auto [b, c] = s4_residual_gens();
      std::vector<Transform> gens = {Transform(b), Transform(c)};
      HomPoly f12 = semiinvariant_form(gens, 12);
      HomPoly f6 = semiinvariant_form(gens, 6);
      HomPoly h12 = f6 * f6;
      h12 = h12.scaled(h12.terms().rbegin()->second.inverse());
      return RationalMap(x1() * h12, x2() * f12, x3() * f12);
    }
    case MapName::GAMMA_S4: {
      auto [b, c] = s4_residual_gens();
      std::vector<Transform> gens = {Transform(b), Transform(c)};
      HomPoly f8 = semiinvariant_form(gens, 8);
      HomPoly f6 = semiinvariant_form(gens, 6);
      return RationalMap(f8, x1() * x2() * f6, x1() * x3() * f6);
    }
    case MapName::SIGMA_A5: {
      auto [a, b] = a5_residual_gens();
      std::vector<Transform> gens = {Transform(a), Transform(b)};
      HomPoly f12 = semiinvariant_form(gens, 12);
      HomPoly f20 = semiinvariant_form(gens, 20);
      HomPoly f30 = semiinvariant_form(gens, 30);
      return RationalMap(f12 * f20, x1() * x2() * f30, x1() * x3() * f30);
    }
  }
  throw InvalidParams("unknown map");
}

}  // namespace cremona
