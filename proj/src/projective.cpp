#include "cremona/projective.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "cremona/linalg.hpp"

namespace cremona {

namespace {
long safe_lcm(long a, long b) { return a / std::gcd(a, b) * b; }
}  // namespace

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclo(1);
  return m;
}

Mat Mat::diagonal(const std::vector<Cyclo>& d) {
  Mat m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n(); ++i) m.at(i, i) = d[i];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  return r;
}

std::vector<Cyclo> Mat::apply(const std::vector<Cyclo>& v) const {
  std::vector<Cyclo> r(n_, Cyclo(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  return r;
}

Mat Mat::transpose() const {
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
  return r;
}

Cyclo Mat::det() const {
  if (n_ == 1) return at(0, 0);
  if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  Cyclo d(0);
  d += at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
  d -= at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0));
  d += at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  return d;
}

Mat Mat::inverse() const {
  Cyclo d = det();
  if (d.is_zero()) throw SingularMatrix();
  Cyclo di = d.inverse();
  Mat r(n_);
  if (n_ == 1) {
    r.at(0, 0) = di;
    return r;
  }
  if (n_ == 2) {
    r.at(0, 0) = at(1, 1) * di;
    r.at(0, 1) = -at(0, 1) * di;
    r.at(1, 0) = -at(1, 0) * di;
    r.at(1, 1) = at(0, 0) * di;
    return r;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      r.at(j, i) = (at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) * di;
    }
  return r;
}

Mat Mat::scaled(const Cyclo& c) const {
  Mat r = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) * c;
  return r;
}

Mat Mat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Mat result = identity(n_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Mat::operator==(const Mat& o) const {
  if (n_ != o.n_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool Mat::is_scalar() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
      if (i == j && at(i, j) != at(0, 0)) return false;
    }
  return true;
}

std::vector<Cyclo> Mat::char_poly() const {
  if (n_ == 2) {
    Cyclo tr = at(0, 0) + at(1, 1);
    return {det(), -tr, Cyclo(1)};
  }
  Cyclo tr = at(0, 0) + at(1, 1) + at(2, 2);
  Cyclo m01 = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  Cyclo m02 = at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0);
  Cyclo m12 = at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
  return {-det(), m01 + m02 + m12, -tr, Cyclo(1)};
}

Mat Mat::embedded(long m) const {
  Mat r = *this;
  for (auto& c : r.a_) c = c.embedded(m);
  return r;
}

long Mat::entry_conductor_lcm() const {
  long m = 1;
  for (const auto& c : a_) m = safe_lcm(m, c.conductor());
  return m;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << "[";
    for (int j = 0; j < n_; ++j) os << at(i, j).str() << (j + 1 < n_ ? "," : "");
    os << "]" << (i + 1 < n_ ? "," : "");
  }
  os << "]";
  return os.str();
}

Point::Point(std::vector<Cyclo> v) : v_(std::move(v)) {
  std::size_t first = v_.size();
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (!v_[i].is_zero()) {
      first = i;
      break;
    }
  if (first == v_.size()) throw std::invalid_argument("zero vector is not a point");
  Cyclo inv = v_[first].inverse();
  // minimal forms make str() and hash() canonical keys
  for (auto& c : v_) c = (c * inv).minimal();
}

bool Point::operator==(const Point& o) const { return v_ == o.v_; }

std::size_t Point::hash() const {
  std::size_t h = 700001;
  for (const auto& c : v_) h = h * 131 + c.hash();
  return h;
}

std::string Point::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < v_.size(); ++i)
    s += v_[i].str() + (i + 1 < v_.size() ? ":" : "");
  return s + "]";
}

Point Point::embedded(long m) const {
  Point p;
  p.v_ = v_;
  for (auto& c : p.v_) c = c.embedded(m);
  return p;
}

Transform::Transform(const Mat& m) : m_(m), raw_(m) {
  if (m_.det().is_zero()) throw SingularMatrix();
  conductor_ = m_.entry_conductor_lcm();
  Cyclo first;
  bool found = false;
  for (int i = 0; i < m_.n() && !found; ++i)
    for (int j = 0; j < m_.n() && !found; ++j)
      if (!m_.at(i, j).is_zero()) {
        first = m_.at(i, j);
        found = true;
      }
  Cyclo inv = first.inverse();
  hash_ = 1469598103934665603ull;
  for (int i = 0; i < m_.n(); ++i)
    for (int j = 0; j < m_.n(); ++j) {
      m_.at(i, j) = (m_.at(i, j) * inv).embedded(conductor_);
      hash_ = hash_ * 1099511628211ull ^ m_.at(i, j).hash();
    }
}

Transform Transform::identity(int n) { return Transform(Mat::identity(n)); }

Transform Transform::operator*(const Transform& o) const {
  Transform t(m_ * o.m_);
  // keep raw inside the matrix group generated by the raw factors, where
  // every element admits a finite-order rescaling
  t.raw_ = raw_ * o.raw_;
  return t;
}

Transform Transform::inverse() const {
  Transform t(m_.inverse());
  t.raw_ = raw_.inverse();
  return t;
}

Point Transform::apply(const Point& p) const { return Point(m_.apply(p.coords())); }

bool Transform::operator==(const Transform& o) const { return m_ == o.m_; }

bool Transform::is_identity() const { return m_ == Mat::identity(m_.n()); }

Transform Transform::embedded(long m) const {
  Transform t(m_.embedded(m));
  t.raw_ = raw_.embedded(m);
  return t;
}

long projective_order(const Mat& m, long bound) {
  Transform t(m);
  Transform id = Transform::identity(m.n());
  Transform p = t;
  for (long k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * t;
  }
  throw NotFiniteOrder("projective order exceeds bound " + std::to_string(bound));
}

namespace {

// Exact k-th root of a positive rational, if one exists.
std::optional<Rational> rational_kth_root(const Rational& q, long k) {
  if (q <= 0) return std::nullopt;
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), q.get_num().get_mpz_t(),
               static_cast<unsigned long>(k)) == 0)
    return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), q.get_den().get_mpz_t(),
               static_cast<unsigned long>(k)) == 0)
    return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

Mat finite_order_lift(const Mat& m, long bound) {
  long k = projective_order(m, bound);
  Mat p = m.pow(k);
  if (!p.is_scalar()) throw std::logic_error("finite_order_lift: power not scalar");
  Cyclo c = p.at(0, 0);
  // candidate rescalings u: identity first, then individual entries (a
  // finite-order multiple with one root-of-unity-times-rational entry is
  // recovered by dividing that entry out)
  std::vector<Cyclo> candidates = {Cyclo(1)};
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (!m.at(i, j).is_zero() && !m.at(i, j).is_one())
        candidates.push_back(m.at(i, j));
  for (const Cyclo& u : candidates) {
    Cyclo cu = c * u.pow(k).inverse();  // the scalar of (m/u)^k
    if (cu.root_of_unity().has_value()) return m.scaled(u.inverse());
    Cyclo norm = cu * cu.conj();
    if (!norm.is_rational()) continue;
    auto q = rational_kth_root(norm.rational_value(), 2);
    if (!q) continue;
    if (!(cu * Cyclo(*q).inverse()).root_of_unity().has_value()) continue;
    if (auto root = rational_kth_root(*q, k))
      return m.scaled((u * Cyclo(*root)).inverse());
    // k even: q^(1/k) may be the square root of a rational
    if (k % 2 == 0) {
      if (auto half = rational_kth_root(*q, k / 2)) {
        Cyclo root = sqrt_rational(*half);
        return m.scaled((u * root).inverse());
      }
    }
  }
  throw NotFiniteOrder("no finite-order rescaling over a cyclotomic field");
}

long matrix_order_multiple(const Mat& lift, long bound) {
  long k = projective_order(lift, bound);
  Cyclo c = lift.pow(k).at(0, 0);
  auto ru = c.root_of_unity();
  if (!ru) throw NotFiniteOrder("matrix_order_multiple: not a finite-order lift");
  long l = ru->first, j = ru->second;
  long ord_c = (j == 0) ? 1 : l / std::gcd(l, j);
  return k * ord_c;
}

namespace {

// Roots (with multiplicity) of a monic polynomial all of whose roots are
// m-th roots of unity, by trial synthetic division.
std::vector<std::pair<Cyclo, int>> unity_roots(std::vector<Cyclo> poly, long m,
                                               long conductor) {
  long big = safe_lcm(conductor, m);
  std::vector<std::pair<Cyclo, int>> roots;
  for (long j = 0; j < m && poly.size() > 1; ++j) {
    Cyclo lambda = Cyclo::zeta(m, j).embedded(big);
    int mult = 0;
    while (poly.size() > 1) {
      Cyclo val = poly.back();
      for (int i = static_cast<int>(poly.size()) - 2; i >= 0; --i)
        val = val * lambda + poly[i];
      if (!val.is_zero()) break;
      std::vector<Cyclo> quo(poly.size() - 1, Cyclo(0));
      Cyclo carry(0);
      for (int i = static_cast<int>(poly.size()) - 1; i >= 1; --i) {
        quo[i - 1] = poly[i] + carry;
        carry = quo[i - 1] * lambda;
      }
      poly = quo;
      ++mult;
    }
    if (mult > 0) roots.emplace_back(lambda, mult);
  }
  if (poly.size() > 1)
    throw std::logic_error("unity_roots: roots are not roots of unity");
  return roots;
}

}  // namespace

FixedLocus fixed_points(const Mat& g_in) {
  Mat g = finite_order_lift(g_in);
  int n = g.n();
  FixedLocus out;
  if (g.is_scalar()) {
    out.whole_space = true;
    return out;
  }
  long m = matrix_order_multiple(g);
  long big = safe_lcm(g.entry_conductor_lcm(), m);
  Mat ge = g.embedded(big);
  auto roots = unity_roots(ge.char_poly(), m, big);

  for (const auto& [lambda, mult] : roots) {
    CycloMatrix mm(n, std::vector<Cyclo>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mm[i][j] = ge.at(i, j) - (i == j ? lambda : Cyclo(0));
    auto basis = kernel_basis(mm);
    if (static_cast<int>(basis.size()) != mult)
      throw std::logic_error("fixed_points: defective finite-order matrix");
    if (basis.size() == 1) {
      out.points.emplace_back(basis[0]);
      out.point_values.push_back(lambda);
    } else if (basis.size() == 2 && n == 3) {
      const auto& u = basis[0];
      const auto& v = basis[1];
      std::vector<Cyclo> d = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                              u[0] * v[1] - u[1] * v[0]};
      out.lines.emplace_back(d);
      out.line_values.push_back(lambda);
    } else {
      throw std::logic_error("fixed_points: unexpected eigenspace dimension");
    }
  }
  return out;
}

Transform evaluate_word(const std::vector<Transform>& gens,
                        const std::vector<int>& word, int n) {
  Transform t = Transform::identity(n);
  for (int g : word) t = t * gens[g];
  return t;
}

Mat evaluate_word_lift(const std::vector<Mat>& gen_lifts,
                       const std::vector<int>& word, int n) {
  Mat m = Mat::identity(n);
  for (int g : word) m = m * gen_lifts[g];
  return m;
}

int FiniteLinearGroup::find(const Transform& t) const {
  Transform probe = t;
  if (t.conductor() != conductor) {
    if (conductor % t.conductor() == 0) {
      probe = t.embedded(conductor);
    } else {
      for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == t) return static_cast<int>(i);
      return -1;
    }
  }
  auto it = index_.find(probe.hash());
  if (it == index_.end()) return -1;
  for (int i : it->second)
    if (elements[i] == probe) return i;
  return -1;
}

int FiniteLinearGroup::mul(int i, int j) const {
  return find(elements[i] * elements[j]);
}

int FiniteLinearGroup::inverse_of(int i) const {
  return find(elements[i].inverse());
}

long FiniteLinearGroup::order_of(int i) const {
  Transform id = Transform::identity(n), p = elements[i];
  long k = 1;
  while (!(p == id)) {
    p = p * elements[i];
    ++k;
  }
  return k;
}

Mat FiniteLinearGroup::lift(int i) const {
  return evaluate_word_lift(gen_lifts, words[i], n);
}

bool FiniteLinearGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

std::vector<long> FiniteLinearGroup::element_orders() const {
  std::vector<long> orders;
  orders.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) orders.push_back(order_of(i));
  std::sort(orders.begin(), orders.end());
  return orders;
}

FiniteLinearGroup close_group(const std::vector<Transform>& gens_in, long bound) {
  if (gens_in.empty()) throw std::invalid_argument("close_group: no generators");
  FiniteLinearGroup g;
  g.n = gens_in[0].n();
  long m = 1;
  for (const auto& t : gens_in) {
    if (t.n() != g.n) throw std::invalid_argument("close_group: mixed dimensions");
    m = safe_lcm(m, t.conductor());
  }
  g.conductor = m;
  for (const auto& t : gens_in) g.gens.push_back(t.embedded(m));
  for (const auto& t : gens_in) {
    try {
      g.gen_lifts.push_back(finite_order_lift(t.raw()));
    } catch (const NotFiniteOrder&) {
      try {
        g.gen_lifts.push_back(finite_order_lift(t.mat()));
      } catch (const NotFiniteOrder& e) {
        throw OrderBoundExceeded(std::string("generator has no finite order: ") +
                                 e.what());
      }
    }
  }

  auto add = [&](const Transform& t, std::vector<int> word, int par, int via) -> int {
    int id = g.find(t);
    if (id >= 0) return -1;
    g.elements.push_back(t);
    g.words.push_back(std::move(word));
    g.parent.push_back(par);
    g.via_gen.push_back(via);
    g.index_[t.hash()].push_back(static_cast<int>(g.elements.size()) - 1);
    return static_cast<int>(g.elements.size()) - 1;
  };

  add(Transform::identity(g.n).embedded(m), {}, -1, -1);
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < g.gens.size(); ++k) {
      Transform next = g.elements[cur] * g.gens[k];
      std::vector<int> word = g.words[cur];
      word.push_back(static_cast<int>(k));
      int id = add(next, std::move(word), cur, static_cast<int>(k));
      if (id >= 0) {
        if (static_cast<long>(g.elements.size()) > bound)
          throw OrderBoundExceeded("partial closure exceeds " +
                                   std::to_string(bound));
        queue.push_back(id);
      }
    }
  }
  return g;
}

std::vector<Point> orbit(const Point& p, const FiniteLinearGroup& g) {
  std::map<std::string, Point> seen;
  for (const auto& t : g.elements) {
    Point q = t.apply(p);
    seen.emplace(q.str(), q);
  }
  std::vector<Point> out;
  out.reserve(seen.size());
  for (auto& [k, q] : seen) out.push_back(q);
  return out;
}

namespace {

// Orbit scan with early exit once the orbit would exceed max_len.
std::optional<std::vector<Point>> bounded_orbit(const Point& p,
                                                const FiniteLinearGroup& g,
                                                long max_len) {
  std::map<std::string, Point> seen;
  std::deque<Point> queue;
  seen.emplace(p.str(), p);
  queue.push_back(p);
  while (!queue.empty()) {
    Point cur = queue.front();
    queue.pop_front();
    for (const auto& t : g.gens) {
      Point q = t.apply(cur);
      std::string key = q.str();
      if (seen.count(key)) continue;
      seen.emplace(key, q);
      if (static_cast<long>(seen.size()) > max_len) return std::nullopt;
      queue.push_back(q);
    }
  }
  std::vector<Point> out;
  for (auto& [k, q] : seen) out.push_back(q);
  return out;
}

std::string orbit_key(const std::vector<Point>& pts) {
  std::string key;
  for (const auto& p : pts) key += p.str() + ";";
  return key;
}

// Does t fix every point of the line spanned by the two basis points?
bool fixes_line_pointwise(const Transform& t, const std::vector<Point>& basis) {
  Point pa(t.mat().apply(basis[0].coords()));
  Point pb(t.mat().apply(basis[1].coords()));
  if (!(pa == basis[0]) || !(pb == basis[1])) return false;
  std::vector<Cyclo> sum(basis[0].coords().size());
  for (std::size_t i = 0; i < sum.size(); ++i)
    sum[i] = basis[0].coords()[i] + basis[1].coords()[i];
  return Point(t.mat().apply(sum)) == Point(sum);
}

std::vector<Point> line_point_basis(const Point& dual) {
  CycloMatrix m = {dual.coords()};
  auto basis = kernel_basis(m);
  std::vector<Point> out;
  for (auto& v : basis) out.emplace_back(v);
  return out;
}

}  // namespace

std::vector<OrbitRecord> small_orbits(const FiniteLinearGroup& g, long max_len) {
  std::map<std::string, Point> candidates;
  std::map<std::string, Point> line_set;
  for (std::size_t i = 1; i < g.elements.size(); ++i) {
    FixedLocus f = fixed_points(g.lift(static_cast<int>(i)));
    for (const auto& p : f.points) candidates.emplace(p.str(), p);
    for (const auto& l : f.lines) line_set.emplace(l.str(), l);
  }
  std::vector<Point> lines;
  for (auto& [k, l] : line_set) lines.push_back(l);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& u = lines[i].coords();
      const auto& v = lines[j].coords();
      std::vector<Cyclo> x = {u[1] * v[2] - u[2] * v[1],
                              u[2] * v[0] - u[0] * v[2],
                              u[0] * v[1] - u[1] * v[0]};
      bool zero =
          std::all_of(x.begin(), x.end(), [](const Cyclo& c) { return c.is_zero(); });
      if (!zero) {
        Point p(x);
        candidates.emplace(p.str(), p);
      }
    }

  std::map<std::string, OrbitRecord> records;
  for (auto& [key, p] : candidates) {
    auto orb = bounded_orbit(p, g, max_len);
    if (!orb) continue;
    OrbitRecord rec;
    rec.length = static_cast<long>(orb->size());
    rec.points = *orb;
    rec.key = orbit_key(rec.points);
    records.emplace(rec.key, rec);
  }

  // 1-parameter families: pointwise-fixed lines whose pointwise stabilizer
  // has index <= max_len; one record per G-orbit of such lines.
  std::set<std::string> seen_lines;
  std::vector<OrbitRecord> families;
  for (const auto& l : lines) {
    if (seen_lines.count(l.str())) continue;
    std::map<std::string, Point> line_orbit;
    for (const auto& t : g.elements) {
      Point img(t.mat().inverse().transpose().apply(l.coords()));
      line_orbit.emplace(img.str(), img);
    }
    for (auto& [lk, lv] : line_orbit) seen_lines.insert(lk);
    auto basis = line_point_basis(l);
    long stab = 0;
    for (const auto& t : g.elements)
      if (fixes_line_pointwise(t, basis)) ++stab;
    long generic_len = static_cast<long>(g.size()) / stab;
    if (generic_len <= max_len) {
      OrbitRecord rec;
      rec.is_family = true;
      rec.length = generic_len;
      rec.family_line = l;
      rec.key = "family:" + l.str();
      families.push_back(rec);
    }
  }

  std::vector<OrbitRecord> out;
  for (auto& [k, rec] : records) out.push_back(rec);
  std::sort(out.begin(), out.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
    return std::tie(a.length, a.key) < std::tie(b.length, b.key);
  });
  std::sort(families.begin(), families.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) {
              return std::tie(a.length, a.key) < std::tie(b.length, b.key);
            });
  for (auto& f : families) out.push_back(f);
  return out;
}

GeneralPositionReport general_position(const std::vector<Point>& pts) {
  GeneralPositionReport rep;
  std::size_t k = pts.size();
  for (std::size_t a = 0; a < k && !rep.any_three_collinear; ++a)
    for (std::size_t b = a + 1; b < k && !rep.any_three_collinear; ++b)
      for (std::size_t c = b + 1; c < k; ++c) {
        Mat m(3);
        for (int j = 0; j < 3; ++j) {
          m.at(0, j) = pts[a].coords()[j];
          m.at(1, j) = pts[b].coords()[j];
          m.at(2, j) = pts[c].coords()[j];
        }
        if (m.det().is_zero()) {
          rep.any_three_collinear = true;
          break;
        }
      }
  CycloMatrix v;
  for (const auto& p : pts) {
    const auto& c = p.coords();
    v.push_back({c[0] * c[0], c[1] * c[1], c[2] * c[2], c[0] * c[1], c[0] * c[2],
                 c[1] * c[2]});
  }
  rep.on_common_conic = rank(v) < 6;
  return rep;
}

std::vector<std::string> eigenvalue_ratio_fingerprint(const Mat& lift) {
  long m = matrix_order_multiple(lift);
  long big = safe_lcm(lift.entry_conductor_lcm(), m);
  auto roots = unity_roots(lift.embedded(big).char_poly(), m, big);
  std::vector<Cyclo> eigenvalues;
  for (const auto& [lambda, mult] : roots)
    for (int i = 0; i < mult; ++i) eigenvalues.push_back(lambda);
  std::vector<std::string> ratios;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
      if (i == j) continue;
      ratios.push_back((eigenvalues[i] * eigenvalues[j].inverse()).minimal().str());
    }
  std::sort(ratios.begin(), ratios.end());
  return ratios;
}

namespace {

// Unique h with h(src_i) = dst_i for a projective frame of n+1 points.
std::optional<Transform> transform_from_frames(const std::vector<Point>& src,
                                               const std::vector<Point>& dst) {
  int n = src[0].dim();
  CycloMatrix ms(n, std::vector<Cyclo>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ms[i][j] = src[j].coords()[i];
  auto coeff_s = solve(ms, src[n].coords());
  if (!coeff_s) return std::nullopt;
  CycloMatrix md(n, std::vector<Cyclo>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) md[i][j] = dst[j].coords()[i];
  auto coeff_d = solve(md, dst[n].coords());
  if (!coeff_d) return std::nullopt;
  for (int j = 0; j < n; ++j)
    if ((*coeff_s)[j].is_zero() || (*coeff_d)[j].is_zero()) return std::nullopt;
  Mat hs(n), hd(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      hs.at(i, j) = src[j].coords()[i] * (*coeff_s)[j];
      hd.at(i, j) = dst[j].coords()[i] * (*coeff_d)[j];
    }
  Mat h = hd * hs.inverse();
  if (h.det().is_zero()) return std::nullopt;
  return Transform(h);
}

bool verify_conjugator(const Transform& h, const std::vector<Transform>& phi1,
                       const std::vector<Transform>& phi2) {
  Transform hi = h.inverse();
  for (std::size_t k = 0; k < phi1.size(); ++k)
    if (!(h * phi1[k] * hi == phi2[k])) return false;
  return true;
}

std::vector<Cyclo> nth_root_candidates(const Cyclo& d, int n) {
  auto ru = d.root_of_unity();
  if (!ru) return {};
  long l = ru->first, j = ru->second;
  std::vector<Cyclo> out;
  for (int t = 0; t < n; ++t) out.push_back(Cyclo::zeta(n * l, j + t * l));
  return out;
}

std::optional<Transform> linear_intertwiner(const std::vector<Mat>& lifts1,
                                            const std::vector<Mat>& lifts2,
                                            const std::vector<Transform>& phi1,
                                            const std::vector<Transform>& phi2) {
  int n = lifts1[0].n();
  std::size_t g = lifts1.size();
  std::vector<std::vector<Cyclo>> scalar_choices;
  for (std::size_t k = 0; k < g; ++k) {
    Cyclo d = lifts1[k].det() * lifts2[k].det().inverse();
    auto cands = nth_root_candidates(d, n);
    if (cands.empty()) return std::nullopt;
    scalar_choices.push_back(cands);
  }
  std::vector<std::size_t> pick(g, 0);
  while (true) {
    CycloMatrix sys;
    for (std::size_t k = 0; k < g; ++k) {
      const Mat& a = lifts1[k];
      const Mat& b = lifts2[k];
      const Cyclo& c = scalar_choices[k][pick[k]];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::vector<Cyclo> row(n * n, Cyclo(0));
          for (int t = 0; t < n; ++t) {
            row[i * n + t] += a.at(t, j);
            row[t * n + j] -= c * b.at(i, t);
          }
          sys.push_back(std::move(row));
        }
    }
    auto basis = kernel_basis(sys);
    auto try_vec = [&](const std::vector<Cyclo>& v) -> std::optional<Transform> {
      Mat h(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.at(i, j) = v[i * n + j];
      if (h.det().is_zero()) return std::nullopt;
      Transform ht(h);
      if (verify_conjugator(ht, phi1, phi2)) return ht;
      return std::nullopt;
    };
    for (const auto& v : basis)
      if (auto h = try_vec(v)) return h;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b)
        for (long t = 1; t <= 4; ++t) {
          std::vector<Cyclo> v(basis[a].size());
          for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = basis[a][i] + Cyclo(t) * basis[b][i];
          if (auto h = try_vec(v)) return h;
        }
    std::size_t k = 0;
    while (k < g) {
      if (++pick[k] < scalar_choices[k].size()) break;
      pick[k] = 0;
      ++k;
    }
    if (k == g) return std::nullopt;
  }
}

}  // namespace

ConjugacyResult find_conjugator(const std::vector<Transform>& phi1,
                                const std::vector<Transform>& phi2) {
  ConjugacyResult res;
  if (phi1.size() != phi2.size() || phi1.empty())
    throw std::invalid_argument("find_conjugator: mismatched generator lists");
  int n = phi1[0].n();

  std::vector<Mat> lifts1, lifts2;
  for (const auto& t : phi1) lifts1.push_back(finite_order_lift(t.raw()));
  for (const auto& t : phi2) lifts2.push_back(finite_order_lift(t.raw()));

  FiniteLinearGroup g1 = close_group(phi1);

  // fast prefilter: eigenvalue-ratio multisets agree on matched elements
  std::size_t scan = std::min<std::size_t>(g1.size(), 64);
  for (std::size_t i = 1; i < scan; ++i) {
    Mat l1 = g1.lift(static_cast<int>(i));
    Mat l2 = evaluate_word_lift(lifts2, g1.words[i], n);
    if (eigenvalue_ratio_fingerprint(l1) != eigenvalue_ratio_fingerprint(l2)) {
      res.conjugate = false;
      res.certificate = "eigenvalue-ratio multiset differs on matched word [";
      for (int w : g1.words[i]) res.certificate += std::to_string(w) + " ";
      res.certificate += "]";
      return res;
    }
  }

  // frame search over characteristic eigenpoints, elements of large order
  // first
  std::vector<std::pair<long, int>> ranked;
  for (std::size_t i = 1; i < g1.size(); ++i)
    ranked.emplace_back(-g1.order_of(static_cast<int>(i)), static_cast<int>(i));
  std::sort(ranked.begin(), ranked.end());

  const int kMaxAnchors = 6;
  int anchors_tried = 0;
  for (const auto& [negord, i] : ranked) {
    if (anchors_tried >= kMaxAnchors) break;
    Mat l1 = g1.lift(i);
    FixedLocus f1 = fixed_points(l1);
    if (static_cast<int>(f1.points.size()) != n) continue;
    ++anchors_tried;
    Mat l2 = evaluate_word_lift(lifts2, g1.words[i], n);
    FixedLocus f2 = fixed_points(l2);
    if (static_cast<int>(f2.points.size()) != n) continue;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> pairings;
    do {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b) {
          if (a == b) continue;
          Cyclo r1 = f1.point_values[a] * f1.point_values[b].inverse();
          Cyclo r2 = f2.point_values[perm[a]] * f2.point_values[perm[b]].inverse();
          if (!(r1 == r2)) ok = false;
        }
      if (ok) pairings.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& [negord2, i2] : ranked) {
      if (i2 == i) continue;
      FixedLocus fa = fixed_points(g1.lift(i2));
      if (fa.points.empty()) continue;
      FixedLocus fb = fixed_points(evaluate_word_lift(lifts2, g1.words[i2], n));
      for (const auto& pairing : pairings) {
        for (const auto& pextra : fa.points) {
          for (const auto& qextra : fb.points) {
            std::vector<Point> src(f1.points.begin(), f1.points.end());
            std::vector<Point> dst(n);
            for (int a = 0; a < n; ++a) dst[a] = f2.points[pairing[a]];
            src.push_back(pextra);
            dst.push_back(qextra);
            auto h = transform_from_frames(src, dst);
            if (h && verify_conjugator(*h, phi1, phi2)) {
              res.conjugate = true;
              res.h = *h;
              return res;
            }
          }
        }
      }
      break;  // one auxiliary element per anchor; the fallback is complete
    }
  }

  if (auto h = linear_intertwiner(lifts1, lifts2, phi1, phi2)) {
    res.conjugate = true;
    res.h = *h;
    return res;
  }
  res.conjugate = false;
  res.certificate = "no projective intertwiner for any scalar character twist";
  return res;
}

}  // namespace cremona
