#include "cremona/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cremona/linalg.hpp"

namespace cremona {

namespace {

// Common fixed points of all generators: intersect the fixed loci.
// Components are points and pointwise-fixed lines.
struct LocusComponents {
  std::vector<Point> points;
  std::vector<Point> lines;  // dual coordinates
  bool whole_space = false;
};

LocusComponents locus_of(const Mat& lift) {
  FixedLocus f = fixed_points(lift);
  LocusComponents out;
  out.whole_space = f.whole_space;
  out.points = f.points;
  out.lines = f.lines;
  return out;
}

bool point_on_line(const Point& p, const Point& dual) {
  Cyclo s(0);
  for (int i = 0; i < 3; ++i) s += p.coords()[i] * dual.coords()[i];
  return s.is_zero();
}

LocusComponents intersect(const LocusComponents& a, const LocusComponents& b) {
  if (a.whole_space) return b;
  if (b.whole_space) return a;
  LocusComponents out;
  std::map<std::string, Point> pts;
  auto add_point = [&](const Point& p) { pts.emplace(p.str(), p); };
  for (const auto& p : a.points) {
    bool keep = false;
    for (const auto& q : b.points)
      if (p == q) keep = true;
    for (const auto& l : b.lines)
      if (point_on_line(p, l)) keep = true;
    if (keep) add_point(p);
  }
  for (const auto& p : b.points) {
    for (const auto& l : a.lines)
      if (point_on_line(p, l)) add_point(p);
  }
  for (const auto& l1 : a.lines)
    for (const auto& l2 : b.lines) {
      if (l1 == l2) {
        out.lines.push_back(l1);
        continue;
      }
      const auto& u = l1.coords();
      const auto& v = l2.coords();
      std::vector<Cyclo> x = {u[1] * v[2] - u[2] * v[1],
                              u[2] * v[0] - u[0] * v[2],
                              u[0] * v[1] - u[1] * v[0]};
      bool zero = std::all_of(x.begin(), x.end(),
                              [](const Cyclo& c) { return c.is_zero(); });
      if (!zero) add_point(Point(x));
    }
  for (auto& [k, p] : pts) out.points.push_back(p);
  return out;
}

}  // namespace

ActionType action_type(const GroupAction& g) {
  if (g.group.n != 3) throw NotClassified("classification needs a P^2 action");
  ActionType out;
  LocusComponents common;
  common.whole_space = true;
  for (std::size_t k = 0; k < g.gens.size(); ++k)
    common = intersect(common, locus_of(g.group.gen_lifts[k]));
  if (common.whole_space) {
    // trivial group: every point fixed; report a canonical witness
    out.tag = ActionTypeTag::I;
    out.fixed_points = {Point({Cyclo(1), Cyclo(0), Cyclo(0)})};
    return out;
  }
  std::map<std::string, Point> fixed;
  for (const auto& p : common.points) fixed.emplace(p.str(), p);
  for (const auto& l : common.lines) {
    // a pointwise-fixed common line: infinitely many fixed points; keep two
    CycloMatrix m = {l.coords()};
    for (auto& v : kernel_basis(m)) {
      Point p(v);
      fixed.emplace(p.str(), p);
    }
  }
  if (!fixed.empty()) {
    out.tag = ActionTypeTag::I;
    for (auto& [k, p] : fixed) out.fixed_points.push_back(p);
    return out;
  }
  for (const auto& rec : small_orbits(g.group, 3)) {
    if (!rec.is_family && rec.length == 3) {
      out.tag = ActionTypeTag::T;
      out.witness_orbit = rec.points;
      return out;
    }
  }
  out.tag = ActionTypeTag::P;
  return out;
}

namespace {

ResidualTag tag_of(const GroupTable& t) {
  GroupSignature sig = signature_of(t);
  long max_order = sig.element_orders.back();
  if (max_order == sig.order) return ResidualTag::Cyclic;
  if (sig == signature_a4()) return ResidualTag::A4;
  if (sig == signature_s4()) return ResidualTag::S4;
  if (sig == signature_a5()) return ResidualTag::A5;
  return ResidualTag::Dihedral;
}

}  // namespace

std::string residual_tag_name(ResidualTag t) {
  switch (t) {
    case ResidualTag::Cyclic: return "C";
    case ResidualTag::Dihedral: return "D";
    case ResidualTag::A4: return "A4";
    case ResidualTag::S4: return "S4";
    case ResidualTag::A5: return "A5";
  }
  return "?";
}

std::vector<IntransitiveData> intransitive_data_all(const GroupAction& g) {
  ActionType type = action_type(g);
  if (type.tag != ActionTypeTag::I) throw NotIntransitive();

  // invariant lines = fixed points of the dual action
  std::vector<Mat> dual_lifts;
  for (const auto& l : g.group.gen_lifts) dual_lifts.push_back(l.inverse().transpose());
  LocusComponents dual_common;
  dual_common.whole_space = true;
  for (const auto& l : dual_lifts) dual_common = intersect(dual_common, locus_of(l));
  std::vector<Point> lines;
  {
    std::map<std::string, Point> ls;
    for (const auto& p : dual_common.points) ls.emplace(p.str(), p);
    for (const auto& dl : dual_common.lines) {
      CycloMatrix m = {dl.coords()};
      for (auto& v : kernel_basis(m)) {
        Point p(v);
        ls.emplace(p.str(), p);
      }
    }
    for (auto& [k, p] : ls) lines.push_back(p);
  }

  std::vector<IntransitiveData> out;
  for (const auto& fp : type.fixed_points) {
    for (const auto& line : lines) {
      if (point_on_line(fp, line)) continue;  // need a complementary line
      IntransitiveData d;
      d.fixed_point = fp;
      d.line = line;
      // basis of the invariant plane
      CycloMatrix lm = {line.coords()};
      auto basis = kernel_basis(lm);
      d.line_basis = basis;
      // restriction of each element lift to the plane, and the fixed-point
      // eigenvalue; C_t = elements acting as scalars on the plane
      auto restrict = [&](const Mat& lift) -> std::optional<Mat> {
        CycloMatrix cols(3, std::vector<Cyclo>(2));
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 2; ++j) cols[i][j] = basis[j][i];
        Mat r(2);
        for (int j = 0; j < 2; ++j) {
          auto img = lift.apply(basis[j]);
          auto sol = solve(cols, img);
          if (!sol) return std::nullopt;
          r.at(0, j) = (*sol)[0];
          r.at(1, j) = (*sol)[1];
        }
        return r;
      };
      bool valid = true;
      std::vector<Transform> residual;
      for (std::size_t k = 0; k < g.gens.size() && valid; ++k) {
        auto r = restrict(g.group.gen_lifts[k]);
        if (!r || r->det().is_zero())
          valid = false;
        else
          residual.push_back(Transform(*r));
      }
      if (!valid) continue;
      d.residual = residual;

      for (std::size_t i = 0; i < g.group.size(); ++i) {
        Mat lift = g.group.lift(static_cast<int>(i));
        auto r = restrict(lift);
        if (!r) continue;
        if (r->at(0, 1).is_zero() && r->at(1, 0).is_zero() &&
            r->at(0, 0) == r->at(1, 1))
          d.c_t_elements.push_back(static_cast<int>(i));
      }
      d.t = static_cast<long>(d.c_t_elements.size());

      // generator of the cyclic C_t: any member of full order
      d.c_t_generator = 0;
      for (int e : d.c_t_elements)
        if (g.group.order_of(e) == d.t) {
          d.c_t_generator = e;
          break;
        }
      if (d.t > 1 && d.c_t_generator == 0 && g.group.order_of(0) != d.t)
        throw std::logic_error("intransitive_data: C_t not cyclic");

      // chi: normal eigenvalue over line eigenvalue of the chosen generator
      if (d.t > 1) {
        Mat lift = g.group.lift(d.c_t_generator);
        auto r = restrict(lift);
        Cyclo line_eval = r->at(0, 0);
        auto img = lift.apply(fp.coords());
        // img = a * fp with fp canonically scaled
        Cyclo a(0);
        for (int i = 0; i < 3; ++i)
          if (!fp.coords()[i].is_zero()) {
            a = img[i] * fp.coords()[i].inverse();
            break;
          }
        Cyclo ratio = a * line_eval.inverse();
        Cyclo z = Cyclo::zeta(d.t);
        Cyclo p(1);
        bool found = false;
        for (long b = 0; b < d.t; ++b) {
          if (ratio == p) {
            d.chi = b;
            found = true;
            break;
          }
          p = p * z;
        }
        if (!found) throw std::logic_error("intransitive_data: chi not a power of zeta_t");
      }

      FiniteLinearGroup rg = close_group(residual);
      d.residual_order = static_cast<long>(rg.size());
      d.residual_tag = tag_of(GroupTable::from_group(rg));
      out.push_back(std::move(d));
    }
  }
  if (out.empty()) throw NotIntransitive();
  return out;
}

IntransitiveData intransitive_data(const GroupAction& g) {
  auto all = intransitive_data_all(g);
  // prefer noncyclic residual (unique choice in the nonabelian case), then
  // the largest generic stabilizer
  const IntransitiveData* best = &all.front();
  for (const auto& d : all) {
    bool d_noncyc = d.residual_tag != ResidualTag::Cyclic;
    bool b_noncyc = best->residual_tag != ResidualTag::Cyclic;
    if (std::make_tuple(d_noncyc, d.t) > std::make_tuple(b_noncyc, best->t))
      best = &d;
  }
  return *best;
}

P1IsoResult p1_actions_isomorphic(const std::vector<Transform>& res1,
                                  const std::vector<Transform>& res2,
                                  CompareMode mode) {
  P1IsoResult out;
  if (mode == CompareMode::Strict) {
    auto r = find_conjugator(res1, res2);
    out.isomorphic = r.conjugate;
    if (r.conjugate) out.conjugator = r.h;
    return out;
  }
  FiniteLinearGroup g1 = close_group(res1);
  GroupTable t1 = GroupTable::from_group(g1);
  AutomorphismTable auts = automorphisms(t1);
  for (std::size_t a = 0; a < auts.maps.size(); ++a) {
    // evaluate the twisted generator images psi(g_k) in res2 via words
    std::vector<Transform> twisted;
    bool ok = true;
    for (std::size_t k = 0; k < res1.size() && ok; ++k) {
      int img = auts.maps[a][t1.generator_ids()[k]];
      twisted.push_back(evaluate_word(res2, g1.words[img], g1.n));
    }
    if (!ok) continue;
    auto r = find_conjugator(res1, twisted);
    if (r.conjugate) {
      out.isomorphic = true;
      out.conjugator = r.h;
      out.automorphism = static_cast<int>(a);
      return out;
    }
  }
  return out;
}

}  // namespace cremona
