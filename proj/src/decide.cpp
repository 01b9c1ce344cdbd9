#include "cremona/decide.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "cremona/group_table.hpp"
#include "cremona/linalg.hpp"

namespace cremona {

std::string answer_name(Answer a) {
  switch (a) {
    case Answer::ConjugateInPGL3: return "ConjugateInPGL3";
    case Answer::ConjugateInCr2: return "ConjugateInCr2";
    case Answer::NotConjugate: return "NotConjugate";
    case Answer::OutOfScope: return "OutOfScope";
  }
  return "?";
}

namespace {

struct PglResult {
  bool found = false;
  Transform h;
  std::vector<int> psi;
};

// matched conjugator search, sweeping automorphism twists in UpToAut mode
PglResult pgl_conjugate(const GroupAction& a, const GroupAction& b,
                        CompareMode mode) {
  PglResult out;
  auto direct = find_conjugator(a.gens, b.gens);
  if (direct.conjugate) {
    out.found = true;
    out.h = direct.h;
    return out;
  }
  if (mode == CompareMode::Strict) return out;
  GroupTable t = GroupTable::from_group(a.group);
  AutomorphismTable auts = automorphisms(t);
  for (const auto& psi : auts.maps) {
    std::vector<Transform> twisted;
    for (std::size_t k = 0; k < a.gens.size(); ++k) {
      int img = psi[t.generator_ids()[k]];
      twisted.push_back(evaluate_word(b.gens, t.words()[img], b.group.n));
    }
    auto r = find_conjugator(a.gens, twisted);
    if (r.conjugate) {
      out.found = true;
      out.h = r.h;
      for (std::size_t k = 0; k < a.gens.size(); ++k)
        out.psi.push_back(psi[t.generator_ids()[k]]);
      return out;
    }
  }
  return out;
}

// ---- intransitive chain assembly ------------------------------------

struct BlockForm {
  GroupAction action;     // conjugated so the fixed point is [1:0:0] and
                          // the line is x1 = 0
  Transform base_change;  // block = base_change^-1 . original . base_change
};

BlockForm to_block_form(const GroupAction& g, const IntransitiveData& d) {
  Mat basis(3);
  for (int i = 0; i < 3; ++i) {
    basis.at(i, 0) = d.fixed_point.coords()[i];
    basis.at(i, 1) = d.line_basis[0][i];
    basis.at(i, 2) = d.line_basis[1][i];
  }
  BlockForm out;
  out.base_change = Transform(basis);
  Transform bti = out.base_change.inverse();
  std::vector<Transform> gens;
  for (const auto& t : g.gens) gens.push_back(bti * t * out.base_change);
  out.action = make_action(g.gen_names, gens);
  return out;
}

Transform block_residual(const Transform& t) {
  Mat r(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.at(i, j) = t.mat().at(i + 1, j + 1);
  return Transform(r);
}

std::vector<Transform> residual_list(const GroupAction& block) {
  std::vector<Transform> out;
  for (const auto& t : block.gens) out.push_back(block_residual(t));
  return out;
}

// x(g) = delta_g * y(g) on the normal slot once residual blocks are scaled
// equal; nullopt when the residual blocks are not proportional
std::optional<std::vector<Cyclo>> block_discrepancy(const GroupAction& x,
                                                    const GroupAction& y) {
  std::vector<Cyclo> out;
  for (std::size_t k = 0; k < x.gens.size(); ++k) {
    const Mat& mx = x.gens[k].mat();
    const Mat& my = y.gens[k].mat();
    Cyclo c;
    bool found = false;
    for (int i = 1; i < 3 && !found; ++i)
      for (int j = 1; j < 3 && !found; ++j)
        if (!my.at(i, j).is_zero() && !mx.at(i, j).is_zero()) {
          c = mx.at(i, j) * my.at(i, j).inverse();
          found = true;
        }
    if (!found) return std::nullopt;
    for (int i = 1; i < 3; ++i)
      for (int j = 1; j < 3; ++j)
        if (!(mx.at(i, j) == c * my.at(i, j))) return std::nullopt;
    if (mx.at(0, 0).is_zero() || my.at(0, 0).is_zero()) return std::nullopt;
    out.push_back(mx.at(0, 0) * (c * my.at(0, 0)).inverse());
  }
  return out;
}

std::string delta_key(const std::vector<Cyclo>& v) {
  std::string s;
  for (const auto& c : v) s += c.minimal().str() + "|";
  return s;
}

struct Move {
  RationalMap map;
  std::vector<Cyclo> effect;  // multiplicative effect on the discrepancy
};

struct MoveLibrary {
  std::vector<Move> vertical;          // residual-preserving
  std::vector<RationalMap> negating;   // sign-reversing candidates
};

HomPoly var(int i) { return HomPoly::variable(i); }

// semi-invariant form pool of the residual action: one form per special
// orbit plus one generic orbit, and equal-degree products
std::vector<HomPoly> form_pool(const FiniteLinearGroup& rg) {
  std::map<std::string, std::vector<Point>> orbits;
  std::map<std::string, Point> candidates;
  for (std::size_t i = 1; i < rg.size(); ++i) {
    FixedLocus f = fixed_points(rg.lift(static_cast<int>(i)));
    for (const auto& p : f.points) candidates.emplace(p.str(), p);
  }
  // one generic sample orbit as well (the tau-style moves use them)
  for (long s : {2L, 3L}) {
    Point p(std::vector<Cyclo>{Cyclo(1), Cyclo(s)});
    candidates.emplace(p.str(), p);
  }
  for (auto& [key, p] : candidates) {
    auto orb = orbit(p, rg);
    std::string okey;
    for (const auto& q : orb) okey += q.str() + ";";
    orbits.emplace(okey, orb);
  }
  std::vector<HomPoly> pool;
  std::set<std::string> seen;
  for (auto& [key, orb] : orbits) {
    HomPoly form = HomPoly::monomial(Cyclo(1), 0, 0, 0);
    for (const auto& p : orb) {
      form = form * (HomPoly::monomial(p.coords()[1], 0, 1, 0) -
                     HomPoly::monomial(p.coords()[0], 0, 0, 1));
    }
    form = form.scaled(form.terms().rbegin()->second.inverse());
    if (seen.insert(form.str()).second) pool.push_back(form);
  }
  return pool;
}

MoveLibrary build_moves(const GroupAction& block) {
  MoveLibrary lib;
  FiniteLinearGroup rg = close_group(residual_list(block));
  std::vector<HomPoly> pool = form_pool(rg);
  // add equal-degree products of two base forms
  std::vector<HomPoly> extended = pool;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      HomPoly prod = pool[i] * pool[j];
      if (prod.degree() <= 40) extended.push_back(prod);
    }
  std::map<int, std::vector<HomPoly>> by_degree;
  for (auto& f : extended) {
    bool dup = false;
    for (const auto& g : by_degree[f.degree()])
      if (g == f) dup = true;
    if (!dup) by_degree[f.degree()].push_back(f);
  }

  // vertical candidates (x1 h, x2 f, x3 f), certified, with their effect
  for (auto& [deg, forms] : by_degree) {
    for (std::size_t i = 0; i < forms.size(); ++i)
      for (std::size_t j = 0; j < forms.size(); ++j) {
        if (i == j) continue;
        RationalMap m(var(0) * forms[i], var(1) * forms[j], var(2) * forms[j]);
        try {
          GroupAction moved = conjugate_action(m, block);
          auto eff = block_discrepancy(moved, block);
          if (!eff) continue;
          Move mv;
          mv.map = m;
          mv.effect = *eff;
          lib.vertical.push_back(std::move(mv));
        } catch (const NotRegularizable&) {
        }
        if (lib.vertical.size() > 24) return lib;  // plenty of generators
      }
  }

  // negating candidates (top, +- x1 x2 f, +- x1 x3 f), deg top = deg f + 2
  std::vector<HomPoly> fpool = extended;
  fpool.push_back(HomPoly::monomial(Cyclo(1), 0, 0, 0));
  for (const auto& top : extended) {
    for (const auto& f : fpool) {
      if (top.degree() != f.degree() + 2) continue;
      for (int sign = 0; sign < 2; ++sign) {
        HomPoly third = var(0) * var(2) * f;
        if (sign) third = -third;
        try {
          RationalMap m(top, var(0) * var(1) * f, third);
          if (equivariance_certificate(m, block, block).ok)
            lib.negating.push_back(m);
        } catch (const IndeterminateCollapse&) {
        }
        if (lib.negating.size() >= 6) return lib;
      }
    }
  }
  return lib;
}

// searches a product of vertical moves whose cumulative effect equals
// target; returns the maps in application order
std::optional<std::vector<RationalMap>> effect_bfs(const MoveLibrary& lib,
                                                   const std::vector<Cyclo>& target) {
  std::size_t n = target.size();
  std::vector<Cyclo> one(n, Cyclo(1));
  std::map<std::string, std::vector<int>> seen;
  std::deque<std::pair<std::vector<Cyclo>, std::vector<int>>> queue;
  seen.emplace(delta_key(one), std::vector<int>{});
  queue.push_back({one, {}});
  std::string want = delta_key(target);
  if (seen.count(want)) return std::vector<RationalMap>{};
  while (!queue.empty() && seen.size() < 4096) {
    auto [cur, word] = queue.front();
    queue.pop_front();
    for (std::size_t m = 0; m < lib.vertical.size(); ++m) {
      std::vector<Cyclo> next(n);
      for (std::size_t i = 0; i < n; ++i) next[i] = cur[i] * lib.vertical[m].effect[i];
      std::string key = delta_key(next);
      if (seen.count(key)) continue;
      std::vector<int> nw = word;
      nw.push_back(static_cast<int>(m));
      if (key == want) {
        std::vector<RationalMap> chain;
        for (int idx : nw) chain.push_back(lib.vertical[idx].map);
        return chain;
      }
      seen.emplace(key, nw);
      queue.push_back({next, nw});
    }
  }
  return std::nullopt;
}

// chain W (application order) with W . x . W^-1 = y, both in block form
// with strictly isomorphic residuals
std::optional<std::vector<RationalMap>> assemble_block_chain(
    const GroupAction& x, const GroupAction& y) {
  auto resx = residual_list(x), resy = residual_list(y);
  auto iso = p1_actions_isomorphic(resx, resy, CompareMode::Strict);
  if (!iso.isomorphic) return std::nullopt;
  Mat m3 = Mat::identity(3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m3.at(i + 1, j + 1) = iso.conjugator.mat().at(i, j);
  Transform align(m3);
  Transform align_i = align.inverse();
  std::vector<Transform> psi_gens;
  for (const auto& t : x.gens) psi_gens.push_back(align * t * align_i);
  GroupAction psi = make_action(x.gen_names, psi_gens);

  MoveLibrary lib = build_moves(y);
  auto finish = [&](const GroupAction& start,
                    std::vector<RationalMap> prefix)
      -> std::optional<std::vector<RationalMap>> {
    auto delta = block_discrepancy(start, y);
    if (!delta) return std::nullopt;
    std::vector<Cyclo> target;
    for (const auto& d : *delta) target.push_back(d.inverse());
    auto word = effect_bfs(lib, target);
    if (!word) return std::nullopt;
    for (auto& m : *word) prefix.push_back(m);
    return prefix;
  };

  // phase 1: residual-preserving moves only
  if (auto chain = finish(psi, {RationalMap::from_matrix(align.mat())}))
    return chain;

  // phase 2: lead with one sign-reversing move, then re-align
  for (const auto& nu : lib.negating) {
    GroupAction flipped;
    try {
      flipped = conjugate_action(nu, psi);
    } catch (const NotRegularizable&) {
      continue;
    }
    auto resf = residual_list(flipped);
    auto iso2 = p1_actions_isomorphic(resf, resy, CompareMode::Strict);
    if (!iso2.isomorphic) continue;
    Mat mm = Mat::identity(3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) mm.at(i + 1, j + 1) = iso2.conjugator.mat().at(i, j);
    Transform align2(mm);
    Transform align2_i = align2.inverse();
    std::vector<Transform> gens2;
    for (const auto& t : flipped.gens) gens2.push_back(align2 * t * align2_i);
    GroupAction psi2 = make_action(x.gen_names, gens2);
    std::vector<RationalMap> prefix = {RationalMap::from_matrix(align.mat()), nu,
                                       RationalMap::from_matrix(align2.mat())};
    if (auto chain = finish(psi2, prefix)) return chain;
  }
  return std::nullopt;
}

// frame transform carrying a length-3 orbit to the coordinate triangle
std::optional<Transform> triangle_normalizer(const std::vector<Point>& orbit3) {
  std::vector<Point> coords = {Point({Cyclo(1), Cyclo(0), Cyclo(0)}),
                               Point({Cyclo(0), Cyclo(1), Cyclo(0)}),
                               Point({Cyclo(0), Cyclo(0), Cyclo(1)}),
                               Point({Cyclo(1), Cyclo(1), Cyclo(1)})};
  std::vector<Point> extras = {Point({Cyclo(1), Cyclo(1), Cyclo(1)}),
                               Point({Cyclo(1), Cyclo(2), Cyclo(3)}),
                               Point({Cyclo(1), Cyclo(-1), Cyclo(2)}),
                               Point({Cyclo(2), Cyclo(1), Cyclo(5)})};
  for (const auto& extra : extras) {
    std::vector<Point> src = orbit3;
    src.push_back(extra);
    // reuse the frame machinery through find-like solve: build directly
    CycloMatrix m(3, std::vector<Cyclo>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = src[j].coords()[i];
    auto coeff = solve(m, extra.coords());
    if (!coeff) continue;
    bool ok = true;
    for (int j = 0; j < 3; ++j)
      if ((*coeff)[j].is_zero()) ok = false;
    if (!ok) continue;
    Mat hs(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) hs.at(i, j) = src[j].coords()[i] * (*coeff)[j];
    // hs maps e_j to the orbit frame; we want the inverse direction
    try {
      return Transform(hs.inverse());
    } catch (const SingularMatrix&) {
    }
  }
  return std::nullopt;
}

GroupSignature sig_of_action(const GroupAction& g) {
  return signature_of(GroupTable::from_group(g.group));
}

}  // namespace

bool verify_chain(const Verdict& v, const GroupAction& a, const GroupAction& b) {
  if (v.certificate_kind != "chain" || v.chain.empty()) return false;
  RationalMap f = v.chain[0];
  for (std::size_t i = 1; i < v.chain.size(); ++i) f = compose(v.chain[i], f);
  GroupAction target = b;
  if (!v.psi_gen_images.empty()) {
    GroupTable t = GroupTable::from_group(b.group);
    std::vector<Transform> twisted;
    for (int img : v.psi_gen_images)
      twisted.push_back(evaluate_word(b.gens, t.words()[img], b.group.n));
    target = make_action(b.gen_names, twisted);
  }
  GroupAction moved = conjugate_action(f, a);
  for (std::size_t k = 0; k < target.gens.size(); ++k)
    if (!(moved.gens[k] == target.gens[k])) return false;
  return equivariance_certificate(f, a, target).ok;
}

Verdict decide_cr2(const GroupAction& a, const GroupAction& b, CompareMode mode) {
  Verdict v;
  v.mode = mode;
  if (a.gens.size() != b.gens.size())
    throw MismatchedGroups("generator lists differ in length");
  if (a.group.size() != b.group.size())
    throw MismatchedGroups("group orders differ");

  ActionType ta = action_type(a), tb = action_type(b);
  if (ta.tag != tb.tag) {
    v.answer = Answer::NotConjugate;
    v.invariant = "action types differ";
    return v;
  }

  // shared first step: regular conjugacy
  auto pgl = pgl_conjugate(a, b, mode);
  if (pgl.found) {
    v.answer = Answer::ConjugateInPGL3;
    v.pgl_conjugator = pgl.h;
    v.certificate_kind = "pgl";
    v.psi_gen_images = pgl.psi;
    return v;
  }

  if (ta.tag == ActionTypeTag::P) {
    GroupSignature sig = sig_of_action(a);
    if (sig == signature_a5() || sig == signature_c32_c4()) {
      v.answer = Answer::ConjugateInCr2;
      v.certificate_kind = "table";
      v.detail = "rigid primitive class: the two actions are conjugate in Cr_2";
      return v;
    }
    v.answer = Answer::NotConjugate;
    v.invariant = "super-rigid primitive class";
    return v;
  }

  if (ta.tag == ActionTypeTag::T) {
    auto ha = triangle_normalizer(ta.witness_orbit);
    if (!ha) {
      v.answer = Answer::NotConjugate;
      v.invariant = "degenerate length-3 orbit";
      return v;
    }
    Transform hai = ha->inverse();
    std::vector<Transform> norm;
    for (const auto& t : a.gens) norm.push_back(*ha * t * hai);
    GroupAction na = make_action(a.gen_names, norm);
    RationalMap iota = build_map(MapName::IOTA);
    GroupAction ci;
    try {
      ci = conjugate_action(iota, na);
    } catch (const NotRegularizable&) {
      v.answer = Answer::NotConjugate;
      v.invariant = "standard involution does not linearize the action";
      return v;
    }
    auto pgl2 = pgl_conjugate(ci, b, mode);
    if (pgl2.found) {
      v.answer = Answer::ConjugateInCr2;
      v.certificate_kind = "chain";
      v.chain = {RationalMap::from_matrix(ha->mat()), iota,
                 RationalMap::from_matrix(pgl2.h.mat())};
      v.psi_gen_images = pgl2.psi;
      v.detail = "conjugated by the standard Cremona involution";
      return v;
    }
    v.answer = Answer::NotConjugate;
    v.invariant = "not conjugate by the standard Cremona involution";
    return v;
  }

  // intransitive
  if (a.group.is_abelian()) {
    v.answer = Answer::OutOfScope;
    v.detail = "abelian intransitive actions are delegated to the external invariant";
    return v;
  }
  IntransitiveData da = intransitive_data(a), db = intransitive_data(b);
  if (da.t == 1 && db.t == 1) {
    v.answer = Answer::ConjugateInCr2;
    v.certificate_kind = "no-name";
    v.detail = "trivial generic line stabilizer: equivalence by the no-name lemma";
    return v;
  }
  if (da.t != db.t) {
    v.answer = Answer::NotConjugate;
    v.invariant = "generic stabilizer orders differ";
    return v;
  }

  BurnsideClass ca = burnside_class(a), cb = burnside_class(b);
  std::vector<int> psi_used;
  bool equal = classes_equal(ca, cb, CompareMode::Strict);
  GroupAction target = b;
  if (!equal && mode == CompareMode::UpToAut) {
    // find the twisting automorphism explicitly so the chain can target it
    GroupTable t = GroupTable::from_group(b.group);
    AutomorphismTable auts = automorphisms(t);
    for (const auto& psi : auts.maps) {
      std::vector<Transform> twisted;
      for (std::size_t k = 0; k < b.gens.size(); ++k) {
        int img = psi[t.generator_ids()[k]];
        twisted.push_back(evaluate_word(b.gens, t.words()[img], b.group.n));
      }
      GroupAction tb2 = make_action(b.gen_names, twisted);
      try {
        if (classes_equal(ca, burnside_class(tb2), CompareMode::Strict)) {
          equal = true;
          target = tb2;
          for (std::size_t k = 0; k < b.gens.size(); ++k)
            psi_used.push_back(psi[t.generator_ids()[k]]);
          break;
        }
      } catch (const NotApplicable&) {
      }
    }
  }
  if (!equal) {
    v.answer = Answer::NotConjugate;
    v.invariant = "incompressible Burnside classes differ";
    return v;
  }

  BlockForm ba = to_block_form(a, da);
  BlockForm bb = to_block_form(target, intransitive_data(target));
  auto chain = assemble_block_chain(ba.action, bb.action);
  if (!chain) {
    v.answer = Answer::NotConjugate;
    v.invariant =
        "Burnside classes agree but no certified chain was assembled (unexpected)";
    return v;
  }
  v.answer = Answer::ConjugateInCr2;
  v.certificate_kind = "chain";
  v.psi_gen_images = psi_used;
  v.chain.clear();
  v.chain.push_back(RationalMap::from_matrix(ba.base_change.inverse().mat()));
  for (auto& m : *chain) v.chain.push_back(m);
  v.chain.push_back(RationalMap::from_matrix(bb.base_change.mat()));
  v.detail = "chain of certified birational moves through the invariant line";
  return v;
}

CountResult count_actions(const GroupAction& g, bool birational) {
  CountResult out;
  ActionType type = action_type(g);
  GroupSignature sig = sig_of_action(g);
  long order = static_cast<long>(g.group.size());
  auto known = [&](long c) {
    out.known = true;
    out.count = c;
  };
  if (type.tag == ActionTypeTag::P) {
    if (sig == signature_a5()) known(birational ? 1 : 2);
    else if (order == 360) known(4);
    else if (order == 168) known(2);
    else if (order == 216) known(2);
    else if (order == 72) known(2);
    else if (sig == signature_c32_c4()) known(birational ? 1 : 2);
    return out;
  }
  if (type.tag == ActionTypeTag::T) {
    if (sig == signature_a4() || sig == signature_s4()) {
      known(1);
      return out;
    }
    if (sig == signature_c3c3() || sig == signature_c3_s3() ||
        sig == signature_c7_c3()) {
      known(birational ? 1 : 2);
      return out;
    }
    // C_n^2 x| S_3 for n >= 3: |Out| = phi(n) actions, halved birationally
    for (long n = 3; 6 * n * n <= order; ++n) {
      if (6 * n * n != order) continue;
      long phi = euler_phi(n);
      known(birational ? phi / 2 : phi);
      return out;
    }
  }
  return out;
}

}  // namespace cremona
