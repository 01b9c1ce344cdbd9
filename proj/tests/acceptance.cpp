// Acceptance suite: one line per criterion, PASS or FAIL, nonzero exit on
// any failure.  Tolerances are exact throughout; the facts are discrete.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cremona/burnside.hpp"
#include "cremona/catalog.hpp"
#include "cremona/classify.hpp"
#include "cremona/decide.hpp"
#include "cremona/group_table.hpp"
#include "cremona/ratmap.hpp"

using namespace cremona;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& note = "") {
  std::cout << "criterion " << criterion << " [" << name << "]: "
            << (ok ? "PASS" : "FAIL");
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

FamilySpec fs(Family f, long n = 1, long r = 1, long m = 0, long s = 1) {
  FamilySpec sp;
  sp.family = f;
  sp.n = n;
  sp.r = r;
  sp.m = m;
  sp.s = s;
  return sp;
}

Transform sigma123() {
  Mat m(3);
  m.at(0, 1) = Cyclo(1);
  m.at(1, 2) = Cyclo(1);
  m.at(2, 0) = Cyclo(1);
  return Transform(m);
}

// ---- criterion 1: catalog orders ------------------------------------
void criterion1() {
  bool ok = true;
  std::ostringstream note;
  auto expect = [&](const FamilySpec& sp, long order) {
    long got = static_cast<long>(build(sp).group.size());
    if (got != order) {
      ok = false;
      note << family_to_string(sp.family) << " got " << got << " want " << order
           << "; ";
    }
  };
  // transitive imprimitive: 3n^2, 6n^2, 3n^2/r, 2n^2
  for (long n = 1; n <= 3; ++n) expect(fs(Family::IMPRIM_CN2_C3, n), 3 * n * n);
  for (long n = 1; n <= 3; ++n) expect(fs(Family::IMPRIM_CN2_S3, n), 6 * n * n);
  expect(fs(Family::IMPRIM_CNCNR_C3, 1, 1, 0, 1), 3);
  expect(fs(Family::IMPRIM_CNCNR_C3, 3, 3, 0, 2), 9);
  expect(fs(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3), 21);
  expect(fs(Family::IMPRIM_CNCNR_C3, 6, 3, 0, 2), 36);
  expect(fs(Family::IMPRIM_CNCN3_S3, 3), 18);
  expect(fs(Family::IMPRIM_CNCN3_S3, 6), 72);
  // intransitive: t * |Gbar| with t from the generic-stabilizer data
  expect(fs(Family::INTR_CYCLIC, 1, 1, 0), 1);
  expect(fs(Family::INTR_CYCLIC, 4, 2, 1), 8);   // <z2 I, diag(z4^2, z4)> in GL2
  expect(fs(Family::INTR_DN_ODD, 3, 1, 0), 6);   // t = 1, D_3
  expect(fs(Family::INTR_DN_ODD, 5, 2, 0), 20);  // t = 2
  expect(fs(Family::INTR_DN_ODD, 3, 1, 1), 12);  // t = 2 via -1
  expect(fs(Family::INTR_DN_EVEN_A, 2, 1), 8);   // t = 2, D_2
  expect(fs(Family::INTR_DN_EVEN_A, 4, 3), 48);  // t = 6, D_4
  // at n = 2, m = 1 the family-B rotation squares to the identity
  expect(fs(Family::INTR_DN_EVEN_B, 2, 1, 1), 8);  // t = 2, D_2
  expect(fs(Family::INTR_DN_EVEN_C, 4, 1, 1), 16);  // t = 2, D_4
  expect(fs(Family::INTR_A4_A, 1, 1), 24);          // t = 2, A4
  expect(fs(Family::INTR_A4_B, 1, 1, 1), 72);       // t = 6 via zeta_3^m
  expect(fs(Family::INTR_S4, 1, 1, 0), 48);         // t = 2, S4
  expect(fs(Family::INTR_S4, 1, 1, 1), 48);         // t = 2
  expect(fs(Family::INTR_A5, 1, 1), 120);           // t = 2, A5 (SL_2(F_5) lift)
  expect(fs(Family::INTR_A5, 1, 2), 120);           // t = 2 for r = 2
  // primitive
  expect(fs(Family::PRIM_A5), 60);
  expect(fs(Family::PRIM_A6), 360);
  expect(fs(Family::PRIM_PSL27), 168);
  expect(fs(Family::PRIM_HESSIAN), 216);
  expect(fs(Family::PRIM_PSU3F2), 72);
  expect(fs(Family::PRIM_C32C4), 36);
  report(1, "catalog orders", ok, note.str());
}

// ---- criterion 2: the two C_3^2 classes -----------------------------
void criterion2() {
  Cyclo w = Cyclo::zeta(3);
  GroupAction type_i = make_action(
      {"a", "b"}, {Transform(Mat::diagonal({Cyclo(1), w, Cyclo(1)})),
                   Transform(Mat::diagonal({Cyclo(1), Cyclo(1), w}))});
  Mat shift(3);
  shift.at(0, 2) = Cyclo(1);
  shift.at(1, 0) = Cyclo(1);
  shift.at(2, 1) = Cyclo(1);
  GroupAction type_t = make_action(
      {"a", "b"}, {Transform(Mat::diagonal({Cyclo(1), w, w * w})), Transform(shift)});
  bool ok = type_i.group.size() == 9 && type_t.group.size() == 9;
  // not conjugate under any of the 48 automorphism twists
  GroupTable t = GroupTable::from_group(type_i.group);
  AutomorphismTable auts = automorphisms(t);
  ok = ok && auts.maps.size() == 48;
  for (const auto& psi : auts.maps) {
    std::vector<Transform> twisted;
    for (std::size_t k = 0; k < 2; ++k) {
      int img = psi[t.generator_ids()[k]];
      twisted.push_back(evaluate_word(type_t.gens, t.words()[img], 3));
    }
    if (find_conjugator(type_i.gens, twisted).conjugate) ok = false;
  }
  report(2, "two PGL3-classes of C_3^2 actions", ok);
}

// ---- criterion 3: Corollary 3.4 at n = 1 ----------------------------
void criterion3() {
  FamilySpec s1 = fs(Family::INTR_A4_A, 1, 1);
  s1.t2 = 0;
  FamilySpec s2 = s1;
  s2.t2 = 1;
  auto g1 = build(s1), g2 = build(s2);
  bool ok = g1.group.size() == 24 && g2.group.size() == 24;

  // not conjugate in PGL_3, even after automorphism twists
  GroupTable t = GroupTable::from_group(g1.group);
  AutomorphismTable auts = automorphisms(t);
  for (const auto& psi : auts.maps) {
    std::vector<Transform> twisted;
    for (std::size_t k = 0; k < g1.gens.size(); ++k) {
      int img = psi[t.generator_ids()[k]];
      twisted.push_back(evaluate_word(g2.gens, t.words()[img], 3));
    }
    if (find_conjugator(g1.gens, twisted).conjugate) ok = false;
  }

  // pointwise stabilizer of the line x2 = (2 zeta_3 + 1) x3
  Cyclo w = Cyclo::zeta(3);
  Cyclo lam = Cyclo(2) * w + Cyclo(1);
  std::vector<Cyclo> w1 = {Cyclo(1), Cyclo(0), Cyclo(0)};
  std::vector<Cyclo> w2 = {Cyclo(0), lam, Cyclo(1)};
  auto pointwise_stab = [&](const GroupAction& g) {
    long count = 0;
    for (const auto& t2 : g.group.elements) {
      Point a(t2.mat().apply(w1)), b(t2.mat().apply(w2));
      if (!(a == Point(w1)) || !(b == Point(w2))) continue;
      std::vector<Cyclo> sum = {w1[0] + w2[0], w1[1] + w2[1], w1[2] + w2[2]};
      if (Point(t2.mat().apply(sum)) == Point(sum)) ++count;
    }
    return count;
  };
  long st1 = pointwise_stab(g1), st2 = pointwise_stab(g2);
  ok = ok && st1 == 1 && st2 == 3;
  std::ostringstream note;
  note << "stab sizes " << st1 << ", " << st2;
  report(3, "Corollary 3.4 pair at n = 1", ok, note.str());
}

// ---- criterion 4: orbit certificates --------------------------------
void criterion4() {
  bool ok = true;
  std::ostringstream note;

  auto a6 = build(fs(Family::PRIM_A6));
  auto orbs6 = small_orbits(a6.group, 8);
  if (!orbs6.empty()) {
    ok = false;
    note << "A6 has short orbits; ";
  }

  auto a5 = build(fs(Family::PRIM_A5));
  auto orbs5 = small_orbits(a5.group, 8);
  if (orbs5.size() != 1 || orbs5[0].is_family || orbs5[0].length != 6) {
    ok = false;
    note << "A5 orbit count/length wrong; ";
  } else {
    auto gp = general_position(orbs5[0].points);
    if (gp.any_three_collinear || gp.on_common_conic) {
      ok = false;
      note << "A5 orbit degenerate; ";
    }
  }

  auto s4 = build(fs(Family::IMPRIM_CN2_S3, 2));
  auto orbs4 = small_orbits(s4.group, 8);
  long general = 0;
  bool have3 = false, have4 = false;
  for (const auto& r : orbs4) {
    if (r.is_family) continue;
    auto gp = general_position(r.points);
    // general position for link purposes: no three collinear and, for six
    // or more points, not on a common conic
    if (gp.any_three_collinear) continue;
    if (r.points.size() >= 6 && gp.on_common_conic) continue;
    ++general;
    if (r.length == 3) have3 = true;
    if (r.length == 4) have4 = true;
  }
  if (general != 2 || !have3 || !have4) {
    ok = false;
    note << "S4 general-position orbits " << general << "; ";
  }

  auto c3s3 = build(fs(Family::IMPRIM_CNCN3_S3, 3));
  auto orbs33 = small_orbits(c3s3.group, 3);
  long triples = 0;
  for (const auto& r : orbs33)
    if (!r.is_family && r.length == 3) ++triples;
  if (triples != 4) {
    ok = false;
    note << "C3:S3 length-3 orbits " << triples << "; ";
  }
  report(4, "orbit certificates", ok, note.str());
}

// ---- criterion 5: map certificates ----------------------------------
void criterion5() {
  bool ok = true;
  std::ostringstream note;
  RationalMap iota = build_map(MapName::IOTA);
  if (!is_involution(iota)) {
    ok = false;
    note << "iota^2 != id; ";
  }
  for (const Cyclo& lam : {Cyclo(2), Cyclo(3), Cyclo::zeta(5)}) {
    if (!is_involution(build_map(MapName::THETA_A4, {.lambda = lam}))) {
      ok = false;
      note << "theta not an involution; ";
    }
  }
  std::vector<FamilySpec> imprim = {
      fs(Family::IMPRIM_CN2_C3, 2), fs(Family::IMPRIM_CN2_C3, 3),
      fs(Family::IMPRIM_CN2_S3, 2), fs(Family::IMPRIM_CN2_S3, 3),
      fs(Family::IMPRIM_CNCNR_C3, 3, 3, 0, 2), fs(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3),
      fs(Family::IMPRIM_CNCN3_S3, 3), fs(Family::IMPRIM_CNCN3_S3, 6)};
  for (const auto& sp : imprim) {
    auto g = build(sp);
    if (!equivariance_certificate(iota, g, g).ok) {
      ok = false;
      note << "iota not G-birational for " << family_to_string(sp.family) << "; ";
    }
  }
  for (long n : {2L, 4L}) {
    auto g = build(fs(Family::INTR_DN_EVEN_A, n, 3));
    if (!equivariance_certificate(build_map(MapName::GAMMA_DN, {.n = n}), g, g).ok) {
      ok = false;
      note << "gamma_" << n << " fails; ";
    }
    if (!equivariance_certificate(
             build_map(MapName::TAU_DN, {.n = n, .lambda = Cyclo(2)}), g, g)
             .ok) {
      ok = false;
      note << "tau_" << n << " fails; ";
    }
    auto gb = build(fs(Family::INTR_DN_EVEN_B, n, 1, 1));
    if (!equivariance_certificate(build_map(MapName::GAMMA_DN, {.n = n}), gb, gb).ok) {
      ok = false;
      note << "gamma_" << n << " fails on family B; ";
    }
  }
  report(5, "map certificates", ok, note.str());
}

// ---- criterion 6: weight ledger -------------------------------------
bool weight_move(const FamilySpec& base, const RationalMap& f,
                 const FamilySpec& expected) {
  auto g = build(base);
  auto moved = conjugate_action(f, g);
  auto target = build(expected);
  return find_conjugator(moved.gens, target.gens).conjugate;
}

void criterion6() {
  bool ok = true;
  std::ostringstream note;
  auto need = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << what << "; ";
    }
  };

  // odd dihedral, weights (t1, t2, t3) mod (5, 6, 4)
  FamilySpec dn = fs(Family::INTR_DN_ODD, 3, 5, 2);
  {
    RationalMap m(HomPoly::monomial(Cyclo(1), 0, 1, 1),
                  HomPoly::monomial(Cyclo(1), 1, 1, 0),
                  HomPoly::monomial(Cyclo(1), 1, 0, 1));
    FamilySpec ex = dn;
    ex.t1 = 4;
    ex.t3 = 3;
    need(weight_move(dn, m, ex), "odd iota-swap: t1,t3 -> -t1,-t3");
  }
  {
    Mat sw(3);
    sw.at(0, 0) = Cyclo(1);
    sw.at(1, 2) = Cyclo(1);
    sw.at(2, 1) = Cyclo(1);
    FamilySpec ex = dn;
    ex.t2 = 5;
    need(weight_move(dn, RationalMap::from_matrix(sw), ex), "odd swap: t2 -> -t2");
  }
  {
    FamilySpec ex = dn;
    ex.t3 = 3;
    need(weight_move(dn, RationalMap::from_matrix(Mat::diagonal(
                             {Cyclo(1), Cyclo(1), Cyclo(-1)})),
                     ex),
         "odd x3 -> -x3: t3 += 2^(m-1)");
  }

  // even dihedral
  {
    FamilySpec base = fs(Family::INTR_DN_EVEN_B, 2, 5, 1);
    RationalMap m(HomPoly::monomial(Cyclo(1), 0, 1, 1),
                  HomPoly::monomial(Cyclo(1), 1, 1, 0),
                  HomPoly::monomial(Cyclo(-1), 1, 0, 1));
    FamilySpec ex = base;
    ex.t1 = 4;
    ex.t3 = 3;
    need(weight_move(base, m, ex), "even (1/x1,1/x3,-1/x2): t1,t3,t4 negate");
  }
  {
    FamilySpec base = fs(Family::INTR_DN_EVEN_C, 4, 1, 1);
    FamilySpec ex = base;
    ex.t4 = 3;
    need(weight_move(base, RationalMap::from_matrix(Mat::diagonal(
                               {Cyclo(1), Cyclo(1), Cyclo(-1)})),
                     ex),
         "even diag(1,1,-1): t4 += 2^m");
  }
  {
    FamilySpec base = fs(Family::INTR_DN_EVEN_A, 4, 3);
    FamilySpec ex = base;
    ex.t2 = 5;
    need(weight_move(base, build_map(MapName::GAMMA_DN, {.n = 4}), ex),
         "even gamma: t2 += n");
    FamilySpec base_b = fs(Family::INTR_DN_EVEN_B, 2, 1, 1);
    FamilySpec ex_b = base_b;
    ex_b.t3 = 3;
    need(weight_move(base_b, build_map(MapName::GAMMA_DN, {.n = 2}), ex_b),
         "even gamma: t3 += 2^m");
  }

  // A4
  {
    FamilySpec base = fs(Family::INTR_A4_A, 1, 5);
    base.t2 = 0;
    FamilySpec ex = base;
    ex.t2 = 1;
    need(weight_move(base, build_map(MapName::SIGMA_A4), ex), "A4 sigma: t2 += 1");
    FamilySpec nb = fs(Family::INTR_A4_A, 1, 5);
    FamilySpec nx = nb;
    nx.t1 = 4;
    nx.t2 = 2;
    need(weight_move(nb, build_map(MapName::GAMMA_A4), nx), "A4 gamma: negate");
  }
  // S4
  {
    FamilySpec base = fs(Family::INTR_S4, 1, 5, 0);
    FamilySpec ex = base;
    ex.t3 = 3;
    need(weight_move(base, build_map(MapName::SIGMA_S4), ex), "S4 sigma: t3 += 2");
    FamilySpec nx = base;
    nx.t1 = 4;
    nx.t2 = 1;
    nx.t3 = 3;
    need(weight_move(base, build_map(MapName::GAMMA_S4), nx), "S4 gamma: negate");
  }
  // A5
  {
    FamilySpec base = fs(Family::INTR_A5, 1, 5);
    FamilySpec ex = base;
    ex.t1 = 4;
    need(weight_move(base, build_map(MapName::SIGMA_A5), ex), "A5 sigma: t1 -> -t1");
  }
  report(6, "section-6 weight-transformation ledger", ok, note.str());
}

// ---- criterion 7: Burnside criterion sweep ---------------------------
void criterion7() {
  bool ok = true;
  std::ostringstream note;
  long pairs = 0, positives = 0;
  auto run_pair = [&](const FamilySpec& sa, const FamilySpec& sb) {
    auto a = build(sa), b = build(sb);
    if (a.group.size() != b.group.size()) return;
    ++pairs;
    bool eq = false;
    try {
      eq = classes_equal(burnside_class(a), burnside_class(b), CompareMode::Strict);
    } catch (const NotApplicable&) {
      return;
    }
    Verdict v = decide_cr2(a, b, CompareMode::Strict);
    bool positive = v.answer == Answer::ConjugateInCr2 ||
                    v.answer == Answer::ConjugateInPGL3;
    if (positive != eq) {
      ok = false;
      note << family_to_string(sa.family) << " decide/classes disagree; ";
    }
    if (v.answer == Answer::ConjugateInCr2) {
      ++positives;
      if (v.certificate_kind != "chain" || !verify_chain(v, a, b)) {
        ok = false;
        note << family_to_string(sa.family) << " chain fails verification; ";
      }
    }
  };

  auto sweep_weights = [&](const FamilySpec& base,
                           std::function<void(FamilySpec&, long)> set,
                           std::vector<long> values) {
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        FamilySpec sa = base, sb = base;
        set(sa, values[i]);
        set(sb, values[j]);
        run_pair(sa, sb);
      }
  };
  auto set_t1 = [](FamilySpec& s, long v) { s.t1 = v; };
  auto set_t2 = [](FamilySpec& s, long v) { s.t2 = v; };
  auto set_t3 = [](FamilySpec& s, long v) { s.t3 = v; };

  sweep_weights(fs(Family::INTR_DN_ODD, 5, 5, 0), set_t1, {1, 2, 3, 4});
  sweep_weights(fs(Family::INTR_DN_ODD, 3, 1, 2), set_t3, {1, 3});
  sweep_weights(fs(Family::INTR_DN_EVEN_A, 4, 3), set_t2, {1, 3, 5, 7});
  sweep_weights(fs(Family::INTR_A4_A, 1, 5), set_t2, {0, 1, 2});
  sweep_weights(fs(Family::INTR_S4, 1, 5, 0), set_t3, {1, 3});
  sweep_weights(fs(Family::INTR_A5, 1, 5), set_t1, {1, 2, 3, 4});
  std::ostringstream summary;
  summary << pairs << " pairs, " << positives << " chain certificates; " << note.str();
  report(7, "intransitive decide == Burnside classes", ok && pairs >= 20,
         summary.str());
}

// ---- criterion 8: Theorem 1.2 sweep ----------------------------------
void criterion8() {
  bool ok = true;
  std::ostringstream note;
  RationalMap iota = build_map(MapName::IOTA);
  std::vector<FamilySpec> sweep = {
      fs(Family::IMPRIM_CN2_C3, 3), fs(Family::IMPRIM_CN2_C3, 4),
      fs(Family::IMPRIM_CN2_S3, 3), fs(Family::IMPRIM_CNCNR_C3, 3, 3, 0, 2),
      fs(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3), fs(Family::IMPRIM_CNCN3_S3, 3)};
  for (const auto& sp : sweep) {
    auto g = build(sp);
    auto ci = conjugate_action(iota, g);
    if (find_conjugator(g.gens, ci.gens).conjugate) {
      ok = false;
      note << family_to_string(sp.family) << " iota-conjugate is PGL-conjugate; ";
      continue;
    }
    Verdict v = decide_cr2(g, ci, CompareMode::Strict);
    if (v.answer != Answer::ConjugateInCr2 || v.certificate_kind != "chain" ||
        !verify_chain(v, g, ci)) {
      ok = false;
      note << family_to_string(sp.family) << " decide failed; ";
    }
  }
  report(8, "imprimitive actions conjugate exactly by iota", ok, note.str());
}

// ---- criterion 9: Theorem 1.3 ----------------------------------------
void criterion9() {
  bool ok = true;
  std::ostringstream note;
  auto expect = [&](const FamilySpec& sp, bool want) {
    bool got = normalizer_finite(build(sp));
    if (got != want) {
      ok = false;
      note << family_to_string(sp.family) << "; ";
    }
  };
  // false: intransitive
  expect(fs(Family::INTR_DN_ODD, 5, 2, 0), false);
  expect(fs(Family::INTR_A5, 1, 1), false);
  expect(fs(Family::INTR_S4, 1, 1, 0), false);
  // false: the exceptional transitive groups
  expect(fs(Family::IMPRIM_CN2_C3, 2), false);           // A4
  expect(fs(Family::IMPRIM_CNCNR_C3, 3, 3, 0, 2), false);  // C_3^2
  expect(fs(Family::IMPRIM_CNCN3_S3, 3), false);         // C_3 x| S_3
  expect(fs(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3), false);  // C_7 x| C_3
  expect(fs(Family::PRIM_C32C4), false);
  // true: everything else transitive
  expect(fs(Family::IMPRIM_CN2_C3, 3), true);
  expect(fs(Family::IMPRIM_CN2_S3, 2), true);  // S4
  expect(fs(Family::IMPRIM_CN2_S3, 3), true);
  expect(fs(Family::IMPRIM_CN2_S3, 5), true);
  expect(fs(Family::IMPRIM_CNCNR_C3, 6, 3, 0, 2), true);
  expect(fs(Family::IMPRIM_CNCN3_S3, 6), true);
  expect(fs(Family::PRIM_A5), true);
  expect(fs(Family::PRIM_A6), true);
  expect(fs(Family::PRIM_PSL27), true);
  expect(fs(Family::PRIM_HESSIAN), true);
  expect(fs(Family::PRIM_PSU3F2), true);
  report(9, "normalizer finiteness classification", ok, note.str());
}

// ---- criterion 10: property suites -----------------------------------
void criterion10() {
  bool ok = true;
  std::ostringstream note;
  std::mt19937 rng(20260809);

  // cyclotomic field axioms, 1000 cases
  {
    auto random_cyclo = [&](long n) {
      std::vector<Rational> raw(n, Rational(0));
      int terms = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < terms; ++t)
        raw[rng() % n] += Rational(static_cast<long>(rng() % 9) - 4,
                                   1 + static_cast<long>(rng() % 3));
      return Cyclo::from_raw(n, raw);
    };
    static const long conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
    for (int i = 0; i < 1000 && ok; ++i) {
      long n = conductors[rng() % 8];
      Cyclo a = random_cyclo(n), b = random_cyclo(n), c = random_cyclo(n);
      if (!((a * b) * c == a * (b * c))) ok = false;
      if (!(a * (b + c) == a * b + a * c)) ok = false;
      if (!a.is_zero() && !(a * a.inverse() == Cyclo(1))) ok = false;
      if (((a - b).is_zero()) != (a == b)) ok = false;
    }
    if (!ok) note << "field axioms failed; ";
  }

  // orbit-stabilizer identity, 100 cases
  {
    auto g1 = build(fs(Family::IMPRIM_CN2_S3, 2));
    auto g2 = build(fs(Family::IMPRIM_CNCN3_S3, 3));
    for (int i = 0; i < 100; ++i) {
      const auto& g = (i % 2 == 0) ? g1 : g2;
      Point p({Cyclo(static_cast<long>(rng() % 5)), Cyclo(static_cast<long>(rng() % 5)),
               Cyclo(1 + static_cast<long>(rng() % 5))});
      long stab = 0;
      for (const auto& t : g.group.elements)
        if (t.apply(p) == p) ++stab;
      if (orbit(p, g.group).size() * stab != g.group.size()) {
        ok = false;
        note << "orbit-stabilizer failed; ";
        break;
      }
    }
  }

  // find_conjugator soundness on every returned conjugator
  {
    std::vector<GroupAction> actions = {build(fs(Family::IMPRIM_CN2_C3, 2)),
                                        build(fs(Family::INTR_DN_EVEN_A, 2, 3)),
                                        build(fs(Family::INTR_A4_A, 1, 2))};
    for (const auto& a : actions) {
      Mat h(3);
      do {
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            h.at(i, j) = Cyclo(static_cast<long>(rng() % 5) - 2);
      } while (h.det().is_zero());
      Transform ht(h);
      Transform hi = ht.inverse();
      std::vector<Transform> conj;
      for (const auto& t : a.gens) conj.push_back(ht * t * hi);
      auto r = find_conjugator(a.gens, conj);
      if (!r.conjugate) {
        ok = false;
        note << "conjugator not found; ";
        continue;
      }
      Transform gi = r.h.inverse();
      for (std::size_t k = 0; k < a.gens.size(); ++k)
        if (!(r.h * a.gens[k] * gi == conj[k])) {
          ok = false;
          note << "unsound conjugator; ";
        }
    }
  }

  // Burnside class invariance under 20 random conjugations
  {
    auto g = build(fs(Family::INTR_DN_EVEN_A, 2, 3));
    auto base = burnside_class(g);
    for (int i = 0; i < 20; ++i) {
      Mat h(3);
      do {
        for (int r2 = 0; r2 < 3; ++r2)
          for (int c2 = 0; c2 < 3; ++c2)
            h.at(r2, c2) = Cyclo(static_cast<long>(rng() % 5) - 2) +
                           Cyclo::zeta(4) * Cyclo(static_cast<long>(rng() % 2));
      } while (h.det().is_zero());
      Transform ht(h);
      Transform hi = ht.inverse();
      std::vector<Transform> conj;
      for (const auto& t : g.gens) conj.push_back(ht * t * hi);
      auto cg = burnside_class(make_action(g.gen_names, conj));
      if (!classes_equal(base, cg, CompareMode::Strict)) {
        ok = false;
        note << "Burnside class not conjugation-invariant; ";
        break;
      }
    }
  }
  report(10, "property suites", ok, note.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures == 0) {
    std::cout << "acceptance: all criteria PASS" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  return 1;
}
