#include <doctest.h>

#include <numeric>

#include "cremona/catalog.hpp"
#include "cremona/decide.hpp"
#include "helpers.hpp"

using namespace cremona;
using namespace testutil;

namespace {

FamilySpec fspec(Family f, long n = 1, long r = 1, long m = 0, long s = 1) {
  FamilySpec sp;
  sp.family = f;
  sp.n = n;
  sp.r = r;
  sp.m = m;
  sp.s = s;
  return sp;
}

GroupAction galois_twist(const GroupAction& a, long k) {
  std::vector<Transform> gens;
  for (const auto& t : a.gens) {
    Mat m(t.raw().n());
    long cond = 1;
    for (int i = 0; i < m.n(); ++i)
      for (int j = 0; j < m.n(); ++j) cond = std::lcm(cond, t.raw().at(i, j).conductor());
    for (int i = 0; i < m.n(); ++i)
      for (int j = 0; j < m.n(); ++j) m.at(i, j) = t.raw().at(i, j).embedded(cond).galois(k);
    gens.push_back(Transform(m));
  }
  return make_action(a.gen_names, gens);
}

}  // namespace

TEST_CASE("reflexivity and symmetry") {
  auto g = build(fspec(Family::INTR_DN_EVEN_A, 2, 3));
  auto v = decide_cr2(g, g);
  CHECK(v.answer == Answer::ConjugateInPGL3);
  Transform hi = v.pgl_conjugator.inverse();
  for (const auto& t : g.gens) CHECK(v.pgl_conjugator * t * hi == t);

  auto a = build(fspec(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3));
  // catalog normalizes s; make the pair by iota conjugation
  auto ci = conjugate_action(build_map(MapName::IOTA), a);
  auto v1 = decide_cr2(a, ci);
  auto v2 = decide_cr2(ci, a);
  CHECK(v1.answer == v2.answer);
}

TEST_CASE("mismatched inputs are rejected") {
  auto a = build(fspec(Family::IMPRIM_CN2_C3, 2));
  auto b = build(fspec(Family::IMPRIM_CN2_S3, 2));
  CHECK_THROWS_AS(decide_cr2(a, b), MismatchedGroups);
}

TEST_CASE("types must agree") {
  auto a = build(fspec(Family::IMPRIM_CNCNR_C3, 3, 3, 0, 2));  // C_3^2, type T
  FamilySpec s = fspec(Family::INTR_CYCLIC, 3, 3, 0);       // order 9 intransitive
  s.s = 2;
  auto b0 = build(s);
  if (a.gens.size() == b0.gens.size() && a.group.size() == b0.group.size()) {
    auto v = decide_cr2(a, b0);
    CHECK(v.answer == Answer::NotConjugate);
  }
}

TEST_CASE("primitive branch: A6 outer twists are not conjugate") {
  auto a6 = build(fspec(Family::PRIM_A6));
  auto tw = galois_twist(a6, 2);
  REQUIRE(tw.group.size() == 360);
  auto v = decide_cr2(a6, tw);
  CHECK(v.answer == Answer::NotConjugate);
  CHECK(v.invariant == "super-rigid primitive class");
}

TEST_CASE("primitive branch: the two A5 actions are conjugate in Cr2") {
  auto a5 = build(fspec(Family::PRIM_A5));
  auto tw = galois_twist(a5, 2);  // sqrt(5) -> -sqrt(5): the other action
  REQUIRE(tw.group.size() == 60);
  auto v = decide_cr2(a5, tw);
  CHECK(v.answer == Answer::ConjugateInCr2);
  CHECK(v.certificate_kind == "table");
}

TEST_CASE("imprimitive branch: iota conjugates C7:C3 to its twist") {
  auto a = build(fspec(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3));
  auto ci = conjugate_action(build_map(MapName::IOTA), a);
  // strictly not PGL-conjugate (Lemma on beta-bar(iota))
  CHECK(!find_conjugator(a.gens, ci.gens).conjugate);
  auto v = decide_cr2(a, ci);
  REQUIRE(v.answer == Answer::ConjugateInCr2);
  CHECK(v.certificate_kind == "chain");
  CHECK(verify_chain(v, a, ci));
}

TEST_CASE("intransitive branch: equal classes produce verified chains") {
  // gamma-related even dihedral pair
  FamilySpec sa = fspec(Family::INTR_DN_EVEN_A, 4, 3);
  sa.t2 = 1;
  FamilySpec sb = sa;
  sb.t2 = 5;  // t2 + n
  auto a = build(sa), b = build(sb);
  auto v = decide_cr2(a, b);
  REQUIRE(v.answer == Answer::ConjugateInCr2);
  REQUIRE(v.certificate_kind == "chain");
  CHECK(verify_chain(v, a, b));
}

TEST_CASE("intransitive branch: different characters are not conjugate") {
  FamilySpec sa = fspec(Family::INTR_DN_ODD, 5, 5, 0);
  sa.t1 = 1;
  FamilySpec sb = sa;
  sb.t1 = 2;
  auto v = decide_cr2(build(sa), build(sb));
  CHECK(v.answer == Answer::NotConjugate);
  CHECK(v.invariant == "incompressible Burnside classes differ");
}

TEST_CASE("intransitive branch: trivial stabilizer uses the no-name lemma") {
  FamilySpec sa = fspec(Family::INTR_DN_ODD, 5, 1, 0);
  sa.t2 = 1;
  FamilySpec sb = sa;
  sb.t2 = 2;
  auto a = build(sa), b = build(sb);
  auto v = decide_cr2(a, b);
  if (v.answer == Answer::ConjugateInPGL3) {
    CHECK(true);  // a regular conjugation is an even stronger certificate
  } else {
    CHECK(v.answer == Answer::ConjugateInCr2);
    CHECK(v.certificate_kind == "no-name");
  }
}

TEST_CASE("abelian intransitive actions are out of scope") {
  auto a = build(fspec(Family::INTR_CYCLIC, 5, 2, 1));
  auto b = build(fspec(Family::INTR_CYCLIC, 5, 2, 2));
  if (a.group.size() == b.group.size()) {
    auto v = decide_cr2(a, b);
    CHECK(v.answer == Answer::OutOfScope);
  }
}

TEST_CASE("action counting") {
  auto a5p = build(fspec(Family::PRIM_A5));
  CHECK(count_actions(a5p, false).count == 2);
  CHECK(count_actions(a5p, true).count == 1);

  auto a6 = build(fspec(Family::PRIM_A6));
  CHECK(count_actions(a6, false).count == 4);
  CHECK(count_actions(a6, true).count == 4);

  auto s5 = build(fspec(Family::IMPRIM_CN2_S3, 5));
  CHECK(count_actions(s5, false).count == 4);  // |(Z/5)^x|
  CHECK(count_actions(s5, true).count == 2);

  auto c33 = build(fspec(Family::IMPRIM_CNCNR_C3, 3, 3, 0, 2));
  CHECK(count_actions(c33, true).count == 1);
  CHECK(count_actions(c33, false).count == 2);

  auto s4 = build(fspec(Family::IMPRIM_CN2_S3, 2));
  CHECK(count_actions(s4, false).count == 1);

  auto unknown = build(fspec(Family::INTR_A5, 1, 3));
  CHECK(!count_actions(unknown, false).known);
}
