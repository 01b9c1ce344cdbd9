#include <doctest.h>

#include "cremona/catalog.hpp"
#include "cremona/classify.hpp"
#include "cremona/ratmap.hpp"
#include "helpers.hpp"

using namespace cremona;
using testutil::pt;

namespace {

FamilySpec spec(Family f, long n = 1, long r = 1, long m = 0, long s = 1) {
  FamilySpec sp;
  sp.family = f;
  sp.n = n;
  sp.r = r;
  sp.m = m;
  sp.s = s;
  return sp;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK(validate(spec(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3)).empty());
  CHECK(!validate(spec(Family::IMPRIM_CNCN3_S3, 4)).empty());
  CHECK(!validate(spec(Family::INTR_DN_EVEN_C, 2, 1, 1)).empty());
  CHECK(validate(spec(Family::INTR_DN_EVEN_C, 4, 1, 1)).empty());
  CHECK(!validate(spec(Family::IMPRIM_CNCNR_C3, 6, 3, 0, 1)).empty());
  CHECK(validate(spec(Family::IMPRIM_CNCNR_C3, 6, 3, 0, 2)).empty());
  CHECK_THROWS_AS(build(spec(Family::IMPRIM_CNCN3_S3, 4)), InvalidParams);
}

TEST_CASE("imprimitive family orders match the formulas") {
  for (long n = 1; n <= 4; ++n)
    CHECK(build(spec(Family::IMPRIM_CN2_C3, n)).group.size() == 3 * n * n);
  for (long n = 1; n <= 3; ++n)
    CHECK(build(spec(Family::IMPRIM_CN2_S3, n)).group.size() == 6 * n * n);
  CHECK(build(spec(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3)).group.size() == 21);
  CHECK(build(spec(Family::IMPRIM_CNCNR_C3, 3, 3, 0, 2)).group.size() == 9);
  CHECK(build(spec(Family::IMPRIM_CNCNR_C3, 6, 3, 0, 2)).group.size() == 36);
  CHECK(build(spec(Family::IMPRIM_CNCN3_S3, 3)).group.size() == 18);
  CHECK(build(spec(Family::IMPRIM_CNCN3_S3, 6)).group.size() == 72);
}

TEST_CASE("intransitive family orders are t times the residual order") {
  auto d = build(spec(Family::INTR_DN_ODD, 5, 2, 0));
  CHECK(d.group.size() == 2 * 2 * 5);  // C_2 x D_5
  auto d2 = build(spec(Family::INTR_DN_ODD, 3, 1, 0));
  CHECK(d2.group.size() == 6);  // plain D_3

  auto a = build(spec(Family::INTR_A5, 1, 1));
  CHECK(a.group.size() == 120);  // t = 2 (central -1 of SL_2(F_5)) times 60

  auto s = build(spec(Family::INTR_S4, 1, 1, 0));
  CHECK(s.group.size() == 48);

  auto a4 = build(spec(Family::INTR_A4_A, 1, 1));
  CHECK(a4.group.size() == 24);  // t = 2, SL_2(F_3)
}

TEST_CASE("trivial degenerations") {
  CHECK(build(spec(Family::IMPRIM_CN2_C3, 1)).group.size() == 3);
}

TEST_CASE("every imprimitive group has the coordinate triangle as an orbit") {
  std::vector<FamilySpec> sweep = {
      spec(Family::IMPRIM_CN2_C3, 3), spec(Family::IMPRIM_CN2_S3, 2),
      spec(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3), spec(Family::IMPRIM_CNCN3_S3, 3)};
  for (const auto& sp : sweep) {
    auto g = build(sp);
    auto orb = orbit(pt({1, 0, 0}), g.group);
    CHECK(orb.size() == 3);
    CHECK(std::count(orb.begin(), orb.end(), pt({0, 1, 0})) == 1);
    CHECK(std::count(orb.begin(), orb.end(), pt({0, 0, 1})) == 1);
  }
}

TEST_CASE("every intransitive group fixes [1:0:0] and preserves x1 = 0") {
  std::vector<FamilySpec> sweep = {
      spec(Family::INTR_CYCLIC, 3, 2, 1), spec(Family::INTR_DN_ODD, 3, 2, 1),
      spec(Family::INTR_DN_EVEN_A, 2, 3), spec(Family::INTR_DN_EVEN_B, 2, 1, 1),
      spec(Family::INTR_DN_EVEN_C, 4, 1, 1), spec(Family::INTR_A4_A, 2),
      spec(Family::INTR_A4_B, 1, 1, 1), spec(Family::INTR_S4, 3, 1, 1),
      spec(Family::INTR_A5, 2)};
  Point origin = pt({1, 0, 0});
  for (const auto& sp : sweep) {
    auto g = build(sp);
    for (const auto& t : g.gens) {
      CHECK(t.apply(origin) == origin);
      CHECK(t.mat().at(0, 1).is_zero());
      CHECK(t.mat().at(0, 2).is_zero());
    }
  }
}

TEST_CASE("primitive groups close to the classified orders") {
  CHECK(build(spec(Family::PRIM_C32C4)).group.size() == 36);
  CHECK(build(spec(Family::PRIM_PSU3F2)).group.size() == 72);
  CHECK(build(spec(Family::PRIM_HESSIAN)).group.size() == 216);
  CHECK(build(spec(Family::PRIM_PSL27)).group.size() == 168);
  CHECK(build(spec(Family::PRIM_A5)).group.size() == 60);
  CHECK(build(spec(Family::PRIM_A6)).group.size() == 360);
}

TEST_CASE("Corollary 3.4 pair: isomorphic but not conjugate") {
  FamilySpec s1 = spec(Family::INTR_A4_A, 1, 1);
  s1.t2 = 0;
  FamilySpec s2 = s1;
  s2.t2 = 1;
  auto g1 = build(s1), g2 = build(s2);
  REQUIRE(g1.group.size() == 24);
  REQUIRE(g2.group.size() == 24);
  GroupTable t1 = GroupTable::from_group(g1.group);
  GroupTable t2 = GroupTable::from_group(g2.group);
  CHECK(signature_of(t1) == signature_of(t2));
  auto r = find_conjugator(g1.gens, g2.gens);
  CHECK(!r.conjugate);
}

TEST_CASE("normalizer finiteness per Theorem 1.3") {
  CHECK(!normalizer_finite(build(spec(Family::INTR_DN_ODD, 5, 2, 0))));
  CHECK(normalizer_finite(build(spec(Family::IMPRIM_CN2_S3, 5))));
  CHECK(!normalizer_finite(build(spec(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3))));
  CHECK(!normalizer_finite(build(spec(Family::IMPRIM_CN2_C3, 2))));
  CHECK(!normalizer_finite(build(spec(Family::IMPRIM_CNCNR_C3, 3, 3, 0, 2))));
  CHECK(!normalizer_finite(build(spec(Family::IMPRIM_CNCN3_S3, 3))));
  CHECK(!normalizer_finite(build(spec(Family::PRIM_C32C4))));
  CHECK(normalizer_finite(build(spec(Family::PRIM_A5))));
  CHECK(normalizer_finite(build(spec(Family::IMPRIM_CN2_S3, 2))));
}

TEST_CASE("normalized s choice in the CNCNR family") {
  FamilySpec sp = spec(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 5);  // 25-5+1 = 21
  REQUIRE(validate(sp).empty());
  auto g = build(sp);
  CHECK(g.note.find("normalized s") != std::string::npos);
  auto g2 = build(spec(Family::IMPRIM_CNCNR_C3, 7, 7, 0, 3));
  CHECK(g.group.size() == g2.group.size());
}
