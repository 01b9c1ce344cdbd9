// Shared builders for tests: coordinate permutations, diagonal transforms,
// and the generator sets that recur across suites.
#pragma once

#include <vector>

#include "cremona/action.hpp"
#include "cremona/projective.hpp"

namespace testutil {

using cremona::Cyclo;
using cremona::Mat;
using cremona::Point;
using cremona::Transform;

inline Mat m3(std::vector<std::vector<Cyclo>> rows) {
  Mat m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = rows[i][j];
  return m;
}

inline Mat m2(std::vector<std::vector<Cyclo>> rows) {
  Mat m(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// (x,y,z) -> (y,z,x)
inline Transform sigma123() {
  return Transform(m3({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
}

// (x,y,z) -> (y,x,z)
inline Transform sigma12() {
  return Transform(m3({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
}

inline Transform diag3(Cyclo a, Cyclo b, Cyclo c) {
  return Transform(Mat::diagonal({a, b, c}));
}

inline Point pt(std::vector<Cyclo> v) { return Point(std::move(v)); }

inline cremona::GroupAction conjugated(const cremona::GroupAction& a,
                                       const Transform& h) {
  Transform hi = h.inverse();
  std::vector<Transform> gens;
  for (const auto& t : a.gens) gens.push_back(h * t * hi);
  return cremona::make_action(a.gen_names, gens);
}

}  // namespace testutil
