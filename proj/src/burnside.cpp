#include "cremona/burnside.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cremona {

namespace {

std::string ratio_pair(const Mat& lift2x2) {
  auto fp = eigenvalue_ratio_fingerprint(lift2x2);
  if (fp.empty()) return "{1,1}";  // scalar: trivial on P^1
  std::string s = "{";
  for (std::size_t i = 0; i < fp.size(); ++i) s += fp[i] + (i + 1 < fp.size() ? "," : "");
  return s + "}";
}

}  // namespace

BurnsideClass burnside_class(const GroupAction& g) {
  IntransitiveData d;
  try {
    d = intransitive_data(g);
  } catch (const NotIntransitive&) {
    throw NotApplicable("action is not intransitive");
  }
  if (d.t <= 1) throw NotApplicable("generic line stabilizer is trivial");

  BurnsideClass out;
  out.table = GroupTable::from_group(g.group);
  out.group_order = static_cast<long>(g.group.size());
  out.residual_tag = d.residual_tag;
  out.residual_order = d.residual_order;
  for (std::size_t k = 0; k < g.gens.size(); ++k)
    out.generator_ids.push_back(g.group.find(g.gens[k]));

  out.residual_by_element.reserve(g.group.size());
  std::vector<std::string> fingerprint(g.group.size());
  for (std::size_t i = 0; i < g.group.size(); ++i) {
    Transform r = evaluate_word(d.residual, g.group.words[i], 2);
    fingerprint[i] = ratio_pair(finite_order_lift(r.raw()));
    out.residual_by_element.push_back(std::move(r));
  }

  bool noncyclic = d.residual_tag != ResidualTag::Cyclic;
  if (noncyclic) {
    for (long sign : {1L, -1L}) {
      BurnsideSymbol s;
      s.stabilizer = d.c_t_elements;
      std::sort(s.stabilizer.begin(), s.stabilizer.end());
      s.generator = d.c_t_generator;
      s.t = d.t;
      s.weight = ((sign * d.chi) % d.t + d.t) % d.t;
      s.residual_fingerprint = fingerprint;
      out.symbols.push_back(std::move(s));
    }
  }
  return out;
}

namespace {

// strict comparison after relabeling c1's element ids by pi (shared
// abstract group; pi = word transport composed with an automorphism)
bool compare_with_map(const BurnsideClass& c1, const BurnsideClass& c2,
                      const std::vector<int>& pi) {
  if (c1.symbols.empty() || c2.symbols.empty())
    return c1.symbols.empty() == c2.symbols.empty();
  const BurnsideSymbol& s1 = c1.symbols[0];
  const BurnsideSymbol& s2 = c2.symbols[0];
  if (s1.t != s2.t) return false;
  std::set<int> image;
  for (int e : s1.stabilizer) image.insert(pi[e]);
  if (!std::equal(image.begin(), image.end(), s2.stabilizer.begin(),
                  s2.stabilizer.end()) ||
      image.size() != s2.stabilizer.size())
    return false;
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (s1.residual_fingerprint[i] != s2.residual_fingerprint[pi[i]]) return false;
  // confirming conjugator on the generator images
  std::vector<Transform> r1, r2;
  for (std::size_t k = 0; k < c1.generator_ids.size(); ++k) {
    r1.push_back(c1.residual_by_element[c1.generator_ids[k]]);
    r2.push_back(c2.residual_by_element[pi[c1.generator_ids[k]]]);
  }
  if (!find_conjugator(r1, r2).conjugate) return false;
  // weights up to simultaneous sign: express pi(c1's C_t generator) as a
  // power of c2's chosen generator
  int j = pi[s1.generator];
  long k = -1;
  int x = s2.generator;
  for (long e = 1; e <= s2.t; ++e) {
    if (x == j) {
      k = e;
      break;
    }
    x = c2.table.mul(x, s2.generator);
  }
  if (k < 0) return false;
  long w2 = (k * s2.weight) % s2.t;
  long w1 = s1.weight % s1.t;
  return w2 == w1 || (s1.t - w2) % s1.t == w1;
}

}  // namespace

bool classes_equal(const BurnsideClass& c1, const BurnsideClass& c2,
                   CompareMode mode) {
  if (c1.group_order != c2.group_order) return false;
  if (c1.symbols.empty() || c2.symbols.empty())
    return c1.symbols.empty() == c2.symbols.empty();
  int s = c1.table.size();
  std::vector<int> mu(s);
  for (int i = 0; i < s; ++i) mu[i] = c2.table.evaluate_word(c1.table.words()[i]);
  if (mode == CompareMode::Strict) return compare_with_map(c1, c2, mu);

  AutomorphismTable auts = automorphisms(c1.table);
  for (const auto& psi : auts.maps) {
    std::vector<int> pi(s);
    for (int i = 0; i < s; ++i) pi[i] = mu[psi[i]];
    if (compare_with_map(c1, c2, pi)) return true;
  }
  return false;
}

std::string class_to_text(const BurnsideClass& c) {
  if (c.symbols.empty()) return "(empty incompressible class)\n";
  std::ostringstream os;
  std::vector<std::string> lines;
  for (const auto& s : c.symbols) {
    std::ostringstream line;
    std::string gbar = residual_tag_name(c.residual_tag);
    if (c.residual_tag == ResidualTag::Cyclic)
      gbar += std::to_string(c.residual_order);
    if (c.residual_tag == ResidualTag::Dihedral)
      gbar += std::to_string(c.residual_order / 2);
    line << "(t=" << s.t << ", Gbar=" << gbar << ", chi=" << s.weight << ")";
    lines.push_back(line.str());
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) os << l << "\n";
  return os.str();
}

}  // namespace cremona
