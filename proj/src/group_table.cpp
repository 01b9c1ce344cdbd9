#include "cremona/group_table.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cremona {

GroupTable GroupTable::from_group(const FiniteLinearGroup& g) {
  GroupTable t;
  int s = static_cast<int>(g.size());
  t.words_ = g.words;

  std::vector<int> gen_elt(g.gens.size());
  for (std::size_t k = 0; k < g.gens.size(); ++k) {
    gen_elt[k] = g.find(g.gens[k]);
    if (gen_elt[k] < 0) throw std::logic_error("from_group: generator not in closure");
  }
  t.gen_ids_ = gen_elt;

  // columns x -> x * gen_k by matrix products; everything else follows
  // from BFS provenance: i*(p*g_k) = (i*p)*g_k.
  std::vector<std::vector<int>> col(g.gens.size(), std::vector<int>(s));
  for (std::size_t k = 0; k < g.gens.size(); ++k)
    for (int i = 0; i < s; ++i) {
      int id = g.find(g.elements[i] * g.gens[k]);
      if (id < 0) throw std::logic_error("from_group: closure not closed");
      col[k][i] = id;
    }
  t.table_.assign(s, std::vector<int>(s, 0));
  for (int i = 0; i < s; ++i) {
    t.table_[i][0] = i;
    for (int j = 1; j < s; ++j)
      t.table_[i][j] = col[g.via_gen[j]][t.table_[i][g.parent[j]]];
  }

  t.inv_.assign(s, -1);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (t.table_[i][j] == 0) {
        t.inv_[i] = j;
        break;
      }
  return t;
}

long GroupTable::order(int i) const {
  long k = 1;
  int x = i;
  while (x != 0) {
    x = table_[x][i];
    ++k;
  }
  return k;
}

bool GroupTable::is_abelian() const {
  for (int a : gen_ids_)
    for (int b : gen_ids_)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

int GroupTable::evaluate_word(const std::vector<int>& word) const {
  int x = 0;
  for (int k : word) x = table_[x][gen_ids_[k]];
  return x;
}

std::vector<int> GroupTable::subgroup(std::vector<int> generators) const {
  std::set<int> seen(generators.begin(), generators.end());
  seen.insert(0);
  std::vector<int> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int gidx : generators) {
      int y = table_[x][gidx];
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

bool GroupTable::subset_is_cyclic(const std::vector<int>& elems) const {
  if (elems.size() == 1) return true;
  for (int e : elems)
    if (order(e) == static_cast<long>(elems.size())) return true;
  return false;
}

std::vector<long> GroupTable::element_orders() const {
  std::vector<long> out;
  out.reserve(table_.size());
  for (int i = 0; i < size(); ++i) out.push_back(order(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> GroupTable::center() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool central = true;
    for (int g : gen_ids_)
      if (table_[i][g] != table_[g][i]) {
        central = false;
        break;
      }
    if (central) out.push_back(i);
  }
  return out;
}

long AutomorphismTable::inner_order() const {
  long k = 0;
  for (bool b : inner)
    if (b) ++k;
  return k;
}

AutomorphismTable automorphisms(const GroupTable& g, long bound) {
  int s = g.size();
  if (s > bound)
    throw BoundExceeded("group order " + std::to_string(s) + " above " +
                        std::to_string(bound));
  const auto& gens = g.generator_ids();

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    long target = g.order(gens[k]);
    for (int e = 0; e < s; ++e)
      if (g.order(e) == target) candidates[k].push_back(e);
  }

  AutomorphismTable out;
  std::set<std::vector<int>> seen;
  std::vector<int> images(gens.size());

  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == gens.size()) {
      std::vector<int> f(s);
      std::vector<bool> hit(s, false);
      for (int e = 0; e < s; ++e) {
        int x = 0;
        for (int k : g.words()[e]) x = g.mul(x, images[k]);
        f[e] = x;
        if (hit[x]) return;  // not injective
        hit[x] = true;
      }
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
          if (f[g.mul(a, b)] != g.mul(f[a], f[b])) return;
      if (seen.insert(f).second) out.maps.push_back(f);
      return;
    }
    for (int cand : candidates[level]) {
      images[level] = cand;
      rec(level + 1);
    }
  };
  rec(0);

  std::set<std::vector<int>> inner_maps;
  for (int c = 0; c < s; ++c) {
    std::vector<int> f(s);
    for (int e = 0; e < s; ++e) f[e] = g.mul(g.mul(c, e), g.inv(c));
    inner_maps.insert(f);
  }
  for (const auto& m : out.maps) out.inner.push_back(inner_maps.count(m) > 0);
  return out;
}

GroupSignature signature_of(const GroupTable& g) {
  return {static_cast<long>(g.size()), g.is_abelian(), g.element_orders()};
}

namespace {
GroupSignature make_sig(long order, bool abelian,
                        std::vector<std::pair<long, long>> counts) {
  GroupSignature s;
  s.order = order;
  s.abelian = abelian;
  for (auto [o, c] : counts)
    for (long i = 0; i < c; ++i) s.element_orders.push_back(o);
  std::sort(s.element_orders.begin(), s.element_orders.end());
  return s;
}
}  // namespace

GroupSignature signature_a4() { return make_sig(12, false, {{1, 1}, {2, 3}, {3, 8}}); }
GroupSignature signature_s4() {
  return make_sig(24, false, {{1, 1}, {2, 9}, {3, 8}, {4, 6}});
}
GroupSignature signature_a5() {
  return make_sig(60, false, {{1, 1}, {2, 15}, {3, 20}, {5, 24}});
}
GroupSignature signature_c3c3() { return make_sig(9, true, {{1, 1}, {3, 8}}); }
GroupSignature signature_c3_s3() {
  return make_sig(18, false, {{1, 1}, {2, 9}, {3, 8}});
}
GroupSignature signature_c7_c3() {
  return make_sig(21, false, {{1, 1}, {3, 14}, {7, 6}});
}
GroupSignature signature_c32_c4() {
  return make_sig(36, false, {{1, 1}, {2, 9}, {3, 8}, {4, 18}});
}

}  // namespace cremona
