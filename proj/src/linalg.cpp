#include "cremona/linalg.hpp"

namespace cremona {

std::vector<int> rref(CycloMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Cyclo inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Cyclo f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(CycloMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Cyclo>> kernel_basis(const CycloMatrix& m_in) {
  CycloMatrix m = m_in;
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Cyclo>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Cyclo> v(cols, Cyclo(0));
    v[free_c] = Cyclo(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Cyclo>> solve(const CycloMatrix& m_in,
                                        const std::vector<Cyclo>& rhs) {
  CycloMatrix m = m_in;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
  std::vector<int> pivots = rref(m);
  std::vector<Cyclo> x(cols, Cyclo(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == static_cast<int>(cols)) return std::nullopt;  // 0 = 1 row
    x[pivots[r]] = m[r][cols];
  }
  return x;
}

}  // namespace cremona
