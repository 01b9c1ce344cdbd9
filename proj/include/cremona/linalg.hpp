// Exact dense linear algebra over cyclotomic fields: rank, kernel, solving.
// Row-major matrices as vector<vector<Cyclo>>.

#pragma once

#include <optional>
#include <vector>

#include "cremona/cyclotomic.hpp"

namespace cremona {

using CycloMatrix = std::vector<std::vector<Cyclo>>;

// Reduced row echelon form in place; returns pivot column per row used.
std::vector<int> rref(CycloMatrix& m);

int rank(CycloMatrix m);

// Basis of the right kernel {x : m x = 0}.
std::vector<std::vector<Cyclo>> kernel_basis(const CycloMatrix& m);

// One solution of m x = rhs, or nullopt if inconsistent.
std::optional<std::vector<Cyclo>> solve(const CycloMatrix& m,
                                        const std::vector<Cyclo>& rhs);

}  // namespace cremona
