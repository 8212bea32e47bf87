#pragma once

#include "quiverdyn/matrix.hpp"

#include <optional>
#include <vector>

namespace quiverdyn {

/// Primitive integer spanning set of a kernel: content-1 vectors, linearly
/// independent, one per free column of the RREF.
struct KernelBasis {
  std::vector<std::vector<Int>> vectors;

  std::size_t size() const { return vectors.size(); }
};

struct RrefResult {
  RatMatrix reduced;
  RatMatrix transform;  // transform * input == reduced
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form. Pivot rule is fixed: columns scanned left to
/// right, within a column the earliest remaining row wins. Deterministic.
RrefResult rref(const RatMatrix& a);

/// Exact rank and primitive integer kernel basis, free columns enumerated in
/// increasing order (so each basis vector ends in +1 at its free coordinate).
std::pair<std::size_t, KernelBasis> rank_kernel(const RatMatrix& m);
std::pair<std::size_t, KernelBasis> rank_kernel(const IntMatrix& m);

/// One exact solution of A x = b with all free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b);

Rat determinant(const RatMatrix& a);
Int determinant(const IntMatrix& a);

/// Row-style Hermite normal form; zero rows are dropped. Two integer row sets
/// generate the same lattice exactly when their HNFs coincide.
IntMatrix hermite_normal_form(const IntMatrix& a);

bool same_row_lattice(const std::vector<std::vector<Int>>& a,
                      const std::vector<std::vector<Int>>& b);

}  // namespace quiverdyn
