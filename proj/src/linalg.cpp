#include "quiverdyn/linalg.hpp"

#include <algorithm>
#include <utility>

namespace quiverdyn {

RrefResult rref(const RatMatrix& a) {
  RrefResult res;
  res.reduced = a;
  res.transform = RatMatrix::identity(a.rows());
  RatMatrix& m = res.reduced;
  RatMatrix& t = res.transform;

  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && m(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(m(r, j), m(piv, j));
      for (std::size_t j = 0; j < a.rows(); ++j) std::swap(t(r, j), t(piv, j));
    }
    Rat inv = Rat(1) / m(r, col);
    for (std::size_t j = 0; j < a.cols(); ++j) m(r, j) *= inv;
    for (std::size_t j = 0; j < a.rows(); ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) -= f * m(r, j);
      for (std::size_t j = 0; j < a.rows(); ++j) t(i, j) -= f * t(r, j);
    }
    res.pivot_cols.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

std::pair<std::size_t, KernelBasis> rank_kernel(const RatMatrix& m) {
  RrefResult r = rref(m);
  KernelBasis basis;
  std::size_t next_pivot = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (next_pivot < r.pivot_cols.size() && r.pivot_cols[next_pivot] == f) {
      ++next_pivot;
      continue;
    }
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t l = 0; l < r.pivot_cols.size(); ++l) v[r.pivot_cols[l]] = -r.reduced(l, f);
    basis.vectors.push_back(primitive_integer(v));
  }
  return {r.rank, std::move(basis)};
}

std::pair<std::size_t, KernelBasis> rank_kernel(const IntMatrix& m) {
  return rank_kernel(m.cast<Rat>());
}

std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  // a pivot in the appended column marks an inconsistent row
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t l = 0; l < r.pivot_cols.size(); ++l)
    x[r.pivot_cols[l]] = r.reduced(l, a.cols());
  return x;
}

Rat determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  RatMatrix m = a;
  std::size_t n = a.rows();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      det = -det;
    }
    det *= m(col, col);
    Rat inv = Rat(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rat f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

Int determinant(const IntMatrix& a) {
  Rat d = determinant(a.cast<Rat>());
  return numerator_of(d);  // denominator is 1 for integer input
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Int>> m;
  m.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) m.push_back(a.row(i));

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    // Euclidean reduction until a single nonzero survives in this column
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        if (best == m.size() ||
            boost::multiprecision::abs(m[i][col]) < boost::multiprecision::abs(m[best][col]))
          best = i;
      }
      if (best == m.size()) break;  // column is zero below r
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        Int q = floor_div(m[i][col], m[r][col]);
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][col] == 0) continue;
    if (m[r][col] < 0)
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(m[i][col], m[r][col]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }

  IntMatrix h(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) h(i, j) = m[i][j];
  return h;
}

bool same_row_lattice(const std::vector<std::vector<Int>>& a,
                      const std::vector<std::vector<Int>>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::size_t cols = a.front().size();
  auto pack = [cols](const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  };
  return hermite_normal_form(pack(a)) == hermite_normal_form(pack(b));
}

}  // namespace quiverdyn
