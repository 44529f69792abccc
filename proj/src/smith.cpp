#include "repring/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include "repring/errors.hpp"

namespace repring {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = static_cast<int>(b[0].size());
  IntMatrix c(n, std::vector<Int>(m, 0));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != k)
      throw InternalError("matrix_product: shape mismatch");
    for (int t = 0; t < k; ++t) {
      Int v = a[i][t];
      if (v == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += v * b[t][j];
    }
  }
  return c;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row[a] += q * row[b]
void add_row(IntMatrix& m, int a, int b, Int q) {
  if (q == 0) return;
  int cols = static_cast<int>(m[a].size());
  for (int j = 0; j < cols; ++j) m[a][j] += q * m[b][j];
}

// col[a] += q * col[b]
void add_col(IntMatrix& m, int a, int b, Int q) {
  if (q == 0) return;
  for (auto& row : m) row[a] += q * row[b];
}

void negate_row(IntMatrix& m, int a) {
  for (auto& v : m[a]) v = -v;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != cols)
      throw InternalError("smith_normal_form: ragged matrix");

  IntMatrix work = a;
  IntMatrix left = identity_matrix(rows);
  IntMatrix right = identity_matrix(cols);
  int n = std::min(rows, cols);

  for (int s = 0; s < n; ++s) {
    for (;;) {
      // Bring the smallest nonzero entry of the trailing block to (s, s).
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = s; i < rows; ++i)
        for (int j = s; j < cols; ++j) {
          Int v = std::llabs(work[i][j]);
          if (v != 0 && (pi < 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) goto done;  // trailing block is zero
      swap_rows(work, s, pi);
      swap_rows(left, s, pi);
      swap_cols(work, s, pj);
      swap_cols(right, s, pj);

      bool clean = true;
      for (int i = s + 1; i < rows; ++i) {
        Int q = work[i][s] / work[s][s];
        add_row(work, i, s, -q);
        add_row(left, i, s, -q);
        if (work[i][s] != 0) clean = false;
      }
      for (int j = s + 1; j < cols; ++j) {
        Int q = work[s][j] / work[s][s];
        add_col(work, j, s, -q);
        add_col(right, j, s, -q);
        if (work[s][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      Int d = std::llabs(work[s][s]);
      bool divides = true;
      for (int i = s + 1; i < rows && divides; ++i)
        for (int j = s + 1; j < cols && divides; ++j)
          if (work[i][j] % d != 0) {
            add_row(work, s, i, 1);
            add_row(left, s, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (work[s][s] < 0) {
      negate_row(work, s);
      negate_row(left, s);
    }
  }

done:
  SmithDecomposition out;
  out.left = std::move(left);
  out.right = std::move(right);
  out.diagonal.assign(n, 0);
  for (int i = 0; i < n; ++i) out.diagonal[i] = work[i][i];
  for (int i = 0; i + 1 < n; ++i)
    if (out.diagonal[i] != 0 && out.diagonal[i + 1] % out.diagonal[i] != 0)
      throw InternalError("smith_normal_form: divisibility chain broken");
  return out;
}

}  // namespace repring
