#include "ffls/matrix.hpp"

namespace ffls {

std::vector<FqPoly> invariant_factors(Mat<FqPoly> m) {
  FFLS_CHECK(!m.empty(), "invariant factors of an empty matrix");
  const int rows = m.rows(), cols = m.cols();
  const int n = std::min(rows, cols);
  std::vector<FqPoly> diag;

  for (int k = 0; k < n; ++k) {
    // Locate a nonzero entry of minimal degree in the trailing block.
    int pi = -1, pj = -1;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        const FqPoly& e = m.at(i, j);
        if (e.is_zero()) continue;
        if (pi < 0 || e.degree() < m.at(pi, pj).degree()) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != k)
      for (int j = 0; j < cols; ++j) std::swap(m.at(pi, j), m.at(k, j));
    if (pj != k)
      for (int i = 0; i < rows; ++i) std::swap(m.at(i, pj), m.at(i, k));

    bool settled = false;
    while (!settled) {
      settled = true;
      // Clear column k.  A nonzero remainder has smaller degree than the
      // pivot, so swapping it up strictly decreases the pivot degree.
      for (int i = k + 1; i < rows; ++i) {
        if (m.at(i, k).is_zero()) continue;
        auto [q, r] = m.at(i, k).divmod(m.at(k, k));
        for (int j = k; j < cols; ++j) m.at(i, j) = m.at(i, j) - q * m.at(k, j);
        if (!r.is_zero()) {
          for (int j = 0; j < cols; ++j) std::swap(m.at(i, j), m.at(k, j));
          settled = false;
          break;
        }
      }
      if (!settled) continue;
      for (int j = k + 1; j < cols; ++j) {
        if (m.at(k, j).is_zero()) continue;
        auto [q, r] = m.at(k, j).divmod(m.at(k, k));
        for (int i = k; i < rows; ++i) m.at(i, j) = m.at(i, j) - m.at(i, k) * q;
        if (!r.is_zero()) {
          for (int i = 0; i < rows; ++i) std::swap(m.at(i, j), m.at(i, k));
          settled = false;
          break;
        }
      }
      if (!settled) continue;
      // Divisibility sweep: the pivot must divide the whole trailing
      // block; pull a failing row up and restart.
      for (int i = k + 1; i < rows && settled; ++i)
        for (int j = k + 1; j < cols && settled; ++j) {
          if ((m.at(i, j) % m.at(k, k)).is_zero()) continue;
          for (int jj = 0; jj < cols; ++jj)
            m.at(k, jj) = m.at(k, jj) + m.at(i, jj);
          settled = false;
        }
    }
    diag.push_back(m.at(k, k).monic());
  }

  std::vector<FqPoly> out;
  for (const auto& d : diag)
    if (d.degree() > 0) out.push_back(d);
  return out;
}

}  // namespace ffls
