#pragma once

#include <vector>

#include "ffls/errors.hpp"
#include "ffls/fqpoly.hpp"

namespace ffls {

// Small dense matrix over a ring element type T.  T must supply value
// semantics, the ring operators, and zero()/one() instance factories
// (entries carry their own context).

template <class T>
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols, const T& fill)
      : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

  static Mat identity(int n, const T& sample) {
    Mat m(n, n, sample.zero());
    for (int i = 0; i < n; ++i) m.at(i, i) = sample.one();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool empty() const { return d_.empty(); }

  T& at(int i, int j) {
    return d_[static_cast<size_t>(i) * static_cast<size_t>(c_) + static_cast<size_t>(j)];
  }
  const T& at(int i, int j) const {
    return d_[static_cast<size_t>(i) * static_cast<size_t>(c_) + static_cast<size_t>(j)];
  }

  Mat operator+(const Mat& o) const {
    FFLS_CHECK(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch in +");
    Mat m = *this;
    for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = m.d_[i] + o.d_[i];
    return m;
  }
  Mat operator-(const Mat& o) const {
    FFLS_CHECK(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch in -");
    Mat m = *this;
    for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = m.d_[i] - o.d_[i];
    return m;
  }
  Mat operator*(const Mat& o) const {
    FFLS_CHECK(c_ == o.r_, "matrix shape mismatch in *");
    FFLS_CHECK(!d_.empty() && !o.d_.empty(), "empty matrix product");
    Mat m(r_, o.c_, d_[0].zero());
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& a = at(i, k);
        for (int j = 0; j < o.c_; ++j) m.at(i, j) = m.at(i, j) + a * o.at(k, j);
      }
    return m;
  }
  Mat scaled(const T& s) const {
    Mat m = *this;
    for (auto& x : m.d_) x = x * s;
    return m;
  }

  bool operator==(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < d_.size(); ++i)
      if (!(d_[i] == o.d_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!x.is_zero()) return false;
    return true;
  }

  template <class F>
  Mat map(F&& fn) const {
    Mat m = *this;
    for (auto& x : m.d_) x = fn(x);
    return m;
  }

private:
  int r_ = 0, c_ = 0;
  std::vector<T> d_;
};

// Characteristic polynomial det(lambda*I - M) by the Berkowitz chain:
// division free, so it works verbatim over F_q[z] entries.  Returned low
// degree first, monic of degree n.
template <class T>
std::vector<T> berkowitz_charpoly(const Mat<T>& m) {
  FFLS_CHECK(m.rows() == m.cols() && m.rows() >= 1, "charpoly needs a nonempty square matrix");
  const int n = m.rows();
  const T zero = m.at(0, 0).zero();
  const T one = m.at(0, 0).one();
  std::vector<T> p{one};  // coefficients, highest power first
  for (int r = 1; r <= n; ++r) {
    // Column vector S, row vector R bordering the (r-1)x(r-1) leading block.
    std::vector<T> c(static_cast<size_t>(r) + 1, zero);
    c[0] = one;
    c[1] = zero - m.at(r - 1, r - 1);
    if (r >= 2) {
      std::vector<T> v(static_cast<size_t>(r) - 1);
      for (int i = 0; i < r - 1; ++i) v[static_cast<size_t>(i)] = m.at(i, r - 1);
      for (int k = 2; k <= r; ++k) {
        // c[k] = - R . A^{k-2} S
        T dot = zero;
        for (int i = 0; i < r - 1; ++i) dot = dot + m.at(r - 1, i) * v[static_cast<size_t>(i)];
        c[static_cast<size_t>(k)] = zero - dot;
        if (k < r) {
          std::vector<T> nv(static_cast<size_t>(r) - 1, zero);
          for (int i = 0; i < r - 1; ++i)
            for (int j = 0; j < r - 1; ++j)
              nv[static_cast<size_t>(i)] = nv[static_cast<size_t>(i)] + m.at(i, j) * v[static_cast<size_t>(j)];
          v = nv;
        }
      }
    }
    // p_r = C_r p_{r-1}: a (r+1) x r lower-triangular Toeplitz product,
    // i.e. the convolution clamped to indices <= r.
    std::vector<T> np(static_cast<size_t>(r) + 1, zero);
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < p.size() && i + j < np.size(); ++j)
        np[i + j] = np[i + j] + c[i] * p[j];
    p = std::move(np);
  }
  std::vector<T> low(p.rbegin(), p.rend());
  return low;
}

// Invariant factors of a matrix over F_q[x] by Smith reduction: the monic
// nonunit diagonal entries d_1 | d_2 | ..., low index first.  Serves as
// the brute-force Fitting-ideal oracle against the charpoly route.
std::vector<FqPoly> invariant_factors(Mat<FqPoly> m);

}  // namespace ffls
