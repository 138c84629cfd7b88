#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace flagmotive {

// Dense square integer matrix, row-major. Used for Cartan matrices and for
// Weyl group elements acting on the root lattice in the simple-root basis.
class IntMatrix {
public:
  IntMatrix() : n_(0) {}
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }

  int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::vector<int>& data() const { return data_; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.data_ < b.data_;
  }

  IntMatrix operator*(const IntMatrix& other) const {
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        int aik = (*this)(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < n_; ++j) out(i, j) += aik * other(k, j);
      }
    return out;
  }

private:
  int n_;
  std::vector<int> data_;
};

}  // namespace flagmotive
