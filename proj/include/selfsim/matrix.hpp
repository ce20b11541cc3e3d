#pragma once

#include <cstddef>
#include <vector>

#include "selfsim/ring.hpp"

namespace selfsim {

// Dense square matrix over an exact scalar ring.  Value type, row-major.
template <class T>
class SquareMat {
 public:
  SquareMat(std::size_t n, const T& fill) : n_(n), a_(n * n, fill) {}

  std::size_t dim() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  bool operator==(const SquareMat& o) const {
    return n_ == o.n_ && a_ == o.a_;
  }

  static SquareMat identity(std::size_t n, const T& one_like) {
    SquareMat m(n, ring_zero(one_like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring_one(one_like);
    return m;
  }

  SquareMat transpose() const {
    SquareMat r(*this);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) std::swap(r(i, j), r(j, i));
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j ? !ring_is_one((*this)(i, j)) : !ring_is_zero((*this)(i, j)))
          return false;
      }
    }
    return true;
  }

  bool is_lower_triangular() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!ring_is_zero((*this)(i, j))) return false;
    return true;
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 1; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!ring_is_zero((*this)(i, j))) return false;
    return true;
  }

  bool is_diagonal() const {
    return is_lower_triangular() && is_upper_triangular();
  }

 private:
  std::size_t n_;
  std::vector<T> a_;
};

template <class T>
SquareMat<T> mul(const SquareMat<T>& a, const SquareMat<T>& b) {
  if (a.dim() != b.dim()) {
    throw ShapeMismatch("matrix product of sizes " + std::to_string(a.dim()) +
                        " and " + std::to_string(b.dim()));
  }
  std::size_t n = a.dim();
  SquareMat<T> c(n, ring_zero(a(0, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const T& aik = a(i, k);
      if (ring_is_zero(aik)) continue;  // exact zeros are common; skip them
      for (std::size_t j = 0; j < n; ++j) {
        if (ring_is_zero(b(k, j))) continue;
        c(i, j) = c(i, j) + aik * b(k, j);
      }
    }
  }
  return c;
}

template <class T>
std::vector<T> mul_vec(const SquareMat<T>& a, const std::vector<T>& x) {
  if (a.dim() != x.size()) throw ShapeMismatch("matrix-vector size mismatch");
  std::vector<T> y(a.dim(), ring_zero(a(0, 0)));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (ring_is_zero(a(i, j))) continue;
      y[i] = y[i] + a(i, j) * x[j];
    }
  return y;
}

}  // namespace selfsim
