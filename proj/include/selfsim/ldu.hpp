#pragma once

#include <vector>

#include "selfsim/defining.hpp"

namespace selfsim {

// Seed-level LDU data: unipotent lower L, diagonal d(0..b-1), unipotent
// upper U, with L * diag(d) * U equal to the defining matrix.
template <class T>
struct LduFactors {
  SquareMat<T> lower;
  std::vector<T> diag;
  SquareMat<T> upper;
};

// Fraction-free elimination on the seed.  After step k-1 the working entry
// (i,j), i,j >= k, equals the minor det over rows {0..k-1, i} and columns
// {0..k-1, j}, so the pivot sequence is exactly the leading principal
// minors and d(k) is their consecutive ratio.  Throws Degenerate{k} at the
// first non-invertible k x k leading minor.
template <class T>
LduFactors<T> ldu_defining(const Defining<T>& def) {
  std::size_t b = static_cast<std::size_t>(def.base);
  SquareMat<T> m = def.tilde;
  const T one = ring_one(m(0, 0));
  LduFactors<T> f{SquareMat<T>::identity(b, one), {}, SquareMat<T>::identity(b, one)};
  std::vector<T> minors;  // minors[k] = det of leading (k+1) x (k+1) block
  minors.reserve(b);
  T prev = one;
  for (std::size_t k = 0; k < b; ++k) {
    const T pivot = m(k, k);
    if (ring_is_zero(pivot)) throw Degenerate(static_cast<int>(k) + 1);
    for (std::size_t i = k + 1; i < b; ++i) f.lower(i, k) = m(i, k) / pivot;
    for (std::size_t j = k + 1; j < b; ++j) f.upper(k, j) = m(k, j) / pivot;
    for (std::size_t i = k + 1; i < b; ++i) {
      for (std::size_t j = k + 1; j < b; ++j) {
        m(i, j) = (pivot * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
    }
    minors.push_back(pivot);
    prev = pivot;
  }
  f.diag.reserve(b);
  f.diag.push_back(minors[0]);  // = 1 by normalization
  for (std::size_t k = 1; k < b; ++k) f.diag.push_back(minors[k] / minors[k - 1]);
  return f;
}

enum class Triangularity { Lower, Upper };

template <class T>
Triangularity triangularity_of(const Defining<T>& def, const char* who) {
  bool lower = def.tilde.is_lower_triangular();
  bool upper = def.tilde.is_upper_triangular();
  if (!lower && !upper) {
    throw NotTriangular(std::string(who) + ": defining matrix is not triangular");
  }
  return lower ? Triangularity::Lower : Triangularity::Upper;
}

template <class T>
void require_invertible_diagonal(const Defining<T>& def) {
  for (std::size_t i = 0; i < def.tilde.dim(); ++i) {
    if (ring_is_zero(def.tilde(i, i))) throw SingularDiagonal();
  }
}

// Seed product of two triangular self-similar matrices of the same shape;
// defines the product of the induced matrices.
template <class T>
Defining<T> compose_triangular(const Defining<T>& r, const Defining<T>& t) {
  if (r.base != t.base) {
    throw ShapeMismatch("compose_triangular: bases " + std::to_string(r.base) +
                        " and " + std::to_string(t.base));
  }
  if (!ring_compatible(r.tilde(0, 0), t.tilde(0, 0))) {
    throw ShapeMismatch("compose_triangular: operands over distinct rings");
  }
  Triangularity tr = triangularity_of(r, "compose_triangular");
  Triangularity tt = triangularity_of(t, "compose_triangular");
  bool r_diag = r.tilde.is_diagonal();
  bool t_diag = t.tilde.is_diagonal();
  if (tr != tt && !r_diag && !t_diag) {
    throw NotTriangular("compose_triangular: mixed lower/upper operands");
  }
  require_invertible_diagonal(r);
  require_invertible_diagonal(t);
  return Defining<T>(r.base, mul(r.tilde, t.tilde));
}

// Seed of the inverse self-similar matrix of a triangular one.
template <class T>
Defining<T> invert_triangular(const Defining<T>& t) {
  Triangularity tri = triangularity_of(t, "invert_triangular");
  require_invertible_diagonal(t);
  std::size_t b = t.tilde.dim();
  const T one = ring_one(t.tilde(0, 0));
  SquareMat<T> inv(b, ring_zero(one));
  if (tri == Triangularity::Lower) {
    for (std::size_t j = 0; j < b; ++j) {
      inv(j, j) = ring_inv(t.tilde(j, j));
      for (std::size_t i = j + 1; i < b; ++i) {
        T acc = ring_zero(one);
        for (std::size_t k = j; k < i; ++k) acc = acc + t.tilde(i, k) * inv(k, j);
        inv(i, j) = -(acc / t.tilde(i, i));
      }
    }
  } else {
    for (std::size_t j = b; j-- > 0;) {
      inv(j, j) = ring_inv(t.tilde(j, j));
      for (std::size_t i = j; i-- > 0;) {
        T acc = ring_zero(one);
        for (std::size_t k = i + 1; k <= j; ++k) acc = acc + t.tilde(i, k) * inv(k, j);
        inv(i, j) = -(acc / t.tilde(i, i));
      }
    }
  }
  return Defining<T>(t.base, std::move(inv));
}

// M(n)^{-1} = U(n)^{-1} D(n)^{-1} L(n)^{-1}: each factor's inverse is
// self-similar, defined by the inverse of the factor's seed.
template <class T>
SquareMat<T> inverse_dense(const Defining<T>& def, std::size_t n,
                           std::size_t cap = kDenseCap) {
  LduFactors<T> f = ldu_defining(def);  // Degenerate propagates
  std::size_t b = static_cast<std::size_t>(def.base);
  const T one = ring_one(def.tilde(0, 0));
  SquareMat<T> dinv(b, ring_zero(one));
  for (std::size_t k = 0; k < b; ++k) dinv(k, k) = ring_inv(f.diag[k]);
  Defining<T> l_inv = invert_triangular(Defining<T>(def.base, f.lower));
  Defining<T> u_inv = invert_triangular(Defining<T>(def.base, f.upper));
  Defining<T> d_inv(def.base, std::move(dinv));
  SquareMat<T> prod = mul(dense(u_inv, n, cap), dense(d_inv, n, cap));
  return mul(prod, dense(l_inv, n, cap));
}

}  // namespace selfsim
