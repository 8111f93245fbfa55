#pragma once

#include <vector>

#include "jumploci/cyclotomic.hpp"
#include "jumploci/exact.hpp"

namespace jumploci {

// Dense matrix over a field (Rational or Cyclotomic), row major.
template <class K>
struct FieldMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<K> a;

  FieldMatrix() = default;
  FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, K(0)) {}
  K& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

using QMatrix = FieldMatrix<Rational>;
using CMatrix = FieldMatrix<Cyclotomic>;

// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<std::size_t> rref(FieldMatrix<K>& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class K>
std::size_t matrix_rank(FieldMatrix<K> m) {
  // forward elimination only
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (is_zero(m(i, c))) continue;
      K f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// Basis of {x : m x = 0}, one vector per free column.
template <class K>
std::vector<std::vector<K>> nullspace(FieldMatrix<K> m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<K> v(m.cols, K(0));
    v[f] = K(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Lift every entry of a cyclotomic matrix to one common order so that the
// elimination never changes fields midway.
inline void unify_orders(CMatrix& m) {
  long n = 1;
  for (const auto& x : m.a) n = lcm_long(n, x.order());
  for (auto& x : m.a) x = x.lifted(n);
}

}  // namespace jumploci
