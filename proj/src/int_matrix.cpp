#include "jumploci/int_matrix.hpp"

#include <sstream>

namespace jumploci {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
    for (long x : row) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return std::vector<Integer>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

std::vector<long> IntMatrix::row_long(std::size_t i) const {
  std::vector<long> out(c_);
  for (std::size_t j = 0; j < c_; ++j) {
    if (!(*this)(i, j).fits_slong_p()) throw std::overflow_error("matrix entry exceeds machine word");
    out[j] = (*this)(i, j).get_si();
  }
  return out;
}

void IntMatrix::append_row(const std::vector<Integer>& row) {
  if (row.size() != c_) throw std::invalid_argument("row length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++r_;
}

void IntMatrix::append_row(const std::vector<long>& row) {
  if (row.size() != c_) throw std::invalid_argument("row length mismatch");
  for (long x : row) a_.emplace_back(x);
  ++r_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix m(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Integer& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
    }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
  if (r_ == 0) return below;
  if (below.r_ == 0) return *this;
  if (below.c_ != c_) throw std::invalid_argument("stack width mismatch");
  IntMatrix m = *this;
  m.a_.insert(m.a_.end(), below.a_.begin(), below.a_.end());
  m.r_ += below.r_;
  return m;
}

IntMatrix IntMatrix::select_rows(std::size_t begin, std::size_t end) const {
  IntMatrix m(end - begin, c_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i - begin, j) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::select_cols(std::size_t begin, std::size_t end) const {
  IntMatrix m(r_, end - begin);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < c_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
  return d;
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}
void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix D = a, U = IntMatrix::identity(m), V = IntMatrix::identity(n), Vi = IntMatrix::identity(n);
  // Column op "col_dst += f col_src" on V is "row_src -= f row_dst" on V^{-1}.
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    col_axpy(D, dst, src, f);
    col_axpy(V, dst, src, f);
    row_axpy(Vi, src, dst, -f);
  };
  auto col_sw = [&](std::size_t x, std::size_t y) {
    col_swap(D, x, y);
    col_swap(V, x, y);
    row_swap(Vi, x, y);
  };
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    row_axpy(D, dst, src, f);
    row_axpy(U, dst, src, f);
  };
  auto row_sw = [&](std::size_t x, std::size_t y) {
    row_swap(D, x, y);
    row_swap(U, x, y);
  };
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero entry of the trailing block
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (!found || abs(D(i, j)) < abs(D(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    row_sw(t, pi);
    col_sw(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (D(i, t) != 0) {
          row_op(i, t, -fdiv(D(i, t), D(t, t)));
          if (D(i, t) != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (D(t, j) != 0) {
          col_op(j, t, -fdiv(D(t, j), D(t, t)));
          if (D(t, j) != 0) clean = false;
        }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) bi = t, bj = j;
        row_sw(t, bi);
        col_sw(t, bj);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_op(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < m; ++j) U(t, j) = -U(t, j);
    }
  }
  SmithForm s{U, D, V, Vi, t};
  if (s.U * a * s.V != s.D) throw std::logic_error("smith_normal_form: D != U*A*V");
  if (s.V * s.V_inv != IntMatrix::identity(n)) throw std::logic_error("smith_normal_form: V not unimodular");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && s.D(i, j) != 0) throw std::logic_error("smith_normal_form: D not diagonal");
  for (std::size_t i = 0; i + 1 < s.rank; ++i)
    if (s.D(i + 1, i + 1) % s.D(i, i) != 0) throw std::logic_error("smith_normal_form: divisibility chain broken");
  return s;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix H = a, T = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (H(i, c) == 0) continue;
      Integer x = H(r, c), y = H(i, c), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      Integer xg = x / g, yg = y / g;
      for (IntMatrix* M : {&H, &T}) {
        for (std::size_t j = 0; j < M->cols(); ++j) {
          Integer u = (*M)(r, j), v = (*M)(i, j);
          (*M)(r, j) = s * u + t * v;
          (*M)(i, j) = xg * v - yg * u;
        }
      }
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      for (std::size_t j = 0; j < n; ++j) H(r, j) = -H(r, j);
      for (std::size_t j = 0; j < m; ++j) T(r, j) = -T(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = fdiv(H(i, c), H(r, c));
      if (q == 0) continue;
      row_axpy(H, i, r, -q);
      row_axpy(T, i, r, -q);
    }
    ++r;
  }
  return {H.select_rows(0, r), T};
}

std::size_t int_rank(const IntMatrix& a) { return hermite_normal_form(a).H.rows(); }

IntMatrix saturate_rows(const IntMatrix& a) {
  if (a.rows() == 0) return IntMatrix(0, a.cols());
  auto s = smith_normal_form(a);
  return hermite_normal_form(s.V_inv.select_rows(0, s.rank)).H;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  if (a.rows() == 0) return IntMatrix::identity(a.cols());
  auto s = smith_normal_form(a);
  return s.V.select_cols(s.rank, a.cols());
}

std::vector<long> primitive_vector(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = gcd_long(g, x);
  std::vector<long> out = v;
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace jumploci
