#pragma once

#include <string>
#include <vector>

#include "jumploci/exact.hpp"

namespace jumploci {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  std::vector<Integer> row(std::size_t i) const;
  std::vector<long> row_long(std::size_t i) const;
  void append_row(const std::vector<Integer>& row);
  void append_row(const std::vector<long>& row);

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  IntMatrix transpose() const;
  IntMatrix stacked(const IntMatrix& below) const;
  IntMatrix select_rows(std::size_t begin, std::size_t end) const;
  IntMatrix select_cols(std::size_t begin, std::size_t end) const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Integer> a_;
};

struct SmithForm {
  IntMatrix U, D, V;
  IntMatrix V_inv;
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors() const;
};

// D = U*A*V with U, V unimodular and d_1 | d_2 | ... ; the identity and the
// divisibility chain are verified before returning.
SmithForm smith_normal_form(const IntMatrix& a);

struct HermiteForm {
  IntMatrix H;  // nonzero rows of the row-style Hermite normal form
  IntMatrix T;  // unimodular with T*A = [H; 0]
};
HermiteForm hermite_normal_form(const IntMatrix& a);

std::size_t int_rank(const IntMatrix& a);
// Basis of the saturation (Q-span intersected with Z^n) of the row lattice.
IntMatrix saturate_rows(const IntMatrix& a);
// Columns form a basis of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

std::vector<long> primitive_vector(const std::vector<long>& v);

}  // namespace jumploci
