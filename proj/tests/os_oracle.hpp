#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "jumploci/arrangement.hpp"
#include "jumploci/linalg.hpp"

namespace testing_support {

using namespace jumploci;

// The Orlik-Solomon algebra as E/I inside the full exterior algebra, with
// I spanned in each degree by e_U * d(e_S) over dependent S. No nbc basis.
class ExteriorQuotient {
 public:
  ExteriorQuotient(const Arrangement& a, std::size_t max_degree) : r_(static_cast<int>(a.size())) {
    for (std::size_t p = 0; p <= max_degree + 1; ++p) {
      std::map<std::vector<int>, std::size_t> idx;
      subsets(p, [&](const std::vector<int>& s) { idx.emplace(s, idx.size()); });
      index_.push_back(idx);
    }
    ideal_.resize(max_degree + 2);
    for (std::size_t p = 0; p <= max_degree + 1; ++p) {
      for (std::size_t q = 1; q <= p + 1 && q <= static_cast<std::size_t>(r_); ++q)
        subsets(q, [&](const std::vector<int>& s) {
          if (a.rank_of(s) == s.size()) return;
          // boundary of e_S has degree q-1; multiply by e_U with |U| = p - q + 1
          subsets(p - (q - 1), [&](const std::vector<int>& u) {
            std::vector<Rational> v(index_[p].size(), Rational(0));
            for (std::size_t k = 0; k < s.size(); ++k) {
              std::vector<int> sk = s;
              sk.erase(sk.begin() + static_cast<long>(k));
              int sign = (k % 2 ? -1 : 1);
              accumulate(u, sk, Rational(sign), v);
            }
            ideal_[p].push_back(v);
          });
        });
    }
  }

  std::size_t exterior_dim(std::size_t p) const { return index_[p].size(); }
  std::size_t ideal_rank(std::size_t p) const { return rank(ideal_[p], exterior_dim(p)); }
  std::size_t quotient_dim(std::size_t p) const { return exterior_dim(p) - ideal_rank(p); }

  // rank of multiplication by a on E^p / I^p -> E^{p+1} / I^{p+1}
  std::size_t mult_rank(const std::vector<Rational>& a, std::size_t p) const {
    std::vector<std::vector<Rational>> rows = ideal_[p + 1];
    for (const auto& [s, col] : index_[p]) {
      std::vector<Rational> v(exterior_dim(p + 1), Rational(0));
      for (int i = 0; i < r_; ++i)
        if (a[i] != 0) accumulate({i}, s, a[i], v);
      rows.push_back(v);
    }
    return rank(rows, exterior_dim(p + 1)) - ideal_rank(p + 1);
  }

  long cohomology(const std::vector<Rational>& a, std::size_t i) const {
    long out = static_cast<long>(quotient_dim(i)) - static_cast<long>(mult_rank(a, i));
    if (i > 0) out -= static_cast<long>(mult_rank(a, i - 1));
    return out;
  }

 private:
  template <class F>
  void subsets(std::size_t k, F&& f) const {
    if (k > static_cast<std::size_t>(r_)) return;
    std::vector<int> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<int>(i);
    while (true) {
      f(s);
      long i = static_cast<long>(k) - 1;
      while (i >= 0 && s[i] == r_ - static_cast<int>(k) + i) --i;
      if (i < 0) return;
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
  }

  // v += c * e_u ^ e_w (sorted u, w), with the sign of sorting the concatenation
  void accumulate(const std::vector<int>& u, const std::vector<int>& w, const Rational& c, std::vector<Rational>& v) const {
    std::vector<int> word = u;
    word.insert(word.end(), w.begin(), w.end());
    int sign = 1;
    for (std::size_t i = 0; i < word.size(); ++i)
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        if (word[i] == word[j]) return;
        if (word[i] > word[j]) sign = -sign;
      }
    std::sort(word.begin(), word.end());
    v[index_[word.size()].at(word)] += c * sign;
  }

  static std::size_t rank(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    if (rows.empty()) return 0;
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return matrix_rank(m);
  }

  int r_;
  std::vector<std::map<std::vector<int>, std::size_t>> index_;
  std::vector<std::vector<std::vector<Rational>>> ideal_;
};

}  // namespace testing_support
