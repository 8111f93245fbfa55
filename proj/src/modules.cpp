#include "jumploci/modules.hpp"

#include <bit>
#include <unordered_map>

namespace jumploci {

FPModule::FPModule(int num_vars, std::size_t num_generators, LaurentMatrix relations)
    : n_(num_vars), g_(num_generators) {
  for (auto& row : relations) {
    if (row.size() != g_) throw std::invalid_argument("FPModule: relation length differs from generator count");
    bool zero = true;
    for (const auto& x : row) {
      if (x.num_vars() != n_) throw std::invalid_argument("FPModule: entry with wrong number of variables");
      zero = zero && x.is_zero();
    }
    if (!zero) rel_.push_back(std::move(row));
  }
}

FPModule FPModule::cyclic(const LaurentPoly& f) { return FPModule(f.num_vars(), 1, {{f}}); }

FPModule FPModule::cyclic(int num_vars, const std::vector<LaurentPoly>& relations) {
  LaurentMatrix m;
  for (const auto& f : relations) m.push_back({f});
  return FPModule(num_vars, 1, std::move(m));
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
  }
};

class MinorCache {
 public:
  MinorCache(const LaurentMatrix& m, int n) : m_(m), n_(n) {}

  const LaurentPoly& minor(std::uint64_t rows, std::uint64_t cols) {
    auto key = std::make_pair(rows, cols);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    LaurentPoly acc(n_);
    if (rows == 0) {
      acc = LaurentPoly::one(n_);
    } else {
      int r0 = std::countr_zero(rows);
      std::uint64_t rest = rows & (rows - 1);
      int sign = 1;
      for (std::uint64_t c = cols; c; c &= c - 1) {
        int j = std::countr_zero(c);
        const LaurentPoly& e = m_[r0][j];
        if (!e.is_zero()) {
          const LaurentPoly& sub = minor(rest, cols & ~(std::uint64_t(1) << j));
          if (!sub.is_zero()) acc += sign > 0 ? e * sub : -(e * sub);
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(acc)).first->second;
  }

 private:
  const LaurentMatrix& m_;
  int n_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, LaurentPoly, KeyHash> memo_;
};

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t(1) << i;
    f(mask);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<LaurentPoly> all_minors(const LaurentMatrix& m, std::size_t cols, std::size_t size, int num_vars) {
  if (size == 0) return {LaurentPoly::one(num_vars)};
  if (m.size() > 64 || cols > 64) throw UnsupportedInput("presentation matrix larger than 64 rows or columns");
  if (size > m.size() || size > cols) return {};
  MinorCache cache(m, num_vars);
  std::vector<LaurentPoly> out;
  for_each_subset(m.size(), size, [&](std::uint64_t rows) {
    for_each_subset(cols, size, [&](std::uint64_t cs) {
      const auto& v = cache.minor(rows, cs);
      if (!v.is_zero()) out.push_back(v);
    });
  });
  return normalize_generators(out);
}

std::vector<LaurentPoly> fitting_ideal(const FPModule& m, std::size_t k) {
  const std::size_t g = m.num_generators();
  if (k >= g) return {LaurentPoly::one(m.num_vars())};
  const std::size_t size = g - k;
  if (size > m.num_relations()) return {LaurentPoly(m.num_vars())};
  auto minors = all_minors(m.presentation(), g, size, m.num_vars());
  if (minors.empty()) return {LaurentPoly(m.num_vars())};
  return minors;
}

SupportLocus support(const FPModule& m) { return extract_components(make_locus(m.num_vars(), fitting_ideal(m, 0))); }

LaurentPoly char_poly(const FPModule& m) {
  auto e0 = fitting_ideal(m, 0);
  auto g = laurent_gcd(e0, m.num_vars());
  if (g.is_zero()) return LaurentPoly::one(m.num_vars());  // full support
  return g;
}

FPModule involution(const FPModule& m) {
  LaurentMatrix rel = m.presentation();
  for (auto& row : rel)
    for (auto& x : row) x = x.conj();
  return FPModule(m.num_vars(), m.num_generators(), std::move(rel));
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  const std::size_t g = a.num_generators() + b.num_generators();
  LaurentMatrix rel;
  for (const auto& row : a.presentation()) {
    std::vector<LaurentPoly> r(g, LaurentPoly(a.num_vars()));
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = row[j];
    rel.push_back(std::move(r));
  }
  for (const auto& row : b.presentation()) {
    std::vector<LaurentPoly> r(g, LaurentPoly(a.num_vars()));
    for (std::size_t j = 0; j < row.size(); ++j) r[a.num_generators() + j] = row[j];
    rel.push_back(std::move(r));
  }
  return FPModule(a.num_vars(), g, std::move(rel));
}

bool divisibility_check(const FPModule& a, const FPModule& b, const FPModule& c, const std::vector<Angles>& samples) {
  auto sa = make_locus(a.num_vars(), fitting_ideal(a, 0));
  auto sb = make_locus(b.num_vars(), fitting_ideal(b, 0));
  auto sc = make_locus(c.num_vars(), fitting_ideal(c, 0));
  for (const auto& p : samples)
    if (sb.contains_point(p) && !sa.contains_point(p) && !sc.contains_point(p)) return false;
  return laurent_divide(char_poly(a) * char_poly(c), char_poly(b)).has_value();
}

}  // namespace jumploci
