#include "jumploci/os_algebra.hpp"

#include <algorithm>
#include <functional>

namespace jumploci {

int wedge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  // number of pairs (x in a, y in b) with x > y
  long inv = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inv;
  return inv % 2 ? -1 : 1;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(k);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int start) {
    if (pos == k) {
      f(s);
      return;
    }
    for (int i = start; i <= static_cast<int>(n) - static_cast<int>(k - pos); ++i) {
      s[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool OSAlgebra::independent(const std::vector<int>& s) const { return arr_->rank_of(s) == s.size(); }

OSAlgebra::OSAlgebra(const Arrangement& a, std::size_t degree) : r_(a.size()), degree_(degree), arr_(&a) {
  if (r_ > 16) throw UnsupportedInput("Orlik-Solomon algebra limited to 16 hyperplanes");
  std::vector<int> all(r_);
  for (std::size_t i = 0; i < r_; ++i) all[i] = static_cast<int>(i);
  rank_ = a.rank_of(all);
  degree_ = std::min(degree_, rank_);
  // circuits: dependent sets all of whose proper subsets are independent
  for (std::size_t k = 3; k <= rank_ + 1 && k <= r_; ++k)
    for_each_subset(r_, k, [&](const std::vector<int>& s) {
      if (independent(s)) return;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        auto t = s;
        t.erase(t.begin() + static_cast<long>(drop));
        if (!independent(t)) return;
      }
      circuits_.push_back(s);
    });
  basis_.resize(degree_ + 2);
  index_.resize(degree_ + 2);
  for (std::size_t p = 0; p <= degree_ + 1 && p <= rank_; ++p)
    for_each_subset(r_, p, [&](const std::vector<int>& s) {
      if (!independent(s)) return;
      for (const auto& c : circuits_) {
        std::vector<int> broken(c.begin() + 1, c.end());
        if (std::includes(s.begin(), s.end(), broken.begin(), broken.end())) return;
      }
      index_[p][s] = basis_[p].size();
      basis_[p].push_back(s);
    });
  mult_.resize(degree_ + 1);
  for (std::size_t p = 0; p < degree_ + 1 && p < rank_; ++p)
    for (std::size_t i = 0; i < r_; ++i) {
      QMatrix m(dim(p + 1), dim(p));
      for (std::size_t c = 0; c < dim(p); ++c) {
        const auto& s = basis_[p][c];
        if (std::binary_search(s.begin(), s.end(), static_cast<int>(i))) continue;
        std::vector<int> single{static_cast<int>(i)};
        int sign = wedge_sign(single, s);
        for (const auto& [row, v] : express(set_union(single, s))) m(row, c) += v * sign;
      }
      mult_[p].push_back(std::move(m));
    }
}

std::map<std::size_t, Rational> OSAlgebra::express(const std::vector<int>& t) const {
  if (auto it = memo_.find(t); it != memo_.end()) return it->second;
  std::map<std::size_t, Rational> out;
  const std::size_t p = t.size();
  if (p < index_.size() && independent(t)) {
    if (auto it = index_[p].find(t); it != index_[p].end()) {
      out[it->second] = 1;
    } else {
      // rewrite a broken circuit C \ c0 through the relation d(e_C) = 0
      for (const auto& c : circuits_) {
        std::vector<int> b(c.begin() + 1, c.end());
        if (!std::includes(t.begin(), t.end(), b.begin(), b.end())) continue;
        auto rest = set_minus(t, b);
        const int s0 = wedge_sign(b, rest);
        for (std::size_t k = 1; k < c.size(); ++k) {
          std::vector<int> ck = c;
          ck.erase(ck.begin() + static_cast<long>(k));
          const int sk = (k % 2 ? 1 : -1) * s0 * wedge_sign(ck, rest);
          for (const auto& [idx, v] : express(set_union(ck, rest))) out[idx] += v * sk;
        }
        break;
      }
      for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    }
  }
  memo_[t] = out;
  return out;
}

QMatrix OSAlgebra::mult_by(const std::vector<Rational>& a, std::size_t p) const {
  QMatrix m(dim(p + 1), dim(p));
  if (p >= mult_.size() || mult_[p].empty()) return m;
  for (std::size_t i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    const auto& e = mult_[p][i];
    for (std::size_t k = 0; k < e.a.size(); ++k)
      if (e.a[k] != 0) m.a[k] += a[i] * e.a[k];
  }
  return m;
}

long aomoto_rank(const OSAlgebra& os, const std::vector<Rational>& a, std::size_t i) {
  if (a.size() != os.num_generators()) throw std::invalid_argument("aomoto_rank: vector length");
  if (i >= os.degree() && os.degree() != os.top_degree()) throw std::invalid_argument("aomoto_rank: degree not built");
  long out = static_cast<long>(os.dim(i));
  if (i < os.top_degree()) out -= static_cast<long>(matrix_rank(os.mult_by(a, i)));
  if (i > 0) out -= static_cast<long>(matrix_rank(os.mult_by(a, i - 1)));
  return out;
}

bool ResonancePoint::in_union() const { return std::find(in_degree.begin(), in_degree.end(), true) != in_degree.end(); }

ResonancePoint resonance_membership(const OSAlgebra& os, const std::vector<Rational>& a, std::size_t up_to) {
  ResonancePoint p;
  p.coordinates = a;
  for (std::size_t i = 0; i <= up_to; ++i) p.in_degree.push_back(aomoto_rank(os, a, i) > 0);
  return p;
}

namespace {

using Row = std::vector<Rational>;

Row unit_row(int r, int i) {
  Row row(r, Rational(0));
  row[i] = 1;
  return row;
}

Row sum_row(int r, const std::vector<int>& support) {
  Row row(r, Rational(0));
  for (int i : support) row[i] = 1;
  return row;
}

// Equations of {z supported on x, sum over x = 0} restricted to coordinates in `within`.
std::vector<Row> pencil_rows(int r, const std::vector<int>& x, const std::vector<int>& within) {
  std::vector<Row> eq;
  for (int i : within)
    if (!std::binary_search(x.begin(), x.end(), i)) eq.push_back(unit_row(r, i));
  eq.push_back(sum_row(r, x));
  return eq;
}

std::vector<int> all_indices(int r) {
  std::vector<int> v(r);
  for (int i = 0; i < r; ++i) v[i] = i;
  return v;
}

}  // namespace

std::vector<LinearSubspace> local_resonance_of(const Arrangement& a) {
  const int r = static_cast<int>(a.size());
  std::vector<LinearSubspace> out;
  for (const auto& f : intersection_lattice(a).flats)
    if (f.rank == 2 && f.closure.size() >= 3) out.push_back(LinearSubspace::from_rational(r, pencil_rows(r, f.closure, all_indices(r))));
  return out;
}

std::vector<ResonancePiece> local_resonance_components(const Arrangement& a, int component, int min_dim) {
  const int r = static_cast<int>(a.size());
  const auto lattice = intersection_lattice(a);
  std::vector<ResonancePiece> out;
  for (const auto& s : strata_along(a, component, min_dim)) {
    const auto outside = set_minus(all_indices(r), s.closure);
    // local pieces as equations on the closure coordinates; {0} first
    std::vector<std::vector<Row>> local;
    std::vector<Row> zero;
    for (int i : s.closure) zero.push_back(unit_row(r, i));
    local.push_back(zero);
    for (const auto& f : lattice.flats)
      if (f.rank == 2 && f.closure.size() >= 3 &&
          std::includes(s.closure.begin(), s.closure.end(), f.closure.begin(), f.closure.end()))
        local.push_back(pencil_rows(r, f.closure, s.closure));
    for (std::size_t k = 0; k < local.size(); ++k) {
      auto eq = local[k];
      if (!outside.empty()) eq.push_back(sum_row(r, outside));
      out.push_back({s.closure, LinearSubspace::from_rational(r, eq), k == 0});
    }
  }
  return out;
}

}  // namespace jumploci
