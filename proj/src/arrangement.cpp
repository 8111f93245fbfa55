#include "jumploci/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "jumploci/linalg.hpp"

namespace jumploci {

namespace {

std::size_t rank_of_forms(const std::vector<const Form*>& fs, std::size_t width) {
  QMatrix m(fs.size(), width);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = (*fs[i])[j];
  return matrix_rank(m);
}

bool proportional(const Form& a, const Form& b) {
  return rank_of_forms({&a, &b}, a.size()) < 2;
}

}  // namespace

Arrangement::Arrangement(int ambient_dim, std::vector<Form> forms, std::vector<int> labels)
    : n_(ambient_dim), forms_(std::move(forms)), labels_(std::move(labels)) {
  if (n_ < 1) throw InputError("/ambient_dim", "ambient dimension must be at least 1");
  if (forms_.empty()) throw InputError("/hyperplanes", "arrangement needs at least one hyperplane");
  if (labels_.empty())
    for (std::size_t i = 0; i < forms_.size(); ++i) labels_.push_back(static_cast<int>(i) + 1);
  if (labels_.size() != forms_.size()) throw InputError("/labels", "one label per hyperplane required");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    const std::string path = "/hyperplanes/" + std::to_string(i);
    if (forms_[i].size() != static_cast<std::size_t>(n_ + 1))
      throw InputError(path, "expected " + std::to_string(n_ + 1) + " coefficients");
    if (std::all_of(forms_[i].begin(), forms_[i].end(), [](const Rational& x) { return x == 0; }))
      throw InputError(path, "zero linear form");
    for (std::size_t j = 0; j < i; ++j)
      if (proportional(forms_[i], forms_[j]))
        throw InputError(path, "non-reduced divisor: proportional to hyperplane " + std::to_string(j + 1));
  }
}

std::size_t Arrangement::rank_of(const std::vector<int>& members) const {
  std::vector<const Form*> fs;
  for (int i : members) fs.push_back(&forms_.at(i));
  return rank_of_forms(fs, n_ + 1);
}

std::vector<int> Arrangement::closure(const std::vector<int>& members) const {
  const std::size_t r = rank_of(members);
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(forms_.size()); ++j) {
    if (std::find(members.begin(), members.end(), j) != members.end()) {
      out.push_back(j);
      continue;
    }
    auto ext = members;
    ext.push_back(j);
    if (rank_of(ext) == r) out.push_back(j);
  }
  return out;
}

Arrangement Arrangement::subarrangement(const std::vector<int>& members) const {
  std::vector<Form> fs;
  std::vector<int> labels;
  for (int i : members) {
    fs.push_back(forms_.at(i));
    labels.push_back(labels_.at(i));
  }
  return Arrangement(n_, std::move(fs), std::move(labels));
}

Arrangement Arrangement::deletion(int i) const {
  std::vector<int> keep;
  for (int j = 0; j < static_cast<int>(forms_.size()); ++j)
    if (j != i) keep.push_back(j);
  return subarrangement(keep);
}

Arrangement Arrangement::restriction(int i) const {
  if (n_ < 2) throw std::invalid_argument("restriction needs ambient dimension at least 2");
  QMatrix h(1, n_ + 1);
  for (int j = 0; j <= n_; ++j) h(0, j) = forms_[i][j];
  auto basis = nullspace(h);
  std::vector<Form> fs;
  std::vector<int> labels;
  for (int j = 0; j < static_cast<int>(forms_.size()); ++j) {
    if (j == i) continue;
    Form f(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (int c = 0; c <= n_; ++c) f[k] += forms_[j][c] * basis[k][c];
    bool dup = std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == 0; });
    for (const auto& g : fs)
      if (!dup && proportional(f, g)) dup = true;
    if (!dup) {
      fs.push_back(std::move(f));
      labels.push_back(labels_[j]);
    }
  }
  if (fs.empty()) throw std::invalid_argument("restriction is empty");
  return Arrangement(n_ - 1, std::move(fs), std::move(labels));
}

std::size_t LatticeData::index_of(const std::vector<int>& closure) const {
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (flats[i].closure == closure) return i;
  throw std::out_of_range("flat not in lattice");
}

LatticeData intersection_lattice(const Arrangement& a) {
  const int r = static_cast<int>(a.size());
  const int n = a.ambient_dim();
  LatticeData out;
  std::vector<std::set<std::vector<int>>> by_rank(n + 2);
  by_rank[0].insert(std::vector<int>{});
  for (int k = 0; k <= n; ++k) {
    for (const auto& x : by_rank[k])
      for (int i = 0; i < r; ++i) {
        if (std::binary_search(x.begin(), x.end(), i)) continue;
        auto ext = x;
        ext.insert(std::upper_bound(ext.begin(), ext.end(), i), i);
        by_rank[k + 1].insert(a.closure(ext));
      }
  }
  for (int k = 0; k <= n + 1; ++k)
    for (const auto& x : by_rank[k]) {
      Flat f;
      f.members = x;
      f.closure = x;
      f.rank = static_cast<std::size_t>(k);
      f.dim = n - k;
      out.flats.push_back(std::move(f));
      out.rank = std::max(out.rank, static_cast<std::size_t>(k));
    }
  // Mobius by recursion over the proper lower flats
  out.mobius.resize(out.flats.size());
  for (std::size_t i = 0; i < out.flats.size(); ++i) {
    if (out.flats[i].rank == 0) {
      out.mobius[i] = 1;
      continue;
    }
    Integer s = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& y = out.flats[j].closure;
      const auto& x = out.flats[i].closure;
      if (out.flats[j].rank < out.flats[i].rank && std::includes(x.begin(), x.end(), y.begin(), y.end()))
        s += out.mobius[j];
    }
    out.mobius[i] = -s;
  }
  out.poincare.assign(out.rank + 1, Integer(0));
  for (std::size_t i = 0; i < out.flats.size(); ++i) {
    Integer v = out.mobius[i];
    if (out.flats[i].rank % 2) v = -v;
    out.poincare[out.flats[i].rank] += v;
  }
  return out;
}

Integer euler_projective_complement(const LatticeData& l, const Arrangement& a) {
  // pi(cA, t) = (1 + t) pi(M*, t); evaluate the quotient at t = -1
  std::vector<Integer> q(l.poincare.size() > 1 ? l.poincare.size() - 1 : 1, Integer(0));
  Integer carry = 0;
  for (std::size_t k = 0; k + 1 < l.poincare.size(); ++k) {
    q[k] = l.poincare[k] - carry;
    carry = q[k];
  }
  if (l.poincare.size() > 1 && l.poincare.back() != carry) throw std::logic_error("Poincare polynomial not divisible by 1+t");
  Integer chi = 0;
  for (std::size_t k = 0; k < q.size(); ++k) chi += (k % 2 ? -q[k] : q[k]);
  // cross-check: sum over flats of mu(X) * (n - rank X + 1), proper flats only
  Integer alt = 0;
  for (std::size_t i = 0; i < l.flats.size(); ++i) {
    long cells = a.ambient_dim() - static_cast<long>(l.flats[i].rank) + 1;
    if (cells > 0) alt += l.mobius[i] * cells;
  }
  if (alt != chi) throw std::logic_error("Euler characteristic cross-check failed");
  return chi;
}

Integer euler_projective_complement(const Arrangement& a) {
  return euler_projective_complement(intersection_lattice(a), a);
}

Integer milnor_fiber_euler(const Arrangement& a) {
  return Integer(static_cast<long>(a.size())) * euler_projective_complement(a);
}

bool is_essential(const Arrangement& a) {
  std::vector<int> all(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) all[i] = static_cast<int>(i);
  return a.rank_of(all) == static_cast<std::size_t>(a.ambient_dim() + 1);
}

Form find_witness(const Arrangement& a, const std::vector<int>& closure, int skip) {
  const int w = a.ambient_dim() + 1;
  QMatrix m(closure.size(), w);
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (int j = 0; j < w; ++j) m(i, j) = a.forms()[closure[i]][j];
  auto basis = nullspace(m);
  if (basis.empty()) throw std::logic_error("flat is the empty projective set");
  const std::size_t d = basis.size();
  // enumerate small integer coefficient vectors by growing max-norm
  int found = 0;
  for (long bound = 1; bound < 64; ++bound) {
    std::vector<long> c(d, -bound);
    while (true) {
      long mx = 0;
      for (long x : c) mx = std::max(mx, std::abs(x));
      if (mx == bound) {
        Form p(w);
        for (std::size_t k = 0; k < d; ++k)
          for (int j = 0; j < w; ++j) p[j] += basis[k][j] * c[k];
        bool ok = std::any_of(p.begin(), p.end(), [](const Rational& x) { return x != 0; });
        for (std::size_t h = 0; h < a.size() && ok; ++h) {
          if (std::binary_search(closure.begin(), closure.end(), static_cast<int>(h))) continue;
          Rational v = 0;
          for (int j = 0; j < w; ++j) v += a.forms()[h][j] * p[j];
          if (v == 0) ok = false;
        }
        if (ok && found++ == skip) {
          // scale to a primitive integer point for stable output
          Integer l = 1;
          for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
          Integer g = 0;
          for (auto& x : p) {
            x *= l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
          }
          for (auto& x : p) x /= Rational(g);
          return p;
        }
      }
      std::size_t pos = 0;
      while (pos < d && ++c[pos] > bound) c[pos++] = -bound;
      if (pos == d) break;
    }
  }
  throw std::logic_error("no witness point found for flat");
}

std::vector<Flat> strata_along(const Arrangement& a, int component, int min_dim) {
  if (component < 0 || component >= static_cast<int>(a.size())) throw std::out_of_range("strata_along: component");
  auto lat = intersection_lattice(a);
  std::vector<Flat> out;
  for (const auto& f : lat.flats) {
    if (f.dim < 0 || f.dim < min_dim) continue;
    if (!std::binary_search(f.closure.begin(), f.closure.end(), component)) continue;
    Flat s = f;
    s.witness = find_witness(a, f.closure);
    out.push_back(std::move(s));
  }
  return out;
}

Arrangement local_subarrangement(const Arrangement& a, const Flat& x) { return a.subarrangement(x.closure); }

bool is_transversal(const Arrangement& a, int h) {
  auto v = a.deletion(h);
  auto lat = intersection_lattice(v);
  for (const auto& f : lat.flats) {
    if (f.dim < 0) continue;
    std::vector<const Form*> fs;
    for (int i : f.closure) fs.push_back(&v.forms()[i]);
    fs.push_back(&a.forms()[h]);
    if (rank_of_forms(fs, a.ambient_dim() + 1) != f.rank + 1) return false;
  }
  return true;
}

std::string form_to_string(const Form& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? ", " : "") + to_string(f[i]);
  return out + "]";
}

}  // namespace jumploci
