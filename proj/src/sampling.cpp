#include "jumploci/sampling.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace jumploci {

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Angles random_torsion_point(std::mt19937_64& rng, int r, long max_order) {
  // one common order per point keeps evaluations inside Q(zeta_n), n <= max_order
  const long n = draw(rng, 2, std::max(2L, max_order));
  Angles p(r);
  for (auto& x : p) {
    x = Rational(draw(rng, 0, n - 1), n);
    x.canonicalize();
  }
  return p;
}

Angles point_on(const TranslatedSubtorus& t, std::mt19937_64& rng, long max_order) {
  return t.point_at(random_torsion_point(rng, t.dimension(), max_order));
}

namespace {

bool is_identity(const Angles& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::vector<Angles> torsion_sample(int r, const std::vector<TranslatedSubtorus>& comps, const SamplingOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<Angles> out;
  std::set<Angles> seen;
  auto add = [&](Angles a) {
    for (auto& x : a) x = frac_mod1(x);
    if (!is_identity(a) && seen.insert(a).second) out.push_back(std::move(a));
  };
  for (long n : {2L, 3L, 4L, 6L, 12L}) {
    if (n > opt.max_order) break;
    std::size_t size = 1;
    bool small = true;
    for (int i = 0; i < r && small; ++i) {
      size *= static_cast<std::size_t>(n);
      if (size > opt.grid_cap) small = false;
    }
    if (!small) continue;
    std::vector<long> k(r, 0);
    while (true) {
      Angles a(r);
      for (int i = 0; i < r; ++i) a[i] = Rational(k[i], n);
      for (auto& x : a) x.canonicalize();
      add(a);
      int pos = 0;
      while (pos < r && ++k[pos] == n) k[pos++] = 0;
      if (pos == r) break;
    }
  }
  for (std::size_t i = 0; i < opt.random_points; ++i) add(random_torsion_point(rng, r, opt.max_order));
  for (const auto& c : comps)
    for (int i = 0; i < 5; ++i) add(point_on(c, rng, opt.max_order));
  return out;
}

std::vector<Angles> oracle_characters(int r, const std::vector<TranslatedSubtorus>& comps, std::size_t count,
                                      const SamplingOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<Angles> out;
  std::set<Angles> seen;
  std::size_t attempts = 0, turn = 0;
  while (out.size() < count && attempts++ < 50 * count) {
    Angles a;
    if (!comps.empty() && turn % 2 == 0)
      a = point_on(comps[(turn / 2) % comps.size()], rng, opt.max_order);
    else
      a = random_torsion_point(rng, r, opt.max_order);
    ++turn;
    for (auto& x : a) x = frac_mod1(x);
    if (!is_identity(a) && seen.insert(a).second) out.push_back(std::move(a));
  }
  return out;
}

std::vector<std::vector<Rational>> sample_subspace(const LinearSubspace& l, std::size_t count, std::mt19937_64& rng) {
  auto basis = l.basis();
  std::vector<std::vector<Rational>> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Rational> z(l.num_vars(), Rational(0));
    for (const auto& b : basis) {
      long c = draw(rng, -9, 9);
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += b[i] * c;
    }
    out.push_back(std::move(z));
  }
  return out;
}

std::string angles_to_string(const Angles& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + to_string(a[i]);
  return out + ")";
}

Angles parse_angles(const std::string& text) {
  const auto open = text.find('('), close = text.find(')', open);
  if (open == std::string::npos || close == std::string::npos) throw InputError("", "no point in '" + text + "'");
  Angles out;
  std::stringstream ss(text.substr(open + 1, close - open - 1));
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
  return out;
}

}  // namespace jumploci
