#include "jumploci/presentation.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "jumploci/int_matrix.hpp"
#include "jumploci/linalg.hpp"

namespace jumploci {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word commutator(const Word& a, const Word& b) { return free_reduce(concat(concat(a, b), concat(inverse(a), inverse(b)))); }

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word parse_word(const std::string& letters, std::size_t num_generators) {
  Word out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    char c = letters[i];
    int g = 0;
    if (c >= 'a' && c <= 'z') g = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z') g = -(c - 'A' + 1);
    else if (c == ' ') continue;
    else throw InputError("", std::string("unexpected character '") + c + "' in word");
    if (static_cast<std::size_t>(std::abs(g)) > num_generators)
      throw InputError("", std::string("letter '") + c + "' beyond the generator count");
    out.push_back(g);
  }
  return out;
}

std::string word_to_string(const Word& w, std::size_t num_generators) {
  std::string out;
  if (num_generators <= 26) {
    for (int x : w) out += static_cast<char>(x > 0 ? 'a' + x - 1 : 'A' - x - 1);
    return out.empty() ? "1" : out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + std::to_string(w[i]);
  return out;
}

std::vector<std::vector<long>> GroupPresentation::component_sums() const {
  std::vector<std::vector<long>> out;
  for (const auto& w : relators) {
    std::vector<long> s(num_components, 0);
    for (int x : w) s[generator_component[std::abs(x) - 1]] += x > 0 ? 1 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

void GroupPresentation::validate() const {
  if (num_generators == 0) throw InputError("/generators", "presentation needs at least one generator");
  if (generator_component.size() != num_generators)
    throw InputError("/components", "one component per generator required");
  std::vector<bool> used(num_components, false);
  for (std::size_t i = 0; i < num_generators; ++i) {
    int c = generator_component[i];
    if (c < 0 || c >= num_components)
      throw InputError("/components/" + std::to_string(i), "component index out of range");
    used[c] = true;
  }
  for (int c = 0; c < num_components; ++c)
    if (!used[c]) throw InputError("/components", "component " + std::to_string(c + 1) + " has no generator");
  for (std::size_t k = 0; k < relators.size(); ++k)
    for (int x : relators[k])
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > num_generators)
        throw InputError("/relators/" + std::to_string(k), "generator index out of range");
  auto sums = component_sums();
  for (std::size_t k = 0; k < sums.size(); ++k)
    for (long s : sums[k])
      if (s != 0)
        throw InputError("/relators/" + std::to_string(k),
                         "relator does not abelianize to zero under the meridian identification");
}

GroupPresentation free_presentation(int num_components) {
  GroupPresentation p;
  p.num_generators = static_cast<std::size_t>(num_components);
  p.num_components = num_components;
  for (int i = 0; i < num_components; ++i) p.generator_component.push_back(i);
  return p;
}

namespace {

// Hurwitz move on positions i, i+1; preserves the product words[i+1] * words[i].
void hurwitz(std::vector<Word>& words, std::size_t i) {
  Word lo = words[i], hi = words[i + 1];
  words[i] = hi;
  words[i + 1] = free_reduce(concat(concat(hi, lo), inverse(hi)));
}

}  // namespace

GroupPresentation randell_presentation(const WiringDiagram& w) {
  if (w.num_wires < 1) throw InputError("/wires", "wiring diagram needs at least one wire");
  GroupPresentation p = free_presentation(w.num_wires);
  std::vector<int> order(w.num_wires);  // wire at each position
  std::vector<Word> words(w.num_wires);
  for (int i = 0; i < w.num_wires; ++i) {
    order[i] = i;
    words[i] = {i + 1};
  }
  std::vector<std::vector<bool>> crossed(w.num_wires, std::vector<bool>(w.num_wires, false));
  for (std::size_t c = 0; c < w.crossings.size(); ++c) {
    const std::string path = "/crossings/" + std::to_string(c);
    const auto& wires = w.crossings[c];
    if (wires.size() < 2) throw InputError(path, "a crossing needs at least two wires");
    std::vector<std::size_t> pos;
    for (int x : wires) {
      if (x < 0 || x >= w.num_wires) throw InputError(path, "unknown wire " + std::to_string(x + 1));
      pos.push_back(std::find(order.begin(), order.end(), x) - order.begin());
    }
    std::sort(pos.begin(), pos.end());
    if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) throw InputError(path, "repeated wire");
    if (pos.back() - pos.front() + 1 != pos.size()) throw InputError(path, "wires are not adjacent at this crossing");
    for (int x : wires)
      for (int y : wires)
        if (x < y) {
          if (crossed[x][y]) throw InputError(path, "wires cross twice");
          crossed[x][y] = true;
        }
    const std::size_t lo = pos.front(), hi = pos.back();
    Word prod;
    for (std::size_t k = hi + 1; k-- > lo;) prod = concat(prod, words[k]);
    prod = free_reduce(prod);
    for (std::size_t j = lo; j < hi; ++j) p.relators.push_back(commutator(words[j], prod));
    // half twist of the block
    for (std::size_t s = hi; s-- > lo;)
      for (std::size_t i = lo; i <= s; ++i) hurwitz(words, i);
    std::reverse(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi) + 1);
  }
  return p;
}

namespace {

Rational dot(const Form& a, const Form& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Form cross(const Form& a, const Form& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::size_t rank_of(const std::vector<Form>& fs) {
  if (fs.empty()) return 0;
  QMatrix m(fs.size(), fs[0].size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs[0].size(); ++j) m(i, j) = fs[i][j];
  return matrix_rank(m);
}

// Restrict every form to a 3-dimensional subspace chosen so that all ranks of
// at most three forms are preserved; returns the restricted forms.
std::vector<Form> plane_section(const Arrangement& a) {
  const int w = a.ambient_dim() + 1;
  const auto& fs = a.forms();
  const std::size_t r = fs.size();
  std::vector<std::size_t> ranks2(r * r), ranks3;
  std::mt19937_64 rng(0x5EC7);
  for (int attempt = 0; attempt < 200; ++attempt) {
    long span = 2 + attempt / 10;
    std::vector<Form> basis(3, Form(w));
    for (auto& v : basis)
      for (auto& x : v) x = static_cast<long>(rng() % (2 * span + 1)) - span;
    std::vector<Form> out;
    for (const auto& f : fs) out.push_back({dot(f, basis[0]), dot(f, basis[1]), dot(f, basis[2])});
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      if (rank_of({out[i]}) != 1) ok = false;
      for (std::size_t j = i + 1; j < r && ok; ++j) {
        if (rank_of({out[i], out[j]}) != 2) ok = false;
        for (std::size_t k = j + 1; k < r && ok; ++k) {
          std::size_t orig = std::min<std::size_t>(3, rank_of({fs[i], fs[j], fs[k]}));
          if (rank_of({out[i], out[j], out[k]}) != orig) ok = false;
        }
      }
    }
    if (ok) return out;
  }
  throw std::logic_error("no generic plane section found");
}

struct Line {
  Rational a, b, c;  // a x + b y + c = 0
};

}  // namespace

ChartPresentation arrangement_presentation(const Arrangement& a, std::optional<int> infinity) {
  const int r = static_cast<int>(a.size());
  ChartPresentation out;
  std::vector<int> affine;  // hyperplanes that become affine lines
  for (int i = 0; i < r; ++i)
    if (!infinity || i != *infinity) affine.push_back(i);
  out.variable_hyperplane = affine;
  if (affine.empty()) throw InputError("/infinity", "no hyperplanes left besides the one at infinity");
  if (infinity && !is_transversal(a, *infinity))
    throw InputError("/infinity", "hyperplane at infinity is not transversal to the others");

  if (a.ambient_dim() == 1) {
    out.presentation = free_presentation(static_cast<int>(affine.size()));
    return out;
  }
  auto section = a.ambient_dim() == 2 ? a.forms() : plane_section(a);

  // line at infinity
  Form h;
  if (infinity) {
    h = section[*infinity];
  } else {
    std::vector<Form> points;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) points.push_back(cross(section[i], section[j]));
    bool found = false;
    for (long bound = 1; bound < 20 && !found; ++bound)
      for (long x = -bound; x <= bound && !found; ++x)
        for (long y = -bound; y <= bound && !found; ++y)
          for (long z = -bound; z <= bound && !found; ++z) {
            if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != bound) continue;
            Form cand{Rational(x), Rational(y), Rational(z)};
            bool ok = true;
            for (const auto& p : points)
              if (dot(cand, p) == 0) ok = false;
            for (const auto& f : section)
              if (rank_of({f, cand}) < 2) ok = false;
            if (ok) {
              h = cand;
              found = true;
            }
          }
    if (!found) throw std::logic_error("no generic line at infinity found");
  }
  out.infinity = h;

  // affine chart: points q2 + x q0 + y q1 with h(q0) = h(q1) = 0, h(q2) = 1
  QMatrix hm(1, 3);
  for (int j = 0; j < 3; ++j) hm(0, j) = h[j];
  auto ker = nullspace(hm);
  Form q2(3);
  for (int j = 0; j < 3; ++j)
    if (h[j] != 0) {
      q2[j] = 1 / h[j];
      break;
    }
  std::vector<Line> lines;
  for (int i : affine) lines.push_back({dot(section[i], ker[0]), dot(section[i], ker[1]), dot(section[i], q2)});

  const std::size_t m = lines.size();
  for (long lam_i = 0; lam_i < 400; ++lam_i) {
    // lambda runs 0, 1, -1, 2, -2, ...
    Rational lam = lam_i % 2 ? Rational((lam_i + 1) / 2) : Rational(-(lam_i / 2));
    bool ok = true;
    std::vector<std::pair<Rational, Rational>> slope(m);  // Y = s X + k
    for (std::size_t i = 0; i < m && ok; ++i) {
      Rational bb = lines[i].b - lines[i].a * lam;
      if (bb == 0) {
        ok = false;
        break;
      }
      slope[i] = {-lines[i].a / bb, -lines[i].c / bb};
    }
    if (!ok) continue;
    std::map<std::pair<Rational, Rational>, std::vector<int>> points;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (slope[i].first == slope[j].first) continue;  // parallel in this chart
        Rational x = (slope[j].second - slope[i].second) / (slope[i].first - slope[j].first);
        Rational y = slope[i].first * x + slope[i].second;
        auto& v = points[{x, y}];
        for (int k : {static_cast<int>(i), static_cast<int>(j)})
          if (std::find(v.begin(), v.end(), k) == v.end()) v.push_back(k);
      }
    std::map<Rational, int> xs;
    for (const auto& [pt, v] : points)
      if (++xs[pt.first] > 1) ok = false;
    if (!ok) continue;

    // starting order at X -> -infinity, bottom to top
    std::vector<int> start(m);
    for (std::size_t i = 0; i < m; ++i) start[i] = static_cast<int>(i);
    std::sort(start.begin(), start.end(), [&](int i, int j) {
      if (slope[i].first != slope[j].first) return slope[i].first > slope[j].first;
      return slope[i].second < slope[j].second;
    });
    std::vector<int> wire_of(m);  // line index -> wire number
    for (std::size_t k = 0; k < m; ++k) wire_of[start[k]] = static_cast<int>(k);
    WiringDiagram d;
    d.num_wires = static_cast<int>(m);
    for (const auto& [pt, v] : points) {
      std::vector<int> ws;
      for (int l : v) ws.push_back(wire_of[l]);
      std::sort(ws.begin(), ws.end());
      d.crossings.push_back(ws);
    }
    // points is keyed by (X, Y) so crossings are already left to right
    auto pres = randell_presentation(d);
    // torus variables follow the hyperplane order, not the wire order
    for (std::size_t l = 0; l < m; ++l) pres.generator_component[wire_of[l]] = static_cast<int>(l);
    out.presentation = pres;
    out.diagram = d;
    return out;
  }
  throw std::logic_error("no admissible projection direction found");
}

}  // namespace jumploci
