#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jumploci/arrangement.hpp"

namespace jumploci {

// Signed 1-based generator indices; -k is the inverse of generator k.
using Word = std::vector<int>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
Word free_reduce(const Word& w);
// Letters a..z name generators 1..26; uppercase is the inverse.
Word parse_word(const std::string& letters, std::size_t num_generators);
std::string word_to_string(const Word& w, std::size_t num_generators);

struct GroupPresentation {
  std::size_t num_generators = 0;
  int num_components = 0;
  std::vector<int> generator_component;  // 0-based torus variable of each generator
  std::vector<Word> relators;

  // Index ranges and vanishing of relator exponent sums per component.
  void validate() const;
  // Exponent sums of each relator per component, i.e. the abelianized relators.
  std::vector<std::vector<long>> component_sums() const;
};

GroupPresentation free_presentation(int num_components);

// Wires are numbered 0..w-1 by their starting position, bottom to top.
struct WiringDiagram {
  int num_wires = 0;
  std::vector<std::vector<int>> crossings;  // left to right
};

GroupPresentation randell_presentation(const WiringDiagram& w);

struct ChartPresentation {
  GroupPresentation presentation;
  // hyperplane position (0-based, in the input arrangement) of each torus variable
  std::vector<int> variable_hyperplane;
  std::optional<WiringDiagram> diagram;
  Form infinity;  // the line at infinity inside the plane section
};

// Presentation of pi_1 of the affine complement, cut by a generic plane when
// n > 2. With `infinity` set, that hyperplane is the line at infinity and the
// torus has r-1 variables; otherwise a generic line at infinity is chosen.
ChartPresentation arrangement_presentation(const Arrangement& a, std::optional<int> infinity = std::nullopt);

}  // namespace jumploci
