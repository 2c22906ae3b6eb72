#pragma once

#include <string>
#include <vector>

#include "fdeg/classical.hpp"
#include "fdeg/perm.hpp"

namespace fdeg {

/// An isomorphism from a simple factor S1 to the standard matrix copy, given
/// on generators: generators[k] in S1 maps to the projective image of images[k].
struct RecognitionHint {
  std::size_t factor_index = 0;  // advisory; the pipeline matches hints by generated subgroup
  FamilyParams family;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Matrix> images;
};

/// JSON form:
///   {"factor_index": 0, "family": "SL", "dimension": 3, "q": 4,
///    "field_convention": "lex-least-irreducible", "degree": 21,
///    "generators": ["(1 2 3)...", ...],
///    "generator_images": [[[c0, c1, ...], ... d*d entries row-major], ...]}
/// Each entry is the coefficient vector of a field element, constant term first.
std::string hint_to_json(const RecognitionHint& h);
RecognitionHint hint_from_json(const std::string& text);
RecognitionHint read_hint_file(const std::string& path);

}  // namespace fdeg
