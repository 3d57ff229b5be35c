#pragma once

#include "gtlab/fox_group.hpp"

#include <string_view>

namespace gtlab {

// word := "1" | term ("*" term)*
// term := "x" int ("^" int)? | "F" ("^" int)?
// Generators are 1-based; with max_generator > 0 they are also bounded
// above. F syllables accumulate into the winding.
FGWord parse_framed_word(std::string_view text, int max_generator = 0);

// As above, but F is not accepted.
GWord parse_word(std::string_view text, int max_generator = 0);

}  // namespace gtlab
