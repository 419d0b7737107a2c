#pragma once

#include <compare>

namespace tabtype {

// Matrix coordinates, 1-based: row grows downward, col grows rightward.
// Ordering is row-major, which fixes every "deterministic order" in the library.
struct Box {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
};

}  // namespace tabtype
