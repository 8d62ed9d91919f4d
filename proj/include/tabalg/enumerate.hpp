#pragma once

#include "tabalg/tableau.hpp"

#include <vector>

namespace tabalg {

/// Partitions of `size` with at most `max_parts` parts, in reverse
/// lexicographic order ((size) first).
std::vector<Shape> partitions(int size, int max_parts);

/// Partitions of every size 0..max_size with at most `max_parts` parts.
std::vector<Shape> partitions_up_to(int max_size, int max_parts);

/// SSYT of the given shape with entries in {1..max_entry}, by backtracking
/// over cells in row-major order.
std::vector<Tableau> ssyt(const Shape& shape, int max_entry);

/// Every tableau in the bound with at most `max_cells` cells.
std::vector<Tableau> ssyt_up_to(Bound bound, int max_cells);

}  // namespace tabalg
