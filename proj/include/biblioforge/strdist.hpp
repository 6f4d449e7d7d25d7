#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace biblioforge {

// Grid initialization for the dynamic-programming matrix. `standard` charges
// every leading insertion (row 0 is 0..n); `free_prefix` makes row 0 all
// zeros so the horizontal string may be entered at any offset.
enum class MatrixVariant { standard, free_prefix };

// Full (m+1) x (n+1) cost grid for the vertical string x against the
// horizontal string y. Kept around as a debugging/reporting surface; the
// distance functions below use rolling rows instead.
struct DistanceMatrix {
  std::string x;
  std::string y;
  MatrixVariant variant = MatrixVariant::standard;
  std::size_t rows = 0;  // m + 1
  std::size_t cols = 0;  // n + 1
  std::vector<unsigned> cells;

  unsigned at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
  std::vector<unsigned> row(std::size_t i) const;

  // Grid layout: header row with the characters of y, then one row per
  // prefix of x, labelled with the character entering at that row.
  std::string to_csv() const;
};

// Unit-cost edit distance (insert, delete, substitute) between two UTF-8
// strings, compared at Unicode scalar granularity. No case folding.
unsigned levenshtein(std::string_view x, std::string_view y);
unsigned levenshtein(std::span<const char32_t> x, std::span<const char32_t> y);

// Banded variant: returns the exact distance when it does not exceed k,
// std::nullopt otherwise. Only cells within k of the diagonal are evaluated
// and rows bail out early once every band cell exceeds k.
std::optional<unsigned> levenshtein_bounded(std::string_view x, std::string_view y, unsigned k);
std::optional<unsigned> levenshtein_bounded(std::span<const char32_t> x,
                                            std::span<const char32_t> y, unsigned k);

// Minimum edit distance from `pattern` to any contiguous substring of
// `text`: free-prefix initialization, minimum over the final row.
unsigned substring_distance(std::string_view pattern, std::string_view text);

DistanceMatrix dp_matrix(std::string_view x, std::string_view y, MatrixVariant variant);

}  // namespace biblioforge
