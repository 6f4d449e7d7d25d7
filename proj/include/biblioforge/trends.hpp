#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "biblioforge/corpus.hpp"

namespace biblioforge {

struct YearWindow {
  int start = 2015;
  int end = 2019;
};

// Publications per year for the given documents, zero-filled across the
// window. Years outside the window are not reported.
std::map<int, std::size_t> annual_counts(const std::set<std::string>& docset,
                                         const Corpus& corpus, YearWindow window);

// Mean of the year-over-year percentage changes across the window. Pairs
// whose base year has zero publications are skipped; nullopt when no usable
// pair remains.
std::optional<double> avg_growth(const std::map<int, std::size_t>& counts, YearWindow window);

struct TrendClass {
  std::optional<double> avg_growth_pct;
  std::optional<int> bucket;  // 0..4
  std::string glyph;          // one of the arrow glyphs, or an em dash

  bool operator==(const TrendClass&) const = default;
};

extern const char* const kTrendGlyphs[5];  // "→" .. "↑↑↑"
extern const char* const kTrendUndefinedGlyph;

// Quantizes each defined average into five equal ranges of the set maximum:
// [0, M/5], then four right-closed intervals up to M. Negative averages
// clamp to bucket 0; undefined averages pass through with the dash glyph.
std::map<std::string, TrendClass> classify(
    const std::map<std::string, std::optional<double>>& avgs);

}  // namespace biblioforge
