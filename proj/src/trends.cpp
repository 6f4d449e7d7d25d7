#include "biblioforge/trends.hpp"

#include <algorithm>
#include <unordered_set>

namespace biblioforge {

const char* const kTrendGlyphs[5] = {"→", "↗", "↑", "↑↑",
                                     "↑↑↑"};
const char* const kTrendUndefinedGlyph = "—";

std::map<int, std::size_t> annual_counts(const std::set<std::string>& docset,
                                         const Corpus& corpus, YearWindow window) {
  std::map<int, std::size_t> counts;
  for (int y = window.start; y <= window.end; ++y) counts[y] = 0;
  std::unordered_set<std::string> wanted(docset.begin(), docset.end());
  for (const auto& doc : corpus.documents) {
    if (doc.pub_year < window.start || doc.pub_year > window.end) continue;
    if (wanted.count(doc.uid)) ++counts[doc.pub_year];
  }
  return counts;
}

std::optional<double> avg_growth(const std::map<int, std::size_t>& counts, YearWindow window) {
  auto count_at = [&](int year) -> std::size_t {
    auto it = counts.find(year);
    return it == counts.end() ? 0 : it->second;
  };
  double sum = 0.0;
  int pairs = 0;
  for (int year = window.start + 1; year <= window.end; ++year) {
    std::size_t base = count_at(year - 1);
    if (base == 0) continue;  // no base to grow from
    std::size_t current = count_at(year);
    sum += 100.0 * (static_cast<double>(current) - static_cast<double>(base)) /
           static_cast<double>(base);
    ++pairs;
  }
  if (pairs == 0) return std::nullopt;
  return sum / pairs;
}

std::map<std::string, TrendClass> classify(
    const std::map<std::string, std::optional<double>>& avgs) {
  double max_avg = 0.0;
  bool any_defined = false;
  for (const auto& [entity, avg] : avgs) {
    if (!avg) continue;
    any_defined = true;
    max_avg = std::max(max_avg, *avg);
  }

  std::map<std::string, TrendClass> out;
  for (const auto& [entity, avg] : avgs) {
    TrendClass t;
    if (!avg) {
      t.glyph = kTrendUndefinedGlyph;
    } else {
      t.avg_growth_pct = *avg;
      int bucket = 0;
      if (any_defined && max_avg > 0 && *avg > 0) {
        // Right-closed intervals: (k*M/5, (k+1)*M/5] for k >= 1.
        bucket = 4;
        for (int k = 0; k < 4; ++k) {
          if (*avg <= (k + 1) * max_avg / 5.0) {
            bucket = k;
            break;
          }
        }
      }
      t.bucket = bucket;
      t.glyph = kTrendGlyphs[bucket];
    }
    out[entity] = std::move(t);
  }
  return out;
}

}  // namespace biblioforge
