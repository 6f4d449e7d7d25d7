#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "biblioforge/keywords.hpp"
#include "biblioforge/metrics.hpp"
#include "biblioforge/trends.hpp"
#include "biblioforge/util.hpp"

namespace biblioforge {

struct EntityReportRow {
  EntityStats stats;
  std::optional<TrendClass> trend;
};

struct EntityReport {
  EntityKind kind = EntityKind::country;
  bool with_tpgd = false;    // country reports with a GERD table
  bool with_trend = false;   // window spans at least two years
  std::size_t corpus_size = 0;
  std::vector<EntityReportRow> rows;
};

// Assembles stats, collaboration shares (country kind), TPGD and the trend
// classification for the reported entity set. `top` truncates to the most
// productive entities before trend classification, mirroring the per-table
// maximum. Warnings (e.g. GERD countries absent from the corpus) are
// appended to `warnings` when given.
EntityReport build_entity_report(const Corpus& corpus, EntityKind kind, int analysis_year,
                                 YearWindow window, const std::vector<GerdSeries>& gerd = {},
                                 std::size_t top = kNoLimit,
                                 std::vector<std::string>* warnings = nullptr);

// Display rounding: percentages and averages to one decimal, m-index to
// two, TPGD to the nearest integer. Values stay unrounded until here.
std::string entity_report_csv(const EntityReport& report);
std::string entity_report_markdown(const EntityReport& report);

// canonical_label,occurrences,mean_pub_year,mean_citations,variants with
// variants as pipe-separated "variant:count" (count desc, label asc).
// min_count drops rows from the output only, never from the computation.
std::string keyword_table_csv(const std::vector<KeywordGroup>& groups, std::size_t min_count = 0);

// word,occurrences,mean_pub_year,mean_citations over split_words output.
std::string word_table_csv(const LabelDocs& words, const Corpus& corpus,
                           std::size_t min_count = 0);

// entity,avg_growth_pct,bucket,glyph rows for the trends subcommand.
std::string trend_table_csv(const std::vector<std::pair<std::string, TrendClass>>& rows);

}  // namespace biblioforge
