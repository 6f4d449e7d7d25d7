#include "biblioforge/report.hpp"

#include <algorithm>

#include "biblioforge/util.hpp"

namespace biblioforge {

EntityReport build_entity_report(const Corpus& corpus, EntityKind kind, int analysis_year,
                                 YearWindow window, const std::vector<GerdSeries>& gerd,
                                 std::size_t top, std::vector<std::string>* warnings) {
  EntityReport report;
  report.kind = kind;
  report.with_tpgd = kind == EntityKind::country && !gerd.empty();
  report.with_trend = window.end > window.start;
  report.corpus_size = corpus.documents.size();

  auto result = entity_stats(corpus, kind, analysis_year, gerd);
  if (warnings)
    warnings->insert(warnings->end(), result.warnings.begin(), result.warnings.end());

  if (top != kNoLimit && result.stats.size() > top) result.stats.resize(top);

  std::map<std::string, std::optional<double>> avgs;
  if (report.with_trend) {
    auto docs = entity_documents(corpus, kind);
    for (const auto& s : result.stats)
      avgs[s.id] = avg_growth(annual_counts(docs.at(s.id), corpus, window), window);
  }
  auto trends = classify(avgs);

  for (auto& s : result.stats) {
    EntityReportRow row;
    if (report.with_trend) row.trend = trends.at(s.id);
    row.stats = std::move(s);
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::vector<std::string> report_header(const EntityReport& report) {
  std::vector<std::string> cols{entity_kind_name(report.kind), "total_pubs", "pct_of_corpus"};
  if (report.with_trend) {
    cols.push_back("trend");
    cols.push_back("avg_growth_pct");
  }
  cols.insert(cols.end(), {"h_index", "g_index", "m_index"});
  if (report.with_tpgd) cols.push_back("tpgd");
  cols.push_back("avg_citations");
  if (report.kind == EntityKind::country) {
    cols.insert(cols.end(), {"corresponding_pubs", "corresponding_pct", "single_country_pubs",
                             "single_pct", "collaborative_pubs", "collaborative_pct"});
  }
  return cols;
}

std::vector<std::string> report_row(const EntityReport& report, const EntityReportRow& row,
                                    std::size_t corpus_size) {
  const EntityStats& s = row.stats;
  std::vector<std::string> cells{s.id, std::to_string(s.total_pubs),
                                 format_fixed(s.pct_of_corpus, 1)};
  if (report.with_trend) {
    if (row.trend) {
      cells.push_back(row.trend->glyph);
      cells.push_back(row.trend->avg_growth_pct ? format_fixed(*row.trend->avg_growth_pct, 1)
                                                : std::string());
    } else {
      cells.push_back(kTrendUndefinedGlyph);
      cells.push_back("");
    }
  }
  cells.push_back(std::to_string(s.h));
  cells.push_back(std::to_string(s.g));
  cells.push_back(format_fixed(s.m, 2));
  if (report.with_tpgd) cells.push_back(s.tpgd ? format_fixed(*s.tpgd, 0) : std::string());
  cells.push_back(format_fixed(s.avg_citations, 1));
  if (report.kind == EntityKind::country) {
    auto pct = [&](std::size_t num, std::size_t den) {
      return den > 0 ? format_fixed(100.0 * static_cast<double>(num) / static_cast<double>(den), 1)
                     : std::string("0.0");
    };
    std::size_t corresponding = s.corresponding_pubs.value_or(0);
    cells.push_back(std::to_string(corresponding));
    cells.push_back(pct(corresponding, corpus_size));
    cells.push_back(std::to_string(s.single_country_pubs.value_or(0)));
    cells.push_back(pct(s.single_country_pubs.value_or(0), corresponding));
    cells.push_back(std::to_string(s.collaborative_pubs.value_or(0)));
    cells.push_back(pct(s.collaborative_pubs.value_or(0), corresponding));
  }
  return cells;
}

}  // namespace

std::string entity_report_csv(const EntityReport& report) {
  const std::size_t corpus_size = report.corpus_size;
  std::string out;
  auto append = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cells[i]);
    }
    out += '\n';
  };
  append(report_header(report));
  for (const auto& row : report.rows) append(report_row(report, row, corpus_size));
  return out;
}

std::string entity_report_markdown(const EntityReport& report) {
  const std::size_t corpus_size = report.corpus_size;
  auto header = report_header(report);
  std::string out = "|";
  for (const auto& col : header) out += " " + col + " |";
  out += "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : report.rows) {
    out += "|";
    for (const auto& cell : report_row(report, row, corpus_size)) out += " " + cell + " |";
    out += "\n";
  }
  return out;
}

std::string keyword_table_csv(const std::vector<KeywordGroup>& groups, std::size_t min_count) {
  std::string out = "canonical_label,occurrences,mean_pub_year,mean_citations,variants\n";
  for (const auto& g : groups) {
    if (g.occurrences < min_count) continue;

    std::vector<std::pair<std::string, std::size_t>> variants(g.variants.begin(),
                                                              g.variants.end());
    std::sort(variants.begin(), variants.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    std::string joined;
    for (const auto& [label, count] : variants) {
      if (!joined.empty()) joined += '|';
      joined += label + ":" + std::to_string(count);
    }

    out += csv_escape(g.canonical_label) + "," + std::to_string(g.occurrences) + "," +
           format_fixed(g.mean_pub_year, 1) + "," + format_fixed(g.mean_citations, 1) + "," +
           csv_escape(joined) + "\n";
  }
  return out;
}

std::string word_table_csv(const LabelDocs& words, const Corpus& corpus, std::size_t min_count) {
  // Sort by occurrences descending, word ascending, like the group table.
  std::vector<std::pair<std::string, const std::set<std::string>*>> rows;
  rows.reserve(words.size());
  for (const auto& [word, docs] : words) rows.emplace_back(word, &docs);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second->size() != b.second->size()) return a.second->size() > b.second->size();
    return a.first < b.first;
  });

  std::string out = "word,occurrences,mean_pub_year,mean_citations\n";
  for (const auto& [word, docs] : rows) {
    if (docs->size() < min_count) continue;
    auto stats = keyword_stats(*docs, corpus);
    out += csv_escape(word) + "," + std::to_string(stats.occurrences) + "," +
           format_fixed(stats.mean_pub_year, 1) + "," + format_fixed(stats.mean_citations, 1) +
           "\n";
  }
  return out;
}

std::string trend_table_csv(const std::vector<std::pair<std::string, TrendClass>>& rows) {
  std::string out = "entity,avg_growth_pct,bucket,glyph\n";
  for (const auto& [entity, trend] : rows) {
    out += csv_escape(entity) + ",";
    out += trend.avg_growth_pct ? format_fixed(*trend.avg_growth_pct, 1) : std::string();
    out += ",";
    out += trend.bucket ? std::to_string(*trend.bucket) : std::string();
    out += ",";
    out += trend.glyph;
    out += "\n";
  }
  return out;
}

}  // namespace biblioforge
