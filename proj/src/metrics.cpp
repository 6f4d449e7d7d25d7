#include "biblioforge/metrics.hpp"

#include <algorithm>
#include <istream>
#include <stdexcept>
#include <unordered_map>

#include "biblioforge/util.hpp"

namespace biblioforge {

std::string entity_kind_name(EntityKind kind) {
  switch (kind) {
    case EntityKind::author: return "author";
    case EntityKind::country: return "country";
    case EntityKind::organization: return "organization";
    case EntityKind::source: return "source";
  }
  return "unknown";
}

EntityKind parse_entity_kind(std::string_view name) {
  std::string n = to_lower_ascii(name);
  if (n == "author") return EntityKind::author;
  if (n == "country") return EntityKind::country;
  if (n == "organization" || n == "org") return EntityKind::organization;
  if (n == "source") return EntityKind::source;
  throw std::invalid_argument("unknown entity kind: " + std::string(name));
}

int h_index(std::span<const int> citations) {
  std::vector<int> sorted;
  sorted.reserve(citations.size());
  for (int c : citations) {
    if (c < 0) throw std::invalid_argument("h_index: negative citation count");
    sorted.push_back(c);
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  int h = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= static_cast<int>(i) + 1)
      h = static_cast<int>(i) + 1;
    else
      break;
  }
  return h;
}

int g_index(std::span<const int> citations) {
  std::vector<int> sorted;
  sorted.reserve(citations.size());
  for (int c : citations) {
    if (c < 0) throw std::invalid_argument("g_index: negative citation count");
    sorted.push_back(c);
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  long long prefix = 0;
  int g = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    prefix += sorted[i];
    long long rank = static_cast<long long>(i) + 1;
    if (prefix >= rank * rank) g = static_cast<int>(rank);
  }
  return g;
}

double m_index(int h, int first_pub_year, int analysis_year) {
  int span = analysis_year - first_pub_year + 1;
  if (span <= 0) throw std::invalid_argument("m_index: analysis year precedes first publication");
  return static_cast<double>(h) / static_cast<double>(span);
}

std::map<std::string, std::set<std::string>> entity_documents(const Corpus& corpus,
                                                              EntityKind kind) {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& doc : corpus.documents) {
    switch (kind) {
      case EntityKind::author:
        for (const auto& a : doc.authors)
          if (!a.key.empty()) out[a.key].insert(doc.uid);
        break;
      case EntityKind::country:
        for (const auto& aff : doc.affiliations)
          if (!aff.country.empty() && aff.country != "UNKNOWN") out[aff.country].insert(doc.uid);
        break;
      case EntityKind::organization:
        for (const auto& aff : doc.affiliations)
          if (!aff.organization.empty()) out[aff.organization].insert(doc.uid);
        break;
      case EntityKind::source:
        if (!doc.source_title.empty()) out[doc.source_title].insert(doc.uid);
        break;
    }
  }
  return out;
}

CollaborationShares collaboration_shares(const Corpus& corpus, const std::string& country) {
  CollaborationShares shares;
  for (const auto& doc : corpus.documents) {
    if (!doc.reprint) {
      ++shares.missing_reprint;
      continue;
    }
    if (doc.reprint->affiliation.country != country) continue;
    ++shares.corresponding_pubs;
    std::set<std::string> countries;
    countries.insert(doc.reprint->affiliation.country);
    for (const auto& aff : doc.affiliations)
      if (!aff.country.empty() && aff.country != "UNKNOWN") countries.insert(aff.country);
    if (countries.size() == 1)
      ++shares.single_country;
    else
      ++shares.collaborative;
  }
  return shares;
}

EntityStatsResult entity_stats(const Corpus& corpus, EntityKind kind, int analysis_year,
                               const std::vector<GerdSeries>& gerd) {
  EntityStatsResult result;

  std::unordered_map<std::string, const Document*> by_uid;
  by_uid.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) by_uid.emplace(doc.uid, &doc);

  std::map<std::string, double> gerd_means;
  for (const auto& series : gerd) {
    if (series.yearly.empty()) continue;
    double sum = 0.0;
    for (const auto& [year, value] : series.yearly) sum += value;
    gerd_means[series.country] = sum / static_cast<double>(series.yearly.size());
  }

  auto docs_by_entity = entity_documents(corpus, kind);
  const double corpus_size = static_cast<double>(corpus.documents.size());

  for (const auto& [id, uids] : docs_by_entity) {
    EntityStats s;
    s.kind = kind;
    s.id = id;
    s.total_pubs = uids.size();
    s.pct_of_corpus = corpus_size > 0 ? 100.0 * static_cast<double>(uids.size()) / corpus_size : 0.0;

    std::vector<int> citations;
    citations.reserve(uids.size());
    int first_year = 0;
    for (const auto& uid : uids) {
      const Document* doc = by_uid.at(uid);
      citations.push_back(doc->times_cited);
      s.citations_total += doc->times_cited;
      if (first_year == 0 || doc->pub_year < first_year) first_year = doc->pub_year;
    }
    s.first_pub_year = first_year;
    s.avg_citations = s.total_pubs > 0
                          ? static_cast<double>(s.citations_total) / static_cast<double>(s.total_pubs)
                          : 0.0;
    s.h = h_index(citations);
    s.g = g_index(citations);
    s.m = m_index(s.h, first_year, analysis_year);

    if (kind == EntityKind::country) {
      auto shares = collaboration_shares(corpus, id);
      s.corresponding_pubs = shares.corresponding_pubs;
      s.single_country_pubs = shares.single_country;
      s.collaborative_pubs = shares.collaborative;
      if (auto it = gerd_means.find(id); it != gerd_means.end() && it->second > 0)
        s.tpgd = static_cast<double>(s.total_pubs) / it->second;
    }
    result.stats.push_back(std::move(s));
  }

  if (kind == EntityKind::country) {
    for (const auto& [country, mean] : gerd_means) {
      (void)mean;
      if (!docs_by_entity.count(country))
        result.warnings.push_back("GERD series for '" + country + "' matches no corpus country");
    }
  }

  std::sort(result.stats.begin(), result.stats.end(), [](const EntityStats& a, const EntityStats& b) {
    if (a.total_pubs != b.total_pubs) return a.total_pubs > b.total_pubs;
    return a.id < b.id;
  });
  return result;
}

std::vector<GerdSeries> read_gerd_csv(std::istream& in) {
  std::map<std::string, GerdSeries> by_country;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto parts = split(t, ',');
    if (parts.size() != 3)
      throw ParseError("GERD file line " + std::to_string(line_no) +
                       ": expected country,year,gerd_ppp_billion");
    std::string country = trim(parts[0]);
    if (line_no == 1 && to_lower_ascii(country) == "country") continue;  // header
    try {
      size_t pos = 0;
      int year = std::stoi(trim(parts[1]), &pos);
      double value = std::stod(trim(parts[2]));
      if (country.empty() || value <= 0) throw std::runtime_error("bad field");
      auto& series = by_country[country];
      series.country = country;
      series.yearly[year] = value;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("GERD file line " + std::to_string(line_no) + ": malformed row '" + t + "'");
    }
  }
  std::vector<GerdSeries> out;
  out.reserve(by_country.size());
  for (auto& [country, series] : by_country) out.push_back(std::move(series));
  return out;
}

int default_analysis_year(const Corpus& corpus) {
  int year = 0;
  for (const auto& doc : corpus.documents) year = std::max(year, doc.pub_year);
  return year;
}

}  // namespace biblioforge
