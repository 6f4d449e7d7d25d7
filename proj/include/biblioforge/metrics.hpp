#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "biblioforge/corpus.hpp"

namespace biblioforge {

enum class EntityKind { author, country, organization, source };

std::string entity_kind_name(EntityKind kind);
EntityKind parse_entity_kind(std::string_view name);  // throws on unknown

struct EntityStats {
  EntityKind kind = EntityKind::author;
  std::string id;
  std::size_t total_pubs = 0;
  double pct_of_corpus = 0.0;
  long long citations_total = 0;
  double avg_citations = 0.0;
  int h = 0;
  int g = 0;
  double m = 0.0;
  int first_pub_year = 0;
  std::optional<std::size_t> corresponding_pubs;   // country kind only
  std::optional<std::size_t> single_country_pubs;  // country kind only
  std::optional<std::size_t> collaborative_pubs;   // country kind only
  std::optional<double> tpgd;                      // when a GERD series is supplied
};

// Gross domestic R&D expenditure series in PPP $-billions; TPGD divides an
// entity's publications by the mean of these values.
struct GerdSeries {
  std::string country;
  std::map<int, double> yearly;
};

// Largest h such that at least h values are >= h. Throws
// std::invalid_argument on negative citation counts.
int h_index(std::span<const int> citations);

// Largest g, at most the number of papers, whose top-g citation sum reaches
// g^2. No zero-cited padding beyond the real papers.
int g_index(std::span<const int> citations);

// h divided by the inclusive year span (analysis - first + 1). Unrounded;
// reports round to two decimals at emission.
double m_index(int h, int first_pub_year, int analysis_year);

// Full counting: a document appears under every author / affiliation
// country / organization / source attributed to it.
std::map<std::string, std::set<std::string>> entity_documents(const Corpus& corpus,
                                                              EntityKind kind);

struct EntityStatsResult {
  std::vector<EntityStats> stats;  // sorted by total_pubs desc, id asc
  std::vector<std::string> warnings;
};

EntityStatsResult entity_stats(const Corpus& corpus, EntityKind kind, int analysis_year,
                               const std::vector<GerdSeries>& gerd = {});

struct CollaborationShares {
  std::size_t corresponding_pubs = 0;
  std::size_t single_country = 0;
  std::size_t collaborative = 0;
  std::size_t missing_reprint = 0;  // docs excluded for lack of reprint info
};

// Attribution by corresponding-author country: of the documents whose
// reprint country matches, those spanning exactly one country are single,
// the rest collaborative.
CollaborationShares collaboration_shares(const Corpus& corpus, const std::string& country);

// `country,year,gerd_ppp_billion` rows, optional header; malformed lines
// raise ParseError with the line number.
std::vector<GerdSeries> read_gerd_csv(std::istream& in);

int default_analysis_year(const Corpus& corpus);

}  // namespace biblioforge
