#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biblioforge/corpus.hpp"

namespace biblioforge {

// Length-tiered distance thresholds for variant grouping. Labels shorter
// than tier1_min_len only group on exact equality.
struct GroupingPolicy {
  unsigned tier1_min_len = 5;
  unsigned tier1_max_dist = 1;
  unsigned tier2_min_len = 9;
  unsigned tier2_max_dist = 2;
};

struct KeywordGroup {
  std::string canonical_label;
  std::map<std::string, std::size_t> variants;  // variant label -> document count
  std::set<std::string> doc_ids;
  std::size_t occurrences = 0;  // == doc_ids.size()
  double mean_pub_year = 0.0;
  double mean_citations = 0.0;
};

enum class KeywordSource { author_keywords, author_and_keywords_plus };

// Generic id -> document-id-set mapping; keys are keyword labels, words, or
// entity ids depending on the pipeline stage.
using LabelDocs = std::map<std::string, std::set<std::string>>;

// Lowercase, trimmed, inner whitespace collapsed, trailing '.'/',' stripped.
// Hyphens are kept; the distance thresholds absorb them.
std::string normalize_label(std::string_view raw);

LabelDocs extract_keywords(const Corpus& corpus, KeywordSource source);

// Distance allowance for a candidate pair, driven by the shorter label's
// length in Unicode scalars: 0 below tier 1, tier1_max_dist from tier 1,
// tier2_max_dist from tier 2.
unsigned effective_threshold(std::string_view a, std::string_view b, const GroupingPolicy& policy);

// Clusters labels into connected components of the "within threshold"
// relation. The result is independent of input order: components via
// union-find, canonical = most frequent variant (lexicographic tie-break),
// output sorted by occurrences descending then canonical ascending.
std::vector<KeywordGroup> group_keywords(const LabelDocs& labels, const GroupingPolicy& policy);
std::vector<KeywordGroup> group_keywords(
    std::vector<std::pair<std::string, std::set<std::string>>> labels,
    const GroupingPolicy& policy);

struct KeywordStats {
  std::size_t occurrences = 0;
  double mean_pub_year = 0.0;
  double mean_citations = 0.0;
};

// Document-level statistics over a doc-id set; throws std::invalid_argument
// on an empty set or an id missing from the corpus.
KeywordStats keyword_stats(const std::set<std::string>& doc_ids, const Corpus& corpus);
KeywordStats keyword_stats(const KeywordGroup& group, const Corpus& corpus);

// Fills mean_pub_year / mean_citations on every group in place.
void annotate_stats(std::vector<KeywordGroup>& groups, const Corpus& corpus);

// Splits labels on whitespace and hyphens into single words, dropping
// stopwords; document sets union per word.
LabelDocs split_words(const LabelDocs& labels, const std::set<std::string>& stopwords = {});

// Symmetric shared-document counts: (i,j) -> |docs(i) & docs(j)| for every
// unordered pair with a non-empty intersection, plus (i,i) -> |docs(i)|.
// Keys are stored with first <= second.
using PairCounts = std::map<std::pair<std::string, std::string>, std::size_t>;
PairCounts shared_occurrence(const LabelDocs& items);

std::set<std::string> read_stopwords(std::istream& in);

}  // namespace biblioforge
