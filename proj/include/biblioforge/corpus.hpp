#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace biblioforge {

struct AuthorRef {
  std::string short_name;                 // WoS AU form, e.g. "Doe, J"
  std::optional<std::string> full_name;   // WoS AF form when present
  std::string key;                        // lowercase short_name, whitespace collapsed

  bool operator==(const AuthorRef&) const = default;
};

std::string author_key(std::string_view short_name);

struct Affiliation {
  std::string raw;
  std::string organization;
  std::string country;

  bool operator==(const Affiliation&) const = default;
};

struct Reprint {
  std::string author;
  Affiliation affiliation;

  bool operator==(const Reprint&) const = default;
};

struct Document {
  std::string uid;
  std::string title;
  std::optional<std::string> abstract;
  int pub_year = 0;
  std::string doc_type;
  std::string language;
  std::string source_title;
  std::vector<AuthorRef> authors;
  std::vector<std::string> author_keywords;  // WoS DE
  std::vector<std::string> keywords_plus;    // WoS ID
  std::vector<Affiliation> affiliations;
  std::optional<Reprint> reprint;
  int times_cited = 0;

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::vector<Document> documents;
  std::vector<std::string> source_files;
};

struct ParseResult {
  Corpus corpus;
  std::vector<std::string> warnings;
};

// Maps raw country segments from WoS addresses onto the canonical
// vocabulary. Ships with a default alias table; additional aliases can be
// loaded from a CSV file (`raw,canonical`, one pair per line, later entries
// win). UK home nations stay distinct. Unmapped values pass through
// title-cased; empty input maps to "UNKNOWN".
class CountryNormalizer {
 public:
  CountryNormalizer();
  void load_aliases(std::istream& in);
  void load_aliases_file(const std::string& path);
  std::string normalize(std::string_view raw) const;

 private:
  std::map<std::string, std::string> aliases_;  // keyed by lowercased raw
};

// One-shot normalization through the default alias table.
std::string normalize_country(std::string_view raw);

// Parses a single WoS C1/RP-style address ("[names] Org, City, Country.")
// into an Affiliation.
Affiliation parse_affiliation(std::string_view raw, const CountryNormalizer& countries);

// Tagged Web of Science plaintext export. Records run PT..ER; continuation
// lines start with three spaces. Records without a usable year or id become
// warnings; a record cut off before its ER raises ParseError with the byte
// offset where it started.
ParseResult parse_wos(std::istream& in, const CountryNormalizer& countries = CountryNormalizer());

// Minimal BibTeX subset: @article entries with author/title/year, optional
// keywords/journal/language/times-cited fields. Other entry types are
// skipped with a warning; unbalanced braces raise ParseError.
ParseResult parse_bibtex(std::istream& in);

// Canonical corpus interchange: one JSON object per line, keys matching the
// Document fields, absent optionals omitted. write/read round-trips the
// document list exactly.
Corpus read_canonical(std::istream& in);
void write_canonical(const Corpus& corpus, std::ostream& out);

// Lowercase, punctuation stripped, whitespace collapsed; key used by the
// duplicate-title pass of dedupe.
std::string normalize_title(std::string_view title);

// Removes duplicate uids, then records sharing (normalized title, year).
// The surviving record is the one with the highest citation count; ties
// keep the first occurrence.
Corpus dedupe(const Corpus& corpus);

struct YearRange {
  int first = 0;
  int last = 0;
};

struct CorpusFilter {
  std::optional<YearRange> years;
  std::set<std::string> doc_types;   // empty = no restriction
  std::set<std::string> languages;   // empty = no restriction
};

Corpus filter(const Corpus& corpus, const CorpusFilter& f);

}  // namespace biblioforge
