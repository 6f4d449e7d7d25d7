#include "biblioforge/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include <json.hpp>

#include "biblioforge/util.hpp"

namespace biblioforge {

std::string author_key(std::string_view short_name) {
  return to_lower_ascii(collapse_whitespace(short_name));
}

// ---------------------------------------------------------------------------
// Country normalization

namespace {

// Default alias table for the country segments seen in WoS addresses.
// Extend with a CSV alias file rather than editing this list.
const std::pair<const char*, const char*> kDefaultCountryAliases[] = {
    {"peoples r china", "China"},
    {"pr china", "China"},
    {"p r china", "China"},
    {"usa", "USA"},
    {"u s a", "USA"},
    {"united states", "USA"},
    {"united states of america", "USA"},
    {"england", "England"},
    {"scotland", "Scotland"},
    {"wales", "Wales"},
    {"north ireland", "North Ireland"},
    {"northern ireland", "North Ireland"},
    {"u arab emirates", "United Arab Emirates"},
    {"south korea", "South Korea"},
    {"korea", "South Korea"},
    {"republic of korea", "South Korea"},
    {"russia", "Russia"},
    {"russian federation", "Russia"},
    {"turkiye", "Turkey"},
    {"czech republic", "Czech Republic"},
    {"czechia", "Czech Republic"},
    {"taiwan", "Taiwan"},
    {"roc", "Taiwan"},
    {"iran", "Iran"},
    {"viet nam", "Vietnam"},
    {"netherlands", "Netherlands"},
    {"the netherlands", "Netherlands"},
};

}  // namespace

CountryNormalizer::CountryNormalizer() {
  for (const auto& [raw, canonical] : kDefaultCountryAliases)
    aliases_[raw] = canonical;
}

void CountryNormalizer::load_aliases(std::istream& in) {
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto comma = t.find(',');
    if (comma == std::string::npos)
      throw ParseError("alias file line " + std::to_string(line_no) + ": expected raw,canonical");
    std::string raw = to_lower_ascii(collapse_whitespace(t.substr(0, comma)));
    std::string canonical = trim(t.substr(comma + 1));
    if (raw == "raw" && line_no == 1) continue;  // optional header
    if (raw.empty() || canonical.empty())
      throw ParseError("alias file line " + std::to_string(line_no) + ": empty field");
    aliases_[raw] = canonical;
  }
}

void CountryNormalizer::load_aliases_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open alias file: " + path);
  load_aliases(in);
}

std::string CountryNormalizer::normalize(std::string_view raw) const {
  std::string s = collapse_whitespace(raw);
  while (!s.empty() && s.back() == '.') s.pop_back();
  s = trim(s);
  if (s.empty()) return "UNKNOWN";

  auto it = aliases_.find(to_lower_ascii(s));
  if (it != aliases_.end()) return it->second;

  // US addresses end in "<STATE> <ZIP> USA"; recognize the trailing token.
  auto tokens = split(s, ' ');
  if (!tokens.empty() && to_lower_ascii(tokens.back()) == "usa") return "USA";

  return title_case(s);
}

std::string normalize_country(std::string_view raw) {
  static const CountryNormalizer defaults;
  return defaults.normalize(raw);
}

Affiliation parse_affiliation(std::string_view raw, const CountryNormalizer& countries) {
  Affiliation aff;
  aff.raw = trim(raw);

  std::string_view rest = aff.raw;
  if (!rest.empty() && rest.front() == '[') {
    auto close = rest.find(']');
    if (close != std::string_view::npos) rest = rest.substr(close + 1);
  }
  std::string body = trim(rest);

  auto segments = split(body, ',');
  if (!segments.empty()) {
    aff.organization = collapse_whitespace(segments.front());
    std::string last = segments.size() > 1 ? segments.back() : std::string();
    aff.country = countries.normalize(last);
  } else {
    aff.country = "UNKNOWN";
  }
  return aff;
}

// ---------------------------------------------------------------------------
// WoS tagged export

namespace {

bool is_list_tag(const std::string& tag) {
  // Tags whose continuation lines are separate items rather than wrapped text.
  return tag == "AU" || tag == "AF" || tag == "C1";
}

std::vector<std::string> split_keywords(const std::string& joined, std::string_view seps) {
  std::vector<std::string> out;
  std::string current;
  for (char c : joined) {
    if (seps.find(c) != std::string_view::npos) {
      std::string t = trim(current);
      if (!t.empty()) out.push_back(t);
      current.clear();
    } else {
      current += c;
    }
  }
  std::string t = trim(current);
  if (!t.empty()) out.push_back(t);
  return out;
}

std::optional<Reprint> parse_reprint(const std::string& raw, const CountryNormalizer& countries) {
  std::string s = trim(raw);
  if (s.empty()) return std::nullopt;

  Reprint rp;
  auto paren = s.find('(');
  if (paren != std::string::npos && s.find(')', paren) != std::string::npos) {
    // "Doe, J (corresponding author), Univ Alpha, ..., Country."
    rp.author = trim(s.substr(0, paren));
    auto close = s.find(')', paren);
    std::string address = trim(s.substr(close + 1));
    if (!address.empty() && address.front() == ',') address = trim(address.substr(1));
    rp.affiliation = parse_affiliation(address, countries);
  } else {
    // Older layout without the role marker: "Doe, J, Univ Alpha, ..., Country."
    auto segments = split(s, ',');
    if (segments.size() >= 3) {
      rp.author = trim(segments[0]) + ", " + trim(segments[1]);
      std::string address;
      for (size_t i = 2; i < segments.size(); ++i) {
        if (i > 2) address += ", ";
        address += trim(segments[i]);
      }
      rp.affiliation = parse_affiliation(address, countries);
    } else {
      rp.author = collapse_whitespace(s);
      rp.affiliation.raw = rp.author;
      rp.affiliation.country = "UNKNOWN";
    }
  }
  return rp;
}

struct RawRecord {
  std::map<std::string, std::vector<std::string>> fields;  // tag -> items
  std::streamoff start_offset = 0;

  const std::string* first(const std::string& tag) const {
    auto it = fields.find(tag);
    return it == fields.end() || it->second.empty() ? nullptr : &it->second.front();
  }
};

std::optional<int> parse_int(const std::string& s) {
  std::string t = trim(s);
  if (t.empty()) return std::nullopt;
  size_t pos = 0;
  try {
    int v = std::stoi(t, &pos);
    if (pos != t.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Builds a Document from a raw PT..ER block. Returns nullopt with a warning
// message when the record lacks a usable year or id.
std::optional<Document> build_document(const RawRecord& rec, const CountryNormalizer& countries,
                                       std::vector<std::string>& warnings) {
  Document doc;

  if (const auto* ut = rec.first("UT")) {
    doc.uid = trim(*ut);
  }
  std::string title = rec.first("TI") ? collapse_whitespace(*rec.first("TI")) : "";
  doc.title = title;

  auto py = rec.first("PY") ? parse_int(*rec.first("PY")) : std::nullopt;
  if (!py || *py < 1900 || *py > 2100) {
    warnings.push_back("record at byte " + std::to_string(rec.start_offset) +
                       " skipped: missing or invalid PY");
    return std::nullopt;
  }
  doc.pub_year = *py;

  if (doc.uid.empty()) {
    if (const auto* di = rec.first("DI"); di && !trim(*di).empty()) {
      doc.uid = "DOI:" + trim(*di);
    } else if (!title.empty()) {
      doc.uid = "GEN:" + to_hex(fnv1a64(normalize_title(title) + "|" + std::to_string(doc.pub_year)));
    } else {
      warnings.push_back("record at byte " + std::to_string(rec.start_offset) +
                         " skipped: no UT, DI or title to derive an id from");
      return std::nullopt;
    }
  }

  if (const auto* ab = rec.first("AB")) doc.abstract = collapse_whitespace(*ab);
  if (const auto* so = rec.first("SO")) doc.source_title = collapse_whitespace(*so);
  if (const auto* dt = rec.first("DT")) doc.doc_type = collapse_whitespace(*dt);
  if (const auto* la = rec.first("LA")) doc.language = collapse_whitespace(*la);

  const auto au_it = rec.fields.find("AU");
  const auto af_it = rec.fields.find("AF");
  if (au_it != rec.fields.end()) {
    const auto& shorts = au_it->second;
    for (size_t i = 0; i < shorts.size(); ++i) {
      AuthorRef a;
      a.short_name = collapse_whitespace(shorts[i]);
      if (a.short_name.empty()) continue;
      if (af_it != rec.fields.end() && i < af_it->second.size())
        a.full_name = collapse_whitespace(af_it->second[i]);
      a.key = author_key(a.short_name);
      doc.authors.push_back(std::move(a));
    }
  }

  if (const auto* de = rec.first("DE")) doc.author_keywords = split_keywords(*de, ";");
  if (const auto* id = rec.first("ID")) doc.keywords_plus = split_keywords(*id, ";");

  if (auto c1 = rec.fields.find("C1"); c1 != rec.fields.end()) {
    for (const auto& line : c1->second) {
      if (trim(line).empty()) continue;
      doc.affiliations.push_back(parse_affiliation(line, countries));
    }
  }
  if (const auto* rpv = rec.first("RP")) doc.reprint = parse_reprint(*rpv, countries);

  if (const auto* tc = rec.first("TC")) {
    auto v = parse_int(*tc);
    if (v && *v >= 0) {
      doc.times_cited = *v;
    } else {
      warnings.push_back("record " + doc.uid + ": unparseable TC '" + trim(*tc) + "', using 0");
    }
  }
  return doc;
}

}  // namespace

ParseResult parse_wos(std::istream& in, const CountryNormalizer& countries) {
  ParseResult result;
  std::string line;
  std::optional<RawRecord> rec;
  std::string current_tag;
  std::streamoff offset = 0;

  auto finish = [&]() {
    if (auto doc = build_document(*rec, countries, result.warnings))
      result.corpus.documents.push_back(std::move(*doc));
    rec.reset();
    current_tag.clear();
  };

  while (std::getline(in, line)) {
    std::streamoff line_start = offset;
    offset += static_cast<std::streamoff>(line.size()) + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    if (!rec) {
      if (line == "PT" || starts_with(line, "PT ")) {
        rec.emplace();
        rec->start_offset = line_start;
        rec->fields["PT"].push_back(line.size() > 3 ? line.substr(3) : "");
        current_tag = "PT";
      }
      // FN/VR header, EF trailer and blank lines fall through here.
      continue;
    }

    std::string trimmed_right = line;
    while (!trimmed_right.empty() && trimmed_right.back() == ' ') trimmed_right.pop_back();

    if (trimmed_right == "ER") {
      finish();
      continue;
    }
    if (starts_with(line, "   ")) {
      // Continuation of the current tag.
      if (current_tag.empty()) continue;
      auto& items = rec->fields[current_tag];
      std::string value = line.substr(3);
      if (is_list_tag(current_tag)) {
        items.push_back(value);
      } else if (!items.empty()) {
        items.back() += " " + trim(value);
      }
      continue;
    }
    if (line.size() >= 2 && (line.size() == 2 || line[2] == ' ')) {
      current_tag = line.substr(0, 2);
      rec->fields[current_tag].push_back(line.size() > 3 ? line.substr(3) : "");
      continue;
    }
    // Anything else inside a record is preserved-but-ignored.
  }

  if (rec)
    throw ParseError("truncated WoS record: end of file before ER for record starting at byte " +
                     std::to_string(rec->start_offset));
  return result;
}

// ---------------------------------------------------------------------------
// BibTeX subset

namespace {

std::string strip_value_delimiters(std::string v) {
  v = trim(v);
  if (v.size() >= 2 && ((v.front() == '{' && v.back() == '}') ||
                        (v.front() == '"' && v.back() == '"')))
    v = v.substr(1, v.size() - 2);
  return trim(v);
}

// Splits the body of an entry ("key, f1 = {..}, f2 = "..", ...") into the
// citation key and a lowercase field map. Only depth-0 commas separate.
void parse_entry_body(const std::string& body, std::string& key,
                      std::map<std::string, std::string>& fields) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  bool in_quotes = false;
  for (char c : body) {
    if (c == '{' && !in_quotes) ++depth;
    else if (c == '}' && !in_quotes) --depth;
    else if (c == '"' && depth == 0) in_quotes = !in_quotes;
    if (c == ',' && depth == 0 && !in_quotes) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);

  key = parts.empty() ? "" : trim(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) {
    auto eq = parts[i].find('=');
    if (eq == std::string::npos) continue;
    std::string name = to_lower_ascii(trim(parts[i].substr(0, eq)));
    std::string value = strip_value_delimiters(parts[i].substr(eq + 1));
    if (!name.empty()) fields[name] = value;
  }
}

}  // namespace

ParseResult parse_bibtex(std::istream& in) {
  ParseResult result;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  size_t pos = 0;
  while ((pos = text.find('@', pos)) != std::string::npos) {
    size_t type_start = pos + 1;
    size_t brace = text.find('{', type_start);
    if (brace == std::string::npos) break;
    std::string entry_type = to_lower_ascii(trim(text.substr(type_start, brace - type_start)));

    // Find the matching closing brace.
    int depth = 0;
    size_t end = std::string::npos;
    for (size_t i = brace; i < text.size(); ++i) {
      if (text[i] == '{') ++depth;
      else if (text[i] == '}') {
        --depth;
        if (depth == 0) {
          end = i;
          break;
        }
      }
    }
    std::string body_preview = text.substr(brace + 1, 40);
    if (end == std::string::npos)
      throw ParseError("unbalanced braces in entry '" + trim(split(body_preview, ',')[0]) + "'");

    std::string body = text.substr(brace + 1, end - brace - 1);
    pos = end + 1;

    if (entry_type == "comment" || entry_type == "string" || entry_type == "preamble") continue;

    std::string key;
    std::map<std::string, std::string> fields;
    parse_entry_body(body, key, fields);

    if (entry_type != "article") {
      result.warnings.push_back("entry '" + key + "' skipped: type @" + entry_type);
      continue;
    }
    auto year_it = fields.find("year");
    auto year = year_it != fields.end() ? parse_int(year_it->second) : std::nullopt;
    if (!year || *year < 1900 || *year > 2100) {
      result.warnings.push_back("entry '" + key + "' skipped: missing or invalid year");
      continue;
    }

    Document doc;
    doc.uid = key;
    doc.pub_year = *year;
    doc.doc_type = "Article";
    if (auto it = fields.find("title"); it != fields.end()) doc.title = collapse_whitespace(it->second);
    if (auto it = fields.find("journal"); it != fields.end())
      doc.source_title = collapse_whitespace(it->second);
    if (auto it = fields.find("language"); it != fields.end())
      doc.language = collapse_whitespace(it->second);
    if (auto it = fields.find("abstract"); it != fields.end())
      doc.abstract = collapse_whitespace(it->second);
    if (auto it = fields.find("author"); it != fields.end()) {
      std::string authors = collapse_whitespace(it->second);
      size_t start = 0;
      while (start < authors.size()) {
        size_t sep = authors.find(" and ", start);
        std::string name = trim(sep == std::string::npos ? authors.substr(start)
                                                         : authors.substr(start, sep - start));
        if (!name.empty()) {
          AuthorRef a;
          a.short_name = name;
          a.key = author_key(name);
          doc.authors.push_back(std::move(a));
        }
        if (sep == std::string::npos) break;
        start = sep + 5;
      }
    }
    if (auto it = fields.find("keywords"); it != fields.end())
      doc.author_keywords = split_keywords(it->second, ",;");
    if (auto it = fields.find("times-cited"); it != fields.end()) {
      auto tc = parse_int(it->second);
      if (tc && *tc >= 0) doc.times_cited = *tc;
    }
    result.corpus.documents.push_back(std::move(doc));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Canonical JSON-lines format

namespace {

using nlohmann::json;

json affiliation_to_json(const Affiliation& a) {
  return json{{"raw", a.raw}, {"organization", a.organization}, {"country", a.country}};
}

Affiliation affiliation_from_json(const json& j) {
  Affiliation a;
  a.raw = j.at("raw").get<std::string>();
  a.organization = j.at("organization").get<std::string>();
  a.country = j.at("country").get<std::string>();
  return a;
}

json document_to_json(const Document& d) {
  json j;
  j["uid"] = d.uid;
  j["title"] = d.title;
  if (d.abstract) j["abstract"] = *d.abstract;
  j["pub_year"] = d.pub_year;
  j["doc_type"] = d.doc_type;
  j["language"] = d.language;
  j["source_title"] = d.source_title;
  j["authors"] = json::array();
  for (const auto& a : d.authors) {
    json ja{{"short_name", a.short_name}, {"key", a.key}};
    if (a.full_name) ja["full_name"] = *a.full_name;
    j["authors"].push_back(std::move(ja));
  }
  j["author_keywords"] = d.author_keywords;
  j["keywords_plus"] = d.keywords_plus;
  j["affiliations"] = json::array();
  for (const auto& a : d.affiliations) j["affiliations"].push_back(affiliation_to_json(a));
  if (d.reprint) {
    j["reprint"] = json{{"author", d.reprint->author},
                        {"affiliation", affiliation_to_json(d.reprint->affiliation)}};
  }
  j["times_cited"] = d.times_cited;
  return j;
}

Document document_from_json(const json& j) {
  Document d;
  d.uid = j.at("uid").get<std::string>();
  d.title = j.at("title").get<std::string>();
  if (j.contains("abstract")) d.abstract = j.at("abstract").get<std::string>();
  d.pub_year = j.at("pub_year").get<int>();
  d.doc_type = j.at("doc_type").get<std::string>();
  d.language = j.at("language").get<std::string>();
  d.source_title = j.at("source_title").get<std::string>();
  for (const auto& ja : j.at("authors")) {
    AuthorRef a;
    a.short_name = ja.at("short_name").get<std::string>();
    if (ja.contains("full_name")) a.full_name = ja.at("full_name").get<std::string>();
    a.key = ja.at("key").get<std::string>();
    d.authors.push_back(std::move(a));
  }
  d.author_keywords = j.at("author_keywords").get<std::vector<std::string>>();
  d.keywords_plus = j.at("keywords_plus").get<std::vector<std::string>>();
  for (const auto& ja : j.at("affiliations")) d.affiliations.push_back(affiliation_from_json(ja));
  if (j.contains("reprint")) {
    Reprint r;
    r.author = j.at("reprint").at("author").get<std::string>();
    r.affiliation = affiliation_from_json(j.at("reprint").at("affiliation"));
    d.reprint = std::move(r);
  }
  d.times_cited = j.at("times_cited").get<int>();
  if (d.uid.empty()) throw std::runtime_error("empty uid");
  if (d.pub_year < 1900 || d.pub_year > 2100) throw std::runtime_error("pub_year out of range");
  if (d.times_cited < 0) throw std::runtime_error("negative times_cited");
  return d;
}

}  // namespace

Corpus read_canonical(std::istream& in) {
  Corpus corpus;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      corpus.documents.push_back(document_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw ParseError("canonical corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return corpus;
}

void write_canonical(const Corpus& corpus, std::ostream& out) {
  for (const auto& doc : corpus.documents) out << document_to_json(doc).dump() << '\n';
}

// ---------------------------------------------------------------------------
// Dedupe and filter

std::string normalize_title(std::string_view title) {
  std::string out;
  out.reserve(title.size());
  for (char c : title) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else
      out += ' ';
  }
  return collapse_whitespace(out);
}

Corpus dedupe(const Corpus& corpus) {
  // Pass 1: duplicate uids, keep the max-citation record (first on ties).
  std::vector<const Document*> kept;
  std::unordered_map<std::string, size_t> by_uid;
  for (const auto& doc : corpus.documents) {
    auto [it, inserted] = by_uid.try_emplace(doc.uid, kept.size());
    if (inserted) {
      kept.push_back(&doc);
    } else if (doc.times_cited > kept[it->second]->times_cited) {
      kept[it->second] = &doc;
    }
  }

  // Pass 2: same (normalized title, year), same survivor rule. Records
  // without a title are never merged by this pass.
  std::vector<const Document*> out;
  std::unordered_map<std::string, size_t> by_title;
  for (const Document* doc : kept) {
    std::string title_key = normalize_title(doc->title);
    if (title_key.empty()) {
      out.push_back(doc);
      continue;
    }
    std::string key = title_key + "|" + std::to_string(doc->pub_year);
    auto [it, inserted] = by_title.try_emplace(key, out.size());
    if (inserted) {
      out.push_back(doc);
    } else if (doc->times_cited > out[it->second]->times_cited) {
      out[it->second] = doc;
    }
  }

  Corpus result;
  result.source_files = corpus.source_files;
  result.documents.reserve(out.size());
  for (const Document* doc : out) result.documents.push_back(*doc);
  return result;
}

Corpus filter(const Corpus& corpus, const CorpusFilter& f) {
  Corpus result;
  result.source_files = corpus.source_files;
  for (const auto& doc : corpus.documents) {
    if (f.years && (doc.pub_year < f.years->first || doc.pub_year > f.years->last)) continue;
    if (!f.doc_types.empty() && !f.doc_types.count(doc.doc_type)) continue;
    if (!f.languages.empty() && !f.languages.count(doc.language)) continue;
    result.documents.push_back(doc);
  }
  return result;
}

}  // namespace biblioforge
