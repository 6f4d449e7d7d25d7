// biblioforge: bibliometric corpus ingestion, keyword grouping, entity
// metrics, trend buckets and collaboration networks from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "biblioforge/corpus.hpp"
#include "biblioforge/keywords.hpp"
#include "biblioforge/metrics.hpp"
#include "biblioforge/networks.hpp"
#include "biblioforge/report.hpp"
#include "biblioforge/strdist.hpp"
#include "biblioforge/trends.hpp"
#include "biblioforge/util.hpp"

namespace bf = biblioforge;

namespace {

// Flat key/value defaults loaded from a JSON config file. Command-line
// flags always win; the config only fills options the user did not pass.
class ConfigDefaults {
 public:
  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bf::ParseError("cannot open config file: " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw bf::ParseError("config file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw bf::ParseError("config file " + path + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (value.is_string())
        values_[key] = value.get<std::string>();
      else
        values_[key] = value.dump();
    }
  }

  template <typename T>
  void apply(const CLI::Option* opt, const std::string& key, T& target) const {
    if (opt && opt->count() > 0) return;
    auto it = values_.find(key);
    if (it == values_.end()) return;
    std::istringstream ss(it->second);
    T parsed;
    if constexpr (std::is_same_v<T, std::string>) {
      parsed = it->second;
    } else {
      if (!(ss >> parsed)) throw bf::ParseError("config key '" + key + "': bad value");
    }
    target = parsed;
  }

 private:
  std::map<std::string, std::string> values_;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bf::ParseError("cannot open output file: " + path);
  out << content;
}

bf::YearWindow parse_window(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw bf::ParseError("window must be START:END, got '" + spec + "'");
  bf::YearWindow w;
  w.start = std::stoi(spec.substr(0, colon));
  w.end = std::stoi(spec.substr(colon + 1));
  return w;
}

bf::Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bf::ParseError("cannot open corpus file: " + path);
  bf::Corpus corpus = bf::read_canonical(in);
  corpus.source_files.push_back(path);
  return corpus;
}

bf::KeywordSource parse_source(const std::string& s) {
  if (s == "de") return bf::KeywordSource::author_keywords;
  if (s == "de+id") return bf::KeywordSource::author_and_keywords_plus;
  throw bf::ParseError("keyword source must be 'de' or 'de+id', got '" + s + "'");
}

std::vector<bf::GerdSeries> load_gerd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bf::ParseError("cannot open GERD file: " + path);
  return bf::read_gerd_csv(in);
}

std::set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bf::ParseError("cannot open stopword file: " + path);
  return bf::read_stopwords(in);
}

int run(int argc, char** argv) {
  CLI::App app{"bibliometric analysis toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  if (const char* env = std::getenv("BIBLIOFORGE_CONFIG")) config_path = env;
  app.add_option("--config", config_path, "JSON config file with default option values");

  // ---- ingest ----
  auto* ingest = app.add_subcommand("ingest", "parse exports into a canonical corpus file");
  std::vector<std::string> ingest_inputs;
  std::string ingest_format = "wos", ingest_out, ingest_years, ingest_alias;
  std::vector<std::string> ingest_doc_types, ingest_languages;
  ingest->add_option("inputs", ingest_inputs, "export files")->required();
  ingest->add_option("--format", ingest_format, "input format: wos, bibtex or canonical");
  auto* ingest_out_opt = ingest->add_option("-o,--output", ingest_out, "canonical corpus output");
  ingest->add_option("--years", ingest_years, "inclusive year range START:END");
  ingest->add_option("--doc-type", ingest_doc_types, "keep only these document types");
  ingest->add_option("--language", ingest_languages, "keep only these languages");
  auto* ingest_alias_opt = ingest->add_option("--alias", ingest_alias, "country alias CSV file");

  // ---- keywords ----
  auto* keywords = app.add_subcommand("keywords", "group keyword variants and emit statistics");
  std::string kw_corpus, kw_out, kw_source = "de", kw_stopwords, kw_words_out;
  bool kw_words = false;
  std::size_t kw_min_count = 0;
  bf::GroupingPolicy kw_policy;
  keywords->add_option("corpus", kw_corpus, "canonical corpus file")->required();
  auto* kw_out_opt = keywords->add_option("-o,--output", kw_out, "group table CSV output");
  auto* kw_source_opt = keywords->add_option("--source", kw_source, "keyword source: de or de+id");
  keywords->add_flag("--words", kw_words, "also emit a single-word table");
  keywords->add_option("--words-out", kw_words_out, "single-word table output");
  keywords->add_option("--min-count", kw_min_count, "hide groups below this document count");
  auto* kw_stop_opt = keywords->add_option("--stopwords", kw_stopwords, "stopword file for --words");
  keywords->add_option("--tier1-len", kw_policy.tier1_min_len, "tier-1 minimum length");
  keywords->add_option("--tier1-dist", kw_policy.tier1_max_dist, "tier-1 distance allowance");
  keywords->add_option("--tier2-len", kw_policy.tier2_min_len, "tier-2 minimum length");
  keywords->add_option("--tier2-dist", kw_policy.tier2_max_dist, "tier-2 distance allowance");

  // ---- metrics ----
  auto* metrics = app.add_subcommand("metrics", "entity report with indices and trend glyphs");
  std::string m_corpus, m_entity, m_out, m_gerd, m_window = "2015:2019", m_format = "csv";
  int m_analysis_year = 0;
  std::size_t m_top = 0;
  metrics->add_option("corpus", m_corpus, "canonical corpus file")->required();
  metrics->add_option("--entity", m_entity, "author, country, organization or source")->required();
  auto* m_out_opt = metrics->add_option("-o,--output", m_out, "report output");
  auto* m_gerd_opt = metrics->add_option("--gerd", m_gerd, "GERD CSV for TPGD (country reports)");
  auto* m_window_opt = metrics->add_option("--window", m_window, "trend window START:END");
  auto* m_year_opt =
      metrics->add_option("--analysis-year", m_analysis_year, "index reference year");
  metrics->add_option("--top", m_top, "report only the N most productive entities (0 = all)");
  metrics->add_option("--format", m_format, "csv or markdown");

  // ---- trends ----
  auto* trends = app.add_subcommand("trends", "average annual growth and trend buckets");
  std::string t_corpus, t_entity, t_out, t_window = "2015:2019";
  std::size_t t_top = 0;
  trends->add_option("corpus", t_corpus, "canonical corpus file")->required();
  trends->add_option("--entity", t_entity, "author, country, organization or source")->required();
  auto* t_out_opt = trends->add_option("-o,--output", t_out, "trend table output");
  auto* t_window_opt = trends->add_option("--window", t_window, "trend window START:END");
  trends->add_option("--top", t_top, "classify only the N most productive entities (0 = all)");

  // ---- network ----
  auto* network = app.add_subcommand("network", "co-occurrence and collaboration graphs");
  std::string n_corpus, n_kind, n_format = "csv", n_out, n_source = "de";
  std::size_t n_top = 0, n_top_edges = 0, n_min_weight = 1;
  network->add_option("corpus", n_corpus, "canonical corpus file")->required();
  network->add_option("--kind", n_kind, "cooccurrence, country, organization or author")
      ->required();
  network->add_option("--format", n_format, "graphml, dot or csv");
  auto* n_out_opt = network->add_option("-o,--output", n_out, "graph output");
  network->add_option("--top", n_top, "top entities / keyword groups (0 = all; 25 for matrices)");
  network->add_option("--top-edges", n_top_edges, "edges kept per entity (0 = all)");
  network->add_option("--min-weight", n_min_weight, "drop edges below this weight");
  auto* n_source_opt = network->add_option("--source", n_source, "keyword source for matrices");

  CLI11_PARSE(app, argc, argv);

  ConfigDefaults config;
  if (!config_path.empty()) config.load(config_path);

  if (*ingest) {
    config.apply(ingest_alias_opt, "alias", ingest_alias);
    config.apply(ingest_out_opt, "output", ingest_out);

    bf::CountryNormalizer countries;
    if (!ingest_alias.empty()) countries.load_aliases_file(ingest_alias);

    bf::Corpus merged;
    std::size_t warning_count = 0;
    for (const auto& path : ingest_inputs) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw bf::ParseError("cannot open input file: " + path);
      bf::ParseResult parsed;
      if (ingest_format == "wos") {
        parsed = bf::parse_wos(in, countries);
      } else if (ingest_format == "bibtex") {
        parsed = bf::parse_bibtex(in);
      } else if (ingest_format == "canonical") {
        parsed.corpus = bf::read_canonical(in);
      } else {
        throw bf::ParseError("unknown input format: " + ingest_format);
      }
      for (const auto& w : parsed.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
      warning_count += parsed.warnings.size();
      for (auto& doc : parsed.corpus.documents) merged.documents.push_back(std::move(doc));
      merged.source_files.push_back(path);
    }

    bf::CorpusFilter f;
    if (!ingest_years.empty()) {
      auto w = parse_window(ingest_years);
      f.years = bf::YearRange{w.start, w.end};
    }
    f.doc_types.insert(ingest_doc_types.begin(), ingest_doc_types.end());
    f.languages.insert(ingest_languages.begin(), ingest_languages.end());

    bf::Corpus result = bf::dedupe(bf::filter(merged, f));
    std::ostringstream out;
    bf::write_canonical(result, out);
    write_output(ingest_out, out.str());

    int min_year = 0, max_year = 0;
    for (const auto& doc : result.documents) {
      if (min_year == 0 || doc.pub_year < min_year) min_year = doc.pub_year;
      if (doc.pub_year > max_year) max_year = doc.pub_year;
    }
    std::cout << "documents: " << result.documents.size() << "\n";
    if (min_year > 0) std::cout << "years: " << min_year << "-" << max_year << "\n";
    std::cout << "warnings: " << warning_count << "\n";
    return 0;
  }

  if (*keywords) {
    config.apply(kw_source_opt, "source", kw_source);
    config.apply(kw_stop_opt, "stopwords", kw_stopwords);
    config.apply(kw_out_opt, "output", kw_out);

    bf::Corpus corpus = load_corpus(kw_corpus);
    auto labels = bf::extract_keywords(corpus, parse_source(kw_source));
    auto groups = bf::group_keywords(labels, kw_policy);
    bf::annotate_stats(groups, corpus);
    write_output(kw_out, bf::keyword_table_csv(groups, kw_min_count));

    if (kw_words || !kw_words_out.empty()) {
      std::set<std::string> stopwords;
      if (!kw_stopwords.empty()) stopwords = load_stopwords(kw_stopwords);
      auto words = bf::split_words(labels, stopwords);
      write_output(kw_words_out, bf::word_table_csv(words, corpus, kw_min_count));
    }
    return 0;
  }

  if (*metrics) {
    config.apply(m_gerd_opt, "gerd", m_gerd);
    config.apply(m_window_opt, "window", m_window);
    config.apply(m_year_opt, "analysis-year", m_analysis_year);
    config.apply(m_out_opt, "output", m_out);

    bf::Corpus corpus = load_corpus(m_corpus);
    bf::EntityKind kind = bf::parse_entity_kind(m_entity);
    int analysis_year = m_analysis_year > 0 ? m_analysis_year : bf::default_analysis_year(corpus);
    std::vector<bf::GerdSeries> gerd;
    if (!m_gerd.empty() && kind == bf::EntityKind::country) gerd = load_gerd(m_gerd);

    std::vector<std::string> warnings;
    auto report = bf::build_entity_report(corpus, kind, analysis_year, parse_window(m_window),
                                          gerd, m_top == 0 ? bf::kNoLimit : m_top, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

    if (m_format == "csv") {
      write_output(m_out, bf::entity_report_csv(report));
    } else if (m_format == "markdown") {
      write_output(m_out, bf::entity_report_markdown(report));
    } else {
      throw bf::ParseError("unknown report format: " + m_format);
    }
    return 0;
  }

  if (*trends) {
    config.apply(t_window_opt, "window", t_window);
    config.apply(t_out_opt, "output", t_out);

    bf::Corpus corpus = load_corpus(t_corpus);
    bf::EntityKind kind = bf::parse_entity_kind(t_entity);
    bf::YearWindow window = parse_window(t_window);

    auto docs = bf::entity_documents(corpus, kind);
    std::vector<std::pair<std::string, std::size_t>> ranked;
    for (const auto& [id, uids] : docs) ranked.emplace_back(id, uids.size());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    if (t_top > 0 && ranked.size() > t_top) ranked.resize(t_top);

    std::map<std::string, std::optional<double>> avgs;
    for (const auto& [id, pubs] : ranked)
      avgs[id] = bf::avg_growth(bf::annual_counts(docs.at(id), corpus, window), window);
    auto classes = bf::classify(avgs);

    std::vector<std::pair<std::string, bf::TrendClass>> rows;
    for (const auto& [id, pubs] : ranked) rows.emplace_back(id, classes.at(id));
    write_output(t_out, bf::trend_table_csv(rows));
    return 0;
  }

  if (*network) {
    config.apply(n_source_opt, "source", n_source);
    config.apply(n_out_opt, "output", n_out);

    bf::Corpus corpus = load_corpus(n_corpus);
    bf::GraphFormat format = bf::parse_graph_format(n_format);

    if (n_kind == "cooccurrence") {
      auto labels = bf::extract_keywords(corpus, parse_source(n_source));
      auto groups = bf::group_keywords(labels, bf::GroupingPolicy{});
      std::size_t top = n_top == 0 ? 25 : n_top;
      write_output(n_out, bf::export_graph(bf::cooccurrence(groups, top), format));
      return 0;
    }

    bf::EntityKind kind = bf::parse_entity_kind(n_kind);
    auto edges = bf::collaboration_edges(corpus, kind);
    std::map<std::string, std::size_t> pubs;
    for (const auto& [id, uids] : bf::entity_documents(corpus, kind)) pubs[id] = uids.size();
    auto filtered = bf::filter_network(edges, pubs, n_top == 0 ? bf::kNoLimit : n_top,
                                       n_top_edges == 0 ? bf::kNoLimit : n_top_edges, n_min_weight);
    write_output(n_out, bf::export_graph(filtered, format));
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
