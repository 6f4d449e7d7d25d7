// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Reference values come from independent oracles (tests/oracles.hpp)
// and from the frozen fixture outputs under tests/fixtures/golden/.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "biblioforge/corpus.hpp"
#include "biblioforge/keywords.hpp"
#include "biblioforge/metrics.hpp"
#include "biblioforge/networks.hpp"
#include "biblioforge/report.hpp"
#include "biblioforge/strdist.hpp"
#include "biblioforge/trends.hpp"
#include "biblioforge/util.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace biblioforge;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

template <typename T>
void require_eq(const T& actual, const T& expected, const std::string& what) {
  if (!(actual == expected)) throw Failure{what};
}

std::string fixture_path(const std::string& name) {
  return std::string(BIBLIOFORGE_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require_identical(const std::string& actual, const std::string& expected,
                       const std::string& what) {
  if (actual == expected) return;
  auto a = split(actual, '\n');
  auto e = split(expected, '\n');
  for (size_t i = 0; i < std::max(a.size(), e.size()); ++i) {
    std::string got = i < a.size() ? a[i] : "<missing>";
    std::string want = i < e.size() ? e[i] : "<missing>";
    if (got != want)
      throw Failure{what + ": first difference at line " + std::to_string(i + 1) + "\n  got:  " +
                    got + "\n  want: " + want};
  }
  throw Failure{what + ": outputs differ"};
}

// --- criteria ---------------------------------------------------------------

// Worked distance example: exact value and the printed bottom row.
void criterion_1() {
  auto t0 = Clock::now();
  unsigned d = levenshtein("compute", "combinatorial");
  auto m = dp_matrix("compute", "combinatorial", MatrixVariant::standard);
  auto elapsed = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  require_eq(d, 9u, "levenshtein(compute, combinatorial) != 9");
  std::vector<unsigned> expected{7, 6, 5, 4, 4, 4, 4, 4, 5, 5, 6, 7, 8, 9};
  require(m.row(m.rows - 1) == expected, "matrix bottom row mismatch");
  require(elapsed < 1.0, "distance computation took " + std::to_string(elapsed) + " ms");
}

// Substring (free prefix) variant against brute force over all substrings.
void criterion_2() {
  require_eq(substring_distance("compute", "combinatorial"), 4u,
             "substring_distance(compute, combinatorial) != 4");
  require_eq(oracle::substring_bruteforce("compute", "combinatorial"), 4u,
             "brute-force substring minimum != 4");
}

// Exhaustive oracle agreement over a 4-symbol alphabet plus metric axioms.
void criterion_3() {
  auto short_strings = oracle::all_strings("abcd", 3);
  for (const auto& x : short_strings)
    for (const auto& y : short_strings)
      require(levenshtein(x, y) == oracle::lev_recursive_plain(x, y),
              "plain recursion disagrees on (" + x + ", " + y + ")");

  auto strings = oracle::all_strings("abcd", 6);
  std::vector<std::vector<char32_t>> decoded(strings.size());
  for (size_t i = 0; i < strings.size(); ++i) decoded[i] = decode_utf8(strings[i]);

  std::vector<int> memo(7 * 7);
  for (size_t i = 0; i < strings.size(); ++i) {
    for (size_t j = 0; j < strings.size(); ++j) {
      std::fill(memo.begin(), memo.end(), -1);
      unsigned expected = oracle::lev_memo_impl(decoded[i], decoded[j], 0, 0, memo, 7);
      unsigned actual =
          levenshtein(std::span<const char32_t>(decoded[i]), std::span<const char32_t>(decoded[j]));
      if (actual != expected)
        throw Failure{"recursive definition disagrees on (" + strings[i] + ", " + strings[j] + ")"};
    }
  }

  std::mt19937 rng(2718);
  std::uniform_int_distribution<size_t> len_dist(0, 16);
  std::uniform_int_distribution<int> ch_dist(0, 5);
  auto random_string = [&]() {
    std::string s;
    size_t len = len_dist(rng);
    for (size_t i = 0; i < len; ++i) s += static_cast<char>('a' + ch_dist(rng));
    return s;
  };
  for (int iter = 0; iter < 10000; ++iter) {
    std::string x = random_string(), y = random_string(), z = random_string();
    unsigned dxy = levenshtein(x, y);
    require(dxy == levenshtein(y, x), "symmetry violated");
    require(levenshtein(x, x) == 0, "identity violated");
    if (dxy == 0) require(x == y, "zero distance for distinct strings");
    require(dxy <= levenshtein(x, z) + levenshtein(z, y), "triangle inequality violated");
  }
}

// The published grouping example: five spellings, one group.
void criterion_4() {
  LabelDocs docs;
  const std::vector<std::string> spellings{
      "combinatorial optimization", "combinatorial optimizations", "combinatorial optimisation",
      "combinatorial optimisations", "combinatoric optimization"};
  for (size_t i = 0; i < spellings.size(); ++i) {
    size_t copies = i == 0 ? 4 : 1;
    for (size_t c = 0; c < copies; ++c)
      docs[spellings[i]].insert("doc" + std::to_string(i * 10 + c));
  }
  docs["simulated annealing"].insert("docA");
  docs["genetic algorithm"].insert("docB");
  docs["tabu search"].insert("docC");

  auto groups = group_keywords(docs, GroupingPolicy{});
  require_eq(groups.size(), size_t{4}, "expected 4 groups");
  require_eq(groups[0].canonical_label, std::string("combinatorial optimization"),
             "wrong canonical label");
  require_eq(groups[0].variants.size(), size_t{5}, "expected 5 grouped spellings");
  for (const auto& g : groups) {
    if (g.variants.count("simulated annealing"))
      require_eq(g.variants.size(), size_t{1}, "simulated annealing merged with another label");
  }
}

// Partition equality with the brute-force closure, and order invariance.
void criterion_5() {
  std::mt19937 rng(31415);
  GroupingPolicy policy;
  for (int instance = 0; instance < 100; ++instance) {
    size_t n = 50 + rng() % 151;  // up to 200 labels
    auto labels = testgen::random_labels(rng, n);
    auto expected = oracle::grouping_bruteforce(labels, policy.tier1_min_len,
                                                policy.tier1_max_dist, policy.tier2_min_len,
                                                policy.tier2_max_dist);
    LabelDocs docs;
    for (size_t i = 0; i < labels.size(); ++i) docs[labels[i]].insert("d" + std::to_string(i));
    auto groups = group_keywords(docs, policy);

    std::vector<std::set<std::string>> partition;
    for (const auto& g : groups) {
      std::set<std::string> members;
      for (const auto& [label, count] : g.variants) members.insert(label);
      partition.push_back(std::move(members));
    }
    std::sort(partition.begin(), partition.end());
    require(partition == expected, "partition mismatch on instance " + std::to_string(instance));

    std::vector<std::pair<std::string, std::set<std::string>>> items(docs.begin(), docs.end());
    for (int perm = 0; perm < 20; ++perm) {
      std::shuffle(items.begin(), items.end(), rng);
      auto shuffled = group_keywords(items, policy);
      require(shuffled.size() == groups.size(), "permutation changed the group count");
      for (size_t g = 0; g < groups.size(); ++g) {
        require(shuffled[g].canonical_label == groups[g].canonical_label &&
                    shuffled[g].variants == groups[g].variants,
                "permutation changed the output");
      }
    }
  }
}

// h/g definition scans and the published m-index anchor.
void criterion_6() {
  std::mt19937 rng(161803);
  std::uniform_int_distribution<size_t> n_dist(0, 50);
  std::uniform_int_distribution<int> c_dist(0, 200);
  for (int iter = 0; iter < 10000; ++iter) {
    std::vector<int> v(n_dist(rng));
    for (int& c : v) c = c_dist(rng);
    int h = h_index(v);
    int g = g_index(v);
    require(h == oracle::h_bruteforce(v), "h-index disagrees with the definition scan");
    require(g == oracle::g_bruteforce(v), "g-index disagrees with the definition scan");
    require(0 <= h && h <= g && g <= static_cast<int>(v.size()), "h <= g <= n violated");
  }
  require_eq(format_fixed(m_index(104, 1990, 2019), 2), std::string("3.47"),
             "m_index(104, 1990, 2019) != 3.47");
}

// Trend buckets at the published boundaries and the worked average.
void criterion_7() {
  std::map<std::string, std::optional<double>> avgs{
      {"a0", 0.0}, {"a20", 20.0}, {"a20_01", 20.01}, {"a50", 50.0},
      {"a80", 80.0}, {"a100", 100.0}};
  auto classes = classify(avgs);
  require_eq(classes.at("a0").glyph, std::string("→"), "0 -> right arrow");
  require_eq(classes.at("a20").glyph, std::string("→"), "20 -> right arrow");
  require_eq(classes.at("a20_01").glyph, std::string("↗"), "20.01 -> north east arrow");
  require_eq(classes.at("a50").glyph, std::string("↑"), "50 -> up arrow");
  require_eq(classes.at("a80").glyph, std::string("↑↑"), "80 -> double up arrow");
  require_eq(classes.at("a100").glyph, std::string("↑↑↑"), "100 -> triple up arrow");

  std::map<int, std::size_t> counts{{2015, 10}, {2016, 12}, {2017, 9}, {2018, 9}, {2019, 18}};
  auto avg = avg_growth(counts, YearWindow{2015, 2019});
  require(avg.has_value(), "worked sequence must be defined");
  require(std::abs(*avg - 23.75) < 1e-9, "worked sequence average != 23.75");
}

// Structural invariants of matrices and edge lists on random corpora.
void criterion_8() {
  std::mt19937 rng(7321);
  for (int iter = 0; iter < 100; ++iter) {
    auto corpus = testgen::random_corpus(rng, 20 + rng() % 40);

    auto labels = extract_keywords(corpus, KeywordSource::author_keywords);
    auto groups = group_keywords(labels, GroupingPolicy{});
    auto matrix = cooccurrence(groups, 10);
    for (size_t i = 0; i < matrix.labels.size(); ++i) {
      require(matrix.at(i, i) == groups[i].occurrences, "diagonal != occurrences");
      for (size_t j = 0; j < matrix.labels.size(); ++j) {
        require(matrix.at(i, j) == matrix.at(j, i), "matrix not symmetric");
        if (i != j)
          require(matrix.at(i, j) <= std::min(matrix.at(i, i), matrix.at(j, j)),
                  "off-diagonal exceeds a diagonal");
      }
    }

    for (auto kind : {EntityKind::country, EntityKind::organization, EntityKind::author}) {
      auto edges = collaboration_edges(corpus, kind);
      auto docs = entity_documents(corpus, kind);
      for (const auto& e : edges.edges) {
        const auto& a = docs.at(e.a);
        const auto& b = docs.at(e.b);
        std::vector<std::string> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
        require(e.weight == inter.size(), "edge weight != docset intersection");
      }
    }
  }
}

// Golden end-to-end run over the bundled synthetic export.
void criterion_9() {
  auto t0 = Clock::now();

  std::ifstream wos(fixture_path("corpus_wos.txt"), std::ios::binary);
  require(static_cast<bool>(wos), "missing corpus_wos.txt fixture");
  auto parsed = parse_wos(wos);
  require(parsed.warnings.empty(), "fixture parse produced warnings");
  require_eq(parsed.corpus.documents.size(), size_t{60}, "fixture must hold 60 documents");

  CorpusFilter f;
  f.years = YearRange{1990, 2019};
  f.doc_types = {"Article"};
  f.languages = {"English"};
  Corpus corpus = dedupe(filter(parsed.corpus, f));
  require_eq(corpus.documents.size(), size_t{60}, "filter/dedupe must keep all 60 documents");

  std::ifstream gerd_file(fixture_path("gerd.csv"));
  auto gerd = read_gerd_csv(gerd_file);

  auto report = build_entity_report(corpus, EntityKind::country, default_analysis_year(corpus),
                                    YearWindow{2015, 2019}, gerd);
  require_identical(entity_report_csv(report),
                    read_file(fixture_path("golden/country_report.csv")), "country report");

  auto labels = extract_keywords(corpus, KeywordSource::author_keywords);
  auto groups = group_keywords(labels, GroupingPolicy{});
  annotate_stats(groups, corpus);
  require_identical(keyword_table_csv(groups),
                    read_file(fixture_path("golden/keyword_groups.csv")), "keyword group table");

  auto edges = collaboration_edges(corpus, EntityKind::organization);
  std::map<std::string, std::size_t> pubs;
  for (const auto& [id, uids] : entity_documents(corpus, EntityKind::organization))
    pubs[id] = uids.size();
  auto filtered = filter_network(edges, pubs, 20, 3, 5);
  require_identical(export_graph(filtered, GraphFormat::dot),
                    read_file(fixture_path("golden/org_network.dot")), "organization network");

  auto elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  require(elapsed < 5.0, "end-to-end run took " + std::to_string(elapsed) + " s");
}

// Grouping throughput on 10k labels plus pruned-vs-unpruned equality.
void criterion_10() {
  std::mt19937 rng(424242);
  auto labels = testgen::random_labels(rng, 10000, 0.2);
  LabelDocs docs;
  for (size_t i = 0; i < labels.size(); ++i) docs[labels[i]].insert("d" + std::to_string(i));

  auto t0 = Clock::now();
  auto groups = group_keywords(docs, GroupingPolicy{});
  auto elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  require(elapsed < 60.0, "grouping 10k labels took " + std::to_string(elapsed) + " s");
  require(!groups.empty(), "grouping produced no groups");

  // 1000-label subsample: the pruned path must match the unpruned reference.
  std::vector<std::string> sample(labels.begin(), labels.begin() + 1000);
  GroupingPolicy policy;
  auto expected = oracle::grouping_bruteforce(sample, policy.tier1_min_len, policy.tier1_max_dist,
                                              policy.tier2_min_len, policy.tier2_max_dist);
  LabelDocs sample_docs;
  for (size_t i = 0; i < sample.size(); ++i) sample_docs[sample[i]].insert("d" + std::to_string(i));
  auto sample_groups = group_keywords(sample_docs, policy);
  std::vector<std::set<std::string>> partition;
  for (const auto& g : sample_groups) {
    std::set<std::string> members;
    for (const auto& [label, count] : g.variants) members.insert(label);
    partition.push_back(std::move(members));
  }
  std::sort(partition.begin(), partition.end());
  require(partition == expected, "pruned grouping differs from the unpruned reference");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria{
      {"1. worked distance example and printed bottom row", criterion_1},
      {"2. substring variant equals brute-force minimum", criterion_2},
      {"3. exhaustive recursive-definition oracle and metric axioms", criterion_3},
      {"4. spelling-variant grouping fixture", criterion_4},
      {"5. grouping closure oracle and order invariance", criterion_5},
      {"6. h/g definition scans and m-index anchor", criterion_6},
      {"7. trend quantization boundaries and worked average", criterion_7},
      {"8. co-occurrence and collaboration invariants", criterion_8},
      {"9. golden end-to-end on the bundled corpus", criterion_9},
      {"10. grouping throughput with pruning", criterion_10},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    auto t0 = Clock::now();
    try {
      criterion.run();
      auto ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      std::printf("[PASS] %s (%.1f ms)\n", criterion.name, ms);
    } catch (const Failure& f) {
      ++failures;
      std::printf("[FAIL] %s: %s\n", criterion.name, f.message.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] %s: unexpected exception: %s\n", criterion.name, e.what());
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
