#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "biblioforge/trends.hpp"
#include "generators.hpp"

using namespace biblioforge;

namespace {

std::map<int, std::size_t> counts_of(std::initializer_list<std::pair<int, std::size_t>> pairs) {
  return std::map<int, std::size_t>(pairs.begin(), pairs.end());
}

}  // namespace

TEST_CASE("annual_counts zero-fills the window") {
  Corpus corpus;
  corpus.documents.push_back(testgen::simple_doc("a", "A", 2015, 0));
  corpus.documents.push_back(testgen::simple_doc("b", "B", 2015, 0));
  corpus.documents.push_back(testgen::simple_doc("c", "C", 2017, 0));
  corpus.documents.push_back(testgen::simple_doc("d", "D", 2012, 0));  // outside window

  std::set<std::string> docset{"a", "b", "c", "d"};
  auto counts = annual_counts(docset, corpus, YearWindow{2015, 2017});
  CHECK(counts == counts_of({{2015, 2}, {2016, 0}, {2017, 1}}));

  std::size_t total = 0;
  for (const auto& [year, n] : counts) total += n;
  CHECK(total <= docset.size());

  auto empty = annual_counts({}, corpus, YearWindow{2015, 2017});
  CHECK(empty == counts_of({{2015, 0}, {2016, 0}, {2017, 0}}));
}

TEST_CASE("avg_growth matches the worked sequence") {
  auto counts = counts_of({{2015, 10}, {2016, 12}, {2017, 9}, {2018, 9}, {2019, 18}});
  auto avg = avg_growth(counts, YearWindow{2015, 2019});
  REQUIRE(avg.has_value());
  CHECK(*avg == doctest::Approx(23.75).epsilon(1e-12));
}

TEST_CASE("avg_growth edge cases") {
  CHECK(*avg_growth(counts_of({{2015, 4}, {2016, 4}, {2017, 4}}), YearWindow{2015, 2017}) ==
        doctest::Approx(0.0));
  CHECK(!avg_growth(counts_of({{2015, 0}, {2016, 0}}), YearWindow{2015, 2016}).has_value());
  // Zero-base pairs are skipped, not treated as zero growth.
  auto avg = avg_growth(counts_of({{2015, 0}, {2016, 5}, {2017, 10}}), YearWindow{2015, 2017});
  REQUIRE(avg.has_value());
  CHECK(*avg == doctest::Approx(100.0));
  // Missing years count as zero inside the window.
  auto sparse = avg_growth(counts_of({{2015, 5}}), YearWindow{2015, 2016});
  REQUIRE(sparse.has_value());
  CHECK(*sparse == doctest::Approx(-100.0));
}

TEST_CASE("classify reproduces the five-bucket table at maximum 100") {
  std::map<std::string, std::optional<double>> avgs{
      {"a", 0.0}, {"b", 20.0}, {"c", 20.01}, {"d", 50.0},
      {"e", 80.0}, {"f", 100.0}, {"g", std::nullopt}};
  auto classes = classify(avgs);
  CHECK(classes.at("a").glyph == "→");
  CHECK(classes.at("b").glyph == "→");
  CHECK(classes.at("c").glyph == "↗");
  CHECK(classes.at("d").glyph == "↑");
  CHECK(classes.at("e").glyph == "↑↑");
  CHECK(classes.at("f").glyph == "↑↑↑");
  CHECK(classes.at("g").glyph == "—");
  CHECK(classes.at("a").bucket == 0);
  CHECK(classes.at("f").bucket == 4);
  CHECK(!classes.at("g").bucket.has_value());
  CHECK(!classes.at("g").avg_growth_pct.has_value());
}

TEST_CASE("negative averages clamp to the lowest bucket") {
  std::map<std::string, std::optional<double>> avgs{{"down", -10.0}, {"up", 40.0}};
  auto classes = classify(avgs);
  CHECK(classes.at("down").bucket == 0);
  CHECK(classes.at("down").glyph == "→");
  CHECK(classes.at("up").bucket == 4);  // the maximum always lands in bucket 4
}

TEST_CASE("boundary values fall into the lower bucket (right-closed intervals)") {
  for (int k = 1; k <= 4; ++k) {
    std::map<std::string, std::optional<double>> avgs{
        {"max", 100.0}, {"boundary", k * 100.0 / 5.0}};
    auto classes = classify(avgs);
    CHECK(classes.at("boundary").bucket == k - 1);
  }
}

TEST_CASE("all entities non-positive leaves everything in bucket 0") {
  std::map<std::string, std::optional<double>> avgs{{"a", -5.0}, {"b", 0.0}};
  auto classes = classify(avgs);
  CHECK(classes.at("a").bucket == 0);
  CHECK(classes.at("b").bucket == 0);
}

TEST_CASE("buckets are monotone in the average for a fixed maximum") {
  std::mt19937 rng(10);
  for (int iter = 0; iter < 50; ++iter) {
    std::map<std::string, std::optional<double>> avgs{{"max", 100.0}};
    std::vector<std::pair<double, std::string>> values;
    for (int i = 0; i < 10; ++i) {
      double v = static_cast<double>(rng() % 2000) / 10.0 - 50.0;
      v = std::min(v, 100.0);
      std::string id = "e" + std::to_string(i);
      avgs[id] = v;
      values.emplace_back(v, id);
    }
    auto classes = classify(avgs);
    std::sort(values.begin(), values.end());
    for (size_t i = 1; i < values.size(); ++i)
      CHECK(*classes.at(values[i - 1].second).bucket <= *classes.at(values[i].second).bucket);
    // Deterministic on reclassification.
    auto again = classify(avgs);
    for (const auto& [id, t] : classes) CHECK(again.at(id) == t);
  }
}
