#include "biblioforge/keywords.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "biblioforge/strdist.hpp"
#include "biblioforge/util.hpp"

namespace biblioforge {

std::string normalize_label(std::string_view raw) {
  std::string s = collapse_whitespace(to_lower_ascii(raw));
  while (!s.empty() && (s.back() == '.' || s.back() == ',')) s.pop_back();
  return trim(s);
}

LabelDocs extract_keywords(const Corpus& corpus, KeywordSource source) {
  LabelDocs out;
  for (const auto& doc : corpus.documents) {
    auto add = [&](const std::vector<std::string>& raw_labels) {
      for (const auto& raw : raw_labels) {
        std::string label = normalize_label(raw);
        if (!label.empty()) out[label].insert(doc.uid);
      }
    };
    add(doc.author_keywords);
    if (source == KeywordSource::author_and_keywords_plus) add(doc.keywords_plus);
  }
  return out;
}

unsigned effective_threshold(std::string_view a, std::string_view b,
                             const GroupingPolicy& policy) {
  const std::size_t len = std::min(decode_utf8(a).size(), decode_utf8(b).size());
  if (len >= policy.tier2_min_len) return policy.tier2_max_dist;
  if (len >= policy.tier1_min_len) return policy.tier1_max_dist;
  return 0;
}

namespace {

unsigned threshold_for_length(std::size_t shorter_len, const GroupingPolicy& policy) {
  if (shorter_len >= policy.tier2_min_len) return policy.tier2_max_dist;
  if (shorter_len >= policy.tier1_min_len) return policy.tier1_max_dist;
  return 0;
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<KeywordGroup> group_keywords(
    std::vector<std::pair<std::string, std::set<std::string>>> labels,
    const GroupingPolicy& policy) {
  // Canonical processing order regardless of caller ordering; duplicate
  // labels merge their document sets.
  std::sort(labels.begin(), labels.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::string, std::set<std::string>>> items;
  for (auto& [label, docs] : labels) {
    if (!items.empty() && items.back().first == label)
      items.back().second.insert(docs.begin(), docs.end());
    else
      items.emplace_back(std::move(label), std::move(docs));
  }

  const std::size_t n = items.size();
  std::vector<std::vector<char32_t>> cps(n);
  for (std::size_t i = 0; i < n; ++i) cps[i] = decode_utf8(items[i].first);

  const unsigned max_dist = std::max(policy.tier1_max_dist, policy.tier2_max_dist);

  // Length buckets: |len(a)-len(b)| > threshold can never link, so each
  // bucket is only compared against buckets within max_dist of it.
  std::map<std::size_t, std::vector<std::size_t>> by_length;
  for (std::size_t i = 0; i < n; ++i) by_length[cps[i].size()].push_back(i);

  UnionFind uf(n);
  for (const auto& [len, bucket] : by_length) {
    for (unsigned dlen = 0; dlen <= max_dist; ++dlen) {
      auto other_it = by_length.find(len + dlen);
      if (other_it == by_length.end()) continue;
      const auto& other = other_it->second;
      const unsigned threshold = threshold_for_length(len, policy);
      if (threshold == 0 || dlen > threshold) continue;
      for (std::size_t a : bucket) {
        for (std::size_t b : other) {
          if (dlen == 0 && b <= a) continue;
          if (uf.find(a) == uf.find(b)) continue;
          auto d = levenshtein_bounded(cps[a], cps[b], threshold);
          if (d && *d <= threshold) uf.unite(a, b);
        }
      }
    }
  }

  std::unordered_map<std::size_t, KeywordGroup> by_root;
  for (std::size_t i = 0; i < n; ++i) {
    KeywordGroup& g = by_root[uf.find(i)];
    g.variants[items[i].first] = items[i].second.size();
    g.doc_ids.insert(items[i].second.begin(), items[i].second.end());
  }

  std::vector<KeywordGroup> groups;
  groups.reserve(by_root.size());
  for (auto& [root, g] : by_root) {
    g.occurrences = g.doc_ids.size();
    // Most frequent variant wins; variants map is ordered, so the first
    // maximum is the lexicographically smallest.
    g.canonical_label = g.variants.begin()->first;
    std::size_t best = g.variants.begin()->second;
    for (const auto& [label, count] : g.variants) {
      if (count > best) {
        best = count;
        g.canonical_label = label;
      }
    }
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end(), [](const KeywordGroup& a, const KeywordGroup& b) {
    if (a.occurrences != b.occurrences) return a.occurrences > b.occurrences;
    return a.canonical_label < b.canonical_label;
  });
  return groups;
}

std::vector<KeywordGroup> group_keywords(const LabelDocs& labels, const GroupingPolicy& policy) {
  std::vector<std::pair<std::string, std::set<std::string>>> items(labels.begin(), labels.end());
  return group_keywords(std::move(items), policy);
}

KeywordStats keyword_stats(const std::set<std::string>& doc_ids, const Corpus& corpus) {
  if (doc_ids.empty()) throw std::invalid_argument("keyword_stats: empty document set");
  std::unordered_map<std::string, const Document*> by_uid;
  by_uid.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) by_uid.emplace(doc.uid, &doc);

  double year_sum = 0.0, cite_sum = 0.0;
  for (const auto& uid : doc_ids) {
    auto it = by_uid.find(uid);
    if (it == by_uid.end())
      throw std::invalid_argument("keyword_stats: unknown document id " + uid);
    year_sum += it->second->pub_year;
    cite_sum += it->second->times_cited;
  }
  KeywordStats stats;
  stats.occurrences = doc_ids.size();
  stats.mean_pub_year = year_sum / static_cast<double>(doc_ids.size());
  stats.mean_citations = cite_sum / static_cast<double>(doc_ids.size());
  return stats;
}

KeywordStats keyword_stats(const KeywordGroup& group, const Corpus& corpus) {
  return keyword_stats(group.doc_ids, corpus);
}

void annotate_stats(std::vector<KeywordGroup>& groups, const Corpus& corpus) {
  std::unordered_map<std::string, const Document*> by_uid;
  by_uid.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) by_uid.emplace(doc.uid, &doc);

  for (auto& g : groups) {
    double year_sum = 0.0, cite_sum = 0.0;
    for (const auto& uid : g.doc_ids) {
      auto it = by_uid.find(uid);
      if (it == by_uid.end())
        throw std::invalid_argument("annotate_stats: unknown document id " + uid);
      year_sum += it->second->pub_year;
      cite_sum += it->second->times_cited;
    }
    if (!g.doc_ids.empty()) {
      g.mean_pub_year = year_sum / static_cast<double>(g.doc_ids.size());
      g.mean_citations = cite_sum / static_cast<double>(g.doc_ids.size());
    }
  }
}

LabelDocs split_words(const LabelDocs& labels, const std::set<std::string>& stopwords) {
  LabelDocs out;
  for (const auto& [label, docs] : labels) {
    std::string current;
    std::vector<std::string> words;
    for (char c : label) {
      if (c == ' ' || c == '-') {
        if (!current.empty()) words.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    if (!current.empty()) words.push_back(current);
    for (const auto& word : words) {
      if (stopwords.count(word)) continue;
      out[word].insert(docs.begin(), docs.end());
    }
  }
  return out;
}

PairCounts shared_occurrence(const LabelDocs& items) {
  PairCounts counts;
  // Invert to doc -> ids so each shared document contributes exactly one
  // increment per unordered pair.
  std::map<std::string, std::vector<const std::string*>> by_doc;
  for (const auto& [id, docs] : items) {
    counts[{id, id}] = docs.size();
    for (const auto& doc : docs) by_doc[doc].push_back(&id);
  }
  for (const auto& [doc, ids] : by_doc) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        ++counts[{*ids[i], *ids[j]}];
  }
  return counts;
}

std::set<std::string> read_stopwords(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string w = normalize_label(line);
    if (!w.empty() && w[0] != '#') words.insert(w);
  }
  return words;
}

}  // namespace biblioforge
