// Independent reference implementations used only by tests. Everything here
// follows the plain definitions (recursive distance, definition scans,
// all-pairs closure) rather than the library's optimized paths.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "biblioforge/util.hpp"

namespace oracle {

// Plain exponential recursion on suffixes; exact definition, no caching.
inline unsigned lev_plain_impl(const std::vector<char32_t>& x, const std::vector<char32_t>& y,
                               size_t i, size_t j) {
  if (i == x.size()) return static_cast<unsigned>(y.size() - j);
  if (j == y.size()) return static_cast<unsigned>(x.size() - i);
  unsigned del = lev_plain_impl(x, y, i + 1, j) + 1;
  unsigned ins = lev_plain_impl(x, y, i, j + 1) + 1;
  unsigned sub = lev_plain_impl(x, y, i + 1, j + 1) + (x[i] == y[j] ? 0 : 1);
  return std::min({del, ins, sub});
}

inline unsigned lev_recursive_plain(std::string_view xs, std::string_view ys) {
  auto x = biblioforge::decode_utf8(xs);
  auto y = biblioforge::decode_utf8(ys);
  return lev_plain_impl(x, y, 0, 0);
}

// Same recursion evaluated with a memo table per call.
inline unsigned lev_memo_impl(const std::vector<char32_t>& x, const std::vector<char32_t>& y,
                              size_t i, size_t j, std::vector<int>& memo, size_t cols) {
  int& slot = memo[i * cols + j];
  if (slot >= 0) return static_cast<unsigned>(slot);
  unsigned result;
  if (i == x.size()) {
    result = static_cast<unsigned>(y.size() - j);
  } else if (j == y.size()) {
    result = static_cast<unsigned>(x.size() - i);
  } else {
    unsigned del = lev_memo_impl(x, y, i + 1, j, memo, cols) + 1;
    unsigned ins = lev_memo_impl(x, y, i, j + 1, memo, cols) + 1;
    unsigned sub = lev_memo_impl(x, y, i + 1, j + 1, memo, cols) + (x[i] == y[j] ? 0 : 1);
    result = std::min({del, ins, sub});
  }
  slot = static_cast<int>(result);
  return result;
}

inline unsigned lev_recursive_memo(std::string_view xs, std::string_view ys) {
  auto x = biblioforge::decode_utf8(xs);
  auto y = biblioforge::decode_utf8(ys);
  std::vector<int> memo((x.size() + 1) * (y.size() + 1), -1);
  return lev_memo_impl(x, y, 0, 0, memo, y.size() + 1);
}

// Minimum distance from pattern to any contiguous substring of text.
inline unsigned substring_bruteforce(std::string_view pattern, std::string_view text) {
  auto t = biblioforge::decode_utf8(text);
  auto p = biblioforge::decode_utf8(pattern);
  unsigned best = static_cast<unsigned>(p.size());  // empty substring
  for (size_t start = 0; start <= t.size(); ++start) {
    for (size_t len = 0; start + len <= t.size(); ++len) {
      std::vector<char32_t> sub(t.begin() + static_cast<std::ptrdiff_t>(start),
                                t.begin() + static_cast<std::ptrdiff_t>(start + len));
      std::vector<int> memo((p.size() + 1) * (sub.size() + 1), -1);
      best = std::min(best, lev_memo_impl(p, sub, 0, 0, memo, sub.size() + 1));
    }
  }
  return best;
}

// Every string over `alphabet` of length 0..max_len.
inline std::vector<std::string> all_strings(std::string_view alphabet, size_t max_len) {
  std::vector<std::string> out{""};
  size_t prev_start = 0;
  for (size_t len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = prev_start; i < end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    prev_start = end;
  }
  return out;
}

// Definition scan: largest h with at least h values >= h.
inline int h_bruteforce(std::vector<int> citations) {
  int n = static_cast<int>(citations.size());
  for (int h = n; h >= 1; --h) {
    int count = 0;
    for (int c : citations)
      if (c >= h) ++count;
    if (count >= h) return h;
  }
  return 0;
}

// Definition scan: largest g <= n whose top-g sum reaches g^2.
inline int g_bruteforce(std::vector<int> citations) {
  std::sort(citations.begin(), citations.end(), std::greater<int>());
  int n = static_cast<int>(citations.size());
  for (int g = n; g >= 1; --g) {
    long long sum = 0;
    for (int i = 0; i < g; ++i) sum += citations[static_cast<size_t>(i)];
    if (sum >= static_cast<long long>(g) * g) return g;
  }
  return 0;
}

// All-pairs direct links plus breadth-first transitive closure. The direct
// link predicate recomputes thresholds and distances from the definitions.
inline std::vector<std::set<std::string>> grouping_bruteforce(
    const std::vector<std::string>& labels, unsigned tier1_min_len, unsigned tier1_max_dist,
    unsigned tier2_min_len, unsigned tier2_max_dist) {
  const size_t n = labels.size();
  std::vector<std::vector<size_t>> adjacency(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      size_t len = std::min(biblioforge::decode_utf8(labels[i]).size(),
                            biblioforge::decode_utf8(labels[j]).size());
      unsigned threshold = 0;
      if (len >= tier2_min_len) threshold = tier2_max_dist;
      else if (len >= tier1_min_len) threshold = tier1_max_dist;
      unsigned d = lev_recursive_memo(labels[i], labels[j]);
      if (d <= threshold) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::set<std::string>> components;
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::set<std::string> component;
    std::vector<size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      size_t v = queue.back();
      queue.pop_back();
      component.insert(labels[v]);
      for (size_t w : adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end());
  return components;
}

}  // namespace oracle
