#include "biblioforge/strdist.hpp"

#include <algorithm>
#include <limits>

#include "biblioforge/util.hpp"

namespace biblioforge {

unsigned levenshtein(std::span<const char32_t> x, std::span<const char32_t> y) {
  const std::size_t m = x.size(), n = y.size();
  if (m == 0) return static_cast<unsigned>(n);
  if (n == 0) return static_cast<unsigned>(m);

  std::vector<unsigned> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = static_cast<unsigned>(j);

  for (std::size_t i = 1; i <= m; ++i) {
    unsigned diag = row[0];
    row[0] = static_cast<unsigned>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      unsigned up = row[j];
      unsigned sub = diag + (x[i - 1] == y[j - 1] ? 0u : 1u);
      row[j] = std::min({row[j - 1] + 1, up + 1, sub});
      diag = up;
    }
  }
  return row[n];
}

unsigned levenshtein(std::string_view x, std::string_view y) {
  const auto cx = decode_utf8(x);
  const auto cy = decode_utf8(y);
  return levenshtein(std::span<const char32_t>(cx), std::span<const char32_t>(cy));
}

std::optional<unsigned> levenshtein_bounded(std::span<const char32_t> x,
                                            std::span<const char32_t> y, unsigned k) {
  const std::size_t m = x.size(), n = y.size();
  const std::size_t diff = m > n ? m - n : n - m;
  if (diff > k) return std::nullopt;
  // The distance never exceeds max(m, n); a wider band adds nothing.
  k = static_cast<unsigned>(std::min<std::size_t>(k, std::max(m, n)));

  const unsigned inf = k + 1;
  std::vector<unsigned> row(n + 1, inf);
  // Row 0 inside the band only; cells past the band stay at inf.
  for (std::size_t j = 0; j <= std::min<std::size_t>(n, k); ++j)
    row[j] = static_cast<unsigned>(j);

  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t lo = i > k ? i - k : 0;
    const std::size_t hi = std::min(n, i + k);
    unsigned diag;
    unsigned best = inf;
    if (lo == 0) {
      diag = row[0];
      row[0] = i <= k ? static_cast<unsigned>(i) : inf;
      best = row[0];
    } else {
      diag = row[lo - 1];
      row[lo - 1] = inf;  // column fell out of the band
    }
    for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
      unsigned up = row[j];
      unsigned v = diag >= inf ? inf : diag + (x[i - 1] == y[j - 1] ? 0u : 1u);
      if (up < inf && up + 1 < v) v = up + 1;
      if (row[j - 1] < inf && row[j - 1] + 1 < v) v = row[j - 1] + 1;
      row[j] = std::min(v, inf);
      diag = up;
      best = std::min(best, row[j]);
    }
    if (hi < n) row[hi + 1] = inf;
    if (best >= inf) return std::nullopt;
  }
  return row[n] <= k ? std::optional<unsigned>(row[n]) : std::nullopt;
}

std::optional<unsigned> levenshtein_bounded(std::string_view x, std::string_view y, unsigned k) {
  const auto cx = decode_utf8(x);
  const auto cy = decode_utf8(y);
  return levenshtein_bounded(std::span<const char32_t>(cx), std::span<const char32_t>(cy), k);
}

unsigned substring_distance(std::string_view pattern, std::string_view text) {
  const auto x = decode_utf8(pattern);
  const auto y = decode_utf8(text);
  const std::size_t m = x.size(), n = y.size();
  if (m == 0) return 0;

  std::vector<unsigned> row(n + 1, 0);  // free prefix: row 0 all zero
  for (std::size_t i = 1; i <= m; ++i) {
    unsigned diag = row[0];
    row[0] = static_cast<unsigned>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      unsigned up = row[j];
      unsigned sub = diag + (x[i - 1] == y[j - 1] ? 0u : 1u);
      row[j] = std::min({row[j - 1] + 1, up + 1, sub});
      diag = up;
    }
  }
  return *std::min_element(row.begin(), row.end());
}

DistanceMatrix dp_matrix(std::string_view x, std::string_view y, MatrixVariant variant) {
  const auto cx = decode_utf8(x);
  const auto cy = decode_utf8(y);
  const std::size_t m = cx.size(), n = cy.size();

  DistanceMatrix mat;
  mat.x = std::string(x);
  mat.y = std::string(y);
  mat.variant = variant;
  mat.rows = m + 1;
  mat.cols = n + 1;
  mat.cells.assign(mat.rows * mat.cols, 0);

  auto cell = [&](std::size_t i, std::size_t j) -> unsigned& { return mat.cells[i * mat.cols + j]; };

  for (std::size_t j = 0; j <= n; ++j)
    cell(0, j) = variant == MatrixVariant::standard ? static_cast<unsigned>(j) : 0u;
  for (std::size_t i = 1; i <= m; ++i) cell(i, 0) = static_cast<unsigned>(i);

  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      unsigned sub = cell(i - 1, j - 1) + (cx[i - 1] == cy[j - 1] ? 0u : 1u);
      cell(i, j) = std::min({cell(i, j - 1) + 1, cell(i - 1, j) + 1, sub});
    }
  }
  return mat;
}

std::vector<unsigned> DistanceMatrix::row(std::size_t i) const {
  return std::vector<unsigned>(cells.begin() + static_cast<std::ptrdiff_t>(i * cols),
                               cells.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
}

std::string DistanceMatrix::to_csv() const {
  const auto cx = decode_utf8(x);
  const auto cy = decode_utf8(y);
  // Re-encode one scalar back to UTF-8 for the labels.
  auto encode = [](char32_t cp) {
    std::string s;
    if (cp < 0x80) {
      s += static_cast<char>(cp);
    } else if (cp < 0x800) {
      s += static_cast<char>(0xC0 | (cp >> 6));
      s += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      s += static_cast<char>(0xE0 | (cp >> 12));
      s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      s += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      s += static_cast<char>(0xF0 | (cp >> 18));
      s += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      s += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return s;
  };

  std::string out = ",";
  for (char32_t c : cy) {
    out += ',';
    out += csv_escape(encode(c));
  }
  out += '\n';
  for (std::size_t i = 0; i < rows; ++i) {
    if (i == 0) {
      // no row label for the empty prefix
    } else {
      out += csv_escape(encode(cx[i - 1]));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      out += ',';
      out += std::to_string(at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace biblioforge
