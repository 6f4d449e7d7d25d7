#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "biblioforge/keywords.hpp"
#include "biblioforge/metrics.hpp"
#include "biblioforge/util.hpp"

namespace biblioforge {

// Symmetric shared-document counts over a fixed label order. Cells are
// stored once with i <= j; at() accepts either orientation.
struct CooccurrenceMatrix {
  std::vector<std::string> labels;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> cells;

  std::size_t at(std::size_t i, std::size_t j) const;
};

struct Edge {
  std::string a;  // a < b lexicographically
  std::string b;
  std::size_t weight = 0;

  bool operator==(const Edge&) const = default;
};

struct EdgeList {
  EntityKind kind = EntityKind::country;
  std::vector<Edge> edges;  // sorted by (a, b), no duplicates, no self-loops
};

// Matrix over the top_k groups (input order, i.e. occurrences-descending);
// diagonal = group occurrences. top_k beyond the group count uses all.
CooccurrenceMatrix cooccurrence(const std::vector<KeywordGroup>& groups, std::size_t top_k);

// One increment per document for every unordered pair of distinct entities
// attributed to it, so a weight equals the number of shared documents.
EdgeList collaboration_edges(const Corpus& corpus, EntityKind kind);

// Keeps the top_entities most productive entities (by the supplied
// publication totals), then each entity's top_edges_per_entity heaviest
// incident edges (weight descending, partner ascending on ties); an edge
// survives when either endpoint keeps it and its weight reaches min_weight.
EdgeList filter_network(const EdgeList& edges,
                        const std::map<std::string, std::size_t>& entity_pubs,
                        std::size_t top_entities, std::size_t top_edges_per_entity,
                        std::size_t min_weight);

enum class GraphFormat { graphml, dot, csv };

GraphFormat parse_graph_format(std::string_view name);  // throws on unknown

// GraphML with a weight attribute, Graphviz DOT with labelled undirected
// edges, or plain `a,b,weight` CSV rows. The matrix overload additionally
// renders CSV as a full square grid with header row and column.
std::string export_graph(const EdgeList& edges, GraphFormat format);
std::string export_graph(const CooccurrenceMatrix& matrix, GraphFormat format);

}  // namespace biblioforge
