#include "biblioforge/networks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "biblioforge/util.hpp"

namespace biblioforge {

std::size_t CooccurrenceMatrix::at(std::size_t i, std::size_t j) const {
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  auto it = cells.find(key);
  return it == cells.end() ? 0 : it->second;
}

CooccurrenceMatrix cooccurrence(const std::vector<KeywordGroup>& groups, std::size_t top_k) {
  const std::size_t k = std::min(top_k, groups.size());

  CooccurrenceMatrix matrix;
  LabelDocs docs;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) {
    matrix.labels.push_back(groups[i].canonical_label);
    docs[groups[i].canonical_label] = groups[i].doc_ids;
    index[groups[i].canonical_label] = i;
  }

  for (const auto& [pair, count] : shared_occurrence(docs)) {
    std::size_t i = index.at(pair.first);
    std::size_t j = index.at(pair.second);
    if (count > 0) matrix.cells[{std::min(i, j), std::max(i, j)}] = count;
  }
  return matrix;
}

EdgeList collaboration_edges(const Corpus& corpus, EntityKind kind) {
  EdgeList list;
  list.kind = kind;

  std::map<std::pair<std::string, std::string>, std::size_t> weights;
  for (const auto& doc : corpus.documents) {
    std::set<std::string> entities;
    switch (kind) {
      case EntityKind::author:
        for (const auto& a : doc.authors)
          if (!a.key.empty()) entities.insert(a.key);
        break;
      case EntityKind::country:
        for (const auto& aff : doc.affiliations)
          if (!aff.country.empty() && aff.country != "UNKNOWN") entities.insert(aff.country);
        break;
      case EntityKind::organization:
        for (const auto& aff : doc.affiliations)
          if (!aff.organization.empty()) entities.insert(aff.organization);
        break;
      case EntityKind::source:
        if (!doc.source_title.empty()) entities.insert(doc.source_title);
        break;
    }
    for (auto i = entities.begin(); i != entities.end(); ++i) {
      auto j = i;
      for (++j; j != entities.end(); ++j) ++weights[{*i, *j}];
    }
  }

  list.edges.reserve(weights.size());
  for (const auto& [pair, weight] : weights)
    list.edges.push_back(Edge{pair.first, pair.second, weight});
  return list;
}

EdgeList filter_network(const EdgeList& edges,
                        const std::map<std::string, std::size_t>& entity_pubs,
                        std::size_t top_entities, std::size_t top_edges_per_entity,
                        std::size_t min_weight) {
  // Top set by publication count, ties broken by name.
  std::vector<std::pair<std::string, std::size_t>> ranked(entity_pubs.begin(), entity_pubs.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::set<std::string> top;
  for (std::size_t i = 0; i < ranked.size() && i < top_entities; ++i) top.insert(ranked[i].first);

  std::vector<const Edge*> candidates;
  for (const auto& e : edges.edges) {
    if (top_entities != kNoLimit && (!top.count(e.a) || !top.count(e.b))) continue;
    candidates.push_back(&e);
  }

  // Per endpoint, rank incident edges heaviest first, partner name breaking
  // ties, and keep the leading top_edges_per_entity of each.
  std::set<const Edge*> kept;
  if (top_edges_per_entity == kNoLimit) {
    kept.insert(candidates.begin(), candidates.end());
  } else {
    std::map<std::string, std::vector<const Edge*>> incident;
    for (const Edge* e : candidates) {
      incident[e->a].push_back(e);
      incident[e->b].push_back(e);
    }
    for (auto& [entity, list] : incident) {
      std::sort(list.begin(), list.end(), [&entity = entity](const Edge* x, const Edge* y) {
        if (x->weight != y->weight) return x->weight > y->weight;
        const std::string& px = x->a == entity ? x->b : x->a;
        const std::string& py = y->a == entity ? y->b : y->a;
        return px < py;
      });
      for (std::size_t i = 0; i < list.size() && i < top_edges_per_entity; ++i)
        kept.insert(list[i]);
    }
  }

  EdgeList out;
  out.kind = edges.kind;
  for (const Edge* e : candidates) {
    if (!kept.count(e)) continue;
    if (e->weight < min_weight) continue;
    out.edges.push_back(*e);
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

GraphFormat parse_graph_format(std::string_view name) {
  std::string n = to_lower_ascii(name);
  if (n == "graphml") return GraphFormat::graphml;
  if (n == "dot") return GraphFormat::dot;
  if (n == "csv") return GraphFormat::csv;
  throw std::invalid_argument("unknown graph format: " + std::string(name));
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

const char* kGraphmlHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";

}  // namespace

std::string export_graph(const EdgeList& edges, GraphFormat format) {
  // Deterministic node order: sorted endpoint names.
  std::set<std::string> nodes;
  for (const auto& e : edges.edges) {
    nodes.insert(e.a);
    nodes.insert(e.b);
  }

  switch (format) {
    case GraphFormat::csv: {
      std::string out;
      for (const auto& e : edges.edges)
        out += csv_escape(e.a) + "," + csv_escape(e.b) + "," + std::to_string(e.weight) + "\n";
      return out;
    }
    case GraphFormat::dot: {
      std::string out = "graph collaboration {\n";
      for (const auto& n : nodes) out += "  " + dot_quote(n) + ";\n";
      for (const auto& e : edges.edges)
        out += "  " + dot_quote(e.a) + " -- " + dot_quote(e.b) + " [label=" +
               std::to_string(e.weight) + ", weight=" + std::to_string(e.weight) + "];\n";
      out += "}\n";
      return out;
    }
    case GraphFormat::graphml: {
      std::string out = kGraphmlHeader;
      out += "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n";
      out += "  <graph id=\"collaboration\" edgedefault=\"undirected\">\n";
      for (const auto& n : nodes) out += "    <node id=\"" + xml_escape(n) + "\"/>\n";
      for (const auto& e : edges.edges) {
        out += "    <edge source=\"" + xml_escape(e.a) + "\" target=\"" + xml_escape(e.b) +
               "\"><data key=\"weight\">" + std::to_string(e.weight) + "</data></edge>\n";
      }
      out += "  </graph>\n</graphml>\n";
      return out;
    }
  }
  throw std::invalid_argument("unknown graph format");
}

std::string export_graph(const CooccurrenceMatrix& matrix, GraphFormat format) {
  switch (format) {
    case GraphFormat::csv: {
      // Full square grid, labels as header row and column.
      std::string out;
      for (const auto& label : matrix.labels) out += "," + csv_escape(label);
      out += "\n";
      for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
        out += csv_escape(matrix.labels[i]);
        for (std::size_t j = 0; j < matrix.labels.size(); ++j)
          out += "," + std::to_string(matrix.at(i, j));
        out += "\n";
      }
      return out;
    }
    case GraphFormat::dot: {
      std::string out = "graph cooccurrence {\n";
      for (std::size_t i = 0; i < matrix.labels.size(); ++i)
        out += "  " + dot_quote(matrix.labels[i]) + " [occurrences=" +
               std::to_string(matrix.at(i, i)) + "];\n";
      for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
        for (std::size_t j = i + 1; j < matrix.labels.size(); ++j) {
          std::size_t w = matrix.at(i, j);
          if (w == 0) continue;
          out += "  " + dot_quote(matrix.labels[i]) + " -- " + dot_quote(matrix.labels[j]) +
                 " [label=" + std::to_string(w) + ", weight=" + std::to_string(w) + "];\n";
        }
      }
      out += "}\n";
      return out;
    }
    case GraphFormat::graphml: {
      std::string out = kGraphmlHeader;
      out += "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n";
      out += "  <key id=\"occurrences\" for=\"node\" attr.name=\"occurrences\" attr.type=\"long\"/>\n";
      out += "  <graph id=\"cooccurrence\" edgedefault=\"undirected\">\n";
      for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
        out += "    <node id=\"" + xml_escape(matrix.labels[i]) + "\"><data key=\"occurrences\">" +
               std::to_string(matrix.at(i, i)) + "</data></node>\n";
      }
      for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
        for (std::size_t j = i + 1; j < matrix.labels.size(); ++j) {
          std::size_t w = matrix.at(i, j);
          if (w == 0) continue;
          out += "    <edge source=\"" + xml_escape(matrix.labels[i]) + "\" target=\"" +
                 xml_escape(matrix.labels[j]) + "\"><data key=\"weight\">" + std::to_string(w) +
                 "</data></edge>\n";
        }
      }
      out += "  </graph>\n</graphml>\n";
      return out;
    }
  }
  throw std::invalid_argument("unknown graph format");
}

}  // namespace biblioforge
