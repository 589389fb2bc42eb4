#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "histograph/indicators.hpp"
#include "histograph/linker.hpp"
#include "histograph/record.hpp"

namespace histograph {

/// Which score the threshold applies to: LCS (local) or GCS (global).
enum class ThresholdScope { local, global };

const char* to_string(ThresholdScope s);

struct Selection {
  std::vector<NodeId> nodes;  // ascending
  std::vector<Edge> links;    // edges of the graph with both endpoints selected
};

/// Nodes whose score is >= threshold. Throws DataError for a negative threshold.
Selection select_subgraph(const CitationGraph& g, const std::vector<NodeMetrics>& metrics, std::int64_t threshold,
                          ThresholdScope scope);

struct LayoutNode {
  NodeId id = 0;
  Year year = 0;
  std::string first_author;
  std::size_t lcs = 0;  // in-degree in the full graph
  double radius = 0;
};

struct YearRow {
  Year year = 0;
  std::vector<NodeId> nodes;  // ascending; empty for years without selected nodes
};

struct HistoriographSpec {
  std::int64_t threshold = 0;
  ThresholdScope scope = ThresholdScope::global;
  std::vector<LayoutNode> nodes;  // ascending id
  std::vector<Edge> links;
  std::vector<YearRow> rows;  // every year from the first to the last selected year

  const LayoutNode& node(NodeId id) const;
};

inline constexpr double kMinRadius = 4.0;
inline constexpr double kRadiusPerSqrtCitation = 6.0;

/// Circle radius for a node cited `lcs` times: area grows linearly with lcs,
/// never below kMinRadius.
double node_radius(std::size_t lcs);

HistoriographSpec layout_yearly(const Selection& sel, const Collection& c, const CitationGraph& g,
                                std::int64_t threshold = 0, ThresholdScope scope = ThresholdScope::global);

/// Arrows point from the citing node to the cited one. One rank=same group per
/// non-empty year. Same-year links carry constraint=false.
std::string emit_dot(const HistoriographSpec& spec);

/// Static grid drawing: one row per year, fixed row height and column pitch.
std::string emit_svg(const HistoriographSpec& spec);

/// Knowledge-flow edges (cited -> citing) restricted to strictly increasing years.
std::vector<Edge> flow_dag(const Collection& c, const CitationGraph& g);

struct SearchPathCounts {
  std::vector<Edge> edges;     // flow edges, sorted
  std::vector<double> weight;  // paths from any source to any sink through edges[i]
  std::vector<double> from_sources;  // per node (index = id): paths from a source ending here
  std::vector<double> to_sinks;      // per node: paths from here to a sink
  double total_paths = 0;            // source-to-sink paths in the DAG
};

/// Search path counts over a flow DAG on nodes 1..node_count. Only nodes that
/// touch an edge take part. Throws DataError if the edges contain a cycle.
SearchPathCounts search_path_counts(std::size_t node_count, std::span<const Edge> flow);

/// Source-to-sink path with the largest total edge weight; among equal totals
/// the lexicographically smallest node sequence. Empty when there are no edges.
std::vector<NodeId> main_path(std::size_t node_count, std::span<const Edge> flow);

/// main_path over flow_dag(c, g), listed oldest first.
std::vector<NodeId> main_path(const Collection& c, const CitationGraph& g);

}  // namespace histograph
