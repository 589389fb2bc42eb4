#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "histograph/record.hpp"

namespace histograph {

/// One cited-reference string split into its positional segments.
struct CitedRef {
  std::string raw;
  std::optional<std::string> author;
  std::optional<Year> year;
  std::optional<std::string> source;
  std::optional<std::string> volume;
  std::optional<std::string> page;

  bool operator==(const CitedRef&) const = default;
};

/// Splits "AUTHOR, YEAR, SOURCE, Vvol, Ppage". Never throws; segments that
/// cannot be read leave their field empty.
CitedRef parse_cited_ref(std::string_view raw);

/// "AUTHOR, YEAR, SOURCE, Vvol, Ppage" from the parsed fields (absent ones
/// skipped); the raw text when nothing was parsed.
std::string format_cited_ref(const CitedRef& ref);

struct Edge {
  NodeId citing = 0;
  NodeId cited = 0;

  auto operator<=>(const Edge&) const = default;
};

/// A cited reference that did not resolve to a collection node.
struct OuterCitation {
  NodeId citing = 0;
  CitedRef ref;
};

/// Directed citation graph over the nodes 1..node_count of a collection.
class CitationGraph {
 public:
  CitationGraph() = default;

  /// Edges are deduplicated and sorted. Throws DataError on self-loops or
  /// endpoints outside 1..node_count.
  CitationGraph(std::size_t node_count, std::vector<Edge> edges, std::vector<OuterCitation> outer_pool = {});

  std::size_t node_count() const { return node_count_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const OuterCitation> outer_pool() const { return outer_; }

  /// Ascending node ids.
  std::span<const NodeId> out_neighbors(NodeId v) const;
  std::span<const NodeId> in_neighbors(NodeId v) const;
  std::size_t out_degree(NodeId v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }
  bool has_edge(NodeId citing, NodeId cited) const;

 private:
  void check(NodeId v) const;

  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<OuterCitation> outer_;
  std::vector<std::size_t> out_offset_, in_offset_;
  std::vector<NodeId> out_, in_;
};

/// Whether `ref` resolves to `target` under the exact-match rule: same first
/// author and year, volume equal (or absent on both), page equal (or absent on
/// both), and at least one of volume/page present.
bool exact_match(const CitedRef& ref, const SourceRecord& target);

/// Resolves every cited reference of every record against the collection.
CitationGraph link_citations(const Collection& c);

inline constexpr int kDefaultPageTolerance = 5;

struct MissingLink {
  NodeId citing = 0;
  CitedRef ref;
  NodeId candidate = 0;
};

/// Outer references that plausibly point at a node: same first author and
/// year, volume equal or absent on the reference, page absent on the reference
/// or within `page_tolerance` of the node's begin page. Pairs already linked
/// are never reported.
std::vector<MissingLink> find_missing_links(const Collection& c, const CitationGraph& g,
                                            int page_tolerance = kDefaultPageTolerance);

struct OuterReference {
  CitedRef ref;                      // representative of the group
  std::size_t citing_records = 0;    // distinct collection records citing it

  std::string label() const { return format_cited_ref(ref); }
};

/// Groups the outer pool by (author, year, source, volume, page). Sorted by
/// citing_records descending, then year, then author.
std::vector<OuterReference> outer_references(const CitationGraph& g);

/// levels[0] = out-neighbours of `node`; levels[i+1] = levels[i] plus their
/// out-neighbours. `node` itself never appears. Returns depth+1 ascending
/// id lists. Throws DataError for an invalid node.
std::vector<std::vector<NodeId>> reference_levels(const CitationGraph& g, NodeId node, std::size_t depth);

}  // namespace histograph
