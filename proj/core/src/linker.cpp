#include "histograph/linker.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "histograph/error.hpp"
#include "histograph/ingest.hpp"
#include "histograph/text.hpp"

namespace histograph {

namespace {

bool starts_digit(std::string_view s, std::size_t at) { return s.size() > at && s[at] >= '0' && s[at] <= '9'; }

bool has_space(std::string_view s) { return s.find(' ') != std::string_view::npos; }

// "V23", "V12A"; not "VIROLOGY"
bool volume_segment(std::string_view s) { return s.size() >= 2 && s[0] == 'V' && starts_digit(s, 1) && !has_space(s); }

bool page_segment(std::string_view s) { return s.size() >= 2 && s[0] == 'P' && starts_digit(s, 1) && !has_space(s); }

bool same_designation(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  if (!a || !b) return !a && !b;
  return text::compare_numeric_text(*a, *b) == 0;
}

std::string author_year_key(std::string_view author, Year year) {
  return std::string(author) + '\x1f' + std::to_string(year);
}

using GroupKey = std::tuple<std::string, Year, std::string, std::string, std::string, std::string>;

GroupKey group_key(const CitedRef& r) {
  const bool parsed = r.author || r.year || r.source || r.volume || r.page;
  return {r.author.value_or(""), r.year.value_or(0), r.source.value_or(""), r.volume.value_or(""),
          r.page.value_or(""), parsed ? std::string() : r.raw};
}

}  // namespace

CitedRef parse_cited_ref(std::string_view raw) {
  CitedRef ref;
  ref.raw = std::string(text::trim(raw));
  std::vector<std::string_view> rest;
  for (auto seg : text::split(ref.raw, ',')) {
    seg = text::trim(seg);
    if (seg.empty()) continue;
    if (!ref.year && seg.size() == 4 && text::parse_uint(seg)) {
      ref.year = static_cast<Year>(*text::parse_uint(seg));
    } else if (!ref.volume && !rest.empty() && volume_segment(seg)) {
      ref.volume = std::string(seg.substr(1));
    } else if (!ref.page && !rest.empty() && page_segment(seg)) {
      ref.page = std::string(seg.substr(1));
    } else if (seg.starts_with("DOI ")) {
      continue;
    } else {
      rest.push_back(seg);
    }
  }
  if (!rest.empty()) {
    auto author = normalize_author(rest[0]);
    if (!author.empty()) ref.author = std::move(author);
  }
  if (rest.size() > 1) ref.source = text::collapse_whitespace(rest[1]);
  return ref;
}

std::string format_cited_ref(const CitedRef& ref) {
  std::vector<std::string> parts;
  if (ref.author) parts.push_back(*ref.author);
  if (ref.year) parts.push_back(std::to_string(*ref.year));
  if (ref.source) parts.push_back(*ref.source);
  if (ref.volume) parts.push_back("V" + *ref.volume);
  if (ref.page) parts.push_back("P" + *ref.page);
  if (parts.empty()) return ref.raw;
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += ", " + parts[i];
  return out;
}

CitationGraph::CitationGraph(std::size_t node_count, std::vector<Edge> edges, std::vector<OuterCitation> outer_pool)
    : node_count_(node_count), outer_(std::move(outer_pool)) {
  for (const auto& e : edges) {
    check(e.citing);
    check(e.cited);
    if (e.citing == e.cited) throw DataError("self-citation edge at node " + std::to_string(e.citing));
  }
  for (const auto& o : outer_) check(o.citing);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  out_offset_.assign(node_count_ + 2, 0);
  in_offset_.assign(node_count_ + 2, 0);
  for (const auto& e : edges_) {
    ++out_offset_[e.citing + 1];
    ++in_offset_[e.cited + 1];
  }
  for (std::size_t i = 1; i < out_offset_.size(); ++i) {
    out_offset_[i] += out_offset_[i - 1];
    in_offset_[i] += in_offset_[i - 1];
  }
  out_.resize(edges_.size());
  in_.resize(edges_.size());
  auto out_fill = out_offset_;
  auto in_fill = in_offset_;
  // edges_ is sorted by (citing, cited): out lists come out ascending
  for (const auto& e : edges_) out_[out_fill[e.citing]++] = e.cited;
  for (const auto& e : edges_) in_[in_fill[e.cited]++] = e.citing;
  for (NodeId v = 1; v <= node_count_; ++v) {
    std::sort(in_.begin() + static_cast<std::ptrdiff_t>(in_offset_[v]),
              in_.begin() + static_cast<std::ptrdiff_t>(in_offset_[v + 1]));
  }
}

void CitationGraph::check(NodeId v) const {
  if (v < 1 || v > node_count_) {
    throw DataError("node id " + std::to_string(v) + " outside 1.." + std::to_string(node_count_));
  }
}

std::span<const NodeId> CitationGraph::out_neighbors(NodeId v) const {
  check(v);
  return std::span<const NodeId>(out_).subspan(out_offset_[v], out_offset_[v + 1] - out_offset_[v]);
}

std::span<const NodeId> CitationGraph::in_neighbors(NodeId v) const {
  check(v);
  return std::span<const NodeId>(in_).subspan(in_offset_[v], in_offset_[v + 1] - in_offset_[v]);
}

bool CitationGraph::has_edge(NodeId citing, NodeId cited) const {
  if (citing < 1 || citing > node_count_) return false;
  auto out = out_neighbors(citing);
  return std::binary_search(out.begin(), out.end(), cited);
}

bool exact_match(const CitedRef& ref, const SourceRecord& target) {
  if (!ref.author || !ref.year) return false;
  if (*ref.author != target.first_author() || *ref.year != target.pub_year) return false;
  if (!ref.volume && !ref.page) return false;
  return same_designation(ref.volume, target.volume) && same_designation(ref.page, target.begin_page);
}

namespace {

class AuthorYearIndex {
 public:
  explicit AuthorYearIndex(const Collection& c) {
    for (const auto& r : c.records()) index_[author_year_key(r.first_author(), r.pub_year)].push_back(r.node_id);
  }

  std::span<const NodeId> candidates(const CitedRef& ref) const {
    if (!ref.author || !ref.year) return {};
    auto it = index_.find(author_year_key(*ref.author, *ref.year));
    if (it == index_.end()) return {};
    return it->second;
  }

 private:
  std::unordered_map<std::string, std::vector<NodeId>> index_;
};

}  // namespace

CitationGraph link_citations(const Collection& c) {
  AuthorYearIndex index(c);
  std::vector<Edge> edges;
  std::vector<OuterCitation> outer;
  for (const auto& r : c.records()) {
    for (const auto& raw : r.cited_refs) {
      auto ref = parse_cited_ref(raw);
      NodeId hit = 0;
      for (NodeId v : index.candidates(ref)) {
        if (v != r.node_id && exact_match(ref, c.node(v))) {
          hit = v;
          break;
        }
      }
      if (hit) {
        edges.push_back({r.node_id, hit});
      } else {
        outer.push_back({r.node_id, std::move(ref)});
      }
    }
  }
  return CitationGraph(c.size(), std::move(edges), std::move(outer));
}

std::vector<MissingLink> find_missing_links(const Collection& c, const CitationGraph& g, int page_tolerance) {
  AuthorYearIndex index(c);
  std::vector<MissingLink> found;
  std::set<std::tuple<NodeId, NodeId, std::string>> seen;
  for (const auto& o : g.outer_pool()) {
    for (NodeId v : index.candidates(o.ref)) {
      if (v == o.citing || g.has_edge(o.citing, v)) continue;
      const auto& target = c.node(v);
      if (o.ref.volume && !same_designation(o.ref.volume, target.volume)) continue;
      if (o.ref.page) {
        if (!target.begin_page) continue;
        auto a = text::parse_uint(*o.ref.page);
        auto b = text::parse_uint(*target.begin_page);
        if (a && b) {
          if (std::max(*a, *b) - std::min(*a, *b) > page_tolerance) continue;
        } else if (*o.ref.page != *target.begin_page) {
          continue;
        }
      }
      if (seen.emplace(o.citing, v, o.ref.raw).second) found.push_back({o.citing, o.ref, v});
    }
  }
  std::sort(found.begin(), found.end(), [](const MissingLink& a, const MissingLink& b) {
    return std::tie(a.citing, a.candidate, a.ref.raw) < std::tie(b.citing, b.candidate, b.ref.raw);
  });
  return found;
}

std::vector<OuterReference> outer_references(const CitationGraph& g) {
  struct Group {
    const CitedRef* representative = nullptr;
    std::set<NodeId> citing;
  };
  std::map<GroupKey, Group> groups;
  for (const auto& o : g.outer_pool()) {
    auto& grp = groups[group_key(o.ref)];
    if (!grp.representative) grp.representative = &o.ref;
    grp.citing.insert(o.citing);
  }
  std::vector<std::pair<const GroupKey*, OuterReference>> rows;
  rows.reserve(groups.size());
  for (const auto& [key, grp] : groups) {
    CitedRef ref = *grp.representative;
    ref.raw = format_cited_ref(ref);
    rows.push_back({&key, OuterReference{std::move(ref), grp.citing.size()}});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second.citing_records != b.second.citing_records)
      return a.second.citing_records > b.second.citing_records;
    const auto& ka = *a.first;
    const auto& kb = *b.first;
    // year first, then author; remaining key fields keep the order total
    return std::tie(std::get<1>(ka), std::get<0>(ka), ka) < std::tie(std::get<1>(kb), std::get<0>(kb), kb);
  });
  std::vector<OuterReference> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(std::move(row.second));
  return out;
}

std::vector<std::vector<NodeId>> reference_levels(const CitationGraph& g, NodeId node, std::size_t depth) {
  if (node < 1 || node > g.node_count()) {
    throw DataError("node id " + std::to_string(node) + " outside 1.." + std::to_string(g.node_count()));
  }
  std::vector<std::vector<NodeId>> levels;
  std::set<NodeId> current;
  for (NodeId v : g.out_neighbors(node)) current.insert(v);
  std::vector<NodeId> frontier(current.begin(), current.end());
  levels.emplace_back(current.begin(), current.end());
  for (std::size_t i = 0; i < depth; ++i) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId v : g.out_neighbors(u)) {
        if (v != node && current.insert(v).second) next.push_back(v);
      }
    }
    // only newly added nodes can contribute new out-neighbours
    frontier = std::move(next);
    levels.emplace_back(current.begin(), current.end());
  }
  return levels;
}

}  // namespace histograph
