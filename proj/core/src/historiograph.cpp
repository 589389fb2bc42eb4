#include "histograph/historiograph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "histograph/error.hpp"
#include "histograph/text.hpp"

namespace histograph {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

const char* to_string(ThresholdScope s) { return s == ThresholdScope::local ? "local" : "global"; }

Selection select_subgraph(const CitationGraph& g, const std::vector<NodeMetrics>& metrics, std::int64_t threshold,
                          ThresholdScope scope) {
  if (threshold < 0) throw DataError("threshold must be nonnegative");
  if (metrics.size() != g.node_count()) throw DataError("node metrics do not match the graph");
  Selection sel;
  std::vector<char> keep(g.node_count() + 1, 0);
  for (const auto& m : metrics) {
    const std::int64_t score = scope == ThresholdScope::local ? static_cast<std::int64_t>(m.lcs) : m.gcs;
    if (score >= threshold) {
      keep[m.node_id] = 1;
      sel.nodes.push_back(m.node_id);
    }
  }
  std::sort(sel.nodes.begin(), sel.nodes.end());
  for (const auto& e : g.edges()) {
    if (keep[e.citing] && keep[e.cited]) sel.links.push_back(e);
  }
  return sel;
}

const LayoutNode& HistoriographSpec::node(NodeId id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                             [](const LayoutNode& n, NodeId v) { return n.id < v; });
  if (it == nodes.end() || it->id != id) throw DataError("node " + std::to_string(id) + " is not in the layout");
  return *it;
}

double node_radius(std::size_t lcs) {
  return std::max(kMinRadius, kRadiusPerSqrtCitation * std::sqrt(static_cast<double>(lcs)));
}

HistoriographSpec layout_yearly(const Selection& sel, const Collection& c, const CitationGraph& g,
                                std::int64_t threshold, ThresholdScope scope) {
  HistoriographSpec spec;
  spec.threshold = threshold;
  spec.scope = scope;
  spec.links = sel.links;
  std::sort(spec.links.begin(), spec.links.end());
  for (NodeId id : sel.nodes) {
    const auto& r = c.node(id);
    LayoutNode n;
    n.id = id;
    n.year = r.pub_year;
    n.first_author = r.first_author();
    n.lcs = g.in_degree(id);
    n.radius = node_radius(n.lcs);
    spec.nodes.push_back(std::move(n));
  }
  std::sort(spec.nodes.begin(), spec.nodes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& e : spec.links) {
    spec.node(e.citing);
    spec.node(e.cited);
  }
  if (spec.nodes.empty()) return spec;
  auto [lo, hi] = std::minmax_element(spec.nodes.begin(), spec.nodes.end(),
                                      [](const auto& a, const auto& b) { return a.year < b.year; });
  for (Year y = lo->year; y <= hi->year; ++y) spec.rows.push_back({y, {}});
  for (const auto& n : spec.nodes) spec.rows[static_cast<std::size_t>(n.year - lo->year)].nodes.push_back(n.id);
  return spec;
}

std::string emit_dot(const HistoriographSpec& spec) {
  std::ostringstream out;
  out << "digraph historiograph {\n";
  out << "  graph [rankdir=BT, label=" << quoted("threshold " + std::to_string(spec.threshold) + " (" +
                                                  to_string(spec.scope) + "); " + std::to_string(spec.nodes.size()) +
                                                  " nodes; " + std::to_string(spec.links.size()) + " links")
      << "];\n";
  out << "  node [shape=circle, fixedsize=true, fontsize=10];\n";
  for (const auto& row : spec.rows) {
    if (row.nodes.empty()) continue;
    out << "  { rank=same; // " << row.year << "\n";
    for (NodeId id : row.nodes) {
      const auto& n = spec.node(id);
      // width is the circle diameter in inches at 72 points per inch
      out << "    " << id << " [label=\"" << id << "\", tooltip="
          << quoted(std::to_string(n.year) + " " + n.first_author) << ", width=" << fixed(2 * n.radius / 72.0, 3)
          << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& e : spec.links) {
    out << "  " << e.citing << " -> " << e.cited;
    if (spec.node(e.citing).year == spec.node(e.cited).year) out << " [constraint=false]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

constexpr double kRowHeight = 70;
constexpr double kColumnPitch = 60;
constexpr double kLeftMargin = 70;
constexpr double kTopMargin = 40;

struct Point {
  double x, y;
};

}  // namespace

std::string emit_svg(const HistoriographSpec& spec) {
  std::size_t widest = 1;
  for (const auto& row : spec.rows) widest = std::max(widest, row.nodes.size());
  const double width = kLeftMargin + kColumnPitch * static_cast<double>(widest) + kColumnPitch / 2;
  const double height = kTopMargin * 2 + kRowHeight * static_cast<double>(std::max<std::size_t>(spec.rows.size(), 1));

  std::vector<Point> pos(spec.nodes.size());
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    for (std::size_t k = 0; k < spec.rows[r].nodes.size(); ++k) {
      NodeId id = spec.rows[r].nodes[k];
      auto idx = static_cast<std::size_t>(&spec.node(id) - spec.nodes.data());
      pos[idx] = {kLeftMargin + kColumnPitch * (static_cast<double>(k) + 0.5),
                  kTopMargin + kRowHeight * (static_cast<double>(r) + 0.5)};
    }
  }
  auto at = [&](NodeId id) { return pos[static_cast<std::size_t>(&spec.node(id) - spec.nodes.data())]; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(width, 0) << "\" height=\""
      << fixed(height, 0) << "\" viewBox=\"0 0 " << fixed(width, 0) << " " << fixed(height, 0) << "\">\n";
  out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#555\"/></marker></defs>\n";
  out << "  <text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"12\">"
      << text::xml_escape("threshold " + std::to_string(spec.threshold) + " (" + to_string(spec.scope) + "); " +
                          std::to_string(spec.nodes.size()) + " nodes; " + std::to_string(spec.links.size()) +
                          " links")
      << "</text>\n";
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    out << "  <text x=\"10\" y=\"" << fixed(kTopMargin + kRowHeight * (static_cast<double>(r) + 0.5) + 4, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << spec.rows[r].year << "</text>\n";
  }
  for (const auto& e : spec.links) {
    Point a = at(e.citing);
    Point b = at(e.cited);
    const double rb = spec.node(e.cited).radius;
    if (spec.node(e.citing).year == spec.node(e.cited).year) {
      // same-row citation: arc above the row
      const double mx = (a.x + b.x) / 2;
      const double my = a.y - kRowHeight * 0.45;
      out << "  <path d=\"M" << fixed(a.x, 1) << "," << fixed(a.y, 1) << " Q" << fixed(mx, 1) << "," << fixed(my, 1)
          << " " << fixed(b.x, 1) << "," << fixed(b.y - rb, 1)
          << "\" fill=\"none\" stroke=\"#555\" marker-end=\"url(#arrow)\"/>\n";
      continue;
    }
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len = std::sqrt(dx * dx + dy * dy);
    const double ex = b.x - dx / len * rb;
    const double ey = b.y - dy / len * rb;
    out << "  <line x1=\"" << fixed(a.x, 1) << "\" y1=\"" << fixed(a.y, 1) << "\" x2=\"" << fixed(ex, 1)
        << "\" y2=\"" << fixed(ey, 1) << "\" stroke=\"#555\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    const auto& n = spec.nodes[i];
    out << "  <g><title>" << text::xml_escape(std::to_string(n.year) + " " + n.first_author) << "</title>"
        << "<circle cx=\"" << fixed(pos[i].x, 1) << "\" cy=\"" << fixed(pos[i].y, 1) << "\" r=\""
        << fixed(n.radius, 2) << "\" fill=\"#cfe0f3\" stroke=\"#1f4e79\"/>"
        << "<text x=\"" << fixed(pos[i].x, 1) << "\" y=\"" << fixed(pos[i].y + 4, 1)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << n.id << "</text></g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<Edge> flow_dag(const Collection& c, const CitationGraph& g) {
  if (g.node_count() != c.size()) throw DataError("graph does not belong to this collection");
  std::vector<Edge> flow;
  for (const auto& e : g.edges()) {
    if (c.node(e.citing).pub_year > c.node(e.cited).pub_year) flow.push_back({e.cited, e.citing});
  }
  std::sort(flow.begin(), flow.end());
  return flow;
}

namespace {

struct Dag {
  std::vector<std::vector<NodeId>> succ, pred;
  std::vector<NodeId> order;  // topological, only nodes touching an edge
};

Dag build_dag(std::size_t n, std::span<const Edge> flow) {
  Dag d;
  d.succ.resize(n + 1);
  d.pred.resize(n + 1);
  std::vector<char> touched(n + 1, 0);
  for (const auto& e : flow) {
    if (e.citing < 1 || e.citing > n || e.cited < 1 || e.cited > n) throw DataError("flow edge outside the node range");
    if (e.citing == e.cited) throw DataError("flow edge is a self-loop");
    d.succ[e.citing].push_back(e.cited);
    d.pred[e.cited].push_back(e.citing);
    touched[e.citing] = touched[e.cited] = 1;
  }
  std::vector<std::size_t> indeg(n + 1, 0);
  for (NodeId v = 1; v <= n; ++v) {
    auto& s = d.succ[v];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  for (NodeId v = 1; v <= n; ++v) {
    auto& p = d.pred[v];
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    indeg[v] = p.size();
  }
  std::vector<NodeId> ready;
  for (NodeId v = 1; v <= n; ++v) {
    if (touched[v] && indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    NodeId v = ready.back();
    ready.pop_back();
    d.order.push_back(v);
    for (NodeId w : d.succ[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  std::size_t touched_count = static_cast<std::size_t>(std::count(touched.begin(), touched.end(), 1));
  if (d.order.size() != touched_count) throw DataError("citation flow contains a cycle");
  return d;
}

}  // namespace

SearchPathCounts search_path_counts(std::size_t node_count, std::span<const Edge> flow) {
  const Dag d = build_dag(node_count, flow);
  SearchPathCounts s;
  s.from_sources.assign(node_count + 1, 0);
  s.to_sinks.assign(node_count + 1, 0);
  for (NodeId v : d.order) {
    s.from_sources[v] = d.pred[v].empty() ? 1 : 0;
    for (NodeId u : d.pred[v]) s.from_sources[v] += s.from_sources[u];
  }
  for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
    NodeId v = *it;
    s.to_sinks[v] = d.succ[v].empty() ? 1 : 0;
    for (NodeId w : d.succ[v]) s.to_sinks[v] += s.to_sinks[w];
    if (d.pred[v].empty()) s.total_paths += s.to_sinks[v];
  }
  for (NodeId v = 1; v <= node_count; ++v) {
    for (NodeId w : d.succ[v]) {
      s.edges.push_back({v, w});
      s.weight.push_back(s.from_sources[v] * s.to_sinks[w]);
    }
  }
  return s;
}

std::vector<NodeId> main_path(std::size_t node_count, std::span<const Edge> flow) {
  const Dag d = build_dag(node_count, flow);
  const SearchPathCounts spc = search_path_counts(node_count, flow);
  auto weight = [&](NodeId v, NodeId w) {
    auto it = std::lower_bound(spc.edges.begin(), spc.edges.end(), Edge{v, w});
    return spc.weight[static_cast<std::size_t>(it - spc.edges.begin())];
  };
  // best[v]: heaviest continuation from v to a sink
  std::vector<double> best(node_count + 1, 0);
  for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
    NodeId v = *it;
    for (NodeId w : d.succ[v]) best[v] = std::max(best[v], weight(v, w) + best[w]);
  }
  std::vector<NodeId> path;
  NodeId start = 0;
  for (NodeId v = 1; v <= node_count; ++v) {
    if (d.pred[v].empty() && !d.succ[v].empty() && (start == 0 || best[v] > best[start])) start = v;
  }
  if (start == 0) return path;
  // successors ascend, so the first optimal choice is also the smallest id
  for (NodeId v = start;;) {
    path.push_back(v);
    NodeId next = 0;
    for (NodeId w : d.succ[v]) {
      if (weight(v, w) + best[w] == best[v]) {
        next = w;
        break;
      }
    }
    if (next == 0) break;
    v = next;
  }
  return path;
}

std::vector<NodeId> main_path(const Collection& c, const CitationGraph& g) {
  auto flow = flow_dag(c, g);
  return main_path(c.size(), flow);
}

}  // namespace histograph
