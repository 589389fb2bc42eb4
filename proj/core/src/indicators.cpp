#include "histograph/indicators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "histograph/error.hpp"
#include "histograph/text.hpp"

namespace histograph {

ResolvedWindow resolve_window(const Collection& c, const IndicatorWindow& w) {
  auto span = c.year_span();
  if (!span) return {};
  ResolvedWindow r{w.ref_year.value_or(span->last), w.cutoff_b.value_or(span->first),
                   w.cutoff_e.value_or(span->last)};
  if (r.ref_year < span->first) {
    throw DataError("ref_year " + std::to_string(r.ref_year) + " precedes every publication year (first is " +
                    std::to_string(span->first) + ")");
  }
  auto check = [&](Year y, const char* what) {
    if (!span->contains(y)) {
      throw DataError(std::string(what) + " " + std::to_string(y) + " outside the collection span " +
                      std::to_string(span->first) + "-" + std::to_string(span->last));
    }
  };
  check(r.cutoff_b, "cutoff b");
  check(r.cutoff_e, "cutoff e");
  return r;
}

std::vector<NodeMetrics> node_indicators(const Collection& c, const CitationGraph& g, const IndicatorWindow& w) {
  if (g.node_count() != c.size()) throw DataError("graph does not belong to this collection");
  const auto win = resolve_window(c, w);
  std::vector<NodeMetrics> out;
  out.reserve(c.size());
  for (const auto& r : c.records()) {
    NodeMetrics m;
    m.node_id = r.node_id;
    m.lcs = g.in_degree(r.node_id);
    m.lcr = g.out_degree(r.node_id);
    m.gcs = r.global_citations;
    m.ncr = std::max(r.cited_refs.size(), m.lcr);
    m.age = std::max(1, win.ref_year - r.pub_year + 1);
    m.lcs_t = static_cast<double>(m.lcs) / m.age;
    m.gcs_t = static_cast<double>(m.gcs) / m.age;
    for (NodeId citer : g.in_neighbors(r.node_id)) {
      Year y = c.node(citer).pub_year;
      if (y <= win.cutoff_b) ++m.lcs_b;
      if (y >= win.cutoff_e) ++m.lcs_e;
    }
    out.push_back(m);
  }
  return out;
}

namespace {

template <class Row, class Key>
bool descending(const Row& a, const Row& b, Key key) {
  auto ka = key(a);
  auto kb = key(b);
  if (ka != kb) return ka > kb;
  return a.name < b.name;
}

template <class Row>
void sort_by_name(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.name < b.name; });
}

template <class Row, class Key>
void sort_rows(std::vector<Row>& rows, Key key) {
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) { return descending(a, b, key); });
}

const NodeMetrics& metrics_for(const std::vector<NodeMetrics>& nodes, NodeId id) {
  if (id < 1 || id > nodes.size() || nodes[id - 1].node_id != id) {
    throw DataError("node metrics do not match the collection");
  }
  return nodes[id - 1];
}

}  // namespace

std::vector<AuthorMetrics> author_table(const Collection& c, const std::vector<NodeMetrics>& nodes,
                                        AuthorSortKey key) {
  if (nodes.size() != c.size()) throw DataError("node metrics do not match the collection");
  std::map<std::string, AuthorMetrics> by_name;
  for (const auto& r : c.records()) {
    const auto& m = metrics_for(nodes, r.node_id);
    // a name repeated within one record still counts the record once
    std::set<std::string> names(r.authors.begin(), r.authors.end());
    for (const auto& name : names) {
      auto& a = by_name[name];
      a.name = name;
      a.tlcs += m.lcs;
      a.tlcs_t += m.lcs_t;
      a.tgcs += m.gcs;
      a.tgcs_t += m.gcs_t;
      a.tlcs_b += m.lcs_b;
      a.tlcs_e += m.lcs_e;
      a.pubs += 1;
      a.tlcr += m.lcr;
    }
  }
  std::vector<AuthorMetrics> rows;
  rows.reserve(by_name.size());
  for (auto& [_, a] : by_name) rows.push_back(std::move(a));

  using K = AuthorSortKey;
  switch (key) {
    case K::name: sort_by_name(rows); break;
    case K::tlcs: sort_rows(rows, [](const AuthorMetrics& a) { return a.tlcs; }); break;
    case K::tlcs_t: sort_rows(rows, [](const AuthorMetrics& a) { return a.tlcs_t; }); break;
    case K::tgcs: sort_rows(rows, [](const AuthorMetrics& a) { return a.tgcs; }); break;
    case K::tgcs_t: sort_rows(rows, [](const AuthorMetrics& a) { return a.tgcs_t; }); break;
    case K::tlcs_b: sort_rows(rows, [](const AuthorMetrics& a) { return a.tlcs_b; }); break;
    case K::tlcs_e: sort_rows(rows, [](const AuthorMetrics& a) { return a.tlcs_e; }); break;
    case K::pubs: sort_rows(rows, [](const AuthorMetrics& a) { return a.pubs; }); break;
    case K::tlcr: sort_rows(rows, [](const AuthorMetrics& a) { return a.tlcr; }); break;
  }
  return rows;
}

std::vector<SourceMetrics> source_table(const Collection& c, const std::vector<NodeMetrics>& nodes,
                                        SourceSortKey key) {
  if (nodes.size() != c.size()) throw DataError("node metrics do not match the collection");
  std::map<std::string, SourceMetrics> by_name;
  for (const auto& r : c.records()) {
    const auto& m = metrics_for(nodes, r.node_id);
    auto& s = by_name[r.source];
    s.name = r.source;
    s.tlcs += m.lcs;
    s.tgcs += m.gcs;
    s.pubs += 1;
  }
  std::vector<SourceMetrics> rows;
  rows.reserve(by_name.size());
  for (auto& [_, s] : by_name) rows.push_back(std::move(s));

  using K = SourceSortKey;
  switch (key) {
    case K::name: sort_by_name(rows); break;
    case K::tlcs: sort_rows(rows, [](const SourceMetrics& s) { return s.tlcs; }); break;
    case K::tgcs: sort_rows(rows, [](const SourceMetrics& s) { return s.tgcs; }); break;
    case K::pubs: sort_rows(rows, [](const SourceMetrics& s) { return s.pubs; }); break;
  }
  return rows;
}

std::string totals_header(const std::string& label, const Totals& t) {
  const auto n = static_cast<std::int64_t>(t.count);
  auto mean = [&](std::int64_t v) { return n == 0 ? std::string("0.00") : text::format_ratio2(v, n); };
  return label + ": " + std::to_string(t.count) + ", TLCS: " + std::to_string(t.tlcs) +
         ", TGCS: " + std::to_string(t.tgcs) + ", mean TLCS: " + mean(static_cast<std::int64_t>(t.tlcs)) +
         ", mean TGCS: " + mean(t.tgcs);
}

Totals collection_totals(const std::vector<NodeMetrics>& nodes, std::size_t count) {
  Totals t;
  t.count = count;
  for (const auto& m : nodes) {
    t.tlcs += m.lcs;
    t.tgcs += m.gcs;
  }
  return t;
}

CitationMatrix citation_matrix(const Collection& c, const CitationGraph& g) {
  if (g.node_count() != c.size()) throw DataError("graph does not belong to this collection");
  CitationMatrix m;
  m.totals.count = c.size();
  for (const auto& r : c.records()) {
    MatrixRow row;
    auto cited = g.out_neighbors(r.node_id);
    auto citing = g.in_neighbors(r.node_id);
    row.cited.assign(cited.begin(), cited.end());
    row.citing.assign(citing.begin(), citing.end());
    row.lcr = row.cited.size();
    row.ncr = std::max(r.cited_refs.size(), row.lcr);
    row.label = std::to_string(r.node_id) + " " + std::to_string(r.pub_year) + " " + r.first_author();
    row.lcs = row.citing.size();
    row.gcs = r.global_citations;
    m.totals.tlcs += row.lcs;
    m.totals.tgcs += row.gcs;
    m.rows.push_back(std::move(row));
  }
  return m;
}

const char* to_string(Demography d) {
  switch (d) {
    case Demography::core: return "core";
    case Demography::continuant: return "continuant";
    case Demography::transient: return "transient";
  }
  return "?";
}

std::vector<AuthorClass> classify_authors(const Collection& c, const std::vector<AuthorMetrics>& authors) {
  std::map<std::string, std::set<Year>> years;
  for (const auto& r : c.records()) {
    for (const auto& a : r.authors) years[a].insert(r.pub_year);
  }
  const auto span = c.year_span();
  std::vector<AuthorClass> out;
  out.reserve(authors.size());
  for (const auto& a : authors) {
    AuthorClass cls;
    cls.name = a.name;
    cls.tlcs = a.tlcs;
    auto it = years.find(a.name);
    if (it == years.end() || !span) throw DataError("author " + a.name + " has no records in the collection");
    cls.years.assign(it->second.begin(), it->second.end());
    if (cls.years.size() == 1) {
      cls.demography = Demography::transient;
    } else {
      // thirds compared in integer arithmetic: 3*(y - first) < length
      const int len = span->length();
      bool early = false, late = false;
      for (Year y : cls.years) {
        early = early || 3 * (y - span->first) < len;
        late = late || 3 * (span->last - y) < len;
      }
      cls.demography = early && late && a.tlcs > 0 ? Demography::core : Demography::continuant;
    }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace histograph
