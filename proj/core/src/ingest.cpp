#include "histograph/ingest.hpp"

#include <optional>

#include "histograph/error.hpp"
#include "histograph/text.hpp"

namespace histograph {

namespace {

bool is_tag_char(char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); }

bool is_tag_line(std::string_view line) {
  return line.size() >= 2 && line[0] >= 'A' && line[0] <= 'Z' && is_tag_char(line[1]) &&
         (line.size() == 2 || line[2] == ' ');
}

std::string strip_chars(std::string_view s, std::string_view drop) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (drop.find(c) == std::string_view::npos) out.push_back(c);
  }
  return out;
}

std::optional<std::string> non_empty(std::string_view s) {
  s = text::trim(s);
  if (s.empty()) return std::nullopt;
  return std::string(s);
}

// Accumulates the fields of one PT..ER block.
struct PendingRecord {
  std::size_t first_line = 0;
  SourceRecord record;
  std::optional<std::string> year_text;
  std::string title;
  std::string source;
  std::string subjects;
};

class ExportParser {
 public:
  explicit ExportParser(const ParseOptions& options) : options_(options) {}

  ParsedExport run(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size() && !done_) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      handle_line(line, line_no);
      if (end == text.size()) break;
      pos = end + 1;
    }
    if (current_) {
      throw ParseError(current_->first_line, "record not terminated by ER");
    }
    return ParsedExport{Collection(std::move(records_), options_.provenance), std::move(warnings_)};
  }

 private:
  void handle_line(std::string_view line, std::size_t line_no) {
    if (text::trim(line).empty()) {
      tag_.clear();
      return;
    }
    if (line.starts_with("   ")) {
      if (tag_.empty()) throw ParseError(line_no, "continuation line without a field tag");
      field(tag_, text::trim(line), line_no, true);
      return;
    }
    if (!is_tag_line(line)) throw ParseError(line_no, "malformed tag line");
    std::string tag(line.substr(0, 2));
    std::string_view value = line.size() > 3 ? text::trim(line.substr(3)) : std::string_view{};
    tag_ = tag;

    if (tag == "FN" || tag == "VR") return;
    if (tag == "EF") {
      if (current_) throw ParseError(line_no, "EF inside an unterminated record");
      done_ = true;
      return;
    }
    if (tag == "PT") {
      if (current_) throw ParseError(line_no, "PT inside an unterminated record");
      current_.emplace();
      current_->first_line = line_no;
      return;
    }
    if (!current_) throw ParseError(line_no, "field " + tag + " outside a record");
    if (tag == "ER") {
      finish();
      tag_.clear();
      return;
    }
    field(tag, value, line_no, false);
  }

  void field(const std::string& tag, std::string_view value, std::size_t line_no, bool continuation) {
    if (!current_) throw ParseError(line_no, "continuation line outside a record");
    auto& p = *current_;
    auto& r = p.record;
    auto append_spaced = [&](std::string& dst) {
      if (!dst.empty() && !value.empty()) dst.push_back(' ');
      dst.append(value);
    };
    if (tag == "AU") {
      if (!value.empty()) r.authors.push_back(normalize_author(value));
    } else if (tag == "CR") {
      if (!value.empty()) r.cited_refs.emplace_back(value);
    } else if (tag == "TI") {
      append_spaced(p.title);
    } else if (tag == "SO") {
      append_spaced(p.source);
    } else if (tag == "SC") {
      append_spaced(p.subjects);
    } else if (tag == "PY") {
      p.year_text = std::string(value);
    } else if (tag == "VL") {
      r.volume = non_empty(value);
    } else if (tag == "IS") {
      r.issue = non_empty(value);
    } else if (tag == "BP") {
      r.begin_page = non_empty(value);
    } else if (tag == "EP") {
      r.end_page = non_empty(value);
    } else if (tag == "UT") {
      r.accession = non_empty(value);
    } else if (tag == "TC") {
      auto tc = text::parse_uint(value);
      if (!tc || continuation) throw ParseError(line_no, "TC is not a nonnegative integer");
      r.global_citations = *tc;
    }
    // other tags (AB, DE, NR, ...) are accepted and ignored
  }

  void finish() {
    auto p = std::move(*current_);
    current_.reset();
    auto& r = p.record;
    const std::string where = "record at line " + std::to_string(p.first_line);
    if (!p.year_text) {
      warnings_.push_back(where + " has no PY; skipped");
      return;
    }
    auto year = text::parse_uint(*p.year_text);
    if (!year || p.year_text->size() != 4 || *year < kMinPubYear || *year > kMaxPubYear) {
      warnings_.push_back(where + " has an invalid PY '" + *p.year_text + "'; skipped");
      return;
    }
    r.pub_year = static_cast<Year>(*year);
    r.title = text::collapse_whitespace(p.title);
    r.source = text::to_upper(text::collapse_whitespace(p.source));
    for (auto part : text::split(p.subjects, ';')) {
      auto s = text::collapse_whitespace(part);
      if (!s.empty()) r.subject_categories.push_back(std::move(s));
    }
    records_.push_back(std::move(r));
  }

  const ParseOptions& options_;
  std::optional<PendingRecord> current_;
  std::string tag_;
  bool done_ = false;
  std::vector<SourceRecord> records_;
  std::vector<std::string> warnings_;
};

}  // namespace

std::string normalize_author(std::string_view name) {
  name = text::trim(name);
  std::string out;
  if (auto comma = name.find(','); comma != std::string_view::npos) {
    std::string surname = text::collapse_whitespace(strip_chars(name.substr(0, comma), ".,"));
    std::string initials = strip_chars(name.substr(comma + 1), "., \t");
    out = initials.empty() ? surname : surname + " " + initials;
  } else {
    out = text::collapse_whitespace(strip_chars(name, ".,"));
  }
  return text::to_upper(out);
}

RecordKey record_key(const SourceRecord& r) {
  if (r.accession && !r.accession->empty()) return *r.accession;
  return FieldKey{r.first_author(), r.pub_year, r.source, r.volume.value_or(""), r.begin_page.value_or("")};
}

std::string to_string(const RecordKey& key) {
  if (const auto* acc = std::get_if<std::string>(&key)) return *acc;
  const auto& f = std::get<FieldKey>(key);
  return f.first_author + "|" + std::to_string(f.pub_year) + "|" + f.source + "|" + f.volume + "|" +
         f.begin_page;
}

ParsedExport parse_export(std::string_view text, const ParseOptions& options) {
  return ExportParser(options).run(text);
}

Collection merge_collections(const Collection& a, const Collection& b) {
  const bool b_later = b.download_date() && (!a.download_date() || *b.download_date() > *a.download_date());
  const Collection& first = b_later ? b : a;
  const Collection& second = b_later ? a : b;

  std::vector<SourceRecord> records;
  records.reserve(a.size() + b.size());
  records.insert(records.end(), first.records().begin(), first.records().end());
  records.insert(records.end(), second.records().begin(), second.records().end());

  Provenance prov;
  prov.download_date = first.download_date() ? first.download_date() : second.download_date();
  const auto& la = a.query_label();
  const auto& lb = b.query_label();
  if (la == lb || lb.empty()) {
    prov.query_label = la;
  } else if (la.empty()) {
    prov.query_label = lb;
  } else {
    prov.query_label = la + " + " + lb;
  }
  return Collection(std::move(records), std::move(prov));
}

}  // namespace histograph
