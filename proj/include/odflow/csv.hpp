#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "odflow/error.hpp"
#include "odflow/numeric.hpp"

namespace odflow {

/// A parsed CSV document: one header row plus data rows of equal arity.
struct AttributeTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t require_column(std::string_view name) const {
    if (auto c = column(name)) return *c;
    throw Error(ErrorCode::missing_column, "column '" + std::string(name) + "' not found in header",
                header);
  }
};

namespace detail {

struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// Comma-delimited, optional double-quote quoting with "" escapes, LF or CRLF
// record ends. Lines that are completely empty are skipped.
inline std::vector<CsvRecord> split_csv(std::string_view text) {
  std::vector<CsvRecord> records;
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::size_t pos = 0;
  std::size_t line = 1;
  const std::size_t n = text.size();
  while (pos < n) {
    CsvRecord rec;
    rec.line = line;
    std::string field;
    bool record_done = false;
    bool saw_anything = false;
    while (!record_done) {
      field.clear();
      if (pos < n && text[pos] == '"') {
        const std::size_t open = pos;
        ++pos;
        bool closed = false;
        while (pos < n) {
          const char c = text[pos];
          if (c == '"') {
            if (pos + 1 < n && text[pos + 1] == '"') {
              field.push_back('"');
              pos += 2;
              continue;
            }
            ++pos;
            closed = true;
            break;
          }
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
        if (!closed) {
          throw Error(ErrorCode::malformed_csv,
                      "unterminated quoted field starting at byte " + std::to_string(open) +
                          " (line " + std::to_string(rec.line) + ")");
        }
        saw_anything = true;
        if (pos < n && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
          throw Error(ErrorCode::malformed_csv,
                      "unexpected character after closing quote at byte " + std::to_string(pos) +
                          " (line " + std::to_string(line) + ")");
        }
      } else {
        while (pos < n && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
          field.push_back(text[pos]);
          ++pos;
        }
        if (!field.empty()) saw_anything = true;
      }
      rec.fields.push_back(field);
      if (pos >= n) {
        record_done = true;
      } else if (text[pos] == ',') {
        saw_anything = true;
        ++pos;
      } else {
        if (text[pos] == '\r') ++pos;
        if (pos < n && text[pos] == '\n') ++pos;
        ++line;
        record_done = true;
      }
    }
    if (saw_anything) records.push_back(std::move(rec));
  }
  return records;
}

inline bool needs_quotes(std::string_view s) {
  if (s.empty()) return false;
  if (s.find_first_of(",\"\r\n") != std::string_view::npos) return true;
  return s.front() == ' ' || s.back() == ' ' || s.front() == '\t' || s.back() == '\t';
}

}  // namespace detail

/// Parses CSV text with a mandatory header row. Every data row must have the
/// header's arity; violations carry the offending 1-based data row.
inline AttributeTable parse_csv(std::string_view text) {
  auto records = detail::split_csv(text);
  if (records.empty()) throw Error(ErrorCode::malformed_csv, "missing header row");
  AttributeTable table;
  for (auto& h : records.front().fields) table.header.emplace_back(trim(h));
  for (std::size_t r = 1; r < records.size(); ++r) {
    auto& rec = records[r];
    if (rec.fields.size() != table.header.size()) {
      throw Error(ErrorCode::malformed_csv,
                  "row " + std::to_string(r) + " (line " + std::to_string(rec.line) + ") has " +
                      std::to_string(rec.fields.size()) + " fields, header has " +
                      std::to_string(table.header.size()),
                  {}, r);
    }
    table.rows.push_back(std::move(rec.fields));
  }
  return table;
}

inline std::string csv_escape(std::string_view s) {
  if (!detail::needs_quotes(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline void append_csv_row(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += csv_escape(fields[i]);
  }
  out.push_back('\n');
}

inline std::string write_csv(const AttributeTable& table) {
  std::string out;
  append_csv_row(out, table.header);
  for (const auto& row : table.rows) append_csv_row(out, row);
  return out;
}

}  // namespace odflow
