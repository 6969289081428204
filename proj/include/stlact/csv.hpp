// Minimal CSV emit/parse used by all report-producing modules. Fields must
// not contain commas, newlines or a leading '#'; numeric fields use the
// shortest representation that round-trips, so render(parse(render(t)))
// is byte-identical to render(t).
#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stlact::csv {

struct Table {
  std::vector<std::string> comments;  // emitted first, one "# ..." line each
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string render(const Table& table) {
  std::string out;
  for (const auto& c : table.comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  auto append_row = [&out](const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += fields[i];
    }
    out += '\n';
  };
  append_row(table.header);
  for (const auto& row : table.rows) append_row(row);
  return out;
}

inline std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

inline Table parse(std::string_view text) {
  Table table;
  bool have_header = false;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      table.comments.emplace_back(body);
      continue;
    }
    if (!have_header) {
      table.header = split_fields(line);
      have_header = true;
    } else {
      table.rows.push_back(split_fields(line));
    }
  }
  if (!have_header) throw std::runtime_error("csv: missing header line");
  return table;
}

}  // namespace stlact::csv
