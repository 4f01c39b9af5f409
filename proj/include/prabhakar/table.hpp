#pragma once

// Column tables and their CSV form: header row "t,col1,col2,...", comma
// separated, newline terminated, numbers as shortest round-trip decimals
// (at most 17 significant digits), no locale dependence.

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "prabhakar/types.hpp"

namespace prabhakar {

class CsvError : public DomainError {
 public:
  CsvError(const std::string& what, std::size_t line)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct OutputTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;

  void add_column(std::string name, std::vector<double> values) {
    if (!columns.empty() && values.size() != columns.front().size())
      throw DomainError("OutputTable: column '" + name + "' has a different length");
    names.push_back(std::move(name));
    columns.push_back(std::move(values));
  }

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }

  const std::vector<double>& column(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return columns[i];
    throw DomainError("OutputTable: no column '" + std::string(name) + "'");
  }
};

inline void write_csv(std::ostream& out, const OutputTable& table) {
  for (std::size_t c = 0; c < table.names.size(); ++c) out << (c ? "," : "") << table.names[c];
  out << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "," : "") << format_number(table.columns[c][r]);
    out << '\n';
  }
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses a CSV table with a header row; every data row must have as many
/// numeric fields as the header. Blank lines are skipped.
inline OutputTable read_csv(std::istream& in) {
  OutputTable table;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view view = detail::trim(line);
    if (view.empty()) continue;
    const auto fields = detail::split_fields(view);
    if (!have_header) {
      for (auto f : fields) {
        const auto name = detail::trim(f);
        if (name.empty()) throw CsvError("empty column name in header", lineno);
        table.names.emplace_back(name);
      }
      table.columns.resize(table.names.size());
      have_header = true;
      continue;
    }
    if (fields.size() != table.names.size()) {
      std::ostringstream os;
      os << "expected " << table.names.size() << " fields, found " << fields.size();
      throw CsvError(os.str(), lineno);
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const auto f = detail::trim(fields[c]);
      double v = 0.0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
        std::ostringstream os;
        os << "field " << c + 1 << " ('" << f << "') is not a number";
        throw CsvError(os.str(), lineno);
      }
      table.columns[c].push_back(v);
    }
  }
  if (!have_header) throw CsvError("missing header row", lineno);
  return table;
}

}  // namespace prabhakar
