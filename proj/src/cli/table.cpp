#include <charconv>
#include <cmath>
#include <ostream>

#include "json.hpp"

#include "graetz/cli.hpp"

namespace graetz::cli {

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell(const Table& t, std::size_t col, double v) {
  if (col < t.integral.size() && t.integral[col]) return std::to_string(static_cast<long long>(v));
  return format_number(v);
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell(table, c, row[c]);
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c < table.integral.size() && table.integral[c])
        obj[table.columns[c]] = static_cast<long long>(row[c]);
      else if (std::isfinite(row[c]))
        obj[table.columns[c]] = row[c];
      else
        obj[table.columns[c]] = nullptr;
    }
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void write_table(const Table& table, Format format, std::ostream& out) {
  if (format == Format::json)
    write_json(table, out);
  else
    write_csv(table, out);
}

}  // namespace graetz::cli
