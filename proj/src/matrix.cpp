#include "mass/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace mass {

namespace {

std::string cell_ref(std::size_t line, std::size_t field) {
  std::ostringstream os;
  os << "line " << line << ", column " << field;
  return os.str();
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

}  // namespace

LoadMatrix::LoadMatrix(std::vector<std::string> names, std::vector<Cell> flows)
    : n_(static_cast<int>(names.size())), names_(std::move(names)), flows_(std::move(flows)) {
  if (n_ < 1) throw ValidationError("load matrix needs at least one facility");
  if (flows_.size() != static_cast<std::size_t>(n_) * n_)
    throw ValidationError("flow table size does not match facility count");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw ValidationError("facility names must be non-empty");
    if (!seen.insert(name).second)
      throw ValidationError("duplicate facility name '" + name + "'");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const Cell& c = flows_[static_cast<std::size_t>(i) * n_ + j];
      if (i == j && c.has_value())
        throw ValidationError("diagonal flow for facility '" + names_[i] + "' must be vacant");
      if (c.has_value() && *c < 0)
        throw ValidationError("negative flow from '" + names_[i] + "' to '" + names_[j] + "'");
    }
  }
}

LoadMatrix parse_load_matrix(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find('\n', start);
    std::string_view line =
        pos == std::string_view::npos ? text.substr(start) : text.substr(start, pos - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty load-matrix file", 1);

  std::vector<std::string> header = split_fields(lines[0]);
  if (header[0] != "name")
    throw ParseError("header must start with 'name', got '" + header[0] + "'", 1, 1);
  const int n = static_cast<int>(header.size()) - 1;
  if (n < 1) throw ParseError("header lists no facilities", 1);
  std::vector<std::string> names(header.begin() + 1, header.end());
  for (int j = 0; j < n; ++j) {
    if (names[j].empty()) throw ParseError("empty facility name", 1, static_cast<std::size_t>(j) + 2);
    for (int k = 0; k < j; ++k)
      if (names[k] == names[j])
        throw ParseError("duplicate facility name '" + names[j] + "'", 1,
                         static_cast<std::size_t>(j) + 2);
  }

  if (lines.size() - 1 != static_cast<std::size_t>(n)) {
    std::ostringstream os;
    os << "non-square input: " << n << " facilities in header but " << lines.size() - 1
       << " data rows";
    throw ParseError(os.str(), lines.size());
  }

  std::vector<Cell> flows(static_cast<std::size_t>(n) * n, std::nullopt);
  for (int i = 0; i < n; ++i) {
    const std::size_t line_no = static_cast<std::size_t>(i) + 2;
    std::vector<std::string> fields = split_fields(lines[i + 1]);
    if (fields.size() != static_cast<std::size_t>(n) + 1) {
      std::ostringstream os;
      os << "non-square input at line " << line_no << ": expected " << n + 1 << " fields, found "
         << fields.size();
      throw ParseError(os.str(), line_no);
    }
    if (fields[0] != names[i])
      throw ParseError("row name '" + fields[0] + "' does not match header name '" + names[i] + "'",
                       line_no, 1);
    for (int j = 0; j < n; ++j) {
      const std::size_t field_no = static_cast<std::size_t>(j) + 2;
      const std::string& cell = fields[j + 1];
      if (cell.empty() || cell == "-") continue;  // vacant
      Load value = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw ParseError("invalid cell '" + cell + "' at " + cell_ref(line_no, field_no) +
                             " (expected a non-negative integer or '-')",
                         line_no, field_no);
      if (value < 0)
        throw ParseError("negative flow " + cell + " at " + cell_ref(line_no, field_no), line_no,
                         field_no);
      if (i == j)
        throw ParseError("diagonal cell at " + cell_ref(line_no, field_no) + " must be '-'",
                         line_no, field_no);
      flows[static_cast<std::size_t>(i) * n + j] = value;
    }
  }
  return LoadMatrix(std::move(names), std::move(flows));
}

std::string serialize_load_matrix(const LoadMatrix& m) {
  std::ostringstream os;
  os << "name";
  for (const auto& name : m.names()) os << ',' << name;
  os << '\n';
  for (int i = 0; i < m.size(); ++i) {
    os << m.name(i);
    for (int j = 0; j < m.size(); ++j) {
      const Cell& c = m.flow(i, j);
      if (c.has_value())
        os << ',' << *c;
      else
        os << ",-";
    }
    os << '\n';
  }
  return os.str();
}

CompositeRanking composite_movements(const LoadMatrix& m) {
  CompositeRanking out;
  for (int a = 0; a < m.size(); ++a)
    for (int b = a + 1; b < m.size(); ++b)
      if (Load c = m.composite(a, b); c > 0) out.push_back({a, b, c});
  std::sort(out.begin(), out.end(), [](const CompositeEntry& x, const CompositeEntry& y) {
    if (x.composite != y.composite) return x.composite > y.composite;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return out;
}

CostMatrix to_cost_matrix(const LoadMatrix& m) {
  CostMatrix c;
  c.n = m.size();
  c.cost.reserve(static_cast<std::size_t>(c.n) * c.n);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) c.cost.push_back(m.flow(i, j));
  c.row_potential.assign(c.n, 0);
  c.col_potential.assign(c.n, 0);
  return c;
}

}  // namespace mass
