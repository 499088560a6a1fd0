#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <unistd.h>

#include <Eigen/Dense>

#include "mdscale/metrics.hpp"

namespace mdscale {

// Carries the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& message)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

// Shortest-not-required decimal form that still round-trips doubles exactly.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline double parse_double(std::string_view token, const std::string& path, std::size_t line) {
  const std::string_view t = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError(path, line, "cannot parse '" + std::string(t) + "' as a number");
  return value;
}

inline long long parse_int(std::string_view token, const std::string& path, std::size_t line) {
  const std::string_view t = trim(token);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError(path, line, "cannot parse '" + std::string(t) + "' as an integer");
  return value;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Numeric grid reader shared by the matrix and point readers. Blank lines
// and lines starting with '#' are skipped; every remaining row must have the
// same number of columns.
inline std::vector<std::vector<double>> read_numeric_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    std::vector<double> row;
    for (std::string_view token : split_csv(stripped))
      row.push_back(parse_double(token, path.string(), line_no));
    if (width == 0) width = row.size();
    if (row.size() != width)
      throw ParseError(path.string(), line_no,
                       "row has " + std::to_string(row.size()) + " columns, expected " +
                           std::to_string(width));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(path.string(), line_no ? line_no : 1, "file holds no data rows");
  return rows;
}

}  // namespace detail

// Writes through a sibling temp file and renames into place, so readers
// never observe a half-written file. The parent directory is created when
// missing.
inline void atomic_write_text(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path dir = path.parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  const std::filesystem::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move temp file into '" + path.string() + "': " + ec.message());
  }
}

inline Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path) {
  const auto rows = detail::read_numeric_grid(path);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

inline void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.size()) * 12);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += detail::format_g17(m(i, j));
    }
    out += '\n';
  }
  atomic_write_text(path, out);
}

// Rows are points, columns are coordinates.
inline Eigen::MatrixXd read_points_csv(const std::filesystem::path& path) {
  return read_matrix_csv(path);
}

struct EdgeList {
  std::vector<Edge> edges;
  Eigen::Index node_count = 0;
};

// Each data row is "u,v,weight" with 0-based node ids. The node count is one
// past the largest id mentioned.
inline EdgeList read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  EdgeList out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view stripped = detail::trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto tokens = detail::split_csv(stripped);
    if (tokens.size() != 3)
      throw ParseError(path.string(), line_no,
                       "edge row needs exactly u,v,weight, found " +
                           std::to_string(tokens.size()) + " fields");
    Edge e;
    const long long u = detail::parse_int(tokens[0], path.string(), line_no);
    const long long v = detail::parse_int(tokens[1], path.string(), line_no);
    if (u < 0 || v < 0)
      throw ParseError(path.string(), line_no, "node ids must be nonnegative");
    e.u = static_cast<int>(u);
    e.v = static_cast<int>(v);
    e.weight = detail::parse_double(tokens[2], path.string(), line_no);
    out.node_count = std::max(out.node_count, static_cast<Eigen::Index>(std::max(u, v) + 1));
    out.edges.push_back(e);
  }
  if (out.edges.empty())
    throw ParseError(path.string(), line_no ? line_no : 1, "file holds no edges");
  return out;
}

// One integer label per data row.
inline std::vector<int> read_labels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::vector<int> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view stripped = detail::trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    out.push_back(static_cast<int>(detail::parse_int(stripped, path.string(), line_no)));
  }
  if (out.empty()) throw ParseError(path.string(), line_no ? line_no : 1, "file holds no labels");
  return out;
}

// Content digest for run manifests, FNV-1a over the raw bytes.
inline std::string file_digest_hex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for digest");
  std::uint64_t hash = 1469598103934665603ull;
  char buf[65536];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 1099511628211ull;
    }
    if (!in) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return std::string(hex);
}

}  // namespace mdscale
