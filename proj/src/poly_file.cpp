#include "nttlab/poly_file.hpp"

#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

namespace nttlab {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_coefficient(std::string_view token, std::size_t line) {
  token = trim(token);
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError(line, "bad coefficient '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

PolyFile parse_poly_file(std::string_view text) {
  static const std::regex directive(R"(^#\s*q\s*=\s*(\d+)\s+n\s*=\s*(\d+)\s*$)");
  PolyFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!file.rows.empty()) throw ParseError(line_no, "comment after the first polynomial");
      const std::string copy(line);
      std::smatch m;
      if (std::regex_match(copy, m, directive)) {
        file.q = parse_coefficient(m[1].str(), line_no);
        file.n = parse_coefficient(m[2].str(), line_no);
      }
      file.header.push_back(copy);
      continue;
    }
    std::vector<std::uint64_t> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      row.push_back(parse_coefficient(line.substr(start, comma - start), line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    file.rows.push_back(std::move(row));
  }
  return file;
}

std::string serialize_poly_file(const PolyFile& file) {
  std::string out;
  for (const auto& h : file.header) {
    out += h;
    out += '\n';
  }
  for (const auto& row : file.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string directive_line(std::uint64_t q, std::uint64_t n) {
  return "# q=" + std::to_string(q) + " n=" + std::to_string(n);
}

void check_rows(const PolyFile& file, std::uint64_t q, std::uint64_t n) {
  for (std::size_t r = 0; r < file.rows.size(); ++r) {
    const auto& row = file.rows[r];
    if (row.size() != n) {
      throw ParseError(r + 1, "polynomial " + std::to_string(r + 1) + " has " +
                                  std::to_string(row.size()) + " coefficients, expected " +
                                  std::to_string(n));
    }
    for (auto c : row) {
      if (c >= q) {
        throw ParseError(r + 1, "coefficient " + std::to_string(c) + " in polynomial " +
                                    std::to_string(r + 1) + " is not below q=" + std::to_string(q));
      }
    }
  }
}

PolyFile read_poly_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poly_file(buf.str());
}

void write_poly_file(const std::string& path, const PolyFile& file) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_poly_file(file);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace nttlab
