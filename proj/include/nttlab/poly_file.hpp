#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nttlab {

/// Text format for batches of polynomials:
///
///   # q=7681 n=4          optional directive
///   # any other comment
///   1,2,3,4               one polynomial per line, constant term first
///   5,6,7,8
///
/// Comment lines ('#') may only appear before the first polynomial. Blank
/// lines are ignored.
struct PolyFile {
  std::vector<std::string> header;  // comment lines verbatim, directive included
  std::optional<std::uint64_t> q;   // from the directive, if present
  std::optional<std::uint64_t> n;
  std::vector<std::vector<std::uint64_t>> rows;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

PolyFile parse_poly_file(std::string_view text);

/// Header lines, then one comma-separated row per line, each '\n'-terminated.
std::string serialize_poly_file(const PolyFile& file);

std::string directive_line(std::uint64_t q, std::uint64_t n);

/// Throws ParseError if a row has the wrong length or a coefficient >= q.
void check_rows(const PolyFile& file, std::uint64_t q, std::uint64_t n);

PolyFile read_poly_file(const std::string& path);
void write_poly_file(const std::string& path, const PolyFile& file);

}  // namespace nttlab
