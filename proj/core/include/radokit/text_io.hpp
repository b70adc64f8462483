#pragma once

// Plain-text formats shared by the command-line tool.
//
// Matrix format: the first non-comment line is "k d", followed by k lines of
// d space-separated integers. Lines whose first non-blank character is '#'
// and blank lines are ignored everywhere.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "radokit/exact_linalg.hpp"

namespace radokit {

// Yields the significant lines of a stream together with their 1-based line
// numbers, skipping blanks and '#' comments.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next significant line, or nullopt at end of input.
  std::optional<std::string> next();
  // Like next() but raises ParseError naming `what` at end of input.
  std::string expect(const std::string& what);

  std::size_t line_number() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

// Splits on whitespace and parses each token as a signed integer.
std::vector<Integer> parse_integers(const std::string& text, std::size_t line);
std::vector<std::int64_t> parse_int64s(const std::string& text,
                                       std::size_t line);

// Comma separated list, e.g. "5,2" or "1, 1, 2".
std::vector<std::int64_t> parse_int64_list(const std::string& text);

IntegerMatrix read_matrix(std::istream& in);
IntegerMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const IntegerMatrix& a);

}  // namespace radokit
