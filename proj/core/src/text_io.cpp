#include "radokit/text_io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace radokit {

std::optional<std::string> LineReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }
  return std::nullopt;
}

std::string LineReader::expect(const std::string& what) {
  auto line = next();
  if (!line) throw ParseError(line_ + 1, "unexpected end of input, expected " + what);
  return *line;
}

std::vector<Integer> parse_integers(const std::string& text, std::size_t line) {
  std::istringstream ss(text);
  std::vector<Integer> out;
  std::string tok;
  while (ss >> tok) {
    Integer v;
    if (v.set_str(tok, 10) != 0) {
      throw ParseError(line, "not an integer: '" + tok + "'");
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::int64_t> parse_int64s(const std::string& text,
                                       std::size_t line) {
  std::vector<std::int64_t> out;
  for (const auto& v : parse_integers(text, line)) {
    if (!v.fits_slong_p()) throw ParseError(line, "integer out of range");
    out.push_back(v.get_si());
  }
  return out;
}

std::vector<std::int64_t> parse_int64_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto v = parse_int64s(item, 1);
    if (v.size() != 1) throw ParseError(1, "expected one integer per comma-separated item, got '" + item + "'");
    out.push_back(v[0]);
  }
  if (!text.empty() && text.back() == ',') throw ParseError(1, "trailing comma in '" + text + "'");
  return out;
}

IntegerMatrix read_matrix(std::istream& in) {
  LineReader reader(in);
  const std::string header = reader.expect("matrix header \"k d\"");
  const std::size_t header_line = reader.line_number();
  const auto dims = parse_int64s(header, header_line);
  if (dims.size() != 2 || dims[0] < 1 || dims[1] < 1) {
    throw ParseError(header_line, "header must be two positive integers \"k d\"");
  }
  const auto k = static_cast<std::size_t>(dims[0]);
  const auto d = static_cast<std::size_t>(dims[1]);
  std::vector<Integer> data;
  data.reserve(k * d);
  for (std::size_t r = 0; r < k; ++r) {
    const std::string row = reader.expect("matrix row " + std::to_string(r + 1));
    auto values = parse_integers(row, reader.line_number());
    if (values.size() != d) {
      throw ParseError(reader.line_number(),
                       "expected " + std::to_string(d) + " entries, found " +
                           std::to_string(values.size()));
    }
    for (auto& v : values) data.push_back(std::move(v));
  }
  if (reader.next()) {
    throw ParseError(reader.line_number(), "trailing data after matrix rows");
  }
  return IntegerMatrix(k, d, std::move(data));
}

IntegerMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const IntegerMatrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) out << ' ';
      out << a(r, c);
    }
    out << '\n';
  }
}

}  // namespace radokit
