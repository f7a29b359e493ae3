#ifndef WSMIL_TEXTIO_HPP
#define WSMIL_TEXTIO_HPP

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace wsmil {

// Shortest decimal form that round-trips a double exactly ("%.17g" fallback).
std::string format_double(double v);

// strtod with full-token validation; throws ParseError (with `line` if given).
double parse_double(const std::string& tok, int line = 0);
long long parse_int(const std::string& tok, int line = 0);

std::vector<std::string> split_ws(const std::string& s);

// Reads a whole text stream line by line, skipping blank and '#' comment
// lines. Keeps a 1-based line counter for error reporting.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}
  // Returns false at EOF. Comment/blank lines are skipped.
  bool next(std::string& out);
  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// FNV-1a over file bytes; used for input digests in run manifests.
std::uint64_t fnv1a64_file(const std::string& path);
std::string to_hex(std::uint64_t v);

}  // namespace wsmil

#endif  // WSMIL_TEXTIO_HPP
