#ifndef NCFIN_SRC_TEXT_IO_HPP
#define NCFIN_SRC_TEXT_IO_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncfin::detail {

/// Line-at-a-time reader for the versioned text formats; errors carry the
/// format name and line number.
class LineReader {
 public:
  LineReader(std::string_view text, std::string_view what) : text_(text), what_(what) {}

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view next() {
    if (at_end()) fail("unexpected end of input");
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++line_no_;
    return line;
  }

  /// Concatenates the next `count` lines with '\n' separators.
  std::string block(std::size_t count) {
    std::string body;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) body += '\n';
      body += next();
    }
    return body;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument(std::string(what_) + " line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::string_view text_;
  std::string_view what_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

inline std::vector<std::string> split_ws(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline std::size_t parse_size(const LineReader& in, const std::string& tok) {
  if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos)
    in.fail("expected a number, got '" + tok + "'");
  return std::stoul(tok);
}

/// Parses `RxC`.
inline std::pair<std::size_t, std::size_t> parse_shape(const LineReader& in, const std::string& tok) {
  auto x = tok.find('x');
  if (x == std::string::npos) in.fail("malformed shape '" + tok + "'");
  return {parse_size(in, tok.substr(0, x)), parse_size(in, tok.substr(x + 1))};
}

}  // namespace ncfin::detail

#endif  // NCFIN_SRC_TEXT_IO_HPP
