#include "czr/setcode_io.hpp"

#include "czr/syntax_error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace czr {

std::string write_setcode(const TreeSetCode& code) {
  std::vector<std::string> lines;
  lines.reserve(code.size());
  for (const auto& t : code.tuples()) lines.push_back(format_tuple(t));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

Tuple parse_tuple(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) { throw SyntaxError(pos, why); };
  if (text.empty() || text.front() != '(') fail("tuple must start with '('");
  ++pos;
  Tuple out;
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
  } else {
    for (;;) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected decimal natural");
      out.emplace_back(std::string(text.substr(start, pos - start)));
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
  }
  if (pos != text.size()) fail("trailing characters after tuple");
  return out;
}

TreeSetCode read_setcode(std::string_view text) {
  TupleSet tuples;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(line_start, end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        tuples.insert(parse_tuple(line));
      } catch (const SyntaxError& e) {
        throw SyntaxError(line_start + e.offset, e.what());
      }
    }
    line_start = end + 1;
  }
  return TreeSetCode::from_tuples(std::move(tuples));
}

TreeSetCode read_setcode_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open set-code file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_setcode(buf.str());
}

}  // namespace czr
