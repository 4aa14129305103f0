#pragma once

#include "czr/syntax_error.hpp"
#include "czr/treeset.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace czr {

/// Set-code text format: one tuple per line as "(a,b,...)" with "()" for the
/// root, lines in byte-lexicographic order, no duplicates, LF endings.
std::string write_setcode(const TreeSetCode& code);

/// Accepts lines in any order; rejects malformed lines and invalid trees
/// (SyntaxError / InvalidSetCode).
TreeSetCode read_setcode(std::string_view text);
TreeSetCode read_setcode_file(const std::string& path);

/// "(1,2)" -> {1, 2}
Tuple parse_tuple(std::string_view text);

}  // namespace czr
