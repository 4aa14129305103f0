#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace czr {

struct SyntaxError : std::runtime_error {
  SyntaxError(std::size_t pos, const std::string& what)
      : std::runtime_error("at offset " + std::to_string(pos) + ": " + what), offset(pos) {}
  std::size_t offset;
};

}  // namespace czr
