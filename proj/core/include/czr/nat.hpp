#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace czr {

// Realizers, labels and tuple codes all live in one namespace of naturals.
// Cantor pairing grows quickly, so naturals are arbitrary precision.
using Nat = boost::multiprecision::cpp_int;

using Tuple = std::vector<Nat>;

inline std::string to_string(const Nat& n) { return n.str(); }

// Throws std::invalid_argument on anything but a plain decimal literal.
Nat parse_nat(const std::string& text);

}  // namespace czr
