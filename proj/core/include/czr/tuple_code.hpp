#pragma once

#include "czr/nat.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace czr {

struct ProjectionError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Cantor pairing: pair(x, y) = (x + y)(x + y + 1)/2 + y.
Nat cantor_pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> cantor_unpair(const Nat& z);

/// Fixed sequence encoding shared with every persisted code:
///   enc(<>)  = 0
///   enc(s)   = 1 + pair(len(s) - 1, payload(s))       for len(s) >= 1
///   payload(<a>)      = a
///   payload(<a> ++ t) = pair(a, payload(t))
/// Total and bijective, so every natural decodes to exactly one sequence.
Nat encode_tuple(const Tuple& s);

/// Materializes the whole sequence. Throws std::length_error when the arity
/// exceeds `max_arity`; use arity()/proj() to inspect arbitrary naturals.
Tuple decode_tuple(const Nat& n, std::size_t max_arity = 1u << 20);

Nat arity(const Nat& n);

/// Component i of decode_tuple(n). Throws ProjectionError when i >= arity(n).
Nat proj(const Nat& n, const Nat& i);
inline Nat proj(const Nat& n, std::size_t i) { return proj(n, Nat(i)); }

}  // namespace czr
