#include "czr/tuple_code.hpp"

#include <cctype>

namespace czr {

Nat parse_nat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty natural");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("not a natural: " + text);
  }
  return Nat(text);
}

Nat cantor_pair(const Nat& x, const Nat& y) {
  Nat s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  // w = floor((sqrt(8z + 1) - 1) / 2) is the diagonal index.
  Nat w = (boost::multiprecision::sqrt(Nat(8 * z + 1)) - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat y = z - t;
  return {w - y, y};
}

Nat encode_tuple(const Tuple& s) {
  if (s.empty()) return 0;
  Nat payload = s.back();
  for (std::size_t i = s.size() - 1; i-- > 0;) payload = cantor_pair(s[i], payload);
  return 1 + cantor_pair(Nat(s.size() - 1), payload);
}

Nat arity(const Nat& n) {
  if (n == 0) return 0;
  return cantor_unpair(n - 1).first + 1;
}

Tuple decode_tuple(const Nat& n, std::size_t max_arity) {
  if (n == 0) return {};
  auto [len_minus_one, payload] = cantor_unpair(n - 1);
  if (len_minus_one >= max_arity) throw std::length_error("tuple arity exceeds decode limit");
  auto count = static_cast<std::size_t>(len_minus_one);
  Tuple out;
  out.reserve(count + 1);
  for (std::size_t i = 0; i < count; ++i) {
    auto [head, rest] = cantor_unpair(payload);
    out.push_back(std::move(head));
    payload = std::move(rest);
  }
  out.push_back(std::move(payload));
  return out;
}

Nat proj(const Nat& n, const Nat& i) {
  if (n == 0) throw ProjectionError("projection out of range");
  auto [len_minus_one, payload] = cantor_unpair(n - 1);
  if (i > len_minus_one) throw ProjectionError("projection out of range");
  for (Nat k = 0; k < i; ++k) payload = cantor_unpair(payload).second;
  if (i == len_minus_one) return payload;
  return cantor_unpair(payload).first;
}

}  // namespace czr
