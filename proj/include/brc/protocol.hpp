#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "brc/element.hpp"
#include "brc/key.hpp"

namespace brc {

struct PlaintextVector {
  std::vector<Coeff> values;

  std::size_t length() const { return values.size(); }
  friend bool operator==(const PlaintextVector&, const PlaintextVector&) = default;
};

// Encrypted message: the ciphertext element together with the window length
// L it was produced in. L travels explicitly because trailing zero
// coefficients are not transmitted.
struct Ciphertext {
  BurnsideElement element;
  std::size_t length = 0;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

inline PlaintextVector encode_text(std::string_view text) {
  if (text.empty()) throw DomainError("empty input");
  PlaintextVector v;
  v.values.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto byte = static_cast<unsigned char>(text[i]);
    if (byte > 127) {
      throw DomainError("non-ASCII byte " + std::to_string(byte) + " at position " + std::to_string(i));
    }
    v.values.push_back(byte);
  }
  return v;
}

// Inverse of encode_text; every value must be a 7-bit character code.
inline std::string decode_text(const PlaintextVector& v) {
  std::string out;
  out.reserve(v.length());
  for (std::size_t i = 0; i < v.length(); ++i) {
    Coeff c = v.values[i];
    if (c < 0 || c > 127) {
      throw DomainError("recovered coefficient " + std::to_string(c) + " at position " + std::to_string(i) +
                        " is not a 7-bit character code (wrong key?)");
    }
    out.push_back(static_cast<char>(c));
  }
  return out;
}

// p = sum v_i D(i).
inline BurnsideElement ring_encode(const PlaintextVector& v) {
  BurnsideElement p;
  for (std::size_t i = 0; i < v.length(); ++i) p.add_term(Generator::dihedral(i + 1), v.values[i]);
  return p;
}

inline PlaintextVector ring_decode(const BurnsideElement& p, std::size_t length) {
  if (!p.within_window(length)) {
    throw SupportError("element support lies outside D(1..." + std::to_string(length) + ")");
  }
  PlaintextVector v;
  v.values.assign(length, 0);
  for (const auto& [g, c] : p.terms()) v.values[g.index() - 1] = c;
  return v;
}

namespace detail {

inline void check_key(const BurnsideElement& k) {
  if (k.coeff(Generator::o2()) != 1) throw DomainError("key element must have coefficient 1 at O2");
}

inline void check_window(const BurnsideElement& e, std::size_t length, const char* what) {
  if (length == 0) throw DomainError("window length must be >= 1");
  if (!e.within_window(length)) {
    throw SupportError(std::string(what) + " support lies outside D(1..." + std::to_string(length) + ")");
  }
}

}  // namespace detail

// c = p * k. A genuine key never moves support outside D(1..L); if the
// product does, the key is corrupt and a SupportError is raised.
inline Ciphertext encrypt(const BurnsideElement& p, std::size_t length, const BurnsideElement& k) {
  detail::check_window(p, length, "plaintext");
  detail::check_key(k);
  Ciphertext c{mul(p, k), length};
  detail::check_window(c.element, length, "ciphertext");
  return c;
}

// Multiplication by the same key again; k * k = O2 for every genuine key.
inline BurnsideElement decrypt(const Ciphertext& c, const BurnsideElement& k) {
  detail::check_window(c.element, c.length, "ciphertext");
  detail::check_key(k);
  BurnsideElement p = mul(c.element, k);
  detail::check_window(p, c.length, "recovered plaintext");
  return p;
}

// ---------------------------------------------------------------------------
// File formats

inline constexpr std::string_view kKeyHeader = "BRC-KEY v1";
inline constexpr std::string_view kCiphertextHeader = "BRC-CT v1";

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

}  // namespace detail

inline std::string write_key_file(const KeySet& s) {
  std::string out(kKeyHeader);
  out += "\nS";
  for (Index m : s.indices()) out += " " + std::to_string(m);
  out += '\n';
  return out;
}

inline KeySet read_key_file(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != kKeyHeader) throw ParseError("missing or unknown key file header");
  if (lines.size() != 2) throw ParseError("key file must contain exactly two lines");
  const std::string& body = lines[1];
  if (body.rfind("S ", 0) != 0) throw ParseError("key file line 2 must start with 'S '");
  std::vector<Index> indices;
  std::string_view rest(body);
  rest.remove_prefix(2);
  while (!rest.empty()) {
    auto sp = rest.find(' ');
    auto tok = rest.substr(0, sp);
    Index v = detail::parse_number<Index>(tok, "key index");
    if (v == 0) throw ParseError("key index must be positive");
    if (!indices.empty() && v <= indices.back()) throw ParseError("key indices must be strictly increasing");
    indices.push_back(v);
    if (sp == std::string_view::npos) break;
    rest.remove_prefix(sp + 1);
    if (rest.empty()) throw ParseError("trailing space in key file");
  }
  if (indices.empty()) throw ParseError("key file lists no indices");
  return KeySet(std::move(indices));
}

inline std::string write_ciphertext_file(const Ciphertext& c) {
  std::string out(kCiphertextHeader);
  out += "\nL " + std::to_string(c.length) + "\n";
  out += render(c.element);
  return out;
}

inline Ciphertext read_ciphertext_file(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != kCiphertextHeader) throw ParseError("missing or unknown ciphertext header");
  if (lines.size() < 3) throw ParseError("truncated ciphertext file");
  if (lines[1].rfind("L ", 0) != 0) throw ParseError("ciphertext line 2 must be 'L <length>'");
  auto length = detail::parse_number<std::size_t>(std::string_view(lines[1]).substr(2), "length");
  if (length == 0) throw ParseError("declared length must be >= 1");
  Ciphertext c{parse_element({lines.begin() + 2, lines.end()}), length};
  if (!c.element.within_window(length)) throw ParseError("ciphertext support exceeds declared length");
  return c;
}

}  // namespace brc
