#include <cctype>
#include <charconv>
#include <string>

#include "progressio/error.hpp"
#include "progressio/poly.hpp"

namespace progressio {

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "polynomial \"" + std::string(text) + "\": " + why);
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

// Reduces a nonnegative decimal literal of any length into [0, p).
FieldElem reduce_decimal(const PrimeField& F, std::string_view digits) {
  FieldElem acc{};
  const FieldElem ten = F.from_unsigned(10);
  for (char ch : digits) acc = F.add(F.mul(acc, ten), F.from_unsigned(static_cast<std::uint64_t>(ch - '0')));
  return acc;
}

std::size_t scan_digits(std::string_view s, std::size_t pos) {
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

Poly parse_coeff_list(const PrimeField& F, std::string_view original, std::string_view s) {
  std::vector<FieldElem> coeffs;
  std::size_t pos = 0;
  while (true) {
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) negative = s[pos++] == '-';
    const std::size_t end = scan_digits(s, pos);
    if (end == pos) parse_fail(original, "expected an integer coefficient at offset " + std::to_string(pos));
    FieldElem c = reduce_decimal(F, s.substr(pos, end - pos));
    coeffs.push_back(negative ? F.neg(c) : c);
    pos = end;
    if (pos == s.size()) break;
    if (s[pos] != ',') parse_fail(original, "unexpected character '" + std::string(1, s[pos]) + "'");
    ++pos;
  }
  return Poly(F, std::move(coeffs));
}

Poly parse_symbolic(const PrimeField& F, std::string_view original, std::string_view s) {
  std::vector<FieldElem> coeffs;
  auto add_term = [&](FieldElem c, std::size_t k) {
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = F.add(coeffs[k], c);
  };

  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      parse_fail(original, "expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;

    FieldElem coeff{1};
    bool have_coeff = false;
    const std::size_t end = scan_digits(s, pos);
    if (end != pos) {
      coeff = reduce_decimal(F, s.substr(pos, end - pos));
      have_coeff = true;
      pos = end;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || (s[pos] != 'X' && s[pos] != 'x')) parse_fail(original, "dangling '*'");
      }
    }

    std::size_t power = 0;
    if (pos < s.size() && (s[pos] == 'X' || s[pos] == 'x')) {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::size_t pend = scan_digits(s, pos);
        if (pend == pos) parse_fail(original, "expected an exponent after '^'");
        std::uint64_t k = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + pend, k);
        if (ec != std::errc{} || k > (std::uint64_t{1} << 24)) parse_fail(original, "exponent out of range");
        power = static_cast<std::size_t>(k);
        pos = pend;
      }
    } else if (!have_coeff) {
      parse_fail(original, "expected a term at offset " + std::to_string(pos));
    }
    add_term(negative ? F.neg(coeff) : coeff, power);
  }
  if (first) parse_fail(original, "empty input");
  return Poly(F, std::move(coeffs));
}

}  // namespace

Poly parse_poly(const PrimeField& field, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) parse_fail(text, "empty input");
  if (s.find(',') != std::string::npos) return parse_coeff_list(field, text, s);
  return parse_symbolic(field, text, s);
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t k = f.size(); k-- > 0;) {
    const FieldElem c = f[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c.value);
      continue;
    }
    if (c.value != 1) out += std::to_string(c.value) + "*";
    out += 'X';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string to_coeff_list(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(f[i].value);
  }
  return out;
}

}  // namespace progressio
