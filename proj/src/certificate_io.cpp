#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <sstream>
#include <string>

#include "progressio/construct.hpp"
#include "progressio/error.hpp"

namespace progressio {

namespace {

constexpr std::array<std::string_view, 13> kKeys = {"p",      "n",      "m",      "e", "alpha1",
                                                    "alpha2", "gamma1", "gamma2", "a", "b",
                                                    "c",      "h1",     "h2"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw Error(ErrorCode::ParseError, "certificate key '" + std::string(key) + "' expects an integer, got '" +
                                           std::string(v) + "'");
  }
  return out;
}

}  // namespace

std::string serialize(const StableCertificate& cert, const std::vector<std::string>& header_lines) {
  std::ostringstream os;
  for (const auto& line : header_lines) os << "# " << line << '\n';
  os << "p = " << cert.field.modulus() << '\n'
     << "n = " << cert.n << '\n'
     << "m = " << cert.m << '\n'
     << "e = " << cert.e << '\n'
     << "alpha1 = " << cert.alpha1 << '\n'
     << "alpha2 = " << cert.alpha2 << '\n'
     << "gamma1 = " << cert.gamma1 << '\n'
     << "gamma2 = " << cert.gamma2 << '\n'
     << "a = " << to_coeff_list(cert.a) << '\n'
     << "b = " << to_coeff_list(cert.b) << '\n'
     << "c = " << to_coeff_list(cert.c) << '\n'
     << "h1 = " << to_coeff_list(cert.h1) << '\n'
     << "h2 = " << to_coeff_list(cert.h2) << '\n';
  return os.str();
}

StableCertificate parse_certificate(std::string_view text) {
  std::map<std::string, std::string, std::less<>> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "certificate line " + std::to_string(line_no) + " has no '='");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw Error(ErrorCode::ParseError, "unknown certificate key '" + key + "'");
    }
    if (!values.emplace(key, std::string(trim(line.substr(eq + 1)))).second) {
      throw Error(ErrorCode::ParseError, "duplicate certificate key '" + key + "'");
    }
  }
  for (auto key : kKeys) {
    if (!values.contains(key)) throw Error(ErrorCode::ParseError, "missing certificate key '" + std::string(key) + "'");
  }

  const PrimeField F(parse_uint("p", values.at("p")));
  auto elem = [&](const char* key) {
    const std::uint64_t v = parse_uint(key, values.at(key));
    if (v >= F.modulus()) {
      throw Error(ErrorCode::ParseError, std::string("certificate key '") + key + "' is not reduced mod p");
    }
    return FieldElem{v};
  };
  auto poly = [&](const char* key) { return parse_poly(F, values.at(key)); };
  auto size = [&](const char* key) { return static_cast<std::size_t>(parse_uint(key, values.at(key))); };

  return StableCertificate{F,          poly("a"),       poly("b"),      poly("c"),      size("n"),
                           size("m"),  size("e"),       elem("alpha1"), elem("alpha2"), elem("gamma1"),
                           elem("gamma2"), poly("h1"), poly("h2")};
}

}  // namespace progressio
