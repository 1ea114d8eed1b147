#include "toricmirror/rat.hpp"

#include <cctype>

#include "toricmirror/errors.hpp"

namespace toricmirror {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::kParse, "not an exact rational: \"" + std::string(text) + "\"");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::kParse, "zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rat(n, d);
}

std::string to_string(const Rat& value) {
  if (is_integral(value)) return numerator_of(value).str();
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

std::string to_string(const Integer& value) { return value.str(); }

}  // namespace toricmirror
