#include "fairdiv/rational.hpp"

#include <cctype>

namespace fairdiv {

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

namespace {

// [1-9][0-9]*: no sign, no leading zeros.
bool is_positive_integer_token(std::string_view text) {
  if (text.empty() || text[0] < '1' || text[0] > '9') return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text == "0") return Rational(0);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_positive_integer_token(text)) return std::nullopt;
    return Rational(BigInt(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_positive_integer_token(num) || !is_positive_integer_token(den)) return std::nullopt;
  return Rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

}  // namespace fairdiv
