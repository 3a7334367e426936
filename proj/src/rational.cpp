#include "safeflow/rational.hpp"

#include <cctype>

namespace safeflow {

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // "p/q" round-trips the serialized form of non-decimal rationals.
  if (std::size_t slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_rational(text.substr(0, slash));
    auto den = parse_rational(text.substr(slash + 1));
    if (!num || !den || *den == 0 || denominator(*num) != 1 || denominator(*den) != 1)
      return std::nullopt;
    return *num / *den;
  }
  std::size_t dot = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (dot != std::string_view::npos) return std::nullopt;
      dot = i;
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      return std::nullopt;
    }
  }
  std::string_view int_part = dot == std::string_view::npos ? text : text.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? "" : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) return std::nullopt;

  BigInt num = 0;
  for (char c : int_part) num = num * 10 + (c - '0');
  BigInt den = 1;
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace safeflow
