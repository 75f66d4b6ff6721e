#include "berncov/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string_view>

namespace berncov {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Splits an optional leading sign off an integer literal.
std::pair<int, std::string_view> split_sign(std::string_view s) {
  int sign = 1;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if (s.front() == '-') sign = -1;
    s.remove_prefix(1);
  }
  return {sign, s};
}

BigInt pow10(std::size_t exponent) {
  BigInt result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= 10;
  return result;
}

[[noreturn]] void fail(const std::string& text, const char* why) {
  throw std::invalid_argument("parse_rational: " + std::string(why) + ": \"" +
                              text + "\"");
}

}  // namespace

std::string format_fraction(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  std::string_view s(text);
  if (s.empty()) fail(text, "empty input");
  if (s.find_first_of("eE") != std::string_view::npos)
    fail(text, "scientific notation is not supported");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto [num_sign, num_digits] = split_sign(s.substr(0, slash));
    auto [den_sign, den_digits] = split_sign(s.substr(slash + 1));
    if (!all_digits(num_digits) || !all_digits(den_digits))
      fail(text, "malformed fraction");
    BigInt num = BigInt(std::string(num_digits)) * num_sign;
    BigInt den = BigInt(std::string(den_digits)) * den_sign;
    if (den == 0) fail(text, "zero denominator");
    return Rational(num, den);
  }

  auto [sign, body] = split_sign(s);
  auto dot = body.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(body)) fail(text, "malformed integer");
    return Rational(BigInt(std::string(body)) * sign);
  }
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = body.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) fail(text, "malformed decimal");
  if (!int_part.empty() && !all_digits(int_part)) fail(text, "malformed decimal");
  if (!frac_part.empty() && !all_digits(frac_part)) fail(text, "malformed decimal");

  BigInt scale = pow10(frac_part.size());
  BigInt num = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
  num *= scale;
  if (!frac_part.empty()) num += BigInt(std::string(frac_part));
  return Rational(num * sign, scale);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace berncov
