#include "shiftcharge/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace shiftcharge {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw std::invalid_argument("not a rational: '" + text + "'");

  Rat value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    Int n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    value = Rat(n, d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    Int n(whole + frac, 10);
    Int d = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) d *= 10;
    value = Rat(n, d);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("not a rational: '" + text + "'");
    value = Rat(Int(s, 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string rat_to_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat rat_pow(const Rat& x, unsigned long n) {
  Rat result = 1;
  Rat base = x;
  while (n > 0) {
    if (n & 1UL) result *= base;
    base *= base;
    n >>= 1UL;
  }
  return result;
}

int rat_sign(const Rat& value) { return sgn(value); }

Rat rat_abs(const Rat& value) { return abs(value); }

}  // namespace shiftcharge
