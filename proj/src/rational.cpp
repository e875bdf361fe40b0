#include "vardim/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace vardim {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const long long num = std::stoll(s.substr(0, slash));
    const long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
    return Rat(num, den);
  }
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac_len = s.size() - dot - 1;
    if (frac_len > 15) throw std::invalid_argument("decimal literal too long: " + s);
    long long den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rat(std::stoll(digits), den);
  }
  return Rat(std::stoll(s));
}

std::string rat_to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace vardim
