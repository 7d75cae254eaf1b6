#include "mwb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mwb {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  *this = Rational(BigInt(num), BigInt(den));
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  // Boost 1.74 rejects a negative denominator here, so the sign moves to the numerator first.
  v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(v_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(v_); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::string Rational::str() const {
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::parse(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  std::size_t dot = text.find('.');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash != std::string::npos) {
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) throw bad();
    for (char ch : frac)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = parse_int(whole);
    BigInt f(frac);
    BigInt num = (w < 0 ? -w : w) * scale + f;
    return Rational(negative ? BigInt(-num) : num, scale);
  }
  return Rational(parse_int(text), BigInt(1));
}

}  // namespace mwb
