#include "cantor/rational.hpp"

#include <stdexcept>

namespace cantor {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  const std::string den_part =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  const auto is_integer = [](const std::string& s, bool allow_sign) {
    std::size_t i = (allow_sign && s.size() > 1 && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_integer(num_part, true) || !is_integer(den_part, false))
    throw std::invalid_argument("rational: expected \"p\" or \"p/q\", got \"" +
                                text + "\"");
  const mpz_class num(num_part), den(den_part);
  if (den == 0)
    throw std::invalid_argument("rational: zero denominator in \"" + text +
                                "\"");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string decimal_string(const Rational& x, int digits) {
  if (digits < 0)
    throw std::invalid_argument("decimal_string: negative digit count");
  mpz_class num = x.get_num();
  const mpz_class den = x.get_den();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const mpz_class whole = num / den;
  std::string out = sign + whole.get_str();
  if (digits == 0) return out;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class frac = (num - whole * den) * scale / den;  // truncates
  const std::string frac_str = frac.get_str();
  out += "." + std::string(static_cast<std::size_t>(digits) - frac_str.size(), '0') +
         frac_str;
  return out;
}

Rational pow_rational(const Rational& base, unsigned long exp) {
  const mpz_class base_num = base.get_num(), base_den = base.get_den();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base_num.get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base_den.get_mpz_t(), exp);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow3(long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(k < 0 ? -k : k));
  Rational r = k >= 0 ? Rational(p) : Rational(mpz_class(1), p);
  r.canonicalize();
  return r;
}

}  // namespace cantor
