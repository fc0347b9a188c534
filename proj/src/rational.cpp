#include "cochar/rational.hpp"

#include <cctype>

#include "cochar/errors.hpp"

namespace cochar {

namespace {

bool is_int_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  Int num = int_from_string(s.substr(0, slash));
  Int den = int_from_string(s.substr(slash + 1));
  if (den == 0) throw argument_error("zero denominator: " + s);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int int_from_string(const std::string& s) {
  if (!is_int_literal(s)) throw argument_error("not an integer: " + s);
  return Int(s, 10);
}

Int binomial(long n, long k) {
  if (n < 0) throw argument_error("binomial with negative n");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw argument_error("factorial of a negative number");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace cochar
