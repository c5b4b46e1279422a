#include "ccert/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ccert {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
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
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  Rat value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal: " + text);
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    value = make_rat(n, d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw std::invalid_argument("malformed rational literal: " + text);
    if (!whole.empty() && !all_digits(whole))
      throw std::invalid_argument("malformed rational literal: " + text);
    if (!frac.empty() && !all_digits(frac))
      throw std::invalid_argument("malformed rational literal: " + text);
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int n = whole.empty() ? Int(0) : Int(whole);
    Int f = frac.empty() ? Int(0) : Int(frac);
    value = make_rat(n * scale + f, scale);
  } else {
    if (!all_digits(s))
      throw std::invalid_argument("malformed rational literal: " + text);
    value = Rat(Int(s));
  }
  if (negative) value = -value;
  return value;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_to_decimal(const Rat& r, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int scaled = (r.get_num() * scale) / r.get_den();  // truncates toward zero
  bool negative = scaled < 0;
  Int mag = abs(scaled);
  std::string s = mag.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  // Trim trailing zeros but keep at least one fractional digit removed dot.
  if (digits > 0) {
    auto last = s.find_last_not_of('0');
    if (s[last] == '.') last -= 1;
    s = s.substr(0, last + 1);
  }
  return negative && mag != 0 ? "-" + s : s;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int num_root, den_root;
  if (mpz_perfect_square_p(r.get_num().get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(r.get_den().get_mpz_t()) == 0) return std::nullopt;
  mpz_sqrt(num_root.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), r.get_den().get_mpz_t());
  return make_rat(num_root, den_root);
}

}  // namespace ccert
