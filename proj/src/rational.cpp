#include "bta/rational.hpp"

#include <cctype>

namespace bta {

Rational make_rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw ParseError("malformed rational '" + text + "' (expected \"p/q\")");
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
    throw ParseError("malformed rational '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw ParseError("rational '" + text + "' has zero denominator");
  }
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  return *this *= o.inverse();
}

ComplexRational ComplexRational::inverse() const {
  if (is_zero()) throw NotInvertible("division by zero complex rational");
  Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

std::string ComplexRational::str() const {
  if (im_ == 0) return rational_to_string(re_);
  std::string s = rational_to_string(re_);
  s += (im_ < 0) ? "-" : "+";
  s += rational_to_string(abs(im_)) + "i";
  return s;
}

}  // namespace bta
