#include "inhomcs/rational.hpp"

#include "inhomcs/errors.hpp"

namespace inhomcs {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidInput("bad rational literal: " + s);
  if (q.get_den() == 0) throw InvalidInput("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace inhomcs
