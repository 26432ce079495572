#include "cubicsym/rational.hpp"

#include <cctype>

#include "cubicsym/errors.hpp"

namespace cubicsym {

std::string to_string(const Rational& value) {
  const Int num = numerator(value);
  const Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](const char* what) -> Int {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits_from = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_from)
      throw ParseError(std::string("expected ") + what + " in rational literal", start);
    return Int(std::string(text.substr(start, i - start)));
  };

  Int num = read_int("numerator");
  skip_ws();
  Int den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int("denominator");
    if (den == 0) throw ParseError("zero denominator in rational literal", i);
  }
  skip_ws();
  if (i != text.size())
    throw ParseError("trailing characters after rational literal", i);
  return Rational(num, den);
}

} // namespace cubicsym
