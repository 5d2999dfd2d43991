#include "normgate/format.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <sstream>

#include "normgate/errors.hpp"

namespace normgate {

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string out = format_double(z.real());
  if (!std::signbit(z.imag())) out += '+';
  return out + format_double(z.imag()) + "i";
}

double parse_real(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw InvalidInput("cannot parse number '" + std::string(s) + "'");
  return v;
}

Complex parse_complex(std::string_view s) {
  if (s.empty()) throw InvalidInput("empty complex number");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign
  // and not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (body.empty() || body == "+" || body == "-")
      return {0.0, body == "-" ? -1.0 : 1.0};
    return {0.0, parse_real(body)};
  }
  const std::string_view re = body.substr(0, split);
  std::string_view im = body.substr(split);
  double imag = 0.0;
  if (im == "+") imag = 1.0;
  else if (im == "-") imag = -1.0;
  else imag = parse_real(im);
  return {parse_real(re), imag};
}

}  // namespace normgate
