#include "repring/rational.hpp"

#include <cctype>

namespace repring {

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw DomainError("bad rational '" + text + "'");
    return Rational(std::stoll(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw DomainError("bad rational '" + text + "'");
  return Rational(std::stoll(num), std::stoll(den));
}

}  // namespace repring
