#include "phm/rational.hpp"

#include <cctype>

namespace phm {

std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

namespace {

bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Scalar> parse_scalar(const std::string& text, std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<Scalar> {
    if (error) *error = msg;
    return std::nullopt;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) return fail("malformed rational '" + text + "'");
    return Scalar(mpz_class(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-') {
    return fail("malformed rational '" + text + "'");
  }
  mpz_class n(num), d(den);
  if (d == 0) return fail("malformed rational '" + text + "': zero denominator");
  Scalar value(n, d);
  Scalar canonical = value;
  canonical.canonicalize();
  if (canonical.get_num() != n || canonical.get_den() != d) {
    return fail("rational '" + text + "' is not in lowest terms");
  }
  return canonical;
}

}  // namespace phm
