#include "weylarr/sign_condition.hpp"

namespace weylarr {

namespace {
char sign_char(int s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }
}  // namespace

std::string to_string(const SignCondition& c) {
  std::string out;
  for (int i = 1; i <= c.n; ++i) {
    if (i > 1) out += '/';
    for (int j = i; j <= c.n; ++j) out += sign_char(c.weight(i, j));
  }
  out += '|';
  for (std::int8_t r : c.roots) out += sign_char(r);
  return out;
}

}  // namespace weylarr
