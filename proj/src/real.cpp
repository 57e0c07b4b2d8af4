#include "outpost/real.hpp"

#include <cstdio>
#include <vector>

namespace outpost::mp {

namespace detail {
unsigned& thread_prec() {
  thread_local unsigned p = 256;
  return p;
}
}  // namespace detail

std::string Real::str(unsigned digits) const {
  if (digits < 2) digits = 2;
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), v);
  return std::string(buf.data());
}

}  // namespace outpost::mp
