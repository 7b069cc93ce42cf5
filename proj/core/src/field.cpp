#include "homlab/field.hpp"

#include <cstdlib>
#include <string>

namespace homlab {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t default_prime() {
  if (const char* env = std::getenv("HOMLAB_PRIME")) {
    unsigned long v = std::strtoul(env, nullptr, 10);
    if (v >= 2 && v < (1ul << 31) && is_prime_u32(static_cast<std::uint32_t>(v)))
      return static_cast<std::uint32_t>(v);
    throw std::invalid_argument("HOMLAB_PRIME is not a prime below 2^31: " + std::string(env));
  }
  return 32003;
}

}  // namespace homlab
