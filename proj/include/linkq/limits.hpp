#pragma once

#include <cerrno>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace linkq {

/// Resource caps for the exponential searches.
///
/// Environment overrides:
///   LQ_MAX_MU          permutation searches and canonical_form
///   LQ_MAX_SUBSET_MU   inseparable-sublink enumeration
///   LQ_MAX_COLORINGS   candidate bound for the coloring counters
struct SearchLimits {
  std::size_t max_mu = 10;
  std::size_t max_canonical_mu = 8;
  std::size_t max_subset_mu = 12;
  std::uint64_t max_colorings = 100'000'000;
  std::size_t max_quandle_size = 4096;

  static SearchLimits from_environment() {
    SearchLimits limits;
    if (auto v = read_env("LQ_MAX_MU")) {
      limits.max_mu = static_cast<std::size_t>(*v);
      limits.max_canonical_mu = static_cast<std::size_t>(*v);
    }
    if (auto v = read_env("LQ_MAX_SUBSET_MU"))
      limits.max_subset_mu = static_cast<std::size_t>(*v);
    if (auto v = read_env("LQ_MAX_COLORINGS")) limits.max_colorings = *v;
    return limits;
  }

 private:
  static std::optional<std::uint64_t> read_env(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return {};
    char* end = nullptr;
    errno = 0;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (errno != 0 || end == raw || *end != '\0' || raw[0] == '-')
      throw std::invalid_argument(std::string(name) +
                              " must be a non-negative integer");
    return static_cast<std::uint64_t>(parsed);
  }
};

namespace detail {

/// base^exponent, saturating at UINT64_MAX.
inline std::uint64_t saturating_power(std::uint64_t base,
                                      std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 &&
        result > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    result *= base;
  }
  return result;
}

}  // namespace detail
}  // namespace linkq
