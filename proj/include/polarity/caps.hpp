#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "polarity/error.hpp"

namespace polarity {

/// Size guards. `lattice` bounds lattices built from input, `frame` bounds
/// brute-force stable-set enumeration, `algebra` bounds the number of
/// stable sets materialised as a complex algebra.
struct Caps {
  std::size_t lattice = 30;
  std::size_t frame = 20;
  std::size_t algebra = 1024;
  /// Filter/ideal enumeration scans all subsets up to this carrier size and
  /// switches to generation by single-element growth above it.
  std::size_t filter_brute_force = 20;

  /// Overrides `lattice` and `frame` with a single limit.
  Caps with_limit(std::size_t n) const {
    Caps c = *this;
    c.lattice = n;
    c.frame = n;
    return c;
  }

  /// Defaults, overridden by POLARITY_CAP when set.
  static Caps from_env() {
    Caps c;
    if (const char* v = std::getenv("POLARITY_CAP"); v != nullptr && *v != '\0') {
      char* end = nullptr;
      unsigned long n = std::strtoul(v, &end, 10);
      if (end == v || *end != '\0' || n == 0)
        throw Error(ErrorKind::InvalidArgument,
                    std::string("POLARITY_CAP must be a positive integer, got '") + v + "'");
      c = c.with_limit(n);
    }
    return c;
  }
};

inline void check_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap)
    throw Error(ErrorKind::CarrierTooLarge, std::string(what) + " has " + std::to_string(size) +
                                                " elements, cap is " + std::to_string(cap),
                {std::to_string(size), std::to_string(cap)});
}

}  // namespace polarity
