#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polarity/error.hpp"

namespace polarity {

/// A subset of a finite carrier, as a membership mask over element indices.
/// Bit i is element i; the mask width is the carrier size.
using Subset = boost::dynamic_bitset<std::uint64_t>;

inline Subset empty_subset(std::size_t width) { return Subset(width); }

inline Subset full_subset(std::size_t width) {
  Subset s(width);
  s.set();
  return s;
}

inline Subset singleton(std::size_t width, std::size_t i) {
  Subset s(width);
  s.set(i);
  return s;
}

/// Subset from the low `width` bits of `mask`; width must be <= 64.
inline Subset from_mask(std::size_t width, std::uint64_t mask) {
  Subset s(width);
  for (std::size_t i = 0; i < width; ++i)
    if ((mask >> i) & 1u) s.set(i);
  return s;
}

inline Subset from_indices(std::size_t width, const std::vector<std::size_t>& idx) {
  Subset s(width);
  for (auto i : idx) s.set(i);
  return s;
}

inline std::vector<std::size_t> members(const Subset& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

/// Ascending-mask order: compare the subsets as unsigned integers with
/// element i weighted 2^i. Widths must agree.
inline bool mask_less(const Subset& a, const Subset& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a.test(i) != b.test(i)) return b.test(i);
  }
  return false;
}

struct MaskLess {
  bool operator()(const Subset& a, const Subset& b) const { return mask_less(a, b); }
};

inline void require_width(const Subset& s, std::size_t width, const char* what) {
  if (s.size() != width)
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": subset width " + std::to_string(s.size()) +
                    " does not match carrier size " + std::to_string(width));
}

/// "{a,b}" rendering using carrier labels.
inline std::string format_subset(const Subset& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (auto i : members(s)) {
    if (!first) out += ",";
    out += labels.at(i);
    first = false;
  }
  return out + "}";
}

inline std::vector<std::string> subset_labels(const Subset& s,
                                              const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (auto i : members(s)) out.push_back(labels.at(i));
  return out;
}

}  // namespace polarity
