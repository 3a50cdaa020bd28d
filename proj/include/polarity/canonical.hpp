#pragma once

// The canonical frame of a finite lattice: maximal filter-ideal pairs
// ordered componentwise by inclusion, and the representation map h.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarity/caps.hpp"
#include "polarity/error.hpp"
#include "polarity/frame.hpp"
#include "polarity/lattice.hpp"
#include "polarity/subset.hpp"

namespace polarity {

struct FilterIdealPair {
  Subset filter;
  Subset ideal;
  friend bool operator==(const FilterIdealPair&, const FilterIdealPair&) = default;
};

/// Proper filter, proper ideal, disjoint.
inline bool is_filter_ideal_pair(const Lattice& L, const FilterIdealPair& p) {
  return is_proper_filter(L, p.filter) && is_proper_ideal(L, p.ideal) &&
         !p.filter.intersects(p.ideal);
}

inline std::string format_pair(const Lattice& L, const FilterIdealPair& p) {
  return "(" + format_subset(L, p.filter) + "," + format_subset(L, p.ideal) + ")";
}

/// A single-element growth of one side that stays disjoint from the other.
struct PairExtension {
  Side side;
  std::size_t element;
  Subset grown;
};

struct MaximalityCheck {
  bool maximal = true;
  std::optional<PairExtension> violation;
  explicit operator bool() const { return maximal; }
};

// Growing by one element at a time suffices: if some proper filter F' ⊋ F
// is disjoint from I, then for any a ∈ F'∖F the filter generated by F ∪ {a}
// lies inside F' and so is disjoint from I too. Dually for ideals.
inline MaximalityCheck is_maximal_pair(const Lattice& L, const FilterIdealPair& p) {
  for (Side side : {Side::Filter, Side::Ideal}) {
    const Subset& own = side == Side::Filter ? p.filter : p.ideal;
    const Subset& opposite = side == Side::Filter ? p.ideal : p.filter;
    for (std::size_t a = 0; a < L.size(); ++a) {
      if (own.test(a) || opposite.test(a)) continue;
      Subset g = own;
      g.set(a);
      g = generated(L, g, side);
      if (!g.intersects(opposite)) return {false, PairExtension{side, a, std::move(g)}};
    }
  }
  return {};
}

/// Saturates the filter in one ascending pass, then the ideal against the
/// final filter.
///
/// One filter pass is enough: if growing by `a` meets I at some stage, it
/// still meets I once F is larger. Growing the ideal afterwards cannot undo
/// filter-side maximality, since a larger ideal only adds intersections.
inline FilterIdealPair extend_to_maximal(const Lattice& L, const FilterIdealPair& p) {
  if (!is_filter_ideal_pair(L, p))
    throw Error(ErrorKind::InvalidArgument, "not a disjoint proper filter-ideal pair",
                {format_pair(L, p)});
  FilterIdealPair out = p;
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (out.filter.test(a)) continue;
    Subset g = out.filter;
    g.set(a);
    g = generated_filter(L, g);
    if (!g.intersects(out.ideal)) out.filter = std::move(g);
  }
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (out.ideal.test(a)) continue;
    Subset g = out.ideal;
    g.set(a);
    g = generated_ideal(L, g);
    if (!g.intersects(out.filter)) out.ideal = std::move(g);
  }
  return out;
}

/// All maximal pairs; filters outer, ideals inner, both ascending-mask.
inline std::vector<FilterIdealPair> maximal_pairs(const Lattice& L, const Caps& caps = {}) {
  const auto filters = enumerate_filters(L, caps);
  const auto ideals = enumerate_ideals(L, caps);
  std::vector<FilterIdealPair> out;
  for (const auto& F : filters)
    for (const auto& I : ideals) {
      if (F.intersects(I)) continue;
      FilterIdealPair p{F, I};
      if (is_maximal_pair(L, p)) out.push_back(std::move(p));
    }
  return out;
}

struct CanonicalFrame {
  Lattice base;
  std::vector<FilterIdealPair> points;
  /// Point i is labelled "x<i>"; x ≤i y iff the i-th components are included.
  DoublyOrderedFrame frame;
  LatticeFrameReport axioms;
};

inline CanonicalFrame canonical_frame(const Lattice& L, const Caps& caps = {}) {
  auto points = maximal_pairs(L, caps);
  const std::size_t n = points.size();
  Relation leq1(n), leq2(n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("x" + std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (points[x].filter.is_subset_of(points[y].filter)) leq1.add(x, y);
      if (points[x].ideal.is_subset_of(points[y].ideal)) leq2.add(x, y);
    }
  }
  auto frame = frame_from_relations(std::move(labels), leq1, leq2);
  auto axioms = check_lattice_frame(frame);
  return {L, std::move(points), std::move(frame), std::move(axioms)};
}

/// h(a) = points whose filter contains a, for every element a. Each image is
/// checked to be a stable set.
inline std::vector<Subset> h_map(const CanonicalFrame& cf) {
  std::vector<Subset> out;
  const std::size_t n = cf.points.size();
  for (std::size_t a = 0; a < cf.base.size(); ++a) {
    Subset img(n);
    for (std::size_t x = 0; x < n; ++x)
      if (cf.points[x].filter.test(a)) img.set(x);
    if (lr_closure_checked(cf.frame, img) != img)
      throw Error(ErrorKind::InternalMismatch, "h(" + cf.base.label(a) + ") is not stable",
                  {cf.base.label(a)});
    out.push_back(std::move(img));
  }
  return out;
}

}  // namespace polarity
