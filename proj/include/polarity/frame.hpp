#pragma once

// Doubly ordered frames, the l/r polarity operators, modal box/diamond,
// stable sets, the lattice-frame axioms and the complex algebra of stable
// sets.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarity/caps.hpp"
#include "polarity/error.hpp"
#include "polarity/lattice.hpp"
#include "polarity/relation.hpp"
#include "polarity/subset.hpp"

namespace polarity {

/// Selects ≤1 or ≤2.
enum class Order : int { First = 1, Second = 2 };

inline Order other(Order o) { return o == Order::First ? Order::Second : Order::First; }

/// First pair (x, y), x != y, with x ≤1 y and x ≤2 y.
inline std::optional<IndexPair> doubly_ordered_violation(const Relation& leq1,
                                                         const Relation& leq2) {
  for (std::size_t x = 0; x < leq1.size(); ++x) {
    Subset both = leq1.successors(x) & leq2.successors(x);
    both.reset(x);
    if (auto y = both.find_first(); y != Subset::npos) return IndexPair{x, y};
  }
  return std::nullopt;
}

class DoublyOrderedFrame;
DoublyOrderedFrame frame_from_relations(std::vector<std::string> labels, const Relation& leq1,
                                        const Relation& leq2);

/// A carrier with two quasiorders whose intersection is the identity.
class DoublyOrderedFrame {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t x) const { return labels_.at(x); }

  const Relation& relation(Order o) const { return o == Order::First ? leq1_ : leq2_; }
  bool leq(Order o, std::size_t x, std::size_t y) const { return relation(o).holds(x, y); }
  /// ↑x with respect to the chosen quasiorder.
  const Subset& up(Order o, std::size_t x) const { return relation(o).successors(x); }

  friend bool operator==(const DoublyOrderedFrame&, const DoublyOrderedFrame&) = default;

 private:
  DoublyOrderedFrame() = default;
  friend DoublyOrderedFrame frame_from_relations(std::vector<std::string>, const Relation&,
                                                 const Relation&);

  std::vector<std::string> labels_;
  Relation leq1_;
  Relation leq2_;
};

/// Closes both relations reflexively and transitively, then validates.
/// Throws NotDoublyOrdered with the witness pair.
inline DoublyOrderedFrame frame_from_relations(std::vector<std::string> labels,
                                               const Relation& leq1, const Relation& leq2) {
  if (leq1.size() != labels.size() || leq2.size() != labels.size())
    throw Error(ErrorKind::InvalidArgument, "relation size does not match element count");
  DoublyOrderedFrame X;
  X.leq1_ = leq1.reflexive_transitive_closure();
  X.leq2_ = leq2.reflexive_transitive_closure();
  if (auto v = doubly_ordered_violation(X.leq1_, X.leq2_))
    throw Error(ErrorKind::NotDoublyOrdered,
                "'" + labels[v->first] + "' is below '" + labels[v->second] +
                    "' in both quasiorders",
                {labels[v->first], labels[v->second]});
  X.labels_ = std::move(labels);
  return X;
}

inline DoublyOrderedFrame build_frame(const std::vector<std::string>& elements,
                                      const std::vector<LabelPair>& leq1_pairs,
                                      const std::vector<LabelPair>& leq2_pairs) {
  LabelIndex index(elements);
  const std::size_t n = elements.size();
  return frame_from_relations(elements, Relation::from_pairs(n, index.resolve(leq1_pairs)),
                              Relation::from_pairs(n, index.resolve(leq2_pairs)));
}

/// l(Y) = {x : ↑₁x ∩ Y = ∅}.
inline Subset op_l(const DoublyOrderedFrame& X, const Subset& Y) {
  require_width(Y, X.size(), "op_l");
  Subset out(X.size());
  for (std::size_t x = 0; x < X.size(); ++x)
    if (!X.up(Order::First, x).intersects(Y)) out.set(x);
  return out;
}

/// r(Y) = {x : ↑₂x ∩ Y = ∅}.
inline Subset op_r(const DoublyOrderedFrame& X, const Subset& Y) {
  require_width(Y, X.size(), "op_r");
  Subset out(X.size());
  for (std::size_t x = 0; x < X.size(); ++x)
    if (!X.up(Order::Second, x).intersects(Y)) out.set(x);
  return out;
}

/// {x : ↑x ⊆ Y}.
inline Subset box(const DoublyOrderedFrame& X, Order o, const Subset& Y) {
  require_width(Y, X.size(), "box");
  Subset out(X.size());
  for (std::size_t x = 0; x < X.size(); ++x)
    if (X.up(o, x).is_subset_of(Y)) out.set(x);
  return out;
}

/// {x : ↑x ∩ Y ≠ ∅}.
inline Subset diamond(const DoublyOrderedFrame& X, Order o, const Subset& Y) {
  require_width(Y, X.size(), "diamond");
  Subset out(X.size());
  for (std::size_t x = 0; x < X.size(); ++x)
    if (X.up(o, x).intersects(Y)) out.set(x);
  return out;
}

inline bool is_increasing(const DoublyOrderedFrame& X, Order o, const Subset& Y) {
  for (auto y : members(Y))
    if (!X.up(o, y).is_subset_of(Y)) return false;
  return true;
}

/// lr(Y) computed as l(r(Y)) and as □₁◇₂(Y); throws InternalMismatch if the
/// two disagree.
inline Subset lr_closure_checked(const DoublyOrderedFrame& X, const Subset& Y) {
  Subset via_polarity = op_l(X, op_r(X, Y));
  Subset via_modal = box(X, Order::First, diamond(X, Order::Second, Y));
  if (via_polarity != via_modal)
    throw Error(ErrorKind::InternalMismatch,
                "l(r(Y)) = " + format_subset(via_polarity, X.labels()) +
                    " but box1(diamond2(Y)) = " + format_subset(via_modal, X.labels()),
                subset_labels(Y, X.labels()));
  return via_polarity;
}

namespace detail {

inline bool lr_cross_check_due() {
#ifndef NDEBUG
  return true;
#else
  thread_local std::uint32_t calls = 0;
  return (calls++ & 63u) == 0;
#endif
}

}  // namespace detail

/// l(r(Y)). Every call is cross-checked against □₁◇₂(Y) in debug builds,
/// one call in 64 in release builds.
inline Subset lr_closure(const DoublyOrderedFrame& X, const Subset& Y) {
  if (detail::lr_cross_check_due()) return lr_closure_checked(X, Y);
  return op_l(X, op_r(X, Y));
}

inline bool is_stable(const DoublyOrderedFrame& X, const Subset& Y) {
  return lr_closure(X, Y) == Y;
}

/// All stable sets of a frame in ascending-mask order.
struct StableSetFamily {
  DoublyOrderedFrame frame;
  std::vector<Subset> sets;
  std::size_t empty_index = 0;
  std::size_t full_index = 0;

  std::size_t size() const noexcept { return sets.size(); }

  std::optional<std::size_t> index_of(const Subset& Y) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), Y, MaskLess{});
    if (it == sets.end() || *it != Y) return std::nullopt;
    return static_cast<std::size_t>(it - sets.begin());
  }
};

/// Scans all 2^|X| subsets. Throws CarrierTooLarge above `caps.frame`.
inline StableSetFamily stable_sets(const DoublyOrderedFrame& X, const Caps& caps = {}) {
  check_cap(X.size(), std::min<std::size_t>(caps.frame, 63), "frame");
  StableSetFamily fam{X, {}, 0, 0};
  const std::size_t n = X.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset Y = from_mask(n, mask);
    if (is_stable(X, Y)) fam.sets.push_back(std::move(Y));
  }
  // ∅ is the least mask and X the greatest; both are always stable.
  fam.empty_index = 0;
  fam.full_index = fam.sets.size() - 1;
  if (fam.sets.front().any() || !fam.sets.back().all())
    throw Error(ErrorKind::InternalMismatch, "empty set or carrier not stable");
  return fam;
}

/// Outcome of one axiom check. On failure `witness` holds the outermost
/// quantified points: (x, y) for LF1/LF2, (x, order id) for LF0.
struct AxiomCheck {
  bool pass = true;
  std::vector<std::size_t> witness;
};

struct LatticeFrameReport {
  AxiomCheck lf0;
  AxiomCheck lf1;
  AxiomCheck lf2;
  bool all_pass() const { return lf0.pass && lf1.pass && lf2.pass; }
};

/// z is ≤-maximal iff z ≤ w implies w ≤ z.
inline bool is_maximal(const DoublyOrderedFrame& X, Order o, std::size_t z) {
  for (auto w : members(X.up(o, z)))
    if (!X.leq(o, w, z)) return false;
  return true;
}

namespace detail {

// x ≰ y ⟹ ∃z [y ≤ z ∧ ∀w (x ≤ w ⟹ z ≰' w)], with ≤ = `o`, ≤' = other(o).
inline AxiomCheck check_separation(const DoublyOrderedFrame& X, Order o) {
  const std::size_t n = X.size();
  const Order p = other(o);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (X.leq(o, x, y)) continue;
      bool found = false;
      for (std::size_t z = 0; z < n && !found; ++z) {
        if (!X.leq(o, y, z)) continue;
        bool all_w = true;
        for (std::size_t w = 0; w < n && all_w; ++w)
          if (X.leq(o, x, w) && X.leq(p, z, w)) all_w = false;
        found = all_w;
      }
      if (!found) return {false, {x, y}};
    }
  }
  return {};
}

}  // namespace detail

/// Evaluates LF0–LF2 by direct quantifier loops.
inline LatticeFrameReport check_lattice_frame(const DoublyOrderedFrame& X) {
  LatticeFrameReport rep;
  for (std::size_t x = 0; x < X.size() && rep.lf0.pass; ++x) {
    for (Order o : {Order::First, Order::Second}) {
      bool has_max = false;
      for (auto z : members(X.up(o, x)))
        if (is_maximal(X, o, z)) {
          has_max = true;
          break;
        }
      if (!has_max) {
        rep.lf0 = {false, {x, static_cast<std::size_t>(o)}};
        break;
      }
    }
  }
  rep.lf1 = detail::check_separation(X, Order::First);
  rep.lf2 = detail::check_separation(X, Order::Second);
  return rep;
}

/// Stable sets ordered by inclusion, as a lattice whose element i is
/// `family.sets[i]`.
struct ComplexAlgebra {
  StableSetFamily family;
  Lattice lattice;
};

/// Builds Cm(X): meet is intersection, join is lr of the union, bottom ∅,
/// top X. The lattice is built from the inclusion order by the general
/// validator and then cross-checked against those operations.
inline ComplexAlgebra complex_algebra(const DoublyOrderedFrame& X, const Caps& caps = {}) {
  StableSetFamily fam = stable_sets(X, caps);
  const std::size_t m = fam.size();
  check_cap(m, caps.algebra, "complex algebra");

  Relation inclusion(m);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(format_subset(fam.sets[i], X.labels()));
    for (std::size_t j = 0; j < m; ++j)
      if (fam.sets[i].is_subset_of(fam.sets[j])) inclusion.add(i, j);
  }
  Lattice L = lattice_from_order(std::move(labels), inclusion, caps.algebra);

  auto mismatch = [&](const std::string& what, std::size_t i, std::size_t j) {
    return Error(ErrorKind::InternalMismatch, what + " disagrees with the inclusion order",
                 {L.label(i), L.label(j)});
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (fam.index_of(fam.sets[i] & fam.sets[j]) != L.meet(i, j))
        throw mismatch("intersection", i, j);
      if (fam.index_of(lr_closure(X, fam.sets[i] | fam.sets[j])) != L.join(i, j))
        throw mismatch("lr of union", i, j);
    }
  }
  if (L.bottom() != fam.empty_index || L.top() != fam.full_index)
    throw mismatch("bounds", L.bottom(), L.top());
  return {std::move(fam), std::move(L)};
}

}  // namespace polarity
