#pragma once

// Finite bounded lattices: construction from a generating order, table-based
// join/meet, and proper filters and ideals.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polarity/caps.hpp"
#include "polarity/error.hpp"
#include "polarity/relation.hpp"
#include "polarity/subset.hpp"

namespace polarity {

class Lattice;
Lattice lattice_from_order(std::vector<std::string> labels, const Relation& order,
                           std::size_t cap);

/// Validated finite bounded lattice. Element identity is the position in
/// `labels()`; labels are for display only. Immutable once built.
class Lattice {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }

  bool leq(std::size_t a, std::size_t b) const { return order_.holds(a, b); }
  const Relation& order() const noexcept { return order_; }
  const Subset& up(std::size_t a) const { return order_.successors(a); }
  const Subset& down(std::size_t a) const { return converse_.successors(a); }

  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice() = default;
  friend Lattice lattice_from_order(std::vector<std::string>, const Relation&, std::size_t);

  std::vector<std::string> labels_;
  Relation order_;
  Relation converse_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

namespace detail {

// Least element of `bounds` w.r.t. `rows` (rows[u] = elements above u), if any.
inline std::optional<std::size_t> least_of(const Subset& bounds, const Relation& rows) {
  for (auto u : members(bounds))
    if (bounds.is_subset_of(rows.successors(u))) return u;
  return std::nullopt;
}

}  // namespace detail

/// Validates `order` (closed reflexively and transitively first) and fills
/// the join/meet tables. Throws NotAntisymmetric or NotALattice with a
/// witness pair, or CarrierTooLarge.
inline Lattice lattice_from_order(std::vector<std::string> labels, const Relation& order,
                                  std::size_t cap) {
  const std::size_t n = labels.size();
  check_cap(n, cap, "lattice");
  if (order.size() != n)
    throw Error(ErrorKind::InvalidArgument, "order matrix size does not match element count");
  if (n == 0) throw Error(ErrorKind::NotALattice, "empty carrier has no bottom or top");

  Lattice L;
  L.order_ = order.reflexive_transitive_closure();
  if (auto v = L.order_.antisymmetry_violation())
    throw Error(ErrorKind::NotAntisymmetric,
                "'" + labels[v->first] + "' and '" + labels[v->second] + "' lie on a cycle",
                {labels[v->first], labels[v->second]});
  L.converse_ = L.order_.converse();

  L.join_.assign(n * n, 0);
  L.meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto lub = detail::least_of(L.order_.successors(a) & L.order_.successors(b), L.order_);
      if (!lub)
        throw Error(ErrorKind::NotALattice,
                    "'" + labels[a] + "' and '" + labels[b] + "' have no least upper bound",
                    {labels[a], labels[b]});
      auto glb =
          detail::least_of(L.converse_.successors(a) & L.converse_.successors(b), L.converse_);
      if (!glb)
        throw Error(ErrorKind::NotALattice,
                    "'" + labels[a] + "' and '" + labels[b] + "' have no greatest lower bound",
                    {labels[a], labels[b]});
      L.join_[a * n + b] = L.join_[b * n + a] = *lub;
      L.meet_[a * n + b] = L.meet_[b * n + a] = *glb;
    }
  }
  // All pairs have bounds, so folding gives bottom and top.
  std::size_t bot = 0, top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bot = L.meet_[bot * n + a];
    top = L.join_[top * n + a];
  }
  L.bottom_ = bot;
  L.top_ = top;
  L.labels_ = std::move(labels);
  return L;
}

/// Builds a lattice from labels and any generating subset of its order.
inline Lattice build_lattice(const std::vector<std::string>& elements,
                             const std::vector<LabelPair>& order_pairs,
                             std::size_t cap = Caps{}.lattice) {
  LabelIndex index(elements);
  check_cap(elements.size(), cap, "lattice");
  auto rel = Relation::from_pairs(elements.size(), index.resolve(order_pairs));
  return lattice_from_order(elements, rel, cap);
}

inline std::size_t join(const Lattice& L, std::size_t a, std::size_t b) { return L.join(a, b); }
inline std::size_t meet(const Lattice& L, std::size_t a, std::size_t b) { return L.meet(a, b); }

/// ↑a. For a = bottom this is the whole carrier, which is not a proper filter.
inline Subset principal_filter(const Lattice& L, std::size_t a) { return L.up(a); }
/// ↓a.
inline Subset principal_ideal(const Lattice& L, std::size_t a) { return L.down(a); }

/// Which side of the filter/ideal duality an operation works on.
enum class Side { Filter, Ideal };

namespace detail {

inline const Subset& closure_row(const Lattice& L, Side side, std::size_t a) {
  return side == Side::Filter ? L.up(a) : L.down(a);
}

inline std::size_t combine(const Lattice& L, Side side, std::size_t a, std::size_t b) {
  return side == Side::Filter ? L.meet(a, b) : L.join(a, b);
}

inline std::size_t excluded(const Lattice& L, Side side) {
  return side == Side::Filter ? L.bottom() : L.top();
}

inline bool is_proper(const Lattice& L, const Subset& s, Side side) {
  if (s.size() != L.size() || s.none() || s.test(excluded(L, side))) return false;
  const auto elems = members(s);
  for (auto a : elems)
    if (!closure_row(L, side, a).is_subset_of(s)) return false;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!s.test(combine(L, side, elems[i], elems[j]))) return false;
  return true;
}

}  // namespace detail

/// Nonempty, up-closed, meet-closed, excludes bottom.
inline bool is_proper_filter(const Lattice& L, const Subset& s) {
  return detail::is_proper(L, s, Side::Filter);
}

/// Nonempty, down-closed, join-closed, excludes top.
inline bool is_proper_ideal(const Lattice& L, const Subset& s) {
  return detail::is_proper(L, s, Side::Ideal);
}

/// Smallest filter (Side::Filter) or ideal containing `gens`: closes under
/// binary meets (joins) and upward (downward) closure to a fixpoint, with a
/// worklist processed in ascending index order. The result may be improper.
inline Subset generated(const Lattice& L, const Subset& gens, Side side) {
  require_width(gens, L.size(), "generated");
  Subset out(L.size());
  std::set<std::size_t> work;
  for (auto a : members(gens)) work.insert(a);
  while (!work.empty()) {
    const std::size_t a = *work.begin();
    work.erase(work.begin());
    if (out.test(a)) continue;
    const auto existing = members(out);
    out.set(a);
    for (auto b : members(detail::closure_row(L, side, a)))
      if (!out.test(b)) work.insert(b);
    for (auto b : existing) {
      auto c = detail::combine(L, side, a, b);
      if (!out.test(c)) work.insert(c);
    }
  }
  return out;
}

inline Subset generated_filter(const Lattice& L, const Subset& gens) {
  return generated(L, gens, Side::Filter);
}

inline Subset generated_ideal(const Lattice& L, const Subset& gens) {
  return generated(L, gens, Side::Ideal);
}

namespace detail {

inline std::vector<Subset> enumerate_brute_force(const Lattice& L, Side side) {
  const std::size_t n = L.size();
  std::vector<Subset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s = from_mask(n, mask);
    if (is_proper(L, s, side)) out.push_back(std::move(s));
  }
  return out;
}

// Every proper filter is reached from the smallest one, {top}, by repeatedly
// adding one element and regenerating: if G ⊋ F, any a ∈ G∖F gives
// generated(F ∪ {a}) ⊆ G.
inline std::vector<Subset> enumerate_by_growth(const Lattice& L, Side side) {
  const std::size_t n = L.size();
  const std::size_t start = side == Side::Filter ? L.top() : L.bottom();
  const std::size_t bad = excluded(L, side);
  std::set<Subset, MaskLess> seen;
  std::deque<Subset> work;
  Subset first = generated(L, singleton(n, start), side);
  seen.insert(first);
  work.push_back(first);
  while (!work.empty()) {
    Subset f = work.front();
    work.pop_front();
    for (std::size_t a = 0; a < n; ++a) {
      if (f.test(a) || a == bad) continue;
      Subset g = f;
      g.set(a);
      g = generated(L, g, side);
      if (g.test(bad)) continue;
      if (seen.insert(g).second) work.push_back(std::move(g));
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<Subset> enumerate(const Lattice& L, Side side, const Caps& caps) {
  if (L.bottom() == L.top()) return {};
  if (L.size() <= caps.filter_brute_force && L.size() < 64) return enumerate_brute_force(L, side);
  return enumerate_by_growth(L, side);
}

}  // namespace detail

/// All proper filters in ascending-mask order.
inline std::vector<Subset> enumerate_filters(const Lattice& L, const Caps& caps = {}) {
  return detail::enumerate(L, Side::Filter, caps);
}

/// All proper ideals in ascending-mask order.
inline std::vector<Subset> enumerate_ideals(const Lattice& L, const Caps& caps = {}) {
  return detail::enumerate(L, Side::Ideal, caps);
}

inline std::string format_subset(const Lattice& L, const Subset& s) {
  return format_subset(s, L.labels());
}

}  // namespace polarity
