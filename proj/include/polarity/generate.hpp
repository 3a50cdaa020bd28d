#pragma once

// Instance generators for sweeps: exhaustive and random bounded lattices,
// random and exhaustive doubly ordered frames.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polarity/caps.hpp"
#include "polarity/embedding.hpp"
#include "polarity/error.hpp"
#include "polarity/frame.hpp"
#include "polarity/lattice.hpp"
#include "polarity/relation.hpp"

namespace polarity {

enum class GenerationMode { Exhaustive, UpToIso };

inline constexpr std::size_t kMaxExhaustiveLattice = 7;
inline constexpr std::size_t kMaxRandomFrame = 8;
inline constexpr std::size_t kMaxExhaustiveFrame = 4;

/// Labels "0", then "a", "b", ... for interior elements, then "1".
inline std::vector<std::string> bounded_labels(std::size_t n) {
  if (n == 1) return {"0"};
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 0; i + 2 < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  labels.push_back("1");
  return labels;
}

namespace detail {

// Wraps an order on the interior elements with bottom (index 0) and top
// (index n-1); returns nullopt unless the result is a lattice.
inline std::optional<Lattice> close_with_bounds(const Relation& interior, std::size_t cap) {
  const std::size_t k = interior.size();
  const std::size_t n = k + 2;
  Relation rel(n);
  for (std::size_t i = 0; i < n; ++i) {
    rel.add(0, i);
    rel.add(i, n - 1);
  }
  for (auto [a, b] : interior.pairs()) rel.add(a + 1, b + 1);
  try {
    return lattice_from_order(bounded_labels(n), rel, cap);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotALattice) return std::nullopt;
    throw;
  }
}

// Partial orders on k labelled points. Pairs are assigned column by column
// ((0,1), (0,2), (1,2), (0,3), ...); after each column the order on the
// points seen so far must already be transitive, which prunes the search.
class PosetEnumerator {
 public:
  explicit PosetEnumerator(std::size_t k) : k_(k), rel_(Relation::identity(k)) {
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }

  template <class Visit>
  void run(Visit&& visit) {
    recurse(0, visit);
  }

 private:
  template <class Visit>
  void recurse(std::size_t idx, Visit& visit) {
    if (idx == pairs_.size()) {
      visit(rel_);
      return;
    }
    auto [i, j] = pairs_[idx];
    const bool closes_column = i + 1 == j;
    for (int choice = 0; choice < 3; ++choice) {
      Relation saved = rel_;
      if (choice == 1) rel_.add(i, j);
      if (choice == 2) rel_.add(j, i);
      if (!closes_column || prefix_transitive(j + 1)) recurse(idx + 1, visit);
      rel_ = std::move(saved);
    }
  }

  bool prefix_transitive(std::size_t m) const {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (rel_.holds(a, b))
          for (std::size_t c = 0; c < m; ++c)
            if (rel_.holds(b, c) && !rel_.holds(a, c)) return false;
    return true;
  }

  std::size_t k_;
  Relation rel_;
  std::vector<IndexPair> pairs_;
};

}  // namespace detail

/// All bounded lattices on n labelled elements with bottom at index 0 and
/// top at index n-1; with UpToIso, one representative per isomorphism
/// class (the first generated). Throws CarrierTooLarge for n > 7.
inline std::vector<Lattice> generate_lattices(std::size_t n, GenerationMode mode) {
  check_cap(n, kMaxExhaustiveLattice, "exhaustive lattice generation");
  if (n == 0) return {};
  if (n == 1) return {lattice_from_order({"0"}, Relation::identity(1), 1)};
  std::vector<Lattice> out;
  detail::PosetEnumerator(n - 2).run([&](const Relation& interior) {
    auto L = detail::close_with_bounds(interior, n);
    if (!L) return;
    if (mode == GenerationMode::UpToIso)
      for (const auto& M : out)
        if (lattice_isomorphic(*L, M)) return;
    out.push_back(std::move(*L));
  });
  return out;
}

/// One representative per isomorphism class for every size 1..n.
inline std::vector<Lattice> lattices_up_to(std::size_t n) {
  std::vector<Lattice> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto part = generate_lattices(k, GenerationMode::UpToIso);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace detail {

// Bernoulli trial with probability permille/1000 from raw engine output, so
// streams do not depend on the standard library's distributions.
inline bool coin(std::mt19937_64& rng, std::uint64_t permille) { return rng() % 1000 < permille; }

}  // namespace detail

/// `count` random bounded lattices on exactly n elements; deterministic per
/// seed. Interior orders are random DAGs on a random relabelling.
inline std::vector<Lattice> random_lattices(std::size_t n, std::size_t count, std::uint64_t seed,
                                            const Caps& caps = {}) {
  check_cap(n, caps.lattice, "lattice");
  if (n == 0) return {};
  if (n <= 2) return std::vector<Lattice>(count, generate_lattices(n, GenerationMode::Exhaustive)[0]);
  std::mt19937_64 rng(seed);
  std::vector<Lattice> out;
  const std::size_t k = n - 2;
  while (out.size() < count) {
    const std::uint64_t density = 100 + rng() % 500;
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    Relation interior = Relation::identity(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (detail::coin(rng, density)) interior.add(perm[i], perm[j]);
    if (auto L = detail::close_with_bounds(interior, caps.lattice)) out.push_back(std::move(*L));
  }
  return out;
}

inline std::vector<std::string> point_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

/// Generator filter: doubly ordered (already guaranteed by construction)
/// and, when requested, LF0-LF2.
inline bool accept_frame(const DoublyOrderedFrame& X, bool require_lattice_frame) {
  return !require_lattice_frame || check_lattice_frame(X).all_pass();
}

/// `count` pseudo-random doubly ordered frames on n points. Each candidate
/// draws both relations pair by pair, takes reflexive-transitive closures,
/// and is kept only if it passes the doubly-ordered validator (and LF0-LF2
/// when required). Deterministic per seed.
inline std::vector<DoublyOrderedFrame> generate_frames(std::size_t n, std::size_t count,
                                                       std::uint64_t seed,
                                                       bool require_lattice_frame) {
  check_cap(n, kMaxRandomFrame, "random frame generation");
  std::mt19937_64 rng(seed);
  std::vector<DoublyOrderedFrame> out;
  const auto labels = point_labels(n);
  std::size_t attempts = 0;
  const std::size_t max_attempts = 1000 * (count + 1) + 100000;
  while (out.size() < count) {
    if (++attempts > max_attempts)
      throw Error(ErrorKind::InvalidArgument, "frame generator exhausted its attempt budget");
    const std::uint64_t density = 50 + rng() % 300;
    Relation r1(n), r2(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        if (detail::coin(rng, density)) r1.add(x, y);
        if (detail::coin(rng, density)) r2.add(x, y);
      }
    r1 = r1.reflexive_transitive_closure();
    r2 = r2.reflexive_transitive_closure();
    if (doubly_ordered_violation(r1, r2)) continue;
    auto X = frame_from_relations(labels, r1, r2);
    if (accept_frame(X, require_lattice_frame)) out.push_back(std::move(X));
  }
  return out;
}

/// Every quasiorder on n labelled points, by scanning all relation matrices.
inline std::vector<Relation> all_quasiorders(std::size_t n) {
  std::vector<IndexPair> off;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) off.emplace_back(a, b);
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    Relation r = Relation::identity(n);
    for (std::size_t i = 0; i < off.size(); ++i)
      if ((mask >> i) & 1u) r.add(off[i].first, off[i].second);
    if (r.is_transitive()) out.push_back(std::move(r));
  }
  return out;
}

/// Every doubly ordered frame on n labelled points (n <= 4), optionally only
/// lattice frames.
inline std::vector<DoublyOrderedFrame> all_frames(std::size_t n, bool require_lattice_frame) {
  check_cap(n, kMaxExhaustiveFrame, "exhaustive frame generation");
  const auto qs = all_quasiorders(n);
  const auto labels = point_labels(n);
  std::vector<DoublyOrderedFrame> out;
  for (const auto& q1 : qs)
    for (const auto& q2 : qs) {
      if (doubly_ordered_violation(q1, q2)) continue;
      auto X = frame_from_relations(labels, q1, q2);
      if (accept_frame(X, require_lattice_frame)) out.push_back(std::move(X));
    }
  return out;
}

}  // namespace polarity
