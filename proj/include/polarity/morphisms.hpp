#pragma once

// Bounded morphisms between relational frames, and the two-frame
// counterexample showing that bounded images of doubly ordered frames need
// not be doubly ordered.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarity/error.hpp"
#include "polarity/frame.hpp"
#include "polarity/relation.hpp"
#include "polarity/subset.hpp"

namespace polarity {

/// A carrier with any number of binary relations. No axioms are assumed.
struct RelationalFrame {
  std::vector<std::string> labels;
  std::vector<Relation> relations;

  std::size_t size() const noexcept { return labels.size(); }

  static RelationalFrame from(const DoublyOrderedFrame& X) {
    return {X.labels(), {X.relation(Order::First), X.relation(Order::Second)}};
  }
};

/// Builds a two-relation frame, closing both relations reflexively and
/// transitively but without requiring the doubly-ordered condition.
inline RelationalFrame build_quasi_frame(const std::vector<std::string>& elements,
                                         const std::vector<LabelPair>& rel1,
                                         const std::vector<LabelPair>& rel2) {
  LabelIndex index(elements);
  const auto n = elements.size();
  return {elements,
          {Relation::from_pairs(n, index.resolve(rel1)).reflexive_transitive_closure(),
           Relation::from_pairs(n, index.resolve(rel2)).reflexive_transitive_closure()}};
}

/// The witness pair for a two-relation frame failing the doubly-ordered
/// condition, if it does.
inline std::optional<IndexPair> doubly_ordered_violation(const RelationalFrame& F) {
  if (F.relations.size() != 2) return std::nullopt;
  return doubly_ordered_violation(F.relations[0], F.relations[1]);
}

/// A total function between frame carriers, by index.
struct FrameMap {
  RelationalFrame source;
  RelationalFrame target;
  std::vector<std::size_t> image;

  FrameMap(RelationalFrame src, RelationalFrame dst, std::vector<std::size_t> f)
      : source(std::move(src)), target(std::move(dst)), image(std::move(f)) {
    if (image.size() != source.size())
      throw Error(ErrorKind::InvalidArgument, "map is not total on the source frame");
    for (auto v : image)
      if (v >= target.size()) throw Error(ErrorKind::InvalidArgument, "map image out of range");
    if (source.relations.size() != target.relations.size())
      throw Error(ErrorKind::InvalidArgument, "frames have different numbers of relations");
  }
};

/// BM1 witness: x R_i y but f(x) not R'_i f(y). BM2 witness: f(x) R'_i y'
/// with no R_i-successor of x mapped to y'. `relation` is 1-based.
struct MorphismWitness {
  std::size_t relation = 0;
  std::size_t x = 0;
  std::size_t y = 0;  // y for BM1, y' (target index) for BM2
};

struct BoundedMorphismReport {
  std::optional<MorphismWitness> bm1;
  std::optional<MorphismWitness> bm2;
  bool surjective = false;

  bool bm1_pass() const { return !bm1; }
  bool bm2_pass() const { return !bm2; }
  bool is_bounded_morphism() const { return !bm1 && !bm2; }
};

/// Checks BM1 and BM2 for every relation. Witnesses are the first failure
/// in (relation, x, y) order.
inline BoundedMorphismReport check_bounded_morphism(const FrameMap& m) {
  BoundedMorphismReport rep;
  const auto& f = m.image;
  const std::size_t n = m.source.size();
  for (std::size_t i = 0; i < m.source.relations.size() && !rep.bm1; ++i) {
    const auto& R = m.source.relations[i];
    const auto& S = m.target.relations[i];
    for (std::size_t x = 0; x < n && !rep.bm1; ++x)
      for (auto y : members(R.successors(x)))
        if (!S.holds(f[x], f[y])) {
          rep.bm1 = MorphismWitness{i + 1, x, y};
          break;
        }
  }
  for (std::size_t i = 0; i < m.source.relations.size() && !rep.bm2; ++i) {
    const auto& R = m.source.relations[i];
    const auto& S = m.target.relations[i];
    for (std::size_t x = 0; x < n && !rep.bm2; ++x) {
      Subset reached(m.target.size());
      for (auto y : members(R.successors(x))) reached.set(f[y]);
      if (!S.successors(f[x]).is_subset_of(reached)) {
        Subset missing = S.successors(f[x]) - reached;
        rep.bm2 = MorphismWitness{i + 1, x, missing.find_first()};
      }
    }
  }
  Subset hit(m.target.size());
  for (auto v : f) hit.set(v);
  rep.surjective = hit.all();
  return rep;
}

inline FrameMap identity_map(const RelationalFrame& F) {
  std::vector<std::size_t> id(F.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return {F, F, std::move(id)};
}

/// g ∘ f; requires f.target and g.source to be the same frame.
inline FrameMap compose(const FrameMap& f, const FrameMap& g) {
  if (f.target.labels != g.source.labels || f.target.relations != g.source.relations)
    throw Error(ErrorKind::InvalidArgument, "maps are not composable");
  std::vector<std::size_t> img(f.image.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = g.image[f.image[x]];
  return {f.source, g.target, std::move(img)};
}

struct CounterexampleVerification {
  bool source_doubly_ordered = false;
  bool target_doubly_ordered = true;
  std::optional<IndexPair> target_witness;
  BoundedMorphismReport morphism;

  /// The source is doubly ordered, the target is not, and the map is a
  /// surjective bounded morphism.
  bool confirmed() const {
    return source_doubly_ordered && !target_doubly_ordered &&
           morphism.is_bounded_morphism() && morphism.surjective;
  }
};

struct Counterexample {
  DoublyOrderedFrame source;  // x, y, z with x ≤1 y and x ≤2 z
  RelationalFrame target;     // s, t with s ≤ t in both relations
  FrameMap map;               // x ↦ s, y ↦ t, z ↦ t
  CounterexampleVerification verification;
};

/// The doubly ordered frame on {x,y,z}, ≤1 = 1' ∪ {(x,y)}, ≤2 = 1' ∪ {(x,z)}.
inline DoublyOrderedFrame counterexample_source() {
  return build_frame({"x", "y", "z"}, {{"x", "x"}, {"y", "y"}, {"z", "z"}, {"x", "y"}},
                     {{"x", "x"}, {"y", "y"}, {"z", "z"}, {"x", "z"}});
}

/// {s,t} with both relations 1' ∪ {(s,t)}.
inline RelationalFrame counterexample_target() {
  const std::vector<LabelPair> rel{{"s", "s"}, {"t", "t"}, {"s", "t"}};
  return build_quasi_frame({"s", "t"}, rel, rel);
}

inline Counterexample builtin_counterexample() {
  DoublyOrderedFrame F = counterexample_source();
  RelationalFrame G = counterexample_target();
  FrameMap f(RelationalFrame::from(F), G, {0, 1, 1});

  CounterexampleVerification v;
  const auto src = RelationalFrame::from(F);
  v.source_doubly_ordered = !doubly_ordered_violation(src).has_value();
  v.target_witness = doubly_ordered_violation(G);
  v.target_doubly_ordered = !v.target_witness.has_value();
  v.morphism = check_bounded_morphism(f);
  return {std::move(F), std::move(G), std::move(f), v};
}

}  // namespace polarity
