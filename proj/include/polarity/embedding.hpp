#pragma once

// Embedding a lattice frame into the canonical frame of its complex algebra,
// lattice-embedding and isomorphism checks, and the finite round trip
// L -> Cm(Cf(L)).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polarity/canonical.hpp"
#include "polarity/caps.hpp"
#include "polarity/error.hpp"
#include "polarity/frame.hpp"
#include "polarity/lattice.hpp"
#include "polarity/subset.hpp"

namespace polarity {

/// A pass/fail outcome with the labels that witness a failure.
struct Obligation {
  bool pass = true;
  std::vector<std::string> witness;

  void fail(std::vector<std::string> w) {
    if (!pass) return;  // keep the first witness
    pass = false;
    witness = std::move(w);
  }
};

/// k(x) = (k1(x), k2(x)); both are sets of indices into the stable-set family.
struct FramePointImage {
  std::size_t point = 0;
  Subset k1;  // {Y : x ∈ Y}
  Subset k2;  // {Y : x ∈ r(Y)}
};

struct FrameEmbedding {
  ComplexAlgebra algebra;
  std::vector<FramePointImage> images;
};

namespace detail {

inline void axiom_witness(const DoublyOrderedFrame& X, const std::string& axiom,
                          const AxiomCheck& c, std::vector<std::string>& out) {
  out = {axiom};
  if (axiom == "LF0") {
    out.push_back(X.label(c.witness.at(0)));
    out.push_back(std::to_string(c.witness.at(1)));
  } else {
    for (auto i : c.witness) out.push_back(X.label(i));
  }
}

inline void require_lattice_frame(const DoublyOrderedFrame& X) {
  const auto rep = check_lattice_frame(X);
  std::vector<std::string> w;
  if (!rep.lf0.pass) axiom_witness(X, "LF0", rep.lf0, w);
  else if (!rep.lf1.pass) axiom_witness(X, "LF1", rep.lf1, w);
  else if (!rep.lf2.pass) axiom_witness(X, "LF2", rep.lf2, w);
  else return;
  throw Error(ErrorKind::NotALatticeFrame, w.front() + " fails", w);
}

}  // namespace detail

/// Computes k for every point of a lattice frame and re-checks that each
/// image is a maximal filter-ideal pair of the complex algebra. Throws
/// NotALatticeFrame (witness: axiom name, then points) when LF0-LF2 fail.
inline FrameEmbedding k_map(const DoublyOrderedFrame& X, const Caps& caps = {}) {
  detail::require_lattice_frame(X);
  FrameEmbedding emb{complex_algebra(X, caps), {}};
  const auto& fam = emb.algebra.family;
  const auto& A = emb.algebra.lattice;

  std::vector<Subset> r_images;
  for (const auto& Y : fam.sets) r_images.push_back(op_r(X, Y));

  for (std::size_t x = 0; x < X.size(); ++x) {
    FramePointImage img{x, Subset(fam.size()), Subset(fam.size())};
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (fam.sets[i].test(x)) img.k1.set(i);
      if (r_images[i].test(x)) img.k2.set(i);
    }
    FilterIdealPair pair{img.k1, img.k2};
    if (!is_filter_ideal_pair(A, pair) || !is_maximal_pair(A, pair))
      throw Error(ErrorKind::InternalMismatch,
                  "k(" + X.label(x) + ") is not a maximal filter-ideal pair", {X.label(x)});
    emb.images.push_back(std::move(img));
  }
  return emb;
}

/// W_x = {y : x ≰₂ y}, the largest set disjoint from ↑₂x.
inline Subset w_set(const DoublyOrderedFrame& X, std::size_t x) {
  Subset w = X.up(Order::Second, x);
  w.flip();
  return w;
}

/// Returns ↑₁x after checking that it is stable and that k1(x) is exactly
/// the principal filter it generates in the complex algebra.
inline Subset characterize_k1(const FrameEmbedding& emb, std::size_t x) {
  const auto& fam = emb.algebra.family;
  const auto& X = fam.frame;
  Subset gen = X.up(Order::First, x);
  auto idx = fam.index_of(gen);
  if (!idx)
    throw Error(ErrorKind::CharacterizationMismatch, "up1(" + X.label(x) + ") is not stable",
                {X.label(x)});
  if (principal_filter(emb.algebra.lattice, *idx) != emb.images.at(x).k1)
    throw Error(ErrorKind::CharacterizationMismatch,
                "k1(" + X.label(x) + ") is not the principal filter of up1(" + X.label(x) + ")",
                {X.label(x)});
  return gen;
}

/// Returns □₁(W_x) after checking that it is stable, that x ∈ r(□₁(W_x)),
/// and that k2(x) is exactly the principal ideal it generates.
inline Subset characterize_k2(const FrameEmbedding& emb, std::size_t x) {
  const auto& fam = emb.algebra.family;
  const auto& X = fam.frame;
  Subset gen = box(X, Order::First, w_set(X, x));
  auto idx = fam.index_of(gen);
  if (!idx)
    throw Error(ErrorKind::CharacterizationMismatch,
                "box1(W_" + X.label(x) + ") is not stable", {X.label(x)});
  if (!op_r(X, gen).test(x))
    throw Error(ErrorKind::CharacterizationMismatch,
                X.label(x) + " is not in r(box1(W_" + X.label(x) + "))", {X.label(x)});
  if (principal_ideal(emb.algebra.lattice, *idx) != emb.images.at(x).k2)
    throw Error(ErrorKind::CharacterizationMismatch,
                "k2(" + X.label(x) + ") is not the principal ideal of box1(W_" + X.label(x) +
                    ")",
                {X.label(x)});
  return gen;
}

inline Subset characterize_k1(const DoublyOrderedFrame& X, std::size_t x,
                              const Caps& caps = {}) {
  return characterize_k1(k_map(X, caps), x);
}

inline Subset characterize_k2(const DoublyOrderedFrame& X, std::size_t x,
                              const Caps& caps = {}) {
  return characterize_k2(k_map(X, caps), x);
}

struct FrameEmbeddingReport {
  Obligation preserves_leq1;
  Obligation preserves_leq2;
  Obligation injective;
  Obligation filter_ideal_pairs;
  Obligation maximal_pairs;
  /// k1(x) ⊆ k1(y) ⟹ x ≤1 y.
  Obligation reflects_leq1;
  /// k2(x) ⊆ k2(y) ⟹ x ≤2 y. Recorded as an observation only.
  Obligation reflects_leq2;

  bool all_pass() const {
    return preserves_leq1.pass && preserves_leq2.pass && injective.pass &&
           filter_ideal_pairs.pass && maximal_pairs.pass && reflects_leq1.pass;
  }
};

inline FrameEmbeddingReport verify_frame_embedding(const DoublyOrderedFrame& X,
                                                   const FrameEmbedding& emb) {
  FrameEmbeddingReport rep;
  const auto& A = emb.algebra.lattice;
  const auto& img = emb.images;
  if (img.size() != X.size())
    throw Error(ErrorKind::InvalidArgument, "one image per frame point is required");
  for (std::size_t x = 0; x < X.size(); ++x) {
    const auto& lx = X.label(x);
    FilterIdealPair p{img[x].k1, img[x].k2};
    if (!is_filter_ideal_pair(A, p)) rep.filter_ideal_pairs.fail({lx});
    else if (auto m = is_maximal_pair(A, p); !m)
      rep.maximal_pairs.fail({lx, m.violation->side == Side::Filter ? "filter" : "ideal",
                              A.label(m.violation->element)});
    for (std::size_t y = 0; y < X.size(); ++y) {
      const auto& ly = X.label(y);
      const bool k1_sub = img[x].k1.is_subset_of(img[y].k1);
      const bool k2_sub = img[x].k2.is_subset_of(img[y].k2);
      if (X.leq(Order::First, x, y) && !k1_sub) rep.preserves_leq1.fail({lx, ly});
      if (X.leq(Order::Second, x, y) && !k2_sub) rep.preserves_leq2.fail({lx, ly});
      if (k1_sub && !X.leq(Order::First, x, y)) rep.reflects_leq1.fail({lx, ly});
      if (k2_sub && !X.leq(Order::Second, x, y)) rep.reflects_leq2.fail({lx, ly});
      if (x < y && img[x].k1 == img[y].k1 && img[x].k2 == img[y].k2)
        rep.injective.fail({lx, ly});
    }
  }
  return rep;
}

struct LatticeEmbeddingReport {
  Obligation injective;
  Obligation preserves_join;
  Obligation preserves_meet;
  Obligation preserves_bottom;
  Obligation preserves_top;

  bool all_pass() const {
    return injective.pass && preserves_join.pass && preserves_meet.pass &&
           preserves_bottom.pass && preserves_top.pass;
  }
};

/// `f[a]` is the image of element a of L in M.
inline LatticeEmbeddingReport verify_lattice_embedding(const std::vector<std::size_t>& f,
                                                       const Lattice& L, const Lattice& M) {
  if (f.size() != L.size())
    throw Error(ErrorKind::InvalidArgument, "map must be total on the source lattice");
  for (auto v : f)
    if (v >= M.size()) throw Error(ErrorKind::InvalidArgument, "map image out of range");
  LatticeEmbeddingReport rep;
  for (std::size_t a = 0; a < L.size(); ++a) {
    for (std::size_t b = a; b < L.size(); ++b) {
      const auto& la = L.label(a);
      const auto& lb = L.label(b);
      if (a != b && f[a] == f[b]) rep.injective.fail({la, lb});
      if (f[L.join(a, b)] != M.join(f[a], f[b])) rep.preserves_join.fail({la, lb});
      if (f[L.meet(a, b)] != M.meet(f[a], f[b])) rep.preserves_meet.fail({la, lb});
    }
  }
  if (f[L.bottom()] != M.bottom()) rep.preserves_bottom.fail({L.label(L.bottom())});
  if (f[L.top()] != M.top()) rep.preserves_top.fail({L.label(L.top())});
  return rep;
}

namespace detail {

struct OrderProfile {
  std::size_t height = 0;  // longest chain from bottom
  std::size_t above = 0;
  std::size_t below = 0;
  friend bool operator==(const OrderProfile&, const OrderProfile&) = default;
};

inline std::vector<OrderProfile> order_profiles(const Lattice& L) {
  const std::size_t n = L.size();
  std::vector<OrderProfile> p(n);
  // Process by number of elements below: every strict predecessor has fewer.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return L.down(a).count() < L.down(b).count(); });
  for (auto a : order) {
    p[a].above = L.up(a).count();
    p[a].below = L.down(a).count();
    for (auto b : members(L.down(a)))
      if (b != a) p[a].height = std::max(p[a].height, p[b].height + 1);
  }
  return p;
}

inline bool extend_iso(const Lattice& L, const Lattice& M, const std::vector<OrderProfile>& pl,
                       const std::vector<OrderProfile>& pm, std::vector<std::size_t>& f,
                       std::vector<bool>& used, std::size_t a) {
  if (a == L.size()) return true;
  for (std::size_t c = 0; c < M.size(); ++c) {
    if (used[c] || !(pl[a] == pm[c])) continue;
    bool ok = true;
    for (std::size_t b = 0; b < a && ok; ++b)
      ok = L.leq(a, b) == M.leq(c, f[b]) && L.leq(b, a) == M.leq(f[b], c);
    if (!ok) continue;
    f[a] = c;
    used[c] = true;
    if (extend_iso(L, M, pl, pm, f, used, a + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace detail

/// Order isomorphism L -> M found by backtracking over candidates with equal
/// (height, #above, #below) profiles.
inline std::optional<std::vector<std::size_t>> lattice_isomorphic(const Lattice& L,
                                                                  const Lattice& M) {
  if (L.size() != M.size()) return std::nullopt;
  auto pl = detail::order_profiles(L);
  auto pm = detail::order_profiles(M);
  {
    auto sl = pl, sm = pm;
    auto key = [](const detail::OrderProfile& p) {
      return std::tuple(p.height, p.above, p.below);
    };
    auto cmp = [&](const auto& x, const auto& y) { return key(x) < key(y); };
    std::sort(sl.begin(), sl.end(), cmp);
    std::sort(sm.begin(), sm.end(), cmp);
    if (sl != sm) return std::nullopt;
  }
  std::vector<std::size_t> f(L.size());
  std::vector<bool> used(M.size(), false);
  if (!detail::extend_iso(L, M, pl, pm, f, used, 0)) return std::nullopt;
  return f;
}

struct RoundtripReport {
  CanonicalFrame canonical;
  ComplexAlgebra algebra;
  /// h[a] indexes algebra.family.sets.
  std::vector<std::size_t> h;
  LatticeEmbeddingReport embedding;
  bool surjective = false;
  bool isomorphic = false;

  bool all_pass() const { return embedding.all_pass() && surjective && isomorphic; }
};

/// Builds Cm(Cf(L)), checks that h is a lattice embedding, and that it is
/// onto (a finite lattice is its own canonical extension).
inline RoundtripReport canonical_extension_roundtrip(const Lattice& L, const Caps& caps = {}) {
  auto cf = canonical_frame(L, caps);
  auto algebra = complex_algebra(cf.frame, caps);
  RoundtripReport rep{std::move(cf), std::move(algebra), {}, {}, false, false};
  const auto images = h_map(rep.canonical);
  for (std::size_t a = 0; a < L.size(); ++a) {
    auto idx = rep.algebra.family.index_of(images[a]);
    if (!idx)
      throw Error(ErrorKind::InternalMismatch, "h(" + L.label(a) + ") missing from algebra",
                  {L.label(a)});
    rep.h.push_back(*idx);
  }
  rep.embedding = verify_lattice_embedding(rep.h, L, rep.algebra.lattice);
  std::vector<bool> hit(rep.algebra.family.size(), false);
  for (auto i : rep.h) hit[i] = true;
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  rep.isomorphic = lattice_isomorphic(L, rep.algebra.lattice).has_value();
  return rep;
}

}  // namespace polarity
