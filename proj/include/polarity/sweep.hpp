#pragma once

// Property sweeps over lattice and frame corpora. Instances are evaluated
// independently (optionally on several threads) and results are reported
// in corpus order, so a fixed configuration always yields the same report.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "polarity/canonical.hpp"
#include "polarity/caps.hpp"
#include "polarity/embedding.hpp"
#include "polarity/error.hpp"
#include "polarity/frame.hpp"
#include "polarity/generate.hpp"
#include "polarity/io.hpp"
#include "polarity/lattice.hpp"
#include "polarity/morphisms.hpp"

namespace polarity {

struct Corpus {
  enum class Kind { Builtin, Exhaustive, Random };
  Kind kind = Kind::Builtin;
  std::size_t n = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::Builtin: return "builtin";
      case Kind::Exhaustive: return "exhaustive(" + std::to_string(n) + ")";
      case Kind::Random:
        return "random(" + std::to_string(n) + ", " + std::to_string(count) +
               ", seed=" + std::to_string(seed) + ")";
    }
    return "";
  }
};

/// "builtin", "exhaustive:N", or "random:N:COUNT[:SEED]" (SEED defaults to
/// `default_seed`).
inline Corpus parse_corpus(const std::string& spec, std::uint64_t default_seed = 0) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i)
    if (i == spec.size() || spec[i] == ':') {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::InvalidArgument, "bad number '" + s + "' in corpus '" + spec + "'");
    return std::stoull(s);
  };
  Corpus c;
  if (parts[0] == "builtin" && parts.size() == 1) return c;
  if (parts[0] == "exhaustive" && parts.size() == 2) {
    c.kind = Corpus::Kind::Exhaustive;
    c.n = number(parts[1]);
    return c;
  }
  if (parts[0] == "random" && (parts.size() == 3 || parts.size() == 4)) {
    c.kind = Corpus::Kind::Random;
    c.n = number(parts[1]);
    c.count = number(parts[2]);
    c.seed = parts.size() == 4 ? number(parts[3]) : default_seed;
    return c;
  }
  throw Error(ErrorKind::InvalidArgument,
              "corpus must be builtin, exhaustive:N or random:N:COUNT[:SEED], got '" + spec +
                  "'");
}

struct SweepConfig {
  std::string property;
  Corpus corpus;
  Caps caps;
  std::optional<std::string> output_path;
  bool timings = false;
  unsigned jobs = 1;
};

struct InstanceResult {
  std::string instance;
  bool pass = true;
  std::vector<std::string> witness;  // first failure, empty on pass
  std::int64_t elapsed_us = 0;
};

struct SweepReport {
  std::string property;
  std::string corpus;
  std::vector<InstanceResult> results;

  std::size_t passed() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; }));
  }
  std::size_t failed() const { return results.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

// ---- builtin instances -----------------------------------------------------

inline Lattice chain_lattice(std::size_t n) {
  auto labels = bounded_labels(n);
  std::vector<LabelPair> order;
  for (std::size_t i = 0; i + 1 < n; ++i) order.emplace_back(labels[i], labels[i + 1]);
  // bounded_labels puts "1" last, so index order is the chain order.
  return build_lattice(labels, order);
}

inline Lattice boolean_square() {
  return build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

inline Lattice diamond_m3() {
  return build_lattice({"0", "a", "b", "c", "1"}, {{"0", "a"},
                                                   {"0", "b"},
                                                   {"0", "c"},
                                                   {"a", "1"},
                                                   {"b", "1"},
                                                   {"c", "1"}});
}

inline Lattice pentagon_n5() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

inline std::vector<std::pair<std::string, Lattice>> builtin_lattices() {
  return {{"chain2", chain_lattice(2)},
          {"chain3", chain_lattice(3)},
          {"boolean4", boolean_square()},
          {"m3", diamond_m3()},
          {"n5", pentagon_n5()}};
}

inline DoublyOrderedFrame one_point_frame() { return build_frame({"p"}, {}, {}); }

/// q ≤1 p and p ≤2 q: the canonical frame of the 3-chain, up to labels.
inline DoublyOrderedFrame two_point_frame() {
  return build_frame({"p", "q"}, {{"q", "p"}}, {{"p", "q"}});
}

inline std::vector<std::pair<std::string, DoublyOrderedFrame>> builtin_frames() {
  std::vector<std::pair<std::string, DoublyOrderedFrame>> out{
      {"three_point", counterexample_source()},
      {"one_point", one_point_frame()},
      {"two_point", two_point_frame()}};
  for (auto& [name, L] : builtin_lattices()) out.emplace_back("Cf(" + name + ")", canonical_frame(L).frame);
  return out;
}

// ---- corpora -----------------------------------------------------------------

inline std::vector<std::pair<std::string, Lattice>> lattice_corpus(const Corpus& c,
                                                                   const Caps& caps) {
  switch (c.kind) {
    case Corpus::Kind::Builtin: return builtin_lattices();
    case Corpus::Kind::Exhaustive: {
      std::vector<std::pair<std::string, Lattice>> out;
      for (std::size_t k = 1; k <= c.n; ++k) {
        auto part = generate_lattices(k, GenerationMode::UpToIso);
        for (std::size_t i = 0; i < part.size(); ++i)
          out.emplace_back("n" + std::to_string(k) + "#" + std::to_string(i), std::move(part[i]));
      }
      return out;
    }
    case Corpus::Kind::Random: {
      auto ls = random_lattices(c.n, c.count, c.seed, caps);
      std::vector<std::pair<std::string, Lattice>> out;
      for (std::size_t i = 0; i < ls.size(); ++i)
        out.emplace_back("random#" + std::to_string(i), std::move(ls[i]));
      return out;
    }
  }
  return {};
}

inline std::vector<std::pair<std::string, DoublyOrderedFrame>> frame_corpus(
    const Corpus& c, bool require_lattice_frame) {
  std::vector<std::pair<std::string, DoublyOrderedFrame>> out;
  switch (c.kind) {
    case Corpus::Kind::Builtin:
      for (auto& [name, X] : builtin_frames())
        if (accept_frame(X, require_lattice_frame)) out.emplace_back(name, X);
      break;
    case Corpus::Kind::Exhaustive:
      for (std::size_t k = 1; k <= c.n; ++k) {
        auto part = all_frames(k, require_lattice_frame);
        for (std::size_t i = 0; i < part.size(); ++i)
          out.emplace_back("n" + std::to_string(k) + "#" + std::to_string(i), std::move(part[i]));
      }
      break;
    case Corpus::Kind::Random: {
      auto fs = generate_frames(c.n, c.count, c.seed, require_lattice_frame);
      for (std::size_t i = 0; i < fs.size(); ++i)
        out.emplace_back("random#" + std::to_string(i), std::move(fs[i]));
      break;
    }
  }
  return out;
}

// ---- properties ----------------------------------------------------------------
// Each check returns an empty witness on success, otherwise a description of
// the first failure.

using Witness = std::vector<std::string>;

inline Witness obligation_witness(const std::string& name, const Obligation& o) {
  if (o.pass) return {};
  Witness w{name};
  w.insert(w.end(), o.witness.begin(), o.witness.end());
  return w;
}

inline Witness first_failure(std::initializer_list<Witness> ws) {
  for (const auto& w : ws)
    if (!w.empty()) return w;
  return {};
}

inline Witness check_h_embedding(const Lattice& L, const Caps& caps) {
  const auto rt = canonical_extension_roundtrip(L, caps);
  const auto& e = rt.embedding;
  return first_failure({obligation_witness("injective", e.injective),
                        obligation_witness("join", e.preserves_join),
                        obligation_witness("meet", e.preserves_meet),
                        obligation_witness("bottom", e.preserves_bottom),
                        obligation_witness("top", e.preserves_top)});
}

inline Witness check_canonical_lattice_frame(const Lattice& L, const Caps& caps) {
  const auto cf = canonical_frame(L, caps);  // throws NotDoublyOrdered on failure
  const auto& r = cf.axioms;
  auto axiom = [&](const char* name, const AxiomCheck& c, bool lf0) -> Witness {
    if (c.pass) return {};
    Witness w{name};
    if (lf0) {
      w.push_back(cf.frame.label(c.witness[0]));
      w.push_back(std::to_string(c.witness[1]));
    } else {
      for (auto i : c.witness) w.push_back(cf.frame.label(i));
    }
    return w;
  };
  for (const auto& p : cf.points)
    if (!is_filter_ideal_pair(L, p) || !is_maximal_pair(L, p)) return {"maximal_pair", format_pair(L, p)};
  return first_failure({axiom("LF0", r.lf0, true), axiom("LF1", r.lf1, false),
                        axiom("LF2", r.lf2, false)});
}

inline Witness check_roundtrip(const Lattice& L, const Caps& caps) {
  const auto rt = canonical_extension_roundtrip(L, caps);
  if (!rt.embedding.all_pass()) return check_h_embedding(L, caps);
  if (!rt.surjective) return {"surjective"};
  if (!rt.isomorphic) return {"isomorphic"};
  return {};
}

inline Witness check_k_embedding(const DoublyOrderedFrame& X, const Caps& caps) {
  const auto emb = k_map(X, caps);
  const auto rep = verify_frame_embedding(X, emb);
  auto w = first_failure({obligation_witness("preserves_leq1", rep.preserves_leq1),
                          obligation_witness("preserves_leq2", rep.preserves_leq2),
                          obligation_witness("injective", rep.injective),
                          obligation_witness("filter_ideal_pair", rep.filter_ideal_pairs),
                          obligation_witness("maximal_pair", rep.maximal_pairs),
                          obligation_witness("reflects_leq1", rep.reflects_leq1)});
  if (!w.empty()) return w;
  for (std::size_t x = 0; x < X.size(); ++x) {
    characterize_k1(emb, x);  // throw CharacterizationMismatch on failure
    characterize_k2(emb, x);
  }
  return {};
}

/// Galois connection, stability of l(Z), the two lr routes, and closure
/// laws, over every subset of a frame.
inline Witness check_galois(const DoublyOrderedFrame& X, const Caps& caps) {
  check_cap(X.size(), std::min<std::size_t>(caps.frame, 12), "galois sweep frame");
  const std::size_t n = X.size();
  std::vector<Subset> all, lr;
  std::vector<std::size_t> inc1, inc2;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Subset s = from_mask(n, m);
    if (is_increasing(X, Order::First, s)) inc1.push_back(all.size());
    if (is_increasing(X, Order::Second, s)) inc2.push_back(all.size());
    lr.push_back(lr_closure_checked(X, s));
    all.push_back(std::move(s));
  }
  auto fmt = [&](const Subset& s) { return format_subset(s, X.labels()); };
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& Y = all[i];
    if (!is_increasing(X, Order::First, op_l(X, Y))) return {"l_increasing", fmt(Y)};
    if (!is_increasing(X, Order::Second, op_r(X, Y))) return {"r_increasing", fmt(Y)};
    if (lr_closure_checked(X, lr[i]) != lr[i]) return {"lr_idempotent", fmt(Y)};
  }
  for (auto i : inc1) {
    const auto& Y = all[i];
    if (!Y.is_subset_of(lr[i])) return {"lr_extensive", fmt(Y)};
    for (auto j : inc1)
      if (Y.is_subset_of(all[j]) && !lr[i].is_subset_of(lr[j]))
        return {"lr_monotone", fmt(Y), fmt(all[j])};
    const Subset rY = op_r(X, Y);
    for (auto k : inc2) {
      const auto& Z = all[k];
      if (Y.is_subset_of(op_l(X, Z)) != Z.is_subset_of(rY)) return {"galois", fmt(Y), fmt(Z)};
    }
  }
  for (auto k : inc2) {
    const Subset lZ = op_l(X, all[k]);
    if (lr_closure_checked(X, lZ) != lZ) return {"l_stable", fmt(all[k])};
  }
  return {};
}

/// Identity and composition laws for bounded morphisms. Targets are the
/// next corpus frame and the one-point frame; every map into a target is
/// tried, and composites of passing maps must pass.
inline Witness check_bm_laws(const RelationalFrame& F, const RelationalFrame& G) {
  if (!check_bounded_morphism(identity_map(F)).is_bounded_morphism()) return {"identity"};
  const RelationalFrame one = RelationalFrame::from(one_point_frame());

  auto all_bms = [](const RelationalFrame& src, const RelationalFrame& dst) {
    std::vector<FrameMap> out;
    const std::size_t n = src.size(), m = dst.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= m;
      if (total > 4096) return out;
    }
    std::vector<std::size_t> img(n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        img[i] = c % m;
        c /= m;
      }
      FrameMap f(src, dst, img);
      if (check_bounded_morphism(f).is_bounded_morphism()) out.push_back(std::move(f));
    }
    return out;
  };

  const auto fg = all_bms(F, G);
  auto gg = all_bms(G, G);
  gg.push_back(identity_map(G));
  const auto g1 = all_bms(G, one);
  for (const auto& f : fg) {
    for (const auto& g : gg)
      if (!check_bounded_morphism(compose(f, g)).is_bounded_morphism()) return {"compose", "F->G->G"};
    for (const auto& g : g1)
      if (!check_bounded_morphism(compose(f, g)).is_bounded_morphism()) return {"compose", "F->G->1"};
  }
  if (all_bms(F, one).empty()) return {"constant_map"};
  return {};
}

inline const std::vector<std::string>& sweep_properties() {
  static const std::vector<std::string> names{
      "theorem2_h_embedding", "theorem3_canonical_is_lattice_frame", "theorem4_k_embedding",
      "galois_connection",    "roundtrip_iso",                       "bounded_morphism_laws"};
  return names;
}

namespace detail {

template <class Item, class Check>
std::vector<InstanceResult> evaluate(const std::vector<std::pair<std::string, Item>>& corpus,
                                     unsigned jobs, Check check) {
  std::vector<InstanceResult> results(corpus.size());
  auto run_one = [&](std::size_t i) {
    auto& r = results[i];
    r.instance = corpus[i].first;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.witness = check(i);
    } catch (const Error& e) {
      r.witness = {std::string(to_string(e.kind())), e.detail()};
      r.witness.insert(r.witness.end(), e.witness().begin(), e.witness().end());
    }
    r.pass = r.witness.empty();
    r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) run_one(i);
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < corpus.size(); i += jobs) run_one(i);
    });
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace detail

/// Runs `cfg.property` over `cfg.corpus`. Throws UnknownProperty.
inline SweepReport run_sweep(const SweepConfig& cfg) {
  const auto& names = sweep_properties();
  if (std::find(names.begin(), names.end(), cfg.property) == names.end())
    throw Error(ErrorKind::UnknownProperty, "no property named '" + cfg.property + "'",
                {cfg.property});
  SweepReport rep{cfg.property, cfg.corpus.describe(), {}};
  const auto& caps = cfg.caps;
  const auto& p = cfg.property;

  if (p == "theorem2_h_embedding" || p == "theorem3_canonical_is_lattice_frame" ||
      p == "roundtrip_iso") {
    const auto corpus = lattice_corpus(cfg.corpus, caps);
    auto check = p == "theorem2_h_embedding" ? check_h_embedding
                 : p == "roundtrip_iso"      ? check_roundtrip
                                             : check_canonical_lattice_frame;
    rep.results = detail::evaluate(corpus, cfg.jobs,
                                   [&](std::size_t i) { return check(corpus[i].second, caps); });
  } else if (p == "theorem4_k_embedding") {
    const auto corpus = frame_corpus(cfg.corpus, true);
    rep.results = detail::evaluate(
        corpus, cfg.jobs, [&](std::size_t i) { return check_k_embedding(corpus[i].second, caps); });
  } else if (p == "galois_connection") {
    const auto corpus = frame_corpus(cfg.corpus, false);
    rep.results = detail::evaluate(
        corpus, cfg.jobs, [&](std::size_t i) { return check_galois(corpus[i].second, caps); });
  } else {
    const auto corpus = frame_corpus(cfg.corpus, false);
    rep.results = detail::evaluate(corpus, cfg.jobs, [&](std::size_t i) {
      const auto& next = corpus[(i + 1) % corpus.size()].second;
      return check_bm_laws(RelationalFrame::from(corpus[i].second), RelationalFrame::from(next));
    });
  }
  return rep;
}

inline json sweep_report_json(const SweepReport& rep, bool timings) {
  json failures = json::array();
  for (const auto& r : rep.results)
    if (!r.pass && failures.size() < 10)
      failures.push_back({{"instance", r.instance}, {"witness", r.witness}});
  json out{{"property", rep.property},
           {"corpus", rep.corpus},
           {"instances", rep.results.size()},
           {"passed", rep.passed()},
           {"failed", rep.failed()},
           {"first_failures", failures}};
  if (timings) {
    json per = json::array();
    for (const auto& r : rep.results)
      per.push_back({{"instance", r.instance}, {"pass", r.pass}, {"elapsed_us", r.elapsed_us}});
    out["results"] = per;
  }
  return out;
}

/// Writes the JSON report to cfg.output_path when set.
inline void write_sweep_report(const SweepConfig& cfg, const SweepReport& rep) {
  if (!cfg.output_path) return;
  std::ofstream out(*cfg.output_path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + *cfg.output_path);
  out << sweep_report_json(rep, cfg.timings).dump(2) << "\n";
}

}  // namespace polarity
