// polarity: command-line front end for lattice/frame checks and sweeps.
//
// Exit codes: 0 pass, 1 property failure, 2 input error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polarity/polarity.hpp"

using namespace polarity;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Options {
  bool json_out = false;
  std::size_t cap = 0;  // 0: defaults / POLARITY_CAP
  std::uint64_t seed = 0;
};

Caps caps_for(const Options& o) {
  Caps c = Caps::from_env();
  if (o.cap != 0) c = c.with_limit(o.cap);
  return c;
}

// Emits `j` as JSON, or `text` for humans.
void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

Lattice load_lattice(const std::string& path, const Caps& caps) {
  auto inst = load_instance(path, caps);
  if (auto* L = std::get_if<Lattice>(&inst.payload)) return *L;
  throw Error(ErrorKind::ParseError, path + ": expected a lattice, got a " + inst.kind(), {path});
}

DoublyOrderedFrame load_frame(const std::string& path, const Caps& caps) {
  auto inst = load_instance(path, caps);
  if (auto* X = std::get_if<DoublyOrderedFrame>(&inst.payload)) return *X;
  throw Error(ErrorKind::ParseError, path + ": expected a frame, got a " + inst.kind(), {path});
}

json subsets_json(const std::vector<Subset>& sets, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(labels_json(s, labels));
  return out;
}

std::string bullet_subsets(const std::vector<Subset>& sets,
                           const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& s : sets) out += "  " + format_subset(s, labels) + "\n";
  return out;
}

std::string pass_fail(bool b) { return b ? "pass" : "FAIL"; }

std::string join_words(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& s : w) out += (out.empty() ? "" : " ") + s;
  return out;
}

json obligation_json(const Obligation& o) {
  if (o.pass) return {{"pass", true}};
  return {{"pass", false}, {"witness", o.witness}};
}

std::string obligation_text(const std::string& name, const Obligation& o) {
  return "  " + name + ": " + pass_fail(o.pass) +
         (o.pass ? "" : " (witness: " + join_words(o.witness) + ")") + "\n";
}

// ---- verbs ------------------------------------------------------------------

int cmd_check_lattice(const Options& o, const std::string& path) {
  const auto caps = caps_for(o);
  const auto L = load_lattice(path, caps);
  const auto filters = enumerate_filters(L, caps);
  const auto ideals = enumerate_ideals(L, caps);
  json j{{"valid", true},
         {"lattice", lattice_to_json(L)},
         {"bottom", L.label(L.bottom())},
         {"top", L.label(L.top())},
         {"join", table_json(L, true)},
         {"meet", table_json(L, false)},
         {"filters", subsets_json(filters, L.labels())},
         {"ideals", subsets_json(ideals, L.labels())}};
  std::ostringstream t;
  t << "valid lattice, " << L.size() << " elements, bottom " << L.label(L.bottom()) << ", top "
    << L.label(L.top()) << "\n"
    << "proper filters (" << filters.size() << "):\n"
    << bullet_subsets(filters, L.labels()) << "proper ideals (" << ideals.size() << "):\n"
    << bullet_subsets(ideals, L.labels());
  emit(o, j, t.str());
  return kPass;
}

int cmd_check_frame(const Options& o, const std::string& path) {
  const auto X = load_frame(path, caps_for(o));
  emit(o, {{"valid", true}, {"frame", frame_to_json(X)}},
       "valid doubly ordered frame, " + std::to_string(X.size()) + " points\n");
  return kPass;
}

std::string axioms_text(const DoublyOrderedFrame& X, const LatticeFrameReport& r) {
  auto line = [&](const char* name, const AxiomCheck& c, bool lf0) {
    std::string s = std::string("  ") + name + ": " + pass_fail(c.pass);
    if (!c.pass) {
      s += " (witness: " + X.label(c.witness[0]) + " ";
      s += lf0 ? "order " + std::to_string(c.witness[1]) : X.label(c.witness[1]);
      s += ")";
    }
    return s + "\n";
  };
  return line("LF0", r.lf0, true) + line("LF1", r.lf1, false) + line("LF2", r.lf2, false);
}

int cmd_check_lf(const Options& o, const std::string& path) {
  const auto X = load_frame(path, caps_for(o));
  const auto r = check_lattice_frame(X);
  emit(o, lattice_frame_json(X, r),
       axioms_text(X, r) + (r.all_pass() ? "lattice frame\n" : "not a lattice frame\n"));
  return r.all_pass() ? kPass : kFail;
}

int cmd_canonical_frame(const Options& o, const std::string& path) {
  const auto caps = caps_for(o);
  const auto L = load_lattice(path, caps);
  const auto cf = canonical_frame(L, caps);
  json points = json::array();
  std::ostringstream t;
  t << cf.points.size() << " maximal filter-ideal pairs:\n";
  for (std::size_t x = 0; x < cf.points.size(); ++x) {
    points.push_back({{"label", cf.frame.label(x)},
                      {"filter", labels_json(cf.points[x].filter, L.labels())},
                      {"ideal", labels_json(cf.points[x].ideal, L.labels())}});
    t << "  " << cf.frame.label(x) << " = " << format_pair(L, cf.points[x]) << "\n";
  }
  t << "leq1: " << relation_json(cf.frame.relation(Order::First), cf.frame.labels()).dump()
    << "\nleq2: " << relation_json(cf.frame.relation(Order::Second), cf.frame.labels()).dump()
    << "\n"
    << axioms_text(cf.frame, cf.axioms);
  emit(o,
       {{"points", points},
        {"frame", frame_to_json(cf.frame)},
        {"axioms", lattice_frame_json(cf.frame, cf.axioms)}},
       t.str());
  return cf.axioms.all_pass() ? kPass : kFail;
}

int cmd_stable_sets(const Options& o, const std::string& path) {
  const auto caps = caps_for(o);
  const auto X = load_frame(path, caps);
  const auto fam = stable_sets(X, caps);
  emit(o, {{"count", fam.size()}, {"stable_sets", subsets_json(fam.sets, X.labels())}},
       std::to_string(fam.size()) + " stable sets:\n" + bullet_subsets(fam.sets, X.labels()));
  return kPass;
}

int cmd_complex_algebra(const Options& o, const std::string& path) {
  const auto caps = caps_for(o);
  const auto X = load_frame(path, caps);
  const auto ca = complex_algebra(X, caps);
  const auto& A = ca.lattice;
  std::ostringstream t;
  t << "complex algebra with " << A.size() << " elements (bottom " << A.label(A.bottom())
    << ", top " << A.label(A.top()) << ")\ncovers:\n";
  for (auto [a, b] : covers(A)) t << "  " << A.label(a) << " < " << A.label(b) << "\n";
  emit(o,
       {{"lattice", lattice_to_json(A)},
        {"bottom", A.label(A.bottom())},
        {"top", A.label(A.top())},
        {"join", table_json(A, true)},
        {"meet", table_json(A, false)}},
       t.str());
  return kPass;
}

int cmd_embed_h(const Options& o, const std::string& path) {
  const auto caps = caps_for(o);
  const auto L = load_lattice(path, caps);
  const auto rt = canonical_extension_roundtrip(L, caps);
  const auto& A = rt.algebra.lattice;
  json h = json::object();
  std::ostringstream t;
  t << "h: L -> Cm(Cf(L)), " << rt.canonical.points.size() << " canonical points, "
    << A.size() << " stable sets\n";
  for (std::size_t a = 0; a < L.size(); ++a) {
    h[L.label(a)] = A.label(rt.h[a]);
    t << "  h(" << L.label(a) << ") = " << A.label(rt.h[a]) << "\n";
  }
  const auto& e = rt.embedding;
  t << obligation_text("injective", e.injective) << obligation_text("join", e.preserves_join)
    << obligation_text("meet", e.preserves_meet) << obligation_text("bottom", e.preserves_bottom)
    << obligation_text("top", e.preserves_top) << "  surjective: " << pass_fail(rt.surjective)
    << "\n  isomorphic: " << pass_fail(rt.isomorphic) << "\n";
  emit(o,
       {{"h", h},
        {"injective", obligation_json(e.injective)},
        {"preserves_join", obligation_json(e.preserves_join)},
        {"preserves_meet", obligation_json(e.preserves_meet)},
        {"preserves_bottom", obligation_json(e.preserves_bottom)},
        {"preserves_top", obligation_json(e.preserves_top)},
        {"surjective", rt.surjective},
        {"isomorphic", rt.isomorphic}},
       t.str());
  return rt.all_pass() ? kPass : kFail;
}

int cmd_embed_k(const Options& o, const std::string& path) {
  const auto caps = caps_for(o);
  const auto X = load_frame(path, caps);
  const auto emb = k_map(X, caps);
  const auto rep = verify_frame_embedding(X, emb);
  const auto& A = emb.algebra.lattice;
  json images = json::array();
  std::ostringstream t;
  for (const auto& img : emb.images) {
    const auto k1 = characterize_k1(emb, img.point);
    const auto k2 = characterize_k2(emb, img.point);
    images.push_back({{"point", X.label(img.point)},
                      {"k1", labels_json(img.k1, A.labels())},
                      {"k2", labels_json(img.k2, A.labels())},
                      {"k1_generator", labels_json(k1, X.labels())},
                      {"k2_generator", labels_json(k2, X.labels())}});
    t << "  k(" << X.label(img.point) << ") = (" << format_subset(img.k1, A.labels()) << ", "
      << format_subset(img.k2, A.labels()) << ")  k1 = up[" << format_subset(k1, X.labels())
      << "], k2 = down[" << format_subset(k2, X.labels()) << "]\n";
  }
  t << obligation_text("preserves_leq1", rep.preserves_leq1)
    << obligation_text("preserves_leq2", rep.preserves_leq2)
    << obligation_text("injective", rep.injective)
    << obligation_text("filter_ideal_pairs", rep.filter_ideal_pairs)
    << obligation_text("maximal_pairs", rep.maximal_pairs)
    << obligation_text("reflects_leq1", rep.reflects_leq1)
    << "  reflects_leq2 (observed): " << (rep.reflects_leq2.pass ? "yes" : "no") << "\n";
  emit(o,
       {{"images", images},
        {"preserves_leq1", obligation_json(rep.preserves_leq1)},
        {"preserves_leq2", obligation_json(rep.preserves_leq2)},
        {"injective", obligation_json(rep.injective)},
        {"filter_ideal_pairs", obligation_json(rep.filter_ideal_pairs)},
        {"maximal_pairs", obligation_json(rep.maximal_pairs)},
        {"reflects_leq1", obligation_json(rep.reflects_leq1)},
        {"reflects_leq2_observed", obligation_json(rep.reflects_leq2)},
        {"embedding", rep.all_pass()}},
       t.str());
  return rep.all_pass() ? kPass : kFail;
}

json bm_json(const FrameMap& m, const BoundedMorphismReport& r) {
  auto wit = [&](const std::optional<MorphismWitness>& w, bool bm2) -> json {
    if (!w) return {{"pass", true}};
    return {{"pass", false},
            {"witness",
             {{"x", m.source.labels[w->x]},
              {"relation", w->relation},
              {bm2 ? "target" : "y", bm2 ? m.target.labels[w->y] : m.source.labels[w->y]}}}};
  };
  return {{"bm1", wit(r.bm1, false)},
          {"bm2", wit(r.bm2, true)},
          {"surjective", r.surjective},
          {"bounded_morphism", r.is_bounded_morphism()}};
}

std::string bm_text(const FrameMap& m, const BoundedMorphismReport& r) {
  std::ostringstream t;
  t << "  BM1: " << pass_fail(r.bm1_pass());
  if (r.bm1)
    t << " (" << m.source.labels[r.bm1->x] << " R" << r.bm1->relation << " "
      << m.source.labels[r.bm1->y] << " not preserved)";
  t << "\n  BM2: " << pass_fail(r.bm2_pass());
  if (r.bm2)
    t << " (" << m.source.labels[r.bm2->x] << ", relation " << r.bm2->relation
      << ", no successor mapped to " << m.target.labels[r.bm2->y] << ")";
  t << "\n  surjective: " << (r.surjective ? "yes" : "no") << "\n";
  return t.str();
}

int cmd_check_bm(const Options& o, const std::string& path) {
  auto inst = load_instance(path, caps_for(o));
  auto* mi = std::get_if<MapInstance>(&inst.payload);
  if (!mi)
    throw Error(ErrorKind::ParseError, path + ": expected a map, got a " + inst.kind(), {path});
  const auto r = check_bounded_morphism(mi->map);
  emit(o, bm_json(mi->map, r), bm_text(mi->map, r));
  return r.is_bounded_morphism() ? kPass : kFail;
}

int cmd_demo(const Options& o) {
  const auto cx = builtin_counterexample();
  const auto& v = cx.verification;
  json tw = nullptr;
  std::string tw_text;
  if (v.target_witness) {
    tw = {cx.target.labels[v.target_witness->first], cx.target.labels[v.target_witness->second]};
    tw_text = " (witness " + cx.target.labels[v.target_witness->first] + ", " +
              cx.target.labels[v.target_witness->second] + ")";
  }
  emit(o,
       {{"source", frame_to_json(cx.source)},
        {"source_doubly_ordered", v.source_doubly_ordered},
        {"target_doubly_ordered", v.target_doubly_ordered},
        {"target_witness", tw},
        {"map", {{"x", "s"}, {"y", "t"}, {"z", "t"}}},
        {"morphism", bm_json(cx.map, v.morphism)},
        {"confirmed", v.confirmed()}},
       std::string("F doubly ordered: ") + (v.source_doubly_ordered ? "yes" : "no") +
           "\nF' doubly ordered: " + (v.target_doubly_ordered ? "yes" : "no") + tw_text +
           "\nf: x->s, y->t, z->t\n" + bm_text(cx.map, v.morphism) +
           (v.confirmed() ? "doubly ordered frames are not closed under bounded images\n"
                          : "counterexample NOT confirmed\n"));
  return v.confirmed() ? kPass : kFail;
}

int cmd_sweep(const Options& o, const std::string& property, const std::string& corpus,
              const std::string& out, bool timings, unsigned jobs) {
  SweepConfig cfg;
  cfg.property = property;
  cfg.corpus = parse_corpus(corpus, o.seed);
  cfg.caps = caps_for(o);
  if (!out.empty()) cfg.output_path = out;
  cfg.timings = timings;
  cfg.jobs = jobs;
  const auto rep = run_sweep(cfg);
  write_sweep_report(cfg, rep);
  std::ostringstream t;
  t << rep.property << " over " << rep.corpus << ": " << rep.passed() << "/"
    << rep.results.size() << " pass\n";
  std::size_t shown = 0;
  for (const auto& r : rep.results)
    if (!r.pass && shown++ < 10) t << "  FAIL " << r.instance << ": " << join_words(r.witness) << "\n";
  emit(o, sweep_report_json(rep, timings), t.str());
  return rep.all_pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice representation workbench: canonical frames, complex algebras, "
               "embeddings and bounded morphisms"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_out, "Machine-readable JSON output");
  app.add_option("--cap", opt.cap, "Size cap for lattices and frames (overrides POLARITY_CAP)");
  app.add_option("--seed", opt.seed, "Default seed for random corpora");

  std::string file;
  int code = kPass;
  auto file_verb = [&](const char* name, const char* help, int (*fn)(const Options&,
                                                                    const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Instance file")->required();
    sub->callback([&, fn] { code = fn(opt, file); });
  };
  file_verb("check-lattice", "Validate a lattice and list its proper filters and ideals",
            cmd_check_lattice);
  file_verb("check-frame", "Validate a doubly ordered frame", cmd_check_frame);
  file_verb("check-lf", "Check the lattice-frame axioms LF0-LF2", cmd_check_lf);
  file_verb("canonical-frame", "Canonical frame of a lattice", cmd_canonical_frame);
  file_verb("stable-sets", "Stable sets of a frame", cmd_stable_sets);
  file_verb("complex-algebra", "Complex algebra of a frame", cmd_complex_algebra);
  file_verb("embed-h", "Check h: L -> Cm(Cf(L))", cmd_embed_h);
  file_verb("embed-k", "Check k: X -> Cf(Cm(X)) for a lattice frame", cmd_embed_k);
  file_verb("check-bm", "Check a map file for the bounded-morphism conditions", cmd_check_bm);

  auto* demo = app.add_subcommand("demo-counterexample",
                                  "Bounded image of a doubly ordered frame that is not one");
  demo->callback([&] { code = cmd_demo(opt); });

  std::string property, corpus = "builtin", out;
  bool timings = false;
  unsigned jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "Run a property over a corpus");
  sweep->add_option("--property", property, "Property name")->required();
  sweep->add_option("--corpus", corpus, "builtin | exhaustive:N | random:N:COUNT[:SEED]");
  sweep->add_option("--out", out, "Write the JSON report to this path");
  sweep->add_flag("--timings", timings, "Include per-instance wall-clock times");
  sweep->add_option("--jobs", jobs, "Worker threads");
  sweep->callback([&] { code = cmd_sweep(opt, property, corpus, out, timings, jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  } catch (const Error& e) {
    if (opt.json_out)
      std::cout << error_json(e).dump(2) << "\n";
    else
      std::cerr << "error: " << e.what()
                << (e.witness().empty() ? "" : " [witness: " + join_words(e.witness()) + "]")
                << "\n";
    // A frame that is not a lattice frame is a property failure of the
    // input, not a malformed input.
    return e.kind() == ErrorKind::NotALatticeFrame ? kFail : kInputError;
  }
  return code;
}
