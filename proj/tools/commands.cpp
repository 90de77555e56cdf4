#include "commands.hpp"

#include "qgcat/error.hpp"
#include "qgcat/presentation.hpp"
#include "qgcat/transforms.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <optional>

namespace qgcat::cli {

using nlohmann::json;

namespace {

constexpr const char* kEngine = "qgcat 0.1.0";

Word word_arg(const std::string& s) { return Word::parse(s == "-" ? "" : s); }

FixTable build_table(const QGSpec& spec) {
  if (spec.modulus) throw ParseError("this command needs a plain spec (no modulus)");
  return closure(spec.frame, spec.generators, spec.report_cutoff, spec.work_cutoff);
}

int square_cutoff(const QGSpec& spec, const CommandArgs& args) {
  return args.squares < 0 ? spec.report_cutoff : args.squares;
}

json dims_json(const FixTable& t) {
  json d = json::object();
  for (const Word& w : enumerate_words(t.report_cutoff())) d[w.text()] = t.dim(w);
  return d;
}

json table_json(const FixTable& t) {
  json out;
  out["dims"] = dims_json(t);
  out["semantics"] = semantics_text(t.semantics());
  out["table_digest"] = "sha256:" + sha256_hex(out["dims"].dump());
  return out;
}

json ext_table_json(const ExtFixTable& g) {
  json d = json::object();
  for (const auto& [w, s] : g.nonzero()) d[w.text()] = s.dim();
  json out;
  out["ext_dims"] = d;
  out["modulus"] = g.modulus();
  out["square_cutoff"] = g.square_cutoff();
  out["semantics"] = semantics_text(g.semantics());
  return out;
}

json verdict_json(bool holds, const std::string& counterexample, int cutoff) {
  json v;
  v["holds_up_to_cutoff"] = holds;
  v["counterexample"] = holds ? json(nullptr) : json(counterexample);
  v["cutoff"] = cutoff;
  return v;
}

json verdict_json(const Verdict& v) { return verdict_json(v.holds, v.counterexample, v.cutoff); }

json compare_json(const FixTable& a, const FixTable& b) {
  const auto d = table_difference(a, b);
  return verdict_json(!d, d ? d->text() : std::string(), std::min(a.report_cutoff(), b.report_cutoff()));
}

json basis_json(const Subspace& s) {
  json out = json::array();
  for (const LinMap& m : s.basis()) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).text());
      rows.push_back(row);
    }
    out.push_back(rows);
  }
  return out;
}

std::vector<std::int64_t> moduli_or(const CommandArgs& args, std::vector<std::int64_t> fallback) {
  return args.moduli.empty() ? fallback : args.moduli;
}

bool all_hold(const json& clauses) {
  for (const auto& [name, v] : clauses.items()) {
    if (!v["holds_up_to_cutoff"].get<bool>()) return false;
  }
  return true;
}

json verify_a(const FixTable& h, const CommandArgs& args) {
  json clauses = json::object();
  for (std::int64_t k : moduli_or(args, {0, 2, 3})) {
    clauses["intersection_k" + std::to_string(k)] =
        compare_json(tensor_complexify(h, k), table_intersect(h, full_table(h.frame(), k, h.work_cutoff())));
  }
  return clauses;
}

json verify_b(const FixTable& h, std::int64_t k) {
  json clauses = json::object();
  const FixTable t = tensor_complexify(h, k);
  clauses["globally_colourized"] = verdict_json(is_globally_colourized(t));
  const DegreeCertificate d = degree_of_reflection(t);
  const bool degree_ok = k == 0 ? d.value == 0 : d.value % k == 0;
  clauses["degree"] = verdict_json(degree_ok, "certificate " + std::to_string(d.value), d.cutoff);
  clauses["reconstruction"] = compare_json(tensor_complexify(orthogonal_intersection(t), k), t);
  return clauses;
}

json verify_c(const FixTable& h, const CommandArgs& args) {
  json clauses = json::object();
  const auto ls = moduli_or(args, {0, 2, 3});
  std::optional<FixTable> first;
  std::int64_t first_l = 0;
  for (std::int64_t l : ls) {
    if (l == 1) throw NotApplicable("theorem C compares free complexifications with l != 1");
    FixTable f = free_complexify(h, l);
    if (l >= 2) {
      clauses["glued_free_product_l" + std::to_string(l)] =
          compare_json(glue_table(free_product_table(h, l), h.report_cutoff()), f);
    }
    if (!first) {
      first = std::move(f);
      first_l = l;
    } else {
      clauses["coincide_l" + std::to_string(first_l) + "_l" + std::to_string(l)] = compare_json(*first, f);
    }
  }
  return clauses;
}

json verify_d(const FixTable& h) {
  json clauses = json::object();
  const FixTable f = free_complexify(h, 0);
  clauses["alternating"] = verdict_json(is_alternating_category(f));
  clauses["inversion_invariant"] = verdict_json(is_colour_inversion_invariant(f));
  clauses["reconstruction"] = compare_json(free_complexify(orthogonal_intersection(f), 0), f);
  return clauses;
}

json verify_e(const FixTable& h, std::int64_t k, int squares) {
  json clauses = json::object();
  const FixTable t = tensor_complexify(h, k);
  const ExtFixTable g = canonical_unglue_z2(t, squares);
  clauses["round_trip"] = compare_json(glue_table(g, std::min(squares, t.report_cutoff())), t);
  if (k % 2 == 0) {
    // Longer words need intermediates beyond the square cutoff.
    const int window = squares / 2;
    const ExtFixTable x = times_z2_product(h, k, squares);
    std::string bad;
    for (const ExtFixTable* a : {&g, &x}) {
      for (const auto& [w, s] : a->nonzero()) {
        if (static_cast<int>(w.square_count()) > window || !bad.empty()) continue;
        if (!(g.space(w) == x.space(w))) bad = w.text();
      }
    }
    clauses["product_relations"] = verdict_json(bad.empty(), bad, window);
  }
  return clauses;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

CommandResult cmd_dims(const QGSpec& spec) {
  const FixTable t = build_table(spec);
  json p = table_json(t);
  json white = json::object();
  for (int n = 0; n <= t.report_cutoff(); ++n) white[std::to_string(n)] = t.dim(Word::parse(std::string(n, 'w')));
  p["white_dims"] = white;
  return {p};
}

CommandResult cmd_mor(const QGSpec& spec, const CommandArgs& args) {
  const FixTable t = build_table(spec);
  const Word w1 = word_arg(args.w1);
  const Word w2 = word_arg(args.w2);
  const Subspace m = mor_space(t, w1, w2);
  json p;
  p["w1"] = w1.text();
  p["w2"] = w2.text();
  p["dim"] = m.dim();
  p["basis"] = basis_json(m);
  return {p};
}

CommandResult cmd_degree(const QGSpec& spec) {
  const DegreeCertificate d = degree_of_reflection(build_table(spec));
  json p;
  p["value"] = d.value;
  p["cutoff"] = d.cutoff;
  p["witnesses"] = json::array();
  for (const auto& w : d.witnesses) {
    p["witnesses"].push_back({{"w1", w.w1.text()}, {"w2", w.w2.text()}, {"difference", w.difference}});
  }
  return {p};
}

CommandResult cmd_check(const QGSpec& spec, const CommandArgs& args) {
  const FixTable t = build_table(spec);
  Verdict v;
  if (args.predicate == "global") {
    v = is_globally_colourized(t);
  } else if (args.predicate == "inversion") {
    v = is_colour_inversion_invariant(t);
  } else if (args.predicate == "alternating") {
    v = is_alternating_category(t);
  } else {
    throw ParseError("unknown predicate \"" + args.predicate + "\" (global, inversion, alternating)");
  }
  json p;
  p["predicate"] = args.predicate;
  p["verdict"] = verdict_json(v);
  return {p};
}

CommandResult cmd_complexify(const QGSpec& spec, const CommandArgs& args) {
  const FixTable t = build_table(spec);
  const std::int64_t k = args.moduli.empty() ? 0 : args.moduli.front();
  json p;
  if (args.mode == "tensor") {
    p = table_json(tensor_complexify(t, k));
  } else if (args.mode == "free") {
    std::vector<FixGenerator> extra;
    for (const std::string& w : args.odd_witness) extra.push_back({word_arg(w), t.space(word_arg(w))});
    p = table_json(free_complexify(t, k, extra));
  } else {
    throw ParseError("unknown complexification mode \"" + args.mode + "\" (tensor, free)");
  }
  p["mode"] = args.mode;
  p["modulus"] = k;
  return {p};
}

CommandResult cmd_glue(const QGSpec& spec, const CommandArgs& args) {
  const int S = square_cutoff(spec, args);
  json p;
  if (spec.modulus) {
    const ExtFixTable g = ext_closure(spec.frame, *spec.modulus, spec.ext_generators, S);
    p = table_json(glue_table(g, std::min(S, spec.report_cutoff)));
    p["modulus"] = *spec.modulus;
  } else {
    const FixTable t = build_table(spec);
    const std::int64_t k = args.moduli.empty() ? 2 : args.moduli.front();
    const FixTable glued = glue_table(max_unglue(t, k, S), std::min(S, t.report_cutoff()));
    p = table_json(glued);
    p["modulus"] = k;
    p["equals_input"] = compare_json(glued, t);
  }
  return {p};
}

CommandResult cmd_unglue(const QGSpec& spec, const CommandArgs& args) {
  const FixTable t = args.tensor >= 0 ? tensor_complexify(build_table(spec), args.tensor) : build_table(spec);
  const int S = square_cutoff(spec, args);
  std::optional<ExtFixTable> g;
  if (args.mode == "maximal") {
    g = max_unglue(t, args.moduli.empty() ? 2 : args.moduli.front(), S);
  } else if (args.mode == "canonical") {
    g = canonical_unglue_z2(t, S);
  } else {
    throw ParseError("unknown ungluing mode \"" + args.mode + "\" (maximal, canonical)");
  }
  json p = ext_table_json(*g);
  p["mode"] = args.mode;
  p["input_dims"] = table_json(t);
  p["round_trip"] = compare_json(glue_table(*g, std::min(S, t.report_cutoff())), t);
  return {p};
}

CommandResult cmd_verify(const QGSpec& spec, const CommandArgs& args) {
  const FixTable h = build_table(spec);
  json p;
  p["theorem"] = args.theorem;
  p["mode"] = "check";
  json clauses;
  if (args.theorem == "A") {
    clauses = verify_a(h, args);
  } else if (args.theorem == "B") {
    const std::int64_t k = args.moduli.empty() ? 0 : args.moduli.front();
    if (k != 0) p["mode"] = "evidence";
    p["modulus"] = k;
    clauses = verify_b(h, k);
  } else if (args.theorem == "C") {
    if (degree_of_reflection(h).value == 1) {
      throw NotApplicable("theorem C needs a degree of reflection other than 1");
    }
    clauses = verify_c(h, args);
  } else if (args.theorem == "D") {
    clauses = verify_d(h);
  } else if (args.theorem == "E") {
    const std::int64_t k = args.moduli.empty() ? 4 : args.moduli.front();
    p["modulus"] = k;
    p["square_cutoff"] = square_cutoff(spec, args);
    clauses = verify_e(h, k, square_cutoff(spec, args));
  } else {
    throw ParseError("unknown theorem \"" + args.theorem + "\" (A, B, C, D, E)");
  }
  p["clauses"] = clauses;
  const bool ok = all_hold(clauses);
  p["holds_up_to_cutoff"] = ok;
  return {p, !ok && p["mode"] == "check"};
}

CommandResult cmd_relations(const QGSpec& spec, const CommandArgs& args) {
  const FixTable t = build_table(spec);
  const Word w1 = word_arg(args.w1);
  const Word w2 = word_arg(args.w2);
  const Subspace m = mor_space(t, w1, w2);
  json p;
  p["w1"] = w1.text();
  p["w2"] = w2.text();
  p["dim"] = m.dim();
  p["relations"] = json::array();
  for (const LinMap& b : m.basis()) {
    json rels = json::array();
    for (const NCPoly& f : relations_from_intertwiner(b, w1, w2, t.frame())) {
      if (!f.is_zero()) rels.push_back(f.text());
    }
    p["relations"].push_back(rels);
  }
  return {p};
}

json make_report(const std::string& command, const QGSpec& spec, const CommandResult& result) {
  json r;
  r["command"] = command;
  r["engine"] = kEngine;
  r["input_digest"] = "sha256:" + sha256_hex(spec.canonical.dump());
  r["cutoffs"] = {{"report", spec.report_cutoff}, {"work", spec.work_cutoff}};
  r["result"] = result.payload;
  return r;
}

}  // namespace qgcat::cli
