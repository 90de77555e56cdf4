#include "qgcat/transforms.hpp"

#include "qgcat/error.hpp"

#include <numeric>

namespace qgcat {

namespace {

Word alternating(std::size_t pairs, bool white_first) {
  std::string s;
  for (std::size_t j = 0; j < pairs; ++j) s += white_first ? "wb" : "bw";
  return Word::parse(s);
}

std::vector<FixGenerator> alternating_generators(const FixTable& T) {
  std::vector<FixGenerator> out;
  for (std::size_t j = 1; 2 * j <= static_cast<std::size_t>(T.report_cutoff()); ++j) {
    for (bool white_first : {true, false}) {
      const Word w = alternating(j, white_first);
      if (!T.space(w).is_zero()) out.push_back({w, T.space(w)});
    }
  }
  return out;
}

std::vector<ExtGenerator> glued_generators(const FixTable& T, std::int64_t k) {
  std::vector<ExtGenerator> out;
  for (const Word& w : enumerate_words(T.report_cutoff())) {
    if (!T.space(w).is_zero()) out.push_back({glue_word(w, k), T.space(w)});
  }
  return out;
}

void require_orthogonal_frame(const Frame& fr, const char* op) {
  if (!fr.c) throw NotApplicable(std::string(op) + " needs a frame with F conj(F) = c 1");
}

}  // namespace

DegreeCertificate degree_of_reflection(const FixTable& T, int cutoff) {
  DegreeCertificate cert;
  cert.cutoff = cutoff < 0 ? T.report_cutoff() : std::min(cutoff, T.report_cutoff());
  for (const Word& w : enumerate_words(cert.cutoff)) {
    if (T.space(w).is_zero()) continue;
    const std::int64_t c = colour_sum(w);
    const std::int64_t g = std::gcd(cert.value, c);
    if (g != cert.value) {
      cert.value = g;
      cert.witnesses.push_back({Word(), w, c});
    }
  }
  return cert;
}

Verdict is_globally_colourized(const FixTable& T) {
  Verdict v;
  v.cutoff = T.report_cutoff();
  const Word wb = Word::parse("wb");
  const Word bw = Word::parse("bw");
  if (!member(mor_space(T, wb, bw), LinMap::identity(T.N(), 2))) {
    v.holds = false;
    v.counterexample = "identity not in C(wb, bw)";
  }
  return v;
}

Verdict is_colour_inversion_invariant(const FixTable& T) {
  require_orthogonal_frame(T.frame(), "colour inversion");
  Verdict v;
  v.cutoff = T.report_cutoff();
  for (const Word& w : enumerate_words(v.cutoff)) {
    if (!(T.space(colour_invert(w)) == T.space(w))) {
      v.holds = false;
      v.counterexample = w.text();
      break;
    }
  }
  return v;
}

Verdict is_alternating_category(const FixTable& T, const ClosureOptions& options) {
  const FixTable A = closure(T.frame(), alternating_generators(T), T.report_cutoff(), T.work_cutoff(), options);
  Verdict v;
  v.cutoff = T.report_cutoff();
  if (auto w = table_difference(A, T)) {
    v.holds = false;
    v.counterexample = w->text();
  }
  return v;
}

FixTable tensor_complexify(const FixTable& T, std::int64_t k) {
  if (k < 0) throw ShapeError("negative modulus " + std::to_string(k));
  FixTable out(T.frame(), T.report_cutoff(), T.work_cutoff(), T.semantics());
  for (const Word& w : enumerate_words(T.work_cutoff())) {
    const std::int64_t c = colour_sum(w);
    if (k == 0 ? c == 0 : c % k == 0) out.set_space(w, T.shared_space(w));
  }
  return out;
}

FixTable free_complexify(const FixTable& T, std::int64_t l, const std::vector<FixGenerator>& odd_witness,
                         const ClosureOptions& options) {
  if (l < 0) throw ShapeError("negative modulus " + std::to_string(l));
  if (l == 1) return T;
  if (l >= 2 && odd_witness.empty() && degree_of_reflection(T).value == 1) {
    throw NotApplicable("free complexification with l = " + std::to_string(l) +
                        " of a table with degree of reflection 1 needs an odd witness");
  }
  std::vector<FixGenerator> gens = alternating_generators(T);
  gens.insert(gens.end(), odd_witness.begin(), odd_witness.end());
  return closure(T.frame(), gens, T.report_cutoff(), T.work_cutoff(), options);
}

FixTable orthogonal_intersection(const FixTable& T, const ClosureOptions& options) {
  const Frame& fr = T.frame();
  const Word w = Word::parse("w");
  const Word b = Word::parse("b");
  std::vector<FixGenerator> gens = table_generators(T);
  gens.push_back({Word::parse("bb"), span({fix_from_mor(fr, LinMap::identity(fr.N, 1), w, b)})});
  return closure(fr, gens, T.report_cutoff(), T.work_cutoff(), options);
}

ExtGenerator ext_morphism_generator(const Frame& frame, const LinMap& T, const ExtWord& w1, const ExtWord& w2) {
  if (w1.modulus() != w2.modulus()) throw ShapeError("morphism words with different moduli");
  const LinMap eta = fix_from_mor(frame, T, w1.squares(), w2.squares());
  return {ext_concat(w2, ext_star(w1)), span({eta})};
}

ExtFixTable max_unglue(const FixTable& T, std::int64_t k, int square_cutoff, const ClosureOptions& options) {
  const int S = square_cutoff < 0 ? T.work_cutoff() : square_cutoff;
  return ext_closure(T.frame(), k, glued_generators(T, k), S, -1, options);
}

ExtFixTable canonical_unglue_z2(const FixTable& T, int square_cutoff, const ClosureOptions& options) {
  require_orthogonal_frame(T.frame(), "canonical ungluing");
  const Verdict inv = is_colour_inversion_invariant(T);
  if (!inv.holds) {
    throw NotApplicable("canonical ungluing needs colour-inversion invariance; fails at \"" +
                        inv.counterexample + "\"");
  }
  const int S = square_cutoff < 0 ? T.work_cutoff() : square_cutoff;
  std::vector<ExtGenerator> gens = glued_generators(T, 2);
  gens.push_back(ext_morphism_generator(T.frame(), LinMap::identity(T.N(), 1), ExtWord::parse("s", 2),
                                        ExtWord::parse("S", 2)));
  return ext_closure(T.frame(), 2, gens, S, -1, options);
}

ExtFixTable times_z2_product(const FixTable& H, std::int64_t m, int square_cutoff, const ClosureOptions& options) {
  if (m < 0 || m % 2 != 0) throw ShapeError("x_m products need an even m >= 0, got " + std::to_string(m));
  const int S = square_cutoff < 0 ? H.work_cutoff() : square_cutoff;
  std::vector<ExtGenerator> gens;
  for (const Word& w : enumerate_words(H.report_cutoff())) {
    if (!H.space(w).is_zero()) gens.push_back({ExtWord::from_squares(w, 2), H.space(w)});
  }
  std::string lhs;
  std::string rhs;
  if (m == 0) {
    lhs = "sst";
    rhs = "tss";
  } else {
    for (std::int64_t j = 0; j < m / 2; ++j) {
      lhs += "st";
      rhs += "ts";
    }
  }
  const ExtWord w1 = ExtWord::parse(lhs, 2);
  const ExtWord w2 = ExtWord::parse(rhs, 2);
  gens.push_back(ext_morphism_generator(H.frame(), LinMap::identity(H.N(), static_cast<int>(w1.square_count())),
                                        w1, w2));
  return ext_closure(H.frame(), 2, gens, S, -1, options);
}

}  // namespace qgcat
