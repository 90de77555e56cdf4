#pragma once

#include "qgcat/category.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qgcat {

struct DegreeWitness {
  Word w1;
  Word w2;
  std::int64_t difference = 0;  // c(w2) - c(w1)
};

// Non-negative generator of the subgroup of Z spanned by c(w2) - c(w1) over
// nonzero C(w1, w2) with |w1| + |w2| up to the cutoff. The true degree of
// reflection divides the value. Witnesses are the pairs that lowered it.
struct DegreeCertificate {
  std::int64_t value = 0;
  std::vector<DegreeWitness> witnesses;
  int cutoff = 0;
};

// Cutoff defaults to the report cutoff.
DegreeCertificate degree_of_reflection(const FixTable& T, int cutoff = -1);

// Result of a predicate checked on every word up to the cutoff.
struct Verdict {
  bool holds = true;
  std::string counterexample;  // empty when the predicate holds
  int cutoff = 0;
};

// Identity in C("wb", "bw"). Needs a report cutoff of at least 4.
Verdict is_globally_colourized(const FixTable& T);
// C(invert(w)) = C(w) for all words. Throws NotApplicable unless F conj(F) = c 1.
Verdict is_colour_inversion_invariant(const FixTable& T);
// T equals the closure of its spaces at the alternating words (wb)^j, (bw)^j.
Verdict is_alternating_category(const FixTable& T, const ClosureOptions& options = {});

// Spaces kept where c(w) lies in kZ (k = 0: c(w) = 0), zero elsewhere.
FixTable tensor_complexify(const FixTable& T, std::int64_t k);

// Closure of the spaces at alternating words. Refuses (NotApplicable) a
// table with degree certificate 1 and l >= 2 unless extra generators are
// supplied in `odd_witness`; l = 1 returns T unchanged.
FixTable free_complexify(const FixTable& T, std::int64_t l, const std::vector<FixGenerator>& odd_witness = {},
                         const ClosureOptions& options = {});

// T joined with the identity in C("w", "b"): the category of the intersection
// with the orthogonal group O+(F).
FixTable orthogonal_intersection(const FixTable& T, const ClosureOptions& options = {});

// The morphism T in C(w1, w2) of an extended category, as a fix-space
// generator at w2 star(w1).
ExtGenerator ext_morphism_generator(const Frame& frame, const LinMap& T, const ExtWord& w1, const ExtWord& w2);

// Extended closure generated by the glued words glue_word(w, k) carrying
// T's spaces, for |w| up to the report cutoff. Square cutoff defaults to the
// work cutoff.
ExtFixTable max_unglue(const FixTable& T, std::int64_t k, int square_cutoff = -1,
                       const ClosureOptions& options = {});

// max_unglue(T, 2) with the identity of C(s, S) added. Needs F conj(F) = c 1 and
// colour-inversion invariance (NotApplicable otherwise).
ExtFixTable canonical_unglue_z2(const FixTable& T, int square_cutoff = -1, const ClosureOptions& options = {});

// H x_m Z_2 for even m >= 0, generated by H on triangle-free words and the
// identity in C((s t)^(m/2), (t s)^(m/2)); for m = 0 the identity in C(s s t, t s s).
ExtFixTable times_z2_product(const FixTable& H, std::int64_t m, int square_cutoff = -1,
                             const ClosureOptions& options = {});

}  // namespace qgcat
