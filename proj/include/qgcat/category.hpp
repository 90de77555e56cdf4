#pragma once

#include "qgcat/frame.hpp"
#include "qgcat/linalg.hpp"
#include "qgcat/words.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qgcat {

// exact: every stored space is the true one. lower_bound: stored spaces may
// miss vectors whose derivation needs words beyond the work cutoff.
enum class Semantics { exact, lower_bound };

std::string semantics_text(Semantics s);

struct FixGenerator {
  Word word;
  Subspace space;
};

struct ExtGenerator {
  ExtWord word;
  Subspace space;
};

// A representation category presented by its fixed-point spaces C(empty, w)
// for every word up to the work cutoff.
class FixTable {
 public:
  FixTable(Frame frame, int report_cutoff, int work_cutoff, Semantics semantics);

  const Frame& frame() const { return frame_; }
  int N() const { return frame_.N; }
  int report_cutoff() const { return report_; }
  int work_cutoff() const { return work_; }
  Semantics semantics() const { return semantics_; }
  void set_semantics(Semantics s) { semantics_ = s; }

  // Throws CutoffError beyond the work cutoff.
  const Subspace& space(const Word& w) const;
  std::size_t dim(const Word& w) const { return space(w).dim(); }
  void set_space(const Word& w, Subspace s);

  // Spaces are immutable and may be shared between words and tables.
  std::shared_ptr<const Subspace> shared_space(const Word& w) const;
  void set_space(const Word& w, std::shared_ptr<const Subspace> s);

 private:
  Frame frame_;
  int report_;
  int work_;
  Semantics semantics_;
  std::size_t checked_index(const Word& w) const;

  std::vector<std::shared_ptr<const Subspace>> spaces_;
};

struct ClosureOptions {
  // Worker threads for candidate reduction; 0 reads QGCAT_THREADS, falling
  // back to the hardware concurrency.
  int threads = 0;
  // Store one space per length when the category provably ignores colours
  // (F = 1 and the pairing on "ww" present).
  bool colour_blind = true;
};

// Least table containing the generators, the scalars at the empty word and the
// duality vectors, closed under tensor products, contractions, rotations,
// inverse rotations and reflections with every intermediate word of length at
// most work_cutoff.
FixTable closure(const Frame& frame, const std::vector<FixGenerator>& generators, int report_cutoff,
                 int work_cutoff, const ClosureOptions& options = {});

// C(w1, w2) obtained by rotating C(empty, w2 star(w1)). Needs |w1| + |w2| within
// the report cutoff.
Subspace mor_space(const FixTable& table, const Word& w1, const Word& w2);

// Pointwise comparisons up to the smaller report cutoff; tables must share
// the frame.
bool table_leq(const FixTable& a, const FixTable& b);
bool table_equal(const FixTable& a, const FixTable& b);
// First word (in enumeration order) where the tables differ.
std::optional<Word> table_difference(const FixTable& a, const FixTable& b);
FixTable table_intersect(const FixTable& a, const FixTable& b);
FixTable table_join(const FixTable& a, const FixTable& b, const ClosureOptions& options = {});
// Every nonzero stored space, as closure generators.
std::vector<FixGenerator> table_generators(const FixTable& t);

// Full space where c(w) lies in kZ, zero elsewhere (k = 0 means c(w) = 0).
FixTable full_table(const Frame& frame, std::int64_t k, int cutoff);

// Z_k-extended category stored by cyclic normal forms of extended words
// (rotating triangles acts trivially on vectors). Only nonzero spaces are kept.
class ExtFixTable {
 public:
  ExtFixTable(Frame frame, std::int64_t modulus, int square_cutoff, int exponent_budget,
              Semantics semantics);

  const Frame& frame() const { return frame_; }
  std::int64_t modulus() const { return k_; }
  int square_cutoff() const { return squares_; }
  int exponent_budget() const { return budget_; }
  Semantics semantics() const { return semantics_; }

  // Whether w lies within the cutoffs (and, for tables computed on demand,
  // among the computed words).
  bool covers(const ExtWord& w) const;
  // Zero subspace where nothing is stored; throws CutoffError outside coverage.
  Subspace space(const ExtWord& w) const;
  std::size_t dim(const ExtWord& w) const { return space(w).dim(); }
  const std::map<ExtWord, Subspace>& nonzero() const { return spaces_; }

  void set(const ExtWord& w, Subspace s);
  // Restricts coverage to the given cyclic normal forms.
  void restrict_coverage(std::set<ExtWord> words) { computed_ = std::move(words); }

 private:
  bool within_cutoffs(const ExtWord& key) const;

  Frame frame_;
  std::int64_t k_;
  int squares_;
  int budget_;
  Semantics semantics_;
  std::map<ExtWord, Subspace> spaces_;
  std::optional<std::set<ExtWord>> computed_;
};

// Extended closure: squares carry legs, triangles carry none. Words are kept
// within square_cutoff squares and, for k = 0, total absolute triangle
// exponent at most exponent_budget (square_cutoff when negative).
ExtFixTable ext_closure(const Frame& frame, std::int64_t k, const std::vector<ExtGenerator>& generators,
                        int square_cutoff, int exponent_budget = -1, const ClosureOptions& options = {});

// Category of H * dual(Z_l) as the least fixpoint of the factorization
// operator: triangle-free words read H directly, other words are spanned by
// R^{|w0|}(xi_1 (x) ... (x) xi_l) over w = w0 t w1 t ... t wl with w1..w(l-1)
// triangle-free. Computed on the words reachable from `targets` (the glued
// words up to H's report cutoff when empty). Requires l >= 2.
ExtFixTable free_product_table(const FixTable& H, std::int64_t l, const std::vector<ExtWord>& targets = {});

// spaces(w) := G.space(glue_word(w, k)) for |w| up to `cutoff` (G's square
// cutoff when negative).
FixTable glue_table(const ExtFixTable& G, int cutoff = -1);

}  // namespace qgcat
