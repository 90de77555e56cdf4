#include "doctest.h"

#include "oracles.hpp"
#include "qgcat/category.hpp"
#include "qgcat/error.hpp"
#include "qgcat/presets.hpp"

#include <functional>

using namespace qgcat;

namespace {

Word W(const char* s) { return Word::parse(s); }
ExtWord E(const char* s, std::int64_t k) { return ExtWord::parse(s, k); }

FixTable preset_table(const std::string& name, int N, int L, int work) {
  return closure(identity_frame(N), preset_generators(name, N), L, work);
}

void check_against_oracle(const FixTable& t, const oracle::Family& f, int L) {
  for (const Word& w : enumerate_words(L)) {
    INFO("word " << w.text());
    CHECK(t.space(w) == oracle::span_at(f, w, t.N()));
  }
}

// Cayley transform (1 - A)(1 + A)^-1 of a rational antisymmetric matrix: an
// exact orthogonal matrix.
Matrix rational_orthogonal(int N, int seed) {
  Matrix a(N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      a(i, j) = Scalar(Rational((seed * 7 + i * 3 + j * 5) % 5 - 2, 1 + (i + j + seed) % 3));
      a(j, i) = Scalar(0) - a(i, j);
    }
  Matrix p = Matrix::identity(N);
  Matrix m = Matrix::identity(N);
  for (int i = 0; i < N * N; ++i) {
    p.a[i] = p.a[i] + a.a[i];
    m.a[i] = m.a[i] - a.a[i];
  }
  return m * inverse(p);
}

// u^{(x) n} applied to a vector (the same real matrix on every leg).
std::vector<Scalar> act_all(const Matrix& u, const std::vector<Scalar>& v, std::size_t legs) {
  const int N = u.n;
  std::vector<Scalar> cur = v;
  for (std::size_t j = 0; j < legs; ++j) {
    std::size_t after = 1;
    for (std::size_t i = j + 1; i < legs; ++i) after *= N;
    std::vector<Scalar> next(cur.size());
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      if (cur[idx].is_zero()) continue;
      const std::size_t s = (idx / after) % N;
      const std::size_t base = idx - s * after;
      for (int t = 0; t < N; ++t) next[base + t * after] += u(t, static_cast<int>(s)) * cur[idx];
    }
    cur = std::move(next);
  }
  return cur;
}

// Existence oracle for the Z_2 extended category generated by the duality
// vectors alone: a noncrossing perfect matching pairing squares of opposite
// colour and triangles with triangles.
bool z2_matching(const std::string& letters) {
  const std::size_t n = letters.size();
  if (n % 2) return false;
  std::vector<std::vector<int>> memo(n + 1, std::vector<int>(n + 1, -1));
  std::function<bool(std::size_t, std::size_t)> ok = [&](std::size_t i, std::size_t j) -> bool {
    if (i >= j) return true;
    int& m = memo[i][j];
    if (m >= 0) return m;
    m = 0;
    for (std::size_t k = i + 1; k < j && !m; k += 2) {
      const char a = letters[i];
      const char b = letters[k];
      const bool pairable = (a == 't' && b == 't') || (a == 's' && b == 'S') || (a == 'S' && b == 's');
      if (pairable && ok(i + 1, k) && ok(k + 1, j)) m = 1;
    }
    return m;
  };
  return ok(0, n);
}

}  // namespace

TEST_CASE("pairing closure matches the noncrossing pairing oracle") {
  for (int N : {2, 3}) {
    const FixTable t = preset_table("O+", N, 6, 8);
    CHECK(t.semantics() == Semantics::lower_bound);
    check_against_oracle(t, oracle::kPairings, 6);
    if (N == 2) {
      CHECK(t.dim(W("")) == 1);
      CHECK(t.dim(W("ww")) == 1);
      CHECK(t.dim(W("wwww")) == 2);
      CHECK(t.dim(W("wwwwww")) == 5);
      CHECK(t.dim(W("www")) == 0);
    }
  }
}

TEST_CASE("empty generators give the coloured pairings") {
  const FixTable t = closure(identity_frame(2), {}, 6, 8);
  CHECK(t.dim(W("wbwb")) == 2);
  CHECK(t.dim(W("wwbb")) == 1);
  CHECK(t.dim(W("ww")) == 0);
  check_against_oracle(t, oracle::kColouredPairings, 6);
}

TEST_CASE("pairs and singletons match their oracle") {
  const FixTable t = preset_table("B+", 2, 6, 8);
  check_against_oracle(t, oracle::kPairsAndSingletons, 6);
}

TEST_CASE("all noncrossing partitions match their oracle") {
  const FixTable t = preset_table("S+", 2, 6, 8);
  check_against_oracle(t, oracle::kAllPartitions, 6);
}

TEST_CASE("full space at one letter absorbs everything") {
  const int N = 2;
  const FixTable t = closure(identity_frame(N), {{W("w"), Subspace::full(N, 0, 1)}}, 4, 4);
  for (const Word& w : enumerate_words(4)) CHECK(t.dim(w) == ipow(N, static_cast<int>(w.size())));
}

TEST_CASE("closure vectors are invariant under orthogonal matrices") {
  const int N = 3;
  const FixTable t = preset_table("O+", N, 4, 6);
  for (int seed = 0; seed < 3; ++seed) {
    const Matrix u = rational_orthogonal(N, seed);
    CHECK(u * transpose(u) == Matrix::identity(N));
    for (const Word& w : enumerate_words(4)) {
      for (const auto& row : t.space(w).rows()) {
        const auto v = dense_from_sparse(row, t.space(w).ambient());
        CHECK(act_all(u, v, w.size()) == v);
      }
    }
  }
}

TEST_CASE("closure respects rotations and is idempotent and monotone") {
  const FixTable t = preset_table("B+", 2, 5, 6);
  for (const Word& w : enumerate_words(6)) {
    if (w.empty()) continue;
    CHECK(t.dim(w) == t.dim(w.substr(w.size() - 1) + w.substr(0, w.size() - 1)));
    CHECK(t.dim(w) == t.dim(word_star(w)));
  }
  const FixTable again = closure(t.frame(), table_generators(t), 5, 6);
  CHECK(table_equal(t, again));
  const FixTable smaller = preset_table("O+", 2, 5, 6);
  CHECK(table_leq(smaller, t));
  CHECK_FALSE(table_leq(t, smaller));
  CHECK(table_leq(preset_table("O+", 2, 5, 5), smaller));
}

TEST_CASE("closure is deterministic across thread counts") {
  const Frame fr = identity_frame(2);
  const auto gens = preset_generators("B+", 2);
  const FixTable one = closure(fr, gens, 6, 7, {1});
  const FixTable four = closure(fr, gens, 6, 7, {4});
  for (const Word& w : enumerate_words(7)) CHECK(one.space(w) == four.space(w));
}

TEST_CASE("length-keyed closure agrees with the per-word engine") {
  const Frame fr = identity_frame(2);
  for (const char* name : {"O+", "S+", "B+"}) {
    INFO(name);
    const auto gens = preset_generators(name, 2);
    ClosureOptions plain;
    plain.colour_blind = false;
    const FixTable fast = closure(fr, gens, 5, 6);
    const FixTable slow = closure(fr, gens, 5, 6, plain);
    for (const Word& w : enumerate_words(6)) {
      INFO("word " << w.text());
      CHECK(fast.space(w) == slow.space(w));
    }
  }
  // U+ lacks the pairing on "ww", so colours stay distinct.
  const FixTable u = closure(fr, preset_generators("U+", 2), 4, 4);
  CHECK(u.dim(W("ww")) == 0);
  CHECK(u.dim(W("wb")) == 1);
}

TEST_CASE("closure over a complex frame satisfies rotation compatibility") {
  Matrix F(2);
  F(0, 0) = Scalar(1);
  F(0, 1) = Scalar::i();
  F(1, 0) = Scalar(0);
  F(1, 1) = Scalar(2);
  const Frame fr = make_frame(F);
  const FixTable t = closure(fr, {}, 4, 6);
  for (const Word& w : enumerate_words(4)) {
    if (w.empty()) continue;
    CHECK(t.dim(w) == t.dim(w.substr(1) + w.substr(0, 1)));
  }
  CHECK(t.dim(W("wb")) == 1);
  CHECK(t.dim(W("wbwb")) == 2);
}

TEST_CASE("generator validation") {
  const Frame fr = identity_frame(2);
  CHECK_THROWS_AS(closure(fr, {{W("ww"), Subspace::full(2, 0, 1)}}, 4, 4), ShapeError);
  CHECK_THROWS_AS(closure(fr, {{W("ww"), Subspace::full(3, 0, 2)}}, 4, 4), ShapeError);
  CHECK_THROWS_AS(closure(fr, {{W("wwwwww"), Subspace(2, 0, 6)}}, 4, 4), CutoffError);
  CHECK_THROWS_AS(FixTable(fr, 5, 4, Semantics::exact), ShapeError);
}

TEST_CASE("morphism spaces") {
  const FixTable t = preset_table("O+", 2, 6, 8);
  CHECK(mor_space(t, W("w"), W("w")).dim() == 1);
  CHECK(mor_space(t, W("ww"), W("ww")).dim() == 2);
  CHECK(mor_space(t, W("www"), W("www")).dim() == 5);
  for (const Word& w : enumerate_words(4)) {
    const Subspace m = mor_space(t, Word(), w);
    CHECK(m.rows() == t.space(w).rows());
  }
  CHECK(member(mor_space(t, W("w"), W("w")), LinMap::identity(2, 1)));
  CHECK_THROWS_AS(mor_space(t, W("wwww"), W("www")), CutoffError);

  const FixTable u = closure(identity_frame(2), {}, 6, 8);
  CHECK(mor_space(u, W("w"), W("w")).dim() == 1);
  CHECK(mor_space(u, W("wb"), W("bw")).dim() == 1);
  CHECK_FALSE(member(mor_space(u, W("wb"), W("bw")), LinMap::identity(2, 2)));
}

TEST_CASE("full tables and lattice operations") {
  const Frame fr = identity_frame(2);
  const FixTable f1 = full_table(fr, 1, 4);
  for (const Word& w : enumerate_words(4)) CHECK(f1.dim(w) == ipow(2, static_cast<int>(w.size())));
  const FixTable f2 = full_table(fr, 2, 4);
  CHECK(f2.dim(W("w")) == 0);
  CHECK(f2.dim(W("wb")) == 4);
  const FixTable f0 = full_table(fr, 0, 4);
  CHECK(f0.dim(W("wwbb")) == 16);
  CHECK(f0.dim(W("wwb")) == 0);
  CHECK(f0.semantics() == Semantics::exact);

  const FixTable a = preset_table("O+", 2, 4, 6);
  CHECK(table_leq(a, a));
  CHECK(table_equal(table_intersect(a, full_table(fr, 1, 6)), a));
  CHECK(table_leq(a, f1));
  const FixTable cut = table_intersect(a, f0);
  CHECK(cut.report_cutoff() == 4);
  CHECK(cut.dim(W("ww")) == 0);
  CHECK(cut.dim(W("wb")) == 1);
  CHECK(table_difference(a, cut) == W("ww"));

  const FixTable j = table_join(a, closure(fr, {{W("w"), Subspace::full(2, 0, 1)}}, 4, 6));
  CHECK(table_equal(j, full_table(fr, 1, 4)));
  CHECK_THROWS_AS(table_leq(a, preset_table("O+", 3, 4, 4)), ShapeError);
}

TEST_CASE("extended closure restricts to the plain closure on triangle-free words") {
  const int N = 2;
  const Frame fr = identity_frame(N);
  const FixTable plain = preset_table("O+", N, 4, 6);
  std::vector<ExtGenerator> gens;
  for (const auto& g : preset_generators("O+", N)) gens.push_back({ExtWord::from_squares(g.word, 2), g.space});
  const ExtFixTable ext = ext_closure(fr, 2, gens, 6);
  for (const Word& w : enumerate_words(4)) {
    INFO("word " << w.text());
    CHECK(ext.space(ExtWord::from_squares(w, 2)) == plain.space(w));
  }
  CHECK(ext.space(E("stTs", 2)) == ext.space(E("ss", 2)));
  CHECK(ext.space(E("sttS", 2)) == ext.space(E("sS", 2)));
  CHECK(ext.covers(E("ssssss", 2)));
  CHECK_FALSE(ext.covers(E("sssssss", 2)));
  CHECK_THROWS_AS(ext.space(E("sssssss", 2)), CutoffError);
}

TEST_CASE("extended closure of the duality vectors matches the matching oracle") {
  const ExtFixTable ext = ext_closure(identity_frame(2), 2, {}, 6);
  // Words with up to four squares and one optional triangle after each square.
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << (2 * n)); ++mask) {
      std::string text;
      std::vector<ExtWord::Letter> body;
      for (std::size_t i = 0; i < n; ++i) {
        const bool black = (mask >> i) & 1;
        const bool tri = (mask >> (n + i)) & 1;
        text += black ? 'S' : 's';
        if (tri) text += 't';
        body.push_back({black, tri ? 1 : 0});
      }
      const ExtWord w(2, 0, body);
      INFO("word " << text);
      CHECK(!ext.space(w).is_zero() == z2_matching(text));
    }
  }
  CHECK(ext.space(E("tt", 2)).dim() == 1);
  CHECK(ext.space(E("t", 2)).is_zero());
}

TEST_CASE("free product with Z_2 of the pairing category") {
  const FixTable H = preset_table("O+", 2, 4, 6);
  const ExtFixTable G = free_product_table(H, 2);
  CHECK(G.space(E("sS", 2)).dim() == 1);
  CHECK(G.space(E("sS", 2)) == H.space(W("wb")));
  CHECK(G.space(glue_word(W("wwbb"), 2)).dim() == 1);
  CHECK(G.space(glue_word(W("wb"), 2)).dim() == 1);
  const ExtFixTable G2 = free_product_table(H, 2, {E("stst", 2), E("ttss", 2)});
  CHECK(G2.space(E("stst", 2)).is_zero());
  CHECK(G2.space(E("ss", 2)).dim() == 1);
  CHECK_THROWS_AS(free_product_table(H, 1), NotApplicable);
  CHECK_THROWS_AS(G2.space(E("ststst", 2)), CutoffError);

  const FixTable glued = glue_table(G);
  CHECK(glued.dim(W("wb")) == 1);
  CHECK(glued.dim(W("ww")) == 0);
}

TEST_CASE("glue of a triangle-free seeded table reads the square pattern") {
  const ExtFixTable ext = ext_closure(identity_frame(2), 1, {}, 4);
  const FixTable g = glue_table(ext);
  for (const Word& w : enumerate_words(4)) CHECK(g.space(w) == ext.space(ExtWord::from_squares(w, 1)));
  CHECK_THROWS_AS(glue_table(ext, 5), CutoffError);
}
