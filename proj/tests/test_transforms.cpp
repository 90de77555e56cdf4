#include "doctest.h"

#include "oracles.hpp"
#include "qgcat/error.hpp"
#include "qgcat/presets.hpp"
#include "qgcat/transforms.hpp"

#include <numeric>

using namespace qgcat;

namespace {

Word W(const char* s) { return Word::parse(s); }
ExtWord E(const char* s, std::int64_t k) { return ExtWord::parse(s, k); }

FixTable preset_table(const std::string& name, int N, int L, int work) {
  return closure(identity_frame(N), preset_generators(name, N), L, work);
}

const FixTable& o2() {
  static const FixTable t = preset_table("O+", 2, 6, 8);
  return t;
}

const FixTable& u2() {
  static const FixTable t = preset_table("U+", 2, 6, 8);
  return t;
}

void check_equal(const FixTable& a, const FixTable& b) {
  const auto d = table_difference(a, b);
  INFO("first difference at " << (d ? d->text() : std::string("none")));
  CHECK(!d);
}

// Closure of e000 + i e111 at "wwb": not invariant under colour inversion.
FixTable asymmetric_table() {
  Subspace v(2, 0, 3);
  std::vector<Scalar> e(8);
  e[0] = Scalar(1);
  e[7] = Scalar(Rational(0), Rational(1));
  v.insert_dense(e);
  return closure(identity_frame(2), {{W("wwb"), v}}, 4, 6);
}

}  // namespace

TEST_CASE("degree of reflection") {
  CHECK(degree_of_reflection(o2()).value == 2);
  CHECK(degree_of_reflection(u2()).value == 0);
  CHECK(degree_of_reflection(u2()).witnesses.empty());

  const FixTable s = preset_table("S+", 2, 4, 6);
  const DegreeCertificate cs = degree_of_reflection(s);
  CHECK(cs.value == 1);
  REQUIRE(!cs.witnesses.empty());
  for (const auto& wit : cs.witnesses) {
    CHECK(!s.space(wit.w2).is_zero());
    CHECK(wit.difference == colour_sum(wit.w2) - colour_sum(wit.w1));
  }

  const DegreeCertificate c4 = degree_of_reflection(o2(), 4);
  const DegreeCertificate c6 = degree_of_reflection(o2(), 6);
  CHECK(c4.cutoff == 4);
  CHECK(c6.cutoff == 6);
  CHECK(c4.value % (c6.value == 0 ? 1 : c6.value) == 0);
  if (c6.value == 0) CHECK(c4.value == 0);
}

TEST_CASE("global colourization") {
  CHECK(is_globally_colourized(o2()).holds);
  const Verdict u = is_globally_colourized(u2());
  CHECK(!u.holds);
  CHECK(!u.counterexample.empty());
  CHECK(is_globally_colourized(tensor_complexify(o2(), 0)).holds);
}

TEST_CASE("colour inversion invariance") {
  CHECK(is_colour_inversion_invariant(u2()).holds);
  CHECK(is_colour_inversion_invariant(tensor_complexify(o2(), 4)).holds);

  const FixTable t = asymmetric_table();
  const Verdict verdict = is_colour_inversion_invariant(t);
  CHECK(!verdict.holds);
  REQUIRE(!verdict.counterexample.empty());
  const Word w = W(verdict.counterexample.c_str());
  CHECK(!(t.space(w) == t.space(colour_invert(w))));

  Matrix f = Matrix::identity(2);
  f(0, 1) = Scalar(1);
  const FixTable tw = closure(make_frame(f), {}, 2, 4);
  CHECK_THROWS_AS(is_colour_inversion_invariant(tw), NotApplicable);
}

TEST_CASE("alternating categories") {
  const Verdict o = is_alternating_category(o2());
  CHECK(!o.holds);
  CHECK(o.counterexample == "ww");
  CHECK(is_alternating_category(free_complexify(o2(), 2)).holds);
  // Contractions preserve parity, so even generators never reach odd words.
  const Verdict full = is_alternating_category(full_table(identity_frame(2), 1, 4));
  CHECK(!full.holds);
  CHECK(full.counterexample == "w");
}

TEST_CASE("tensor complexification") {
  const FixTable t4 = tensor_complexify(o2(), 4);
  CHECK(t4.space(W("ww")).is_zero());
  CHECK(t4.space(W("wwww")) == o2().space(W("wwww")));
  CHECK(tensor_complexify(o2(), 2).dim(W("wwbb")) == 2);
  check_equal(tensor_complexify(tensor_complexify(o2(), 0), 0), tensor_complexify(o2(), 0));
  CHECK_THROWS_AS(tensor_complexify(o2(), -1), ShapeError);

  for (std::int64_t k : {0, 2, 3}) {
    INFO("k = " << k);
    check_equal(tensor_complexify(o2(), k), table_intersect(o2(), full_table(o2().frame(), k, 8)));
  }
  const std::pair<std::int64_t, std::int64_t> pairs[] = {{2, 3}, {2, 4}, {0, 2}};
  for (const auto& [k, l] : pairs) {
    INFO("k = " << k << ", l = " << l);
    check_equal(tensor_complexify(tensor_complexify(o2(), k), l), tensor_complexify(o2(), std::lcm(k, l)));
  }
}

TEST_CASE("tensor complexification fixes divisors of the degree") {
  const std::int64_t d = degree_of_reflection(o2()).value;
  check_equal(tensor_complexify(o2(), d), o2());
  check_equal(tensor_complexify(o2(), 1), o2());
  const DegreeCertificate c = degree_of_reflection(tensor_complexify(o2(), 3));
  CHECK(c.value % std::lcm(d, std::int64_t{3}) == 0);
}

TEST_CASE("free complexification of the pairing category is the unitary one") {
  const FixTable f2 = free_complexify(o2(), 2);
  for (const Word& w : enumerate_words(6)) {
    INFO("word " << w.text());
    CHECK(f2.space(w) == oracle::span_at(oracle::kColouredPairings, w, 2));
  }
  check_equal(free_complexify(o2(), 0), f2);
  check_equal(free_complexify(o2(), 3), f2);
  check_equal(free_complexify(tensor_complexify(o2(), 2), 2), f2);
  check_equal(free_complexify(o2(), 1), o2());
}

TEST_CASE("free complexification refuses degree one without a witness") {
  const FixTable s = preset_table("S+", 2, 4, 6);
  CHECK_THROWS_AS(free_complexify(s, 2), NotApplicable);
  CHECK_NOTHROW(free_complexify(s, 0));
  const FixTable with = free_complexify(s, 2, {{W("w"), s.space(W("w"))}});
  CHECK(with.dim(W("w")) == 1);
}

TEST_CASE("glued free products agree with free complexification") {
  const FixTable f = free_complexify(o2(), 2);
  for (std::int64_t l : {2, 3}) {
    INFO("l = " << l);
    check_equal(glue_table(free_product_table(o2(), l), 6), f);
  }
}

TEST_CASE("orthogonal intersection reconstructs tensor and free complexifications") {
  const FixTable t0 = tensor_complexify(o2(), 0);
  CHECK(degree_of_reflection(t0).value == 0);
  const FixTable h = orthogonal_intersection(t0);
  check_equal(h, o2());
  check_equal(tensor_complexify(h, 0), t0);

  const FixTable f0 = free_complexify(o2(), 0);
  CHECK(is_alternating_category(f0).holds);
  CHECK(is_colour_inversion_invariant(f0).holds);
  const FixTable h2 = orthogonal_intersection(f0);
  check_equal(h2, o2());
  check_equal(free_complexify(h2, 0), f0);
}

TEST_CASE("tensor complexification is the globally colourized hull of the free one") {
  std::vector<FixGenerator> gens = table_generators(free_complexify(o2(), 0));
  const Frame& fr = o2().frame();
  gens.push_back({W("bwwb"), span({fix_from_mor(fr, LinMap::identity(2, 2), W("wb"), W("bw"))})});
  check_equal(closure(fr, gens, 6, 8), tensor_complexify(o2(), 0));
}

TEST_CASE("maximal ungluing round trip") {
  const ExtFixTable g = max_unglue(u2(), 2, 6);
  check_equal(glue_table(g, 6), u2());
  const ExtFixTable full = max_unglue(full_table(identity_frame(2), 1, 4), 1, 4);
  CHECK(full.space(E("ssss", 1)).dim() == 16);
}

TEST_CASE("canonical ungluing") {
  const FixTable t = tensor_complexify(o2(), 4);
  const ExtFixTable g = canonical_unglue_z2(t, 6);
  check_equal(glue_table(g, 6), t);

  // Words beyond half the square cutoff need intermediates past the cutoff.
  const ExtFixTable x = times_z2_product(o2(), 4, 6);
  for (const ExtFixTable* a : {&g, &x}) {
    for (const auto& [w, s] : a->nonzero()) {
      if (w.square_count() > 3) continue;
      INFO("word " << w.text());
      CHECK(g.space(w) == x.space(w));
    }
  }
  CHECK(g.space(E("sS", 2)).dim() == 1);

  const FixTable bad = asymmetric_table();
  CHECK_THROWS_AS(canonical_unglue_z2(bad, 4), NotApplicable);
  CHECK_THROWS_AS(times_z2_product(o2(), 3, 4), ShapeError);
}

TEST_CASE("morphism generators in extended categories") {
  const Frame fr = identity_frame(2);
  const ExtGenerator g = ext_morphism_generator(fr, LinMap::identity(2, 1), E("s", 2), E("S", 2));
  CHECK(g.space.dim() == 1);
  CHECK_THROWS_AS(ext_morphism_generator(fr, LinMap::identity(2, 1), E("s", 2), E("s", 3)), ShapeError);
}
