#include "doctest.h"

#include "qgcat/error.hpp"
#include "qgcat/frame.hpp"
#include "test_support.hpp"

#include <random>

using namespace qgcat;
using namespace qgcat::testing;

namespace {

Matrix mat2(Scalar a, Scalar b, Scalar c, Scalar d) {
  Matrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

LinMap snake(const LinMap& left_cup, const LinMap& right_cup, int N) {
  LinMap id = LinMap::identity(N, 1);
  return compose(tensor_product(adjoint(left_cup), id), tensor_product(id, right_cup));
}

Word random_word(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> len(lo, hi);
  std::uniform_int_distribution<int> bit(0, 1);
  Word w;
  for (int i = len(rng); i > 0; --i) w.push_back(bit(rng) ? 'b' : 'w');
  return w;
}

std::vector<std::vector<Scalar>> random_factors(std::mt19937& rng, int N, std::size_t k) {
  std::vector<std::vector<Scalar>> f;
  for (std::size_t i = 0; i < k; ++i) f.push_back(random_vec(rng, N));
  return f;
}

Scalar bilinear(const std::vector<Scalar>& left, const Matrix& m, const std::vector<Scalar>& right) {
  Scalar acc;
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) acc += left[i] * m(i, j) * right[j];
  }
  return acc;
}

}  // namespace

TEST_CASE("make_frame examples") {
  Frame id = identity_frame(2);
  LinMap cup = LinMap::column(2, 2, {1, 0, 0, 1});
  CHECK(id.xi_wb == cup);
  CHECK(id.xi_bw == cup);
  REQUIRE(id.c.has_value());
  CHECK(*id.c == Scalar(1));
  Frame j = make_frame(mat2(0, 1, -1, 0));
  REQUIRE(j.c.has_value());
  CHECK(*j.c == Scalar(-1));
  Frame u = make_frame(mat2(1, 1, 0, 1));
  CHECK_FALSE(u.c.has_value());
  CHECK_THROWS_AS(make_frame(mat2(1, 2, 2, 4)), NotApplicable);
}

TEST_CASE("duality entries follow F") {
  std::mt19937 rng(21);
  Matrix F = random_invertible(rng, 3);
  Frame fr = make_frame(F);
  Matrix G = inverse(conj(F));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(fr.xi_wb.at(static_cast<std::size_t>(i) * 3 + j, 0) == F(j, i));
      CHECK(fr.xi_bw.at(static_cast<std::size_t>(i) * 3 + j, 0) == G(j, i));
    }
  }
}

TEST_CASE("snake equations for random frames") {
  std::mt19937 rng(22);
  for (int n = 0; n < 20; ++n) {
    const int N = n % 2 == 0 ? 2 : 3;
    Frame fr = make_frame(random_invertible(rng, N));
    CHECK(snake(fr.xi_wb, fr.xi_bw, N) == LinMap::identity(N, 1));
    CHECK(snake(fr.xi_bw, fr.xi_wb, N) == LinMap::identity(N, 1));
    if (fr.c) {
      Matrix prod = fr.F * conj(fr.F);
      for (int i = 0; i < N; ++i) {
        for (int k = 0; k < N; ++k) CHECK(prod(i, k) == (i == k ? *fr.c : Scalar()));
      }
    }
  }
}

TEST_CASE("word duality") {
  std::mt19937 rng(23);
  Frame fr = make_frame(random_invertible(rng, 2));
  CHECK(word_duality(fr, Word::parse("w")) == fr.xi_wb);
  CHECK(word_duality(fr, Word::parse("b")) == fr.xi_bw);
  CHECK(word_duality(fr, Word()) == LinMap::scalar(2, 1));
  for (int n = 0; n < 10; ++n) {
    Word w = random_word(rng, 1, 3);
    const int k = static_cast<int>(w.size());
    LinMap left = word_duality(fr, w);
    LinMap right = word_duality(fr, word_star(w));
    LinMap id = LinMap::identity(2, k);
    LinMap s = compose(tensor_product(adjoint(left), id), tensor_product(id, right));
    CHECK(s == id);
  }
}

TEST_CASE("contraction examples") {
  Frame id = identity_frame(2);
  Word wb = Word::parse("wb");
  CHECK(contraction(id, id.xi_wb, wb, 0) == LinMap::scalar(2, 2));
  Frame j = make_frame(mat2(0, 1, -1, 0));
  CHECK(contraction(j, j.xi_wb, wb, 0) == LinMap::scalar(2, 2));
  LinMap e12 = LinMap::elementary(2, {{1, 0}, {0, 1}});
  CHECK(contraction(id, e12, wb, 0) == LinMap::scalar(2, 0));
  CHECK_THROWS_AS(contraction(id, e12, Word::parse("ww"), 0), ShapeError);
  CHECK_THROWS_AS(contraction(id, e12, wb, 1), ShapeError);
}

TEST_CASE("contraction agrees with the defining composition") {
  std::mt19937 rng(24);
  for (int n = 0; n < 20; ++n) {
    Frame fr = make_frame(random_invertible(rng, 2));
    Word w = random_word(rng, 2, 4);
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] == w[i + 1]) ++i;
    if (i + 1 >= w.size()) continue;
    LinMap eta = random_map(rng, 2, 0, static_cast<int>(w.size()));
    LinMap cap = adjoint(w[i] == 'w' ? fr.xi_wb : fr.xi_bw);
    LinMap op = tensor_product(tensor_product(LinMap::identity(2, static_cast<int>(i)), cap),
                               LinMap::identity(2, static_cast<int>(w.size() - i - 2)));
    CHECK(contraction(fr, eta, w, i) == compose(op, eta));
  }
}

TEST_CASE("elementary tensor formulas") {
  std::mt19937 rng(25);
  for (int n = 0; n < 200; ++n) {
    const int N = 2;
    Matrix F = random_invertible(rng, N);
    Frame fr = make_frame(F);
    Matrix Finv = inverse(F);
    Matrix G = inverse(conj(F));
    Word w = random_word(rng, 2, 4);
    auto f = random_factors(rng, N, w.size());
    LinMap eta = LinMap::elementary(N, f);

    // Contraction: eta_{i+1}^T conj(F) eta_i for a white pair, eta_{i+1}^T F^-1 eta_i for black.
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) continue;
      Scalar c = bilinear(f[i + 1], w[i] == 'w' ? conj(F) : Finv, f[i]);
      std::vector<std::vector<Scalar>> rest;
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (j != i && j != i + 1) rest.push_back(f[j]);
      }
      CHECK(contraction(fr, eta, w, i) == c * LinMap::elementary(N, rest));
    }

    // Rotation: twist the last factor by F^T conj(F) (white) or G^T F^-1 (black).
    {
      Matrix twist = w[w.size() - 1] == 'w' ? transpose(F) * conj(F) : transpose(G) * Finv;
      std::vector<std::vector<Scalar>> g;
      g.push_back(act(twist, f.back()));
      for (std::size_t j = 0; j + 1 < f.size(); ++j) g.push_back(f[j]);
      auto [r, rw] = rotate(fr, eta, w);
      CHECK(r == LinMap::elementary(N, g));
      CHECK(rw == w.substr(w.size() - 1) + w.substr(0, w.size() - 1));
    }

    // Reflection: reversed factors, each conjugated and hit by F (white) or G (black).
    {
      std::vector<std::vector<Scalar>> g;
      for (std::size_t j = f.size(); j-- > 0;) {
        g.push_back(act(w[j] == 'w' ? F : G, conj_vec(f[j])));
      }
      auto [r, rw] = reflect(fr, eta, w);
      CHECK(r == LinMap::elementary(N, g));
      CHECK(rw == word_star(w));
    }
  }
}

TEST_CASE("elementary formulas in the commonly stated form for real or symmetric F") {
  std::mt19937 rng(26);
  for (int n = 0; n < 50; ++n) {
    Matrix real_F = random_invertible(rng, 2, false);
    Frame fr = make_frame(real_F);
    auto f = random_factors(rng, 2, 2);
    LinMap eta = LinMap::elementary(2, f);
    CHECK(contraction(fr, eta, Word::parse("wb"), 0) == LinMap::scalar(2, bilinear(f[1], real_F, f[0])));

    Matrix S = random_matrix(rng, 2);
    S(1, 0) = S(0, 1);
    Matrix sym;
    try {
      (void)inverse(S);
      sym = S;
    } catch (const NotApplicable&) {
      continue;
    }
    Frame sf = make_frame(sym);
    auto [r, rw] = rotate(sf, eta, Word::parse("bw"));
    CHECK(r == LinMap::elementary(2, {act(sym * conj(sym), f[1]), f[0]}));
  }
}

TEST_CASE("rotation and reflection examples") {
  Frame id = identity_frame(2);
  auto [r, rw] = rotate(id, id.xi_wb, Word::parse("wb"));
  CHECK(r == id.xi_bw);
  CHECK(rw.text() == "bw");
  LinMap e12 = LinMap::elementary(2, {{1, 0}, {0, 1}});
  LinMap e21 = LinMap::elementary(2, {{0, 1}, {1, 0}});
  CHECK(rotate(id, e12, Word::parse("ww")).first == e21);
  auto [s, sw] = reflect(id, e12, Word::parse("wb"));
  CHECK(s == e21);
  CHECK(sw.text() == "wb");
  CHECK(reflect(id, id.xi_wb, Word::parse("wb")).first == id.xi_wb);
  LinMap ie1e2 = LinMap::elementary(2, {{Scalar::i(), Scalar(0)}, {Scalar(0), Scalar(1)}});
  CHECK(reflect(id, ie1e2, Word::parse("wb")).first ==
        LinMap::elementary(2, {{Scalar(0), Scalar(1)}, {-Scalar::i(), Scalar(0)}}));
}

TEST_CASE("rotation, reflection and rotations of morphisms are consistent") {
  std::mt19937 rng(27);
  for (int n = 0; n < 30; ++n) {
    const int N = n % 3 == 0 ? 3 : 2;
    Frame fr = make_frame(random_invertible(rng, N));
    Word w = random_word(rng, 1, N == 3 ? 3 : 4);
    const int k = static_cast<int>(w.size());
    LinMap eta = random_map(rng, N, 0, k);

    auto [r, rw] = rotate(fr, eta, w);
    auto [back, bw] = rotate_inv(fr, r, rw);
    CHECK(back == eta);
    CHECK(bw == w);

    auto [s, sw] = reflect(fr, eta, w);
    CHECK(s == compose(tensor_product(adjoint(eta), LinMap::identity(N, k)), word_duality(fr, w)));
    auto [ss, ssw] = reflect(fr, s, sw);
    CHECK(ss == eta);
    CHECK(ssw == w);

    // Rotation is a left rotation composed with a right rotation.
    RotatedMap right = right_rotate(fr, eta, Word(), w);
    RotatedMap both = left_rotate(fr, right.map, right.dom, right.cod);
    CHECK(both.map == r);
    CHECK(both.cod == rw);

    // Morphism rotations and their inverses.
    std::uniform_int_distribution<int> cut(0, k);
    const std::size_t c = static_cast<std::size_t>(cut(rng));
    Word w2 = w.substr(0, c);
    Word w1 = word_star(w.substr(c));
    LinMap t = mor_from_fix(fr, eta, w1, w2);
    CHECK(t.dom_len() == static_cast<int>(w1.size()));
    CHECK(t.cod_len() == static_cast<int>(w2.size()));
    CHECK(fix_from_mor(fr, t, w1, w2) == eta);
    if (!w2.empty()) {
      RotatedMap rr = right_rotate(fr, t, w1, w2);
      RotatedMap ri = right_rotate_inv(fr, rr.map, rr.dom, rr.cod);
      CHECK(ri.map == t);
      CHECK(ri.cod == w2);
      RotatedMap li = left_rotate_inv(fr, t, w1, w2);
      RotatedMap lr = left_rotate(fr, li.map, li.dom, li.cod);
      CHECK(lr.map == t);
      CHECK(lr.dom == w1);
    }
    if (!w1.empty()) {
      RotatedMap l = left_rotate(fr, t, w1, w2);
      CHECK(left_rotate_inv(fr, l.map, l.dom, l.cod).map == t);
    }
  }
  CHECK_THROWS_AS(right_rotate(identity_frame(2), LinMap::identity(2, 1), Word::parse("w"), Word()),
                  ShapeError);
}

TEST_CASE("right rotation of a cup is the identity") {
  std::mt19937 rng(28);
  Frame fr = make_frame(random_invertible(rng, 2));
  RotatedMap r = right_rotate(fr, fr.xi_wb, Word(), Word::parse("wb"));
  CHECK(r.map == LinMap::identity(2, 1));
  CHECK(r.dom.text() == "w");
  CHECK(r.cod.text() == "w");
  CHECK(right_rotate_inv(fr, r.map, r.dom, r.cod).map == fr.xi_wb);
}

TEST_CASE("full rotation of a fixed vector is a power of c") {
  Frame j = make_frame(mat2(0, 1, -1, 0));
  std::vector<std::pair<LinMap, Word>> fixed = {
      {j.xi_wb, Word::parse("wb")},
      {tensor_product(j.xi_wb, j.xi_bw), Word::parse("wbbw")},
  };
  for (auto [eta, w] : fixed) {
    LinMap cur = eta;
    Word cw = w;
    for (std::size_t i = 0; i < w.size(); ++i) std::tie(cur, cw) = rotate(j, cur, cw);
    CHECK(cw == w);
    CHECK((cur == eta || cur == Scalar(-1) * eta));
  }
}

TEST_CASE("sparse kernels agree with the dense ones") {
  std::mt19937 rng(41);
  std::bernoulli_distribution keep(0.3);
  for (int trial = 0; trial < 12; ++trial) {
    const int N = 2 + trial % 2;
    const Frame fr = make_frame(trial % 3 == 0 ? Matrix::identity(N) : random_invertible(rng, N));
    std::string letters;
    for (int j = 0; j < 2 + trial % 3; ++j) letters += keep(rng) ? 'b' : 'w';
    const Word w = Word::parse(letters);
    const std::vector<bool> black = colour_flags(w);
    std::vector<Scalar> dense = random_vec(rng, ipow(N, static_cast<int>(w.size())));
    for (auto& x : dense) {
      if (!keep(rng)) x = Scalar(0);
    }
    const SparseVec sparse = sparse_from_dense(dense);
    INFO("word " << w.text());
    CHECK(kernel::rotate(fr, sparse, black) == sparse_from_dense(kernel::rotate(fr, dense, black)));
    CHECK(kernel::rotate_inv(fr, sparse, black) == sparse_from_dense(kernel::rotate_inv(fr, dense, black)));
    CHECK(kernel::reflect(fr, sparse, black) == sparse_from_dense(kernel::reflect(fr, dense, black)));
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      CHECK(kernel::contract(fr, sparse, black, i) == sparse_from_dense(kernel::contract(fr, dense, black, i)));
    }
  }
}
