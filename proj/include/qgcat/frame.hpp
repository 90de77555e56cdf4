#pragma once

#include "qgcat/linalg.hpp"
#include "qgcat/words.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qgcat {

// The matrix F together with the duality vectors it determines:
//   xi_wb = sum_ij F_ji e_i (x) e_j,   xi_bw = sum_ij [conj(F)^-1]_ji e_i (x) e_j.
struct Frame {
  int N = 0;
  Matrix F;
  LinMap xi_wb;
  LinMap xi_bw;
  std::optional<Scalar> c;  // F conj(F) = c 1, when it holds

  // Coefficient matrices of the duality vectors (index 0 white, 1 black):
  // xi_a = sum_ij cup[a](i,j) e_i (x) e_j.
  Matrix cup[2];
  Matrix cup_conj[2];
  // Rotation twist cup[a] cup[a]^dagger and its inverse.
  Matrix twist[2];
  Matrix twist_inv[2];

  bool operator==(const Frame& other) const { return N == other.N && F == other.F; }
};

Frame make_frame(const Matrix& F);
Frame identity_frame(int N);

// Nested duality vector xi_{a w} = (1 (x) xi_w (x) 1) xi_a, living on w star(w).
LinMap word_duality(const Frame& fr, const Word& w);

// Fix-vector operations. `eta` is a map with zero domain legs on the word `w`;
// positions are 0-based.
LinMap contraction(const Frame& fr, const LinMap& eta, const Word& w, std::size_t i);
std::pair<LinMap, Word> rotate(const Frame& fr, const LinMap& eta, const Word& w);
std::pair<LinMap, Word> rotate_inv(const Frame& fr, const LinMap& eta, const Word& w);
std::pair<LinMap, Word> reflect(const Frame& fr, const LinMap& eta, const Word& w);

// Rotations of morphisms T in C(w1, w2). Each returns the map with its new
// domain and codomain words.
struct RotatedMap {
  LinMap map;
  Word dom;
  Word cod;
};
// C(w1, w2 a) -> C(w1 a', w2)
RotatedMap right_rotate(const Frame& fr, const LinMap& t, const Word& w1, const Word& w2);
// C(w1 a, w2) -> C(w1, w2 a')
RotatedMap right_rotate_inv(const Frame& fr, const LinMap& t, const Word& w1, const Word& w2);
// C(a w1, w2) -> C(w1, a' w2)
RotatedMap left_rotate(const Frame& fr, const LinMap& t, const Word& w1, const Word& w2);
// C(w1, a w2) -> C(a' w1, w2)
RotatedMap left_rotate_inv(const Frame& fr, const LinMap& t, const Word& w1, const Word& w2);

// C(w1, w2) -> C(empty, w2 star(w1)) and back.
LinMap fix_from_mor(const Frame& fr, const LinMap& t, const Word& w1, const Word& w2);
LinMap mor_from_fix(const Frame& fr, const LinMap& eta, const Word& w1, const Word& w2);

// Dense kernels on raw coefficient vectors, used by the closure engines.
// `black` flags the colour of each leg.
namespace kernel {
using Vec = std::vector<Scalar>;
Vec contract(const Frame& fr, const Vec& eta, const std::vector<bool>& black, std::size_t i);
Vec rotate(const Frame& fr, const Vec& eta, const std::vector<bool>& black);
Vec rotate_inv(const Frame& fr, const Vec& eta, const std::vector<bool>& black);
Vec reflect(const Frame& fr, const Vec& eta, const std::vector<bool>& black);
SparseVec tensor(const SparseVec& a, const SparseVec& b, std::size_t b_size);
// Sparse forms of the same operations; results are sorted without zeros.
SparseVec contract(const Frame& fr, const SparseVec& eta, const std::vector<bool>& black, std::size_t i);
SparseVec rotate(const Frame& fr, const SparseVec& eta, const std::vector<bool>& black);
SparseVec rotate_inv(const Frame& fr, const SparseVec& eta, const std::vector<bool>& black);
SparseVec reflect(const Frame& fr, const SparseVec& eta, const std::vector<bool>& black);
}  // namespace kernel

std::vector<bool> colour_flags(const Word& w);

}  // namespace qgcat
