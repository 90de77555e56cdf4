#pragma once

#include "qgcat/frame.hpp"
#include "qgcat/linalg.hpp"
#include "qgcat/words.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qgcat {

// Generators of the polynomial algebra: matrix coordinates x_ij and their
// adjoints, a unitary z with adjoint z*, and a self-adjoint unitary r.
enum class Sym : std::uint8_t { x, x_star, z, z_star, r };

// Indices are 0-based; the text form prints them 1-based. z, z* and r carry
// zero indices.
struct Letter {
  Sym sym = Sym::x;
  int i = 0;
  int j = 0;

  auto operator<=>(const Letter&) const = default;
};

using Monomial = std::vector<Letter>;

// Shorter monomials first, then lexicographic.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Cancels adjacent z z*, z* z and r r until none remain.
Monomial reduce_monomial(Monomial m);

// Z-degree of a letter: x and z count +1, x* and z* count -1, r counts +1
// (it generates the Z_2 grading).
std::int64_t letter_degree(const Letter& l);
std::int64_t monomial_degree(const Monomial& m);

// Finite linear combination of reduced monomials with nonzero coefficients.
class NCPoly {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  NCPoly() = default;

  static NCPoly constant(const Scalar& c);
  static NCPoly term(Monomial m, const Scalar& c = Scalar(1));
  static NCPoly x(int i, int j) { return term({{Sym::x, i, j}}); }
  static NCPoly x_star(int i, int j) { return term({{Sym::x_star, i, j}}); }
  static NCPoly z() { return term({{Sym::z, 0, 0}}); }
  static NCPoly z_star() { return term({{Sym::z_star, 0, 0}}); }
  static NCPoly r() { return term({{Sym::r, 0, 0}}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Adds c times the reduced form of m.
  void add(const Monomial& m, const Scalar& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Scalar& c, const NCPoly& a);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  // Terms like "3/2 * x[1,2] z x*[2,1]" joined by " + " / " - ", in monomial
  // order; "0" for the zero polynomial.
  std::string text() const;
  // Inverse of text(). Throws ParseError.
  static NCPoly parse(std::string_view s);

 private:
  Terms terms_;
};

// Entries [T x^{w1} - x^{w2} T]_{pq} for all multi-indices (row-major in p, q),
// where the white letter carries x and the black letter F conj(x) F^-1.
// Throws ShapeError when T does not have shape (w1, w2) over the frame.
std::vector<NCPoly> relations_from_intertwiner(const LinMap& T, const Word& w1, const Word& w2, const Frame& frame);

// Components by degree (mod k for k > 0, in Z for k = 0); they sum to f.
// Throws ShapeError for negative k.
std::map<std::int64_t, NCPoly> homogeneous_components(const NCPoly& f, std::int64_t k);

// Every monomial has even length over x, x* only, alternating between starred
// and plain letters, and all nonempty monomials start with the same kind.
bool is_alternating_poly(const NCPoly& f);

// Reads an x, x* polynomial in glued generators and substitutes
// x -> x z, x* -> z* x*. Throws ShapeError on z, z* or r letters.
NCPoly glue_substitute(const NCPoly& f);
// Substitutes x -> x r, x* -> r x (the Z_2 gluing with a self-adjoint x).
// Throws ShapeError on z, z* or r letters.
NCPoly glue_with_reflection(const NCPoly& f);
// Preimage under glue_with_reflection of an x, r polynomial: x r reads as x,
// r x as x*, and x x as x x* (the r r between them cancelled). Throws
// ShapeError on x*, z or z* letters and NotApplicable on an odd monomial.
NCPoly unglue_parse(const NCPoly& f);

}  // namespace qgcat
