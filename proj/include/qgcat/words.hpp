#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qgcat {

// A word in the free monoid on two colours. Letters are stored as the
// characters 'w' (white) and 'b' (black).
class Word {
 public:
  Word() = default;

  // Throws ParseError on any character other than 'w' or 'b'.
  static Word parse(std::string_view text);

  const std::string& text() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  bool is_white(std::size_t i) const { return letters_[i] == 'w'; }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word operator+(const Word& other) const;
  Word& operator+=(const Word& other);
  Word& push_back(char letter);

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::string letters_;
};

Word colour_invert(const Word& w);
Word word_star(const Word& w);
int colour_sum(const Word& w);

// Length-then-lexicographic order with w < b. word_index is the position of a
// word in that order and word_from_index its inverse.
std::vector<Word> enumerate_words(int max_len);
std::size_t word_index(const Word& w);
Word word_from_index(std::size_t index);
std::size_t word_count_upto(int max_len);

// Element of the Z_k-extended monoid: squares ('s' white, 'S' black) with
// triangle exponents. The word t^{a0} q1 t^{a1} ... qn t^{an} is stored as
// lead = a0 and body = [(q1, a1), ..., (qn, an)]. For k > 0 every exponent is
// kept in [0, k); k = 0 means exponents in Z.
class ExtWord {
 public:
  struct Letter {
    bool black = false;
    std::int64_t exp = 0;
    auto operator<=>(const Letter&) const = default;
    bool operator==(const Letter&) const = default;
  };

  explicit ExtWord(std::int64_t modulus = 0);
  ExtWord(std::int64_t modulus, std::int64_t lead, std::vector<Letter> body);

  // Grammar: s, S squares; t one triangle; T the inverse triangle.
  static ExtWord parse(std::string_view text, std::int64_t modulus);
  // Image of a plain word (squares only, all exponents zero).
  static ExtWord from_squares(const Word& w, std::int64_t modulus);

  std::int64_t modulus() const { return k_; }
  std::int64_t lead() const { return lead_; }
  const std::vector<Letter>& body() const { return body_; }
  std::size_t square_count() const { return body_.size(); }
  bool has_triangles() const;
  // The squares read as circles (s -> w, S -> b).
  Word squares() const;
  // Sum of all exponents (reduced mod k when k > 0).
  std::int64_t triangle_total() const;

  // Moves the lead exponent onto the last square. Fix spaces are unchanged by
  // this since rotating triangles acts trivially on vectors.
  ExtWord cyclic_normal() const;

  std::string text() const;

  auto operator<=>(const ExtWord&) const = default;
  bool operator==(const ExtWord&) const = default;

 private:
  std::int64_t reduce(std::int64_t e) const;
  void normalize();

  std::int64_t k_ = 0;
  std::int64_t lead_ = 0;
  std::vector<Letter> body_;
};

ExtWord ext_concat(const ExtWord& u, const ExtWord& v);
ExtWord glue_word(const Word& w, std::int64_t modulus);
std::size_t square_count(const ExtWord& w);
// Reverse, swap square colours and negate exponents.
ExtWord ext_star(const ExtWord& w);

}  // namespace qgcat
