#include "qgcat/words.hpp"

#include "qgcat/error.hpp"

#include <algorithm>

namespace qgcat {

Word Word::parse(std::string_view text) {
  Word w;
  for (char c : text) {
    if (c != 'w' && c != 'b') {
      throw ParseError("invalid letter '" + std::string(1, c) + "' in word \"" +
                       std::string(text) + "\" (expected w or b)");
    }
  }
  w.letters_ = std::string(text);
  return w;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_ = letters_.substr(pos, len);
  return w;
}

Word Word::operator+(const Word& other) const {
  Word w = *this;
  w += other;
  return w;
}

Word& Word::operator+=(const Word& other) {
  letters_ += other.letters_;
  return *this;
}

Word& Word::push_back(char letter) {
  if (letter != 'w' && letter != 'b') throw ParseError("invalid letter");
  letters_.push_back(letter);
  return *this;
}

Word colour_invert(const Word& w) {
  std::string s = w.text();
  for (char& c : s) c = (c == 'w') ? 'b' : 'w';
  return Word::parse(s);
}

Word word_star(const Word& w) {
  std::string s = colour_invert(w).text();
  std::reverse(s.begin(), s.end());
  return Word::parse(s);
}

int colour_sum(const Word& w) {
  int c = 0;
  for (char x : w.text()) c += (x == 'w') ? 1 : -1;
  return c;
}

std::size_t word_count_upto(int max_len) {
  if (max_len < 0) return 0;
  return (std::size_t{1} << (max_len + 1)) - 1;
}

std::size_t word_index(const Word& w) {
  std::size_t bits = 0;
  for (char c : w.text()) bits = (bits << 1) | (c == 'b' ? 1u : 0u);
  return word_count_upto(static_cast<int>(w.size()) - 1) + bits;
}

Word word_from_index(std::size_t index) {
  int len = 0;
  while (word_count_upto(len) <= index) ++len;
  std::size_t bits = index - word_count_upto(len - 1);
  std::string s(static_cast<std::size_t>(len), 'w');
  for (int i = len - 1; i >= 0; --i) {
    if (bits & 1u) s[static_cast<std::size_t>(i)] = 'b';
    bits >>= 1;
  }
  return Word::parse(s);
}

std::vector<Word> enumerate_words(int max_len) {
  std::vector<Word> out;
  out.reserve(word_count_upto(max_len));
  for (std::size_t i = 0; i < word_count_upto(max_len); ++i) out.push_back(word_from_index(i));
  return out;
}

// ---------------------------------------------------------------------------

ExtWord::ExtWord(std::int64_t modulus) : k_(modulus) {
  if (modulus < 0) throw ShapeError("negative modulus");
}

ExtWord::ExtWord(std::int64_t modulus, std::int64_t lead, std::vector<Letter> body)
    : k_(modulus), lead_(lead), body_(std::move(body)) {
  if (modulus < 0) throw ShapeError("negative modulus");
  normalize();
}

std::int64_t ExtWord::reduce(std::int64_t e) const {
  if (k_ == 0) return e;
  std::int64_t r = e % k_;
  return r < 0 ? r + k_ : r;
}

void ExtWord::normalize() {
  lead_ = reduce(lead_);
  for (auto& l : body_) l.exp = reduce(l.exp);
}

ExtWord ExtWord::parse(std::string_view text, std::int64_t modulus) {
  ExtWord w(modulus);
  const std::int64_t inverse = modulus == 0 ? -1 : modulus - 1;
  for (char c : text) {
    std::int64_t* slot = w.body_.empty() ? &w.lead_ : &w.body_.back().exp;
    switch (c) {
      case 's': w.body_.push_back({false, 0}); break;
      case 'S': w.body_.push_back({true, 0}); break;
      case 't': *slot += 1; break;
      case 'T': *slot += inverse; break;
      default:
        throw ParseError("invalid letter '" + std::string(1, c) + "' in extended word \"" +
                         std::string(text) + "\" (expected s, S, t or T)");
    }
  }
  w.normalize();
  return w;
}

ExtWord ExtWord::from_squares(const Word& w, std::int64_t modulus) {
  std::vector<Letter> body;
  for (std::size_t i = 0; i < w.size(); ++i) body.push_back({!w.is_white(i), 0});
  return ExtWord(modulus, 0, std::move(body));
}

bool ExtWord::has_triangles() const {
  if (lead_ != 0) return true;
  return std::any_of(body_.begin(), body_.end(), [](const Letter& l) { return l.exp != 0; });
}

Word ExtWord::squares() const {
  std::string s;
  for (const auto& l : body_) s.push_back(l.black ? 'b' : 'w');
  return Word::parse(s);
}

std::int64_t ExtWord::triangle_total() const {
  std::int64_t t = lead_;
  for (const auto& l : body_) t += l.exp;
  return reduce(t);
}

ExtWord ExtWord::cyclic_normal() const {
  if (body_.empty() || lead_ == 0) return *this;
  ExtWord w = *this;
  w.body_.back().exp = reduce(w.body_.back().exp + lead_);
  w.lead_ = 0;
  return w;
}

std::string ExtWord::text() const {
  auto triangles = [this](std::int64_t e) {
    if (e >= 0) return std::string(static_cast<std::size_t>(e), 't');
    return std::string(static_cast<std::size_t>(-e), 'T');
  };
  std::string s = triangles(lead_);
  for (const auto& l : body_) {
    s.push_back(l.black ? 'S' : 's');
    s += triangles(l.exp);
  }
  return s;
}

ExtWord ext_concat(const ExtWord& u, const ExtWord& v) {
  if (u.modulus() != v.modulus()) {
    throw ShapeError("extended words with different moduli " + std::to_string(u.modulus()) +
                     " and " + std::to_string(v.modulus()));
  }
  std::int64_t lead = u.lead();
  auto body = u.body();
  if (body.empty()) {
    lead += v.lead();
  } else {
    body.back().exp += v.lead();
  }
  body.insert(body.end(), v.body().begin(), v.body().end());
  return ExtWord(u.modulus(), lead, std::move(body));
}

ExtWord glue_word(const Word& w, std::int64_t modulus) {
  // w -> s t, b -> T S
  const std::int64_t inverse = modulus == 0 ? -1 : modulus - 1;
  std::int64_t lead = 0;
  std::vector<ExtWord::Letter> body;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.is_white(i)) {
      body.push_back({false, 1});
    } else {
      (body.empty() ? lead : body.back().exp) += inverse;
      body.push_back({true, 0});
    }
  }
  return ExtWord(modulus, lead, std::move(body));
}

std::size_t square_count(const ExtWord& w) { return w.square_count(); }

ExtWord ext_star(const ExtWord& w) {
  // t^{a0} q1 t^{a1} ... qn t^{an}  ->  t^{-an} qn' t^{-a(n-1)} ... q1' t^{-a0}
  const auto& body = w.body();
  const std::size_t n = body.size();
  if (n == 0) return ExtWord(w.modulus(), -w.lead(), {});
  std::vector<ExtWord::Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& q = body[n - 1 - i];
    std::int64_t next = (i + 1 < n) ? body[n - 2 - i].exp : w.lead();
    out.push_back({!q.black, -next});
  }
  return ExtWord(w.modulus(), -body.back().exp, std::move(out));
}

}  // namespace qgcat
