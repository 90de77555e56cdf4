#include "qgcat/presentation.hpp"

#include "qgcat/error.hpp"

#include <cctype>

namespace qgcat {

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

bool cancels(const Letter& a, const Letter& b) {
  return (a.sym == Sym::z && b.sym == Sym::z_star) || (a.sym == Sym::z_star && b.sym == Sym::z) ||
         (a.sym == Sym::r && b.sym == Sym::r);
}

bool is_x_letter(const Letter& l) { return l.sym == Sym::x || l.sym == Sym::x_star; }

std::string letter_text(const Letter& l) {
  switch (l.sym) {
    case Sym::x:
      return "x[" + std::to_string(l.i + 1) + "," + std::to_string(l.j + 1) + "]";
    case Sym::x_star:
      return "x*[" + std::to_string(l.i + 1) + "," + std::to_string(l.j + 1) + "]";
    case Sym::z:
      return "z";
    case Sym::z_star:
      return "z*";
    case Sym::r:
      return "r";
  }
  return "";
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (const Letter& l : m) {
    if (!s.empty()) s += ' ';
    s += letter_text(l);
  }
  return s;
}

// Substitutes every letter by a polynomial image.
template <class Image>
NCPoly substitute(const NCPoly& f, Image image) {
  NCPoly out;
  for (const auto& [m, c] : f.terms()) {
    NCPoly acc = NCPoly::constant(c);
    for (const Letter& l : m) acc = acc * image(l);
    out += acc;
  }
  return out;
}

void require_x_only(const NCPoly& f, const char* op) {
  for (const auto& [m, c] : f.terms())
    for (const Letter& l : m)
      if (!is_x_letter(l)) throw ShapeError(std::string(op) + " expects x, x* letters only");
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NCPoly poly() {
    skip();
    if (s_.substr(p_) == "0") return {};
    NCPoly out;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++p_;
    }
    for (;;) {
      out += term(negative);
      skip();
      if (p_ == s_.size()) break;
      const char c = s_[p_++];
      if (c != '+' && c != '-') fail("expected + or -");
      negative = c == '-';
    }
    return out;
  }

 private:
  NCPoly term(bool negative) {
    skip();
    Scalar coef(1);
    bool have_coef = false;
    if (peek() == '(') {
      const std::size_t close = s_.find(')', p_);
      if (close == std::string_view::npos) fail("unclosed (");
      coef = Scalar::parse(s_.substr(p_ + 1, close - p_ - 1));
      p_ = close + 1;
      have_coef = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = p_;
      while (p_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[p_])) || s_[p_] == '/')) ++p_;
      if (s_.substr(p_, 2) == "*i") p_ += 2;
      coef = Scalar::parse(s_.substr(start, p_ - start));
      have_coef = true;
    }
    if (negative) coef = -coef;
    Monomial m;
    skip();
    if (have_coef) {
      if (peek() != '*') return NCPoly::constant(coef);
      ++p_;
    }
    for (;;) {
      skip();
      const char c = peek();
      if (c == 'x') {
        ++p_;
        Sym sym = Sym::x;
        if (peek() == '*') {
          sym = Sym::x_star;
          ++p_;
        }
        expect('[');
        const int i = number();
        expect(',');
        const int j = number();
        expect(']');
        if (i < 1 || j < 1) fail("indices start at 1");
        m.push_back({sym, i - 1, j - 1});
      } else if (c == 'z') {
        ++p_;
        if (peek() == '*') {
          ++p_;
          m.push_back({Sym::z_star, 0, 0});
        } else {
          m.push_back({Sym::z, 0, 0});
        }
      } else if (c == 'r') {
        ++p_;
        m.push_back({Sym::r, 0, 0});
      } else {
        break;
      }
    }
    if (m.empty()) fail("expected a monomial");
    return NCPoly::term(std::move(m), coef);
  }

  int number() {
    const std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (p_ == start) fail("expected an index");
    return std::stoi(std::string(s_.substr(start, p_ - start)));
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++p_;
  }
  char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial, column " + std::to_string(p_ + 1) + ": " + what);
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

}  // namespace

Monomial reduce_monomial(Monomial m) {
  Monomial out;
  out.reserve(m.size());
  for (const Letter& l : m) {
    if (!out.empty() && cancels(out.back(), l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::int64_t letter_degree(const Letter& l) {
  return (l.sym == Sym::x_star || l.sym == Sym::z_star) ? -1 : 1;
}

std::int64_t monomial_degree(const Monomial& m) {
  std::int64_t d = 0;
  for (const Letter& l : m) d += letter_degree(l);
  return d;
}

NCPoly NCPoly::constant(const Scalar& c) { return term({}, c); }

NCPoly NCPoly::term(Monomial m, const Scalar& c) {
  NCPoly p;
  p.add(m, c);
  return p;
}

void NCPoly::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  Monomial r = reduce_monomial(m);
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    terms_.emplace(std::move(r), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(m, ca * cb);
    }
  }
  return out;
}

NCPoly operator*(const Scalar& c, const NCPoly& a) {
  NCPoly out;
  for (const auto& [m, v] : a.terms_) out.add(m, c * v);
  return out;
}

std::string NCPoly::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    // Pull a leading minus out of real or purely imaginary coefficients.
    Scalar shown = c;
    bool negative = false;
    if (c.im().is_zero() ? c.re().sign() < 0 : (c.re().is_zero() && c.im().sign() < 0)) {
      negative = true;
      shown = -c;
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string coef = shown.text();
    if (!shown.re().is_zero() && !shown.im().is_zero()) coef = "(" + coef + ")";
    if (m.empty()) {
      out += coef;
    } else if (shown.is_one()) {
      out += monomial_text(m);
    } else {
      out += coef + " * " + monomial_text(m);
    }
  }
  return out;
}

NCPoly NCPoly::parse(std::string_view s) { return Parser(s).poly(); }

std::vector<NCPoly> relations_from_intertwiner(const LinMap& T, const Word& w1, const Word& w2, const Frame& frame) {
  const int N = frame.N;
  if (T.dim() != N || T.dom_len() != static_cast<int>(w1.size()) || T.cod_len() != static_cast<int>(w2.size())) {
    throw ShapeError("intertwiner of shape " + T.shape_text() + " does not match (" + w1.text() + ", " +
                     w2.text() + ") over N = " + std::to_string(N));
  }
  // Entries of x (white) and F conj(x) F^-1 (black).
  const Matrix Finv = inverse(frame.F);
  std::vector<NCPoly> leg[2];
  leg[0].resize(static_cast<std::size_t>(N) * N);
  leg[1].resize(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      leg[0][a * N + b] = NCPoly::x(a, b);
      NCPoly e;
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) e += (frame.F(a, c) * Finv(d, b)) * NCPoly::x_star(c, d);
      leg[1][a * N + b] = e;
    }
  }
  // Entry (p, q) of x^{(x) w} as a product over legs.
  const auto tensor_entry = [&](const Word& w, std::size_t p, std::size_t q) {
    NCPoly acc = NCPoly::constant(Scalar(1));
    std::size_t after = ipow(N, static_cast<int>(w.size()));
    for (std::size_t t = 0; t < w.size(); ++t) {
      after /= N;
      const std::size_t a = (p / after) % N;
      const std::size_t b = (q / after) % N;
      acc = acc * leg[w.is_white(t) ? 0 : 1][a * N + b];
    }
    return acc;
  };

  const std::size_t rows = T.rows();
  const std::size_t cols = T.cols();
  std::vector<NCPoly> out;
  out.reserve(rows * cols);
  for (std::size_t p = 0; p < rows; ++p) {
    for (std::size_t q = 0; q < cols; ++q) {
      NCPoly rel;
      for (std::size_t r = 0; r < cols; ++r)
        if (!T.at(p, r).is_zero()) rel += T.at(p, r) * tensor_entry(w1, r, q);
      for (std::size_t s = 0; s < rows; ++s)
        if (!T.at(s, q).is_zero()) rel -= T.at(s, q) * tensor_entry(w2, p, s);
      out.push_back(std::move(rel));
    }
  }
  return out;
}

std::map<std::int64_t, NCPoly> homogeneous_components(const NCPoly& f, std::int64_t k) {
  if (k < 0) throw ShapeError("negative modulus " + std::to_string(k));
  std::map<std::int64_t, NCPoly> out;
  for (const auto& [m, c] : f.terms()) {
    std::int64_t d = monomial_degree(m);
    if (k > 0) d = ((d % k) + k) % k;
    out[d].add(m, c);
  }
  return out;
}

bool is_alternating_poly(const NCPoly& f) {
  int start = -1;  // 0 plain, 1 starred
  for (const auto& [m, c] : f.terms()) {
    if (m.size() % 2 != 0) return false;
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (!is_x_letter(m[t])) return false;
      const bool starred = m[t].sym == Sym::x_star;
      if (t > 0 && starred == (m[t - 1].sym == Sym::x_star)) return false;
    }
    if (m.empty()) continue;
    const int kind = m[0].sym == Sym::x_star ? 1 : 0;
    if (start >= 0 && start != kind) return false;
    start = kind;
  }
  return true;
}

NCPoly glue_substitute(const NCPoly& f) {
  require_x_only(f, "glue_substitute");
  return substitute(f, [](const Letter& l) {
    return l.sym == Sym::x ? NCPoly::x(l.i, l.j) * NCPoly::z() : NCPoly::z_star() * NCPoly::x_star(l.i, l.j);
  });
}

NCPoly glue_with_reflection(const NCPoly& f) {
  require_x_only(f, "glue_with_reflection");
  return substitute(f, [](const Letter& l) {
    return l.sym == Sym::x ? NCPoly::x(l.i, l.j) * NCPoly::r() : NCPoly::r() * NCPoly::x(l.i, l.j);
  });
}

NCPoly unglue_parse(const NCPoly& f) {
  NCPoly out;
  for (const auto& [m, c] : f.terms()) {
    Monomial pre;
    bool owe_r = false;  // the last x read as x r, with its r not yet seen
    for (std::size_t t = 0; t < m.size(); ++t) {
      const Letter& l = m[t];
      if (l.sym != Sym::x && l.sym != Sym::r) throw ShapeError("unglue_parse expects x and r letters only");
      if (owe_r) {
        owe_r = false;
        if (l.sym == Sym::r) continue;
        pre.push_back({Sym::x_star, l.i, l.j});
      } else if (l.sym == Sym::x) {
        pre.push_back({Sym::x, l.i, l.j});
        owe_r = true;
      } else {
        if (t + 1 == m.size() || m[t + 1].sym != Sym::x) {
          throw NotApplicable("monomial " + monomial_text(m) + " has odd degree; no glued preimage");
        }
        ++t;
        pre.push_back({Sym::x_star, m[t].i, m[t].j});
      }
    }
    if (owe_r) throw NotApplicable("monomial " + monomial_text(m) + " has odd degree; no glued preimage");
    out.add(pre, c);
  }
  return out;
}

}  // namespace qgcat
