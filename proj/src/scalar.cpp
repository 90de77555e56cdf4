#include "qgcat/scalar.hpp"

#include "qgcat/error.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace qgcat {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from128(__int128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits64(const mpz_class& z) { return z.fits_slong_p(); }

constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min();

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_big(q); }

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  if (d == 1 && n >= kMin64 && n <= kMax64) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    return r;
  }
  u128 un = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
  u128 g = (un >> 64) == 0 && (static_cast<u128>(d) >> 64) == 0
               ? std::gcd(static_cast<std::uint64_t>(un), static_cast<std::uint64_t>(d))
               : gcd128(un, static_cast<u128>(d));
  if (g != 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  Rational r;
  if (n >= kMin64 && n <= kMax64 && d <= kMax64) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from128(n), mpz_from128(d));
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_big(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (fits64(q.get_num()) && fits64(q.get_den())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return to_mpq().get_num(); }
mpz_class Rational::denominator() const { return to_mpq().get_den(); }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  if (num_ == std::numeric_limits<std::int64_t>::min()) return from_wide(-static_cast<__int128>(num_), den_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
  }
  __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() * b.to_mpq());
  __int128 n = static_cast<__int128>(a.num_) * b.num_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Rational::from_wide(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() / b.to_mpq());
  __int128 n = static_cast<__int128>(a.num_) * b.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.num_;
  return Rational::from_wide(n, d);
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::text() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  bool slash = false;
  std::size_t after_slash = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? after_slash : digits)++;
    } else if (c == '/' && !slash) {
      slash = true;
    } else {
      throw ParseError("invalid rational \"" + std::string(s) + "\"");
    }
  }
  if (digits == 0 || (slash && after_slash == 0)) {
    throw ParseError("invalid rational \"" + std::string(s) + "\"");
  }
  std::string body(s);
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  mpq_class q;
  if (q.set_str(body, 10) != 0) throw ParseError("invalid rational \"" + std::string(s) + "\"");
  if (q.get_den() == 0) throw ParseError("zero denominator in \"" + std::string(s) + "\"");
  return Rational::from_big(q);
}

// ---------------------------------------------------------------------------

Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.re_ + b.re_, a.im_ + b.im_); }

Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.re_ - b.re_, a.im_ - b.im_); }

Scalar& Scalar::operator+=(const Scalar& b) {
  if (!b.re_.is_zero()) re_ += b.re_;
  if (!b.im_.is_zero()) im_ += b.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  if (!b.re_.is_zero()) re_ -= b.re_;
  if (!b.im_.is_zero()) im_ -= b.im_;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ * b.re_);
  return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (im_.is_zero()) return Scalar(Rational(1) / re_);
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

std::string Scalar::text() const {
  if (im_.is_zero()) return re_.text();
  std::string im_part = im_.text();
  if (re_.is_zero()) return im_part + "*i";
  if (im_.sign() < 0) return re_.text() + im_part + "*i";
  return re_.text() + "+" + im_part + "*i";
}

Scalar Scalar::parse(std::string_view raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(Rational::parse(s));
  // Imaginary part: find the sign that starts it (not at position 0).
  std::string body = s.substr(0, s.size() - 1);
  if (!body.empty() && body.back() == '*') body.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  Rational re = re_text.empty() ? Rational() : Rational::parse(re_text);
  return Scalar(re, Rational::parse(im_text));
}

}  // namespace qgcat
