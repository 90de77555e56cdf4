#include "qgcat/frame.hpp"

#include "qgcat/error.hpp"

#include <algorithm>
#include <string>

namespace qgcat {

namespace {

int colour_of(char letter) { return letter == 'b' ? 1 : 0; }

void require_vector(const LinMap& eta, const Word& w, const char* what) {
  if (eta.dom_len() != 0 || eta.cod_len() != static_cast<int>(w.size())) {
    throw ShapeError(std::string(what) + ": vector of shape " + eta.shape_text() +
                     " does not live on word \"" + w.text() + "\"");
  }
}

void require_map(const LinMap& t, const Word& w1, const Word& w2, const char* what) {
  if (t.dom_len() != static_cast<int>(w1.size()) || t.cod_len() != static_cast<int>(w2.size())) {
    throw ShapeError(std::string(what) + ": map of shape " + t.shape_text() +
                     " is not in C(" + w1.text() + ", " + w2.text() + ")");
  }
}

}  // namespace

std::vector<bool> colour_flags(const Word& w) {
  std::vector<bool> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = !w.is_white(i);
  return out;
}

Frame make_frame(const Matrix& F) {
  if (F.n <= 0) throw ShapeError("frame matrix must be nonempty");
  Frame fr;
  fr.N = F.n;
  fr.F = F;
  Matrix G = inverse(conj(F));
  fr.cup[0] = transpose(F);
  fr.cup[1] = transpose(G);
  const int N = F.n;
  std::vector<Scalar> wb(static_cast<std::size_t>(N) * N), bw(wb.size());
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      wb[static_cast<std::size_t>(i) * N + j] = fr.cup[0](i, j);
      bw[static_cast<std::size_t>(i) * N + j] = fr.cup[1](i, j);
    }
  }
  fr.xi_wb = LinMap::column(N, 2, wb);
  fr.xi_bw = LinMap::column(N, 2, bw);
  fr.c = scalar_multiple_of_identity(F * conj(F));
  for (int a = 0; a < 2; ++a) {
    fr.cup_conj[a] = conj(fr.cup[a]);
    fr.twist[a] = fr.cup[a] * conj_transpose(fr.cup[a]);
    fr.twist_inv[a] = inverse(fr.twist[a]);
  }
  return fr;
}

Frame identity_frame(int N) { return make_frame(Matrix::identity(N)); }

LinMap word_duality(const Frame& fr, const Word& w) {
  LinMap acc = LinMap::scalar(fr.N, Scalar(1));
  for (std::size_t k = w.size(); k-- > 0;) {
    const LinMap& cup = w.is_white(k) ? fr.xi_wb : fr.xi_bw;
    LinMap id1 = LinMap::identity(fr.N, 1);
    acc = compose(tensor_product(tensor_product(id1, acc), id1), cup);
  }
  return acc;
}

namespace kernel {

Vec contract(const Frame& fr, const Vec& eta, const std::vector<bool>& black, std::size_t i) {
  const int N = fr.N;
  const std::size_t k = black.size();
  const std::size_t after = ipow(N, static_cast<int>(k - i - 2));
  const std::size_t before = ipow(N, static_cast<int>(i));
  const Matrix& cc = fr.cup_conj[black[i] ? 1 : 0];
  Vec out(before * after);
  const std::size_t nn = static_cast<std::size_t>(N) * N;
  for (std::size_t a = 0; a < before; ++a) {
    for (int s = 0; s < N; ++s) {
      for (int t = 0; t < N; ++t) {
        const Scalar& c = cc(s, t);
        if (c.is_zero()) continue;
        const std::size_t base = (a * nn + static_cast<std::size_t>(s) * N + t) * after;
        for (std::size_t b = 0; b < after; ++b) {
          const Scalar& e = eta[base + b];
          if (e.is_zero()) continue;
          out[a * after + b] += c * e;
        }
      }
    }
  }
  return out;
}

Vec rotate(const Frame& fr, const Vec& eta, const std::vector<bool>& black) {
  const int N = fr.N;
  const std::size_t rest = eta.size() / N;
  const Matrix& m = fr.twist[black.back() ? 1 : 0];
  Vec out(eta.size());
  for (int i = 0; i < N; ++i) {
    for (int s = 0; s < N; ++s) {
      const Scalar& c = m(i, s);
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < rest; ++r) {
        const Scalar& e = eta[r * N + s];
        if (e.is_zero()) continue;
        out[i * rest + r] += c * e;
      }
    }
  }
  return out;
}

Vec rotate_inv(const Frame& fr, const Vec& eta, const std::vector<bool>& black) {
  const int N = fr.N;
  const std::size_t rest = eta.size() / N;
  const Matrix& m = fr.twist_inv[black.front() ? 1 : 0];
  Vec out(eta.size());
  for (int s = 0; s < N; ++s) {
    for (int i = 0; i < N; ++i) {
      const Scalar& c = m(s, i);
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < rest; ++r) {
        const Scalar& e = eta[i * rest + r];
        if (e.is_zero()) continue;
        out[r * N + s] += c * e;
      }
    }
  }
  return out;
}

Vec reflect(const Frame& fr, const Vec& eta, const std::vector<bool>& black) {
  const int N = fr.N;
  const std::size_t k = black.size();
  Vec cur(eta.size());
  for (std::size_t j = 0; j < eta.size(); ++j) cur[j] = eta[j].conj();
  // Leg j: v_t <- sum_s cup[a_j](s, t) v_s.
  for (std::size_t j = 0; j < k; ++j) {
    const Matrix& x = fr.cup[black[j] ? 1 : 0];
    const std::size_t after = ipow(N, static_cast<int>(k - j - 1));
    const std::size_t before = ipow(N, static_cast<int>(j));
    Vec next(cur.size());
    for (std::size_t a = 0; a < before; ++a) {
      for (int s = 0; s < N; ++s) {
        for (int t = 0; t < N; ++t) {
          const Scalar& c = x(s, t);
          if (c.is_zero()) continue;
          const std::size_t src = (a * N + s) * after;
          const std::size_t dst = (a * N + t) * after;
          for (std::size_t b = 0; b < after; ++b) {
            if (cur[src + b].is_zero()) continue;
            next[dst + b] += c * cur[src + b];
          }
        }
      }
    }
    cur = std::move(next);
  }
  // Reverse the leg order.
  Vec out(cur.size());
  for (std::size_t idx = 0; idx < cur.size(); ++idx) {
    std::size_t rem = idx;
    std::size_t rev = 0;
    for (std::size_t j = 0; j < k; ++j) {
      rev = rev * N + rem % N;
      rem /= N;
    }
    out[rev] = cur[idx];
  }
  return out;
}

SparseVec tensor(const SparseVec& a, const SparseVec& b, std::size_t b_size) {
  SparseVec out;
  out.reserve(a.size() * b.size());
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      out.emplace_back(static_cast<std::uint32_t>(i * b_size + j), x * y);
    }
  }
  return out;
}

namespace {

using Entries = std::vector<std::pair<std::uint32_t, Scalar>>;

// Sorts by index, sums repeated indices and drops zeros.
SparseVec combine(Entries& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& [idx, x] : v) {
    if (!out.empty() && out.back().first == idx) {
      out.back().second += x;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!x.is_zero()) {
      out.emplace_back(idx, std::move(x));
    }
  }
  return out;
}

std::uint32_t u32(std::size_t x) { return static_cast<std::uint32_t>(x); }

}  // namespace

SparseVec contract(const Frame& fr, const SparseVec& eta, const std::vector<bool>& black, std::size_t i) {
  const std::size_t N = static_cast<std::size_t>(fr.N);
  const std::size_t after = ipow(fr.N, static_cast<int>(black.size() - i - 2));
  const Matrix& cc = fr.cup_conj[black[i] ? 1 : 0];
  Entries out;
  out.reserve(eta.size());
  for (const auto& [idx, x] : eta) {
    const std::size_t b = idx % after;
    const std::size_t t = (idx / after) % N;
    const std::size_t s = (idx / (after * N)) % N;
    const std::size_t a = idx / (after * N * N);
    const Scalar& c = cc(static_cast<int>(s), static_cast<int>(t));
    if (!c.is_zero()) out.emplace_back(u32(a * after + b), c * x);
  }
  return combine(out);
}

SparseVec rotate(const Frame& fr, const SparseVec& eta, const std::vector<bool>& black) {
  const int N = fr.N;
  const std::size_t rest = ipow(N, static_cast<int>(black.size() - 1));
  const Matrix& m = fr.twist[black.back() ? 1 : 0];
  Entries out;
  out.reserve(eta.size());
  for (const auto& [idx, x] : eta) {
    const int s = static_cast<int>(idx % N);
    const std::size_t r = idx / N;
    for (int i = 0; i < N; ++i) {
      if (!m(i, s).is_zero()) out.emplace_back(u32(i * rest + r), m(i, s) * x);
    }
  }
  return combine(out);
}

SparseVec rotate_inv(const Frame& fr, const SparseVec& eta, const std::vector<bool>& black) {
  const int N = fr.N;
  const std::size_t rest = ipow(N, static_cast<int>(black.size() - 1));
  const Matrix& m = fr.twist_inv[black.front() ? 1 : 0];
  Entries out;
  out.reserve(eta.size());
  for (const auto& [idx, x] : eta) {
    const int i = static_cast<int>(idx / rest);
    const std::size_t r = idx % rest;
    for (int s = 0; s < N; ++s) {
      if (!m(s, i).is_zero()) out.emplace_back(u32(r * N + s), m(s, i) * x);
    }
  }
  return combine(out);
}

SparseVec reflect(const Frame& fr, const SparseVec& eta, const std::vector<bool>& black) {
  const std::size_t N = static_cast<std::size_t>(fr.N);
  const std::size_t k = black.size();
  Entries cur;
  cur.reserve(eta.size());
  for (const auto& [idx, x] : eta) cur.emplace_back(idx, x.conj());
  // Leg j: v_t <- sum_s cup[a_j](s, t) v_s.
  for (std::size_t j = 0; j < k; ++j) {
    const Matrix& m = fr.cup[black[j] ? 1 : 0];
    const std::size_t after = ipow(fr.N, static_cast<int>(k - j - 1));
    Entries next;
    next.reserve(cur.size());
    for (const auto& [idx, x] : cur) {
      const std::size_t s = (idx / after) % N;
      const std::size_t base = idx - s * after;
      for (std::size_t t = 0; t < N; ++t) {
        const Scalar& c = m(static_cast<int>(s), static_cast<int>(t));
        if (!c.is_zero()) next.emplace_back(u32(base + t * after), c * x);
      }
    }
    SparseVec merged = combine(next);
    cur.assign(merged.begin(), merged.end());
  }
  // Reverse the leg order.
  for (auto& [idx, x] : cur) {
    std::size_t rem = idx;
    std::size_t rev = 0;
    for (std::size_t j = 0; j < k; ++j) {
      rev = rev * N + rem % N;
      rem /= N;
    }
    idx = u32(rev);
  }
  return combine(cur);
}

}  // namespace kernel

LinMap contraction(const Frame& fr, const LinMap& eta, const Word& w, std::size_t i) {
  require_vector(eta, w, "contraction");
  if (i + 1 >= w.size()) {
    throw ShapeError("contraction position " + std::to_string(i) + " out of range for word \"" +
                     w.text() + "\"");
  }
  if (w[i] == w[i + 1]) {
    throw ShapeError("contraction needs opposite colours at positions " + std::to_string(i) +
                     " and " + std::to_string(i + 1) + " of \"" + w.text() + "\"");
  }
  return LinMap::column(fr.N, static_cast<int>(w.size()) - 2,
                        kernel::contract(fr, eta.entries(), colour_flags(w), i));
}

std::pair<LinMap, Word> rotate(const Frame& fr, const LinMap& eta, const Word& w) {
  require_vector(eta, w, "rotate");
  if (w.empty()) return {eta, w};
  Word out = w.substr(w.size() - 1) + w.substr(0, w.size() - 1);
  return {LinMap::column(fr.N, static_cast<int>(w.size()),
                         kernel::rotate(fr, eta.entries(), colour_flags(w))),
          out};
}

std::pair<LinMap, Word> rotate_inv(const Frame& fr, const LinMap& eta, const Word& w) {
  require_vector(eta, w, "rotate_inv");
  if (w.empty()) return {eta, w};
  Word out = w.substr(1) + w.substr(0, 1);
  return {LinMap::column(fr.N, static_cast<int>(w.size()),
                         kernel::rotate_inv(fr, eta.entries(), colour_flags(w))),
          out};
}

std::pair<LinMap, Word> reflect(const Frame& fr, const LinMap& eta, const Word& w) {
  require_vector(eta, w, "reflect");
  return {LinMap::column(fr.N, static_cast<int>(w.size()),
                         kernel::reflect(fr, eta.entries(), colour_flags(w))),
          word_star(w)};
}

RotatedMap right_rotate(const Frame& fr, const LinMap& t, const Word& w1, const Word& w2) {
  require_map(t, w1, w2, "right_rotate");
  if (w2.empty()) throw ShapeError("right_rotate needs a nonempty codomain");
  const int N = fr.N;
  const char a = w2[w2.size() - 1];
  const Matrix& cc = fr.cup_conj[colour_of(a)];
  Word cod = w2.substr(0, w2.size() - 1);
  Word dom = w1;
  dom.push_back(a == 'w' ? 'b' : 'w');
  LinMap out(N, static_cast<int>(dom.size()), static_cast<int>(cod.size()));
  for (std::size_t o = 0; o < out.rows(); ++o) {
    for (std::size_t in = 0; in < t.cols(); ++in) {
      for (int s = 0; s < N; ++s) {
        const Scalar& e = t.at(o * N + s, in);
        if (e.is_zero()) continue;
        for (int u = 0; u < N; ++u) {
          if (cc(s, u).is_zero()) continue;
          out.at(o, in * N + u) += cc(s, u) * e;
        }
      }
    }
  }
  return {std::move(out), dom, cod};
}

RotatedMap right_rotate_inv(const Frame& fr, const LinMap& t, const Word& w1, const Word& w2) {
  require_map(t, w1, w2, "right_rotate_inv");
  if (w1.empty()) throw ShapeError("right_rotate_inv needs a nonempty domain");
  const int N = fr.N;
  const char a = w1[w1.size() - 1];
  const Matrix& x = fr.cup[colour_of(a)];
  Word dom = w1.substr(0, w1.size() - 1);
  Word cod = w2;
  cod.push_back(a == 'w' ? 'b' : 'w');
  LinMap out(N, static_cast<int>(dom.size()), static_cast<int>(cod.size()));
  for (std::size_t o = 0; o < t.rows(); ++o) {
    for (std::size_t in = 0; in < out.cols(); ++in) {
      for (int s = 0; s < N; ++s) {
        const Scalar& e = t.at(o, in * N + s);
        if (e.is_zero()) continue;
        for (int u = 0; u < N; ++u) {
          if (x(s, u).is_zero()) continue;
          out.at(o * N + u, in) += e * x(s, u);
        }
      }
    }
  }
  return {std::move(out), dom, cod};
}

RotatedMap left_rotate(const Frame& fr, const LinMap& t, const Word& w1, const Word& w2) {
  require_map(t, w1, w2, "left_rotate");
  if (w1.empty()) throw ShapeError("left_rotate needs a nonempty domain");
  const int N = fr.N;
  const char a = w1[0];
  const char abar = a == 'w' ? 'b' : 'w';
  const Matrix& x = fr.cup[colour_of(abar)];
  Word dom = w1.substr(1);
  Word cod = Word::parse(std::string(1, abar)) + w2;
  LinMap out(N, static_cast<int>(dom.size()), static_cast<int>(cod.size()));
  const std::size_t in_rest = out.cols();
  const std::size_t o_rest = t.rows();
  for (int s = 0; s < N; ++s) {
    for (std::size_t o = 0; o < o_rest; ++o) {
      for (std::size_t in = 0; in < in_rest; ++in) {
        const Scalar& e = t.at(o, s * in_rest + in);
        if (e.is_zero()) continue;
        for (int u = 0; u < N; ++u) {
          if (x(u, s).is_zero()) continue;
          out.at(u * o_rest + o, in) += x(u, s) * e;
        }
      }
    }
  }
  return {std::move(out), dom, cod};
}

RotatedMap left_rotate_inv(const Frame& fr, const LinMap& t, const Word& w1, const Word& w2) {
  require_map(t, w1, w2, "left_rotate_inv");
  if (w2.empty()) throw ShapeError("left_rotate_inv needs a nonempty codomain");
  const int N = fr.N;
  const char a = w2[0];
  const char abar = a == 'w' ? 'b' : 'w';
  const Matrix& cc = fr.cup_conj[colour_of(abar)];
  Word cod = w2.substr(1);
  Word dom = Word::parse(std::string(1, abar)) + w1;
  LinMap out(N, static_cast<int>(dom.size()), static_cast<int>(cod.size()));
  const std::size_t in_rest = t.cols();
  const std::size_t o_rest = out.rows();
  for (int u = 0; u < N; ++u) {
    for (std::size_t o = 0; o < o_rest; ++o) {
      for (std::size_t in = 0; in < in_rest; ++in) {
        const Scalar& e = t.at(u * o_rest + o, in);
        if (e.is_zero()) continue;
        for (int s = 0; s < N; ++s) {
          if (cc(s, u).is_zero()) continue;
          out.at(o, s * in_rest + in) += cc(s, u) * e;
        }
      }
    }
  }
  return {std::move(out), dom, cod};
}

LinMap fix_from_mor(const Frame& fr, const LinMap& t, const Word& w1, const Word& w2) {
  RotatedMap cur{t, w1, w2};
  while (!cur.dom.empty()) cur = right_rotate_inv(fr, cur.map, cur.dom, cur.cod);
  return cur.map;
}

LinMap mor_from_fix(const Frame& fr, const LinMap& eta, const Word& w1, const Word& w2) {
  RotatedMap cur{eta, Word(), w2 + word_star(w1)};
  require_vector(eta, cur.cod, "mor_from_fix");
  for (std::size_t k = 0; k < w1.size(); ++k) cur = right_rotate(fr, cur.map, cur.dom, cur.cod);
  return cur.map;
}

}  // namespace qgcat
