#include "qgcat/linalg.hpp"

#include "qgcat/error.hpp"

#include <algorithm>

namespace qgcat {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

SparseVec sparse_from_dense(const std::vector<Scalar>& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  }
  return out;
}

std::vector<Scalar> dense_from_sparse(const SparseVec& v, std::size_t size) {
  std::vector<Scalar> out(size);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(int size) {
  Matrix m(size);
  for (int i = 0; i < size; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.n != y.n) throw ShapeError("matrix size mismatch");
  Matrix r(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int k = 0; k < x.n; ++k) {
      if (x(i, k).is_zero()) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  }
  return r;
}

Matrix conj(const Matrix& x) {
  Matrix r = x;
  for (auto& s : r.a) s = s.conj();
  return r;
}

Matrix transpose(const Matrix& x) {
  Matrix r(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) r(j, i) = x(i, j);
  }
  return r;
}

Matrix conj_transpose(const Matrix& x) { return conj(transpose(x)); }

Matrix inverse(const Matrix& x) {
  const int n = x.n;
  Matrix a = x;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw NotApplicable("singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    Scalar s = a(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::optional<Scalar> scalar_multiple_of_identity(const Matrix& x) {
  if (x.n == 0) return std::nullopt;
  Scalar c = x(0, 0);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) {
      if (!(x(i, j) == (i == j ? c : Scalar()))) return std::nullopt;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// LinMap

LinMap::LinMap(int N, int dom_len, int cod_len) : N_(N), dom_(dom_len), cod_(cod_len) {
  if (N < 1 || dom_len < 0 || cod_len < 0) throw ShapeError("invalid map shape");
  data_.assign(ipow(N, dom_len + cod_len), Scalar());
}

LinMap LinMap::identity(int N, int legs) {
  LinMap m(N, legs, legs);
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = Scalar(1);
  return m;
}

LinMap LinMap::scalar(int N, const Scalar& s) {
  LinMap m(N, 0, 0);
  m.at(0, 0) = s;
  return m;
}

LinMap LinMap::column(int N, int legs, std::vector<Scalar> entries) {
  LinMap m(N, 0, legs);
  if (entries.size() != m.rows()) throw ShapeError("column length does not match N^legs");
  m.data_ = std::move(entries);
  return m;
}

LinMap LinMap::elementary(int N, const std::vector<std::vector<Scalar>>& factors) {
  LinMap m = LinMap::scalar(N, Scalar(1));
  for (const auto& f : factors) m = tensor_product(m, LinMap::column(N, 1, f));
  return m;
}

bool LinMap::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string LinMap::shape_text() const {
  return "(N=" + std::to_string(N_) + ", " + std::to_string(dom_) + " -> " +
         std::to_string(cod_) + " legs)";
}

LinMap tensor_product(const LinMap& a, const LinMap& b) {
  if (a.dim() != b.dim()) {
    throw ShapeError("tensor product of maps with different N: " + a.shape_text() + " and " +
                     b.shape_text());
  }
  LinMap r(a.dim(), a.dom_len() + b.dom_len(), a.cod_len() + b.cod_len());
  const std::size_t br = b.rows();
  const std::size_t bc = b.cols();
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const Scalar& x = a.at(ra, ca);
      if (x.is_zero()) continue;
      for (std::size_t rb = 0; rb < br; ++rb) {
        for (std::size_t cb = 0; cb < bc; ++cb) {
          const Scalar& y = b.at(rb, cb);
          if (!y.is_zero()) r.at(ra * br + rb, ca * bc + cb) = x * y;
        }
      }
    }
  }
  return r;
}

LinMap compose(const LinMap& s, const LinMap& t) {
  if (s.dim() != t.dim() || s.dom_len() != t.cod_len()) {
    throw ShapeError("cannot compose " + s.shape_text() + " after " + t.shape_text());
  }
  LinMap r(s.dim(), t.dom_len(), s.cod_len());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t k = 0; k < s.cols(); ++k) {
      const Scalar& x = s.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < t.cols(); ++j) {
        const Scalar& y = t.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

LinMap adjoint(const LinMap& t) {
  LinMap r(t.dim(), t.cod_len(), t.dom_len());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) r.at(j, i) = t.at(i, j).conj();
  }
  return r;
}

namespace {
void require_same_shape(const LinMap& a, const LinMap& b) {
  if (a.dim() != b.dim() || a.dom_len() != b.dom_len() || a.cod_len() != b.cod_len()) {
    throw ShapeError("shape mismatch: " + a.shape_text() + " vs " + b.shape_text());
  }
}
}  // namespace

LinMap operator+(const LinMap& a, const LinMap& b) {
  require_same_shape(a, b);
  LinMap r = a;
  for (std::size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] += b.entries()[i];
  return r;
}

LinMap operator-(const LinMap& a, const LinMap& b) {
  require_same_shape(a, b);
  LinMap r = a;
  for (std::size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] -= b.entries()[i];
  return r;
}

LinMap operator*(const Scalar& c, const LinMap& a) {
  LinMap r = a;
  for (auto& x : r.entries()) x = c * x;
  return r;
}

// ---------------------------------------------------------------------------
// Subspace

namespace {

// x -= c * y on sparse vectors.
SparseVec axpy_sparse(const SparseVec& x, const Scalar& c, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(c * y[j].second));
      ++j;
    } else {
      Scalar v = x[i].second - c * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Scalar* find_entry(const SparseVec& v, std::uint32_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it == v.end() || it->first != col) return nullptr;
  return &it->second;
}

}  // namespace

Subspace::Subspace(int N, int dom_len, int cod_len) : N_(N), dom_(dom_len), cod_(cod_len) {
  if (N < 1 || dom_len < 0 || cod_len < 0) throw ShapeError("invalid subspace shape");
}

Subspace Subspace::full(int N, int dom_len, int cod_len) {
  Subspace s(N, dom_len, cod_len);
  const std::size_t n = s.ambient();
  s.rows_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.rows_.push_back({{static_cast<std::uint32_t>(i), Scalar(1)}});
  return s;
}

std::string Subspace::shape_text() const {
  return "(N=" + std::to_string(N_) + ", " + std::to_string(dom_) + " -> " +
         std::to_string(cod_) + " legs)";
}

std::vector<LinMap> Subspace::basis() const {
  std::vector<LinMap> out;
  for (const auto& r : rows_) {
    LinMap m(N_, dom_, cod_);
    for (const auto& [i, x] : r) m.entries()[i] = x;
    out.push_back(std::move(m));
  }
  return out;
}

void Subspace::check_shape(const LinMap& t) const {
  if (t.dim() != N_ || t.dom_len() != dom_ || t.cod_len() != cod_) {
    throw ShapeError("map " + t.shape_text() + " does not fit subspace " + shape_text());
  }
}

std::optional<SparseVec> Subspace::reduce(const SparseVec& v) const {
  if (v.empty()) return std::nullopt;
  thread_local std::vector<Scalar> scratch;
  thread_local std::vector<char> touched_flag;
  thread_local std::vector<std::uint32_t> touched;
  const std::size_t n = ambient();
  if (scratch.size() < n) {
    scratch.resize(n);
    touched_flag.resize(n, 0);
  }
  touched.clear();
  auto touch = [&](std::uint32_t i) {
    if (!touched_flag[i]) {
      touched_flag[i] = 1;
      touched.push_back(i);
    }
  };
  for (const auto& [i, x] : v) {
    scratch[i] = x;
    touch(i);
  }
  for (const auto& row : rows_) {
    const std::uint32_t p = row.front().first;
    if (!touched_flag[p] || scratch[p].is_zero()) continue;
    const Scalar c = scratch[p];
    for (const auto& [j, y] : row) {
      touch(j);
      scratch[j] -= c * y;
    }
  }
  std::sort(touched.begin(), touched.end());
  SparseVec out;
  for (std::uint32_t i : touched) {
    if (!scratch[i].is_zero()) out.emplace_back(i, std::move(scratch[i]));
    scratch[i] = Scalar();
    touched_flag[i] = 0;
  }
  if (out.empty()) return std::nullopt;
  if (!out.front().second.is_one()) {
    const Scalar inv = out.front().second.inverse();
    for (auto& e : out) e.second = e.second * inv;
  }
  return out;
}

bool Subspace::insert(const SparseVec& v) {
  auto r = reduce(v);
  if (!r) return false;
  const std::uint32_t p = r->front().first;
  for (auto& row : rows_) {
    if (const Scalar* c = find_entry(row, p)) row = axpy_sparse(row, Scalar(*c), *r);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const SparseVec& row, std::uint32_t c) { return row.front().first < c; });
  rows_.insert(pos, std::move(*r));
  return true;
}

bool Subspace::insert_echelon(const SparseVec& v) {
  auto r = reduce(v);
  if (!r) return false;
  const std::uint32_t p = r->front().first;
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const SparseVec& row, std::uint32_t c) { return row.front().first < c; });
  rows_.insert(pos, std::move(*r));
  return true;
}

void Subspace::finish_echelon() {
  // Bottom-up: rows below the current one are already reduced.
  std::vector<Scalar> scratch(ambient());
  for (std::size_t j = rows_.size(); j-- > 0;) {
    SparseVec& row = rows_[j];
    if (row.size() == 1) continue;
    std::vector<std::uint32_t> touched;
    for (const auto& [i, x] : row) {
      scratch[i] = x;
      touched.push_back(i);
    }
    bool changed = false;
    for (std::size_t k = j + 1; k < rows_.size(); ++k) {
      const std::uint32_t p = rows_[k].front().first;
      if (scratch[p].is_zero()) continue;
      const Scalar c = scratch[p];
      for (const auto& [i, y] : rows_[k]) {
        if (scratch[i].is_zero()) touched.push_back(i);
        scratch[i] -= c * y;
      }
      changed = true;
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    SparseVec out;
    for (std::uint32_t i : touched) {
      if (!scratch[i].is_zero()) out.emplace_back(i, std::move(scratch[i]));
      scratch[i] = Scalar();
    }
    if (changed) row = std::move(out);
  }
}

bool Subspace::insert(const LinMap& t) {
  check_shape(t);
  return insert(sparse_from_dense(t.entries()));
}

bool Subspace::insert_dense(const std::vector<Scalar>& v) {
  if (v.size() != ambient()) throw ShapeError("vector length does not fit subspace " + shape_text());
  return insert(sparse_from_dense(v));
}

bool Subspace::contains_vector(const SparseVec& v) const { return !reduce(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (!same_shape(other)) throw ShapeError("subspace shape mismatch: " + shape_text() + " vs " + other.shape_text());
  if (other.dim() > dim()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const SparseVec& r) { return contains_vector(r); });
}

bool Subspace::operator==(const Subspace& other) const {
  return same_shape(other) && rows_ == other.rows_;
}

Subspace span(int N, int dom_len, int cod_len, const std::vector<LinMap>& maps) {
  Subspace s(N, dom_len, cod_len);
  for (const auto& m : maps) s.insert(m);
  return s;
}

Subspace span(const std::vector<LinMap>& maps) {
  if (maps.empty()) throw ShapeError("span of an empty list has no shape; pass it explicitly");
  const auto& m0 = maps.front();
  return span(m0.dim(), m0.dom_len(), m0.cod_len(), maps);
}

bool member(const Subspace& v, const LinMap& t) {
  if (t.dim() != v.dim_N() || t.dom_len() != v.dom_len() || t.cod_len() != v.cod_len()) {
    throw ShapeError("map " + t.shape_text() + " does not fit subspace " + v.shape_text());
  }
  return v.contains_vector(sparse_from_dense(t.entries()));
}

Subspace subspace_sum(const Subspace& v, const Subspace& w) {
  if (!v.same_shape(w)) throw ShapeError("subspace shape mismatch: " + v.shape_text() + " vs " + w.shape_text());
  Subspace s = v.dim() >= w.dim() ? v : w;
  const Subspace& other = v.dim() >= w.dim() ? w : v;
  for (const auto& r : other.rows()) s.insert(r);
  return s;
}

Subspace intersect(const Subspace& v, const Subspace& w) {
  if (!v.same_shape(w)) throw ShapeError("subspace shape mismatch: " + v.shape_text() + " vs " + w.shape_text());
  if (v.is_zero() || w.is_zero()) return Subspace(v.dim_N(), v.dom_len(), v.cod_len());
  if (v.dim() == v.ambient() || v.contains(w)) return w;
  if (w.dim() == w.ambient() || w.contains(v)) return v;
  // Kernel of [V; -W]: a combination sum a_i v_i - sum b_j w_j = 0 gives the
  // common vector sum a_i v_i. Rows (v_i | v_i) and (w_j | 0) are reduced
  // together; rows whose left half vanishes carry the intersection on the right.
  const auto n = static_cast<std::uint32_t>(v.ambient());
  std::vector<SparseVec> stacked;
  for (const auto& r : v.rows()) {
    SparseVec s = r;
    for (const auto& [i, x] : r) s.emplace_back(i + n, x);
    stacked.push_back(std::move(s));
  }
  for (const auto& r : w.rows()) stacked.push_back(r);
  // Row-reduce with pivots restricted to the left half first.
  std::vector<SparseVec> echelon;
  for (auto row : stacked) {
    for (const auto& e : echelon) {
      const std::uint32_t p = e.front().first;
      if (const Scalar* c = find_entry(row, p)) row = axpy_sparse(row, Scalar(*c), e);
    }
    if (row.empty()) continue;
    if (!row.front().second.is_one()) {
      const Scalar inv = row.front().second.inverse();
      for (auto& e : row) e.second = e.second * inv;
    }
    const std::uint32_t p = row.front().first;
    for (auto& e : echelon) {
      if (const Scalar* c = find_entry(e, p)) e = axpy_sparse(e, Scalar(*c), row);
    }
    echelon.push_back(std::move(row));
  }
  Subspace out(v.dim_N(), v.dom_len(), v.cod_len());
  for (const auto& e : echelon) {
    if (e.front().first < n) continue;
    SparseVec right;
    for (const auto& [i, x] : e) right.emplace_back(i - n, x);
    out.insert(right);
  }
  return out;
}

Subspace conjugate(const Subspace& v) {
  Subspace out(v.dim_N(), v.dom_len(), v.cod_len());
  for (const auto& r : v.rows()) {
    SparseVec c = r;
    for (auto& e : c) e.second = e.second.conj();
    out.insert(c);
  }
  return out;
}

}  // namespace qgcat
