#pragma once

#include "qgcat/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qgcat {

std::size_t ipow(int base, int exp);

// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

SparseVec sparse_from_dense(const std::vector<Scalar>& dense);
std::vector<Scalar> dense_from_sparse(const SparseVec& v, std::size_t size);

// Small square matrix, row-major.
struct Matrix {
  int n = 0;
  std::vector<Scalar> a;

  Matrix() = default;
  explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}
  static Matrix identity(int size);

  Scalar& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Scalar& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  bool operator==(const Matrix&) const = default;
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix conj(const Matrix& x);
Matrix transpose(const Matrix& x);
Matrix conj_transpose(const Matrix& x);
// Throws NotApplicable when x is singular.
Matrix inverse(const Matrix& x);
// c with x = c * 1, if any.
std::optional<Scalar> scalar_multiple_of_identity(const Matrix& x);

// Linear map (C^N)^{(x) dom_len} -> (C^N)^{(x) cod_len}, dense and row-major.
// Multi-indices are mixed-radix with the first leg most significant.
class LinMap {
 public:
  LinMap() = default;
  LinMap(int N, int dom_len, int cod_len);

  static LinMap identity(int N, int legs);
  static LinMap scalar(int N, const Scalar& s);
  // Vector in (C^N)^{(x) legs}, i.e. a map with zero domain legs.
  static LinMap column(int N, int legs, std::vector<Scalar> entries);
  // Elementary tensor of single-leg vectors.
  static LinMap elementary(int N, const std::vector<std::vector<Scalar>>& factors);

  int dim() const { return N_; }
  int dom_len() const { return dom_; }
  int cod_len() const { return cod_; }
  std::size_t rows() const { return ipow(N_, cod_); }
  std::size_t cols() const { return ipow(N_, dom_); }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }
  const std::vector<Scalar>& entries() const { return data_; }
  std::vector<Scalar>& entries() { return data_; }

  bool is_zero() const;
  std::string shape_text() const;

  bool operator==(const LinMap&) const = default;

 private:
  int N_ = 1;
  int dom_ = 0;
  int cod_ = 0;
  std::vector<Scalar> data_{Scalar()};
};

LinMap tensor_product(const LinMap& a, const LinMap& b);
LinMap compose(const LinMap& s, const LinMap& t);
LinMap adjoint(const LinMap& t);
LinMap operator+(const LinMap& a, const LinMap& b);
LinMap operator-(const LinMap& a, const LinMap& b);
LinMap operator*(const Scalar& c, const LinMap& a);

// Subspace of maps of one fixed shape, kept in canonical reduced row echelon
// form: rows sorted by pivot column, pivots equal to 1, pivot columns cleared
// in every other row. Two subspaces are equal iff their rows are equal.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int N, int dom_len, int cod_len);

  static Subspace full(int N, int dom_len, int cod_len);

  int dim_N() const { return N_; }
  int dom_len() const { return dom_; }
  int cod_len() const { return cod_; }
  std::size_t ambient() const { return ipow(N_, dom_ + cod_); }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  std::vector<LinMap> basis() const;

  // Adds a vectorised map; returns true when the dimension grew.
  bool insert(const LinMap& t);
  bool insert(const SparseVec& v);
  bool insert_dense(const std::vector<Scalar>& v);
  // Bulk building: adds v without clearing its pivot from earlier rows, so
  // the rows are only in echelon form until finish_echelon() runs. Span
  // queries stay correct in between; comparisons and rows() need the finish.
  bool insert_echelon(const SparseVec& v);
  void finish_echelon();
  bool contains_vector(const SparseVec& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const;
  bool same_shape(const Subspace& other) const {
    return N_ == other.N_ && dom_ == other.dom_ && cod_ == other.cod_;
  }
  std::string shape_text() const;

 private:
  // Reduces the candidate against the rows; returns the nonzero remainder
  // normalised to a leading 1, or nothing when it lies in the span.
  std::optional<SparseVec> reduce(const SparseVec& v) const;
  void check_shape(const LinMap& t) const;

  int N_ = 1;
  int dom_ = 0;
  int cod_ = 0;
  std::vector<SparseVec> rows_;
};

Subspace span(const std::vector<LinMap>& maps);
Subspace span(int N, int dom_len, int cod_len, const std::vector<LinMap>& maps);
bool member(const Subspace& v, const LinMap& t);
Subspace intersect(const Subspace& v, const Subspace& w);
Subspace subspace_sum(const Subspace& v, const Subspace& w);
// Image of every basis vector under an entrywise conjugation.
Subspace conjugate(const Subspace& v);

}  // namespace qgcat
