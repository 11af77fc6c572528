#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qclifford/rational_function.hpp"

namespace qclifford {

/// Square sparse matrix over Q(q). Rows are stored as column-sorted lists of
/// nonzero entries; explicit zeros never appear.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    RationalFunction value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t dim) : rows_(dim) {}

  static SparseMatrix identity(std::size_t dim);
  static SparseMatrix scalar(std::size_t dim, const RationalFunction& value);
  static SparseMatrix diagonal(const std::vector<RationalFunction>& values);
  // Single 1 at (row, col).
  static SparseMatrix unit(std::size_t dim, std::size_t row, std::size_t col);

  std::size_t dim() const { return rows_.size(); }
  const Row& row(std::size_t r) const { return rows_[r]; }
  RationalFunction at(std::size_t r, std::size_t c) const;
  // Overwrites one entry; a zero value removes it.
  void set(std::size_t r, std::size_t c, RationalFunction value);
  void add_to(std::size_t r, std::size_t c, const RationalFunction& value);

  std::size_t nonzeros() const;
  bool is_zero() const;

  SparseMatrix operator-() const;
  SparseMatrix& operator+=(const SparseMatrix& rhs);
  SparseMatrix& operator-=(const SparseMatrix& rhs);
  SparseMatrix& operator*=(const RationalFunction& s);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(SparseMatrix a, const RationalFunction& s) { return a *= s; }
  friend SparseMatrix operator*(const RationalFunction& s, SparseMatrix a) { return a *= s; }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) { return a.rows_ == b.rows_; }

  SparseMatrix transpose() const;
  // Kronecker product, a's index outermost.
  friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

  // Entry-wise q -> q0.
  SparseMatrix substitute(const mpq_class& q0) const;
  // Entry-wise map.
  template <typename F>
  SparseMatrix map(F&& f) const {
    SparseMatrix out(dim());
    for (std::size_t r = 0; r < dim(); ++r)
      for (const auto& e : rows_[r]) out.set(r, e.col, f(e.value));
    return out;
  }

  std::vector<RationalFunction> apply(const std::vector<RationalFunction>& v) const;

  // Dense floating evaluation at q0 (row-major); throws DomainError on poles.
  std::vector<std::complex<double>> evaluate(std::complex<double> q0) const;

 private:
  std::vector<Row> rows_;
};

// max |a(q0) - b(q0)| over all entries, both sides evaluated independently.
double max_abs_deviation(const SparseMatrix& a, const SparseMatrix& b, std::complex<double> q0);

}  // namespace qclifford
