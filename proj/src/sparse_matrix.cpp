#include "qclifford/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qclifford {

namespace {

void require_same_dim(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

// Merge of two sorted rows with a sign on the right operand.
SparseMatrix::Row merge_rows(const SparseMatrix::Row& a, const SparseMatrix::Row& b, bool subtract) {
  SparseMatrix::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, subtract ? -b[j].value : b[j].value});
      ++j;
    } else {
      RationalFunction v = subtract ? a[i].value - b[j].value : a[i].value + b[j].value;
      if (!v.is_zero()) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseMatrix SparseMatrix::identity(std::size_t dim) { return scalar(dim, RationalFunction(1)); }

SparseMatrix SparseMatrix::scalar(std::size_t dim, const RationalFunction& value) {
  SparseMatrix m(dim);
  if (value.is_zero()) return m;
  for (std::size_t r = 0; r < dim; ++r) m.rows_[r].push_back({r, value});
  return m;
}

SparseMatrix SparseMatrix::diagonal(const std::vector<RationalFunction>& values) {
  SparseMatrix m(values.size());
  for (std::size_t r = 0; r < values.size(); ++r)
    if (!values[r].is_zero()) m.rows_[r].push_back({r, values[r]});
  return m;
}

SparseMatrix SparseMatrix::unit(std::size_t dim, std::size_t row, std::size_t col) {
  SparseMatrix m(dim);
  m.set(row, col, RationalFunction(1));
  return m;
}

RationalFunction SparseMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return {};
}

void SparseMatrix::set(std::size_t r, std::size_t c, RationalFunction value) {
  if (c >= dim()) throw std::out_of_range("column index out of range");
  Row& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  const bool present = it != row.end() && it->col == c;
  if (value.is_zero()) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = std::move(value);
  } else {
    row.insert(it, Entry{c, std::move(value)});
  }
}

void SparseMatrix::add_to(std::size_t r, std::size_t c, const RationalFunction& value) {
  if (value.is_zero()) return;
  set(r, c, at(r, c) + value);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

SparseMatrix SparseMatrix::operator-() const {
  SparseMatrix out = *this;
  for (auto& row : out.rows_)
    for (auto& e : row) e.value = -e.value;
  return out;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t r = 0; r < dim(); ++r) {
    if (rhs.rows_[r].empty()) continue;
    rows_[r] = merge_rows(rows_[r], rhs.rows_[r], false);
  }
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t r = 0; r < dim(); ++r) {
    if (rhs.rows_[r].empty()) continue;
    rows_[r] = merge_rows(rows_[r], rhs.rows_[r], true);
  }
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const RationalFunction& s) {
  if (s.is_zero()) {
    for (auto& row : rows_) row.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& row : rows_)
    for (auto& e : row) e.value *= s;
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  SparseMatrix out(n);
  std::vector<RationalFunction> acc(n);
  std::vector<char> touched(n, 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < n; ++r) {
    cols.clear();
    for (const auto& ea : a.rows_[r]) {
      for (const auto& eb : b.rows_[ea.col]) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          cols.push_back(eb.col);
          acc[eb.col] = ea.value * eb.value;
        } else {
          acc[eb.col] += ea.value * eb.value;
        }
      }
    }
    std::sort(cols.begin(), cols.end());
    auto& row = out.rows_[r];
    for (std::size_t c : cols) {
      touched[c] = 0;
      if (!acc[c].is_zero()) row.push_back({c, std::move(acc[c])});
    }
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (const auto& e : rows_[r]) out.rows_[e.col].push_back({r, e.value});
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  const std::size_t nb = b.dim();
  SparseMatrix out(a.dim() * nb);
  for (std::size_t ra = 0; ra < a.dim(); ++ra) {
    for (std::size_t rb = 0; rb < nb; ++rb) {
      auto& row = out.rows_[ra * nb + rb];
      for (const auto& ea : a.rows_[ra])
        for (const auto& eb : b.rows_[rb]) row.push_back({ea.col * nb + eb.col, ea.value * eb.value});
    }
  }
  return out;
}

SparseMatrix SparseMatrix::substitute(const mpq_class& q0) const {
  return map([&](const RationalFunction& v) { return v.substitute(q0); });
}

std::vector<RationalFunction> SparseMatrix::apply(const std::vector<RationalFunction>& v) const {
  if (v.size() != dim()) throw std::invalid_argument("vector length does not match matrix dimension");
  std::vector<RationalFunction> out(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (const auto& e : rows_[r]) out[r] += e.value * v[e.col];
  return out;
}

std::vector<std::complex<double>> SparseMatrix::evaluate(std::complex<double> q0) const {
  std::vector<std::complex<double>> out(dim() * dim(), 0.0);
  for (std::size_t r = 0; r < dim(); ++r)
    for (const auto& e : rows_[r]) out[r * dim() + e.col] = e.value.evaluate(q0);
  return out;
}

double max_abs_deviation(const SparseMatrix& a, const SparseMatrix& b, std::complex<double> q0) {
  require_same_dim(a, b);
  const auto va = a.evaluate(q0);
  const auto vb = b.evaluate(q0);
  double worst = 0.0;
  for (std::size_t k = 0; k < va.size(); ++k) worst = std::max(worst, std::abs(va[k] - vb[k]));
  return worst;
}

}  // namespace qclifford
