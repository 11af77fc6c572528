#include "qclifford/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

namespace qclifford::linalg {

namespace {

struct PolyEntry {
  std::size_t col;
  Polynomial value;
};
using PolyRow = std::vector<PolyEntry>;

PolyRow clear_denominators(const SparseVector& v) {
  Polynomial lcm(1);
  for (const auto& e : v) {
    const Polynomial& d = e.value.denominator();
    if (d.is_one()) continue;
    lcm = exact_divide(lcm * d, gcd(lcm, d));
  }
  PolyRow out;
  out.reserve(v.size());
  for (const auto& e : v) {
    out.push_back({e.col, e.value.numerator() * exact_divide(lcm, e.value.denominator())});
  }
  return out;
}

const Polynomial* find(const PolyRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const PolyEntry& e, std::size_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

// (p * a - f * b) / divisor over sorted rows.
PolyRow bareiss_combine(const PolyRow& a, const Polynomial& p, const PolyRow& b, const Polynomial* f,
                        const Polynomial& divisor) {
  PolyRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  auto emit = [&](std::size_t col, Polynomial v) {
    if (v.is_zero()) return;
    if (!divisor.is_one()) v = exact_divide(v, divisor);
    out.push_back({col, std::move(v)});
  };
  while (i < a.size() || (f != nullptr && j < b.size())) {
    const bool take_b = f != nullptr && j < b.size();
    if (!take_b || (i < a.size() && a[i].col < b[j].col)) {
      emit(a[i].col, p * a[i].value);
      ++i;
    } else if (i == a.size() || b[j].col < a[i].col) {
      emit(b[j].col, -(*f * b[j].value));
      ++j;
    } else {
      emit(a[i].col, p * a[i].value - *f * b[j].value);
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t residue(const mpz_class& z, std::uint64_t p) {
  return static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

// Incremental Gauss-Jordan over Q(q): pivot rows are kept normalized (pivot
// entry 1) and fully reduced against each other.
class Reducer {
 public:
  // Returns true when v was independent of the rows added so far.
  bool add(SparseVector v) {
    reduce(v);
    if (v.empty()) return false;
    const std::size_t lead = v.front().col;
    const RationalFunction inv = v.front().value.inverse();
    for (auto& e : v) e.value *= inv;
    for (auto& [col, row] : pivots_) {
      const RationalFunction f = coefficient(row, lead);
      if (!f.is_zero()) row = axpy(row, -f, v);
    }
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  void reduce(SparseVector& v) const {
    // Pivot rows are mutually reduced, so one pass over v's columns suffices
    // as long as we walk columns in increasing order.
    std::size_t k = 0;
    while (k < v.size()) {
      auto it = pivots_.find(v[k].col);
      if (it == pivots_.end()) {
        ++k;
        continue;
      }
      const std::size_t col = v[k].col;
      const RationalFunction f = v[k].value;
      v = axpy(v, -f, it->second);
      k = static_cast<std::size_t>(
          std::lower_bound(v.begin(), v.end(), col, [](const auto& e, std::size_t c) { return e.col < c; }) -
          v.begin());
    }
  }

  const std::map<std::size_t, SparseVector>& pivots() const { return pivots_; }

  static RationalFunction coefficient(const SparseVector& v, std::size_t col) {
    auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, std::size_t c) { return e.col < c; });
    return (it != v.end() && it->col == col) ? it->value : RationalFunction();
  }

  // a + s * b
  static SparseVector axpy(const SparseVector& a, const RationalFunction& s, const SparseVector& b) {
    SparseVector out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].col < a[i].col) {
        out.push_back({b[j].col, s * b[j].value});
        ++j;
      } else {
        RationalFunction v = a[i].value + s * b[j].value;
        if (!v.is_zero()) out.push_back({a[i].col, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

 private:
  std::map<std::size_t, SparseVector> pivots_;
};

}  // namespace

std::size_t exact_rank(const std::vector<SparseVector>& vectors) {
  std::vector<PolyRow> active;
  for (const auto& v : vectors)
    if (!v.empty()) active.push_back(clear_denominators(v));

  Polynomial previous(1);
  std::size_t rank = 0;
  while (!active.empty()) {
    // Complete pivoting: sparsest row, then its lowest-degree entry.
    std::size_t best_row = 0;
    for (std::size_t r = 1; r < active.size(); ++r)
      if (active[r].size() < active[best_row].size()) best_row = r;
    std::swap(active[best_row], active.back());
    PolyRow pivot_row = std::move(active.back());
    active.pop_back();

    std::size_t pivot_col = pivot_row.front().col;
    int best_degree = std::numeric_limits<int>::max();
    for (const auto& e : pivot_row) {
      if (e.value.degree() < best_degree) {
        best_degree = e.value.degree();
        pivot_col = e.col;
      }
    }
    const Polynomial pivot = *find(pivot_row, pivot_col);

    std::vector<PolyRow> next;
    next.reserve(active.size());
    for (auto& row : active) {
      PolyRow updated = bareiss_combine(row, pivot, pivot_row, find(row, pivot_col), previous);
      if (!updated.empty()) next.push_back(std::move(updated));
    }
    active = std::move(next);
    previous = pivot;
    ++rank;
  }
  return rank;
}

std::optional<std::size_t> modular_rank(const std::vector<SparseVector>& vectors, const mpq_class& q0,
                                        std::uint64_t prime) {
  const std::uint64_t den = residue(q0.get_den(), prime);
  if (den == 0) return std::nullopt;
  const std::uint64_t x = mulmod(residue(q0.get_num(), prime), invmod(den, prime), prime);

  using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;
  std::map<std::size_t, ModRow> pivots;  // keyed by leading column, leading entry 1
  std::size_t rank = 0;
  for (const auto& v : vectors) {
    ModRow row;
    for (const auto& e : v) {
      const std::uint64_t d = e.value.denominator().evaluate_mod(x, prime);
      if (d == 0) return std::nullopt;
      const std::uint64_t val = mulmod(e.value.numerator().evaluate_mod(x, prime), invmod(d, prime), prime);
      if (val != 0) row.emplace_back(e.col, val);
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const std::uint64_t f = row.front().second;
      ModRow out;
      const ModRow& p = it->second;
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < row.size() || j < p.size()) {
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || p[j].first < row[i].first) {
          out.emplace_back(p[j].first, (prime - mulmod(f, p[j].second, prime)) % prime);
          ++j;
        } else {
          const std::uint64_t val = (row[i].second + prime - mulmod(f, p[j].second, prime)) % prime;
          if (val != 0) out.emplace_back(row[i].first, val);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
    if (row.empty()) continue;
    const std::uint64_t inv = invmod(row.front().second, prime);
    for (auto& e : row) e.second = mulmod(e.second, inv, prime);
    pivots.emplace(row.front().first, std::move(row));
    ++rank;
  }
  return rank;
}

std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
  const std::size_t n = m.dim();
  Reducer reducer;
  for (std::size_t r = 0; r < n; ++r) {
    SparseVector row = m.row(r);
    row.push_back({n + r, RationalFunction(1)});
    if (!reducer.add(std::move(row))) return std::nullopt;
  }
  SparseMatrix out(n);
  for (const auto& [lead, row] : reducer.pivots()) {
    if (lead >= n) return std::nullopt;
    for (const auto& e : row)
      if (e.col >= n) out.set(lead, e.col - n, e.value);
  }
  return out;
}

std::vector<SparseVector> nullspace(const std::vector<SparseVector>& equations, std::size_t unknowns) {
  Reducer reducer;
  for (const auto& eq : equations) reducer.add(eq);
  const auto& pivots = reducer.pivots();
  std::vector<SparseVector> basis;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (pivots.count(free) != 0) continue;
    // x_free = 1, x_pivot = -coefficient of free in the pivot row.
    SparseVector v;
    for (const auto& [lead, row] : pivots) {
      const RationalFunction c = Reducer::coefficient(row, free);
      if (!c.is_zero()) v.push_back({lead, -c});
    }
    v.push_back({free, RationalFunction(1)});
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<RationalFunction>> solve_combination(const std::vector<SparseVector>& vectors,
                                                               const SparseVector& target) {
  // Equation per coordinate j: sum_k c_k v_k[j] - t[j] = 0, unknown index K
  // carries the right-hand side.
  const std::size_t k_count = vectors.size();
  std::map<std::size_t, SparseVector> by_coordinate;
  for (std::size_t k = 0; k < k_count; ++k)
    for (const auto& e : vectors[k]) by_coordinate[e.col].push_back({k, e.value});
  for (const auto& e : target) by_coordinate[e.col].push_back({k_count, -e.value});

  Reducer reducer;
  for (auto& [coord, eq] : by_coordinate) reducer.add(std::move(eq));
  const auto& pivots = reducer.pivots();
  if (pivots.count(k_count) != 0) return std::nullopt;  // inconsistent
  if (pivots.size() != k_count) return std::nullopt;    // dependent family
  std::vector<RationalFunction> c(k_count);
  for (const auto& [lead, row] : pivots) c[lead] = -Reducer::coefficient(row, k_count);
  return c;
}

SparseVector flatten(const SparseMatrix& m) {
  SparseVector v;
  v.reserve(m.nonzeros());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (const auto& e : m.row(r)) v.push_back({r * m.dim() + e.col, e.value});
  return v;
}

}  // namespace qclifford::linalg
