#include "splitalg/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "splitalg/error.hpp"

namespace splitalg {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw Error(ErrorKind::Argument, "negative matrix dimension");
  rows_data_.resize(static_cast<size_t>(rows));
}

void ExactMatrix::add(int r, int c, const mpq_class& value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw Error(ErrorKind::Argument, "matrix index out of range");
  if (value == 0) return;
  auto& row = rows_data_[static_cast<size_t>(r)];
  for (auto it = row.begin(); it != row.end(); ++it) {
    if (it->first == c) {
      it->second += value;
      if (it->second == 0) row.erase(it);
      return;
    }
  }
  row.emplace_back(c, value);
}

void ExactMatrix::stack(const ExactMatrix& other) {
  if (other.cols_ != cols_)
    throw Error(ErrorKind::Argument, "stack: column count mismatch");
  rows_data_.insert(rows_data_.end(), other.rows_data_.begin(),
                    other.rows_data_.end());
  rows_ += other.rows_;
}

namespace {

// Sparse rational elimination. Rows are kept as sorted (col, value) maps;
// at each step the shortest unused row supplies the pivot.
struct SparseElim {
  explicit SparseElim(const ExactMatrix& m) : cols(m.cols()) {
    rows.reserve(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
      if (m.row(r).empty()) continue;
      std::map<int, mpq_class> row(m.row(r).begin(), m.row(r).end());
      rows.push_back(std::move(row));
    }
  }

  // Reduces to row echelon form; returns pivot columns in elimination order.
  std::vector<int> run() {
    std::vector<int> pivots;
    std::vector<bool> used(rows.size(), false);
    while (true) {
      // Pick the sparsest remaining row.
      int best = -1;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (used[i] || rows[i].empty()) continue;
        if (best < 0 || rows[i].size() < rows[static_cast<size_t>(best)].size())
          best = static_cast<int>(i);
      }
      if (best < 0) break;
      used[static_cast<size_t>(best)] = true;
      auto& prow = rows[static_cast<size_t>(best)];
      int pc = prow.begin()->first;
      mpq_class pv = prow.begin()->second;
      pivots.push_back(pc);
      echelon.push_back(prow);
      for (size_t i = 0; i < rows.size(); ++i) {
        if (used[i]) continue;
        auto it = rows[i].find(pc);
        if (it == rows[i].end()) continue;
        mpq_class factor = it->second / pv;
        for (const auto& [c, val] : prow) {
          auto jt = rows[i].find(c);
          if (jt == rows[i].end()) {
            rows[i].emplace(c, -factor * val);
          } else {
            jt->second -= factor * val;
            if (jt->second == 0) rows[i].erase(jt);
          }
        }
      }
    }
    return pivots;
  }

  int cols;
  std::vector<std::map<int, mpq_class>> rows;
  std::vector<std::map<int, mpq_class>> echelon;  // pivot rows, in order
};

constexpr uint64_t kPrimeA = 2147483647ull;  // 2^31 - 1
constexpr uint64_t kPrimeB = 2147483629ull;

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (unsigned __int128)r * b % p;
    b = (unsigned __int128)b * b % p;
    e >>= 1;
  }
  return r;
}

// Rank of m reduced mod p. Returns -1 if some entry's denominator
// vanishes mod p (cannot reduce).
int rank_mod(const ExactMatrix& m, uint64_t p) {
  std::vector<std::map<int, uint64_t>> rows;
  for (int r = 0; r < m.rows(); ++r) {
    std::map<int, uint64_t> row;
    for (const auto& [c, q] : m.row(r)) {
      mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
      mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
      if (den == 0) return -1;
      uint64_t n = mpz_class(num < 0 ? num + mpz_class(static_cast<unsigned long>(p)) : num)
                       .get_ui();
      uint64_t d = mpz_class(den).get_ui();
      uint64_t val = (unsigned __int128)n * pow_mod(d, p - 2, p) % p;
      if (val) row.emplace(c, val);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  int rk = 0;
  std::vector<bool> used(rows.size(), false);
  while (true) {
    int best = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty()) continue;
      if (best < 0 || rows[i].size() < rows[static_cast<size_t>(best)].size())
        best = static_cast<int>(i);
    }
    if (best < 0) break;
    used[static_cast<size_t>(best)] = true;
    ++rk;
    auto& prow = rows[static_cast<size_t>(best)];
    int pc = prow.begin()->first;
    uint64_t pinv = pow_mod(prow.begin()->second, p - 2, p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto it = rows[i].find(pc);
      if (it == rows[i].end()) continue;
      uint64_t factor = (unsigned __int128)it->second * pinv % p;
      for (const auto& [c, val] : prow) {
        uint64_t sub = (unsigned __int128)factor * val % p;
        auto jt = rows[i].find(c);
        uint64_t cur = jt == rows[i].end() ? 0 : jt->second;
        uint64_t nv = (cur + p - sub) % p;
        if (nv == 0) {
          if (jt != rows[i].end()) rows[i].erase(jt);
        } else if (jt == rows[i].end()) {
          rows[i].emplace(c, nv);
        } else {
          jt->second = nv;
        }
      }
    }
  }
  return rk;
}

}  // namespace

int rank(const ExactMatrix& m, EliminationMode mode) {
  if (mode == EliminationMode::Modular) {
    int ra = rank_mod(m, kPrimeA);
    int rb = rank_mod(m, kPrimeB);
    if (ra >= 0 && ra == rb) return ra;
    // Disagreement (or an unreducible entry): escalate to exact arithmetic.
  }
  SparseElim e(m);
  return static_cast<int>(e.run().size());
}

int kernel_dim(const ExactMatrix& m, EliminationMode mode) {
  return m.cols() - rank(m, mode);
}

std::vector<std::vector<mpq_class>> kernel_basis(const ExactMatrix& m) {
  SparseElim e(m);
  std::vector<int> pivots = e.run();
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

  // A pivot row only involves its own pivot column plus columns pivoted
  // later (or never), so back-substitute in reverse elimination order.
  std::vector<size_t> order(pivots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;

  std::vector<std::vector<mpq_class>> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    std::vector<mpq_class> v(static_cast<size_t>(m.cols()), mpq_class(0));
    v[static_cast<size_t>(free_col)] = 1;
    for (size_t oi : order) {
      const auto& row = e.echelon[oi];
      int pc = pivots[oi];
      mpq_class acc(0);
      mpq_class pv(0);
      for (const auto& [c, val] : row) {
        if (c == pc)
          pv = val;
        else
          acc += val * v[static_cast<size_t>(c)];
      }
      v[static_cast<size_t>(pc)] = -acc / pv;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_of_vectors(const std::vector<std::vector<mpq_class>>& vectors,
                    int dim) {
  ExactMatrix m(static_cast<int>(vectors.size()), dim);
  for (size_t r = 0; r < vectors.size(); ++r)
    for (int c = 0; c < dim; ++c)
      m.add(static_cast<int>(r), c, vectors[r][static_cast<size_t>(c)]);
  return rank(m);
}

}  // namespace splitalg
