#pragma once

#include <map>
#include <string>
#include <vector>

#include "kht/errors.hpp"
#include "kht/field.hpp"

namespace kht {

/// Row-major sparse matrix over an exact field. Zero entries are never
/// stored.
template <class F>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const std::map<int, F>& row(int r) const { return row_[r]; }

  F get(int r, int c) const {
    check_index(r, c);
    auto it = row_[r].find(c);
    return it == row_[r].end() ? F() : it->second;
  }

  void set(int r, int c, const F& v) {
    check_index(r, c);
    if (scalar_is_zero(v))
      row_[r].erase(c);
    else
      row_[r][c] = v;
  }

  void add(int r, int c, const F& v) {
    check_index(r, c);
    auto it = row_[r].find(c);
    if (it == row_[r].end()) {
      if (!scalar_is_zero(v)) row_[r].emplace(c, v);
      return;
    }
    it->second += v;
    if (scalar_is_zero(it->second)) row_[r].erase(it);
  }

  long long nonzeros() const {
    long long n = 0;
    for (const auto& r : row_) n += static_cast<long long>(r.size());
    return n;
  }

  SparseMatrix transposed() const {
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : row_[r]) t.row_[c].emplace(r, v);
    return t;
  }

  bool operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::map<int, F>> row_;

  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw ValidationError("matrix index (" + std::to_string(r) + "," +
                            std::to_string(c) + ") out of range");
  }
};

/// Rank by fraction-free-in-spirit sparse Gaussian elimination with a
/// Markowitz pivot rule: among nonzero candidates, pick the entry minimizing
/// (row fill - 1) * (column fill - 1), ties to the smallest (row, column).
template <class F>
int rank(const SparseMatrix<F>& m) {
  const int nr = m.rows(), nc = m.cols();
  std::vector<std::map<int, F>> rows(nr);
  std::vector<int> colcnt(nc, 0);
  for (int r = 0; r < nr; ++r) {
    rows[r] = m.row(r);
    for (const auto& [c, v] : rows[r]) ++colcnt[c];
  }
  std::vector<bool> active(nr, true);

  int rk = 0;
  for (;;) {
    long long best = -1;
    int br = -1, bc = -1;
    for (int r = 0; r < nr; ++r) {
      if (!active[r] || rows[r].empty()) continue;
      for (const auto& [c, v] : rows[r]) {
        long long cost = static_cast<long long>(rows[r].size() - 1) *
                         static_cast<long long>(colcnt[c] - 1);
        if (best < 0 || cost < best) {
          best = cost;
          br = r;
          bc = c;
        }
      }
    }
    if (br < 0) break;
    ++rk;

    const F pivot = rows[br].at(bc);
    for (int r = 0; r < nr; ++r) {
      if (r == br || !active[r]) continue;
      auto hit = rows[r].find(bc);
      if (hit == rows[r].end()) continue;
      F factor = hit->second / pivot;
      for (const auto& [c, v] : rows[br]) {
        auto it = rows[r].find(c);
        if (it == rows[r].end()) {
          F nv = -(factor * v);
          if (!scalar_is_zero(nv)) {
            rows[r].emplace(c, nv);
            ++colcnt[c];
          }
        } else {
          it->second -= factor * v;
          if (scalar_is_zero(it->second)) {
            rows[r].erase(it);
            --colcnt[c];
          }
        }
      }
    }
    for (const auto& [c, v] : rows[br]) --colcnt[c];
    rows[br].clear();
    active[br] = false;
  }
  return rk;
}

/// True iff the product `after * before` is the zero matrix (i.e. applying
/// `before`, then `after`, kills everything). Throws on dimension mismatch.
template <class F>
bool compose_check(const SparseMatrix<F>& after, const SparseMatrix<F>& before) {
  if (after.cols() != before.rows())
    throw ValidationError("compose_check: " + std::to_string(after.cols()) +
                          " columns vs " + std::to_string(before.rows()) +
                          " rows");
  for (int r = 0; r < after.rows(); ++r) {
    std::map<int, F> acc;
    for (const auto& [j, a] : after.row(r))
      for (const auto& [k, b] : before.row(j)) {
        auto it = acc.find(k);
        if (it == acc.end())
          acc.emplace(k, a * b);
        else
          it->second += a * b;
      }
    for (const auto& [k, v] : acc)
      if (!scalar_is_zero(v)) return false;
  }
  return true;
}

}  // namespace kht
