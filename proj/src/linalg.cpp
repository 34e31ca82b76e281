#include "wqsym/linalg.hpp"

#include <numeric>

namespace wqsym {

std::string basis_name(BasisTag b) {
  switch (b) {
    case BasisTag::M: return "M";
    case BasisTag::Q: return "Q";
    case BasisTag::R: return "R";
    case BasisTag::P: return "P";
    case BasisTag::O: return "O";
  }
  return "?";
}

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

struct Echelon {
  std::vector<std::vector<Int>> rows;  // fraction-free row echelon form
  std::vector<int> pivot_col;          // per echelon row
};

// Bareiss fraction-free elimination; pivot = first nonzero in column order.
Echelon echelonize(const ExactMatrix& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<Int>> a(R, std::vector<Int>(C));
  for (int r = 0; r < R; ++r) {
    Int lcm = 1;
    for (int c = 0; c < C; ++c) lcm = boost::multiprecision::lcm(lcm, denominator(m.at(r, c)));
    for (int c = 0; c < C; ++c)
      a[r][c] = numerator(m.at(r, c)) * (lcm / denominator(m.at(r, c)));
  }
  Echelon e;
  Int prev = 1;
  int row = 0;
  for (int col = 0; col < C && row < R; ++col) {
    int piv = -1;
    for (int r = row; r < R; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    for (int r = row + 1; r < R; ++r) {
      for (int c = col + 1; c < C; ++c)
        a[r][c] = (a[r][c] * a[row][col] - a[r][col] * a[row][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[row][col];
    e.pivot_col.push_back(col);
    ++row;
  }
  a.resize(row);
  e.rows = std::move(a);
  return e;
}

}  // namespace

int ExactMatrix::rank() const { return static_cast<int>(echelonize(*this).pivot_col.size()); }

std::vector<std::vector<Rat>> ExactMatrix::kernel_basis() const {
  Echelon e = echelonize(*this);
  const int C = cols_;
  const int r = static_cast<int>(e.pivot_col.size());
  std::vector<char> is_pivot(C, 0);
  for (int c : e.pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Rat>> basis;
  for (int freec = 0; freec < C; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rat> x(C);
    x[freec] = 1;
    for (int i = r - 1; i >= 0; --i) {
      const int pc = e.pivot_col[i];
      Rat s = 0;
      for (int c = pc + 1; c < C; ++c)
        if (x[c] != 0) s += Rat(e.rows[i][c]) * x[c];
      x[pc] = -s / Rat(e.rows[i][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Rat>> ExactMatrix::solve(const std::vector<Rat>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("solve: dimension mismatch");
  ExactMatrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  Echelon e = echelonize(aug);
  std::vector<Rat> x(cols_);
  for (int i = static_cast<int>(e.pivot_col.size()) - 1; i >= 0; --i) {
    const int pc = e.pivot_col[i];
    if (pc == cols_) return std::nullopt;  // pivot in the augmented column
    Rat s = Rat(e.rows[i][cols_]);
    for (int c = pc + 1; c < cols_; ++c)
      if (x[c] != 0) s -= Rat(e.rows[i][c]) * x[c];
    x[pc] = s / Rat(e.rows[i][pc]);
  }
  return x;
}

}  // namespace wqsym
