// Sparse linear combinations with exact integer coefficients, and dense
// exact-rational matrices (Bareiss elimination) for rank / kernel / solve.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <vector>

namespace wqsym {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class BasisTag : uint8_t { M, Q, R, P, O };

std::string basis_name(BasisTag b);

// Formal sum of keys with nonzero integer coefficients.
template <class Key>
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(BasisTag basis) : basis_(basis) {}
  LinComb(BasisTag basis, const Key& k, Int c = 1) : basis_(basis) {
    if (c != 0) terms_[k] = std::move(c);
  }

  BasisTag basis() const { return basis_; }
  const std::map<Key, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  Int coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(const Key& k, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    check_basis(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    check_basis(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LinComb& operator*=(const Int& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Int& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  void check_basis(const LinComb& o) const {
    if (!terms_.empty() && !o.terms_.empty() && basis_ != o.basis_)
      throw std::invalid_argument("basis mismatch in linear combination");
  }
  BasisTag basis_ = BasisTag::M;
  std::map<Key, Int> terms_;
};

template <class K1, class K2>
LinComb<std::pair<K1, K2>> tensor(const LinComb<K1>& a, const LinComb<K2>& b) {
  LinComb<std::pair<K1, K2>> out(a.basis());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term({ka, kb}, ca * cb);
  return out;
}

class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  int rank() const;
  // Basis of the right kernel {x : Mx = 0}.
  std::vector<std::vector<Rat>> kernel_basis() const;
  // One solution of Mx = b, or nullopt when inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Matrix with entry(r, c) = coefficient of row_order[r] in images[c].
template <class Key>
ExactMatrix assemble_matrix(const std::vector<LinComb<Key>>& images,
                            const std::vector<Key>& row_order) {
  ExactMatrix m(static_cast<int>(row_order.size()), static_cast<int>(images.size()));
  std::map<Key, int> index;
  for (int r = 0; r < static_cast<int>(row_order.size()); ++r) index[row_order[r]] = r;
  for (int c = 0; c < static_cast<int>(images.size()); ++c)
    for (const auto& [k, coef] : images[c].terms()) {
      auto it = index.find(k);
      if (it == index.end()) throw std::invalid_argument("key missing from row order");
      m.at(it->second, c) = Rat(coef);
    }
  return m;
}

}  // namespace wqsym
