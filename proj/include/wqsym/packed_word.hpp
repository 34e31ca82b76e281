// Packed words (words over {1..m} using every value) and their combinatorics.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wqsym {

using Letters = std::vector<int>;  // raw word over positive integers

// A word w over {1..max(w)} where every value 1..max(w) occurs (empty allowed).
class PackedWord {
 public:
  PackedWord() = default;
  explicit PackedWord(Letters letters);  // throws std::invalid_argument if not packed

  static bool is_packed(const Letters& letters);

  const Letters& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int max() const { return max_; }            // max(epsilon) = 0
  int operator[](int pos) const { return letters_[pos - 1]; }  // 1-based

  // Graded order (length first), then lexicographic.
  std::strong_ordering operator<=>(const PackedWord& o) const;
  bool operator==(const PackedWord& o) const { return letters_ == o.letters_; }

  // "3142132" when max <= 9, else "3,1,4,2,1,3,2".
  std::string str() const;
  // Accepts both digit-string and comma-separated forms.
  static PackedWord parse(const std::string& s);

 private:
  Letters letters_;
  int max_ = 0;
};

Letters shift(const Letters& w, int k);

PackedWord pack(const Letters& word);
PackedWord standardize(const Letters& word);

// u gcdot v: shift u by max(v), then concatenate.  u dcdot v: shift v by max(u).
PackedWord shifted_concat_left(const PackedWord& u, const PackedWord& v);
PackedWord shifted_concat_right(const PackedWord& u, const PackedWord& v);

// Subword of letters <= i (packed when the input is) and > i (raw, to be packed).
PackedWord restrict_le(const PackedWord& u, int i);
Letters restrict_gt(const PackedWord& u, int i);

// Positions c in 1..n-1 such that every letter at or before c exceeds every
// letter after c.
std::vector<int> global_descents(const PackedWord& w);
bool is_irreducible(const PackedWord& w);
// Unique factorization w = w1 gcdot w2 gcdot ... with irreducible factors.
std::vector<PackedWord> gd_decompose(const PackedWord& w);

using WordMultiset = std::map<Letters, long long>;

WordMultiset shuffle(const Letters& u, const Letters& v);
WordMultiset half_shuffle_left(const Letters& u, const Letters& v);   // last letter from u
WordMultiset half_shuffle_right(const Letters& u, const Letters& v);  // last letter from v
WordMultiset shifted_shuffle(const PackedWord& u, const PackedWord& v);

// Value shuffles: all packed w = u'.v' with pack(u') = u, pack(v') = v, plus
// the stated constraint on letter sets and maxima.  Results are sets.
std::vector<PackedWord> valshuffle(const PackedWord& u, const PackedWord& v);
std::vector<PackedWord> valcshuffle(const PackedWord& u, const PackedWord& v);
std::vector<PackedWord> valprecM(const PackedWord& u, const PackedWord& v);
std::vector<PackedWord> valsuccM(const PackedWord& u, const PackedWord& v);
std::vector<PackedWord> valprec(const PackedWord& u, const PackedWord& v);
std::vector<PackedWord> valsucc(const PackedWord& u, const PackedWord& v);

// u <=* v iff std(u) = std(v) and equal letters of u are equal in v.
bool leq_star(const PackedWord& u, const PackedWord& v);

std::vector<std::set<int>> to_ordered_set_partition(const PackedWord& w);

// All packed words of size n in lexicographic order.
const std::vector<PackedWord>& enumerate_packed_words(int n);

}  // namespace wqsym
