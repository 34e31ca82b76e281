// Insertion operators and the red / blue / bicolored factorization schemes.
#pragma once

#include "wqsym/packed_word.hpp"

namespace wqsym {

// Strictly increasing list of positions of the maximal letter (1-based).
using MaxPositions = std::vector<int>;

enum class Mark : uint8_t { New, Repeat };  // New = fresh value, Repeat = existing

struct LastLetterLabel {
  int value = 1;
  Mark mark = Mark::New;
  auto operator<=>(const LastLetterLabel&) const = default;
  std::string str() const;
};

// phi_I: insert occurrences of a new maximum at positions I.  Requires
// I nonempty, strictly increasing, I.back() <= |w| + |I|.
PackedWord insert_maxima(const PackedWord& w, const MaxPositions& I);
// Inverse of phi on nonempty words: W = phi_I(w).
std::pair<MaxPositions, PackedWord> decompose_maxima(const PackedWord& W);

// u ins v (v nonempty): with v = phi_I(v'), returns phi_{I+|u|}(u gcdot v').
PackedWord ins(const PackedWord& u, const PackedWord& v);

// psi_{i^alpha}: append letter i at the end, as a fresh value (New: letters
// >= i are shifted up, needs 1 <= i <= max+1) or as a repeat (needs i <= max).
PackedWord append_letter(const PackedWord& w, const LastLetterLabel& label);
// Inverse of psi on nonempty words.
std::pair<LastLetterLabel, PackedWord> decompose_last(const PackedWord& W);

// u insl v (v nonempty): with v = psi_{i^a}(v'), returns psi_{(i+max u)^a}(v' gcdot u).
PackedWord insl(const PackedWord& u, const PackedWord& v);

// Unique factorization w = u ins v with |u| maximal (w irreducible); the
// right factor is red-irreducible.
std::pair<PackedWord, PackedWord> red_factorize(const PackedWord& w);
bool is_red_irreducible(const PackedWord& w);

// Unique factorization w = u insl v with |u| maximal (w irreducible); the
// right factor is blue-irreducible.
std::pair<PackedWord, PackedWord> blue_factorize(const PackedWord& w);
bool is_blue_irreducible(const PackedWord& w);

// w = x ins (y insl z) with both factorizations nested; z is red- and
// blue-irreducible.
struct Bifactorization {
  PackedWord outer;  // x for red-blue, y for blue-red
  PackedWord inner;  // y for red-blue, x for blue-red
  PackedWord core;   // z
};
Bifactorization red_blue_factorize(const PackedWord& w);
Bifactorization blue_red_factorize(const PackedWord& w);

}  // namespace wqsym
