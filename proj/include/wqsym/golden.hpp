// Golden reference tables for the verification suites: canonical word
// orderings, change-of-basis matrices, involution tables and paired basis
// expansions at small sizes.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wqsym::golden {

// Word orderings used by the reference matrices (size 3 and 4).
const std::vector<std::string>& fixture_order3();
const std::vector<std::string>& fixture_order4();

// entry[r][c] = coefficient of the r-th word in the column element.
const std::vector<std::vector<int>>& matr_pr3();  // P -> R, size 3
const std::vector<std::vector<int>>& matr_qr3();  // sigma^{-1}(Q) -> R, size 3
const std::vector<std::vector<int>>& matr_pr4();  // P -> R, size 4
const std::vector<std::vector<int>>& matr_oq4();  // O -> Q, size 4
const std::vector<std::vector<int>>& matr_qr4();  // sigma^{-1}(Q) -> R, size 4

// The involution on all 75 packed words of size 4, and on the 44 size-5
// words that are red- but not blue-irreducible.
const std::vector<std::pair<std::string, std::string>>& involution_table4();
const std::vector<std::pair<std::string, std::string>>& involution_table5_red_not_blue();

struct SignedWord {
  int sign;
  std::string word;
};

// One row per word of size <= 3: the P element of the word's forest expanded
// over R, and the O element of the partner word's forest expanded over Q.
struct AutomorphismRow {
  std::string p_word;                 // indexes the red-side forest
  std::string o_word;                 // its involution partner, blue side
  std::vector<SignedWord> r_terms;    // P_{F(p_word)} in the R basis
  std::vector<SignedWord> q_terms;    // O_{F(o_word)} in the Q basis
};

const std::vector<AutomorphismRow>& automorphism_table();

}  // namespace wqsym::golden
