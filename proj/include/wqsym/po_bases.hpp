// The linear maps on R and Q induced by the insertion operators, the brace
// bracket, and the bases of (totally) primitive elements indexed by packed
// forests with their expansions.
#pragma once

#include "wqsym/algebra.hpp"
#include "wqsym/forest.hpp"

namespace wqsym {

// Linear extension of phi_I on the R basis (zero when phi is undefined).
Elem phi_linear(const MaxPositions& I, const Elem& x);
// Linear extension of psi_{i^alpha} on the Q basis (zero when out of range).
Elem psi_linear(const LastLetterLabel& label, const Elem& x);

// Projectors keeping basis words whose maxima sit exactly at I, resp. whose
// last letter is i with the given repetition mark.
Elem tau_red(const MaxPositions& I, const Elem& x);
Elem tau_blue(const LastLetterLabel& label, const Elem& x);

// <p_1,...,p_{n-1}; p_n> built from the half products of the arguments'
// basis.  args must be nonempty; a single argument is returned unchanged.
Elem brace(const std::vector<Elem>& args);

// Elements indexed by red-packed (P, in the R basis) and blue-packed
// (O, in the Q basis) forests.
Elem p_element(const BiplaneForest& f);
Elem o_element(const BiplaneForest& f);

bool is_primitive(const Elem& x);
bool is_totally_primitive(const Elem& x);

using ForestComb = LinComb<BiplaneForest>;

// Expansion of an R- (resp. Q-) element over the P (resp. O) family of its
// degree.  Throws when degrees are mixed.
ForestComb expand_in_p(const Elem& x);
ForestComb expand_in_o(const Elem& x);

// Change-of-basis matrix: entry(r, c) = coefficient of word_order[r] in the
// P (resp. O) element of the forest of word_order[c].
ExactMatrix basis_matrix(BasisTag which, const std::vector<PackedWord>& word_order);

}  // namespace wqsym
