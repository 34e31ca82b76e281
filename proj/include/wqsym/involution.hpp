// Mirror and color-swap transforms of bicolored forests, the induced
// involution on packed words, and the isomorphism between the two sides.
#pragma once

#include "wqsym/po_bases.hpp"

namespace wqsym {

// Reverses tree order at every level and swaps the two child forests at
// nodes with label != 1; flips the orientation.
BiplaneForest mirror(const BiplaneForest& f);

// Recolors every edge, preserving shape, order and labels; flips the
// orientation.
BiplaneForest color_swap(const BiplaneForest& f);

// The involution on packed words obtained by color-swapping the bicolored
// forest; exchanges the two irreducibility flavors.
PackedWord involution_hat(const PackedWord& w);

// Red-packed <-> blue-packed forests: relabel the skeleton by the involution,
// keeping the tree order.
BiplaneForest hat_red_to_blue(const BiplaneForest& red_packed);
BiplaneForest hat_blue_to_red(const BiplaneForest& blue_packed);

// The isomorphism determined by P_f -> O_{hat(f)} and its inverse.
Elem sigma(const Elem& r_side);
Elem sigma_inverse(const Elem& q_side);

// entry(r, c) = coefficient of R_{order[r]} in sigma_inverse(Q_{order[c]}).
ExactMatrix sigma_matrix(const std::vector<PackedWord>& word_order);

}  // namespace wqsym
