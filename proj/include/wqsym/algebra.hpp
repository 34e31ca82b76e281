// The bases M, Q, R with their half products / half coproducts, the Hopf
// (co)product, the duality pairing and the bidendriform axiom checks.
#pragma once

#include <array>

#include "wqsym/linalg.hpp"
#include "wqsym/packed_word.hpp"

namespace wqsym {

using Elem = LinComb<PackedWord>;
using WordPair = std::pair<PackedWord, PackedWord>;
using WordTriple = std::array<PackedWord, 3>;
using Tensor2 = LinComb<WordPair>;
using Tensor3 = LinComb<WordTriple>;

inline Elem basis_elem(BasisTag tag, const PackedWord& w) { return Elem(tag, w); }

// Half products.  M splits the value shuffle by max origin (overlap allowed),
// Q by max origin without overlap, R by the last-letter origin of the shifted
// shuffle.  Operands must have positive degree.
Elem half_prec(const Elem& x, const Elem& y);
Elem half_succ(const Elem& x, const Elem& y);
Elem full_product(const Elem& x, const Elem& y);

// Half coproducts.  M and Q split values at i (left part keeps letters <= i);
// R deconcatenates at support-disjoint positions, the maxima staying left for
// prec and right for succ.
Tensor2 copr_prec(const Elem& x);
Tensor2 copr_succ(const Elem& x);
Tensor2 reduced_coproduct(const Elem& x);

// Change of basis between M and Q: Q_u = sum of M_v over u <=* v.
Elem q_to_m(const PackedWord& u);                // Q_u expanded in M
Elem m_to_q(const PackedWord& u);                // M_u expanded in Q
Elem convert(const Elem& x, BasisTag target);    // between M and Q

// <R_u, Q_v> = delta_{u,v}, extended bilinearly.
Int pairing(const Elem& r_side, const Elem& q_side);
Int pairing2(const Tensor2& r_side, const Tensor2& q_side);

// Dendriform axioms for a triple in one basis (Q or R structure).
bool check_dendriform(const Elem& a, const Elem& b, const Elem& c);
// Codendriform axioms for a single element.
bool check_codendriform(const Elem& a);
// Half-coproduct / half-product compatibilities for a pair.
bool check_bidendriform(const Elem& a, const Elem& b);

}  // namespace wqsym
