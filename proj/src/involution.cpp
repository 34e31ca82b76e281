#include "wqsym/involution.hpp"

#include <algorithm>

namespace wqsym {

namespace {

Scheme flipped(Scheme s) {
  if (s == Scheme::RedBlue) return Scheme::BlueRed;
  if (s == Scheme::BlueRed) return Scheme::RedBlue;
  throw std::invalid_argument("expected a bicolored forest");
}

bool is_single_one(const TreeLabel& label) {
  const auto* w = std::get_if<PackedWord>(&label);
  return w && w->size() == 1;
}

std::vector<BiplaneTree> mirror_trees(const std::vector<BiplaneTree>& trees);

BiplaneTree mirror_tree(const BiplaneTree& t) {
  if (is_single_one(t.label))
    return BiplaneTree{t.label, mirror_trees(t.left), {}};
  return BiplaneTree{t.label, mirror_trees(t.right), mirror_trees(t.left)};
}

std::vector<BiplaneTree> mirror_trees(const std::vector<BiplaneTree>& trees) {
  std::vector<BiplaneTree> out;
  for (auto it = trees.rbegin(); it != trees.rend(); ++it)
    out.push_back(mirror_tree(*it));
  return out;
}

BiplaneTree swap_tree(const BiplaneTree& t) {
  std::vector<BiplaneTree> left, right;
  for (const auto& c : t.left) left.push_back(swap_tree(c));
  for (const auto& c : t.right) right.push_back(swap_tree(c));
  return BiplaneTree{t.label, std::move(left), std::move(right)};
}

}  // namespace

BiplaneForest mirror(const BiplaneForest& f) {
  return {flipped(f.scheme), mirror_trees(f.trees)};
}

BiplaneForest color_swap(const BiplaneForest& f) {
  BiplaneForest out{flipped(f.scheme), {}};
  for (const auto& t : f.trees) out.trees.push_back(swap_tree(t));
  return out;
}

PackedWord involution_hat(const PackedWord& w) {
  return from_bicolored(color_swap(to_bicolored(w, Scheme::BlueRed)));
}

namespace {

BiplaneForest relabel_skeleton(const BiplaneForest& skel, Scheme target) {
  BiplaneForest out{target, {}};
  auto rec = [&](auto&& self, const BiplaneTree& t) -> BiplaneTree {
    BiplaneTree r;
    r.label = TreeLabel{involution_hat(std::get<PackedWord>(t.label))};
    for (const auto& c : t.left) r.left.push_back(self(self, c));
    return r;
  };
  for (const auto& t : skel.trees) out.trees.push_back(rec(rec, t));
  return out;
}

}  // namespace

BiplaneForest hat_red_to_blue(const BiplaneForest& red_packed) {
  if (red_packed.scheme != Scheme::RedPacked)
    throw std::invalid_argument("hat_red_to_blue expects a red-packed forest");
  BiplaneForest skel = skeleton_fold(red_packed);
  return skeleton_unfold(relabel_skeleton(skel, Scheme::BlueSkeleton));
}

BiplaneForest hat_blue_to_red(const BiplaneForest& blue_packed) {
  if (blue_packed.scheme != Scheme::BluePacked)
    throw std::invalid_argument("hat_blue_to_red expects a blue-packed forest");
  BiplaneForest skel = skeleton_fold(blue_packed);
  return skeleton_unfold(relabel_skeleton(skel, Scheme::RedSkeleton));
}

Elem sigma(const Elem& r_side) {
  Elem out(BasisTag::Q);
  const ForestComb expansion = expand_in_p(r_side);
  for (const auto& [f, c] : expansion.terms()) {
    Elem t = o_element(hat_red_to_blue(f));
    t *= c;
    out += t;
  }
  return out;
}

Elem sigma_inverse(const Elem& q_side) {
  Elem out(BasisTag::R);
  const ForestComb expansion = expand_in_o(q_side);
  for (const auto& [f, c] : expansion.terms()) {
    Elem t = p_element(hat_blue_to_red(f));
    t *= c;
    out += t;
  }
  return out;
}

ExactMatrix sigma_matrix(const std::vector<PackedWord>& word_order) {
  std::vector<Elem> images;
  for (const PackedWord& v : word_order)
    images.push_back(sigma_inverse(Elem(BasisTag::Q, v)));
  return assemble_matrix(images, word_order);
}

}  // namespace wqsym
