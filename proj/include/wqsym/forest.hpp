// Biplane trees and forests, and the bijections with packed words.
#pragma once

#include <variant>

#include "wqsym/factorization.hpp"
#include "wqsym/packed_word.hpp"

namespace wqsym {

enum class Scheme : uint8_t {
  RedSkeleton,   // Word labels (red-irreducible), no right children
  RedPacked,     // MaxPositions labels
  BlueSkeleton,  // Word labels (blue-irreducible), no right children
  BluePacked,    // LastLetterLabel labels
  RedBlue,       // Word labels (red-and-blue-irreducible), red left / blue right
  BlueRed,       // same labels, blue left / red right
};

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

using TreeLabel = std::variant<PackedWord, MaxPositions, LastLetterLabel>;

struct BiplaneTree {
  TreeLabel label;
  std::vector<BiplaneTree> left;
  std::vector<BiplaneTree> right;

  friend bool operator==(const BiplaneTree& a, const BiplaneTree& b);
  friend bool operator<(const BiplaneTree& a, const BiplaneTree& b);
};

struct BiplaneForest {
  Scheme scheme = Scheme::RedPacked;
  std::vector<BiplaneTree> trees;

  friend bool operator==(const BiplaneForest& a, const BiplaneForest& b);
  friend bool operator<(const BiplaneForest& a, const BiplaneForest& b);
};

int tree_weight(const BiplaneTree& t, Scheme scheme);
int forest_weight(const BiplaneForest& f);
int tree_size(const BiplaneTree& t);  // number of nodes

// Skeletons: recursive global-descent + red/blue factorization, word labels.
BiplaneForest to_red_skeleton(const PackedWord& w);
PackedWord from_red_skeleton(const BiplaneForest& f);
BiplaneForest to_blue_skeleton(const PackedWord& w);
PackedWord from_blue_skeleton(const BiplaneForest& f);

// Packed (unfolded) forests: position / last-letter labels.
BiplaneForest to_red_forest(const PackedWord& w);
PackedWord from_red_forest(const BiplaneForest& f);
BiplaneForest to_blue_forest(const PackedWord& w);
PackedWord from_blue_forest(const BiplaneForest& f);

// Skeleton <-> packed conversions (label-wise phi/psi decomposition).
BiplaneForest skeleton_unfold(const BiplaneForest& skeleton);
BiplaneForest skeleton_fold(const BiplaneForest& packed);

// Bicolored forests; orientation is RedBlue or BlueRed.
BiplaneForest to_bicolored(const PackedWord& w, Scheme orientation);
PackedWord from_bicolored(const BiplaneForest& f);

bool validate(const BiplaneForest& f);

// Index sets of the totally primitive bases: packed trees whose root has an
// empty left forest, one per red- (resp. blue-) irreducible word of size n.
std::vector<BiplaneForest> enumerate_red_trees_with_empty_left(int n);
std::vector<BiplaneForest> enumerate_blue_trees_with_empty_left(int n);

// Unlabeled shape enumeration and the closed-form count C(3n,n)/(2n+1).
std::vector<std::string> enumerate_unlabeled_biplane_forests(int n);

}  // namespace wqsym
