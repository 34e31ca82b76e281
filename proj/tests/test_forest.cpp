#include <doctest.h>

#include <nlohmann/json.hpp>

#include "wqsym/forest.hpp"
#include "wqsym/json_io.hpp"

using namespace wqsym;

namespace {
PackedWord W(const std::string& s) { return PackedWord::parse(s); }

BiplaneTree node(TreeLabel l, std::vector<BiplaneTree> left = {},
                 std::vector<BiplaneTree> right = {}) {
  return BiplaneTree{std::move(l), std::move(left), std::move(right)};
}
}  // namespace

TEST_CASE("red skeleton example") {
  BiplaneForest f = to_red_skeleton(W("876795343912"));
  BiplaneForest want{Scheme::RedSkeleton,
                     {node(TreeLabel{W("431214")},
                           {node(TreeLabel{W("1")}), node(TreeLabel{W("212")})}),
                      node(TreeLabel{W("1")}, {node(TreeLabel{W("1")})})}};
  CHECK(f == want);
  CHECK(from_red_skeleton(f) == W("876795343912"));
  CHECK(validate(f));
}

TEST_CASE("blue skeleton example") {
  BiplaneForest f = to_blue_skeleton(W("8967647523314"));
  REQUIRE(f.trees.size() == 2);
  CHECK(std::get<PackedWord>(f.trees[0].label) == W("3431421"));
  CHECK(f.trees[0].left == to_blue_skeleton(W("2331")).trees);
  CHECK(std::get<PackedWord>(f.trees[1].label) == W("1"));
  REQUIRE(f.trees[1].left.size() == 1);
  CHECK(std::get<PackedWord>(f.trees[1].left[0].label) == W("1"));
  CHECK(from_blue_skeleton(f) == W("8967647523314"));
}

TEST_CASE("packed forests of small words") {
  CHECK(to_red_forest(W("212")) ==
        BiplaneForest{Scheme::RedPacked,
                      {node(TreeLabel{MaxPositions{1, 3}}, {},
                            {node(TreeLabel{MaxPositions{1}})})}});
  CHECK(to_red_forest(W("11")) ==
        BiplaneForest{Scheme::RedPacked, {node(TreeLabel{MaxPositions{1, 2}})}});
  CHECK(to_red_forest(W("321")) ==
        BiplaneForest{Scheme::RedPacked,
                      {node(TreeLabel{MaxPositions{1}}), node(TreeLabel{MaxPositions{1}}),
                       node(TreeLabel{MaxPositions{1}})}});
  BiplaneTree leaf = node(TreeLabel{LastLetterLabel{1, Mark::New}});
  CHECK(to_blue_forest(W("212")) ==
        BiplaneForest{Scheme::BluePacked,
                      {node(TreeLabel{LastLetterLabel{1, Mark::Repeat}}, {leaf}, {leaf})}});
}

TEST_CASE("weights") {
  CHECK(tree_weight(to_red_forest(W("212")).trees[0], Scheme::RedPacked) == 3);
  CHECK(forest_weight(to_red_forest(W("212"))) == 3);
  CHECK(forest_weight(BiplaneForest{Scheme::RedPacked, {}}) == 0);
  CHECK(forest_weight(to_blue_forest(W("8967647523314"))) == 9);
  for (int n = 0; n <= 6; ++n)
    for (const PackedWord& w : enumerate_packed_words(n)) {
      CHECK(forest_weight(to_red_forest(w)) == w.size());
      CHECK(forest_weight(to_blue_forest(w)) == w.max());
      CHECK(forest_weight(to_bicolored(w, Scheme::RedBlue)) == w.size());
      CHECK(forest_weight(to_bicolored(w, Scheme::BlueRed)) == w.size());
    }
}

TEST_CASE("bijections roundtrip exhaustively") {
  for (int n = 0; n <= 6; ++n) {
    std::set<BiplaneForest> reds;
    for (const PackedWord& w : enumerate_packed_words(n)) {
      CHECK(from_red_skeleton(to_red_skeleton(w)) == w);
      CHECK(from_blue_skeleton(to_blue_skeleton(w)) == w);
      CHECK(from_red_forest(to_red_forest(w)) == w);
      CHECK(from_blue_forest(to_blue_forest(w)) == w);
      CHECK(from_bicolored(to_bicolored(w, Scheme::RedBlue)) == w);
      CHECK(from_bicolored(to_bicolored(w, Scheme::BlueRed)) == w);
      reds.insert(to_red_forest(w));
    }
    CHECK(reds.size() == enumerate_packed_words(n).size());
  }
}

TEST_CASE("fold and unfold") {
  CHECK(skeleton_unfold(to_red_skeleton(W("212"))) == to_red_forest(W("212")));
  BiplaneForest single{Scheme::RedSkeleton, {node(TreeLabel{W("1")})}};
  CHECK(skeleton_unfold(single) ==
        BiplaneForest{Scheme::RedPacked, {node(TreeLabel{MaxPositions{1}})}});
  BiplaneForest single_blue{Scheme::BlueSkeleton, {node(TreeLabel{W("1")})}};
  CHECK(skeleton_unfold(single_blue) ==
        BiplaneForest{Scheme::BluePacked,
                      {node(TreeLabel{LastLetterLabel{1, Mark::New}})}});
  for (int n = 0; n <= 5; ++n)
    for (const PackedWord& w : enumerate_packed_words(n)) {
      CHECK(skeleton_unfold(to_red_skeleton(w)) == to_red_forest(w));
      CHECK(skeleton_fold(to_red_forest(w)) == to_red_skeleton(w));
      CHECK(skeleton_unfold(to_blue_skeleton(w)) == to_blue_forest(w));
      CHECK(skeleton_fold(to_blue_forest(w)) == to_blue_skeleton(w));
    }
}

TEST_CASE("bicolored gallery entries") {
  CHECK(to_bicolored(W("212"), Scheme::RedBlue) ==
        BiplaneForest{Scheme::RedBlue,
                      {node(TreeLabel{W("11")}, {}, {node(TreeLabel{W("1")})})}});
  CHECK(to_bicolored(W("132"), Scheme::RedBlue) ==
        BiplaneForest{Scheme::RedBlue, {node(TreeLabel{W("132")})}});
  CHECK(to_bicolored(W("11"), Scheme::RedBlue) ==
        BiplaneForest{Scheme::RedBlue, {node(TreeLabel{W("11")})}});
}

TEST_CASE("validation rejects malformed trees") {
  // a lone node must carry the initial segment of positions
  BiplaneForest bad{Scheme::RedPacked, {node(TreeLabel{MaxPositions{2}})}};
  CHECK(!validate(bad));
  // a fresh unit label cannot have a right child
  BiplaneForest bad_blue{
      Scheme::BluePacked,
      {node(TreeLabel{LastLetterLabel{1, Mark::New}}, {},
            {node(TreeLabel{LastLetterLabel{1, Mark::New}})})}};
  CHECK(!validate(bad_blue));
  // skeleton labels must be irreducible of the right flavor
  BiplaneForest bad_skel{Scheme::RedSkeleton, {node(TreeLabel{W("1233")})}};
  CHECK(!validate(bad_skel));
  for (int n = 0; n <= 5; ++n)
    for (const PackedWord& w : enumerate_packed_words(n)) {
      CHECK(validate(to_red_forest(w)));
      CHECK(validate(to_blue_forest(w)));
      CHECK(validate(to_red_skeleton(w)));
      CHECK(validate(to_blue_skeleton(w)));
      CHECK(validate(to_bicolored(w, Scheme::RedBlue)));
      CHECK(validate(to_bicolored(w, Scheme::BlueRed)));
    }
}

TEST_CASE("index sets of the totally primitive families") {
  CHECK(enumerate_red_trees_with_empty_left(1).size() == 1);
  CHECK(enumerate_red_trees_with_empty_left(2).size() == 1);
  CHECK(enumerate_red_trees_with_empty_left(2).front() ==
        BiplaneForest{Scheme::RedPacked, {node(TreeLabel{MaxPositions{1, 2}})}});
  CHECK(enumerate_red_trees_with_empty_left(3).size() == 4);
  CHECK(enumerate_red_trees_with_empty_left(4).size() == 28);
  CHECK(enumerate_blue_trees_with_empty_left(3).size() == 4);
  CHECK(enumerate_blue_trees_with_empty_left(4).size() == 28);
  for (const BiplaneForest& f : enumerate_red_trees_with_empty_left(4)) {
    REQUIRE(f.trees.size() == 1);
    CHECK(f.trees[0].left.empty());
  }
}

TEST_CASE("unlabeled shape counts") {
  const long long expected[] = {1, 1, 3, 12, 55, 273};
  for (int n = 0; n <= 5; ++n)
    CHECK(static_cast<long long>(enumerate_unlabeled_biplane_forests(n).size()) ==
          expected[n]);
}

TEST_CASE("json roundtrip and dot export") {
  for (const char* s : {"212", "876795343912", "1"}) {
    for (Scheme scheme : {Scheme::RedPacked, Scheme::BluePacked, Scheme::RedBlue}) {
      BiplaneForest f = scheme == Scheme::RedPacked ? to_red_forest(W(s))
                        : scheme == Scheme::BluePacked ? to_blue_forest(W(s))
                                                       : to_bicolored(W(s), scheme);
      CHECK(forest_from_json(forest_to_json(f)) == f);
    }
  }
  const std::string dot = forest_to_dot(to_bicolored(W("212"), Scheme::RedBlue));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("color=blue") != std::string::npos);
  CHECK(dot.find("label=\"11\"") != std::string::npos);
}
