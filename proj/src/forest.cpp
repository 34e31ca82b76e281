#include "wqsym/forest.hpp"

#include <algorithm>

namespace wqsym {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::RedSkeleton: return "red-skeleton";
    case Scheme::RedPacked: return "red-packed";
    case Scheme::BlueSkeleton: return "blue-skeleton";
    case Scheme::BluePacked: return "blue-packed";
    case Scheme::RedBlue: return "red-blue";
    case Scheme::BlueRed: return "blue-red";
  }
  return "?";
}

Scheme scheme_from_name(const std::string& name) {
  for (Scheme s : {Scheme::RedSkeleton, Scheme::RedPacked, Scheme::BlueSkeleton,
                   Scheme::BluePacked, Scheme::RedBlue, Scheme::BlueRed})
    if (scheme_name(s) == name) return s;
  throw std::invalid_argument("unknown scheme: " + name);
}

namespace {

int cmp_tree(const BiplaneTree& a, const BiplaneTree& b);

int cmp_trees(const std::vector<BiplaneTree>& a, const std::vector<BiplaneTree>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (int c = cmp_tree(a[i], b[i]); c != 0) return c;
  return 0;
}

int cmp_tree(const BiplaneTree& a, const BiplaneTree& b) {
  if (a.label != b.label) return a.label < b.label ? -1 : 1;
  if (int c = cmp_trees(a.left, b.left); c != 0) return c;
  return cmp_trees(a.right, b.right);
}

}  // namespace

bool operator==(const BiplaneTree& a, const BiplaneTree& b) { return cmp_tree(a, b) == 0; }
bool operator<(const BiplaneTree& a, const BiplaneTree& b) { return cmp_tree(a, b) < 0; }

bool operator==(const BiplaneForest& a, const BiplaneForest& b) {
  return a.scheme == b.scheme && cmp_trees(a.trees, b.trees) == 0;
}

bool operator<(const BiplaneForest& a, const BiplaneForest& b) {
  if (a.scheme != b.scheme) return a.scheme < b.scheme;
  return cmp_trees(a.trees, b.trees) < 0;
}

int tree_weight(const BiplaneTree& t, Scheme scheme) {
  int sub = 0;
  for (const auto& c : t.left) sub += tree_weight(c, scheme);
  for (const auto& c : t.right) sub += tree_weight(c, scheme);
  switch (scheme) {
    case Scheme::RedPacked:
      return static_cast<int>(std::get<MaxPositions>(t.label).size()) + sub;
    case Scheme::BluePacked:
      return (std::get<LastLetterLabel>(t.label).mark == Mark::New ? 1 : 0) + sub;
    default:
      return std::get<PackedWord>(t.label).size() + sub;
  }
}

int forest_weight(const BiplaneForest& f) {
  int w = 0;
  for (const auto& t : f.trees) w += tree_weight(t, f.scheme);
  return w;
}

int tree_size(const BiplaneTree& t) {
  int n = 1;
  for (const auto& c : t.left) n += tree_size(c);
  for (const auto& c : t.right) n += tree_size(c);
  return n;
}

namespace {

BiplaneTree red_skeleton_tree(const PackedWord& w);

std::vector<BiplaneTree> red_skeleton_trees(const PackedWord& w) {
  std::vector<BiplaneTree> out;
  for (const PackedWord& f : gd_decompose(w)) out.push_back(red_skeleton_tree(f));
  return out;
}

BiplaneTree red_skeleton_tree(const PackedWord& w) {
  auto [u, v] = red_factorize(w);
  return BiplaneTree{TreeLabel{v}, red_skeleton_trees(u), {}};
}

BiplaneTree blue_skeleton_tree(const PackedWord& w);

std::vector<BiplaneTree> blue_skeleton_trees(const PackedWord& w) {
  std::vector<BiplaneTree> out;
  auto factors = gd_decompose(w);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.push_back(blue_skeleton_tree(*it));
  return out;
}

BiplaneTree blue_skeleton_tree(const PackedWord& w) {
  auto [u, v] = blue_factorize(w);
  return BiplaneTree{TreeLabel{v}, blue_skeleton_trees(u), {}};
}

PackedWord from_red_skeleton_tree(const BiplaneTree& t);

PackedWord from_red_skeleton_trees(const std::vector<BiplaneTree>& trees) {
  PackedWord acc;  // fold gcdot left-to-right
  bool first = true;
  for (const auto& t : trees) {
    PackedWord w = from_red_skeleton_tree(t);
    acc = first ? w : shifted_concat_left(acc, w);
    first = false;
  }
  return acc;
}

PackedWord from_red_skeleton_tree(const BiplaneTree& t) {
  return ins(from_red_skeleton_trees(t.left), std::get<PackedWord>(t.label));
}

PackedWord from_blue_skeleton_tree(const BiplaneTree& t);

PackedWord from_blue_skeleton_trees(const std::vector<BiplaneTree>& trees) {
  PackedWord acc;  // reversed: t_k gcdot ... gcdot t_1
  bool first = true;
  for (auto it = trees.rbegin(); it != trees.rend(); ++it) {
    PackedWord w = from_blue_skeleton_tree(*it);
    acc = first ? w : shifted_concat_left(acc, w);
    first = false;
  }
  return acc;
}

PackedWord from_blue_skeleton_tree(const BiplaneTree& t) {
  return insl(from_blue_skeleton_trees(t.left), std::get<PackedWord>(t.label));
}

BiplaneTree red_packed_tree(const PackedWord& w);

std::vector<BiplaneTree> red_packed_trees(const PackedWord& w) {
  std::vector<BiplaneTree> out;
  for (const PackedWord& f : gd_decompose(w)) out.push_back(red_packed_tree(f));
  return out;
}

BiplaneTree red_packed_tree(const PackedWord& w) {
  auto [u, v] = red_factorize(w);
  auto [I, vp] = decompose_maxima(v);
  return BiplaneTree{TreeLabel{I}, red_packed_trees(u), red_packed_trees(vp)};
}

BiplaneTree blue_packed_tree(const PackedWord& w);

std::vector<BiplaneTree> blue_packed_trees(const PackedWord& w) {
  std::vector<BiplaneTree> out;
  auto factors = gd_decompose(w);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.push_back(blue_packed_tree(*it));
  return out;
}

BiplaneTree blue_packed_tree(const PackedWord& w) {
  auto [u, v] = blue_factorize(w);
  auto [label, vp] = decompose_last(v);
  return BiplaneTree{TreeLabel{label}, blue_packed_trees(u), blue_packed_trees(vp)};
}

PackedWord from_red_packed_tree(const BiplaneTree& t);

PackedWord from_red_packed_trees(const std::vector<BiplaneTree>& trees) {
  PackedWord acc;
  bool first = true;
  for (const auto& t : trees) {
    PackedWord w = from_red_packed_tree(t);
    acc = first ? w : shifted_concat_left(acc, w);
    first = false;
  }
  return acc;
}

PackedWord from_red_packed_tree(const BiplaneTree& t) {
  PackedWord vp = from_red_packed_trees(t.right);
  PackedWord v = insert_maxima(vp, std::get<MaxPositions>(t.label));
  return ins(from_red_packed_trees(t.left), v);
}

PackedWord from_blue_packed_tree(const BiplaneTree& t);

PackedWord from_blue_packed_trees(const std::vector<BiplaneTree>& trees) {
  PackedWord acc;
  bool first = true;
  for (auto it = trees.rbegin(); it != trees.rend(); ++it) {
    PackedWord w = from_blue_packed_tree(*it);
    acc = first ? w : shifted_concat_left(acc, w);
    first = false;
  }
  return acc;
}

PackedWord from_blue_packed_tree(const BiplaneTree& t) {
  PackedWord vp = from_blue_packed_trees(t.right);
  PackedWord v = append_letter(vp, std::get<LastLetterLabel>(t.label));
  return insl(from_blue_packed_trees(t.left), v);
}

BiplaneTree bicolored_tree(const PackedWord& w, Scheme orientation);

std::vector<BiplaneTree> bicolored_trees(const PackedWord& w, Scheme orientation) {
  std::vector<BiplaneTree> out;
  auto factors = gd_decompose(w);
  if (orientation == Scheme::BlueRed) std::reverse(factors.begin(), factors.end());
  for (const PackedWord& f : factors) out.push_back(bicolored_tree(f, orientation));
  return out;
}

BiplaneTree bicolored_tree(const PackedWord& w, Scheme orientation) {
  if (orientation == Scheme::RedBlue) {
    Bifactorization b = red_blue_factorize(w);
    return BiplaneTree{TreeLabel{b.core}, bicolored_trees(b.outer, orientation),
                       bicolored_trees(b.inner, orientation)};
  }
  Bifactorization b = blue_red_factorize(w);
  return BiplaneTree{TreeLabel{b.core}, bicolored_trees(b.outer, orientation),
                     bicolored_trees(b.inner, orientation)};
}

PackedWord from_bicolored_tree(const BiplaneTree& t, Scheme orientation);

PackedWord from_bicolored_trees(const std::vector<BiplaneTree>& trees,
                                Scheme orientation) {
  PackedWord acc;
  bool first = true;
  if (orientation == Scheme::RedBlue) {
    for (const auto& t : trees) {
      PackedWord w = from_bicolored_tree(t, orientation);
      acc = first ? w : shifted_concat_left(acc, w);
      first = false;
    }
  } else {
    for (auto it = trees.rbegin(); it != trees.rend(); ++it) {
      PackedWord w = from_bicolored_tree(*it, orientation);
      acc = first ? w : shifted_concat_left(acc, w);
      first = false;
    }
  }
  return acc;
}

PackedWord from_bicolored_tree(const BiplaneTree& t, Scheme orientation) {
  const PackedWord& c = std::get<PackedWord>(t.label);
  PackedWord a = from_bicolored_trees(t.left, orientation);
  PackedWord b = from_bicolored_trees(t.right, orientation);
  if (orientation == Scheme::RedBlue) return ins(a, insl(b, c));
  return insl(a, ins(b, c));
}

}  // namespace

BiplaneForest to_red_skeleton(const PackedWord& w) {
  return {Scheme::RedSkeleton, red_skeleton_trees(w)};
}
PackedWord from_red_skeleton(const BiplaneForest& f) {
  return from_red_skeleton_trees(f.trees);
}
BiplaneForest to_blue_skeleton(const PackedWord& w) {
  return {Scheme::BlueSkeleton, blue_skeleton_trees(w)};
}
PackedWord from_blue_skeleton(const BiplaneForest& f) {
  return from_blue_skeleton_trees(f.trees);
}
BiplaneForest to_red_forest(const PackedWord& w) {
  return {Scheme::RedPacked, red_packed_trees(w)};
}
PackedWord from_red_forest(const BiplaneForest& f) {
  return from_red_packed_trees(f.trees);
}
BiplaneForest to_blue_forest(const PackedWord& w) {
  return {Scheme::BluePacked, blue_packed_trees(w)};
}
PackedWord from_blue_forest(const BiplaneForest& f) {
  return from_blue_packed_trees(f.trees);
}

namespace {

BiplaneTree unfold_red_tree(const BiplaneTree& t) {
  auto [I, vp] = decompose_maxima(std::get<PackedWord>(t.label));
  std::vector<BiplaneTree> left;
  for (const auto& c : t.left) left.push_back(unfold_red_tree(c));
  return BiplaneTree{TreeLabel{I}, std::move(left), red_packed_trees(vp)};
}

BiplaneTree unfold_blue_tree(const BiplaneTree& t) {
  auto [label, vp] = decompose_last(std::get<PackedWord>(t.label));
  std::vector<BiplaneTree> left;
  for (const auto& c : t.left) left.push_back(unfold_blue_tree(c));
  return BiplaneTree{TreeLabel{label}, std::move(left), blue_packed_trees(vp)};
}

BiplaneTree fold_red_tree(const BiplaneTree& t) {
  PackedWord v = insert_maxima(from_red_packed_trees(t.right),
                               std::get<MaxPositions>(t.label));
  std::vector<BiplaneTree> left;
  for (const auto& c : t.left) left.push_back(fold_red_tree(c));
  return BiplaneTree{TreeLabel{v}, std::move(left), {}};
}

BiplaneTree fold_blue_tree(const BiplaneTree& t) {
  PackedWord v = append_letter(from_blue_packed_trees(t.right),
                               std::get<LastLetterLabel>(t.label));
  std::vector<BiplaneTree> left;
  for (const auto& c : t.left) left.push_back(fold_blue_tree(c));
  return BiplaneTree{TreeLabel{v}, std::move(left), {}};
}

}  // namespace

BiplaneForest skeleton_unfold(const BiplaneForest& skeleton) {
  BiplaneForest out;
  if (skeleton.scheme == Scheme::RedSkeleton) {
    out.scheme = Scheme::RedPacked;
    for (const auto& t : skeleton.trees) out.trees.push_back(unfold_red_tree(t));
  } else if (skeleton.scheme == Scheme::BlueSkeleton) {
    out.scheme = Scheme::BluePacked;
    for (const auto& t : skeleton.trees) out.trees.push_back(unfold_blue_tree(t));
  } else {
    throw std::invalid_argument("skeleton_unfold: expected a skeleton forest");
  }
  return out;
}

BiplaneForest skeleton_fold(const BiplaneForest& packed) {
  BiplaneForest out;
  if (packed.scheme == Scheme::RedPacked) {
    out.scheme = Scheme::RedSkeleton;
    for (const auto& t : packed.trees) out.trees.push_back(fold_red_tree(t));
  } else if (packed.scheme == Scheme::BluePacked) {
    out.scheme = Scheme::BlueSkeleton;
    for (const auto& t : packed.trees) out.trees.push_back(fold_blue_tree(t));
  } else {
    throw std::invalid_argument("skeleton_fold: expected a packed forest");
  }
  return out;
}

BiplaneForest to_bicolored(const PackedWord& w, Scheme orientation) {
  if (orientation != Scheme::RedBlue && orientation != Scheme::BlueRed)
    throw std::invalid_argument("to_bicolored: orientation must be red-blue or blue-red");
  return {orientation, bicolored_trees(w, orientation)};
}

PackedWord from_bicolored(const BiplaneForest& f) {
  if (f.scheme != Scheme::RedBlue && f.scheme != Scheme::BlueRed)
    throw std::invalid_argument("from_bicolored: not a bicolored forest");
  return from_bicolored_trees(f.trees, f.scheme);
}

namespace {

bool validate_tree(const BiplaneTree& t, Scheme s) {
  for (const auto& c : t.left)
    if (!validate_tree(c, s)) return false;
  for (const auto& c : t.right)
    if (!validate_tree(c, s)) return false;
  switch (s) {
    case Scheme::RedSkeleton: {
      const auto* w = std::get_if<PackedWord>(&t.label);
      return w && t.right.empty() && is_red_irreducible(*w);
    }
    case Scheme::BlueSkeleton: {
      const auto* w = std::get_if<PackedWord>(&t.label);
      return w && t.right.empty() && is_blue_irreducible(*w);
    }
    case Scheme::RedPacked: {
      const auto* I = std::get_if<MaxPositions>(&t.label);
      if (!I || I->empty()) return false;
      for (size_t k = 1; k < I->size(); ++k)
        if ((*I)[k - 1] >= (*I)[k]) return false;
      const int p = static_cast<int>(I->size());
      if (t.right.empty()) {
        for (int k = 0; k < p; ++k)
          if ((*I)[k] != k + 1) return false;
        return true;
      }
      int wr = 0;
      for (const auto& c : t.right) wr += tree_weight(c, s);
      const int i1 = I->front(), ip = I->back();
      if (!(1 <= i1 && i1 <= tree_weight(t.right.front(), s))) return false;
      const int slack = p + wr + 1 - ip;
      return 1 <= slack && slack <= tree_weight(t.right.back(), s);
    }
    case Scheme::BluePacked: {
      const auto* L = std::get_if<LastLetterLabel>(&t.label);
      if (!L) return false;
      if (t.right.empty())
        return L->value == 1 && L->mark == Mark::New;
      if (t.right.size() != 1) return false;
      if (L->value == 1 && L->mark == Mark::New) return false;
      return 1 <= L->value && L->value <= tree_weight(t.right.front(), s);
    }
    case Scheme::RedBlue:
    case Scheme::BlueRed: {
      const auto* w = std::get_if<PackedWord>(&t.label);
      if (!w) return false;
      if (w->size() == 1 && w->max() == 1) return t.right.empty();
      return is_red_irreducible(*w) && is_blue_irreducible(*w);
    }
  }
  return false;
}

}  // namespace

bool validate(const BiplaneForest& f) {
  for (const auto& t : f.trees)
    if (!validate_tree(t, f.scheme)) return false;
  return true;
}

std::vector<BiplaneForest> enumerate_red_trees_with_empty_left(int n) {
  std::vector<BiplaneForest> out;
  for (const PackedWord& w : enumerate_packed_words(n))
    if (is_red_irreducible(w)) out.push_back(to_red_forest(w));
  return out;
}

std::vector<BiplaneForest> enumerate_blue_trees_with_empty_left(int n) {
  std::vector<BiplaneForest> out;
  for (const PackedWord& w : enumerate_packed_words(n))
    if (is_blue_irreducible(w)) out.push_back(to_blue_forest(w));
  return out;
}

namespace {

// Shapes encoded as nested parentheses: tree = "(" left-forest "|" right-forest ")".
std::vector<std::string> unlabeled_trees(int n);

std::vector<std::string> unlabeled_forests(int n) {
  static std::map<int, std::vector<std::string>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::string> out;
  if (n == 0) {
    out.push_back("");
  } else {
    for (int k = 1; k <= n; ++k)
      for (const auto& head : unlabeled_trees(k))
        for (const auto& tail : unlabeled_forests(n - k)) out.push_back(head + tail);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  cache[n] = out;
  return out;
}

std::vector<std::string> unlabeled_trees(int n) {
  std::vector<std::string> out;
  if (n <= 0) return out;
  for (int l = 0; l <= n - 1; ++l)
    for (const auto& fl : unlabeled_forests(l))
      for (const auto& fr : unlabeled_forests(n - 1 - l))
        out.push_back("(" + fl + "|" + fr + ")");
  return out;
}

}  // namespace

std::vector<std::string> enumerate_unlabeled_biplane_forests(int n) {
  return unlabeled_forests(n);
}

}  // namespace wqsym
