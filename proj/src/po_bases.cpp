#include "wqsym/po_bases.hpp"

#include <mutex>

namespace wqsym {

Elem phi_linear(const MaxPositions& I, const Elem& x) {
  if (!x.terms().empty() && x.basis() != BasisTag::R)
    throw std::invalid_argument("phi acts on the R basis");
  Elem out(BasisTag::R);
  const int p = static_cast<int>(I.size());
  for (const auto& [w, c] : x.terms())
    if (I.back() <= w.size() + p) out.add_term(insert_maxima(w, I), c);
  return out;
}

Elem psi_linear(const LastLetterLabel& label, const Elem& x) {
  if (!x.terms().empty() && x.basis() != BasisTag::Q)
    throw std::invalid_argument("psi acts on the Q basis");
  Elem out(BasisTag::Q);
  for (const auto& [w, c] : x.terms()) {
    const int bound = label.mark == Mark::New ? w.max() + 1 : w.max();
    if (label.value >= 1 && label.value <= bound)
      out.add_term(append_letter(w, label), c);
  }
  return out;
}

Elem tau_red(const MaxPositions& I, const Elem& x) {
  if (!x.terms().empty() && x.basis() != BasisTag::R)
    throw std::invalid_argument("tau_red acts on the R basis");
  Elem out(BasisTag::R);
  for (const auto& [w, c] : x.terms()) {
    MaxPositions pos;
    for (int i = 1; i <= w.size(); ++i)
      if (w[i] == w.max()) pos.push_back(i);
    if (pos == I) out.add_term(w, c);
  }
  return out;
}

Elem tau_blue(const LastLetterLabel& label, const Elem& x) {
  if (!x.terms().empty() && x.basis() != BasisTag::Q)
    throw std::invalid_argument("tau_blue acts on the Q basis");
  Elem out(BasisTag::Q);
  for (const auto& [w, c] : x.terms()) {
    if (w.empty() || w[w.size()] != label.value) continue;
    bool repeated = false;
    for (int i = 1; i < w.size(); ++i)
      if (w[i] == label.value) repeated = true;
    if ((label.mark == Mark::Repeat) == repeated) out.add_term(w, c);
  }
  return out;
}

Elem brace(const std::vector<Elem>& args) {
  if (args.empty()) throw std::invalid_argument("brace: no arguments");
  const int n = static_cast<int>(args.size());
  if (n == 1) return args.front();
  Elem out(args.front().basis());
  for (int i = 0; i <= n - 1; ++i) {
    // left = p_1 prec (p_2 prec (... prec p_i)), right-nested
    Elem left;
    for (int j = i - 1; j >= 0; --j)
      left = (j == i - 1) ? args[j] : half_prec(args[j], left);
    // right = ((p_{i+1} succ p_{i+2}) succ ...) succ p_{n-1}, left-nested
    Elem right;
    for (int j = i; j <= n - 2; ++j)
      right = (j == i) ? args[j] : half_succ(right, args[j]);
    Elem term = args[n - 1];
    if (i > 0) term = half_succ(left, term);
    if (i < n - 1) term = half_prec(term, right);
    if ((n - 1 - i) % 2 == 1) term *= Int(-1);
    out += term;
  }
  return out;
}

namespace {

Elem p_tree(const BiplaneTree& t);

Elem p_forest_trees(const std::vector<BiplaneTree>& trees) {
  // P_{t_1..t_k} = P_{t_k} prec (P_{t_{k-1}} prec (... prec P_{t_1}))
  if (trees.empty()) return Elem(BasisTag::R, PackedWord{});
  Elem acc = p_tree(trees.front());
  for (size_t j = 1; j < trees.size(); ++j) acc = half_prec(p_tree(trees[j]), acc);
  return acc;
}

Elem p_tree(const BiplaneTree& t) {
  static std::map<BiplaneTree, Elem> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
  }
  Elem root = phi_linear(std::get<MaxPositions>(t.label), p_forest_trees(t.right));
  Elem result;
  if (t.left.empty()) {
    result = root;
  } else {
    std::vector<Elem> args;
    for (const auto& c : t.left) args.push_back(p_tree(c));
    args.push_back(root);
    result = brace(args);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(t, std::move(result)).first->second;
}

Elem o_tree(const BiplaneTree& t);

Elem o_forest_trees(const std::vector<BiplaneTree>& trees) {
  if (trees.empty()) return Elem(BasisTag::Q, PackedWord{});
  Elem acc = o_tree(trees.front());
  for (size_t j = 1; j < trees.size(); ++j) acc = half_prec(o_tree(trees[j]), acc);
  return acc;
}

Elem o_tree(const BiplaneTree& t) {
  static std::map<BiplaneTree, Elem> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
  }
  Elem root = psi_linear(std::get<LastLetterLabel>(t.label), o_forest_trees(t.right));
  Elem result;
  if (t.left.empty()) {
    result = root;
  } else {
    std::vector<Elem> args;
    for (const auto& c : t.left) args.push_back(o_tree(c));
    args.push_back(root);
    result = brace(args);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(t, std::move(result)).first->second;
}

}  // namespace

Elem p_element(const BiplaneForest& f) {
  if (f.scheme != Scheme::RedPacked)
    throw std::invalid_argument("p_element expects a red-packed forest");
  if (!validate(f)) throw std::invalid_argument("p_element: invalid forest");
  return p_forest_trees(f.trees);
}

Elem o_element(const BiplaneForest& f) {
  if (f.scheme != Scheme::BluePacked)
    throw std::invalid_argument("o_element expects a blue-packed forest");
  if (!validate(f)) throw std::invalid_argument("o_element: invalid forest");
  return o_forest_trees(f.trees);
}

bool is_primitive(const Elem& x) { return reduced_coproduct(x).is_zero(); }

bool is_totally_primitive(const Elem& x) {
  return copr_prec(x).is_zero() && copr_succ(x).is_zero();
}

namespace {

int element_degree(const Elem& x) {
  int n = -1;
  for (const auto& [w, c] : x.terms()) {
    if (n < 0) n = w.size();
    if (w.size() != n) throw std::invalid_argument("element mixes degrees");
  }
  return n;
}

struct DegreeBasis {
  std::vector<BiplaneForest> forests;  // aligned with the word enumeration
  ExactMatrix matrix{0, 0};
};

const DegreeBasis& degree_basis(BasisTag which, int n) {
  static std::map<std::pair<int, int>, DegreeBasis> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(which), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  DegreeBasis db;
  std::vector<Elem> images;
  for (const PackedWord& w : enumerate_packed_words(n)) {
    BiplaneForest f = which == BasisTag::P ? to_red_forest(w) : to_blue_forest(w);
    images.push_back(which == BasisTag::P ? p_element(f) : o_element(f));
    db.forests.push_back(std::move(f));
  }
  db.matrix = assemble_matrix(images, enumerate_packed_words(n));
  return cache.emplace(key, std::move(db)).first->second;
}

ForestComb expand_generic(BasisTag which, const Elem& x) {
  const int n = element_degree(x);
  ForestComb out(which);
  if (n <= 0) return out;
  const DegreeBasis& db = degree_basis(which, n);
  const auto& words = enumerate_packed_words(n);
  std::vector<Rat> b(words.size());
  for (size_t i = 0; i < words.size(); ++i) b[i] = Rat(x.coeff(words[i]));
  auto sol = db.matrix.solve(b);
  if (!sol) throw std::runtime_error("expansion failed: inconsistent system");
  for (size_t i = 0; i < sol->size(); ++i) {
    if ((*sol)[i] == 0) continue;
    if (denominator((*sol)[i]) != 1)
      throw std::runtime_error("expansion produced a non-integer coefficient");
    out.add_term(db.forests[i], numerator((*sol)[i]));
  }
  return out;
}

}  // namespace

ForestComb expand_in_p(const Elem& x) {
  if (!x.terms().empty() && x.basis() != BasisTag::R)
    throw std::invalid_argument("expand_in_p expects an R element");
  return expand_generic(BasisTag::P, x);
}

ForestComb expand_in_o(const Elem& x) {
  if (!x.terms().empty() && x.basis() != BasisTag::Q)
    throw std::invalid_argument("expand_in_o expects a Q element");
  return expand_generic(BasisTag::O, x);
}

ExactMatrix basis_matrix(BasisTag which, const std::vector<PackedWord>& word_order) {
  if (which != BasisTag::P && which != BasisTag::O)
    throw std::invalid_argument("basis_matrix: expected P or O");
  std::vector<Elem> images;
  for (const PackedWord& w : word_order) {
    if (which == BasisTag::P)
      images.push_back(p_element(to_red_forest(w)));
    else
      images.push_back(o_element(to_blue_forest(w)));
  }
  return assemble_matrix(images, word_order);
}

}  // namespace wqsym
