#include <doctest.h>

#include "wqsym/packed_word.hpp"

using namespace wqsym;

namespace {

PackedWord W(const std::string& s) { return PackedWord::parse(s); }

std::set<std::string> names(const std::vector<PackedWord>& ws) {
  std::set<std::string> s;
  for (const auto& w : ws) s.insert(w.str());
  return s;
}

// Independent oracle: value shuffles by scanning all packed words of the
// right length and filtering on the defining conditions.
std::set<std::string> val_oracle(const PackedWord& u, const PackedWord& v,
                                 bool disjoint, int max_cmp /* -1 lt, 0 le, 1 gt, 2 any */) {
  std::set<std::string> out;
  const int n = u.size() + v.size();
  for (const PackedWord& w : enumerate_packed_words(n)) {
    Letters a(w.letters().begin(), w.letters().begin() + u.size());
    Letters b(w.letters().begin() + u.size(), w.letters().end());
    if (u.size() > 0 && pack(a) != u) continue;
    if (v.size() > 0 && pack(b) != v) continue;
    if (u.size() == 0 && !a.empty()) continue;
    if (v.size() == 0 && !b.empty()) continue;
    std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    if (disjoint) {
      bool overlap = false;
      for (int x : sa)
        if (sb.count(x)) overlap = true;
      if (overlap) continue;
    }
    const int ma = sa.empty() ? 0 : *sa.rbegin();
    const int mb = sb.empty() ? 0 : *sb.rbegin();
    if (max_cmp == -1 && !(ma < mb)) continue;
    if (max_cmp == 0 && !(ma <= mb)) continue;
    if (max_cmp == 1 && !(ma > mb)) continue;
    out.insert(w.str());
  }
  return out;
}

}  // namespace

TEST_CASE("pack basics") {
  CHECK(pack({4, 1, 5, 2, 1, 4, 2}) == W("3142132"));
  CHECK(pack({}) == PackedWord{});
  CHECK(pack({7, 7, 7}) == W("111"));
  CHECK_THROWS_AS(pack({0, 1}), std::invalid_argument);
  // idempotence on all small words
  for (int n = 0; n <= 4; ++n)
    for (const PackedWord& w : enumerate_packed_words(n)) {
      CHECK(pack(w.letters()) == w);
      CHECK(standardize(w.letters()) == standardize(pack(w.letters()).letters()));
    }
}

TEST_CASE("standardize") {
  CHECK(standardize({4, 1, 5, 2, 1, 4, 2}) == W("5173264"));
  CHECK(standardize({3, 1, 4, 2, 1, 3, 2}) == W("5173264"));
  CHECK(standardize({1, 2, 3}) == W("123"));
}

TEST_CASE("word text form") {
  CHECK(W("3142132").str() == "3142132");
  CHECK(PackedWord{}.str() == "e");
  CHECK(PackedWord::parse("1,2,10,3,4,5,6,7,8,9,10").max() == 10);
  CHECK(PackedWord::parse("1,2,10,3,4,5,6,7,8,9,10").str() == "1,2,10,3,4,5,6,7,8,9,10");
  CHECK_THROWS(PackedWord::parse("10"));   // digits only below ten
  CHECK_THROWS(PackedWord::parse("13"));   // not packed
}

TEST_CASE("shifted concatenations") {
  CHECK(shifted_concat_left(W("1121"), W("3112")) == W("44543112"));
  CHECK(shifted_concat_right(W("1121"), W("3112")) == W("11215334"));
  CHECK(shifted_concat_left(PackedWord{}, W("211")) == W("211"));
  CHECK(shifted_concat_right(W("211"), PackedWord{}) == W("211"));
  CHECK(shifted_concat_left(W("1"), W("1")) == W("21"));
  CHECK(shifted_concat_right(W("1"), W("1")) == W("12"));
  // associativity, and packedness is preserved by construction
  for (const PackedWord& a : enumerate_packed_words(2))
    for (const PackedWord& b : enumerate_packed_words(1))
      for (const PackedWord& c : enumerate_packed_words(2)) {
        CHECK(shifted_concat_left(shifted_concat_left(a, b), c) ==
              shifted_concat_left(a, shifted_concat_left(b, c)));
        CHECK(shifted_concat_right(shifted_concat_right(a, b), c) ==
              shifted_concat_right(a, shifted_concat_right(b, c)));
      }
}

TEST_CASE("restrictions") {
  CHECK(restrict_le(W("212536434"), 4) == W("2123434"));
  CHECK(pack(restrict_gt(W("212536434"), 4)) == W("12"));
  const PackedWord u = W("3142132");
  CHECK(restrict_le(u, u.max()) == u);
}

TEST_CASE("global descents") {
  CHECK(global_descents(W("54664312")) == std::vector<int>({5, 6}));
  CHECK(global_descents(W("21331")).empty());
  CHECK(global_descents(W("321")) == std::vector<int>({1, 2}));
  CHECK(is_irreducible(W("21331")));
  CHECK(!is_irreducible(W("54664312")));
  CHECK(is_irreducible(W("1")));
  CHECK(!is_irreducible(PackedWord{}));
  // brute-force oracle over all cut points
  for (int n = 1; n <= 5; ++n)
    for (const PackedWord& w : enumerate_packed_words(n)) {
      std::vector<int> expected;
      for (int c = 1; c <= n - 1; ++c) {
        int lo = 100, hi = 0;
        for (int i = 1; i <= c; ++i) lo = std::min(lo, w[i]);
        for (int i = c + 1; i <= n; ++i) hi = std::max(hi, w[i]);
        if (lo > hi) expected.push_back(c);
      }
      CHECK(global_descents(w) == expected);
    }
}

TEST_CASE("global descent factorization") {
  CHECK(gd_decompose(W("54664312")) ==
        std::vector<PackedWord>({W("21331"), W("1"), W("12")}));
  CHECK(gd_decompose(W("54321")) ==
        std::vector<PackedWord>(5, W("1")));
  CHECK(gd_decompose(PackedWord{}).empty());
  for (int n = 0; n <= 5; ++n)
    for (const PackedWord& w : enumerate_packed_words(n)) {
      PackedWord back;
      bool first = true;
      for (const PackedWord& f : gd_decompose(w)) {
        CHECK(is_irreducible(f));
        back = first ? f : shifted_concat_left(back, f);
        first = false;
      }
      CHECK(back == w);
    }
}

TEST_CASE("shuffles") {
  WordMultiset s = shifted_shuffle(W("12"), W("11"));
  CHECK(s.size() == 6);
  CHECK(s.at({1, 2, 3, 3}) == 1);
  CHECK(s.at({3, 3, 1, 2}) == 1);
  // halves partition the shuffle, multiplicities included
  for (const PackedWord& u : enumerate_packed_words(2))
    for (const PackedWord& v : enumerate_packed_words(2)) {
      WordMultiset all = shuffle(u.letters(), v.letters());
      WordMultiset l = half_shuffle_left(u.letters(), v.letters());
      for (const auto& [w, c] : half_shuffle_right(u.letters(), v.letters())) l[w] += c;
      CHECK(all == l);
      long long total = 0;
      for (const auto& [w, c] : all) total += c;
      CHECK(total == 6);  // C(4, 2)
    }
  CHECK(shuffle({1, 1}, {1}).at({1, 1, 1}) == 3);
}

TEST_CASE("value shuffles against the enumeration oracle") {
  CHECK(names(valcshuffle(W("12"), W("11"))) ==
        std::set<std::string>({"1233", "1322", "2311"}));
  CHECK(names(valprec(W("12"), W("11"))) == std::set<std::string>({"1322", "2311"}));
  CHECK(names(valsucc(W("12"), W("11"))) == std::set<std::string>({"1233"}));
  CHECK(names(valprecM(W("12"), W("11"))) ==
        std::set<std::string>({"1211", "1322", "2311"}));
  CHECK(names(valsuccM(W("12"), W("11"))) == std::set<std::string>({"1222", "1233"}));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; i + j <= 6 && j <= 3; ++j)
      for (const PackedWord& u : enumerate_packed_words(i))
        for (const PackedWord& v : enumerate_packed_words(j)) {
          CHECK(names(valshuffle(u, v)) == val_oracle(u, v, false, 2));
          CHECK(names(valcshuffle(u, v)) == val_oracle(u, v, true, 2));
          CHECK(names(valprecM(u, v)) == val_oracle(u, v, false, 1));
          CHECK(names(valsuccM(u, v)) == val_oracle(u, v, false, 0));
          CHECK(names(valprec(u, v)) == val_oracle(u, v, true, 1));
          CHECK(names(valsucc(u, v)) == val_oracle(u, v, true, -1));
          // halves partition the full operations
          auto prec = valprecM(u, v);
          auto succ = valsuccM(u, v);
          std::vector<PackedWord> joined = prec;
          joined.insert(joined.end(), succ.begin(), succ.end());
          std::sort(joined.begin(), joined.end());
          CHECK(joined == valshuffle(u, v));
        }
}

TEST_CASE("refinement order") {
  CHECK(leq_star(W("112"), W("123")) == false);
  CHECK(leq_star(W("123"), W("112")));
  CHECK(leq_star(W("112"), W("111")));
  CHECK(leq_star(W("132"), W("121")));
  CHECK(leq_star(W("121"), W("132")) == false);
  for (const PackedWord& w : enumerate_packed_words(3)) CHECK(leq_star(w, w));
  // partial order: antisymmetry and transitivity at size 3
  const auto& words = enumerate_packed_words(3);
  for (const PackedWord& a : words)
    for (const PackedWord& b : words) {
      if (leq_star(a, b) && leq_star(b, a)) CHECK(a == b);
      for (const PackedWord& c : words)
        if (leq_star(a, b) && leq_star(b, c)) CHECK(leq_star(a, c));
    }
  // connected components of the size-3 comparability graph: 4+2+2+2+2+1
  std::map<std::string, int> comp;
  int ncomp = 0;
  for (const PackedWord& a : words)
    if (!comp.count(a.str())) {
      std::vector<PackedWord> stack{a};
      comp[a.str()] = ncomp;
      while (!stack.empty()) {
        PackedWord x = stack.back();
        stack.pop_back();
        for (const PackedWord& b : words)
          if (!comp.count(b.str()) && (leq_star(x, b) || leq_star(b, x))) {
            comp[b.str()] = ncomp;
            stack.push_back(b);
          }
      }
      ++ncomp;
    }
  std::map<int, int> sizes;
  for (const auto& [w, c] : comp) sizes[c]++;
  std::multiset<int> size_set;
  for (const auto& [c, s] : sizes) size_set.insert(s);
  CHECK(size_set == std::multiset<int>({1, 2, 2, 2, 2, 4}));
}

TEST_CASE("ordered set partitions") {
  auto osp = to_ordered_set_partition(W("121"));
  CHECK(osp == std::vector<std::set<int>>({{1, 3}, {2}}));
  CHECK(to_ordered_set_partition(W("113223")) ==
        std::vector<std::set<int>>({{1, 2}, {4, 5}, {3, 6}}));
  CHECK(to_ordered_set_partition(W("1")) == std::vector<std::set<int>>({{1}}));
}

TEST_CASE("enumeration") {
  CHECK(names(enumerate_packed_words(2)) == std::set<std::string>({"11", "12", "21"}));
  CHECK(enumerate_packed_words(0).size() == 1);
  CHECK(enumerate_packed_words(0).front().empty());
  CHECK(enumerate_packed_words(5).size() == 541);
  // lexicographic order within the grade
  const auto& w3 = enumerate_packed_words(3);
  for (size_t i = 1; i < w3.size(); ++i) CHECK(w3[i - 1].letters() < w3[i].letters());
}
