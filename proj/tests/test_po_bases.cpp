#include <doctest.h>

#include "wqsym/golden.hpp"
#include "wqsym/po_bases.hpp"

using namespace wqsym;

namespace {
PackedWord W(const std::string& s) { return PackedWord::parse(s); }
Elem E(BasisTag tag, std::initializer_list<std::pair<int, const char*>> ts) {
  Elem e(tag);
  for (const auto& [c, w] : ts) e.add_term(PackedWord::parse(w), c);
  return e;
}
Elem Rw(const char* s) { return Elem(BasisTag::R, W(s)); }
Elem Qw(const char* s) { return Elem(BasisTag::Q, W(s)); }
}  // namespace

TEST_CASE("linear insertion maps") {
  CHECK(phi_linear({1, 3}, Rw("1")) == Rw("212"));
  CHECK(phi_linear({5}, Rw("1")).is_zero());
  CHECK(phi_linear({1}, Elem(BasisTag::R, PackedWord{})) == Rw("1"));
  CHECK(psi_linear({2, Mark::Repeat}, Qw("12")) == Qw("122"));
  CHECK(psi_linear({2, Mark::Repeat}, Qw("11")).is_zero());
  CHECK(psi_linear({1, Mark::New}, Elem(BasisTag::Q, PackedWord{})) == Qw("1"));
}

TEST_CASE("projectors") {
  CHECK(tau_red({1, 3}, Rw("212")) == Rw("212"));
  CHECK(tau_red({1, 2}, Rw("212")).is_zero());
  CHECK(tau_blue({2, Mark::Repeat}, Qw("122")) == Qw("122"));
  CHECK(tau_blue({2, Mark::New}, Qw("122")).is_zero());
}

TEST_CASE("projectors are idempotent and orthogonal up to degree 5") {
  for (int n = 1; n <= 5; ++n) {
    std::set<MaxPositions> reds;
    std::set<LastLetterLabel> blues;
    for (const PackedWord& w : enumerate_packed_words(n)) {
      MaxPositions pos;
      for (int i = 1; i <= w.size(); ++i)
        if (w[i] == w.max()) pos.push_back(i);
      reds.insert(pos);
      blues.insert(decompose_last(w).first);
    }
    for (const PackedWord& w : enumerate_packed_words(n)) {
      MaxPositions pos;
      for (int i = 1; i <= w.size(); ++i)
        if (w[i] == w.max()) pos.push_back(i);
      const Elem rw(BasisTag::R, w);
      for (const auto& I : reds) {
        const Elem t = tau_red(I, rw);
        CHECK(tau_red(I, t) == t);
        CHECK(t.is_zero() == (pos != I));
        for (const auto& J : reds)
          if (J != I) CHECK(tau_red(J, t).is_zero());
      }
      const LastLetterLabel mine = decompose_last(w).first;
      const Elem qw(BasisTag::Q, w);
      for (const auto& L : blues) {
        const Elem t = tau_blue(L, qw);
        CHECK(tau_blue(L, t) == t);
        CHECK(t.is_zero() == (!(L == mine)));
        for (const auto& L2 : blues)
          if (!(L2 == L)) CHECK(tau_blue(L2, t).is_zero());
      }
    }
  }
}

TEST_CASE("brace bracket") {
  CHECK(brace({Rw("1")}) == Rw("1"));
  CHECK(brace({E(BasisTag::R, {{1, "12"}, {-1, "21"}}), Rw("1")}) ==
        E(BasisTag::R, {{1, "123"}, {-1, "213"}, {-1, "231"}, {1, "321"}}));
  CHECK(brace({Rw("1"), Rw("1"), Rw("1")}) ==
        E(BasisTag::R, {{-1, "132"}, {1, "213"}, {1, "231"}, {-1, "312"}}));
}

TEST_CASE("P and O elements") {
  CHECK(p_element(to_red_forest(W("43412"))) ==
        E(BasisTag::R, {{1, "14342"}, {1, "41342"}, {1, "43142"}, {1, "43412"},
                        {-1, "24341"}, {-1, "42341"}, {-1, "43241"}, {-1, "43421"}}));
  CHECK(o_element(to_blue_forest(W("34122"))) ==
        E(BasisTag::Q, {{1, "34122"}, {1, "24133"}, {1, "14233"}, {1, "43212"},
                        {1, "42313"}, {1, "41323"}, {-1, "34212"}, {-1, "24313"},
                        {-1, "14323"}, {-1, "43122"}, {-1, "42133"}, {-1, "41233"}}));
  CHECK(p_element(to_red_forest(W("1"))) == Rw("1"));
  CHECK(o_element(to_blue_forest(W("1"))) == Qw("1"));
  CHECK(p_element(to_red_forest(W("212"))) == Rw("212"));
  BiplaneForest bad{Scheme::RedPacked,
                    {BiplaneTree{TreeLabel{MaxPositions{2}}, {}, {}}}};
  CHECK_THROWS_AS(p_element(bad), std::invalid_argument);
}

TEST_CASE("primitivity") {
  CHECK(is_totally_primitive(Rw("1")));
  CHECK(is_totally_primitive(p_element(to_red_forest(W("212")))));
  for (const BiplaneForest& f : enumerate_red_trees_with_empty_left(3))
    CHECK(is_totally_primitive(p_element(f)));
  for (const BiplaneForest& f : enumerate_red_trees_with_empty_left(4))
    CHECK(is_totally_primitive(p_element(f)));
  for (const BiplaneForest& f : enumerate_blue_trees_with_empty_left(4))
    CHECK(is_totally_primitive(o_element(f)));
  // the tree of 213 gives a primitive element that is not totally primitive
  const Elem p213 = p_element(to_red_forest(W("213")));
  CHECK(is_primitive(p213));
  CHECK(!is_totally_primitive(p213));
  CHECK(!copr_prec(p213).is_zero());
}

TEST_CASE("expansions") {
  const ForestComb e212 = expand_in_p(Rw("212"));
  REQUIRE(e212.support_size() == 1);
  CHECK(e212.terms().begin()->first == to_red_forest(W("212")));
  CHECK(e212.terms().begin()->second == 1);
  const ForestComb e21 = expand_in_p(Rw("21"));
  REQUIRE(e21.support_size() == 1);
  CHECK(e21.terms().begin()->first == to_red_forest(W("21")));
  // expanding and multiplying back is the identity
  for (const PackedWord& w : enumerate_packed_words(3)) {
    Elem back(BasisTag::R);
    const ForestComb ep = expand_in_p(Elem(BasisTag::R, w));
    for (const auto& [f, c] : ep.terms()) {
      Elem t = p_element(f);
      t *= c;
      back += t;
    }
    CHECK(back == Elem(BasisTag::R, w));
    Elem backq(BasisTag::Q);
    const ForestComb eo = expand_in_o(Elem(BasisTag::Q, w));
    for (const auto& [f, c] : eo.terms()) {
      Elem t = o_element(f);
      t *= c;
      backq += t;
    }
    CHECK(backq == Elem(BasisTag::Q, w));
  }
  CHECK_THROWS_AS(expand_in_p(E(BasisTag::R, {{1, "1"}, {1, "12"}})),
                  std::invalid_argument);
}

TEST_CASE("matrix of the family at size 3") {
  std::vector<PackedWord> order;
  for (const auto& s : golden::fixture_order3()) order.push_back(W(s));
  const ExactMatrix m = basis_matrix(BasisTag::P, order);
  const auto& want = golden::matr_pr3();
  REQUIRE(m.rows() == 13);
  for (int r = 0; r < 13; ++r)
    for (int c = 0; c < 13; ++c) CHECK(m.at(r, c) == want[r][c]);
  // the column of 122 as an independent cross-check
  const Elem p122 = p_element(to_red_forest(W("122")));
  CHECK(p122 == E(BasisTag::R, {{1, "122"}, {1, "212"}, {-1, "121"}, {-1, "211"}}));
}

TEST_CASE("family ranks at small sizes") {
  for (int n = 1; n <= 3; ++n) {
    const auto& words = enumerate_packed_words(n);
    CHECK(basis_matrix(BasisTag::P, words).rank() == static_cast<int>(words.size()));
    CHECK(basis_matrix(BasisTag::O, words).rank() == static_cast<int>(words.size()));
  }
}
