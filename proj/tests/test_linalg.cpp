#include <doctest.h>

#include <random>

#include "wqsym/linalg.hpp"
#include "wqsym/packed_word.hpp"

using namespace wqsym;

TEST_CASE("linear combinations") {
  LinComb<int> x(BasisTag::R, 1);
  LinComb<int> y(BasisTag::R, 1, -1);
  CHECK((x + y).is_zero());
  LinComb<int> two = Int(2) * x;
  CHECK(two.coeff(1) == 2);
  LinComb<int> z(BasisTag::R, 2, 3);
  auto t = tensor(x, z);
  CHECK(t.coeff({1, 2}) == 3);
  LinComb<int> other(BasisTag::Q, 1);
  CHECK_THROWS_AS(x + other, std::invalid_argument);
}

TEST_CASE("identity and zero matrices") {
  std::vector<LinComb<int>> id;
  std::vector<int> order = {1, 2, 3};
  for (int k : order) id.emplace_back(BasisTag::R, k);
  ExactMatrix m = assemble_matrix(id, order);
  CHECK(m.rank() == 3);
  CHECK(m.kernel_basis().empty());
  ExactMatrix empty = assemble_matrix(std::vector<LinComb<int>>{}, order);
  CHECK(empty.rank() == 0);
  CHECK(empty.cols() == 0);
}

TEST_CASE("rank nullity and solve on random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int R = 1 + trial % 6, C = 1 + (trial * 7) % 6;
    ExactMatrix m(R, C);
    for (int r = 0; r < R; ++r)
      for (int c = 0; c < C; ++c) m.at(r, c) = dist(rng);
    const int rk = m.rank();
    CHECK(rk + static_cast<int>(m.kernel_basis().size()) == C);
    for (const auto& v : m.kernel_basis())
      for (int r = 0; r < R; ++r) {
        Rat s = 0;
        for (int c = 0; c < C; ++c) s += m.at(r, c) * v[c];
        CHECK(s == 0);
      }
    // solve against a known image
    std::vector<Rat> x(C);
    for (int c = 0; c < C; ++c) x[c] = dist(rng);
    std::vector<Rat> b(R, 0);
    for (int r = 0; r < R; ++r)
      for (int c = 0; c < C; ++c) b[r] += m.at(r, c) * x[c];
    auto sol = m.solve(b);
    REQUIRE(sol.has_value());
    for (int r = 0; r < R; ++r) {
      Rat s = 0;
      for (int c = 0; c < C; ++c) s += m.at(r, c) * (*sol)[c];
      CHECK(s == b[r]);
    }
  }
}

TEST_CASE("solve reports inconsistency") {
  ExactMatrix m(2, 1);
  m.at(0, 0) = 1;
  m.at(1, 0) = 1;
  auto sol = m.solve({Rat(1), Rat(2)});
  CHECK(!sol.has_value());
}

TEST_CASE("row order does not change rank or kernel span") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const int R = 4, C = 5;
    ExactMatrix m(R, C);
    for (int r = 0; r < R; ++r)
      for (int c = 0; c < C; ++c) m.at(r, c) = dist(rng);
    ExactMatrix p(R, C);
    std::vector<int> perm = {2, 0, 3, 1};
    for (int r = 0; r < R; ++r)
      for (int c = 0; c < C; ++c) p.at(r, c) = m.at(perm[r], c);
    CHECK(m.rank() == p.rank());
    // mutual containment of kernels: each kernel vector of one is killed by
    // the other (same row space)
    for (const auto& v : m.kernel_basis())
      for (int r = 0; r < R; ++r) {
        Rat s = 0;
        for (int c = 0; c < C; ++c) s += p.at(r, c) * v[c];
        CHECK(s == 0);
      }
    for (const auto& v : p.kernel_basis())
      for (int r = 0; r < R; ++r) {
        Rat s = 0;
        for (int c = 0; c < C; ++c) s += m.at(r, c) * v[c];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("exactness with rational entries") {
  ExactMatrix m(2, 2);
  m.at(0, 0) = Rat(1, 3);
  m.at(0, 1) = Rat(1, 6);
  m.at(1, 0) = Rat(2, 3);
  m.at(1, 1) = Rat(1, 3);
  CHECK(m.rank() == 1);
  auto k = m.kernel_basis();
  REQUIRE(k.size() == 1);
  CHECK(Rat(1, 3) * k[0][0] + Rat(1, 6) * k[0][1] == 0);
}
