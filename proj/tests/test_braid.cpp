#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <queue>
#include <set>

#include "hurwitz/braid.hpp"
#include "hurwitz/error.hpp"
#include "support.hpp"

using namespace hurwitz;
using namespace fixtures;

namespace {

TupleState state_of(const CartanMatrix& c) { return {reflections_from_cartan(c).refs}; }

// Hurwitz orbit of a tuple of permutations of {0..3}, composed as maps
// (p * q)(x) = p(q(x)). Independent of the matrix code.
using Perm = std::array<int, 4>;
Perm compose(const Perm& p, const Perm& q) {
  Perm r{};
  for (int x = 0; x < 4; ++x) r[x] = p[q[x]];
  return r;
}
Perm invert(const Perm& p) {
  Perm r{};
  for (int x = 0; x < 4; ++x) r[p[x]] = x;
  return r;
}
std::size_t permutation_orbit_size(const std::vector<Perm>& start) {
  std::set<std::vector<Perm>> seen{start};
  std::queue<std::vector<Perm>> todo;
  todo.push(start);
  while (!todo.empty()) {
    auto t = todo.front();
    todo.pop();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      auto f = t, b = t;
      f[i] = t[i + 1];
      f[i + 1] = compose(invert(t[i + 1]), compose(t[i], t[i + 1]));
      b[i] = compose(t[i], compose(t[i + 1], invert(t[i])));
      b[i + 1] = t[i];
      for (const auto& s : {f, b})
        if (seen.insert(s).second) todo.push(s);
    }
  }
  return seen.size();
}

TupleState random_state(std::mt19937& rng, std::size_t n) {
  TupleState t = state_of(random_cartan(rng, n));
  std::uniform_int_distribution<std::size_t> idx(1, n - 1);
  std::bernoulli_distribution inv(0.5);
  for (int k = 0; k < 3; ++k) t = sigma_apply({idx(rng), inv(rng)}, t);
  return t;
}

}  // namespace

TEST_CASE("sigma moves") {
  auto q = NumberField::rationals();
  SUBCASE("commuting pair swaps") {
    CartanMatrix a1a1(Matrix::from_rationals(q, {{2, 0}, {0, 2}}));
    TupleState t = state_of(a1a1);
    TupleState u = sigma_apply({1, false}, t);
    CHECK(u.entries[0] == t.entries[1]);
    CHECK(u.entries[1] == t.entries[0]);
  }
  SUBCASE("A2 pair") {
    TupleState t = state_of(a2());
    const Matrix &s1 = t.entries[0], &s2 = t.entries[1];
    TupleState u = sigma_apply({1, false}, t);
    CHECK(u.entries[0] == s2);
    CHECK(u.entries[1] == s2 * s1 * s2);
    CHECK(apply_word({{1, false}, {1, false}, {1, false}}, t) == t);
    CHECK_FALSE(apply_word({{1, false}, {1, false}}, t) == t);
  }
  SUBCASE("inverse law") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      TupleState t = random_state(rng, 3);
      for (std::size_t i : {1, 2}) {
        CHECK(sigma_apply({i, true}, sigma_apply({i, false}, t)) == t);
        CHECK(sigma_apply({i, false}, sigma_apply({i, true}, t)) == t);
      }
    }
  }
  SUBCASE("range") {
    TupleState t = state_of(a2());
    CHECK_THROWS_AS(sigma_apply({2, false}, t), Error);
    CHECK_THROWS_AS(sigma_apply({0, true}, t), Error);
  }
  SUBCASE("word rendering") {
    CHECK(to_string(BraidWord{{2, false}, {1, true}, {3, false}}) == "2 -1 3");
  }
}

TEST_CASE("gamma") {
  auto q = NumberField::rationals();
  CartanMatrix diag(Matrix::identity(q, 3) * FieldElement(q, 2));
  TupleState t = state_of(diag);
  TupleState g = gamma_apply(t);
  CHECK(g.entries[0] == t.entries[2]);
  CHECK(g.entries[1] == t.entries[0]);
  CHECK(g.entries[2] == t.entries[1]);
  CHECK(gamma_apply(gamma_apply(g)) == t);
  CHECK(gamma_power_check(t));

  // The displayed formula: gamma(s) = (s_n, s_1, ..., s_n-1)^{s_n}.
  for (const auto& c : {a3(), counterexample()}) {
    TupleState s = state_of(c);
    TupleState gs = gamma_apply(s);
    const Matrix& sn = s.entries.back();
    const Matrix sn_inv = mat_inv(sn);
    CHECK(gs.entries[0] == sn);
    for (std::size_t i = 1; i < s.size(); ++i)
      CHECK(gs.entries[i] == sn_inv * s.entries[i - 1] * sn);
    CHECK(gamma_power_check(s));
  }
  CHECK(gamma_power_check(state_of(a2())));
  CHECK(power(product(state_of(a2()).entries), 3).is_identity());
}

TEST_CASE("braid relations and product preservation") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    TupleState t = random_state(rng, n);
    const Matrix c = product(t.entries);
    for (std::size_t i = 1; i < n; ++i)
      for (bool inv : {false, true}) CHECK(product(sigma_apply({i, inv}, t).entries) == c);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      BraidWord lhs{{i, false}, {i + 1, false}, {i, false}};
      BraidWord rhs{{i + 1, false}, {i, false}, {i + 1, false}};
      CHECK(apply_word(lhs, t) == apply_word(rhs, t));
    }
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j)
        CHECK(apply_word({{i, false}, {j, false}}, t) == apply_word({{j, false}, {i, false}}, t));
    CHECK(gamma_power_check(t));
  }
}

TEST_CASE("orbits") {
  auto q = NumberField::rationals();
  TupleState single{{Matrix::from_rationals(q, {{-1}})}};
  auto r1 = orbit(single, 10);
  CHECK(r1.status == OrbitResult::Status::Complete);
  CHECK(r1.size == 1);

  auto ra = orbit(state_of(a2()), 100);
  CHECK(ra.status == OrbitResult::Status::Complete);
  CHECK(ra.size == 3);
  CHECK(orbit(state_of(a2()), 3).status == OrbitResult::Status::CapExceeded);

  const Perm t12{1, 0, 2, 3}, t23{0, 2, 1, 3}, t34{0, 1, 3, 2};
  const std::size_t expected = permutation_orbit_size({t12, t23, t34});
  CHECK(expected == 16);
  auto r3 = orbit(state_of(a3()), 1000);
  CHECK(r3.status == OrbitResult::Status::Complete);
  CHECK(r3.size == expected);

  auto rb = orbit(state_of(b2()), 100);
  CHECK(rb.status == OrbitResult::Status::Complete);
  CHECK(rb.size == 4);

  auto rc = orbit(state_of(counterexample()), 500);
  CHECK(rc.status == OrbitResult::Status::CapExceeded);
  CHECK(rc.size == 500);

  SUBCASE("closure and central powers") {
    for (const auto& r : {ra, r3, rb}) {
      std::set<std::string> keys;
      for (const auto& s : r.states) keys.insert(s.key());
      CHECK(keys.size() == r.size);
      for (const auto& s : r.states)
        for (std::size_t i = 1; i < s.size(); ++i)
          for (bool inv : {false, true})
            CHECK(keys.count(sigma_apply({i, inv}, s).key()) == 1);
      const std::size_t p = central_power(r.states[0], r.size);
      CHECK(p >= 1);
      CHECK(p <= r.size);
    }
  }
  SUBCASE("deterministic order") {
    auto again = orbit(state_of(a3()), 1000);
    REQUIRE(again.states.size() == r3.states.size());
    for (std::size_t i = 0; i < again.states.size(); ++i)
      CHECK(again.states[i] == r3.states[i]);
  }
}

TEST_CASE("prefix realization") {
  TupleState t = state_of(a3());
  auto [w0, u0] = prefix_realize(t, {1, 2, 3});
  CHECK(w0.empty());
  CHECK(u0 == t);

  auto [w, u] = prefix_realize(t, {3});
  CHECK(to_string(w) == "1 2");
  CHECK(u.entries[0] == t.entries[2]);

  auto r = orbit(t, 1000);
  std::set<std::string> keys;
  for (const auto& s : r.states) keys.insert(s.key());
  const std::vector<std::vector<std::size_t>> subsets{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  for (const auto& idx : subsets) {
    auto [word, v] = prefix_realize(t, idx);
    CHECK(apply_word(word, t) == v);
    for (std::size_t p = 0; p < idx.size(); ++p) CHECK(v.entries[p] == t.entries[idx[p] - 1]);
    CHECK(keys.count(v.key()) == 1);
  }

  CHECK_THROWS_AS(prefix_realize(t, {2, 1}), Error);
  CHECK_THROWS_AS(prefix_realize(t, {0}), Error);
  CHECK_THROWS_AS(prefix_realize(t, {4}), Error);
}
