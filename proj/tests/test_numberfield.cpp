#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hurwitz/error.hpp"
#include "hurwitz/numberfield.hpp"

using namespace hurwitz;

namespace {

NumberField sqrt2_field() {
  return NumberField::create(QPoly{-2, 0, 1}, {1, Rational(3, 2)}, "x");
}

// x^4 + 2x^3 + x^2 - 2 = (x^2 + x)^2 - 2, the counterexample field.
NumberField quartic_field() {
  return NumberField::create(QPoly{-2, 0, 1, 2, 1}, {Rational(79, 100), Rational(4, 5)},
                             "x");
}

double approx(const Rational& q) { return q.get_d(); }

// Brute force over monic integer factors x^2 + b x + c and x - r, with
// coefficients bounded by binom(2, j) * ||f||_2 (Mignotte).
bool has_small_factor_oracle(const std::vector<long>& f) {
  double norm = 0;
  for (long c : f) norm += double(c) * double(c);
  norm = std::sqrt(norm);
  auto divides = [&](const std::vector<long>& g) {
    // Integer long division of f by monic g.
    std::vector<long> r = f;
    const std::size_t dg = g.size() - 1;
    for (std::size_t k = r.size(); k-- > dg;) {
      long q = r[k];
      for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] -= q * g[j];
    }
    for (std::size_t k = 0; k < dg; ++k)
      if (r[k] != 0) return false;
    return true;
  };
  const long b1 = static_cast<long>(norm) + 1;
  for (long r = -b1; r <= b1; ++r)
    if (divides({-r, 1})) return true;
  const long b2 = static_cast<long>(2 * norm) + 1;
  for (long b = -b2; b <= b2; ++b)
    for (long c = -b1; c <= b1; ++c)
      if (divides({c, b, 1})) return true;
  return false;
}

}  // namespace

TEST_CASE("field creation") {
  SUBCASE("rational base case ignores the interval") {
    auto q = NumberField::create(QPoly{0, 1}, {5, 7});
    CHECK(q.degree() == 1);
    CHECK(q.embeddings().size() == 1);
    CHECK(q.embeddings()[0].is_real);
  }
  SUBCASE("counterexample field") {
    // Oracle: exact sign change at the interval ends.
    const QPoly f{-2, 0, 1, 2, 1};
    CHECK(f.eval(Rational(79, 100)) < 0);
    CHECK(f.eval(Rational(4, 5)) > 0);
    CHECK_FALSE(has_small_factor_oracle({-2, 0, 1, 2, 1}));
    auto k = quartic_field();
    CHECK(k.degree() == 4);
  }
  SUBCASE("sqrt 2") {
    CHECK(QPoly{-2, 0, 1}.eval(1) < 0);
    CHECK(QPoly{-2, 0, 1}.eval(Rational(3, 2)) > 0);
    CHECK(sqrt2_field().degree() == 2);
  }
  SUBCASE("errors") {
    auto code_of = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InternalMismatch;
    };
    CHECK(code_of([] { NumberField::create(QPoly{-2, 0, 2}, {0, 2}); }) ==
          ErrorCode::NonMonic);
    CHECK(code_of([] { NumberField::create(QPoly{-1, 0, 1}, {0, 2}); }) ==
          ErrorCode::NotIrreducible);
    // (x^2 - 2)(x^2 - 3)
    CHECK(has_small_factor_oracle({6, 0, -5, 0, 1}));
    CHECK(code_of([] { NumberField::create(QPoly{6, 0, -5, 0, 1}, {0, 2}); }) ==
          ErrorCode::NotIrreducible);
    // (x^2 + x + 1)(x^2 + 1) has no real roots at all and is still rejected.
    CHECK(code_of([] { NumberField::create(QPoly{1, 1, 2, 1, 1}, {0, 2}); }) ==
          ErrorCode::NotIrreducible);
    CHECK(code_of([] { NumberField::create(QPoly{-2, 0, 1}, {2, 3}); }) ==
          ErrorCode::NoRootInInterval);
    CHECK(code_of([] { NumberField::create(QPoly{-2, 0, 1}, {-2, 2}); }) ==
          ErrorCode::MultipleRootsInInterval);
    CHECK(code_of([] { NumberField::create(QPoly{1, 0, 1}, {-2, 2}); }) ==
          ErrorCode::NoRootInInterval);
  }
}

TEST_CASE("arithmetic") {
  auto k2 = sqrt2_field();
  auto s = FieldElement::generator(k2);
  CHECK(s * s == FieldElement(k2, 2));

  auto k = quartic_field();
  auto l = FieldElement::generator(k);
  auto root2 = l * l + l;
  CHECK(root2 * root2 == FieldElement(k, 2));

  SUBCASE("division") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rational> c(4);
      for (auto& x : c) x = Rational(dist(rng), 1 + std::abs(dist(rng)));
      FieldElement a(k, c);
      if (a.is_zero()) continue;
      CHECK((a / a).is_one());
      CHECK(a * a.inverse() == FieldElement::one(k));
    }
    CHECK_THROWS_AS((void)FieldElement::zero(k).inverse(), Error);
  }
  SUBCASE("field mismatch") {
    CHECK_THROWS_AS(s + l, Error);
  }
  SUBCASE("ring axioms") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dist(-9, 9);
    auto random_element = [&] {
      std::vector<Rational> c(4);
      for (auto& x : c) x = Rational(dist(rng), 1 + std::abs(dist(rng)));
      return FieldElement(k, c);
    };
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_element(), b = random_element(), c = random_element();
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("sign") {
  auto k2 = sqrt2_field();
  auto s = FieldElement::generator(k2);
  CHECK(sign(FieldElement::zero(k2)) == 0);
  CHECK(sign(s - FieldElement::one(k2)) == 1);
  CHECK(sign(FieldElement::one(k2) - s) == -1);

  auto k = quartic_field();
  auto l = FieldElement::generator(k);
  auto det = FieldElement(k, 4) - FieldElement(k, 2) * (l * l + l);
  CHECK(sign(det) == 1);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> c(4);
    for (auto& x : c) x = Rational(dist(rng), 1 + std::abs(dist(rng)));
    FieldElement a(k, c);
    if (a.is_zero()) continue;
    CHECK(sign(a) * sign(-a) == -1);
    CHECK(sign(a * a) == 1);
  }
}

TEST_CASE("embeddings") {
  auto q = NumberField::rationals();
  REQUIRE(q.embeddings().size() == 1);
  CHECK(q.embeddings()[0].is_real);

  auto k2 = sqrt2_field();
  REQUIRE(k2.embeddings().size() == 2);
  for (const auto& e : k2.embeddings()) {
    CHECK(e.is_real);
    Box b = evaluate(FieldElement::generator(k2), e, Rational(1, 1000000));
    CHECK(std::abs(std::abs(approx(b.re.mid())) - std::sqrt(2.0)) < 1e-5);
  }
  CHECK(approx(k2.embeddings()[0].region.re.mid()) > 0);

  // Oracle values from an independent numeric root finder, frozen.
  auto k = quartic_field();
  const auto& em = k.embeddings();
  REQUIRE(em.size() == 4);
  CHECK(em[0].is_real);
  CHECK(em[1].is_real);
  CHECK_FALSE(em[2].is_real);
  CHECK_FALSE(em[3].is_real);
  const auto l = FieldElement::generator(k);
  const Rational eps(1, 1000000);
  Box b0 = evaluate(l, em[0], eps);
  Box b1 = evaluate(l, em[1], eps);
  Box b2 = evaluate(l, em[2], eps);
  Box b3 = evaluate(l, em[3], eps);
  CHECK(std::abs(approx(b0.re.mid()) - 0.790044015672758) < 1e-5);
  CHECK(std::abs(approx(b1.re.mid()) + 1.79004401567276) < 1e-5);
  CHECK(std::abs(approx(b2.re.mid()) + 0.5) < 1e-5);
  CHECK(std::abs(std::abs(approx(b2.im.mid())) - 1.07898728554747) < 1e-5);
  CHECK(std::abs(approx(b3.im.mid()) + approx(b2.im.mid())) < 1e-5);

  // Regions are pairwise disjoint.
  for (std::size_t i = 0; i < em.size(); ++i)
    for (std::size_t j = i + 1; j < em.size(); ++j)
      CHECK_FALSE(em[i].region.intersects(em[j].region));

  SUBCASE("other branch of the square root") {
    Box r = evaluate(l * l + l, em[2], eps);
    CHECK(r.width() <= eps);
    CHECK(std::abs(approx(r.re.mid()) + std::sqrt(2.0)) < 1e-5);
    CHECK(r.im.contains_zero());
  }
  SUBCASE("rationals are fixed") {
    for (const auto& e : em) {
      Box r = evaluate(FieldElement(k, 3), e, eps);
      CHECK(r.re.contains(3));
      CHECK(r.im.contains_zero());
    }
  }
  SUBCASE("trace encloses the embedding sum") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-7, 7);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> c(4);
      for (auto& x : c) x = Rational(dist(rng), 1 + std::abs(dist(rng)));
      FieldElement a(k, c);
      Box sum = Box::point(0);
      for (const auto& e : em) sum = sum + evaluate(a, e, eps);
      CHECK(sum.re.contains(a.trace()));
      CHECK(sum.im.contains_zero());
    }
  }
}

TEST_CASE("canonical keys") {
  auto k = quartic_field();
  auto l = FieldElement::generator(k);
  // l^4 reduces to 2 - l^2 - 2 l^3.
  CHECK(l.pow(4).key() == "2,0,-1,-2");
  CHECK((l * l + l).to_string() == "x^2 + x");
  CHECK(l.pow(4) == FieldElement(k, {2, 0, -1, -2}));
  CHECK(l.pow(4).hash() == FieldElement(k, {2, 0, -1, -2}).hash());
}
