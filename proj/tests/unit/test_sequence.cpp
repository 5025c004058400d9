#include <catch_amalgamated.hpp>

#include <cmath>

#include <l1fourier/errors.hpp>
#include <l1fourier/sequence.hpp>

using namespace l1f;
using Catch::Approx;

TEST_CASE("delta of 1/k at k = 1 is one half") {
  CoefficientSequence c([](std::int64_t k) -> Complex { return k >= 1 ? 1.0 / k : 0.0; }, Symmetry::None);
  CHECK(delta(c, 1) == Complex(0.5, 0.0));
}

TEST_CASE("delta of a constant sequence vanishes") {
  CoefficientSequence c([](std::int64_t) -> Complex { return 3.25; }, Symmetry::None);
  for (std::int64_t k : {-5, 0, 1, 17, 1000}) CHECK(delta(c, k) == Complex{});
}

TEST_CASE("delta of i 2^-k at k = 0 is i/2") {
  CoefficientSequence c([](std::int64_t k) { return Complex(0.0, std::exp2(-static_cast<double>(k))); },
                        Symmetry::None);
  CHECK(delta(c, 0) == Complex(0.0, 0.5));
}

TEST_CASE("conjugate symmetry derives the negative side") {
  CoefficientSequence c([](std::int64_t k) { return Complex(1.0 / (k + 1), 0.5 * k); }, Symmetry::Conjugate);
  for (std::int64_t k = 1; k < 50; ++k) CHECK(c(-k) == std::conj(c(k)));
  CHECK(c(0).imag() == 0.0);
}

TEST_CASE("even real symmetry mirrors the real part") {
  CoefficientSequence c([](std::int64_t k) { return Complex(1.0 / (k + 1), 2.0); }, Symmetry::EvenReal);
  for (std::int64_t k = 0; k < 20; ++k) {
    CHECK(c(k) == Complex(1.0 / (k + 1), 0.0));
    CHECK(c(-k) == c(k));
  }
}

TEST_CASE("indices beyond the support bound evaluate to zero") {
  CoefficientSequence c([](std::int64_t) -> Complex { return 1.0; }, Symmetry::None, 10);
  CHECK(c(10) == Complex(1.0));
  CHECK(c(-10) == Complex(1.0));
  CHECK(c(11) == Complex{});
  CHECK(c(-11) == Complex{});
  CHECK(c(std::int64_t{1} << 40) == Complex{});
}

TEST_CASE("tables are total and zero outside") {
  const auto c = CoefficientSequence::table({1.0, 2.0, 3.0}, {Complex(0, 1)}, Symmetry::None);
  CHECK(c(0) == Complex(1.0));
  CHECK(c(2) == Complex(3.0));
  CHECK(c(3) == Complex{});
  CHECK(c(-1) == Complex(0, 1));
  CHECK(c(-2) == Complex{});
  const auto sym = CoefficientSequence::table({1.0, Complex(0, 2)}, {}, Symmetry::Conjugate);
  CHECK(sym(-1) == Complex(0, -2));
}

TEST_CASE("the zero sequence is zero everywhere") {
  CoefficientSequence z;
  for (std::int64_t k = -5; k <= 5; ++k) CHECK(z(k) == Complex{});
}

TEST_CASE("reflected and conjugated sequences") {
  const auto c = CoefficientSequence::table({1.0, Complex(2, 1)}, {Complex(0, 3)}, Symmetry::None);
  const auto r = reflected(c);
  CHECK(r(1) == Complex(0, 3));
  CHECK(r(-1) == Complex(2, 1));
  const auto j = conjugated(c);
  CHECK(j(1) == Complex(2, -1));
  CHECK(j(-1) == Complex(0, -3));
}

TEST_CASE("cosine coefficients map to halves") {
  const auto c = from_cosine_coefficients({2.0, 1.0, 0.25});
  CHECK(c(0) == Complex(1.0));
  CHECK(c(1) == Complex(0.5));
  CHECK(c(-2) == Complex(0.125));
  CHECK(c(3) == Complex{});
}

TEST_CASE("symmetry names round trip") {
  for (Symmetry s : {Symmetry::None, Symmetry::Conjugate, Symmetry::EvenReal}) {
    CHECK(symmetry_from_string(to_string(s)) == s);
  }
  CHECK(symmetry_from_string("one_sided") == Symmetry::None);
  CHECK_THROWS_AS(symmetry_from_string("sideways"), InputError);
}
