#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbifold/class_function.hpp"
#include "orbifold/cycle_index.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/io.hpp"
#include "orbifold/series.hpp"

using namespace orbifold;

namespace {

Poly z(int n) { return Poly(Variable::z(n)); }
Poly t(int n) { return Poly(Variable::t(n)); }

Poly random_poly(std::mt19937_64& rng) {
  Poly p;
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < terms; ++k) {
    Poly m(Rational(static_cast<long long>(rng() % 7) - 3, 1 + static_cast<long long>(rng() % 4)));
    for (int v = 0; v < 2; ++v) m *= z(1 + static_cast<int>(rng() % 3)).pow(static_cast<unsigned>(rng() % 3));
    if (rng() % 2) m *= Poly(Variable::z(HnfMatrix(1, 1, 2)));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(z(1) + Poly(0) == z(1));
  CHECK((z(1) + z(2)) * (z(1) - z(2)) == z(1).pow(2) - z(2).pow(2));
  CHECK((z(1) - z(1)).is_zero());
  Poly half = (t(1).pow(2) + t(2)) * Poly(Rational(1, 2));
  CHECK(half.to_string() == "1/2*t_1^2 + 1/2*t_2");
  CHECK(half == cycle_indicator(builtin_group("S2")).polynomial);
  CHECK(half.coefficient_sum() == 1);
  CHECK_THROWS_AS(half /= Rational(0), std::domain_error);
  CHECK(Poly(Rational(6, 4)).constant_term() == Rational(3, 2));
}

TEST_CASE("monomial order puts t before z_n before lattice variables") {
  const Poly p = Poly(Variable::z(HnfMatrix(1, 0, 2))) + z(2) + t(3);
  CHECK(p.to_string() == "t_3 + z_2 + z_{1,0,2}");
  CHECK(Variable::parse("z_{1,1,2}") == Variable::z(HnfMatrix(1, 1, 2)));
  CHECK(Variable::parse("t_4") == Variable::t(4));
  CHECK_THROWS_AS(Variable::named("z_9"), std::invalid_argument);
}

TEST_CASE("ring axioms and JSON round trip on random polynomials") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(io::poly_from_json(io::poly_to_json(a)) == a);
    CHECK(io::poly_from_json(io::Json::parse(io::poly_to_json(a).dump())) == a);
  }
}

TEST_CASE("ring elements mix numbers and constants") {
  RingElem two = RingElem(Rational(2));
  RingElem x = Complex(1.5, 0.5);
  CHECK((two * x).complex() == Complex(3.0, 1.0));
  CHECK_THROWS(RingElem(z(1)) * x);
  CHECK(approx_equal(RingElem(Complex(1.0)), RingElem(Complex(1.0 + 1e-12)), 1e-9));
  CHECK_FALSE(approx_equal(RingElem(Complex(1.0)), RingElem(Complex(1.1)), 1e-9));
}

TEST_CASE("series exponential") {
  TruncatedSeries zero(3);
  CHECK(series_exp(zero)[0] == RingElem(1));
  CHECK(series_exp(zero)[2].is_zero());

  TruncatedSeries s(2);
  s[1] = z(1);
  const auto e = series_exp(s);
  CHECK(e[1] == RingElem(z(1)));
  CHECK(e[2] == RingElem(z(1).pow(2) * Poly(Rational(1, 2))));

  TruncatedSeries p(3);
  for (int n = 1; n <= 3; ++n) p[n] = t(n) * Poly(Rational(1, n));
  const auto ep = series_exp(p);
  CHECK(ep[3] == RingElem((t(1).pow(3) + Poly(3) * t(1) * t(2) + Poly(2) * t(3)) * Poly(Rational(1, 6))));

  TruncatedSeries bad(2);
  bad[0] = 1;
  CHECK_THROWS_AS(series_exp(bad), std::invalid_argument);
}

TEST_CASE("exp of a sum is the product of exps") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    TruncatedSeries a(4), b(4);
    for (unsigned n = 1; n <= 4; ++n) {
      a[n] = random_poly(rng);
      b[n] = random_poly(rng);
    }
    CHECK(series_exp(a) * series_exp(b) == series_exp(a + b));
  }
}

TEST_CASE("class function values by handle kind") {
  const auto seq = ClassFunction::symbolic_sequence();
  CHECK(seq.value(BigInt(5)) == RingElem(z(5)));
  CHECK_THROWS_AS(seq.value(HnfMatrix::identity()), std::invalid_argument);
  const auto lat = ClassFunction::symbolic_lattice();
  CHECK(lat.value(HnfMatrix(1, 1, 2)) == RingElem(Variable::z(HnfMatrix(1, 1, 2))));

  const auto f = [](Complex tau) { return tau * tau; };
  const auto num = ClassFunction::numeric_lattice(f, Complex(0, 2));
  const Complex v = num.value(HnfMatrix(2, 0, 1)).complex();
  CHECK(std::abs(v - f(Complex(0, 4))) < 1e-12);

  const auto memo = seq.memoized();
  CHECK(memo.value(BigInt(3)) == RingElem(z(3)));
  CHECK(memo.value(BigInt(3)) == RingElem(z(3)));
}

TEST_CASE("table class functions") {
  const auto f2 = std::make_shared<const Presentation>(Presentation::builtin("F2"));
  auto action = [&](std::vector<Permutation> im, std::size_t n) {
    Orbit all(n);
    std::iota(all.begin(), all.end(), 0u);
    return orbit_stabilizer_action(Homomorphism(f2, n, std::move(im)), all, 0);
  };
  const auto a = action({Permutation::from_cycles(3, {{0, 1, 2}}), Permutation(3)}, 3);
  const auto a_conj = action({Permutation::from_cycles(3, {{0, 2, 1}}), Permutation(3)}, 3);
  const auto b = action({Permutation(3), Permutation::from_cycles(3, {{0, 1, 2}})}, 3);

  auto table = std::make_shared<ActionTable>();
  table->add("A", a, Variable::named("alpha"));
  CHECK_THROWS_AS(table->add("A", b, 1), std::invalid_argument);        // key reused for another class
  CHECK_THROWS_AS(table->add("A2", a_conj, 1), std::invalid_argument);  // same class, second key
  table->add("B", b, Variable::named("beta"));
  const auto cf = ClassFunction::table(table);
  CHECK(cf.value(a_conj) == cf.value(a));
  CHECK(cf.value(b) == RingElem(Variable::named("beta")));
  const auto c = action({Permutation::from_cycles(2, {{0, 1}}), Permutation(2)}, 2);
  CHECK_THROWS_AS(cf.value(c), UnregisteredClass);
}

TEST_CASE("cycle indicators") {
  CHECK(cycle_indicator(builtin_group("S3")).polynomial ==
        (t(1).pow(3) + Poly(3) * t(1) * t(2) + Poly(2) * t(3)) * Poly(Rational(1, 6)));
  CHECK(cycle_indicator(trivial_group(2)).polynomial == t(1).pow(2));
  for (const char* name : {"S4", "A4", "D5", "C6"}) {
    const auto g = builtin_group(name);
    CHECK(cycle_indicator(g).polynomial == cycle_indicator_serial(g).polynomial);
    CHECK(cycle_indicator(g).polynomial.coefficient_sum() == 1);
  }
}
