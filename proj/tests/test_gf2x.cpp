#include <catch2/catch_amalgamated.hpp>

#include "codebounds/gf2x.hpp"

using namespace codebounds;

TEST_CASE("Gf2Poly basics") {
  CHECK(Gf2Poly::zero().degree() == -1);
  CHECK(Gf2Poly::one().degree() == 0);
  CHECK(Gf2Poly::x().degree() == 1);
  CHECK(Gf2Poly::from_bits(0b10011).degree() == 4);
  CHECK(Gf2Poly::from_bits(0b10011).to_string() == "x^4 + x + 1");
  CHECK(Gf2Poly::zero().to_string() == "0");
  CHECK_THROWS_AS(Gf2Poly::monomial(64), std::invalid_argument);
}

TEST_CASE("poly_mul over GF(2)") {
  const Gf2Poly one_plus_x = Gf2Poly::from_bits(0b11);
  // squaring in characteristic 2: (1+x)^2 = 1 + x^2
  CHECK(poly_mul(one_plus_x, one_plus_x) == Gf2Poly::from_bits(0b101));
  // multiplicative identity
  const Gf2Poly p = Gf2Poly::from_bits(0b1011001);
  CHECK(poly_mul(p, Gf2Poly::one()) == p);
  CHECK(poly_mul(Gf2Poly::one(), p) == p);
  // (1+x)(1+x+x^2) = 1+x^3
  CHECK(poly_mul(one_plus_x, Gf2Poly::from_bits(0b111)) == Gf2Poly::from_bits(0b1001));
  // zero absorbs
  CHECK(poly_mul(p, Gf2Poly::zero()).is_zero());
  // degree additivity
  CHECK(poly_mul(Gf2Poly::monomial(5), Gf2Poly::from_bits(0b111)).degree() == 7);
  CHECK_THROWS_AS(poly_mul(Gf2Poly::monomial(40), Gf2Poly::monomial(40)), std::overflow_error);
}

TEST_CASE("poly_divmod") {
  const Gf2Poly a = Gf2Poly::from_bits(0b110101101);
  const Gf2Poly b = Gf2Poly::from_bits(0b1011);
  const auto [q, r] = poly_divmod(a, b);
  CHECK(poly_mul(q, b) + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(poly_divides(b, poly_mul(b, a)));
  CHECK_THROWS_AS(poly_divmod(a, Gf2Poly::zero()), std::invalid_argument);
}

TEST_CASE("irreducibility by trial division") {
  CHECK(is_irreducible(Gf2Poly::from_bits(0b111)));    // x^2+x+1
  CHECK(is_irreducible(Gf2Poly::from_bits(0b10011)));  // x^4+x+1
  CHECK(!is_irreducible(Gf2Poly::from_bits(0b101)));   // x^2+1 = (x+1)^2
  CHECK(!is_irreducible(Gf2Poly::from_bits(0b10001))); // x^4+1
  CHECK(!is_irreducible(Gf2Poly::one()));
}

TEST_CASE("field construction picks the expected modulus") {
  const Gf2mField f16 = Gf2mField::with_degree(4);
  CHECK(f16.modulus() == Gf2Poly::from_bits(0b10011));
  CHECK(f16.m() == 4);
  CHECK(f16.group_order() == 15);
  CHECK_THROWS_AS(Gf2mField(Gf2Poly::from_bits(0b101)), std::invalid_argument);

  const Gf2mField via_n = Gf2mField::with_nth_roots_of_unity(15);
  CHECK(via_n.modulus() == f16.modulus());
  CHECK_THROWS_AS(Gf2mField::with_nth_roots_of_unity(6), std::invalid_argument);
}

TEST_CASE("element_pow") {
  const Gf2mField f16 = Gf2mField::with_degree(4);
  const Gf2mElement alpha = f16.x();
  const Gf2mElement e = f16.element(std::uint64_t{0b0110});
  CHECK(element_pow(e, 0) == f16.one());
  CHECK(element_pow(e, 1) == e);
  CHECK(element_pow(alpha, 15) == f16.one());  // multiplicative group has order 15
  CHECK(element_pow(alpha, 16) == alpha);
  CHECK(alpha.order() == 15);
}

TEST_CASE("primitive nth root") {
  const Gf2mField f16 = Gf2mField::with_nth_roots_of_unity(15);
  CHECK(f16.primitive_nth_root(15) == f16.x());  // alpha = x for the default modulus
  CHECK(f16.primitive_nth_root(5).order() == 5);
  CHECK(f16.primitive_nth_root(3).order() == 3);
  CHECK_THROWS_AS(f16.primitive_nth_root(7), std::invalid_argument);
}

TEST_CASE("minimal polynomials in GF(16)") {
  const Gf2mField f16 = Gf2mField::with_degree(4);
  const Gf2mElement alpha = f16.x();
  CHECK(minimal_polynomial(f16.one()) == Gf2Poly::from_bits(0b11));  // x + 1
  CHECK(minimal_polynomial(alpha) == Gf2Poly::from_bits(0b10011));   // the modulus itself
  // alpha^5 has order 3 and conjugacy class {alpha^5, alpha^10}
  CHECK(minimal_polynomial(element_pow(alpha, 5)) == Gf2Poly::from_bits(0b111));
  CHECK_THROWS_AS(minimal_polynomial(f16.zero()), std::invalid_argument);
}

TEST_CASE("minimal polynomial degree divides m and annihilates its element") {
  for (int m : {2, 3, 4, 6}) {
    const Gf2mField field = Gf2mField::with_degree(m);
    for (std::uint64_t repr = 1; repr < (std::uint64_t{1} << m); ++repr) {
      const Gf2mElement e = field.element(repr);
      const Gf2Poly p = minimal_polynomial(e);  // self-checks the annihilation
      CHECK(m % p.degree() == 0);
    }
  }
}

TEST_CASE("generator polynomial from a defining set") {
  const std::set<int> defset15 = {0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12};
  const Gf2Poly g = generator_from_defining_set(15, defset15);
  CHECK(g.degree() == 11);  // dimension 15 - 11 = 4
  CHECK(poly_divides(g, Gf2Poly::monomial(15) + Gf2Poly::one()));

  CHECK(generator_from_defining_set(7, {}) == Gf2Poly::one());

  const Gf2Poly g7 = generator_from_defining_set(7, {1, 2, 4});
  CHECK(g7.degree() == 3);
  const bool expected = g7 == Gf2Poly::from_bits(0b1011) || g7 == Gf2Poly::from_bits(0b1101);
  CHECK(expected);
}

TEST_CASE("generator polynomial error paths") {
  // incomplete set: names the missing coset member
  try {
    generator_from_defining_set(7, {1, 2});
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("missing 4") != std::string::npos);
  }
  CHECK_THROWS_AS(generator_from_defining_set(8, {1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(generator_from_defining_set(7, {7}), std::invalid_argument);
}

TEST_CASE("every union of cyclotomic cosets mod 15 gives a valid generator") {
  const std::vector<std::set<int>> cosets = {
      {0}, {1, 2, 4, 8}, {3, 6, 12, 9}, {5, 10}, {7, 14, 13, 11}};
  const Gf2Poly x15_1 = Gf2Poly::monomial(15) + Gf2Poly::one();
  for (int mask = 0; mask < (1 << 5); ++mask) {
    std::set<int> defset;
    for (int i = 0; i < 5; ++i)
      if (mask & (1 << i)) defset.insert(cosets[i].begin(), cosets[i].end());
    const Gf2Poly g = generator_from_defining_set(15, defset);
    CHECK(g.degree() == static_cast<int>(defset.size()));
    CHECK(poly_divides(g, x15_1));
  }
}
