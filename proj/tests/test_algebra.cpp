#include <random>

#include "doctest.h"
#include "galmod/algebra/ext_field.hpp"
#include "galmod/algebra/matrix.hpp"
#include "galmod/algebra/partial_fractions.hpp"
#include "galmod/algebra/text_format.hpp"
#include "galmod/error.hpp"
#include "oracles.hpp"

using namespace galmod;

namespace {

ExtFieldElement random_element(const ExtField& f, std::mt19937_64& rng) { return f.from_index(rng() % f.size()); }

Poly random_poly(const ExtField& f, int max_degree, std::mt19937_64& rng) {
  std::vector<ExtFieldElement> c;
  const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  for (int i = 0; i <= d; ++i) c.push_back(random_element(f, rng));
  return Poly(f, std::move(c));
}

/// Random element of F_q(t) whose denominator is a product of linear factors.
RatFn random_split_ratfn(const ExtField& f, std::mt19937_64& rng) {
  Poly den = Poly::constant(f.one());
  const int factors = static_cast<int>(rng() % 4);
  for (int i = 0; i < factors; ++i) den = den * Poly::linear(random_element(f, rng)).pow(1 + rng() % 3);
  return RatFn(random_poly(f, 5, rng), den);
}

MatrixFp random_matrix(std::size_t r, std::size_t c, std::uint32_t p, std::mt19937_64& rng, int zero_bias = 0) {
  MatrixFp m(r, c, p);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, (rng() % (zero_bias + 1)) == 0 ? rng() % p : 0);
  return m;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 1}, {3, 2}, {3, 3},
    {3, 4}, {3, 5}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}, {11, 2}, {13, 2}};

}  // namespace

TEST_CASE("prime field elements") {
  PrimeFieldElement a(5, 7), b(-3, 7);
  CHECK(b.value() == 4);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 6);
  CHECK((a / b * b) == a);
  CHECK((-a).value() == 2);
  CHECK_THROWS_AS(PrimeFieldElement(1, 9), Error);
  CHECK_THROWS_AS(a + PrimeFieldElement(1, 5), Error);
}

TEST_CASE("make_ext_field degree 1 is the prime field") {
  const ExtField f = make_ext_field(2, 1);
  CHECK(f.size() == 2);
  CHECK(f.modulus() == VectorFp{0, 1});
  CHECK(f.generator().is_zero());
  CHECK((f.one() + f.one()).is_zero());
}

TEST_CASE("make_ext_field rejects composite characteristic") {
  try {
    (void)make_ext_field(4, 2);
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("defining polynomial is the smallest irreducible by trial division") {
  for (auto [p, m] : kSmallFields) {
    std::uint64_t code = 0;
    while (!oracle::irreducible_by_trial_division(oracle::monic_from_code(code, m, p), p)) ++code;
    CAPTURE(p);
    CAPTURE(m);
    CHECK(make_ext_field(p, m).modulus() == oracle::monic_from_code(code, m, p));
  }
  // Frozen from the enumeration above: x^4 + x + 1 for F_16.
  CHECK(make_ext_field(2, 4).modulus() == VectorFp{1, 1, 0, 0, 1});
}

TEST_CASE("Rabin irreducibility agrees with trial division on all small monics") {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t m = 1; m <= 6; ++m) {
      const std::uint64_t count = oracle::ipow(p, m);
      for (std::uint64_t code = 0; code < count; ++code) {
        const auto f = oracle::monic_from_code(code, m, p);
        REQUIRE(fp_poly::is_irreducible(f, p) == oracle::irreducible_by_trial_division(f, p));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 256") {
  for (auto [p, m] : kSmallFields) {
    const ExtField f = make_ext_field(p, m);
    const std::size_t q = f.size();
    CAPTURE(q);
    std::vector<std::uint32_t> add(q * q), mul(q * q);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        add[a * q + b] = static_cast<std::uint32_t>((f.from_index(a) + f.from_index(b)).index());
        mul[a * q + b] = static_cast<std::uint32_t>((f.from_index(a) * f.from_index(b)).index());
      }
    }
    bool ok = true;
    for (std::size_t a = 0; a < q && ok; ++a) {
      ok = ok && mul[a * q + 1] == a && add[a * q] == a;
      bool has_inverse = a == 0;
      for (std::size_t b = 0; b < q; ++b) {
        ok = ok && mul[a * q + b] == mul[b * q + a] && add[a * q + b] == add[b * q + a];
        has_inverse = has_inverse || mul[a * q + b] == 1;
        for (std::size_t c = 0; c < q; ++c) {
          ok = ok && mul[mul[a * q + b] * q + c] == mul[a * q + mul[b * q + c]];
          ok = ok && add[add[a * q + b] * q + c] == add[a * q + add[b * q + c]];
          ok = ok && mul[a * q + add[b * q + c]] == add[mul[a * q + b] * q + mul[a * q + c]];
        }
      }
      ok = ok && has_inverse;
      if (a != 0) ok = ok && (f.from_index(a) * f.from_index(a).inverse()).is_one();
    }
    CHECK(ok);
  }
}

TEST_CASE("frobenius is a homomorphism of order m") {
  for (auto [p, m] : kSmallFields) {
    const ExtField f = make_ext_field(p, m);
    CAPTURE(f.size());
    for (const auto& x : all_elements(f)) {
      REQUIRE(x.frobenius() == x.pow(p));
      REQUIRE(x.frobenius_pow(m) == x);
      ExtFieldElement y = x;
      for (std::uint32_t i = 0; i < m; ++i) y = y.frobenius();
      REQUIRE(y == x);
    }
    // Order exactly m: the generator is moved by every proper power.
    for (std::uint32_t i = 1; i < m; ++i) CHECK_FALSE(f.generator().frobenius_pow(i) == f.generator());
    std::mt19937_64 rng(p * 100 + m);
    for (int i = 0; i < 200; ++i) {
      const auto a = random_element(f, rng), b = random_element(f, rng);
      REQUIRE((a + b).frobenius() == a.frobenius() + b.frobenius());
      REQUIRE((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
  }
}

TEST_CASE("frobenius fixes zero and the prime field") {
  const ExtField f = make_ext_field(3, 3);
  CHECK(f.zero().frobenius().is_zero());
  for (int c = 0; c < 3; ++c) CHECK(f.from_int(c).frobenius() == f.from_int(c));
  const ExtField f16 = make_ext_field(2, 4);
  CHECK(f16.generator().frobenius_pow(4) == f16.generator());
}

TEST_CASE("trace_to_prime") {
  const ExtField f = make_ext_field(2, 4);
  CHECK(trace_to_prime(f.zero()).value() == 0);
  CHECK(trace_to_prime(f.one()).value() == 0);
  bool surjective = false;
  for (const auto& x : all_elements(f)) {
    // Oracle: sum of the Frobenius conjugates by repeated powering.
    ExtFieldElement s = f.zero(), y = x;
    for (int i = 0; i < 4; ++i) {
      s += y;
      y = y.pow(2);
    }
    REQUIRE(s.in_prime_field());
    REQUIRE(trace_to_prime(x).value() == s.prime_value());
    REQUIRE(trace_to_prime(x.frobenius()) == trace_to_prime(x));
    surjective = surjective || s.prime_value() == 1;
  }
  CHECK(surjective);
  const ExtField f27 = make_ext_field(3, 3);
  for (const auto& a : all_elements(f27)) {
    for (const auto& b : all_elements(f27)) REQUIRE(trace_to_prime(a + b) == trace_to_prime(a) + trace_to_prime(b));
  }
}

TEST_CASE("element text round trip") {
  const ExtField f = make_ext_field(3, 3);
  for (const auto& x : all_elements(f)) REQUIRE(parse_field_element(x.to_string(), f) == x);
}

TEST_CASE("embedding_root gives a field embedding") {
  const ExtField small = make_ext_field(2, 4), big = make_ext_field(2, 8);
  const auto root = embedding_root(small, big);
  for (const auto& a : all_elements(small)) {
    for (const auto& b : all_elements(small)) {
      REQUIRE(embed(a * b, root) == embed(a, root) * embed(b, root));
      REQUIRE(embed(a + b, root) == embed(a, root) + embed(b, root));
    }
    REQUIRE(embed(a.frobenius(), root) == embed(a, root).frobenius());
  }
  CHECK_THROWS_AS(embedding_root(make_ext_field(2, 3), big), Error);
}

TEST_CASE("rank, kernel and rref basics") {
  const auto id = MatrixFp::identity(5, 3);
  CHECK(id.rank() == 5);
  CHECK(id.kernel().rows() == 0);
  const MatrixFp zero(3, 4, 3);
  CHECK(zero.rank() == 0);
  CHECK(zero.kernel().rows() == 4);

  MatrixFp j4 = MatrixFp::identity(4, 2);
  for (std::size_t i = 0; i + 1 < 4; ++i) j4.set(i, i + 1, 1);
  const MatrixFp nil = j4 - MatrixFp::identity(4, 2);
  CHECK(nil.pow(3).rank() == 1);
  CHECK(nil.pow(4).is_zero());
  CHECK(j4.pow(4).is_identity());

  CHECK_THROWS_AS(MatrixFp(2, 3, 2) * MatrixFp(2, 3, 2), Error);
  CHECK_THROWS_AS(MatrixFp(2, 3, 2).apply(VectorFp{1, 0}), Error);
}

TEST_CASE("randomized linear algebra invariants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[trial % 4];
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7, k = 1 + rng() % 7;
    const MatrixFp a = random_matrix(r, c, p, rng, trial % 3), b = random_matrix(c, k, p, rng, trial % 2);
    const auto ra = a.rref();
    REQUIRE(ra.reduced.rref().reduced == ra.reduced);
    REQUIRE(ra.pivots.size() <= std::min(r, c));
    REQUIRE((a * b).rank() <= std::min(a.rank(), b.rank()));
    const MatrixFp ker = a.kernel();
    REQUIRE(ker.rows() == c - a.rank());
    for (std::size_t i = 0; i < ker.rows(); ++i) REQUIRE(is_zero_vector(a.apply(ker.row(i))));
    VectorFp x(c);
    for (auto& v : x) v = rng() % p;
    const VectorFp rhs = a.apply(x);
    const auto sol = a.solve(rhs);
    REQUIRE(sol.has_value());
    REQUIRE(a.apply(*sol) == rhs);
    if (r == c) {
      const auto inv = a.inverse();
      REQUIRE(inv.has_value() == (a.rank() == r));
      if (inv) REQUIRE((a * *inv).is_identity());
    }
    const MatrixFp sq = random_matrix(4, 4, p, rng);
    const std::uint64_t count = rng() % 20;
    MatrixFp naive(4, 4, p), power = MatrixFp::identity(4, p);
    for (std::uint64_t i = 0; i < count; ++i) {
      naive = naive + power;
      power = power * sq;
    }
    REQUIRE(sq.geometric_sum(count) == naive);
    REQUIRE(sq.pow(count) == power);
  }
  const MatrixFp inconsistent = MatrixFp::from_rows({{1, 0}, {1, 0}}, 2, 2);
  CHECK_FALSE(inconsistent.solve(VectorFp{1, 0}).has_value());
}

TEST_CASE("partial fractions examples") {
  const ExtField f2 = make_ext_field(2, 1);
  const Poly t = Poly::t(f2);

  const RatFn poly(t * t + t);
  CHECK(partial_fractions(poly).poles.empty());

  const RatFn g(Poly::constant(f2.one()), t * t - t);
  const auto pf = partial_fractions(g);
  REQUIRE(pf.poles.size() == 2);
  CHECK(pf.polynomial_part.is_zero());
  CHECK(pf.poles[0].alpha.is_zero());
  CHECK(pf.poles[0].coeffs == std::vector<ExtFieldElement>{f2.one()});
  CHECK(pf.poles[1].alpha.is_one());
  CHECK(pf.poles[1].coeffs == std::vector<ExtFieldElement>{f2.one()});
  CHECK(pf.recombine() == g);

  const RatFn h(Poly::constant(f2.one()), t * t + t + Poly::constant(f2.one()));
  try {
    (void)partial_fractions(h);
    FAIL("expected DenominatorDoesNotSplit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DenominatorDoesNotSplit);
  }
}

TEST_CASE("partial fractions recombine exactly") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 4}}) {
    const ExtField f = make_ext_field(p, m);
    for (int i = 0; i < 150; ++i) {
      const RatFn r = random_split_ratfn(f, rng);
      const auto pf = partial_fractions(r);
      REQUIRE(pf.recombine() == r);
      for (const auto& pole : pf.poles) REQUIRE(!pole.coeffs.back().is_zero());
    }
  }
}

TEST_CASE("rational functions are normalized") {
  const ExtField f = make_ext_field(3, 1);
  const Poly t = Poly::t(f);
  const Poly one = Poly::constant(f.one());
  const RatFn a(t * (t + one), (t + one).scaled(f.from_int(2)));
  CHECK(a.den().is_one());
  CHECK(a.num() == t.scaled(f.from_int(2)));
  CHECK(RatFn(Poly(f), t) == RatFn(f));
  CHECK_THROWS_AS(RatFn(t, Poly(f)), Error);
}

TEST_CASE("text format parses and prints") {
  const ExtField f = make_ext_field(2, 4);
  const RatFn r = parse_ratfn("(g^2+1)/(t^3 + g*t + 1)", f);
  const Poly t = Poly::t(f);
  const auto g = f.generator();
  CHECK(r.num() == Poly::constant(g * g + f.one()));
  CHECK(r.den() == t.pow(3) + t.scaled(g) + Poly::constant(f.one()));
  CHECK(parse_ratfn(r.to_string(), f) == r);
  CHECK(parse_ratfn("-t + 3*t^2", make_ext_field(5, 1)).to_string() == "3*t^2 + 4*t");

  for (const char* bad : {"1/(t", "t/t/t", "(t+1", "t^", "t $", "", "1/0"}) {
    CAPTURE(bad);
    try {
      (void)parse_ratfn(bad, f);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }

  std::mt19937_64 rng(3);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 3}, {5, 1}}) {
    const ExtField fq = make_ext_field(p, m);
    for (int i = 0; i < 200; ++i) {
      const RatFn x = random_split_ratfn(fq, rng);
      REQUIRE(parse_ratfn(x.to_string(), fq) == x);
    }
  }
}
