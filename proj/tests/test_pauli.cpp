#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "molvqe/pauli.hpp"

using namespace molvqe;
using Cx = Complex;

namespace {

Eigen::Matrix2cd letter_matrix(char c) {
  Eigen::Matrix2cd m;
  const Cx i(0, 1);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    default:  m << 1, 0, 0, -1; break;
  }
  return m;
}

PauliString ps(int n, std::initializer_list<std::pair<int, char>> letters) {
  PauliString s = PauliString::identity(n);
  for (auto [q, l] : letters) {
    const auto one = PauliString::single(n, q, l);
    s.x |= one.x;
    s.z |= one.z;
  }
  return s;
}

}  // namespace

TEST_CASE("single-letter construction and accessors") {
  const auto p = PauliString::single(3, 1, 'Y');
  CHECK(p.letter(0) == 'I');
  CHECK(p.letter(1) == 'Y');
  CHECK(p.letter(2) == 'I');
  CHECK(p.weight() == 1);
  CHECK(!p.is_identity());
  CHECK(PauliString::identity(3).is_identity());
  CHECK(PauliString::identity(3).str() == "I");
  CHECK(p.str() == "Y1");
}

TEST_CASE("lexicographic order I < X < Y < Z from qubit 0") {
  const auto i = PauliString::identity(2);
  const auto x0 = PauliString::single(2, 0, 'X');
  const auto y0 = PauliString::single(2, 0, 'Y');
  const auto z0 = PauliString::single(2, 0, 'Z');
  const auto x1 = PauliString::single(2, 1, 'X');
  CHECK(i < x0);
  CHECK(x0 < y0);
  CHECK(y0 < z0);
  CHECK(x1 < x0);  // qubit 0 letter compared first; I on qubit 0 sorts before X
}

TEST_CASE("X*Y = iZ and Y*X = -iZ") {
  const auto x = PauliString::single(1, 0, 'X');
  const auto y = PauliString::single(1, 0, 'Y');
  auto xy = string_multiply(x, y);
  CHECK(xy.phase_exp == 1);
  CHECK(xy.string.letter(0) == 'Z');
  auto yx = string_multiply(y, x);
  CHECK(yx.phase_exp == 3);
  CHECK(yx.string.letter(0) == 'Z');
}

TEST_CASE("every letter squares to the identity with phase 1") {
  for (char c : {'I', 'X', 'Y', 'Z'}) {
    const auto p = PauliString::single(1, 0, c);
    const auto pp = string_multiply(p, p);
    CHECK(pp.phase_exp == 0);
    CHECK(pp.string.is_identity());
  }
}

TEST_CASE("all 16 two-letter products match dense 2x2 matrix products") {
  const Cx i(0, 1);
  for (char a : {'I', 'X', 'Y', 'Z'}) {
    for (char b : {'I', 'X', 'Y', 'Z'}) {
      const auto prod =
          string_multiply(PauliString::single(1, 0, a), PauliString::single(1, 0, b));
      const Cx phase = std::pow(i, prod.phase_exp);
      const Eigen::Matrix2cd expected = letter_matrix(a) * letter_matrix(b);
      const Eigen::Matrix2cd got = phase * letter_matrix(prod.string.letter(0));
      CHECK((expected - got).cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-15));
    }
  }
}

TEST_CASE("multi-qubit product accumulates phases per qubit") {
  // (X0 Z1) * (Y0 Y1): qubit 0 X*Y = iZ, qubit 1 Z*Y = -iX => product Z0 X1, phase 1.
  PauliSum a(2), b(2);
  a.add(ps(2, {{0, 'X'}, {1, 'Z'}}), 1.0);
  b.add(ps(2, {{0, 'Y'}, {1, 'Y'}}), 1.0);
  const auto prod = a * b;
  REQUIRE(prod.size() == 1);
  CHECK(prod.terms.begin()->first.str() == "Z0 X1");
  CHECK(prod.terms.begin()->second.real() == doctest::Approx(1.0));
  CHECK(prod.terms.begin()->second.imag() == doctest::Approx(0.0));
}

TEST_CASE("to_matrix uses qubit 0 as the least significant bit") {
  PauliSum z0(2);
  z0.add(PauliString::single(2, 0, 'Z'), 1.0);
  const Eigen::MatrixXcd m = to_dense_matrix(z0);
  CHECK(m(0, 0).real() == doctest::Approx(1.0));
  CHECK(m(1, 1).real() == doctest::Approx(-1.0));
  CHECK(m(2, 2).real() == doctest::Approx(1.0));
  CHECK(m(3, 3).real() == doctest::Approx(-1.0));

  PauliSum x1(2);
  x1.add(PauliString::single(2, 1, 'X'), 1.0);
  const Eigen::MatrixXcd mx = to_dense_matrix(x1);
  CHECK(mx(0, 2).real() == doctest::Approx(1.0));
  CHECK(mx(1, 3).real() == doctest::Approx(1.0));
}

TEST_CASE("sum product matches dense matrix product on random 3-qubit sums") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<uint64_t> mask(0, 7);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    PauliSum a(3), b(3);
    for (int t = 0; t < 4; ++t) {
      a.add({3, mask(rng), mask(rng)}, {coeff(rng), coeff(rng)});
      b.add({3, mask(rng), mask(rng)}, {coeff(rng), coeff(rng)});
    }
    const Eigen::MatrixXcd expected = to_dense_matrix(a) * to_dense_matrix(b);
    const Eigen::MatrixXcd got = to_dense_matrix(a * b);
    CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("simplify drops sub-threshold terms and keeps the rest") {
  PauliSum s(2);
  s.add(PauliString::single(2, 0, 'X'), 0.5);
  s.add(PauliString::single(2, 1, 'Z'), 1e-15);
  const auto t = simplify(s);
  CHECK(t.size() == 1);
  CHECK(t.terms.begin()->first.str() == "X0");
}

TEST_CASE("adding opposite coefficients cancels to nothing after simplify") {
  PauliSum s(1);
  s.add(PauliString::single(1, 0, 'Y'), {0.25, -0.5});
  s.add(PauliString::single(1, 0, 'Y'), {-0.25, 0.5});
  CHECK(simplify(s).size() == 0);
}

TEST_CASE("is_hermitian detects real vs complex coefficients") {
  PauliSum h(2);
  h.add(PauliString::single(2, 0, 'X'), 0.3);
  h.add(PauliString::single(2, 1, 'Z'), -1.2);
  CHECK(h.is_hermitian());
  h.add(PauliString::single(2, 0, 'Z'), {0.0, 0.5});
  CHECK(!h.is_hermitian());
}

TEST_CASE("str/parse round trip") {
  PauliSum s(4);
  s.add(ps(4, {{0, 'Z'}, {2, 'X'}}), {0.5, 0.0});
  s.add(ps(4, {{1, 'Y'}, {3, 'Y'}}), {-0.25, 1.0});
  const auto back = PauliSum::parse(s.str(), 4);
  CHECK(back.size() == s.size());
  for (const auto& [str, c] : s.terms) {
    REQUIRE(back.terms.count(str) == 1);
    CHECK(std::abs(back.terms.at(str) - c) < 1e-12);
  }
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS(PauliSum::parse("(1,0) X0", 2));     // malformed coefficient
  CHECK_THROWS(PauliSum::parse("(1+0i) Q0", 2));    // unknown letter
  CHECK_THROWS(PauliSum::parse("(1+0i) X5", 2));    // qubit out of range
}
