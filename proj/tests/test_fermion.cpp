#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "molvqe/fermion.hpp"
#include "molvqe/mapping.hpp"
#include "test_util.hpp"

using namespace molvqe;
using molvqe::testutil::matrix_distance;
using molvqe::testutil::random_conserving_operator;

namespace {

PauliSum jw(const FermionOperator& op) { return map_operator(op, MappingKind::JordanWigner); }

}  // namespace

TEST_CASE("a0 a+0 normal-orders to 1 - a+0 a0") {
  FermionOperator op(2);
  op.add_term({{0, Ladder::Annihilate}, {0, Ladder::Create}}, 1.0);
  const auto no = normal_order(op);
  REQUIRE(no.terms.size() == 2);
  FermionOperator expected(2);
  expected.add_term({}, 1.0);
  expected.add_term({{0, Ladder::Create}, {0, Ladder::Annihilate}}, -1.0);
  CHECK(matrix_distance(jw(no), jw(expected)) < 1e-14);
}

TEST_CASE("swapping two creations flips the sign") {
  FermionOperator a(3), b(3);
  a.add_term({{1, Ladder::Create}, {0, Ladder::Create}}, 1.0);
  b.add_term({{0, Ladder::Create}, {1, Ladder::Create}}, -1.0);
  CHECK(matrix_distance(jw(normal_order(a)), jw(normal_order(b))) < 1e-14);
  // and the normal-ordered form has ascending modes
  const auto no = normal_order(a);
  REQUIRE(no.terms.size() == 1);
  CHECK(no.terms[0].factors[0].mode == 0);
  CHECK(no.terms[0].factors[1].mode == 1);
  CHECK(no.terms[0].coeff.real() == doctest::Approx(-1.0));
}

TEST_CASE("nilpotency: a+p a+p vanishes") {
  FermionOperator op(2);
  op.add_term({{0, Ladder::Create}, {0, Ladder::Create}}, 1.0);
  CHECK(normal_order(op).terms.empty());
  FermionOperator op2(2);
  op2.add_term({{1, Ladder::Annihilate}, {1, Ladder::Annihilate}}, 2.5);
  CHECK(normal_order(op2).terms.empty());
}

TEST_CASE("adjoint reverses factors and conjugates coefficients") {
  FermionOperator op(2);
  op.add_term({{0, Ladder::Create}, {1, Ladder::Annihilate}}, {0.5, 0.25});
  const auto adj = adjoint(op);
  REQUIRE(adj.terms.size() == 1);
  CHECK(adj.terms[0].factors[0].mode == 1);
  CHECK(adj.terms[0].factors[0].kind == Ladder::Create);
  CHECK(adj.terms[0].factors[1].mode == 0);
  CHECK(adj.terms[0].factors[1].kind == Ladder::Annihilate);
  CHECK(adj.terms[0].coeff.imag() == doctest::Approx(-0.25));
}

TEST_CASE("multiply matches JW matrix product") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_conserving_operator(3, rng, 2, 1);
    const auto b = random_conserving_operator(3, rng, 2, 1);
    const auto prod = multiply(a, b);
    const auto lhs = to_dense_matrix(jw(prod));
    const auto rhs = to_dense_matrix(jw(a)) * to_dense_matrix(jw(b));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("normal_order preserves the operator on random instances") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    const int modes = 2 + static_cast<int>(rng() % 3);  // 2..4
    const auto op = random_conserving_operator(modes, rng);
    CHECK(matrix_distance(jw(op), jw(normal_order(op))) < 1e-12);
  }
}

TEST_CASE("normal_order of a Hermitian operator maps to a Hermitian Pauli sum") {
  std::mt19937_64 rng(99);
  const auto op = random_conserving_operator(4, rng);
  CHECK(simplify(jw(normal_order(op))).is_hermitian());
}

TEST_CASE("normal_order merges duplicate terms and drops tiny coefficients") {
  FermionOperator op(2);
  op.add_term({{0, Ladder::Create}, {1, Ladder::Annihilate}}, 0.5);
  op.add_term({{0, Ladder::Create}, {1, Ladder::Annihilate}}, 0.5);
  op.add_term({{1, Ladder::Create}, {0, Ladder::Annihilate}}, 1e-15);
  const auto no = normal_order(op);
  REQUIRE(no.terms.size() == 1);
  CHECK(no.terms[0].coeff.real() == doctest::Approx(1.0));
}

TEST_CASE("assemble_hamiltonian reproduces a two-mode Hubbard-style spectrum") {
  // H = eps (n0 + n1) + J n0 n1 in blocked spin orbitals (one spatial orbital).
  const double eps = -1.25, j = 0.7;
  IntegralTensors t(2);
  t.one_body(0, 0) = eps;
  t.one_body(1, 1) = eps;
  // Coulomb <01|01> = two_body(0,1,1,0); include the symmetry partner so the
  // 1/2 prefactor yields J n0 n1.
  t.two_body(0, 1, 1, 0) = j;
  t.two_body(1, 0, 0, 1) = j;
  t.core_energy = 0.25;
  const auto h = simplify(jw(normal_order(assemble_hamiltonian(t))));
  const auto spec = molvqe::testutil::sorted_spectrum(h);
  // states |00>, |10>, |01>, |11>: energies core + {0, eps, eps, 2 eps + J}
  std::vector<double> expect = {0.25, 0.25 + eps, 0.25 + eps, 0.25 + 2 * eps + j};
  std::sort(expect.begin(), expect.end());
  for (int i = 0; i < 4; ++i) CHECK(spec[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("assemble_hamiltonian is Hermitian for fixture integrals") {
  IntegralTensors t(4);
  t.one_body(0, 1) = t.one_body(1, 0) = -0.3;
  t.one_body(0, 0) = t.one_body(1, 1) = -1.1;
  t.one_body(2, 3) = t.one_body(3, 2) = -0.3;
  t.one_body(2, 2) = t.one_body(3, 3) = -1.1;
  t.two_body(0, 2, 2, 0) = t.two_body(2, 0, 0, 2) = 0.6;
  const auto h = simplify(jw(normal_order(assemble_hamiltonian(t))));
  CHECK(h.is_hermitian());
}
