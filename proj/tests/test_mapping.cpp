#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "molvqe/fci.hpp"
#include "molvqe/integrals.hpp"
#include "molvqe/mapping.hpp"
#include "test_util.hpp"

using namespace molvqe;
using molvqe::testutil::random_conserving_operator;
using molvqe::testutil::sorted_spectrum;

#ifndef MOLVQE_FIXTURE_DIR
#define MOLVQE_FIXTURE_DIR "tests/fixtures"
#endif

TEST_CASE("parity_encode running parity and its inverse") {
  CHECK(parity_encode({1, 0, 0}) == std::vector<int>{1, 1, 1});
  CHECK(parity_encode({1, 1, 0, 1}) == std::vector<int>{1, 0, 0, 1});
  CHECK(parity_decode({1, 1, 1}) == std::vector<int>{1, 0, 0});
  for (uint32_t bits = 0; bits < (1u << 10); ++bits) {
    std::vector<int> f(10);
    for (int i = 0; i < 10; ++i) f[i] = (bits >> i) & 1;
    CHECK(parity_decode(parity_encode(f)) == f);
  }
}

TEST_CASE("JW number operator maps to (I - Z)/2") {
  FermionOperator n0(2);
  n0.add_term({{0, Ladder::Create}, {0, Ladder::Annihilate}}, 1.0);
  const auto s = simplify(map_operator(n0, MappingKind::JordanWigner));
  REQUIRE(s.size() == 2);
  CHECK(s.terms.at(PauliString::identity(2)).real() == doctest::Approx(0.5));
  CHECK(s.terms.at(PauliString::single(2, 0, 'Z')).real() == doctest::Approx(-0.5));
}

TEST_CASE("parity number operator on mode 1 maps to (I - Z1 Z0)/2") {
  FermionOperator n1(2);
  n1.add_term({{1, Ladder::Create}, {1, Ladder::Annihilate}}, 1.0);
  const auto s = simplify(map_operator(n1, MappingKind::Parity));
  REQUIRE(s.size() == 2);
  PauliString zz{2, 0, 0b11};
  CHECK(s.terms.at(PauliString::identity(2)).real() == doctest::Approx(0.5));
  CHECK(s.terms.at(zz).real() == doctest::Approx(-0.5));
}

TEST_CASE("mapped ladder operators obey the anticommutation relations") {
  for (auto mapping : {MappingKind::JordanWigner, MappingKind::Parity}) {
    const int m = 4;
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        const auto ap = map_ladder(m, p, Ladder::Annihilate, mapping);
        const auto aq_dag = map_ladder(m, q, Ladder::Create, mapping);
        auto anti = ap * aq_dag;
        anti += aq_dag * ap;
        const auto s = simplify(anti);
        if (p == q) {
          REQUIRE(s.size() == 1);
          CHECK(std::abs(s.terms.begin()->second - Complex(1.0)) < 1e-12);
          CHECK(s.terms.begin()->first.is_identity());
        } else {
          CHECK(s.size() == 0);
        }
      }
    }
  }
}

TEST_CASE("JW and parity images are isospectral on random conserving operators") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 8; ++trial) {
    const auto op = random_conserving_operator(4, rng);
    const auto ejw = sorted_spectrum(simplify(map_operator(op, MappingKind::JordanWigner)));
    const auto epar = sorted_spectrum(simplify(map_operator(op, MappingKind::Parity)));
    CHECK((ejw - epar).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("two_qubit_reduce drops the symmetry qubits and keeps the sector energy") {
  const auto t = parse_fcidump_file(std::string(MOLVQE_FIXTURE_DIR) + "/h2_0.7414.fcidump");
  const auto h = map_operator(assemble_hamiltonian(t), MappingKind::Parity);
  const double before = sector_ground_energy(h, t.n_alpha, t.n_beta, MappingKind::Parity, false);
  const auto hr = two_qubit_reduce(h, t.n_alpha, t.n_beta);
  CHECK(hr.n_qubits == h.n_qubits - 2);
  const double after = sector_ground_energy(hr, t.n_alpha, t.n_beta, MappingKind::Parity, true);
  CHECK(std::abs(before - after) < 1e-10);
}

TEST_CASE("two_qubit_reduce rejects X/Y on a symmetry qubit") {
  PauliSum s(4);
  s.add(PauliString::single(4, 1, 'X'), 1.0);  // qubit M/2-1 = 1 for M = 4
  CHECK_THROWS(two_qubit_reduce(s, 1, 1));
  PauliSum top(4);
  top.add(PauliString::single(4, 3, 'Y'), 1.0);
  CHECK_THROWS(two_qubit_reduce(top, 1, 1));
}

TEST_CASE("two_qubit_reduce substitutes the correct Z eigenvalues") {
  // Z on qubit M/2-1 becomes (-1)^n_alpha, Z on qubit M-1 becomes
  // (-1)^(n_alpha + n_beta).
  PauliSum s(4);
  s.add(PauliString::single(4, 1, 'Z'), 2.0);
  s.add(PauliString::single(4, 3, 'Z'), 3.0);
  const auto r = simplify(two_qubit_reduce(s, 1, 1));
  REQUIRE(r.size() == 1);
  CHECK(r.terms.begin()->first.is_identity());
  // n_alpha = 1 -> -2; n_alpha + n_beta = 2 -> +3; total +1.
  CHECK(r.terms.begin()->second.real() == doctest::Approx(1.0));
}

TEST_CASE("encode_occupation matches the mapping conventions") {
  const std::vector<int> occ = {1, 0, 1, 0};  // H2 HF reference, M = 4
  CHECK(encode_occupation(occ, MappingKind::JordanWigner) == 0b0101u);
  // parity transform of (1,0,1,0) is (1,1,0,0)
  CHECK(encode_occupation(occ, MappingKind::Parity) == 0b0011u);
  // reduced: drop qubits 1 and 3 -> bits (q0, q2) = (1, 0)
  CHECK(encode_occupation(occ, MappingKind::Parity, true) == 0b01u);
}

TEST_CASE("reference_occupation fills the lowest modes of each spin block") {
  CHECK(reference_occupation(4, 1, 1) == std::vector<int>{1, 0, 1, 0});
  CHECK(reference_occupation(6, 1, 1) == std::vector<int>{1, 0, 0, 1, 0, 0});
  CHECK(reference_occupation(12, 5, 5) ==
        std::vector<int>{1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0});
}
