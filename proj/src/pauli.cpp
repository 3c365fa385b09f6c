#include "molvqe/pauli.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace molvqe {

namespace {

void check_counts(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw std::invalid_argument("pauli: qubit-count mismatch");
}

}  // namespace

PauliString PauliString::single(int n_qubits, int qubit, char letter) {
  if (qubit < 0 || qubit >= n_qubits) throw std::out_of_range("pauli: qubit index");
  PauliString s{n_qubits, 0, 0};
  switch (letter) {
    case 'I': break;
    case 'X': s.x = 1ull << qubit; break;
    case 'Y': s.x = 1ull << qubit; s.z = 1ull << qubit; break;
    case 'Z': s.z = 1ull << qubit; break;
    default: throw std::invalid_argument("pauli: unknown letter");
  }
  return s;
}

int PauliString::weight() const { return std::popcount(x | z); }

bool PauliString::operator<(const PauliString& o) const {
  if (n != o.n) return n < o.n;
  for (int q = 0; q < n; ++q) {
    // order I < X < Y < Z by code x + 2z... letter codes: I=0, X=1, Y=3, Z=2
    auto code = [](bool bx, bool bz) { return bx ? (bz ? 2 : 1) : (bz ? 3 : 0); };
    const int ca = code((x >> q) & 1, (z >> q) & 1);
    const int cb = code((o.x >> q) & 1, (o.z >> q) & 1);
    if (ca != cb) return ca < cb;
  }
  return false;
}

std::string PauliString::str() const {
  std::string out;
  for (int q = 0; q < n; ++q) {
    const char l = letter(q);
    if (l == 'I') continue;
    if (!out.empty()) out += ' ';
    out += l;
    out += std::to_string(q);
  }
  return out.empty() ? "I" : out;
}

PauliProduct string_multiply(const PauliString& a, const PauliString& b) {
  check_counts(a, b);
  PauliString r{a.n, a.x ^ b.x, a.z ^ b.z};
  // Write each letter as i^(x&z ? 1 : 0)-free symplectic form: P = i^(x.z) X^x Z^z
  // per qubit. Then (X^xa Z^za)(X^xb Z^zb) = (-1)^(za.xb) X^(xa^xb) Z^(za^zb),
  // and the Y bookkeeping folds into the i exponents of a, b and the result.
  const int minus = std::popcount(a.z & b.x) & 1;
  int exp = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) + 2 * minus -
            std::popcount(r.x & r.z);
  return {((exp % 4) + 4) % 4, r};
}

PauliSum PauliSum::identity(int n, Complex c) {
  PauliSum s(n);
  s.terms[PauliString::identity(n)] = c;
  return s;
}

PauliSum& PauliSum::add(const PauliString& s, Complex c) {
  if (s.n != n_qubits) throw std::invalid_argument("pauli sum: qubit-count mismatch");
  terms[s] += c;
  return *this;
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  if (o.n_qubits != n_qubits) throw std::invalid_argument("pauli sum: qubit-count mismatch");
  for (const auto& [s, c] : o.terms) terms[s] += c;
  return *this;
}

PauliSum& PauliSum::operator*=(Complex c) {
  for (auto& [s, v] : terms) v *= c;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits != b.n_qubits) throw std::invalid_argument("pauli sum: qubit-count mismatch");
  static constexpr Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  PauliSum out(a.n_qubits);
  for (const auto& [sa, ca] : a.terms)
    for (const auto& [sb, cb] : b.terms) {
      const auto p = string_multiply(sa, sb);
      out.terms[p.string] += ca * cb * kPhase[p.phase_exp];
    }
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

std::string PauliSum::str() const {
  std::ostringstream out;
  for (const auto& [s, c] : terms)
    out << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i) " << s.str() << "\n";
  return out.str();
}

PauliSum PauliSum::parse(const std::string& text, int n_qubits) {
  PauliSum out(n_qubits);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream in(line);
    std::string tok;
    in >> tok;
    if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
      throw std::invalid_argument("pauli parse: bad coefficient: " + tok);
    std::string body = tok.substr(1, tok.size() - 2);
    if (body.empty() || body.back() != 'i')
      throw std::invalid_argument("pauli parse: bad coefficient: " + tok);
    body.pop_back();
    size_t split = body.find_last_of("+-");
    if (split == std::string::npos || split == 0)
      throw std::invalid_argument("pauli parse: bad coefficient: " + tok);
    if (body[split - 1] == 'e' || body[split - 1] == 'E')
      split = body.find_last_of("+-", split - 2);
    const double re = std::stod(body.substr(0, split));
    const double im = std::stod(body.substr(split));
    PauliString s = PauliString::identity(n_qubits);
    while (in >> tok) {
      if (tok == "I") continue;
      const char l = tok[0];
      const int q = std::stoi(tok.substr(1));
      const PauliString one = PauliString::single(n_qubits, q, l);
      s.x |= one.x;
      s.z |= one.z;
    }
    out.add(s, {re, im});
  }
  return out;
}

PauliSum simplify(const PauliSum& s, double threshold) {
  PauliSum out(s.n_qubits);
  for (const auto& [str, c] : s.terms)
    if (std::abs(c) >= threshold) out.terms[str] = c;
  return out;
}

namespace {

// P|b> = i^(#Y) (-1)^popcount(b & z) |b ^ x>
inline Complex term_phase(uint64_t b, uint64_t x_mask, uint64_t z_mask) {
  static constexpr Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int y = std::popcount(x_mask & z_mask) % 4;
  const int sign = std::popcount(b & z_mask) & 1;
  return kPhase[y] * (sign ? -1.0 : 1.0);
}

}  // namespace

Eigen::SparseMatrix<Complex> to_matrix(const PauliSum& s) {
  if (s.n_qubits > 16) throw std::invalid_argument("to_matrix: dimension guard (n > 16)");
  const uint64_t dim = 1ull << s.n_qubits;
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(s.terms.size() * dim);
  for (const auto& [str, c] : s.terms)
    for (uint64_t b = 0; b < dim; ++b)
      trips.emplace_back(static_cast<int>(b ^ str.x), static_cast<int>(b),
                         c * term_phase(b, str.x, str.z));
  Eigen::SparseMatrix<Complex> m(static_cast<int>(dim), static_cast<int>(dim));
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

Eigen::MatrixXcd to_dense_matrix(const PauliSum& s) {
  if (s.n_qubits > 12) throw std::invalid_argument("to_dense_matrix: dimension guard (n > 12)");
  const uint64_t dim = 1ull << s.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [str, c] : s.terms)
    for (uint64_t b = 0; b < dim; ++b) m(b ^ str.x, b) += c * term_phase(b, str.x, str.z);
  return m;
}

}  // namespace molvqe
