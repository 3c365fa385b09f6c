#pragma once

#include <array>
#include <stdexcept>
#include <vector>

namespace molvqe {

inline constexpr double kAngstromToBohr = 1.8897259886;

using Vec3 = std::array<double, 3>;

struct Atom {
  int z = 1;              // nuclear charge
  Vec3 position{};        // Angstrom
};

struct MolecularGeometry {
  std::vector<Atom> atoms;
  int charge = 0;
  int multiplicity = 1;

  int electron_count() const {
    int n = -charge;
    for (const auto& a : atoms) n += a.z;
    return n;
  }
  int n_alpha() const { return (electron_count() + multiplicity - 1) / 2; }
  int n_beta() const { return electron_count() - n_alpha(); }

  void validate() const;
};

double nuclear_repulsion(const MolecularGeometry& geometry);

}  // namespace molvqe
