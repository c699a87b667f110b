#pragma once

#include <functional>

#include "acaps/potential.hpp"

namespace acaps {

// D_a u by fourth-order central differences with step d. With conformal set,
// returns D^W u = W^{-1} D_a u - (i/2) W^{-2} sigma(grad W) u, the Dirac
// operator of the metric W^2 (dx^2 + dy^2).
Spinor dirac_fd(const std::function<Spinor(Complex)>& u, const PotentialField& p, Complex z, double d,
                bool conformal = false);

}  // namespace acaps
