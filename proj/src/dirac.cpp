#include "acaps/dirac.hpp"

#include "acaps/conformal.hpp"

namespace acaps {

Spinor dirac_fd(const std::function<Spinor(Complex)>& u, const PotentialField& p, Complex z, double d,
                bool conformal) {
    auto diff = [&](Complex dir) {
        Spinor m2 = u(z - 2.0 * d * dir), m1 = u(z - d * dir), p1 = u(z + d * dir), p2 = u(z + 2.0 * d * dir);
        double den = 12.0 * d;
        return Spinor{(m2.up - 8.0 * m1.up + 8.0 * p1.up - p2.up) / den,
                      (m2.down - 8.0 * m1.down + 8.0 * p1.down - p2.down) / den};
    };
    const Complex i(0.0, 1.0);
    Spinor dx = diff(1.0), dy = diff(i);
    Complex dz_down = 0.5 * (dx.down - i * dy.down);
    Complex dzbar_up = 0.5 * (dx.up + i * dy.up);
    Spinor u0 = u(z);
    Complex a = p.a(z);
    Spinor out{-2.0 * i * dz_down - std::conj(a) * u0.down, -2.0 * i * dzbar_up - a * u0.up};
    if (conformal) {
        double w = conformal_factor(z);
        Complex gw = conformal_factor_gradient(z);
        out.up = out.up / w - 0.5 * i / (w * w) * std::conj(gw) * u0.down;
        out.down = out.down / w - 0.5 * i / (w * w) * gw * u0.up;
    }
    return out;
}

}  // namespace acaps
