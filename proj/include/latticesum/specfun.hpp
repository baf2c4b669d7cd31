#pragma once

namespace latticesum {

/// Modified Bessel function of the second kind K_n(x) for n in {0, 1, 2}.
///
/// K0 and K1 come from their ascending series for x <= 2 and from Steed's
/// continued fraction (Temme's CF2) above; K2 follows from the upward
/// recurrence K2 = K0 + (2/x) K1. Relative accuracy is ~1e-14 over the range
/// the lattice series use. Throws std::domain_error for x <= 0 or an order
/// outside {0, 1, 2}.
double bessel_k(int order, double x);

struct BesselK01 {
  double k0;
  double k1;
};

/// K0 and K1 in one evaluation; the series code needs both.
BesselK01 bessel_k01(double x);

/// Slow reference for K_n(x): adaptive Gauss-Kronrod quadrature of
/// int_0^inf exp(-x cosh t) cosh(n t) dt. Shares no code with bessel_k.
double bessel_k_oracle(int order, double x);

}  // namespace latticesum
