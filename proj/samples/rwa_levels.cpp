// Self-RWA levels next to numerically exact ones for the two model systems.

#include <cstdio>

#include "selfrwa/fock.hpp"
#include "selfrwa/models.hpp"
#include "selfrwa/potential.hpp"

int main() {
  using namespace selfrwa;

  // Deep optical lattice: -g0^2 cos(q x), g0^2 = 10, q = 1.
  const auto lattice = CosineParams::from_g0sq(10.0, 1.0);
  const auto bloch = cosine_reference_levels(lattice, 5, 765);
  std::printf("cosine g0^2=10 q=1\n  n   E_rwa          E_bloch(k=0)   |diff|\n");
  for (int n = 0; n <= 5; ++n) {
    const double e = cosine_rwa_energy(lattice, n);
    std::printf("  %d  %13.8f  %13.8f  %.3e\n", n, e, bloch[n], std::abs(e - bloch[n]));
  }

  // Morse well, lambda = 10, alpha = 1: closed form against the generic engine.
  const MorseParams morse{10.0, 1.0, 0.0};
  const auto v = potentials::morse(morse.lam, morse.alpha);
  std::printf("\nmorse lambda=10 alpha=1 (bound levels 0..%d)\n  n   E_rwa          E_engine       E_exact\n",
              morse.n_max());
  for (int n = 0; n <= 5; ++n)
    std::printf("  %d  %13.8f  %13.8f  %13.8f\n", n, morse_rwa_full(morse, n), rwa_energy(v, n),
                morse_exact(morse, n));
  return 0;
}
