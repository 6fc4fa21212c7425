#pragma once

#include <array>
#include <vector>

#include "nakai/derivations.hpp"
#include "support.hpp"

namespace nakai::testing {

inline Polynomial random_monomial(Gen& g, std::size_t n, unsigned max_deg) {
  return Polynomial::monomial(g.exponent_of_degree(n, unsigned(g.integer(0, int(max_deg)))), g.integer(1, 3));
}

inline std::vector<std::array<Polynomial, 3>> random_triples(Gen& g, std::size_t n, int count) {
  std::vector<std::array<Polynomial, 3>> out;
  for (int k = 0; k < count; ++k)
    out.push_back({random_monomial(g, n, 2), random_monomial(g, n, 2), random_monomial(g, n, 2)});
  return out;
}

// Symmetric tuple from theta2 of random products of E and Hamiltonians,
// perturbed by Hamiltonian multiples so that differences land in J(f).
inline DerivationTuple random_candidate(Gen& g, const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<Derivation1> gens{euler_derivation(n)};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) gens.push_back(hamiltonian(f, k, l));
  DerivationTuple t(std::vector<Derivation1>(n, Derivation1::zero(n)));
  int products = g.integer(1, 2);
  for (int p = 0; p < products; ++p) {
    const auto& a = gens[std::size_t(g.integer(0, int(gens.size()) - 1))];
    const auto& b = gens[std::size_t(g.integer(0, int(gens.size()) - 1))];
    Polynomial r = Polynomial::constant(n, g.integer(1, 3));
    if (g.coin()) r = r * Polynomial::variable(n, std::size_t(g.integer(0, int(n) - 1)));
    DerivationTuple piece = theta2_extract(compose2(a, b));
    for (std::size_t i = 0; i < n; ++i) t[i] = scale_and_add(t[i], r, piece[i]);
  }
  int perturbations = g.integer(1, 4);
  for (int p = 0; p < perturbations; ++p) {
    std::size_t target = std::size_t(g.integer(0, int(n) - 1));
    std::size_t k = std::size_t(g.integer(0, int(n) - 1));
    std::size_t l = (k + 1 + std::size_t(g.integer(0, int(n) - 2))) % n;
    Polynomial c = g.homogeneous(n, unsigned(g.integer(0, 1)), 2, 3);
    if (c.is_zero()) c = Polynomial::constant(n, 1);
    t[target] = scale_and_add(t[target], c, hamiltonian(f, k, l));
  }
  return t;
}

}  // namespace nakai::testing
