#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shortwell/eigen.hpp"
#include "shortwell/models.hpp"
#include "shortwell/rational.hpp"

namespace shortwell {

/// Plane waves in a periodic box of length L, truncated at |n| <= n_max.
/// Rows are ordered n = -n_max..n_max (complex_exp) or n = 0..n_max
/// (even_cosine). Unperturbed energies e_n = 4 n^2 pi^2 / L^2.
struct PlaneWaveBasis {
  double box_length = 10.0;
  long n_max = 50;
  Basis parity = Basis::even_cosine;

  [[nodiscard]] std::size_t dimension() const;
  [[nodiscard]] long label(std::size_t row) const;
  [[nodiscard]] double unperturbed_energy(std::size_t row) const;
};

/// <m|v|n> over the basis; throws InvalidInput("well exceeds box") for the
/// square well when L <= 2.
DenseMatrix potential_matrix(ModelId id, const PlaneWaveBasis& basis);

/// diag(e_n) + lambda V.
DenseMatrix build_hamiltonian(ModelId id, const PlaneWaveBasis& basis, double lambda);

/// Lowest eigenvalue of build_hamiltonian. The Jacobi eigenvector is used
/// for a final Rayleigh quotient, which keeps the small ground energy
/// accurate relative to itself rather than to the largest e_n.
double ground_energy_diag(ModelId id, const PlaneWaveBasis& basis, double lambda);

struct RsptResult {
  std::vector<double> coefficients;               // [j-1] -> eps~(j), j = 1..J
  std::size_t basis_size = 0;
  std::vector<std::vector<double>> wavefunctions;  // [k] -> psi^(k), k < J, psi^(0) = |0>

  /// sum_j eps~(j) lambda^j
  [[nodiscard]] double partial_sum(double lambda) const;
};

/// Nondegenerate Rayleigh-Schroedinger recursion with intermediate
/// normalization, J <= 12. Requires the even_cosine basis; the complex
/// basis throws InvalidInput("degenerate unperturbed levels; use even_cosine").
RsptResult rspt_coefficients(ModelId id, const PlaneWaveBasis& basis, int order);

struct ExtrapolatedCoefficients {
  std::vector<double> value;      // Richardson limit, [j-1]
  std::vector<long> n_max_levels;  // n, 2n, 4n
  std::vector<std::vector<double>> raw;  // [level][j-1]
};

/// Runs RSPT at n_max, 2 n_max, 4 n_max and removes the 1/n and 1/n^2
/// truncation terms by two Richardson levels.
ExtrapolatedCoefficients rspt_extrapolated(ModelId id, double box_length, long n_max, int order);

struct BlowupRow {
  double box_length = 0.0;
  int order = 0;
  double coefficient = 0.0;
  double rescaled = 0.0;      // coefficient * L^(2-j)
  double exponent_fit = 0.0;  // least-squares slope of log|coefficient| vs log L (same for all rows)
  std::optional<BigRational> exact_coefficient;
  std::optional<BigRational> exact_rescaled;
};

/// eps~(j)(L) across box lengths. The delta well uses the exact L-series
/// (box lengths must be exactly representable rationals); other wells use
/// rspt_extrapolated with the given n_max.
std::vector<BlowupRow> blowup_report(ModelId id, const std::vector<double>& box_lengths, int order,
                                     long n_max = 200);

}  // namespace shortwell
