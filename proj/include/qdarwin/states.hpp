#pragma once

// Single-qubit density matrices for the system and for one environment
// component, plus the entropy primitives every other module builds on.
// All entropies are in bits.

#include <complex>
#include <vector>

namespace qdarwin {

using cplx = std::complex<double>;

/// Eigenvalues in [-kClampTolerance, 0] are treated as exact zeros.
inline constexpr double kClampTolerance = 1e-12;

/// Trace tolerance enforced by Spectrum::validate().
inline constexpr double kTraceTolerance = 1e-10;

/// Determinants below this are snapped to zero so that numerically pure
/// environment states have an exactly vanishing lower eigenvalue.
inline constexpr double kPureSnap = 1e-14;

/// Density matrix of the system qubit in its pointer (sigma^z) basis.
class SystemQubit {
 public:
  SystemQubit(double s00, cplx s01);

  /// Pure state with populations (s00, 1-s00) and a real, nonnegative
  /// coherence sqrt(s00 * s11).
  static SystemQubit pure(double s00);

  double s00() const { return s00_; }
  double s11() const { return 1.0 - s00_; }
  cplx s01() const { return s01_; }

  bool is_pure(double tol = 1e-12) const;

 private:
  double s00_;
  cplx s01_;
};

/// Density matrix of one environment qubit in the sigma^z basis.
class EnvQubit {
 public:
  EnvQubit(double r00, cplx r01);

  double r00() const { return r00_; }
  double r11() const { return 1.0 - r00_; }
  cplx r01() const { return r01_; }

  /// Misalignment r00 - r11.
  double sigma() const { return 2.0 * r00_ - 1.0; }

  double lambda_plus() const { return lambda_plus_; }
  double lambda_minus() const { return lambda_minus_; }

  bool is_pure(double tol = 1e-12) const;

 private:
  double r00_;
  cplx r01_;
  double lambda_plus_;
  double lambda_minus_;
};

/// One distinct eigenvalue and how many times it occurs. Multiplicities are
/// stored as doubles because the spin-block degeneracies of a 200-qubit
/// fragment far exceed 64-bit integers; they are exact below 2^53.
struct SpectrumEntry {
  double value;
  double multiplicity;
};

/// Eigenvalue list of a density operator.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<SpectrumEntry> entries);

  /// Appends an eigenvalue, clamping values in [-kClampTolerance, 0) to 0.
  /// Throws std::domain_error for anything more negative.
  void add(double value, double multiplicity);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }

  /// Sum of multiplicity * value.
  double trace() const;

  /// Total dimension (sum of multiplicities).
  double dimension() const;

  /// Throws std::domain_error if |trace - 1| > tol.
  void validate(double tol = kTraceTolerance) const;

  /// Every eigenvalue repeated by its multiplicity, sorted descending.
  /// Only sensible for small dimensions.
  std::vector<double> expanded() const;

 private:
  std::vector<SpectrumEntry> entries_;
};

double binary_entropy(double x);

/// -sum m * lambda * log2(lambda). Validates the trace first.
double spectrum_entropy(const Spectrum& s);

/// Pre-existing entropy of one environment qubit.
double haziness(const EnvQubit& e);

/// Entropy the qubit would reach if fully dephased in the sigma^z basis,
/// i.e. the most it can gain under a pure decoherence Hamiltonian.
double misalignment_capacity(const EnvQubit& e);

/// r00 = (1+sigma)/2 and r01 = zeta * sqrt(r00 r11). zeta = 1 is pure,
/// zeta = 0 is fully dephased at the same alignment.
EnvQubit make_env_state(double sigma, double zeta);

/// Solves make_env_state(sigma, zeta) for the zeta giving haziness h.
/// Requires 0 <= h <= misalignment capacity at this sigma.
EnvQubit env_state_for_haziness(double sigma, double h);

/// Inverse of binary_entropy on [1/2, 1].
double inverse_binary_entropy(double h);

}  // namespace qdarwin
