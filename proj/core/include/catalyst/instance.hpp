#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "catalyst/linalg.hpp"

namespace catalyst {

/// How the target condition number is imposed on a generated matrix.
///
/// `linear`: eigenvalues of A are linspace(1/kappa, 1, n), so cond(A) = kappa.
/// `gram`:   A = X^T X where X has singular values linspace(1/kappa, 1, n),
///           so the eigenvalues are squared and cond(A) = kappa^2. This is the
///           construction used by the original warm-start experiment script.
enum class SpectrumConvention { linear, gram };

std::string_view to_string(SpectrumConvention convention) noexcept;
SpectrumConvention parse_spectrum_convention(std::string_view text);

/// A x_star = b with known x_star. `kappa` is the true condition number of
/// `a`; `nominal_kappa` is the generator parameter (they differ for `gram`).
struct LinearSystemInstance {
  SymMatrix a;
  Vector b;
  Vector x_star;
  double kappa = 1.0;
  double nominal_kappa = 1.0;
  std::uint64_t seed = 0;
  SpectrumConvention convention = SpectrumConvention::linear;
};

/// Standard-normal variates from mt19937_64 via the Box-Muller transform.
/// The engine's output sequence is fixed by the standard, so streams are
/// identical on every conforming platform.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double uniform_open();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// First `n` draws of GaussianStream(seed).
Vector gaussian_vector(Index n, std::uint64_t seed);

/// The prescribed eigenvalues of a generated instance, ascending.
Vector prescribed_spectrum(Index n, double kappa,
                           SpectrumConvention convention = SpectrumConvention::linear);

/// A = Q diag(spectrum) Q^T with Q the orthogonal QR factor of an n x n
/// Gaussian matrix (first n*n draws of the seed's stream, column-major), and
/// x_star the next n draws normalized to unit length; b = A x_star.
LinearSystemInstance generate(Index n, double kappa, std::uint64_t seed,
                              SpectrumConvention convention = SpectrumConvention::linear);

/// Wraps an arbitrary SPD matrix and solution; b and kappa are derived.
LinearSystemInstance make_instance(SymMatrix a, Vector x_star, std::uint64_t seed = 0);

}  // namespace catalyst
