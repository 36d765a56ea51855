#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>

#include <Eigen/Dense>

namespace catalyst {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Eigenpairs of a real symmetric matrix. Eigenvalues ascend; column j of
/// `eigenvectors` pairs with `eigenvalues[j]` and the columns are orthonormal.
struct Spectrum {
  Vector eigenvalues;
  Matrix eigenvectors;
};

/// Dense real symmetric matrix with a lazily computed, shared spectrum.
///
/// Construction rejects non-finite entries and asymmetry beyond
/// 1e-12 * max|entry|; accepted input is stored exactly symmetrized.
/// Instances are immutable, so copies share one spectrum cache and the first
/// call to `spectrum()` computes it exactly once even under concurrent reads.
class SymMatrix {
 public:
  explicit SymMatrix(Matrix entries);

  static SymMatrix identity(Index n);
  static SymMatrix diagonal(const Vector& diag);

  Index dim() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }
  double operator()(Index i, Index j) const { return entries_(i, j); }

  Vector apply(const Vector& v) const;
  const Spectrum& spectrum() const;
  bool has_cached_spectrum() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<Spectrum> value;
  };

  Matrix entries_;
  std::shared_ptr<Cache> cache_;
};

/// Relative off-diagonal threshold at which the Jacobi sweeps stop.
inline constexpr double kJacobiTolerance = 1e-12;

/// Cyclic Jacobi eigendecomposition. Rotations sweep row-major over the
/// strict upper triangle in a fixed order, so results are bit-reproducible
/// for a given input. Always recomputes; `SymMatrix::spectrum()` caches.
Spectrum eig_sym(const SymMatrix& m);

double spectral_norm(const SymMatrix& m);

/// max|lambda| / min|lambda|; throws singular_matrix when
/// min|lambda| < 1e-14 * max|lambda|.
double condition_number(const SymMatrix& m);

/// Applies M^{-1} through the cached spectrum.
Vector solve_spd(const SymMatrix& m, const Vector& v);

/// Scalar evaluation of p(x) = sum_k coeffs[k] (1 - x)^k by Horner's rule.
double eval_one_minus_poly(std::span<const double> coeffs, double x);

/// p(M) v with p in the (1 - x)-monomial basis, evaluated eigenvalue-wise.
Vector apply_poly(const SymMatrix& m, std::span<const double> coeffs, const Vector& v);

}  // namespace catalyst
