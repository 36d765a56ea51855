#include "catalyst/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "catalyst/errors.hpp"

namespace catalyst {
namespace {

constexpr int kMaxJacobiSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  const Index n = a.rows();
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

void require_dim(const SymMatrix& m, const Vector& v, const char* what) {
  require(v.size() == m.dim(), ErrorKind::invalid_input,
          std::string(what) + ": vector length " + std::to_string(v.size()) +
              " does not match matrix dimension " + std::to_string(m.dim()));
}

}  // namespace

SymMatrix::SymMatrix(Matrix entries) : cache_(std::make_shared<Cache>()) {
  require(entries.rows() > 0 && entries.rows() == entries.cols(), ErrorKind::invalid_input,
          "symmetric matrix must be square and non-empty");
  require(entries.allFinite(), ErrorKind::invalid_input, "matrix entries must be finite");
  const double scale = entries.cwiseAbs().maxCoeff();
  const double asym = (entries - entries.transpose()).cwiseAbs().maxCoeff();
  require(asym <= 1e-12 * scale, ErrorKind::invalid_input,
          "matrix is not symmetric (max asymmetry " + std::to_string(asym) + ")");
  entries_ = 0.5 * (entries + entries.transpose());
}

SymMatrix SymMatrix::identity(Index n) {
  require(n > 0, ErrorKind::invalid_input, "dimension must be positive");
  return SymMatrix(Matrix::Identity(n, n));
}

SymMatrix SymMatrix::diagonal(const Vector& diag) {
  require(diag.size() > 0, ErrorKind::invalid_input, "dimension must be positive");
  return SymMatrix(Matrix(diag.asDiagonal()));
}

Vector SymMatrix::apply(const Vector& v) const {
  require_dim(*this, v, "apply");
  return entries_ * v;
}

const Spectrum& SymMatrix::spectrum() const {
  std::call_once(cache_->once, [this] { cache_->value = eig_sym(*this); });
  return *cache_->value;
}

bool SymMatrix::has_cached_spectrum() const { return cache_->value.has_value(); }

Spectrum eig_sym(const SymMatrix& m) {
  const Index n = m.dim();
  Matrix a = m.entries();
  Matrix v = Matrix::Identity(n, n);

  const double threshold = kJacobiTolerance * a.norm();
  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Symmetric Schur rotation zeroing a(p, q).
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  require(sweep < kMaxJacobiSweeps || off_diagonal_norm(a) <= threshold,
          ErrorKind::non_convergence, "Jacobi sweeps did not converge");

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](Index i, Index j) { return a(i, i) < a(j, j); });

  Spectrum out{Vector(n), Matrix(n, n)};
  for (Index j = 0; j < n; ++j) {
    const Index src = order[static_cast<std::size_t>(j)];
    out.eigenvalues[j] = a(src, src);
    out.eigenvectors.col(j) = v.col(src);
  }
  return out;
}

double spectral_norm(const SymMatrix& m) {
  const Vector& ev = m.spectrum().eigenvalues;
  return std::max(std::abs(ev[0]), std::abs(ev[ev.size() - 1]));
}

double condition_number(const SymMatrix& m) {
  const Vector abs_ev = m.spectrum().eigenvalues.cwiseAbs();
  const double hi = abs_ev.maxCoeff();
  const double lo = abs_ev.minCoeff();
  require(hi > 0.0 && lo >= 1e-14 * hi, ErrorKind::singular_matrix,
          "matrix is numerically singular");
  return hi / lo;
}

Vector solve_spd(const SymMatrix& m, const Vector& v) {
  require_dim(m, v, "solve_spd");
  const Spectrum& sp = m.spectrum();
  require(sp.eigenvalues[0] > 0.0, ErrorKind::not_positive_definite,
          "matrix has a non-positive eigenvalue");
  const Vector coords = sp.eigenvectors.transpose() * v;
  return sp.eigenvectors * coords.cwiseQuotient(sp.eigenvalues);
}

double eval_one_minus_poly(std::span<const double> coeffs, double x) {
  require(!coeffs.empty(), ErrorKind::invalid_input, "polynomial needs at least one coefficient");
  const double y = 1.0 - x;
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
  return acc;
}

Vector apply_poly(const SymMatrix& m, std::span<const double> coeffs, const Vector& v) {
  require(!coeffs.empty(), ErrorKind::invalid_input, "polynomial needs at least one coefficient");
  require(std::all_of(coeffs.begin(), coeffs.end(), [](double c) { return std::isfinite(c); }),
          ErrorKind::invalid_input, "polynomial coefficients must be finite");
  require_dim(m, v, "apply_poly");
  const Spectrum& sp = m.spectrum();
  Vector coords = sp.eigenvectors.transpose() * v;
  for (Index j = 0; j < coords.size(); ++j) {
    coords[j] *= eval_one_minus_poly(coeffs, sp.eigenvalues[j]);
  }
  return sp.eigenvectors * coords;
}

}  // namespace catalyst
