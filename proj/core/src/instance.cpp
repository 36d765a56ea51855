#include "catalyst/instance.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "catalyst/errors.hpp"

namespace catalyst {

std::string_view to_string(SpectrumConvention convention) noexcept {
  return convention == SpectrumConvention::gram ? "gram" : "linear";
}

SpectrumConvention parse_spectrum_convention(std::string_view text) {
  if (text == "linear") return SpectrumConvention::linear;
  if (text == "gram") return SpectrumConvention::gram;
  fail(ErrorKind::invalid_input, "unknown spectrum convention '" + std::string(text) +
                                     "' (expected linear or gram)");
}

double GaussianStream::uniform_open() {
  // 53 random bits mapped to (0, 1]; never zero, so log() below is finite.
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
  const double angle = 2.0 * std::numbers::pi * uniform_open();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Vector gaussian_vector(Index n, std::uint64_t seed) {
  require(n >= 1, ErrorKind::invalid_input, "vector length must be >= 1");
  GaussianStream stream(seed);
  Vector out(n);
  for (Index i = 0; i < n; ++i) out[i] = stream.next();
  return out;
}

Vector prescribed_spectrum(Index n, double kappa, SpectrumConvention convention) {
  require(n >= 2, ErrorKind::invalid_input, "n must be >= 2 (got " + std::to_string(n) + ")");
  require(std::isfinite(kappa) && kappa >= 1.0, ErrorKind::invalid_input,
          "kappa must be >= 1 (got " + std::to_string(kappa) + ")");
  const double lo = 1.0 / kappa;
  const double step = (1.0 - lo) / static_cast<double>(n - 1);
  Vector s(n);
  for (Index i = 0; i < n; ++i) s[i] = lo + static_cast<double>(i) * step;
  s[n - 1] = 1.0;
  if (convention == SpectrumConvention::gram) s = s.cwiseProduct(s);
  return s;
}

LinearSystemInstance generate(Index n, double kappa, std::uint64_t seed,
                              SpectrumConvention convention) {
  const Vector spectrum = prescribed_spectrum(n, kappa, convention);

  GaussianStream stream(seed);
  Matrix g(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) g(i, j) = stream.next();
  }
  Vector x_star(n);
  for (Index i = 0; i < n; ++i) x_star[i] = stream.next();
  x_star /= x_star.norm();

  const Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  // Fix column signs so that R has a non-negative diagonal.
  const Matrix& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }

  const Matrix a = q * spectrum.asDiagonal() * q.transpose();
  SymMatrix sym(0.5 * (a + a.transpose()));
  Vector b = sym.apply(x_star);

  const double true_kappa = spectrum[n - 1] / spectrum[0];
  return LinearSystemInstance{std::move(sym), std::move(b), std::move(x_star),
                              true_kappa,     kappa,        seed,
                              convention};
}

LinearSystemInstance make_instance(SymMatrix a, Vector x_star, std::uint64_t seed) {
  require(x_star.size() == a.dim(), ErrorKind::invalid_input,
          "solution length does not match matrix dimension");
  require(a.spectrum().eigenvalues[0] > 0.0, ErrorKind::not_positive_definite,
          "instance matrix must be positive-definite");
  const double kappa = condition_number(a);
  Vector b = a.apply(x_star);
  return LinearSystemInstance{std::move(a), std::move(b),
                              std::move(x_star), kappa,
                              kappa,        seed,
                              SpectrumConvention::linear};
}

}  // namespace catalyst
