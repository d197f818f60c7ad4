#pragma once

#include "stftsr/errors.hpp"

namespace stftsr {

/// Value plus first and second derivative of a kernel at one point.
struct KernelJet {
  double value = 0.0;
  double first_derivative = 0.0;
  double second_derivative = 0.0;
};

/// Window width, measurement cutoff and Fourier-series truncation of the
/// analysis window. Every operator and kernel takes its scales from here.
class WindowParams {
 public:
  /// Validates sigma > 0, f_c >= 1, N >= 0.
  WindowParams(double sigma, int f_c, int N);

  /// Like the constructor, but additionally rejects parameter sets whose
  /// truncated window series is too inaccurate (g_N/g_0 > 1e-6).
  static WindowParams strict(double sigma, int f_c, int N);

  /// Smallest N with g_N/g_0 <= tol, i.e. a truncation that keeps the
  /// dropped window coefficients below tol relative to the peak.
  static WindowParams auto_truncated(double sigma, int f_c, double tol = 1e-6);

  double sigma() const noexcept { return sigma_; }
  int f_c() const noexcept { return f_c_; }
  int N() const noexcept { return N_; }

  /// g_N / g_0 = exp(-2 pi sigma^2 N^2); the relative size of the first kept
  /// coefficient pair at the truncation edge.
  double truncation_quality() const noexcept;

  /// Degree of the trigonometric polynomials on the analysis side: f_c + N.
  int degree() const noexcept { return f_c_ + N_; }

 private:
  double sigma_;
  int f_c_;
  int N_;
};

/// g(t) = sigma^(-1/2) exp(-pi t^2 / (2 sigma^2)). Strictly positive, even.
double window_value(double t, double sigma);

/// g_n = sqrt(2 sigma) exp(-2 pi sigma^2 n^2): the nth Fourier coefficient of
/// the 1-periodized window. Positive, even in n, decreasing in |n|.
double window_fourier_coefficient(int n, double sigma);

/// Periodization sum_j g(t + j); the sum is truncated once the images drop
/// below double precision.
double periodized_window_value(double t, double sigma);

/// Autocorrelation of the window, G(t) = exp(-pi t^2 / (4 sigma^2)), with
/// G'(t) = -(pi t / (2 sigma^2)) G(t) and
/// G''(t) = (pi^2 t^2 / (4 sigma^4) - pi / (2 sigma^2)) G(t).
KernelJet autocorrelation_jet(double t, double sigma);

/// sum_j G(t + j) (value only), used by the torus-side inversion formula.
double periodized_autocorrelation_value(double t, double sigma);

}  // namespace stftsr
