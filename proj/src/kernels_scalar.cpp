#include "pdc/kernels.hpp"

namespace pdc::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += x[k] * y[k];
  return sum;
}

double weighted_dot_scalar(const double* w, const double* x, const double* y,
                           std::size_t n) {
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += w[k] * x[k] * y[k];
  return sum;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += a * x[k];
}

}  // namespace pdc::kernels::detail
