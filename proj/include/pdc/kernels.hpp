#ifndef PDC_KERNELS_HPP_
#define PDC_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <string_view>

// Inner-loop kernels used by the dense symmetric factorizations.
//
// Every kernel has a portable scalar reference and, where the build and the
// CPU allow it, a vectorized variant. The variant in use is chosen once per
// process from cpuid; setting PDC_SIMD=scalar in the environment forces the
// reference path. Variants agree with the reference up to floating-point
// reassociation (see tests/test_kernels.cpp).
namespace pdc::kernels {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  const char* name;
  // sum_k x[k] * y[k]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // sum_k w[k] * x[k] * y[k]
  double (*weighted_dot)(const double* w, const double* x, const double* y,
                         std::size_t n);
  // y[k] += a * x[k]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
};

const KernelTable& scalar_table();

// Null when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

// The table selected for this process.
const KernelTable& active();

bool isa_available(Isa isa);
std::string_view isa_name(Isa isa);

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}

inline double weighted_dot(std::span<const double> w, std::span<const double> x,
                           std::span<const double> y) {
  return active().weighted_dot(w.data(), x.data(), y.data(), x.size());
}

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}

namespace detail {
double dot_scalar(const double* x, const double* y, std::size_t n);
double weighted_dot_scalar(const double* w, const double* x, const double* y,
                           std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);

double dot_avx2(const double* x, const double* y, std::size_t n);
double weighted_dot_avx2(const double* w, const double* x, const double* y,
                         std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
}  // namespace detail

}  // namespace pdc::kernels

#endif  // PDC_KERNELS_HPP_
