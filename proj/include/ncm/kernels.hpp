#pragma once

#include <complex>
#include <cstdint>
#include <string>

// Low-level complex arithmetic kernels. Every dense loop in the library
// funnels through these so a single runtime dispatch (scalar / AVX2)
// covers the whole numeric stack. Arrays are contiguous, row-major for
// matrices; std::complex<double> is layout-compatible with double[2].

namespace ncm::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

// ISA actually in use. Detected once; override with force_isa() or the
// NCMOMENT_KERNEL environment variable (values: "scalar", "avx2").
Isa active();
std::string isa_name(Isa isa);
bool avx2_supported();

// Test hook. Throws if the requested ISA is not available on this CPU.
void force_isa(Isa isa);

// c = a * b for n x n row-major matrices; c must not alias a or b.
void matmul(const cplx* a, const cplx* b, cplx* c, int n);
// sum_i conj(x_i) * y_i
cplx dotc(const cplx* x, const cplx* y, int n);
// y += alpha * x
void axpy(cplx alpha, const cplx* x, cplx* y, int n);
// x *= alpha
void scal(cplx alpha, cplx* x, int n);
// sum_i |x_i|^2
double nrm2sq(const cplx* x, int n);

namespace scalar {
void matmul(const cplx* a, const cplx* b, cplx* c, int n);
cplx dotc(const cplx* x, const cplx* y, int n);
void axpy(cplx alpha, const cplx* x, cplx* y, int n);
void scal(cplx alpha, cplx* x, int n);
double nrm2sq(const cplx* x, int n);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
void matmul(const cplx* a, const cplx* b, cplx* c, int n);
cplx dotc(const cplx* x, const cplx* y, int n);
void axpy(cplx alpha, const cplx* x, cplx* y, int n);
void scal(cplx alpha, cplx* x, int n);
double nrm2sq(const cplx* x, int n);
}  // namespace avx2
#endif

}  // namespace ncm::kernels
