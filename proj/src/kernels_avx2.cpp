// AVX2+FMA variants. One __m256d holds two interleaved complex doubles
// [re0, im0, re1, im1]; complex products use the movedup/permute/fmaddsub
// pattern. Compiled with -mavx2 -mfma for this translation unit only;
// callers go through the runtime dispatch in kernels.cpp.

#if defined(__x86_64__)

#include "ncm/kernels.hpp"

#include <immintrin.h>

#include <cstring>

namespace ncm::kernels::avx2 {

namespace {

// (re,im) broadcast halves of a complex scalar.
struct BroadcastC {
    __m256d re;
    __m256d im;
};

inline BroadcastC broadcast(cplx a) {
    const __m256d v = _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&a));
    return {_mm256_movedup_pd(v), _mm256_permute_pd(v, 0xF)};
}

// acc + a*x for two complex lanes.
inline __m256d cmul_acc(__m256d acc, const BroadcastC& a, __m256d x) {
    const __m256d x_sw = _mm256_permute_pd(x, 0x5);
    const __m256d t = _mm256_mul_pd(x_sw, a.im);
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(x, a.re, t));
}

inline const double* dptr(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dptr(cplx* p) { return reinterpret_cast<double*>(p); }

}  // namespace

void matmul(const cplx* a, const cplx* b, cplx* c, int n) {
    std::memset(static_cast<void*>(c), 0, sizeof(cplx) * static_cast<size_t>(n) * n);
    const int nv = n & ~1;
    for (int i = 0; i < n; ++i) {
        const cplx* arow = a + static_cast<size_t>(i) * n;
        cplx* crow = c + static_cast<size_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            const cplx aik = arow[k];
            if (aik == cplx{}) continue;
            const BroadcastC av = broadcast(aik);
            const cplx* brow = b + static_cast<size_t>(k) * n;
            int j = 0;
            for (; j < nv; j += 2) {
                const __m256d bv = _mm256_loadu_pd(dptr(brow + j));
                const __m256d cv = _mm256_loadu_pd(dptr(crow + j));
                _mm256_storeu_pd(dptr(crow + j), cmul_acc(cv, av, bv));
            }
            for (; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

cplx dotc(const cplx* x, const cplx* y, int n) {
    // direct:  even lanes xr*yr, odd lanes xi*yi  -> re = sum of all lanes
    // crossed: even lanes xi*yr, odd lanes xr*yi  -> im = sum(odd) - sum(even)
    __m256d direct = _mm256_setzero_pd();
    __m256d crossed = _mm256_setzero_pd();
    const int nv = n & ~1;
    int i = 0;
    for (; i < nv; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dptr(x + i));
        const __m256d yv = _mm256_loadu_pd(dptr(y + i));
        direct = _mm256_fmadd_pd(xv, yv, direct);
        crossed = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, crossed);
    }
    alignas(32) double d[4], cr[4];
    _mm256_store_pd(d, direct);
    _mm256_store_pd(cr, crossed);
    double re = d[0] + d[1] + d[2] + d[3];
    double im = (cr[1] - cr[0]) + (cr[3] - cr[2]);
    for (; i < n; ++i) {
        const cplx t = std::conj(x[i]) * y[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

void axpy(cplx alpha, const cplx* x, cplx* y, int n) {
    const BroadcastC av = broadcast(alpha);
    const int nv = n & ~1;
    int i = 0;
    for (; i < nv; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dptr(x + i));
        const __m256d yv = _mm256_loadu_pd(dptr(y + i));
        _mm256_storeu_pd(dptr(y + i), cmul_acc(yv, av, xv));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal(cplx alpha, cplx* x, int n) {
    const BroadcastC av = broadcast(alpha);
    const __m256d zero = _mm256_setzero_pd();
    const int nv = n & ~1;
    int i = 0;
    for (; i < nv; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dptr(x + i));
        _mm256_storeu_pd(dptr(x + i), cmul_acc(zero, av, xv));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

double nrm2sq(const cplx* x, int n) {
    __m256d acc = _mm256_setzero_pd();
    const int nv = n & ~1;
    int i = 0;
    for (; i < nv; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dptr(x + i));
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    alignas(32) double d[4];
    _mm256_store_pd(d, acc);
    double s = d[0] + d[1] + d[2] + d[3];
    for (; i < n; ++i) s += std::norm(x[i]);
    return s;
}

}  // namespace ncm::kernels::avx2

#endif  // __x86_64__
