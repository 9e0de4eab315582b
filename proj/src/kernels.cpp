#include "ncm/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace ncm::kernels {

namespace scalar {

void matmul(const cplx* a, const cplx* b, cplx* c, int n) {
    std::memset(static_cast<void*>(c), 0, sizeof(cplx) * static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const cplx* arow = a + static_cast<size_t>(i) * n;
        cplx* crow = c + static_cast<size_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            const cplx aik = arow[k];
            if (aik == cplx{}) continue;
            const cplx* brow = b + static_cast<size_t>(k) * n;
            for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

cplx dotc(const cplx* x, const cplx* y, int n) {
    cplx s{};
    for (int i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

void axpy(cplx alpha, const cplx* x, cplx* y, int n) {
    for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal(cplx alpha, cplx* x, int n) {
    for (int i = 0; i < n; ++i) x[i] *= alpha;
}

double nrm2sq(const cplx* x, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::norm(x[i]);
    return s;
}

}  // namespace scalar

namespace {

struct KernelTable {
    void (*matmul)(const cplx*, const cplx*, cplx*, int);
    cplx (*dotc)(const cplx*, const cplx*, int);
    void (*axpy)(cplx, const cplx*, cplx*, int);
    void (*scal)(cplx, cplx*, int);
    double (*nrm2sq)(const cplx*, int);
    Isa isa;
};

constexpr KernelTable kScalarTable{scalar::matmul, scalar::dotc, scalar::axpy,
                                   scalar::scal,   scalar::nrm2sq, Isa::scalar};

#if defined(__x86_64__)
constexpr KernelTable kAvx2Table{avx2::matmul, avx2::dotc, avx2::axpy,
                                 avx2::scal,   avx2::nrm2sq, Isa::avx2};
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* detect_table() {
#if defined(__x86_64__)
    const char* env = std::getenv("NCMOMENT_KERNEL");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return &kScalarTable;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return &kAvx2Table;
    }
    if (cpu_has_avx2()) return &kAvx2Table;
#endif
    return &kScalarTable;
}

const KernelTable* g_table = nullptr;

const KernelTable& table() {
    if (g_table == nullptr) g_table = detect_table();
    return *g_table;
}

}  // namespace

Isa active() { return table().isa; }

bool avx2_supported() { return cpu_has_avx2(); }

std::string isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void force_isa(Isa isa) {
    if (isa == Isa::scalar) {
        g_table = &kScalarTable;
        return;
    }
#if defined(__x86_64__)
    if (isa == Isa::avx2 && cpu_has_avx2()) {
        g_table = &kAvx2Table;
        return;
    }
#endif
    throw std::runtime_error("requested kernel ISA not available on this CPU");
}

void matmul(const cplx* a, const cplx* b, cplx* c, int n) { table().matmul(a, b, c, n); }
cplx dotc(const cplx* x, const cplx* y, int n) { return table().dotc(x, y, n); }
void axpy(cplx alpha, const cplx* x, cplx* y, int n) { table().axpy(alpha, x, y, n); }
void scal(cplx alpha, cplx* x, int n) { table().scal(alpha, x, n); }
double nrm2sq(const cplx* x, int n) { return table().nrm2sq(x, n); }

}  // namespace ncm::kernels
