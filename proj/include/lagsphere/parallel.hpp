#ifndef LAGSPHERE_PARALLEL_HPP
#define LAGSPHERE_PARALLEL_HPP

/// OpenMP-parallel kernels with a serial reference path. Work is always
/// evaluated into index-ordered buffers and reduced through a fixed pairwise
/// tree, so the serial and parallel paths produce byte-identical results.

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lagsphere {

enum class Exec { Serial, Parallel };

template <class F>
void par_for(int n, Exec mode, F&& body) {
#ifdef _OPENMP
    if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)mode;
#endif
    for (int i = 0; i < n; ++i) body(i);
}

/// Deterministic pairwise summation over a fixed index order.
inline double pairwise_sum(const double* a, std::size_t n) {
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = a[0];
        for (std::size_t i = 1; i < n; ++i) s += a[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(a, half) + pairwise_sum(a + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& a) { return pairwise_sum(a.data(), a.size()); }

}  // namespace lagsphere

#endif
