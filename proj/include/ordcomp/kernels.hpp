#ifndef ORDCOMP_KERNELS_HPP
#define ORDCOMP_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "ordcomp/dlat.hpp"
#include "ordcomp/finite.hpp"

namespace ordcomp::kernels {

// Prime-filter subset scan. Returns member masks in increasing order. The
// parallel version splits the subset range across OpenMP threads and must
// return exactly what the serial one does.
std::vector<std::uint32_t> prime_filter_scan_serial(const FinDLat& d);
std::vector<std::uint32_t> prime_filter_scan_parallel(const FinDLat& d);

// Every order-preserving map from -> to agreeing with `fixed` where
// fixed[i] >= 0. Maps are listed in lexicographic order.
std::vector<std::vector<int>> monotone_maps_serial(const FinPoset& from, const FinPoset& to,
                                                   const std::vector<int>& fixed);
std::vector<std::vector<int>> monotone_maps_parallel(const FinPoset& from, const FinPoset& to,
                                                     const std::vector<int>& fixed);

// Sub-families of Up(P) (as masks over P.upsets(), in that order) that are
// Priestley bases: bounded sublattices that separate x ≰ y and realize every
// singleton as a difference. At most 20 upsets.
std::vector<std::uint32_t> priestley_basis_scan_serial(const FinPoset& p);
std::vector<std::uint32_t> priestley_basis_scan_parallel(const FinPoset& p);

bool parallel_enabled();
int max_threads();

}  // namespace ordcomp::kernels

#endif  // ORDCOMP_KERNELS_HPP
