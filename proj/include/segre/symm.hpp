#ifndef SEGRE_SYMM_HPP
#define SEGRE_SYMM_HPP

#include <vector>

#include "segre/series.hpp"

namespace segre {

/// Power sums p_1..p_m of k quantities whose elementary symmetric functions
/// are e = (e_1..e_k), by the Newton recursion
///   p_m = e_1 p_{m-1} - e_2 p_{m-2} + ... + (-1)^{m-1} m e_m
/// with e_j = 0 for j > k.  Entries are series over a common signature.
std::vector<TruncatedSeries> power_sums_from_elementary(const std::vector<TruncatedSeries>& e,
                                                        int m);

/// Inverse recursion: e_1..e_k from p = (p_1..p_k).  Exact over Q(i);
/// round-trips with power_sums_from_elementary.
std::vector<TruncatedSeries> elementary_from_power_sums(const std::vector<TruncatedSeries>& p);

} // namespace segre

#endif
