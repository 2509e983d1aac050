#include "segre/symm.hpp"

#include <stdexcept>

namespace segre {

std::vector<TruncatedSeries> power_sums_from_elementary(const std::vector<TruncatedSeries>& e,
                                                        int m) {
    if (e.empty())
        throw std::invalid_argument("need at least one elementary symmetric function");
    const int k = static_cast<int>(e.size());
    const Signature sig = e.front().signature();
    const int order = e.front().order();

    std::vector<TruncatedSeries> p;
    p.reserve(static_cast<std::size_t>(m) + 1);
    p.push_back(TruncatedSeries::constant(sig, order, GaussianRational(k)));
    for (int i = 1; i <= m; ++i) {
        TruncatedSeries pi(sig, order);
        for (int j = 1; j < i && j <= k; ++j) {
            const TruncatedSeries term = e[j - 1] * p[i - j];
            pi = (j % 2 == 1) ? pi + term : pi - term;
        }
        if (i <= k) {
            const TruncatedSeries term = GaussianRational(i) * e[i - 1];
            pi = (i % 2 == 1) ? pi + term : pi - term;
        }
        p.push_back(pi);
    }
    p.erase(p.begin());
    return p;
}

std::vector<TruncatedSeries> elementary_from_power_sums(const std::vector<TruncatedSeries>& p) {
    if (p.empty())
        throw std::invalid_argument("need at least one power sum");
    const int k = static_cast<int>(p.size());
    const Signature sig = p.front().signature();
    const int order = p.front().order();

    // m e_m = sum_{i=1..m} (-1)^{i-1} e_{m-i} p_i, with e_0 = 1.
    std::vector<TruncatedSeries> e;
    e.reserve(static_cast<std::size_t>(k) + 1);
    e.push_back(TruncatedSeries::constant(sig, order, GaussianRational(1)));
    for (int m = 1; m <= k; ++m) {
        TruncatedSeries acc(sig, order);
        for (int i = 1; i <= m; ++i) {
            const TruncatedSeries term = e[m - i] * p[i - 1];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e.push_back(GaussianRational(Rational(1) / m) * acc);
    }
    e.erase(e.begin());
    return e;
}

} // namespace segre
