#ifndef SEGRE_AVERAGING_HPP
#define SEGRE_AVERAGING_HPP

#include <map>
#include <utility>
#include <vector>

#include "segre/model.hpp"
#include "segre/series.hpp"

namespace segre {

/// Representative of a class in the local ring of a hypersurface model:
/// f = sum_{j<k} coeff[j](z,w) zbar^j, with no wbar and zbar-degree < k.
struct ReducedRepresentative {
    int k = 0;
    std::vector<TruncatedSeries> coeff; // coeff[j] over (z,w), j = 0..k-1

    /// Reassembles sum_j coeff[j] zbar^j over the full signature.
    TruncatedSeries as_series(const Signature& sig_full, int order) const;
};

/// Rewrites f modulo the model ideal: substitutes wbar <- pbar(zbar, z), then
/// eliminates zbar powers >= k through the monic fiber relation.  Each rewrite
/// strictly lowers the zbar-degree of a monomial, so the recursion terminates;
/// both steps preserve weighted degree, so no truncation error is introduced.
ReducedRepresentative reduce(const TruncatedSeries& f, const FiberData& fd, int N);

/// The averaging operator: mean of f over the k Segre-fiber points, a series
/// in (z,w).  Linear, annihilates the model ideal, reproduces holomorphic
/// series.  Hypersurface models go through reduce() and the fiber power sums;
/// product-fiber models substitute closed-form mixed power sums monomialwise.
TruncatedSeries average(const TruncatedSeries& f, const SegreModel& model, int N);

/// The restricted operator: average() on antiholomorphic input.  Errors if
/// the input involves z or w.
TruncatedSeries raverage(const TruncatedSeries& g, const SegreModel& model, int N);

/// Table of raverage(zbar^a wbar^b) for all a + k b <= degree_bound.
struct RestrictedOperatorTable {
    int k = 0;
    int degree_bound = 0;
    int order = 0;
    int weight_z = 1;
    int weight_w = 1;
    std::map<std::pair<int, int>, TruncatedSeries> entries;

    const TruncatedSeries& at(int a, int b) const;
    bool contains(int a, int b) const { return entries.count({a, b}) != 0; }
};

RestrictedOperatorTable r_table(const SegreModel& model, int degree_bound, int N, int jobs = 1);

nlohmann::json to_json(const RestrictedOperatorTable& t);
RestrictedOperatorTable r_table_from_json(const nlohmann::json& j);

/// Compares sum_a raverage(zbar^a) s^a against the classical rational
/// generating function of the fiber power sums,
///   (1/k) (k g(s) - s g'(s)) / g(s),  g(s) = sum_j (-1)^j e_j s^j,
/// coefficientwise through s^M.  Requires N >= M.
struct GeneratingSeriesReport {
    int s_order = 0;
    int order = 0;
    bool agrees = false;
    std::vector<bool> per_coefficient; // index a = 0..s_order
    TruncatedSeries lhs;               // assembled from raverage values
    TruncatedSeries rhs;               // rational generating identity
};

GeneratingSeriesReport generating_series_check(const FiberData& fd, int N, int M);

nlohmann::json to_json(const GeneratingSeriesReport& r);

} // namespace segre

#endif
