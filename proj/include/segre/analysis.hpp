#ifndef SEGRE_ANALYSIS_HPP
#define SEGRE_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "segre/averaging.hpp"
#include "segre/model.hpp"
#include "segre/series.hpp"

namespace segre {

/// Order-N verdict.  On failure carries the first failing power and the
/// nonzero discrepancy series; re-running that single check reproduces it.
struct Witness {
    int ell = 0;
    TruncatedSeries discrepancy;
};

struct Verdict {
    bool holds = false;
    int order = 0;
    std::optional<Witness> witness;
};

struct ExtensionVerdict {
    Verdict verdict;
    std::optional<TruncatedSeries> extension; // candidate holomorphic extension A(f)
};

/// f (over the full signature) is the restriction of a holomorphic function,
/// to order N, iff average(f^l) = average(f)^l for l = 1..k.
ExtensionVerdict is_holomorphic_restriction(const TruncatedSeries& f, const SegreModel& model,
                                            int N, int jobs = 1);

/// f and g agree on the variety, to order N, iff average((f-g)^l) = 0 for
/// l = 1..k.
Verdict equal_on_variety(const TruncatedSeries& f, const TruncatedSeries& g,
                         const SegreModel& model, int N, int jobs = 1);

/// A holomorphic f (over (z,w), with real constant term) is real-valued on
/// the variety, to order N, iff raverage(conj(f)^l) = f^l for l = 1..k.
Verdict is_real_valued(const TruncatedSeries& f, const SegreModel& model, int N, int jobs = 1);

/// Solution of the weighted-degree-k reality conditions: the polynomial
/// a z^k + b w is real-valued on the model.  The phase of any flattening is
/// determined by b: (cos, sin) is proportional to (Re b, -Im b).
struct PhaseCandidate {
    GaussianRational b; // coefficient of w
    GaussianRational a; // coefficient of z^k, a = conj(b) conj(alpha_0) - b alpha_k
};

struct FlatteningResult {
    int degree_bound = 0;
    int order = 0;
    std::vector<PhaseCandidate> phase_candidates;  // basis of the degree-k system
    std::vector<TruncatedSeries> linear_basis;     // solutions of raverage(conj f) = f
    std::vector<TruncatedSeries> verified;         // members passing l = 1..k
};

/// Flattening search on a hypersurface model.
///   (i)  solves the degree-k compatibility system over (Re b, Im b);
///   (ii) solves raverage(conj f) - f = 0 degree by degree as an exact
///        real-linear system in the coefficients of f, weighted degree <= D;
///   (iii) verifies each basis candidate against l = 2..k to order N.
/// Errors if D < k.  Basis vectors are normalized (primitive integer
/// coordinates, first nonzero positive) and sorted by leading monomial.
FlatteningResult flatten_search(const ModelHypersurface& m, int D, int N);

/// Recovers a hypersurface model from the table entries raverage(zbar^a),
/// a = 1..k: power sums scale to elementary symmetric functions, and the
/// monic fiber polynomial yields alpha and the w-coefficient.  Errors if the
/// recovered top symmetric function lacks the w term (input not from a model
/// hypersurface).
ModelHypersurface reconstruct_model(const RestrictedOperatorTable& table, int k);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const ExtensionVerdict& v);
nlohmann::json to_json(const FlatteningResult& r);

} // namespace segre

#endif
