#ifndef SEGRE_MODEL_HPP
#define SEGRE_MODEL_HPP

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "segre/series.hpp"

namespace segre {

/// Model hypersurface w = p(z, zbar) with p(z, zbar) = sum_j alpha_j z^j zbar^{k-j}.
/// Segre nondegeneracy requires alpha_0 != 0; general alpha are accepted
/// (the Bishop surface has alpha_0 = alpha_2 = lambda, alpha_1 = 1).
struct ModelHypersurface {
    int k = 0;
    std::vector<GaussianRational> alpha; // alpha_0 .. alpha_k

    void validate() const;
    bool operator==(const ModelHypersurface&) const = default;
};

/// Coordinate change making alpha_0 = 1, alpha_k = 0 (shear in w followed by
/// a rescale of w).  Explicit utility; never applied implicitly.
ModelHypersurface normalized(const ModelHypersurface& m);

ModelHypersurface quadric_model(const Rational& mu);  // w = zbar^2 + 2 mu z zbar
ModelHypersurface bishop_model(const Rational& lambda); // w = lambda(z^2+zbar^2) + z zbar

/// Codimension-two variety whose Segre fiber is a Cartesian product of two
/// root sets: zeta^zeta_count = u(z,w) and omega^omega_count = v(z,w).
/// Mixed power sums then factor as products of classical power sums.
struct ProductFiberModel {
    std::string name;
    int zeta_count = 0;
    int omega_count = 0;
    int weight_z = 1;
    int weight_w = 1;
    TruncatedSeries zeta_power;  // u(z,w)
    TruncatedSeries omega_power; // v(z,w)

    int multiplicity() const { return zeta_count * omega_count; }
};

/// The built-in product model: z^3 = w^2 + wbar^2, whose fiber over (z,w)
/// is { zeta^3 = z^3, omega^2 = z^3 - w^2 }, of multiplicity 6.  Weights
/// (2,3) make both fiber equations weighted-homogeneous.
ProductFiberModel silly_cubic_model();

/// Elementary symmetric functions of the zeta-coordinates of the Segre fiber
/// of a hypersurface model, plus the substitution rule for the
/// antiholomorphic coordinate omega = pbar(zeta, z).
///
/// The sign convention is pinned by the identity
///   zeta^k - e_1 zeta^{k-1} + ... + (-1)^k e_k
///     = (alpha_0 zeta^k + alpha_1 z zeta^{k-1} + ... + (alpha_k z^k - w)) / alpha_0.
struct FiberData {
    int k = 0;
    std::vector<GaussianRational> alpha;
    Signature sig_zw;   // z, w with weights 1, k
    Signature sig_full; // z, w, zbar, wbar
    std::vector<TruncatedSeries> elementary; // e_1..e_k, exact polynomials over sig_zw

    /// pbar(v, z) = sum_j conj(alpha_j) v^j z^{k-j} over the given signature,
    /// where v names the antiholomorphic slot ("zbar" or "zeta").
    TruncatedSeries pbar(const Signature& sig, std::string_view v, int order) const;
    /// p(z, v) = sum_j alpha_j z^j v^{k-j}.
    TruncatedSeries defining_p(const Signature& sig, std::string_view v, int order) const;
};

FiberData fiber_data(const ModelHypersurface& m);

/// S_{a,b}(z,w) = sum over fiber points of zeta^a omega^b, an exact
/// weighted-homogeneous polynomial of degree a + k b, truncated at N.
TruncatedSeries mixed_power_sum(const FiberData& fd, int a, int b, int N);
TruncatedSeries mixed_power_sum(const ProductFiberModel& pm, int a, int b, int N);

/// The coefficients Phi_gamma, |gamma| = k, of u^gamma in
/// prod_j (u1 zbar + u2 wbar - u1 zeta^j - u2 omega^j): polynomials in
/// (zbar, wbar) with leading term (k!/gamma!) zbar^{g1} wbar^{g2} and series
/// coefficients in (z,w).  Jointly they cut out the complexified variety.
struct StandardDefiningEquations {
    int k = 0;
    std::map<std::pair<int, int>, TruncatedSeries> phi; // gamma = (g1, g2)
};

StandardDefiningEquations standard_defining_equations(const FiberData& fd, int N);

/// Uniform handle over the supported model families.
class SegreModel {
public:
    explicit SegreModel(ModelHypersurface m);
    explicit SegreModel(ProductFiberModel m);

    bool is_hypersurface() const;
    const ModelHypersurface& hypersurface() const; // throws unless hypersurface
    const ProductFiberModel& product() const;      // throws unless product
    const FiberData& fiber() const;                // throws unless hypersurface

    int multiplicity() const;
    Signature sig_zw() const { return sig_zw_; }
    Signature sig_full() const { return sig_full_; }

    TruncatedSeries mixed_power_sum(int a, int b, int N) const;

    std::string describe() const;

private:
    std::variant<ModelHypersurface, ProductFiberModel> model_;
    std::vector<FiberData> fiber_; // empty or one entry
    Signature sig_zw_;
    Signature sig_full_;
};

int segre_multiplicity(const SegreModel& m);

/// JSON config:
///   { "kind": "hypersurface", "k": 2, "alpha": [["1","0"], ...] }
///   { "kind": "product", "name": "silly-cubic" }
/// Gaussian rationals are [re, im] pairs of "p/q" strings.
SegreModel model_from_json(const nlohmann::json& j);
SegreModel load_model(const std::string& path);
nlohmann::json model_config(const ModelHypersurface& m);

} // namespace segre

#endif
