#include "segre/model.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "segre/symm.hpp"

namespace segre {

namespace {

Rational binomial(int n, int r) {
    if (r < 0 || r > n)
        return Rational(0);
    Rational b(1);
    for (int i = 0; i < r; ++i)
        b = b * (n - i) / (i + 1);
    return b;
}

} // namespace

void ModelHypersurface::validate() const {
    if (k < 2)
        throw std::invalid_argument("hypersurface degree k must be at least 2");
    if (alpha.size() != static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument("expected k+1 coefficients alpha_0..alpha_k");
    if (alpha[0].is_zero())
        throw std::invalid_argument(
            "degenerate model: alpha_0 = 0 gives a non-finite Segre fiber");
}

ModelHypersurface normalized(const ModelHypersurface& m) {
    m.validate();
    ModelHypersurface n;
    n.k = m.k;
    n.alpha.resize(m.alpha.size());
    const GaussianRational inv = m.alpha[0].inverse();
    for (int j = 0; j < m.k; ++j)
        n.alpha[j] = m.alpha[j] * inv;
    n.alpha[m.k] = GaussianRational(0);
    return n;
}

ModelHypersurface quadric_model(const Rational& mu) {
    return ModelHypersurface{2, {GaussianRational(1), GaussianRational(Rational(2) * mu),
                                 GaussianRational(0)}};
}

ModelHypersurface bishop_model(const Rational& lambda) {
    return ModelHypersurface{2, {GaussianRational(lambda), GaussianRational(1),
                                 GaussianRational(lambda)}};
}

ProductFiberModel silly_cubic_model() {
    const Signature sig = VariableSignature::holomorphic_weighted(2, 3);
    const int N = TruncatedSeries::exact_order;
    TruncatedSeries u = TruncatedSeries::variable(sig, N, "z", 3);
    TruncatedSeries v = u - TruncatedSeries::variable(sig, N, "w", 2);
    return ProductFiberModel{"silly-cubic", 3, 2, 2, 3, u, v};
}

TruncatedSeries FiberData::pbar(const Signature& sig, std::string_view v, int order) const {
    TruncatedSeries r(sig, order);
    for (int j = 0; j <= k; ++j) {
        if (alpha[j].is_zero())
            continue;
        TruncatedSeries term = alpha[j].conj() *
                               TruncatedSeries::variable(sig, order, v, j) *
                               TruncatedSeries::variable(sig, order, "z", k - j);
        r = r + term;
    }
    return r;
}

TruncatedSeries FiberData::defining_p(const Signature& sig, std::string_view v, int order) const {
    TruncatedSeries r(sig, order);
    for (int j = 0; j <= k; ++j) {
        if (alpha[j].is_zero())
            continue;
        TruncatedSeries term = alpha[j] *
                               TruncatedSeries::variable(sig, order, "z", j) *
                               TruncatedSeries::variable(sig, order, v, k - j);
        r = r + term;
    }
    return r;
}

FiberData fiber_data(const ModelHypersurface& m) {
    m.validate();
    FiberData fd;
    fd.k = m.k;
    fd.alpha = m.alpha;
    fd.sig_zw = VariableSignature::holomorphic(m.k);
    fd.sig_full = VariableSignature::full(m.k);

    const int N = TruncatedSeries::exact_order;
    const GaussianRational inv = m.alpha[0].inverse();
    for (int j = 1; j <= m.k; ++j) {
        // (-1)^j e_j is the zeta^{k-j} coefficient of the monic fiber polynomial.
        GaussianRational c = m.alpha[j] * inv;
        if (j % 2 == 1)
            c = -c;
        TruncatedSeries ej = TruncatedSeries::variable(fd.sig_zw, N, "z", j) * c;
        if (j == m.k) {
            GaussianRational cw = inv;
            if (m.k % 2 == 0)
                cw = -cw;
            ej = ej + TruncatedSeries::variable(fd.sig_zw, N, "w") * cw;
        }
        fd.elementary.push_back(ej);
    }
    return fd;
}

TruncatedSeries mixed_power_sum(const FiberData& fd, int a, int b, int N) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("mixed power sum needs nonnegative exponents");
    const int exact = TruncatedSeries::exact_order;

    // zeta^a * pbar(zeta,z)^b as a polynomial in zeta with (z,w)-coefficients.
    std::vector<TruncatedSeries> poly{
        TruncatedSeries::constant(fd.sig_zw, exact, GaussianRational(1))};
    for (int rep = 0; rep < b; ++rep) {
        std::vector<TruncatedSeries> next(poly.size() + static_cast<std::size_t>(fd.k),
                                          TruncatedSeries(fd.sig_zw, exact));
        for (std::size_t d = 0; d < poly.size(); ++d) {
            if (poly[d].is_zero())
                continue;
            for (int j = 0; j <= fd.k; ++j) {
                if (fd.alpha[j].is_zero())
                    continue;
                next[d + static_cast<std::size_t>(j)] =
                    next[d + static_cast<std::size_t>(j)] +
                    poly[d] * (fd.alpha[j].conj() *
                               TruncatedSeries::variable(fd.sig_zw, exact, "z", fd.k - j));
            }
        }
        poly = std::move(next);
    }

    const int max_power = static_cast<int>(poly.size()) - 1 + a;
    const std::vector<TruncatedSeries> psums =
        power_sums_from_elementary(fd.elementary, max_power);

    TruncatedSeries result(fd.sig_zw, exact);
    for (std::size_t d = 0; d < poly.size(); ++d) {
        if (poly[d].is_zero())
            continue;
        const int power = static_cast<int>(d) + a;
        const TruncatedSeries& ps =
            power == 0 ? TruncatedSeries::constant(fd.sig_zw, exact, GaussianRational(fd.k))
                       : psums[power - 1];
        result = result + poly[d] * ps;
    }
    return truncate(result, N);
}

TruncatedSeries mixed_power_sum(const ProductFiberModel& pm, int a, int b, int N) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("mixed power sum needs nonnegative exponents");
    const Signature sig = pm.zeta_power.signature();
    if (a % pm.zeta_count != 0 || b % pm.omega_count != 0)
        return TruncatedSeries(sig, N);
    TruncatedSeries r = TruncatedSeries::constant(
        sig, TruncatedSeries::exact_order, GaussianRational(pm.multiplicity()));
    r = r * pow(pm.zeta_power, a / pm.zeta_count) * pow(pm.omega_power, b / pm.omega_count);
    return truncate(r, N);
}

StandardDefiningEquations standard_defining_equations(const FiberData& fd, int N) {
    const int k = fd.k;
    const int exact = TruncatedSeries::exact_order;
    using UPoly = std::map<std::pair<int, int>, TruncatedSeries>; // (a,b) -> coeff of u1^a u2^b

    // Power sums of the linear forms u1 zeta^j + u2 omega^j over the fiber:
    // P_m(u) = sum_{a+b=m} C(m,a) u1^a u2^b S_{a,b}.
    std::vector<UPoly> P(static_cast<std::size_t>(k) + 1);
    for (int m = 1; m <= k; ++m)
        for (int a = 0; a <= m; ++a) {
            TruncatedSeries s = mixed_power_sum(fd, a, m - a, exact);
            if (!s.is_zero())
                P[m][{a, m - a}] = GaussianRational(binomial(m, a)) * s;
        }

    auto convolve = [&](const UPoly& A, const UPoly& B) {
        UPoly out;
        for (const auto& [ea, sa] : A)
            for (const auto& [eb, sb] : B) {
                const std::pair<int, int> key{ea.first + eb.first, ea.second + eb.second};
                TruncatedSeries prod = sa * sb;
                auto it = out.find(key);
                if (it == out.end())
                    out.emplace(key, std::move(prod));
                else
                    it->second = it->second + prod;
            }
        return out;
    };

    // Newton: m E_m = sum_{i=1..m} (-1)^{i-1} E_{m-i} P_i.
    std::vector<UPoly> E(static_cast<std::size_t>(k) + 1);
    E[0][{0, 0}] = TruncatedSeries::constant(fd.sig_zw, exact, GaussianRational(1));
    for (int m = 1; m <= k; ++m) {
        UPoly acc;
        for (int i = 1; i <= m; ++i) {
            UPoly term = convolve(E[m - i], P[i]);
            for (auto& [key, s] : term) {
                if (i % 2 == 0)
                    s = -s;
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(key, std::move(s));
                else
                    it->second = it->second + s;
            }
        }
        const GaussianRational scale(Rational(1) / m);
        for (auto& [key, s] : acc)
            E[m][key] = scale * s;
    }

    StandardDefiningEquations eqs;
    eqs.k = k;
    for (int g1 = k; g1 >= 0; --g1) {
        const int g2 = k - g1;
        TruncatedSeries phi(fd.sig_full, exact);
        for (int ell = 0; ell <= k; ++ell) {
            for (const auto& [ab, s] : E[ell]) {
                const auto [a, b] = ab;
                if (a > g1 || b > g2)
                    continue;
                const Rational binom = binomial(k - ell, g1 - a);
                if (binom == 0)
                    continue;
                GaussianRational c(binom);
                if (ell % 2 == 1)
                    c = -c;
                Monomial bars(fd.sig_full->size(), 0);
                bars[*fd.sig_full->index_of("zbar")] = g1 - a;
                bars[*fd.sig_full->index_of("wbar")] = g2 - b;
                phi = phi + convert_to(s, fd.sig_full) *
                                TruncatedSeries::monomial(fd.sig_full, exact, bars, c);
            }
        }
        eqs.phi.emplace(std::pair{g1, g2}, truncate(phi, N));
    }
    return eqs;
}

SegreModel::SegreModel(ModelHypersurface m) : model_(std::move(m)) {
    const auto& h = std::get<ModelHypersurface>(model_);
    fiber_.push_back(fiber_data(h));
    sig_zw_ = fiber_.front().sig_zw;
    sig_full_ = fiber_.front().sig_full;
}

SegreModel::SegreModel(ProductFiberModel m) : model_(std::move(m)) {
    const auto& p = std::get<ProductFiberModel>(model_);
    sig_zw_ = p.zeta_power.signature();
    sig_full_ = VariableSignature::full_weighted(p.weight_z, p.weight_w);
}

bool SegreModel::is_hypersurface() const {
    return std::holds_alternative<ModelHypersurface>(model_);
}

const ModelHypersurface& SegreModel::hypersurface() const {
    if (!is_hypersurface())
        throw std::invalid_argument("operation requires a hypersurface model");
    return std::get<ModelHypersurface>(model_);
}

const ProductFiberModel& SegreModel::product() const {
    if (is_hypersurface())
        throw std::invalid_argument("operation requires a product-fiber model");
    return std::get<ProductFiberModel>(model_);
}

const FiberData& SegreModel::fiber() const {
    if (fiber_.empty())
        throw std::invalid_argument("operation requires a hypersurface model");
    return fiber_.front();
}

int SegreModel::multiplicity() const {
    return is_hypersurface() ? hypersurface().k : product().multiplicity();
}

TruncatedSeries SegreModel::mixed_power_sum(int a, int b, int N) const {
    return is_hypersurface() ? segre::mixed_power_sum(fiber(), a, b, N)
                             : segre::mixed_power_sum(product(), a, b, N);
}

std::string SegreModel::describe() const {
    std::ostringstream os;
    if (is_hypersurface()) {
        const auto& h = hypersurface();
        os << "hypersurface k=" << h.k << ", alpha=[";
        for (int j = 0; j <= h.k; ++j)
            os << (j ? ", " : "") << h.alpha[j].str();
        os << "]";
    } else {
        os << "product-fiber '" << product().name << "', multiplicity "
           << product().multiplicity();
    }
    return os.str();
}

int segre_multiplicity(const SegreModel& m) {
    return m.multiplicity();
}

SegreModel model_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("model config must be an object with a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "hypersurface") {
        ModelHypersurface m;
        m.k = j.at("k").get<int>();
        for (const auto& pair : j.at("alpha")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("alpha entries must be [re, im] string pairs");
            m.alpha.push_back(GaussianRational::parse(pair[0].get<std::string>(),
                                                      pair[1].get<std::string>()));
        }
        m.validate();
        return SegreModel(m);
    }
    if (kind == "product") {
        const std::string name = j.at("name").get<std::string>();
        if (name != "silly-cubic")
            throw std::invalid_argument("unknown product-fiber model '" + name + "'");
        return SegreModel(silly_cubic_model());
    }
    throw std::invalid_argument("unknown model kind '" + kind + "'");
}

SegreModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open model config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed model config '" + path + "': " + e.what());
    }
    return model_from_json(j);
}

nlohmann::json model_config(const ModelHypersurface& m) {
    nlohmann::json j;
    j["kind"] = "hypersurface";
    j["k"] = m.k;
    nlohmann::json alpha = nlohmann::json::array();
    for (const auto& a : m.alpha)
        alpha.push_back({rational_str(a.real()), rational_str(a.imag())});
    j["alpha"] = alpha;
    return j;
}

} // namespace segre
