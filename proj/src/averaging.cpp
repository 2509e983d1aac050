#include "segre/averaging.hpp"

#include <atomic>
#include <functional>
#include <future>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "segre/symm.hpp"

namespace segre {

namespace {

void run_indexed(int count, int jobs, const std::function<void(int)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            body(i);
    };
    std::vector<std::future<void>> futs;
    const int n = std::min(jobs, count);
    futs.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t)
        futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs)
        f.get();
}

} // namespace

TruncatedSeries ReducedRepresentative::as_series(const Signature& sig_full, int order) const {
    TruncatedSeries out(sig_full, order);
    for (int j = 0; j < k; ++j) {
        if (coeff[j].is_zero())
            continue;
        out = out + convert_to(coeff[j], sig_full) *
                        TruncatedSeries::variable(sig_full, order, "zbar", j);
    }
    return out;
}

ReducedRepresentative reduce(const TruncatedSeries& f, const FiberData& fd, int N) {
    if (*f.signature() != *fd.sig_full)
        throw std::invalid_argument("reduce expects a series over (z, w, zbar, wbar)");
    const int k = fd.k;
    const TruncatedSeries g = truncate(f, N);

    // Step 1: wbar <- pbar(zbar, z).
    const std::size_t wbar_idx = *fd.sig_full->index_of("wbar");
    TruncatedSeries no_wbar(fd.sig_full, g.order());
    bool has_wbar = false;
    for (const auto& [m, c] : g.terms())
        if (m[wbar_idx] > 0) {
            has_wbar = true;
            break;
        }
    if (has_wbar)
        no_wbar = substitute(g, "wbar", fd.pbar(fd.sig_full, "zbar", g.order()));
    else
        no_wbar = g;

    // Step 2: split by zbar-degree.
    const std::size_t zbar_idx = *fd.sig_full->index_of("zbar");
    int maxdeg = 0;
    for (const auto& [m, c] : no_wbar.terms())
        maxdeg = std::max(maxdeg, m[zbar_idx]);
    std::vector<TruncatedSeries> by_degree(static_cast<std::size_t>(maxdeg) + 1,
                                           TruncatedSeries(fd.sig_zw, N));
    {
        Monomial zw(fd.sig_zw->size(), 0);
        const std::size_t z_idx = *fd.sig_full->index_of("z");
        const std::size_t w_idx = *fd.sig_full->index_of("w");
        const std::size_t z_out = *fd.sig_zw->index_of("z");
        const std::size_t w_out = *fd.sig_zw->index_of("w");
        for (const auto& [m, c] : no_wbar.terms()) {
            zw[z_out] = m[z_idx];
            zw[w_out] = m[w_idx];
            by_degree[static_cast<std::size_t>(m[zbar_idx])].add_term(zw, c);
        }
    }

    // Step 3: rewrite table.  zbar^m for m >= k reduces to
    // sum_j (-1)^{j-1} e_j zbar^{m-j} by the monic fiber relation; iterating
    // gives zbar^m = sum_{j<k} table[m][j] zbar^j.
    std::vector<std::vector<TruncatedSeries>> table;
    table.reserve(static_cast<std::size_t>(maxdeg) + 1);
    for (int m = 0; m <= maxdeg; ++m) {
        std::vector<TruncatedSeries> row(static_cast<std::size_t>(k),
                                         TruncatedSeries(fd.sig_zw, N));
        if (m < k) {
            row[static_cast<std::size_t>(m)] =
                TruncatedSeries::constant(fd.sig_zw, N, GaussianRational(1));
        } else {
            for (int j = 1; j <= k; ++j) {
                const TruncatedSeries ej = truncate(fd.elementary[j - 1], N);
                for (int t = 0; t < k; ++t) {
                    TruncatedSeries term = ej * table[static_cast<std::size_t>(m - j)]
                                                     [static_cast<std::size_t>(t)];
                    row[static_cast<std::size_t>(t)] =
                        (j % 2 == 1) ? row[static_cast<std::size_t>(t)] + term
                                     : row[static_cast<std::size_t>(t)] - term;
                }
            }
        }
        table.push_back(std::move(row));
    }

    ReducedRepresentative rr;
    rr.k = k;
    rr.coeff.assign(static_cast<std::size_t>(k), TruncatedSeries(fd.sig_zw, N));
    for (int m = 0; m <= maxdeg; ++m) {
        if (by_degree[static_cast<std::size_t>(m)].is_zero())
            continue;
        for (int t = 0; t < k; ++t) {
            if (table[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)].is_zero())
                continue;
            rr.coeff[static_cast<std::size_t>(t)] =
                rr.coeff[static_cast<std::size_t>(t)] +
                by_degree[static_cast<std::size_t>(m)] *
                    table[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)];
        }
    }
    return rr;
}

namespace {

TruncatedSeries average_hypersurface(const TruncatedSeries& f, const SegreModel& model, int N) {
    const FiberData& fd = model.fiber();
    const ReducedRepresentative rr = reduce(f, fd, N);
    const GaussianRational inv_k(Rational(1) / fd.k);
    std::vector<TruncatedSeries> psums;
    if (fd.k >= 2)
        psums = power_sums_from_elementary(fd.elementary, fd.k - 1);
    TruncatedSeries out = rr.coeff[0];
    for (int j = 1; j < fd.k; ++j) {
        if (rr.coeff[static_cast<std::size_t>(j)].is_zero())
            continue;
        out = out + rr.coeff[static_cast<std::size_t>(j)] *
                        truncate(psums[static_cast<std::size_t>(j - 1)], N) * inv_k;
    }
    return truncate(out, N);
}

TruncatedSeries average_product(const TruncatedSeries& f, const SegreModel& model, int N) {
    const auto& sig = *model.sig_full();
    if (*f.signature() != sig)
        throw std::invalid_argument("series signature does not match the model");
    const std::size_t z_idx = *sig.index_of("z");
    const std::size_t w_idx = *sig.index_of("w");
    const std::size_t zbar_idx = *sig.index_of("zbar");
    const std::size_t wbar_idx = *sig.index_of("wbar");
    const Signature zw = model.sig_zw();
    const std::size_t z_out = *zw->index_of("z");
    const std::size_t w_out = *zw->index_of("w");
    const GaussianRational inv_k(Rational(1) / model.multiplicity());

    TruncatedSeries out(zw, N);
    Monomial carried(zw->size(), 0);
    for (const auto& [m, c] : truncate(f, N).terms()) {
        const TruncatedSeries s = model.mixed_power_sum(m[zbar_idx], m[wbar_idx], N);
        if (s.is_zero())
            continue;
        carried[z_out] = m[z_idx];
        carried[w_out] = m[w_idx];
        out = out + TruncatedSeries::monomial(zw, N, carried, c * inv_k) * s;
    }
    return out;
}

} // namespace

TruncatedSeries average(const TruncatedSeries& f, const SegreModel& model, int N) {
    if (model.is_hypersurface())
        return average_hypersurface(f, model, N);
    return average_product(f, model, N);
}

TruncatedSeries raverage(const TruncatedSeries& g, const SegreModel& model, int N) {
    const auto& sig = *g.signature();
    for (const auto& [m, c] : g.terms())
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0 && !sig.var(i).antiholomorphic)
                throw std::invalid_argument(
                    "restricted operator input must be antiholomorphic");
    return average(g, model, N);
}

const TruncatedSeries& RestrictedOperatorTable::at(int a, int b) const {
    const auto it = entries.find({a, b});
    if (it == entries.end())
        throw std::out_of_range("restricted operator table has no entry (" +
                                std::to_string(a) + ", " + std::to_string(b) + ")");
    return it->second;
}

RestrictedOperatorTable r_table(const SegreModel& model, int degree_bound, int N, int jobs) {
    RestrictedOperatorTable t;
    t.k = model.multiplicity();
    t.degree_bound = degree_bound;
    t.order = N;
    t.weight_z = model.sig_zw()->var(*model.sig_zw()->index_of("z")).weight;
    t.weight_w = model.sig_zw()->var(*model.sig_zw()->index_of("w")).weight;

    std::vector<std::pair<int, int>> keys;
    for (int b = 0; t.k * b <= degree_bound; ++b)
        for (int a = 0; a + t.k * b <= degree_bound; ++a)
            keys.emplace_back(a, b);

    std::vector<TruncatedSeries> results(keys.size(), TruncatedSeries(model.sig_zw(), N));
    const Signature full = model.sig_full();
    run_indexed(static_cast<int>(keys.size()), jobs, [&](int i) {
        const auto [a, b] = keys[static_cast<std::size_t>(i)];
        Monomial m(full->size(), 0);
        m[*full->index_of("zbar")] = a;
        m[*full->index_of("wbar")] = b;
        results[static_cast<std::size_t>(i)] = raverage(
            TruncatedSeries::monomial(full, TruncatedSeries::exact_order, m,
                                      GaussianRational(1)),
            model, N);
    });
    for (std::size_t i = 0; i < keys.size(); ++i)
        t.entries.emplace(keys[i], std::move(results[i]));
    return t;
}

nlohmann::json to_json(const RestrictedOperatorTable& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, series] : t.entries)
        entries.push_back({{"a", key.first}, {"b", key.second}, {"series", serialize(series)}});
    return nlohmann::json{{"k", t.k},
                          {"degree_bound", t.degree_bound},
                          {"order", t.order},
                          {"weight_z", t.weight_z},
                          {"weight_w", t.weight_w},
                          {"entries", entries}};
}

RestrictedOperatorTable r_table_from_json(const nlohmann::json& j) {
    RestrictedOperatorTable t;
    t.k = j.at("k").get<int>();
    t.degree_bound = j.at("degree_bound").get<int>();
    t.order = j.at("order").get<int>();
    t.weight_z = j.at("weight_z").get<int>();
    t.weight_w = j.at("weight_w").get<int>();
    const Signature sig = VariableSignature::holomorphic_weighted(t.weight_z, t.weight_w);
    for (const auto& e : j.at("entries"))
        t.entries.emplace(std::pair{e.at("a").get<int>(), e.at("b").get<int>()},
                          parse_series(e.at("series").get<std::string>(), sig, t.order));
    return t;
}

GeneratingSeriesReport generating_series_check(const FiberData& fd, int N, int M) {
    if (N < M)
        throw std::invalid_argument("generating series check needs N >= M");
    const int k = fd.k;
    const Signature gen = VariableSignature::generating(k);
    const int order = 2 * M;

    GeneratingSeriesReport rep{M, N, false, {}, TruncatedSeries(gen, order),
                               TruncatedSeries(gen, order)};

    const SegreModel model{ModelHypersurface{k, fd.alpha}};
    TruncatedSeries lhs(gen, order);
    for (int a = 0; a <= M; ++a) {
        Monomial m(fd.sig_full->size(), 0);
        m[*fd.sig_full->index_of("zbar")] = a;
        const TruncatedSeries ra = raverage(
            TruncatedSeries::monomial(fd.sig_full, TruncatedSeries::exact_order, m,
                                      GaussianRational(1)),
            model, N);
        lhs = lhs + convert_to(truncate(ra, order), gen) *
                        TruncatedSeries::variable(gen, order, "s", a);
    }

    // g(s) = sum_j (-1)^j e_j s^j; the power-sum generating function is
    // (k g - s g') / g, whose s^j numerator coefficient is (-1)^j (k-j) e_j.
    TruncatedSeries g = TruncatedSeries::constant(gen, order, GaussianRational(1));
    TruncatedSeries numerator =
        TruncatedSeries::constant(gen, order, GaussianRational(k));
    for (int j = 1; j <= k; ++j) {
        TruncatedSeries ej = convert_to(truncate(fd.elementary[static_cast<std::size_t>(j - 1)],
                                                 order),
                                        gen) *
                             TruncatedSeries::variable(gen, order, "s", j);
        if (j % 2 == 1)
            ej = -ej;
        g = g + ej;
        numerator = numerator + GaussianRational(Rational(k - j)) * ej;
    }
    TruncatedSeries rhs = GaussianRational(Rational(1) / k) * (numerator * invert_unit(g));

    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.per_coefficient.assign(static_cast<std::size_t>(M) + 1, true);
    const std::size_t s_idx = *gen->index_of("s");
    TruncatedSeries diff = lhs - rhs;
    for (const auto& [m, c] : diff.terms()) {
        if (m[s_idx] <= M)
            rep.per_coefficient[static_cast<std::size_t>(m[s_idx])] = false;
    }
    rep.agrees = true;
    for (bool ok : rep.per_coefficient)
        rep.agrees = rep.agrees && ok;
    return rep;
}

nlohmann::json to_json(const GeneratingSeriesReport& r) {
    nlohmann::json per = nlohmann::json::array();
    for (bool ok : r.per_coefficient)
        per.push_back(ok);
    return nlohmann::json{{"s_order", r.s_order},
                          {"order", r.order},
                          {"agrees", r.agrees},
                          {"per_coefficient", per}};
}

} // namespace segre
