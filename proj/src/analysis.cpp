#include "segre/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <stdexcept>

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

Verdict first_failure(std::vector<TruncatedSeries> discrepancies, int N) {
    Verdict v;
    v.order = N;
    v.holds = true;
    for (std::size_t i = 0; i < discrepancies.size(); ++i) {
        if (!discrepancies[i].is_zero()) {
            v.holds = false;
            v.witness = Witness{static_cast<int>(i) + 1, std::move(discrepancies[i])};
            break;
        }
    }
    return v;
}

} // namespace

ExtensionVerdict is_holomorphic_restriction(const TruncatedSeries& f, const SegreModel& model,
                                            int N, int jobs) {
    const int k = model.multiplicity();
    const TruncatedSeries af = average(f, model, N);
    std::vector<TruncatedSeries> disc(static_cast<std::size_t>(k),
                                      TruncatedSeries(model.sig_zw(), N));
    run_indexed(k, jobs, [&](int i) {
        const int ell = i + 1;
        disc[static_cast<std::size_t>(i)] =
            truncate(average(pow(f, ell), model, N) - pow(af, ell), N);
    });
    ExtensionVerdict out;
    out.verdict = first_failure(std::move(disc), N);
    if (out.verdict.holds)
        out.extension = af;
    return out;
}

Verdict equal_on_variety(const TruncatedSeries& f, const TruncatedSeries& g,
                         const SegreModel& model, int N, int jobs) {
    const int k = model.multiplicity();
    const TruncatedSeries diff = f - g;
    std::vector<TruncatedSeries> disc(static_cast<std::size_t>(k),
                                      TruncatedSeries(model.sig_zw(), N));
    run_indexed(k, jobs, [&](int i) {
        disc[static_cast<std::size_t>(i)] = truncate(average(pow(diff, i + 1), model, N), N);
    });
    return first_failure(std::move(disc), N);
}

Verdict is_real_valued(const TruncatedSeries& f, const SegreModel& model, int N, int jobs) {
    if (*f.signature() != *model.sig_zw() && *f.signature() != *model.sig_full())
        throw std::invalid_argument("is_real_valued expects a holomorphic series");
    const TruncatedSeries fh = convert_to(f, model.sig_full());
    for (const auto& [m, c] : fh.terms())
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0 && model.sig_full()->var(i).antiholomorphic)
                throw std::invalid_argument("is_real_valued expects a holomorphic series");
    if (!fh.constant_term().is_real())
        throw std::invalid_argument("constant term must be real");

    const int k = model.multiplicity();
    const TruncatedSeries fbar = involution(fh);
    std::vector<TruncatedSeries> disc(static_cast<std::size_t>(k),
                                      TruncatedSeries(model.sig_zw(), N));
    run_indexed(k, jobs, [&](int i) {
        const int ell = i + 1;
        const TruncatedSeries lhs = raverage(pow(fbar, ell), model, N);
        const TruncatedSeries rhs = convert_to(truncate(pow(fh, ell), N), model.sig_zw());
        disc[static_cast<std::size_t>(i)] = truncate(lhs - rhs, N);
    });
    return first_failure(std::move(disc), N);
}

namespace {

/// Basis of the null space of an exact rational matrix (rows x cols),
/// via reduced row echelon form with deterministic pivoting.
std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> m,
                                                   std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[rank], m[sel]);
        const Rational inv = Rational(1) / m[rank][col];
        for (std::size_t j = col; j < cols; ++j)
            m[rank][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0)
                continue;
            const Rational factor = m[r][col];
            for (std::size_t j = col; j < cols; ++j)
                m[r][j] -= factor * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] =ot_one();
        for (std::size_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Scales to primitive integer coordinates with positive first nonzero entry.
void normalize_vector(std::vector<Rational>& v) {
    using Integer = boost::multiprecision::mpz_int;
    Integer lcm_den(1);
    for (const auto& q : v)
        if (q != 0)
            lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
    Integer gcd_num(0);
    for (auto& q : v) {
        q *= Rational(lcm_den);
        if (q != 0)
            gcd_num = boost::multiprecision::gcd(gcd_num, numerator(q));
    }
    if (gcd_num == 0)
        return;
    for (auto& q : v)
        q /= Rational(gcd_num);
    for (const auto& q : v) {
        if (q == 0)
            continue;
        if (q < 0)
            for (auto& r : v)
                r = -r;
        break;
    }
}

} // namespace

FlatteningResult flatten_search(const ModelHypersurface& m, int D, int N) {
    m.validate();
    const int k = m.k;
    if (D < k)
        throw std::invalid_argument("flatten_search needs degree bound D >= k");

    FlatteningResult out;
    out.degree_bound = D;
    out.order = N;

    // Stage i: degree-k conditions b alpha_j = conj(b) conj(alpha_{k-j}),
    // j = 1..k-1, as a real-linear system in (Re b, Im b).
    {
        std::vector<std::vector<Rational>> rows;
        for (int j = 1; j < k; ++j) {
            const Rational p = m.alpha[static_cast<std::size_t>(j)].real();
            const Rational q = m.alpha[static_cast<std::size_t>(j)].imag();
            const Rational r = m.alpha[static_cast<std::size_t>(k - j)].real();
            const Rational s = m.alpha[static_cast<std::size_t>(k - j)].imag();
            // b alpha_j - conj(b) conj(alpha_{k-j}), b = x + iy:
            rows.push_back({p - r, -q + s}); // real part: x(p-r) + y(-q+s)
            rows.push_back({q + s, p + r});  // imaginary part: x(q+s) + y(p+r)
        }
        if (rows.empty())
            rows.push_back({Rational(0), Rational(0)});
        for (auto& v : rational_kernel(std::move(rows), 2)) {
            normalize_vector(v);
            PhaseCandidate cand;
            cand.b = GaussianRational(v[0], v[1]);
            cand.a = cand.b.conj() * m.alpha[0].conj() -
                     cand.b * m.alpha[static_cast<std::size_t>(k)];
            out.phase_candidates.push_back(cand);
        }
    }

    // Stage ii: raverage(conj f) = f degree by degree.  The restricted
    // operator preserves the weighted grading, so each degree decouples.
    const SegreModel model{m};
    const RestrictedOperatorTable table = r_table(model, D, std::max(N, D));
    const Signature zw = model.sig_zw();

    for (int d = 1; d <= D; ++d) {
        std::vector<Monomial> monos; // z^a w^beta with a + k beta = d
        for (int beta = 0; k * beta <= d; ++beta) {
            const int a = d - k * beta;
            monos.push_back(Monomial{a, beta});
        }
        std::sort(monos.begin(), monos.end(),
                  [&](const Monomial& x, const Monomial& y) { return graded_lex_less(x, y, *zw); });

        const std::size_t n = monos.size();
        std::vector<std::size_t> index_of_mono(n);
        // Equations: for each degree-d monomial mu, the mu-coefficient of
        // sum_m conj(c_m) R[zbar^a wbar^beta] - sum_m c_m z^a w^beta vanishes.
        std::vector<std::vector<Rational>> rows(2 * n,
                                                std::vector<Rational>(2 * n, Rational(0)));
        for (std::size_t col = 0; col < n; ++col) {
            const int a = monos[col][0];
            const int beta = monos[col][1];
            const TruncatedSeries& r = table.at(a, beta);
            for (std::size_t row = 0; row < n; ++row) {
                const GaussianRational rc = r.coefficient(monos[row]);
                Rational pp = rc.real();
                Rational qq = rc.imag();
                if (row == col)
                    pp -= 1; // minus the identity part, real component
                // (x - iy)(P + iQ) - (x + iy) delta:
                rows[2 * row][2 * col] += rc.real() - (row == col ? Rational(1) : Rational(0));
                rows[2 * row][2 * col + 1] += rc.imag();
                rows[2 * row + 1][2 * col] += rc.imag();
                rows[2 * row + 1][2 * col + 1] +=
                    -rc.real() - (row == col ? Rational(1) : Rational(0));
                (void)pp;
                (void)qq;
            }
        }
        for (auto& v : rational_kernel(std::move(rows), 2 * n)) {
            normalize_vector(v);
            TruncatedSeries f(zw, std::max(N, D));
            for (std::size_t i = 0; i < n; ++i)
                f.add_term(monos[i], GaussianRational(v[2 * i], v[2 * i + 1]));
            if (!f.is_zero())
                out.linear_basis.push_back(std::move(f));
        }
        (void)index_of_mono;
    }

    // Stage iii: the nonlinear conditions are checked on each candidate.
    for (const auto& f : out.linear_basis) {
        const Verdict v = is_real_valued(f, model, N);
        if (v.holds)
            out.verified.push_back(f);
    }
    return out;
}

ModelHypersurface reconstruct_model(const RestrictedOperatorTable& table, int k) {
    if (k < 2)
        throw std::invalid_argument("reconstruction needs k >= 2");
    if (table.weight_z != 1 || table.weight_w != k)
        throw std::invalid_argument("table grading does not match a degree-k hypersurface");
    std::vector<TruncatedSeries> psums;
    for (int a = 1; a <= k; ++a) {
        if (!table.contains(a, 0))
            throw std::invalid_argument("table is missing the entry for zbar^" +
                                        std::to_string(a));
        psums.push_back(GaussianRational(k) * table.at(a, 0));
    }
    const std::vector<TruncatedSeries> e = elementary_from_power_sums(psums);
    const Signature zw = psums.front().signature();

    // Read the monic fiber polynomial off the elementary symmetric functions.
    ModelHypersurface m;
    m.k = k;
    m.alpha.assign(static_cast<std::size_t>(k) + 1, GaussianRational(0));

    const Monomial w_mono{0, 1};
    GaussianRational w_coeff = e.back().coefficient(w_mono);
    if (w_coeff.is_zero())
        throw std::invalid_argument(
            "recovered top symmetric function lacks the w term; "
            "table does not come from a model hypersurface");
    GaussianRational alpha0 = w_coeff.inverse();
    if (k % 2 == 0)
        alpha0 = -alpha0;

    for (int j = 1; j <= k; ++j) {
        const TruncatedSeries& ej = e[static_cast<std::size_t>(j - 1)];
        for (const auto& [mono, c] : ej.terms()) {
            if (j == k && mono == w_mono)
                continue;
            if (mono != Monomial{j, 0})
                throw std::invalid_argument(
                    "recovered symmetric functions are not of model-hypersurface form");
        }
        GaussianRational c = ej.coefficient(Monomial{j, 0});
        if (j % 2 == 1)
            c = -c;
        m.alpha[static_cast<std::size_t>(j)] = c * alpha0;
    }
    m.alpha[0] = alpha0;
    m.validate();
    return m;
}

nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j;
    j["status"] = v.holds ? ("holds-to-order-" + std::to_string(v.order)) : "fails";
    j["order"] = v.order;
    if (v.witness) {
        j["witness"] = {{"ell", v.witness->ell},
                        {"discrepancy", serialize(v.witness->discrepancy)}};
    }
    return j;
}

nlohmann::json to_json(const ExtensionVerdict& v) {
    nlohmann::json j = to_json(v.verdict);
    if (v.extension)
        j["extension"] = serialize(*v.extension);
    return j;
}

nlohmann::json to_json(const FlatteningResult& r) {
    nlohmann::json phases = nlohmann::json::array();
    for (const auto& c : r.phase_candidates) {
        phases.push_back({{"b", {rational_str(c.b.real()), rational_str(c.b.imag())}},
                          {"a", {rational_str(c.a.real()), rational_str(c.a.imag())}},
                          {"cos_sin_direction",
                           {rational_str(c.b.real()), rational_str(-c.b.imag())}}});
    }
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& f : r.linear_basis)
        basis.push_back(serialize(f));
    nlohmann::json verified = nlohmann::json::array();
    for (const auto& f : r.verified)
        verified.push_back(serialize(f));
    return nlohmann::json{{"degree_bound", r.degree_bound},
                          {"order", r.order},
                          {"phase_candidates", phases},
                          {"linear_basis", basis},
                          {"verified", verified}};
}

} // namespace segre
