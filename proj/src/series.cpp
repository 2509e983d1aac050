#include "segre/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace segre {

namespace {

void require(bool cond, const char* message) {
    if (!cond)
        throw std::invalid_argument(message);
}

Monomial zero_monomial(const VariableSignature& sig) {
    return Monomial(sig.size(), 0);
}

} // namespace

TruncatedSeries::TruncatedSeries(Signature sig, int order)
    : sig_(std::move(sig)), order_(order), terms_(detail::MonomialLess{sig_.get()}) {
    require(sig_ != nullptr, "null signature");
}

TruncatedSeries TruncatedSeries::constant(Signature sig, int order, GaussianRational value) {
    TruncatedSeries s(std::move(sig), order);
    s.add_term(zero_monomial(*s.sig_), value);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(Signature sig, int order, const Monomial& m,
                                          GaussianRational coeff) {
    TruncatedSeries s(std::move(sig), order);
    require(m.size() == s.sig_->size(), "monomial length does not match signature");
    for (int e : m)
        require(e >= 0, "negative exponent");
    s.add_term(m, coeff);
    return s;
}

TruncatedSeries TruncatedSeries::variable(Signature sig, int order, std::string_view name,
                                          int power) {
    const auto idx = sig->index_of(name);
    require(idx.has_value(), "unknown variable name");
    Monomial m(sig->size(), 0);
    m[*idx] = power;
    return monomial(std::move(sig), order, m, GaussianRational(1));
}

GaussianRational TruncatedSeries::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational TruncatedSeries::constant_term() const {
    return coefficient(zero_monomial(*sig_));
}

void TruncatedSeries::add_term(const Monomial& m, const GaussianRational& coeff) {
    if (coeff.is_zero())
        return;
    if (weighted_degree(m, *sig_) > order_)
        return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    if (*sig_ != *o.sig_)
        return false;
    if (terms_.size() != o.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second)
            return false;
    }
    return true;
}

bool same_signature(const TruncatedSeries& a, const TruncatedSeries& b) {
    return *a.signature() == *b.signature();
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.signature(), a.order());
    for (const auto& [m, c] : a.terms())
        r.add_term(m, -c);
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require(same_signature(a, b), "signature mismatch in add");
    TruncatedSeries r(a.signature(), std::min(a.order(), b.order()));
    for (const auto& [m, c] : a.terms())
        r.add_term(m, c);
    for (const auto& [m, c] : b.terms())
        r.add_term(m, c);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require(same_signature(a, b), "signature mismatch in sub");
    TruncatedSeries r(a.signature(), std::min(a.order(), b.order()));
    for (const auto& [m, c] : a.terms())
        r.add_term(m, c);
    for (const auto& [m, c] : b.terms())
        r.add_term(m, -c);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require(same_signature(a, b), "signature mismatch in mul");
    const auto& sig = *a.signature();
    TruncatedSeries r(a.signature(), std::min(a.order(), b.order()));
    Monomial prod(sig.size(), 0);
    for (const auto& [ma, ca] : a.terms()) {
        const int da = weighted_degree(ma, sig);
        if (da > r.order())
            continue;
        for (const auto& [mb, cb] : b.terms()) {
            if (da + weighted_degree(mb, sig) > r.order())
                continue;
            for (std::size_t i = 0; i < prod.size(); ++i)
                prod[i] = ma[i] + mb[i];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

TruncatedSeries operator*(const GaussianRational& c, const TruncatedSeries& a) {
    TruncatedSeries r(a.signature(), a.order());
    for (const auto& [m, v] : a.terms())
        r.add_term(m, c * v);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const GaussianRational& c) {
    return c * a;
}

TruncatedSeries pow(const TruncatedSeries& a, int n) {
    require(n >= 0, "negative power");
    TruncatedSeries r = TruncatedSeries::constant(a.signature(), a.order(), GaussianRational(1));
    for (int i = 0; i < n; ++i)
        r = r * a;
    return r;
}

TruncatedSeries invert_unit(const TruncatedSeries& a) {
    const GaussianRational c = a.constant_term();
    require(!c.is_zero(), "invert_unit requires a nonzero constant term");
    require(a.order() < TruncatedSeries::exact_order,
            "invert_unit requires a finite truncation order");
    const GaussianRational cinv = c.inverse();
    // u = 1 - f/c has zero constant term, so the geometric series terminates.
    TruncatedSeries u = TruncatedSeries::constant(a.signature(), a.order(), GaussianRational(1))
                        - cinv * a;
    TruncatedSeries sum = TruncatedSeries::constant(a.signature(), a.order(), GaussianRational(1));
    TruncatedSeries upow = u;
    while (!upow.is_zero()) {
        sum = sum + upow;
        upow = upow * u;
    }
    return cinv * sum;
}

TruncatedSeries substitute(const TruncatedSeries& f,
                           const std::vector<std::pair<std::string, TruncatedSeries>>& subs) {
    require(!subs.empty(), "empty substitution");
    const Signature target = subs.front().second.signature();
    int order = f.order();
    std::vector<int> sub_at(f.signature()->size(), -1);
    std::vector<const TruncatedSeries*> gs;
    for (const auto& [name, g] : subs) {
        require(*g.signature() == *target, "substitution series disagree on signature");
        require(g.constant_term().is_zero(), "substitution series must have zero constant term");
        const auto idx = f.signature()->index_of(name);
        require(idx.has_value(), "substituted variable not in source signature");
        sub_at[*idx] = static_cast<int>(gs.size());
        gs.push_back(&g);
        order = std::min(order, g.order());
    }
    // Carried variables map by name.
    std::vector<int> carry(f.signature()->size(), -1);

    TruncatedSeries result(target, order);
    std::vector<std::vector<TruncatedSeries>> powers(gs.size()); // powers[i][e] = gs[i]^e

    for (const auto& [m, c] : f.terms()) {
        Monomial carried(target->size(), 0);
        bool ok = true;
        for (std::size_t i = 0; i < m.size() && ok; ++i) {
            if (m[i] == 0 || sub_at[i] >= 0)
                continue;
            if (carry[i] < 0) {
                const auto& v = f.signature()->var(i);
                const auto idx = target->index_of(v.name);
                require(idx.has_value(), "carried variable not in target signature");
                require(target->var(*idx).weight == v.weight,
                        "carried variable changes weight");
                carry[i] = static_cast<int>(*idx);
            }
            carried[carry[i]] += m[i];
        }
        TruncatedSeries term = TruncatedSeries::monomial(target, order, carried, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0 || sub_at[i] < 0)
                continue;
            auto& cache = powers[sub_at[i]];
            if (cache.empty())
                cache.push_back(TruncatedSeries::constant(target, order, GaussianRational(1)));
            while (static_cast<int>(cache.size()) <= m[i])
                cache.push_back(cache.back() * *gs[sub_at[i]]);
            term = term * cache[m[i]];
        }
        result = result + term;
    }
    return result;
}

TruncatedSeries substitute(const TruncatedSeries& f, std::string_view var,
                           const TruncatedSeries& g) {
    return substitute(f, {{std::string(var), g}});
}

TruncatedSeries involution(const TruncatedSeries& f) {
    const auto& sig = *f.signature();
    TruncatedSeries r(f.signature(), f.order());
    Monomial swapped(sig.size(), 0);
    for (const auto& [m, c] : f.terms()) {
        std::fill(swapped.begin(), swapped.end(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            const int partner = sig.var(i).conjugate;
            require(partner >= 0, "involution requires conjugate-paired variables");
            swapped[partner] = m[i];
        }
        r.add_term(swapped, c.conj());
    }
    return r;
}

TruncatedSeries weighted_component(const TruncatedSeries& f, int a, int b) {
    const auto& sig = *f.signature();
    TruncatedSeries r(f.signature(), f.order());
    for (const auto& [m, c] : f.terms())
        if (holomorphic_degree(m, sig) == a && antiholomorphic_degree(m, sig) == b)
            r.add_term(m, c);
    return r;
}

TruncatedSeries truncate(const TruncatedSeries& f, int order) {
    TruncatedSeries r(f.signature(), order);
    for (const auto& [m, c] : f.terms())
        r.add_term(m, c);
    return r;
}

TruncatedSeries convert_to(const TruncatedSeries& f, const Signature& sig) {
    const auto& src = *f.signature();
    std::vector<int> map(src.size(), -1);
    TruncatedSeries r(sig, f.order());
    Monomial image(sig->size(), 0);
    for (const auto& [m, c] : f.terms()) {
        std::fill(image.begin(), image.end(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (map[i] < 0) {
                const auto idx = sig->index_of(src.var(i).name);
                require(idx.has_value(), "variable not present in target signature");
                require(sig->var(*idx).weight == src.var(i).weight,
                        "variable changes weight between signatures");
                map[i] = static_cast<int>(*idx);
            }
            image[map[i]] = m[i];
        }
        r.add_term(image, c);
    }
    return r;
}

std::string serialize(const TruncatedSeries& f) {
    std::ostringstream os;
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i)
                os << ' ';
            os << m[i];
        }
        os << '\t' << rational_str(c.real()) << '\t' << rational_str(c.imag()) << '\n';
    }
    return os.str();
}

TruncatedSeries parse_series(const std::string& text, Signature sig, int order) {
    TruncatedSeries r(std::move(sig), order);
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos)
            throw std::invalid_argument("series line " + std::to_string(lineno) +
                                        ": expected 'exponents TAB re TAB im'");
        std::istringstream exps(line.substr(0, tab1));
        Monomial m;
        int e;
        while (exps >> e) {
            if (e < 0)
                throw std::invalid_argument("series line " + std::to_string(lineno) +
                                            ": negative exponent");
            m.push_back(e);
        }
        if (m.size() != r.signature()->size())
            throw std::invalid_argument("series line " + std::to_string(lineno) +
                                        ": exponent count does not match signature");
        if (weighted_degree(m, *r.signature()) > order)
            throw std::invalid_argument("series line " + std::to_string(lineno) +
                                        ": monomial exceeds truncation order");
        const GaussianRational c = GaussianRational::parse(
            line.substr(tab1 + 1, tab2 - tab1 - 1), line.substr(tab2 + 1));
        r.add_term(m, c);
    }
    return r;
}

namespace {

std::string pretty_monomial(const Monomial& m, const VariableSignature& sig) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += sig.var(i).name;
        if (m[i] != 1)
            out += "^" + std::to_string(m[i]);
    }
    return out;
}

} // namespace

std::string pretty(const TruncatedSeries& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        const std::string mono = pretty_monomial(m, *f.signature());
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            const Rational mag = c.real() < 0 ? Rational(-c.real()) : c.real();
            negative = c.real() < 0;
            coeff = rational_str(mag);
            if (coeff == "1" && !mono.empty())
                coeff.clear();
        } else if (c.real() == 0) {
            negative = c.imag() < 0;
            const Rational mag = negative ? Rational(-c.imag()) : c.imag();
            coeff = (mag == 1) ? "i" : rational_str(mag) + "i";
        } else {
            coeff = c.str();
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (!coeff.empty()) {
            out += coeff;
            if (!mono.empty())
                out += ' ';
        }
        out += mono;
    }
    return out;
}

} // namespace segre
