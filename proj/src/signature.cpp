#include "segre/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace segre {

VariableSignature::VariableSignature(std::vector<VariableInfo> vars) : vars_(std::move(vars)) {
    for (const auto& v : vars_) {
        if (v.weight <= 0)
            throw std::invalid_argument("variable weights must be positive");
        if (v.conjugate >= 0) {
            if (static_cast<std::size_t>(v.conjugate) >= vars_.size())
                throw std::invalid_argument("conjugate index out of range");
            if (vars_[v.conjugate].weight != v.weight)
                throw std::invalid_argument("conjugate variables must share a weight");
        }
    }
}

Signature VariableSignature::holomorphic(int k) {
    return holomorphic_weighted(1, k);
}

Signature VariableSignature::holomorphic_weighted(int wz, int ww) {
    return std::make_shared<VariableSignature>(std::vector<VariableInfo>{
        {"z", wz, false, -1},
        {"w", ww, false, -1},
    });
}

Signature VariableSignature::full(int k) {
    return full_weighted(1, k);
}

Signature VariableSignature::full_weighted(int wz, int ww) {
    return std::make_shared<VariableSignature>(std::vector<VariableInfo>{
        {"z", wz, false, 2},
        {"w", ww, false, 3},
        {"zbar", wz, true, 0},
        {"wbar", ww, true, 1},
    });
}

Signature VariableSignature::fiber(int k) {
    return std::make_shared<VariableSignature>(std::vector<VariableInfo>{
        {"z", 1, false, -1},
        {"w", k, false, -1},
        {"zeta", 1, true, -1},
    });
}

Signature VariableSignature::generating(int k) {
    return std::make_shared<VariableSignature>(std::vector<VariableInfo>{
        {"z", 1, false, -1},
        {"w", k, false, -1},
        {"s", 1, false, -1},
    });
}

std::optional<std::size_t> VariableSignature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name)
            return i;
    return std::nullopt;
}

int weighted_degree(const Monomial& m, const VariableSignature& sig) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * sig.var(i).weight;
    return d;
}

int holomorphic_degree(const Monomial& m, const VariableSignature& sig) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!sig.var(i).antiholomorphic)
            d += m[i] * sig.var(i).weight;
    return d;
}

int antiholomorphic_degree(const Monomial& m, const VariableSignature& sig) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (sig.var(i).antiholomorphic)
            d += m[i] * sig.var(i).weight;
    return d;
}

bool graded_lex_less(const Monomial& a, const Monomial& b, const VariableSignature& sig) {
    const int da = weighted_degree(a, sig);
    const int db = weighted_degree(b, sig);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace segre
