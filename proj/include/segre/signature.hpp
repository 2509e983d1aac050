#ifndef SEGRE_SIGNATURE_HPP
#define SEGRE_SIGNATURE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace segre {

class VariableSignature;
using Signature = std::shared_ptr<const VariableSignature>;

struct VariableInfo {
    std::string name;
    int weight = 1;
    bool antiholomorphic = false;
    int conjugate = -1; // index of the paired variable, -1 if none

    bool operator==(const VariableInfo&) const = default;
};

/// An immutable ordered list of variables with positive integer weights.
/// Monomials and series are always interpreted relative to one of these.
class VariableSignature {
public:
    explicit VariableSignature(std::vector<VariableInfo> vars);

    /// z, w with weights 1, k.
    static Signature holomorphic(int k);
    /// z, w, zbar, wbar with weights 1, k, 1, k and z<->zbar, w<->wbar pairing.
    static Signature full(int k);
    /// z, w, zeta with weights 1, k, 1 (zeta is the fiber stand-in for zbar).
    static Signature fiber(int k);
    /// z, w, s with weights 1, k, 1 (s is the generating-series marker).
    static Signature generating(int k);
    /// z, w with custom weights (product-fiber gradings).
    static Signature holomorphic_weighted(int wz, int ww);
    static Signature full_weighted(int wz, int ww);

    std::size_t size() const { return vars_.size(); }
    const VariableInfo& var(std::size_t i) const { return vars_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VariableSignature& o) const { return vars_ == o.vars_; }
    bool operator!=(const VariableSignature& o) const { return !(*this == o); }

private:
    std::vector<VariableInfo> vars_;
};

/// Exponent vector aligned with a VariableSignature.
using Monomial = std::vector<int>;

int weighted_degree(const Monomial& m, const VariableSignature& sig);
int holomorphic_degree(const Monomial& m, const VariableSignature& sig);
int antiholomorphic_degree(const Monomial& m, const VariableSignature& sig);

/// Total order: graded by weighted degree, ties broken lexicographically on
/// the exponent vector.  Fixes deterministic serialization.
bool graded_lex_less(const Monomial& a, const Monomial& b, const VariableSignature& sig);

} // namespace segre

#endif
