#ifndef SEGRE_SERIES_HPP
#define SEGRE_SERIES_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segre/gaussian_rational.hpp"
#include "segre/signature.hpp"

namespace segre {

namespace detail {
struct MonomialLess {
    const VariableSignature* sig = nullptr;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return graded_lex_less(a, b, *sig);
    }
};
} // namespace detail

/// Weighted-truncated formal power series with exact Q(i) coefficients.
///
/// Invariants: no stored monomial exceeds the truncation order, no stored
/// coefficient is zero, and every ring operation truncates its result to the
/// minimum of the operand orders.  Values are immutable once built; all
/// operations below are pure functions.
class TruncatedSeries {
public:
    using TermMap = std::map<Monomial, GaussianRational, detail::MonomialLess>;

    /// Order used for series that are known exact polynomials (fiber data,
    /// power sums of homogeneous fibers).  min(exact_order, N) == N, so the
    /// usual truncation rule composes with it transparently.
    static constexpr int exact_order = 1 << 30;

    TruncatedSeries(Signature sig, int order);

    static TruncatedSeries constant(Signature sig, int order, GaussianRational value);
    static TruncatedSeries monomial(Signature sig, int order, const Monomial& m,
                                    GaussianRational coeff);
    static TruncatedSeries variable(Signature sig, int order, std::string_view name,
                                    int power = 1);

    const Signature& signature() const { return sig_; }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GaussianRational coefficient(const Monomial& m) const;
    GaussianRational constant_term() const;

    /// Accumulates coeff onto monomial m, dropping it if it exceeds the order
    /// or cancels to zero.  Building block for all the arithmetic below.
    void add_term(const Monomial& m, const GaussianRational& coeff);

    /// Equality of signature (by value) and term tables.  The truncation
    /// order is a certification bound, not part of the value.
    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    Signature sig_;
    int order_;
    TermMap terms_;
};

TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const GaussianRational& c, const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const GaussianRational& c);

TruncatedSeries pow(const TruncatedSeries& a, int n);

/// Multiplicative inverse of a unit (nonzero constant term), computed by the
/// geometric series of 1 - f/f(0).  Requires a finite truncation order.
TruncatedSeries invert_unit(const TruncatedSeries& a);

/// Substitutes g for the named variable; remaining variables are carried over
/// by name into g's signature.  g must have zero constant term.
TruncatedSeries substitute(const TruncatedSeries& f, std::string_view var,
                           const TruncatedSeries& g);

/// Simultaneous substitution.  All replacement series must share one target
/// signature and have zero constant term.
TruncatedSeries substitute(const TruncatedSeries& f,
                           const std::vector<std::pair<std::string, TruncatedSeries>>& subs);

/// Conjugates every coefficient and swaps each variable with its conjugate
/// partner (z <-> zbar, w <-> wbar).  An involution on the full signature.
TruncatedSeries involution(const TruncatedSeries& f);

/// Bihomogeneous part of holomorphic weight a and antiholomorphic weight b.
TruncatedSeries weighted_component(const TruncatedSeries& f, int a, int b);

TruncatedSeries truncate(const TruncatedSeries& f, int order);

/// Reinterprets f in a signature containing (by name, with equal weights) all
/// variables f actually uses.
TruncatedSeries convert_to(const TruncatedSeries& f, const Signature& sig);

bool same_signature(const TruncatedSeries& a, const TruncatedSeries& b);

/// One line per term: space-separated exponent vector, TAB, re, TAB, im,
/// with rationals as p/q.  Terms in graded-lex order; exact round-trip with
/// parse_series.
std::string serialize(const TruncatedSeries& f);
TruncatedSeries parse_series(const std::string& text, Signature sig, int order);

/// Human-readable form, e.g. "w + 1/2 z^2".
std::string pretty(const TruncatedSeries& f);

} // namespace segre

#endif
