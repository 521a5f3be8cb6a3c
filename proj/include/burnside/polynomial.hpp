#pragma once

#include "burnside/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burnside {

/// Univariate polynomial over Q(i), coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }
    UniPoly(std::initializer_list<Scalar> coefficients) : c_(coefficients) { trim(); }

    static UniPoly constant(Scalar s) { return UniPoly({std::move(s)}); }
    static UniPoly monomial(std::size_t degree, Scalar s = Scalar(1))
    {
        std::vector<Scalar> c(degree + 1);
        c[degree] = std::move(s);
        return UniPoly(std::move(c));
    }
    /// (x - root)
    static UniPoly linear_factor(const Scalar& root) { return UniPoly({-root, Scalar(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Scalar>& coefficients() const { return c_; }
    Scalar coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }
    const Scalar& leading() const
    {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == Scalar(1); }

    UniPoly monic() const
    {
        if (is_zero()) return {};
        UniPoly p = *this;
        const Scalar lc = leading();
        for (auto& x : p.c_) x /= lc;
        return p;
    }

    UniPoly derivative() const
    {
        std::vector<Scalar> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
        return UniPoly(std::move(d));
    }

    Scalar operator()(const Scalar& x) const
    {
        Scalar acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Horner evaluation at a square matrix.
    Matrix operator()(const Matrix& m) const
    {
        if (!m.is_square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
        Matrix acc = Matrix::zeros(m.rows(), m.cols());
        const Matrix id = Matrix::identity(m.rows());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + id * *it;
        return acc;
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(UniPoly a, const Scalar& s)
    {
        for (auto& x : a.c_) x *= s;
        a.trim();
        return a;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Quotient and remainder of Euclidean division by a nonzero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const
    {
        if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Scalar> rem = c_;
        const std::size_t dd = divisor.c_.size() - 1;
        if (rem.size() < divisor.c_.size()) return {UniPoly{}, *this};
        std::vector<Scalar> quo(rem.size() - dd);
        const Scalar& lc = divisor.c_.back();
        for (std::size_t k = rem.size(); k-- > dd;) {
            if (rem[k].is_zero()) continue;
            Scalar f = rem[k] / lc;
            for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= f * divisor.c_[j];
            quo[k - dd] = std::move(f);
        }
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    UniPoly pow(std::size_t e) const
    {
        UniPoly r = constant(Scalar(1));
        for (std::size_t k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    std::string to_string(const std::string& var = "x") const
    {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            if (!s.empty()) s += " + ";
            std::string coef = c_[k].is_real() ? c_[k].to_string() : "(" + c_[k].to_string() + ")";
            if (k == 0)
                s += coef;
            else {
                if (c_[k] != Scalar(1)) s += coef + "*";
                s += var;
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

/// Monic greatest common divisor; gcd(0, 0) is 0.
inline UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Exact quotient; throws if the division leaves a remainder.
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b)
{
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
    return q;
}

/// det(x I - m) by the Faddeev-LeVerrier recurrence.
inline UniPoly char_poly(const Matrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
    const std::size_t n = m.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = Scalar(1);
    Matrix acc = Matrix::zeros(n, n); // M_0
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc + id * c[n - k + 1];
        c[n - k] = -(m * acc).trace() / Scalar(static_cast<long>(k));
    }
    return UniPoly(std::move(c));
}

struct SquareFreeFactor {
    UniPoly factor; // monic, square-free
    std::size_t multiplicity;
};

/// unit * prod(factor^multiplicity) == input.
struct SquareFreeFactorization {
    Scalar unit;
    std::vector<SquareFreeFactor> factors;

    UniPoly reconstruct() const
    {
        UniPoly p = UniPoly::constant(unit);
        for (const auto& f : factors) p = p * f.factor.pow(f.multiplicity);
        return p;
    }
    bool all_even() const
    {
        for (const auto& f : factors)
            if (f.multiplicity % 2 != 0) return false;
        return true;
    }
};

/// Yun's square-free decomposition. Factors come out with strictly
/// increasing multiplicity and are pairwise coprime.
inline SquareFreeFactorization square_free(const UniPoly& p)
{
    if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
    SquareFreeFactorization out{p.leading(), {}};
    const UniPoly f = p.monic();
    if (f.degree() == 0) return out;

    const UniPoly df = f.derivative();
    const UniPoly a0 = gcd(f, df);
    UniPoly b = exact_div(f, a0);
    UniPoly c = exact_div(df, a0);
    UniPoly d = c - b.derivative();
    for (std::size_t i = 1; b.degree() > 0; ++i) {
        UniPoly a = gcd(b, d);
        if (a.degree() > 0) out.factors.push_back({a, i});
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

/// g with p == g^2 when p is a perfect square in Q(i)[x]; g is monic
/// whenever p is. A leading coefficient that is not a square gives no root.
inline std::optional<UniPoly> square_root(const UniPoly& p)
{
    const auto sf = square_free(p);
    if (!sf.all_even()) return std::nullopt;
    const auto unit_root = exact_sqrt(sf.unit);
    if (!unit_root) return std::nullopt;
    UniPoly g = UniPoly::constant(*unit_root);
    for (const auto& f : sf.factors) g = g * f.factor.pow(f.multiplicity / 2);
    return g;
}

inline bool is_perfect_square(const UniPoly& p)
{
    return square_root(p).has_value();
}

} // namespace burnside
