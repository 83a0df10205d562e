#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dumont {

/// Exact integer coefficients. Representation counts and product coefficients
/// have no a-priori bound, so everything runs over arbitrary precision.
using Int = boost::multiprecision::cpp_int;

/// Exponent of q. Signed: triple-product specializations z = ±q^m produce
/// Laurent terms q^{n^2+mn} with n^2+mn < 0.
using Exp = std::int64_t;

/// Thrown by invert_unit when the lowest coefficient is not ±1.
class NotAUnit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown by invert_unit when the operand is not known to enough terms to
/// determine the inverse at the requested order.
class InsufficientPrecision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// ±q^e, the only substitution values used for the specialization variables
/// a, t, z.
struct Monomial {
    int sign;      // +1 or -1
    Exp exponent;  // >= 0

    Monomial(int sign_, Exp exponent_) : sign(sign_), exponent(exponent_) {
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("Monomial: sign must be +1 or -1");
        if (exponent < 0)
            throw std::invalid_argument("Monomial: exponent must be >= 0");
    }

    Monomial negated() const { return Monomial(-sign, exponent); }

    bool operator==(const Monomial&) const = default;
};

/// Truncated Laurent series in q with exact integer coefficients.
///
/// A value represents a series known exactly for all exponents <= the
/// truncation order N; exponents above N are unknown.  `coefficients()[t]`
/// is the coefficient of q^{valuation + t}; exponents below the valuation
/// and between the last stored coefficient and N are known zeros.
///
/// Canonical form (maintained by every operation): the first stored
/// coefficient is nonzero, the last stored coefficient is nonzero, and a
/// series with no known nonzero term stores nothing and reports
/// valuation == N + 1.
///
/// Truncation is tracked per value.  A product min-rule propagates it: the
/// unknown tail of one factor is shifted by the other factor's valuation,
/// so (f*g) is exact to min(f.N + g.valuation, g.N + f.valuation).
class QSeries {
public:
    /// Zero series, known to order 0.
    QSeries() : valuation_(1), truncation_(0) {}

    static QSeries zero(Exp truncation) {
        QSeries s;
        s.valuation_ = truncation + 1;
        s.truncation_ = truncation;
        return s;
    }

    static QSeries one(Exp truncation) { return monomial(1, 0, truncation); }

    static QSeries monomial(Int coefficient, Exp exponent, Exp truncation) {
        QSeries s;
        s.truncation_ = truncation;
        s.valuation_ = exponent;
        s.coefficients_.push_back(std::move(coefficient));
        s.canonicalize();
        return s;
    }

    static QSeries from_coefficients(Exp valuation, std::vector<Int> coefficients,
                                     Exp truncation) {
        QSeries s;
        s.valuation_ = valuation;
        s.coefficients_ = std::move(coefficients);
        s.truncation_ = truncation;
        s.canonicalize();
        return s;
    }

    /// Convenience constructor from (exponent, coefficient) pairs.
    static QSeries from_terms(std::initializer_list<std::pair<Exp, long long>> terms,
                              Exp truncation);

    Exp valuation() const { return valuation_; }
    Exp truncation_order() const { return truncation_; }
    bool is_zero() const { return coefficients_.empty(); }
    const std::vector<Int>& coefficients() const { return coefficients_; }

    /// Coefficient of q^exponent. Throws std::out_of_range above the
    /// truncation order, where the series is unknown.
    Int coefficient(Exp exponent) const;

    /// Same series with the truncation order lowered to `order` (no-op if it
    /// is already lower).
    QSeries truncated_to(Exp order) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& f, const QSeries& g);
    friend QSeries operator-(const QSeries& f, const QSeries& g);
    friend QSeries operator*(const QSeries& f, const QSeries& g);

    QSeries& operator+=(const QSeries& g) { return *this = *this + g; }
    QSeries& operator-=(const QSeries& g) { return *this = *this - g; }
    QSeries& operator*=(const QSeries& g) { return *this = *this * g; }

    /// Structural equality: same valuation, coefficients and truncation.
    bool operator==(const QSeries&) const = default;

private:
    Exp valuation_;
    std::vector<Int> coefficients_;
    Exp truncation_;

    void canonicalize();
};

/// First exponent (on the common known range) where two series differ.
struct CoefficientMismatch {
    Exp exponent;
    Int lhs;
    Int rhs;
};

/// Compares coefficientwise on all exponents <= min of the truncation
/// orders; nullopt when the series agree everywhere they are both known.
std::optional<CoefficientMismatch> first_difference(const QSeries& lhs,
                                                    const QSeries& rhs);

/// True iff first_difference is empty.
bool known_equal(const QSeries& lhs, const QSeries& rhs);

/// Multiplicative inverse of a unit series to the given order.  The lowest
/// nonzero coefficient must be +1 or -1 (every denominator in scope is
/// 1 - q^m).  Throws NotAUnit otherwise, and InsufficientPrecision when
/// f.truncation_order - 2*f.valuation < order.
QSeries invert_unit(const QSeries& f, Exp order);

/// (a; q^qstep)_n = (1-a)(1-a q^qstep)...(1-a q^{qstep(n-1)}), truncated.
QSeries pochhammer(const Monomial& a, Exp qstep, Exp n, Exp order);

/// (a; q^qstep)_infinity.  The product stops once its factors are congruent
/// to 1 modulo q^{order+1}.  (1; q^qstep)_infinity is the zero series: the
/// product contains the factor (1 - 1).
QSeries pochhammer_inf(const Monomial& a, Exp qstep, Exp order);

/// Sum of q^{(2n+1)^2} over (2n+1)^2 <= order.
QSeries theta_odd_squares(Exp order);

/// Bilateral theta sum specialized at z = ±q^m:
/// sum over all integers n of q^{n^2} z^n = sum of (±1)^n q^{n^2 + mn}.
/// Only finitely many n contribute up to any degree; the result is a
/// Laurent series with valuation >= -floor(m^2/4).
QSeries theta_jacobi(const Monomial& z, Exp order);

/// "1 - q - q^2 + q^5", lowest exponent first.  max_terms == 0 prints every
/// stored term; otherwise the output stops after max_terms terms and ends
/// with "...".
std::string to_string(const QSeries& s, std::size_t max_terms = 0);

std::ostream& operator<<(std::ostream& os, const QSeries& s);

/// JSON object {valuation, truncation_order, coefficients: [decimal
/// strings]} -- strings so arbitrary-precision coefficients round-trip
/// losslessly.
std::string to_json(const QSeries& s);
QSeries qseries_from_json(const std::string& text);

}  // namespace dumont
