#include "dumont/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace dumont {

namespace {

// Integer square root (floor), safe for the desk-scale exponents used here.
Exp isqrt(Exp n) {
    if (n < 0) return -1;
    Exp r = static_cast<Exp>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

void QSeries::canonicalize() {
    // Drop stored coefficients above the truncation order.
    if (!coefficients_.empty()) {
        const Exp last = valuation_ + static_cast<Exp>(coefficients_.size()) - 1;
        if (last > truncation_) {
            const Exp keep = truncation_ - valuation_ + 1;
            if (keep <= 0)
                coefficients_.clear();
            else
                coefficients_.resize(static_cast<std::size_t>(keep));
        }
    }
    // Tight valuation: first stored coefficient nonzero.
    std::size_t lead = 0;
    while (lead < coefficients_.size() && coefficients_[lead] == 0) ++lead;
    if (lead > 0) {
        coefficients_.erase(coefficients_.begin(),
                            coefficients_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<Exp>(lead);
    }
    // Trailing zeros are implied up to the truncation order.
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
    if (coefficients_.empty()) valuation_ = truncation_ + 1;
}

QSeries QSeries::from_terms(std::initializer_list<std::pair<Exp, long long>> terms,
                            Exp truncation) {
    if (terms.size() == 0) return zero(truncation);
    Exp lo = terms.begin()->first;
    Exp hi = lo;
    for (const auto& [e, c] : terms) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    std::vector<Int> coeffs(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e - lo)] += c;
    return from_coefficients(lo, std::move(coeffs), truncation);
}

Int QSeries::coefficient(Exp exponent) const {
    if (exponent > truncation_)
        throw std::out_of_range("QSeries::coefficient: exponent beyond truncation order");
    if (exponent < valuation_) return 0;
    const Exp off = exponent - valuation_;
    if (off >= static_cast<Exp>(coefficients_.size())) return 0;
    return coefficients_[static_cast<std::size_t>(off)];
}

QSeries QSeries::truncated_to(Exp order) const {
    if (order >= truncation_) return *this;
    QSeries s = *this;
    s.truncation_ = order;
    s.canonicalize();
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s = *this;
    for (Int& c : s.coefficients_) c = -c;
    return s;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
    const Exp trunc = std::min(f.truncation_, g.truncation_);
    if (f.is_zero()) return g.truncated_to(trunc);
    if (g.is_zero()) return f.truncated_to(trunc);
    const Exp lo = std::min(f.valuation_, g.valuation_);
    const Exp f_top = f.valuation_ + static_cast<Exp>(f.coefficients_.size()) - 1;
    const Exp g_top = g.valuation_ + static_cast<Exp>(g.coefficients_.size()) - 1;
    const Exp hi = std::min(trunc, std::max(f_top, g_top));
    if (hi < lo) return QSeries::zero(trunc);
    std::vector<Int> coeffs(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t t = 0; t < f.coefficients_.size(); ++t) {
        const Exp e = f.valuation_ + static_cast<Exp>(t);
        if (e > hi) break;
        coeffs[static_cast<std::size_t>(e - lo)] += f.coefficients_[t];
    }
    for (std::size_t t = 0; t < g.coefficients_.size(); ++t) {
        const Exp e = g.valuation_ + static_cast<Exp>(t);
        if (e > hi) break;
        coeffs[static_cast<std::size_t>(e - lo)] += g.coefficients_[t];
    }
    return QSeries::from_coefficients(lo, std::move(coeffs), trunc);
}

QSeries operator-(const QSeries& f, const QSeries& g) { return f + (-g); }

QSeries operator*(const QSeries& f, const QSeries& g) {
    // Each factor's unknown tail is shifted by the other factor's valuation.
    const Exp trunc = std::min(f.truncation_ + g.valuation_, g.truncation_ + f.valuation_);
    if (f.is_zero() || g.is_zero()) return QSeries::zero(trunc);
    const Exp lo = f.valuation_ + g.valuation_;
    if (lo > trunc) return QSeries::zero(trunc);
    const Exp dense_top =
        lo + static_cast<Exp>(f.coefficients_.size() + g.coefficients_.size()) - 2;
    const Exp hi = std::min(trunc, dense_top);
    std::vector<Int> coeffs(static_cast<std::size_t>(hi - lo + 1));
    const Exp limit = hi - lo;
    for (std::size_t s = 0; s < f.coefficients_.size(); ++s) {
        if (static_cast<Exp>(s) > limit) break;
        if (f.coefficients_[s] == 0) continue;
        const std::size_t tmax =
            std::min(g.coefficients_.size(), static_cast<std::size_t>(limit - static_cast<Exp>(s)) + 1);
        for (std::size_t t = 0; t < tmax; ++t) {
            if (g.coefficients_[t] == 0) continue;
            coeffs[s + t] += f.coefficients_[s] * g.coefficients_[t];
        }
    }
    return QSeries::from_coefficients(lo, std::move(coeffs), trunc);
}

std::optional<CoefficientMismatch> first_difference(const QSeries& lhs, const QSeries& rhs) {
    const Exp top = std::min(lhs.truncation_order(), rhs.truncation_order());
    if (lhs.is_zero() && rhs.is_zero()) return std::nullopt;
    Exp lo = top + 1;
    if (!lhs.is_zero()) lo = std::min(lo, lhs.valuation());
    if (!rhs.is_zero()) lo = std::min(lo, rhs.valuation());
    for (Exp e = lo; e <= top; ++e) {
        Int a = (e <= lhs.truncation_order()) ? lhs.coefficient(e) : Int(0);
        Int b = (e <= rhs.truncation_order()) ? rhs.coefficient(e) : Int(0);
        if (a != b) return CoefficientMismatch{e, std::move(a), std::move(b)};
    }
    return std::nullopt;
}

bool known_equal(const QSeries& lhs, const QSeries& rhs) {
    return !first_difference(lhs, rhs).has_value();
}

QSeries invert_unit(const QSeries& f, Exp order) {
    if (f.is_zero()) throw NotAUnit("invert_unit: zero series has no inverse");
    const Int& lead = f.coefficients().front();
    if (lead != 1 && lead != -1)
        throw NotAUnit("invert_unit: lowest coefficient is not +1 or -1");
    const Exp v = f.valuation();
    if (f.truncation_order() - 2 * v < order)
        throw InsufficientPrecision(
            "invert_unit: operand known to too few terms for the requested order");
    const Exp rel_top = order + v;  // relative degree of the inverse
    if (rel_top < 0) return QSeries::zero(order);
    const int lead_unit = (lead == 1) ? 1 : -1;  // equals 1/lead
    const auto& fc = f.coefficients();
    std::vector<Int> g(static_cast<std::size_t>(rel_top) + 1);
    g[0] = lead_unit;
    for (Exp r = 1; r <= rel_top; ++r) {
        Int acc = 0;
        const Exp kmax = std::min<Exp>(r, static_cast<Exp>(fc.size()) - 1);
        for (Exp k = 1; k <= kmax; ++k)
            acc += fc[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(r - k)];
        if (lead_unit == 1)
            g[static_cast<std::size_t>(r)] = -acc;
        else
            g[static_cast<std::size_t>(r)] = acc;
    }
    return QSeries::from_coefficients(-v, std::move(g), order);
}

namespace {

// 1 - sign*q^e as a series; e == 0 collapses to the constant 1 - sign.
QSeries pochhammer_factor(int sign, Exp e, Exp order) {
    if (e == 0) return QSeries::monomial(1 - sign, 0, order);
    return QSeries::from_terms({{0, 1}, {e, -sign}}, order);
}

}  // namespace

QSeries pochhammer(const Monomial& a, Exp qstep, Exp n, Exp order) {
    if (qstep < 1) throw std::invalid_argument("pochhammer: qstep must be >= 1");
    if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
    QSeries acc = QSeries::one(order);
    for (Exp m = 0; m < n; ++m) {
        const Exp e = a.exponent + qstep * m;
        if (e > order) break;  // remaining factors are 1 modulo q^{order+1}
        acc *= pochhammer_factor(a.sign, e, order);
    }
    return acc;
}

QSeries pochhammer_inf(const Monomial& a, Exp qstep, Exp order) {
    if (qstep < 1) throw std::invalid_argument("pochhammer_inf: qstep must be >= 1");
    if (a.exponent == 0 && a.sign == 1) return QSeries::zero(order);  // factor (1 - 1)
    QSeries acc = QSeries::one(order);
    for (Exp m = 0;; ++m) {
        const Exp e = a.exponent + qstep * m;
        if (e > order) break;
        acc *= pochhammer_factor(a.sign, e, order);
    }
    return acc;
}

QSeries theta_odd_squares(Exp order) {
    QSeries acc = QSeries::zero(order);
    for (Exp n = 1; n * n <= order; n += 2)
        acc += QSeries::monomial(1, n * n, order);
    return acc;
}

QSeries theta_jacobi(const Monomial& z, Exp order) {
    const Exp m = z.exponent;
    const Exp disc = 4 * order + m * m;  // n^2 + mn <= order  <=>  (2n+m)^2 <= disc
    if (disc < 0) return QSeries::zero(order);
    const Exp root = isqrt(disc);
    const Exp n_lo = (-m - root - 2) / 2 - 1;
    const Exp n_hi = (-m + root + 2) / 2 + 1;
    std::map<Exp, Int> terms;
    for (Exp n = n_lo; n <= n_hi; ++n) {
        const Exp e = n * n + m * n;
        if (e > order) continue;
        const int sign = (z.sign == -1 && (n % 2 != 0)) ? -1 : 1;
        terms[e] += sign;
    }
    if (terms.empty()) return QSeries::zero(order);
    const Exp lo = terms.begin()->first;
    const Exp hi = terms.rbegin()->first;
    std::vector<Int> coeffs(static_cast<std::size_t>(hi - lo + 1));
    for (auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e - lo)] = std::move(c);
    return QSeries::from_coefficients(lo, std::move(coeffs), order);
}

std::string to_string(const QSeries& s, std::size_t max_terms) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    std::size_t printed = 0;
    bool first = true;
    for (std::size_t t = 0; t < s.coefficients().size(); ++t) {
        const Int& c = s.coefficients()[t];
        if (c == 0) continue;
        if (max_terms != 0 && printed == max_terms) {
            os << " + ...";
            break;
        }
        const Exp e = s.valuation() + static_cast<Exp>(t);
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (e == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            if (e == 1)
                os << "q";
            else
                os << "q^" << e;
        }
        ++printed;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) {
    return os << to_string(s);
}

std::string to_json(const QSeries& s) {
    nlohmann::ordered_json j;
    j["valuation"] = s.valuation();
    j["truncation_order"] = s.truncation_order();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Int& c : s.coefficients()) coeffs.push_back(c.str());
    j["coefficients"] = std::move(coeffs);
    return j.dump();
}

QSeries qseries_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("valuation") || !j.contains("truncation_order") ||
        !j.contains("coefficients") || !j["coefficients"].is_array())
        throw std::invalid_argument("qseries_from_json: malformed series object");
    const Exp valuation = j["valuation"].get<Exp>();
    const Exp truncation = j["truncation_order"].get<Exp>();
    std::vector<Int> coeffs;
    coeffs.reserve(j["coefficients"].size());
    for (const auto& c : j["coefficients"]) {
        if (!c.is_string())
            throw std::invalid_argument("qseries_from_json: coefficients must be strings");
        coeffs.emplace_back(c.get<std::string>());
    }
    return QSeries::from_coefficients(valuation, std::move(coeffs), truncation);
}

}  // namespace dumont
