#pragma once

// Exact multivariate Laurent arithmetic over Z in variables x1..xm, y1..yn.
// Values of every expansion formula in this library live here.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cluloop {

// Variable code: +i is x_i, -i is y_i (i >= 1). Canonical variable order is
// x1 < x2 < ... < y1 < y2 < ...
using VarCode = int32_t;

inline VarCode xvar(int i) { return i; }
inline VarCode yvar(int i) { return -i; }

inline bool var_order_less(VarCode a, VarCode b) {
    const bool ay = a < 0, by = b < 0;
    if (ay != by) return by;                 // every x precedes every y
    return ay ? (-a < -b) : (a < b);
}

inline std::string var_name(VarCode v) {
    return (v > 0 ? "x" + std::to_string(v) : "y" + std::to_string(-v));
}

// A Laurent monomial: sparse exponent vector, no zero entries, sorted by
// canonical variable order.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(VarCode v, int exp = 1) {
        Monomial m;
        if (exp != 0) m.exps_.emplace_back(v, exp);
        return m;
    }

    int exponent(VarCode v) const {
        for (const auto& [code, e] : exps_)
            if (code == v) return e;
        return 0;
    }

    bool is_one() const { return exps_.empty(); }
    const std::vector<std::pair<VarCode, int>>& exponents() const { return exps_; }

    Monomial& operator*=(const Monomial& o) {
        *this = merged(o, +1);
        return *this;
    }
    Monomial operator*(const Monomial& o) const { return merged(o, +1); }
    Monomial operator/(const Monomial& o) const { return merged(o, -1); }

    Monomial inverse() const {
        Monomial m = *this;
        for (auto& [c, e] : m.exps_) e = -e;
        return m;
    }

    void mul_var(VarCode v, int exp) { *this *= variable(v, exp); }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    // Total order used for canonical term order in serialized polynomials:
    // compare exponents variable by variable in canonical variable order.
    bool operator<(const Monomial& o) const {
        std::size_t i = 0, j = 0;
        while (i < exps_.size() || j < o.exps_.size()) {
            if (i == exps_.size()) {
                // this has exponent 0 on o's next variable
                return 0 < o.exps_[j].second;
            }
            if (j == o.exps_.size()) return exps_[i].second < 0;
            const auto [va, ea] = exps_[i];
            const auto [vb, eb] = o.exps_[j];
            if (va == vb) {
                if (ea != eb) return ea < eb;
                ++i, ++j;
            } else if (var_order_less(va, vb)) {
                if (ea != 0) return ea < 0;
                ++i;
            } else {
                if (eb != 0) return 0 < eb;
                ++j;
            }
        }
        return false;
    }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (i) out += " * ";
            out += var_name(exps_[i].first);
            if (exps_[i].second != 1)
                out += "^" + std::to_string(exps_[i].second);
        }
        return out;
    }

private:
    Monomial merged(const Monomial& o, int sign) const {
        Monomial m;
        std::size_t i = 0, j = 0;
        while (i < exps_.size() || j < o.exps_.size()) {
            if (j == o.exps_.size() ||
                (i < exps_.size() && var_order_less(exps_[i].first, o.exps_[j].first))) {
                m.exps_.push_back(exps_[i++]);
            } else if (i == exps_.size() ||
                       var_order_less(o.exps_[j].first, exps_[i].first)) {
                m.exps_.emplace_back(o.exps_[j].first, sign * o.exps_[j].second);
                ++j;
            } else {
                int e = exps_[i].second + sign * o.exps_[j].second;
                if (e != 0) m.exps_.emplace_back(exps_[i].first, e);
                ++i, ++j;
            }
        }
        return m;
    }

    std::vector<std::pair<VarCode, int>> exps_;
};

// Exact Laurent polynomial with arbitrary-precision integer coefficients.
// Canonical: no zero coefficients, terms keyed by monomial in canonical order.
class Laurent {
public:
    using Terms = std::map<Monomial, mpz_class>;

    Laurent() = default;
    explicit Laurent(long c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    static Laurent constant(mpz_class c) {
        Laurent p;
        if (c != 0) p.terms_[Monomial{}] = std::move(c);
        return p;
    }
    static Laurent monomial(Monomial m, mpz_class c = 1) {
        Laurent p;
        if (c != 0) p.terms_[std::move(m)] = std::move(c);
        return p;
    }
    static Laurent variable(VarCode v, int exp = 1) {
        return monomial(Monomial::variable(v, exp));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        r += o;
        return r;
    }
    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Laurent operator-(const Laurent& o) const { return *this + (-o); }

    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    void add_term(const Monomial& m, const mpz_class& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Division by a monomial is always defined in the Laurent ring.
    Laurent divided_by(const Monomial& m) const {
        Laurent r;
        const Monomial inv = m.inverse();
        for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * inv, c);
        return r;
    }

    // Exact division: returns q with (*this) == d * q, or nullopt. Both
    // operands are shifted into the polynomial cone (per-variable minimum
    // exponent zero); in an integral domain minimum exponents add under
    // multiplication, so the Laurent quotient exists iff the shifted
    // polynomial quotient does, and leading-term reduction terminates.
    std::optional<Laurent> exact_divide(const Laurent& d) const {
        if (d.is_zero()) return std::nullopt;
        if (is_zero()) return Laurent{};
        const Monomial sp = min_exponent_shift(), sd = d.min_exponent_shift();
        Laurent rem = divided_by(sp);
        const Laurent dd = d.divided_by(sd);
        const auto dl = std::prev(dd.terms_.end());  // leading divisor term
        Laurent quot;
        while (!rem.is_zero()) {
            const auto rl = std::prev(rem.terms_.end());
            const Monomial qm = rl->first / dl->first;
            bool cone = true;
            for (const auto& [v, e] : qm.exponents())
                if (e < 0) { cone = false; break; }
            if (!cone) return std::nullopt;
            if (mpz_divisible_p(rl->second.get_mpz_t(), dl->second.get_mpz_t()) == 0)
                return std::nullopt;
            mpz_class qc;
            mpz_divexact(qc.get_mpz_t(), rl->second.get_mpz_t(), dl->second.get_mpz_t());
            quot.add_term(qm, qc);
            for (const auto& [m, c] : dd.terms_) rem.add_term(qm * m, -qc * c);
        }
        Laurent out;
        const Monomial back = sd.inverse() * sp;
        for (const auto& [m, c] : quot.terms_) out.terms_.emplace(m * back, c);
        return out;
    }

    // Monomial with, per variable, the minimum exponent occurring in a term.
    Monomial min_exponent_shift() const {
        std::map<VarCode, int> mins;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::map<VarCode, int> cur;
            for (const auto& [v, e] : m.exponents()) cur[v] = e;
            if (first) {
                mins = cur;
                first = false;
            } else {
                for (auto& [v, e] : mins) {
                    auto it = cur.find(v);
                    e = std::min(e, it == cur.end() ? 0 : it->second);
                }
                for (const auto& [v, e] : cur)
                    if (!mins.count(v)) mins[v] = std::min(0, e);
            }
        }
        Monomial out;
        for (const auto& [v, e] : mins) out.mul_var(v, e);
        return out;
    }

    // Substitute variables: each mapped variable is replaced by a Laurent
    // value (intended for units and single variables).
    Laurent specialized(const std::map<VarCode, Laurent>& assignment) const {
        Laurent out;
        for (const auto& [m, c] : terms_) {
            Laurent t = Laurent::constant(c);
            Monomial rest;
            for (const auto& [v, e] : m.exponents()) {
                auto it = assignment.find(v);
                if (it == assignment.end()) {
                    rest.mul_var(v, e);
                } else {
                    Laurent base = it->second;
                    if (e < 0) {
                        // units and single variables invert cleanly
                        if (base.term_count() != 1)
                            throw std::runtime_error("cannot invert non-monomial value");
                        const auto& [bm, bc] = *base.terms().begin();
                        if (bc != 1 && bc != -1)
                            throw std::runtime_error("cannot invert non-unit coefficient");
                        base = Laurent::monomial(bm.inverse(), bc);
                    }
                    for (int k = 0; k < std::abs(e); ++k) t *= base;
                }
            }
            out += t * Laurent::monomial(rest);
        }
        return out;
    }

    bool all_coefficients_positive() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.second > 0; });
    }

    // Canonical textual form: terms in canonical monomial order,
    // "coeff * x1^a1 * ... * y1^b1 * ...", exponent 1 elided, zero-exponent
    // variables omitted, constant term printed as the bare coefficient.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.get_str();
            if (!m.is_one()) os << " * " << m.str();
        }
        return os.str();
    }

private:
    Terms terms_;
};

}  // namespace cluloop
