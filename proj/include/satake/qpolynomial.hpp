#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "satake/errors.hpp"
#include "satake/numeric.hpp"

namespace satake {

/// Laurent polynomial in one variable q with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored; equality is
/// coefficient-wise.
class QPolynomial {
  public:
    QPolynomial() = default;

    static QPolynomial zero() { return QPolynomial(); }

    static QPolynomial one() { return monomial(0, 1); }

    /// c * q^e
    static QPolynomial monomial(int e, Int c) {
        QPolynomial p;
        if (c != 0) p.coeffs_[e] = std::move(c);
        return p;
    }

    static QPolynomial q(int e = 1) { return monomial(e, 1); }

    bool is_zero() const { return coeffs_.empty(); }

    Int coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    /// Largest exponent with nonzero coefficient. Zero polynomial has no
    /// degree; callers must check is_zero() first.
    int degree() const {
        if (is_zero()) throw structural_error("degree of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    int low_degree() const {
        if (is_zero()) throw structural_error("low degree of zero polynomial");
        return coeffs_.begin()->first;
    }

    const std::map<int, Int>& terms() const { return coeffs_; }

    void add_term(int e, const Int& c) {
        if (c == 0) return;
        Int& slot = coeffs_[e];
        slot += c;
        if (slot == 0) coeffs_.erase(e);
    }

    QPolynomial operator+(const QPolynomial& o) const {
        QPolynomial r = *this;
        for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
        return r;
    }

    QPolynomial operator-(const QPolynomial& o) const {
        QPolynomial r = *this;
        for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
        return r;
    }

    QPolynomial operator*(const QPolynomial& o) const {
        QPolynomial r;
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    QPolynomial operator*(const Int& c) const {
        QPolynomial r;
        if (c == 0) return r;
        for (const auto& [e, v] : coeffs_) r.coeffs_[e] = v * c;
        return r;
    }

    QPolynomial operator-() const { return *this * Int(-1); }

    bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPolynomial& o) const { return !(*this == o); }

    /// q^s * P(q^{-1}) — the degree reversal used by the stalk formulas.
    QPolynomial reciprocal_shift(int s) const {
        QPolynomial r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[s - e] = c;
        return r;
    }

    /// Specialization at q = 1.
    Int at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    bool all_coeffs_nonnegative() const {
        for (const auto& [e, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    /// Canonical text form: terms by increasing exponent, e.g. "1 + 2*q + q^3".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            Int a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (e == 0) {
                out << a.get_str();
            } else {
                if (a != 1) out << a.get_str() << "*";
                out << "q";
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

  private:
    std::map<int, Int> coeffs_;
};

inline QPolynomial operator*(const Int& c, const QPolynomial& p) { return p * c; }

} // namespace satake
