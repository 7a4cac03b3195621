#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "satake/errors.hpp"
#include "satake/numeric.hpp"

namespace satake {

/// Exponent vector of a monomial; one nonnegative entry per variable.
using Exponent = std::vector<int>;

/// Graded-lexicographic term order: first by total degree, ties broken
/// lexicographically. Fixed once so serialization is deterministic.
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Multivariate polynomial in a fixed number of variables with exact
/// rational coefficients. No zero terms are stored; all ring operations
/// are exact and deterministic.
class MultiPolynomial {
  public:
    using TermMap = std::map<Exponent, Rat, GradedLexLess>;

    explicit MultiPolynomial(int nvars = 0) : nvars_(nvars) {}

    static MultiPolynomial constant(int nvars, const Rat& c) {
        MultiPolynomial p(nvars);
        if (c != 0) p.terms_[Exponent(static_cast<size_t>(nvars), 0)] = c;
        return p;
    }

    static MultiPolynomial zero(int nvars) { return MultiPolynomial(nvars); }

    static MultiPolynomial one(int nvars) { return constant(nvars, Rat(1)); }

    static MultiPolynomial variable(int nvars, int index, int power = 1) {
        if (index < 0 || index >= nvars) throw structural_error("variable index out of range");
        Exponent e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(index)] = power;
        return monomial(nvars, e, Rat(1));
    }

    static MultiPolynomial monomial(int nvars, Exponent e, const Rat& c) {
        if (static_cast<int>(e.size()) != nvars) throw structural_error("exponent length mismatch");
        MultiPolynomial p(nvars);
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree() == 0;
    }

    Rat constant_term() const {
        Exponent zero_exp(static_cast<size_t>(nvars_), 0);
        auto it = terms_.find(zero_exp);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int total_degree() const {
        if (is_zero()) return -1;
        int d = 0;
        for (int e : terms_.rbegin()->first) d += e;
        return d;
    }

    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
        return d;
    }

    void add_term(const Exponent& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPolynomial operator+(const MultiPolynomial& o) const {
        check_same_vars(o);
        MultiPolynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MultiPolynomial operator-(const MultiPolynomial& o) const {
        check_same_vars(o);
        MultiPolynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    MultiPolynomial operator*(const MultiPolynomial& o) const {
        check_same_vars(o);
        MultiPolynomial r(nvars_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                Exponent e = e1;
                for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        }
        return r;
    }

    MultiPolynomial operator*(const Rat& c) const {
        MultiPolynomial r(nvars_);
        if (c == 0) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
        return r;
    }

    MultiPolynomial operator-() const { return *this * Rat(-1); }

    bool operator==(const MultiPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPolynomial& o) const { return !(*this == o); }

    /// Substitute `value` (a polynomial in the same variables) for variable
    /// `var`.
    MultiPolynomial substitute(int var, const MultiPolynomial& value) const {
        check_same_vars(value);
        MultiPolynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponent rest = e;
            int k = rest[static_cast<size_t>(var)];
            rest[static_cast<size_t>(var)] = 0;
            MultiPolynomial term = monomial(nvars_, rest, c);
            for (int i = 0; i < k; ++i) term = term * value;
            r = r + term;
        }
        return r;
    }

    Rat evaluate(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw structural_error("evaluation point length mismatch");
        Rat sum(0);
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (size_t i = 0; i < e.size(); ++i) {
                for (int k = 0; k < e[i]; ++k) term *= point[i];
            }
            sum += term;
        }
        return sum;
    }

    /// Coefficient of (var)^k, as a polynomial in the same variable set
    /// (with var-exponent zero).
    MultiPolynomial coefficient_of(int var, int k) const {
        MultiPolynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<size_t>(var)] != k) continue;
            Exponent rest = e;
            rest[static_cast<size_t>(var)] = 0;
            r.add_term(rest, c);
        }
        return r;
    }

    /// Same polynomial viewed in a larger variable set (new variables get
    /// exponent zero).
    MultiPolynomial extend_vars(int new_nvars) const {
        if (new_nvars < nvars_) throw structural_error("cannot shrink variable set");
        MultiPolynomial r(new_nvars);
        for (const auto& [e, c] : terms_) {
            Exponent ext = e;
            ext.resize(static_cast<size_t>(new_nvars), 0);
            r.terms_[std::move(ext)] = c;
        }
        return r;
    }

    /// Exact division: returns a/b when b divides a exactly in the
    /// polynomial ring, nothing otherwise.
    static std::optional<MultiPolynomial> try_divide_exact(const MultiPolynomial& a,
                                                           const MultiPolynomial& b) {
        a.check_same_vars(b);
        if (b.is_zero()) return std::nullopt;
        MultiPolynomial q(a.nvars_);
        MultiPolynomial r = a;
        const auto& bl = *b.terms_.rbegin();
        while (!r.is_zero()) {
            const auto& rl = *r.terms_.rbegin();
            Exponent diff(rl.first.size());
            for (size_t i = 0; i < diff.size(); ++i) {
                diff[i] = rl.first[i] - bl.first[i];
                if (diff[i] < 0) return std::nullopt;
            }
            Rat c = rl.second / bl.second;
            MultiPolynomial m = monomial(a.nvars_, diff, c);
            q = q + m;
            r = r - m * b;
        }
        return q;
    }

    /// Canonical text form with caller-supplied variable names; terms in
    /// increasing graded-lex order.
    std::string str(const std::vector<std::string>& names) const {
        if (static_cast<int>(names.size()) != nvars_) throw structural_error("variable name count mismatch");
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat a = c;
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
            bool has_vars = false;
            std::ostringstream mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (has_vars) mono << "*";
                mono << names[i];
                if (e[i] != 1) mono << "^" << e[i];
                has_vars = true;
            }
            if (!has_vars) {
                out << to_string(a);
            } else {
                if (a != 1) out << to_string(a) << "*";
                out << mono.str();
            }
        }
        return out.str();
    }

  private:
    void check_same_vars(const MultiPolynomial& o) const {
        if (nvars_ != o.nvars_) throw structural_error("variable count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

inline MultiPolynomial operator*(const Rat& c, const MultiPolynomial& p) { return p * c; }

/// Variable names for canonical serialization: t1,...,tm with the class
/// variable (if any) named last.
inline std::vector<std::string> t_names(int m) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

inline std::vector<std::string> t_names_with(int m, const std::string& last) {
    auto names = t_names(m);
    names.push_back(last);
    return names;
}

} // namespace satake
