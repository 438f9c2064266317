#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/errors.hpp"

namespace indpoly {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& v) { return sgn(v); }
inline int sign_of(const Rat& v) { return sgn(v); }

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Univariate polynomial with arbitrary-precision integer coefficients.
// coeffs()[k] is the coefficient of x^k; the zero polynomial has no
// coefficients and degree -1.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Int v) {
        if (v == 0) return Poly{};
        return Poly{{std::move(v)}};
    }

    static Poly monomial(Int coeff, int k) {
        if (coeff == 0) return Poly{};
        std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
        c.back() = std::move(coeff);
        return Poly{std::move(c)};
    }

    static Poly x() { return monomial(1, 1); }
    static Poly one() { return constant(1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return c_; }

    Int coeff(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Int(0);
        return c_[static_cast<std::size_t>(k)];
    }

    const Int& leading() const {
        if (c_.empty()) throw InternalError("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly{std::move(c)};
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Poly{std::move(c)};
    }

    friend Poly operator-(const Poly& a) {
        std::vector<Int> c(a.c_);
        for (auto& v : c) v = -v;
        return Poly{std::move(c)};
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Poly{std::move(c)};
    }

    friend Poly operator*(const Poly& a, const Int& k) {
        if (k == 0) return Poly{};
        std::vector<Int> c(a.c_);
        for (auto& v : c) v *= k;
        return Poly{std::move(c)};
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly pow(int k) const {
        if (k < 0) throw PreconditionError("negative polynomial power");
        Poly r = one();
        Poly base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    Rat eval(const Rat& q) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= q;
            acc += Rat(*it);
        }
        return acc;
    }

    Int eval(const Int& v) const {
        Int acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= v;
            acc += *it;
        }
        return acc;
    }

    int sign_at(const Rat& q) const { return sign_of(eval(q)); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly{};
        std::vector<Int> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
        return Poly{std::move(c)};
    }

    // gcd of coefficients, with the sign of the leading coefficient.
    Int content() const {
        if (c_.empty()) return Int(0);
        Int g(0);
        for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (sign_of(c_.back()) < 0) g = -g;
        return g;
    }

    Poly divided_by_positive_content() const {
        if (c_.empty()) return Poly{};
        Int g = abs(content());
        std::vector<Int> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            mpz_divexact(c[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
        return Poly{std::move(c)};
    }

    Poly primitive_part() const {
        if (c_.empty()) return Poly{};
        Int g = content();
        std::vector<Int> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            mpz_divexact(c[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
        return Poly{std::move(c)};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

// Remainder of a by b, scaled by a positive constant so all arithmetic stays
// in Z. The returned polynomial has the same roots and the same sign
// everywhere as the true remainder.
inline Poly positive_scaled_remainder(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw PreconditionError("remainder by zero polynomial");
    Poly r = a;
    const Int& lb = b.leading();
    int negations = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Int lr = r.leading();
        // lb * r - lr * x^shift * b kills the leading term.
        r = r * lb - Poly::monomial(lr, shift) * b;
        if (sign_of(lb) < 0) ++negations;
        // content removal keeps coefficients small; dividing by a positive
        // constant preserves signs
        if (!r.is_zero() && r.degree() > 0) r = r.divided_by_positive_content();
    }
    if (negations % 2 == 1) r = -r;
    return r;
}

inline Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? Poly{} : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = positive_scaled_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? Poly{} : r.primitive_part();
    }
    return a;
}

// Exact quotient a / b; throws if b does not divide a over Q or the quotient
// is not integral.
inline Poly poly_div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw PreconditionError("division by zero polynomial");
    if (a.is_zero()) return Poly{};
    if (a.degree() < b.degree()) throw InternalError("poly_div_exact: not divisible");
    std::vector<Rat> rem(a.coeffs().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rat(a.coeffs()[i]);
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
    Rat lb{b.leading()};
    for (int d = a.degree(); d >= b.degree();) {
        Rat lead = rem[static_cast<std::size_t>(d)];
        if (lead != 0) {
            int shift = d - b.degree();
            Rat factor = lead / lb;
            q[static_cast<std::size_t>(shift)] = factor;
            for (int k = 0; k <= b.degree(); ++k)
                rem[static_cast<std::size_t>(k + shift)] -= factor * Rat(b.coeff(k));
        }
        --d;
    }
    for (const auto& r : rem)
        if (r != 0) throw InternalError("poly_div_exact: nonzero remainder");
    std::vector<Int> qi(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) throw InternalError("poly_div_exact: non-integer quotient");
        qi[i] = q[i].get_num();
    }
    return Poly{std::move(qi)};
}

// Yun's squarefree decomposition: returns (factor, multiplicity) pairs with
// product of factor^multiplicity equal to P up to a constant. Factors are
// primitive with positive leading coefficient.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw PreconditionError("squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly f = p.primitive_part();
    if (f.degree() == 0) return out;
    Poly fp = f.derivative();
    Poly g = poly_gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    Poly w = poly_div_exact(f, g);
    Poly y = poly_div_exact(fp, g);
    Poly z = y - w.derivative();
    int i = 1;
    while (!z.is_zero()) {
        Poly gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        w = poly_div_exact(w, gi);
        y = poly_div_exact(z, gi);
        z = y - w.derivative();
        ++i;
    }
    if (w.degree() > 0) out.emplace_back(w, i);
    return out;
}

// Product of the distinct irreducible factors of P.
inline Poly squarefree_part(const Poly& p) {
    Poly out = Poly::one();
    for (const auto& [f, m] : squarefree_decomposition(p)) out *= f;
    return out;
}

// Sturm sequence of a squarefree polynomial: P, P', then negated remainders,
// content-reduced, ending in a nonzero constant.
inline std::vector<Poly> sturm_chain(const Poly& p) {
    if (p.is_zero()) throw PreconditionError("Sturm chain of zero polynomial");
    std::vector<Poly> chain;
    chain.push_back(p);
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative());
    while (chain.back().degree() > 0) {
        Poly r = positive_scaled_remainder(chain[chain.size() - 2], chain.back());
        if (r.is_zero())
            throw PreconditionError("Sturm chain requires a squarefree polynomial");
        chain.push_back((-r).divided_by_positive_content());
    }
    return chain;
}

// Sign variations of the chain at a rational point; zeros are skipped.
inline int sturm_variations(const std::vector<Poly>& chain, const Rat& x) {
    int count = 0;
    int prev = 0;
    for (const auto& q : chain) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Number of distinct real roots of the chain's polynomial in (a, b].
inline int sturm_count(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    if (!(a < b)) throw PreconditionError("sturm_count requires a < b");
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// Cauchy bound: every real root has absolute value below the returned value.
inline Rat root_bound(const Poly& p) {
    if (p.is_zero()) throw PreconditionError("root bound of zero polynomial");
    Int maxc(0);
    for (const auto& c : p.coeffs()) {
        Int a = abs(c);
        if (a > maxc) maxc = a;
    }
    Rat bound = Rat(maxc) / Rat(abs(p.leading()));
    return bound + 1;
}

// (1+x)^n * P(x/(1+x)), expanded exactly. Requires n >= deg P.
inline Poly corona_transform(const Poly& p, int n) {
    if (n < p.degree()) throw PreconditionError("corona_transform requires n >= deg P");
    Poly onePlusX{{Int(1), Int(1)}};
    Poly out;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k) == 0) continue;
        out += Poly::monomial(p.coeff(k), k) * onePlusX.pow(n - k);
    }
    return out;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Sparse text form, ascending degree: "1 + 10x + 36x^2", "1 - x^3", "0".
inline std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        const Int c = p.coeff(k);
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (sign_of(c) < 0) out += "-";
            first = false;
        } else {
            out += sign_of(c) < 0 ? " - " : " + ";
        }
        bool needCoeff = (a != 1) || k == 0;
        if (needCoeff) out += a.get_str();
        if (k >= 1) {
            out += "x";
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline Poly poly_from_string(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty polynomial", i);
    std::vector<Int> coeffs;
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (!first) {
            if (text[i] == '+') sign = 1;
            else if (text[i] == '-') sign = -1;
            else throw ParseError("expected '+' or '-' between terms", i);
            ++i;
            skip_ws();
        } else if (text[i] == '-') {
            sign = -1;
            ++i;
            skip_ws();
        }
        first = false;
        // coefficient (optional if the term has an x part)
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i];
            ++i;
        }
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        if (i < text.size() && text[i] == '*') ++i;  // accept "c*x^k" too
        int expn = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            expn = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string ed;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    ed += text[i];
                    ++i;
                }
                if (ed.empty()) throw ParseError("missing exponent after '^'", i);
                expn = std::stoi(ed);
            }
        } else if (digits.empty()) {
            throw ParseError("expected a coefficient or 'x'", i);
        }
        if (static_cast<std::size_t>(expn) >= coeffs.size()) coeffs.resize(expn + 1, Int(0));
        coeffs[static_cast<std::size_t>(expn)] += sign * coeff;
        skip_ws();
    }
    return Poly{std::move(coeffs)};
}

}  // namespace indpoly
