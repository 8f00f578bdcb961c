#pragma once

#include "schurlab/numeric.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace schurlab {

// Dense polynomial with integer coefficients, index = power. Normalized so
// the top coefficient is nonzero; the zero polynomial has no coefficients and
// reports degree -1.
class qpolynomial {
public:
    qpolynomial() = default;

    qpolynomial(std::initializer_list<long> cs)
    {
        for (long c : cs)
            coeffs_.emplace_back(c);
        normalize();
    }

    explicit qpolynomial(std::vector<Int> cs) : coeffs_(std::move(cs)) { normalize(); }

    static qpolynomial monomial(Int c, long power)
    {
        qpolynomial p;
        if (c == 0)
            return p;
        p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Int(0));
        p.coeffs_.back() = std::move(c);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int coeff(long power) const
    {
        if (power < 0 || power >= static_cast<long>(coeffs_.size()))
            return 0;
        return coeffs_[static_cast<std::size_t>(power)];
    }

    friend bool operator==(const qpolynomial& a, const qpolynomial& b)
    {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const qpolynomial& a, const qpolynomial& b) { return !(a == b); }

    qpolynomial& operator+=(const qpolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Int(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    qpolynomial& operator-=(const qpolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Int(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    friend qpolynomial operator+(qpolynomial a, const qpolynomial& b)
    {
        a += b;
        return a;
    }
    friend qpolynomial operator-(qpolynomial a, const qpolynomial& b)
    {
        a -= b;
        return a;
    }
    friend qpolynomial operator-(const qpolynomial& a)
    {
        qpolynomial r = a;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    // exact convolution
    friend qpolynomial operator*(const qpolynomial& a, const qpolynomial& b)
    {
        qpolynomial r;
        if (a.is_zero() || b.is_zero())
            return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.normalize();
        return r;
    }

    friend qpolynomial operator*(const Int& c, const qpolynomial& a)
    {
        qpolynomial r;
        if (c == 0)
            return r;
        r.coeffs_ = a.coeffs_;
        for (auto& v : r.coeffs_)
            v *= c;
        return r;
    }

    Int eval(const Int& x) const
    {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Rat eval(const Rat& x) const
    {
        Rat acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + Rat(*it);
        return acc;
    }

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

inline qpolynomial derivative(const qpolynomial& p)
{
    std::vector<Int> out;
    for (long i = 1; i <= p.degree(); ++i)
        out.push_back(Int(i) * p.coeff(i));
    return qpolynomial(std::move(out));
}

// Text form: terms ascending in power, zero coefficients omitted, unit
// coefficients implicit on powers >= 1, `0` for the zero polynomial.
inline std::string to_string(const qpolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (long i = 0; i <= p.degree(); ++i) {
        const Int& c = p.coeff(i);
        if (c == 0)
            continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out += '-';
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += 'q';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

} // namespace schurlab
