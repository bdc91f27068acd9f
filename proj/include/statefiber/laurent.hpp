#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace statefiber {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial with exact integer coefficients.
/// Exponents are plain integers; what one exponent unit means (a power of A,
/// half a power of t, ...) is up to the caller.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(BigInt coeff, int exponent) {
        LaurentPoly p;
        if (coeff != 0)
            p.terms_[exponent] = std::move(coeff);
        return p;
    }

    static LaurentPoly constant(BigInt c) { return monomial(std::move(c), 0); }

    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    int min_exp() const {
        require_nonzero();
        return terms_.begin()->first;
    }

    int max_exp() const {
        require_nonzero();
        return terms_.rbegin()->first;
    }

    const std::map<int, BigInt>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& other) {
        for (const auto& [e, c] : other.terms_) {
            BigInt& slot = terms_[e];
            slot += c;
            if (slot == 0)
                terms_.erase(e);
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        a += b;
        return a;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                BigInt& slot = out.terms_[ea + eb];
                slot += ca * cb;
            }
        // strip cancellations
        for (auto it = out.terms_.begin(); it != out.terms_.end();)
            it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
        return out;
    }

    LaurentPoly& operator*=(const LaurentPoly& other) {
        *this = *this * other;
        return *this;
    }

    friend LaurentPoly operator*(const BigInt& c, LaurentPoly p) {
        if (c == 0)
            return LaurentPoly{};
        for (auto& [e, coeff] : p.terms_)
            coeff *= c;
        return p;
    }

    LaurentPoly pow(unsigned k) const {
        LaurentPoly out = constant(1);
        LaurentPoly base = *this;
        while (k > 0) {
            if (k & 1u)
                out *= base;
            base *= base;
            k >>= 1u;
        }
        return out;
    }

    /// Shift every exponent by delta (multiply by x^delta).
    LaurentPoly shifted(int delta) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_)
            out.terms_[e + delta] = c;
        return out;
    }

    /// Substitute x -> x^{-1}.
    LaurentPoly inverted_variable() const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_)
            out.terms_[-e] = c;
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Canonical term list in ascending exponent order, e.g. "1*x^(-3) + 2*x^(0)".
    std::string to_string(const std::string& var = "x") const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += c.str() + "*" + var + "^(" + std::to_string(e) + ")";
        }
        return out;
    }

private:
    void require_nonzero() const {
        if (terms_.empty())
            throw std::logic_error("degree of zero polynomial");
    }

    std::map<int, BigInt> terms_;
};

}  // namespace statefiber
