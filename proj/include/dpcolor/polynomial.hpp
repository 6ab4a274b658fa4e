#pragma once

#include <string>
#include <vector>

#include "dpcolor/bigint.hpp"

namespace dpc {

/// Univariate polynomial with exact integer coefficients; coefficient i
/// multiplies m^i. Trailing zero coefficients are trimmed, so the zero
/// polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coefficients);

    static Polynomial constant(const BigInt& c);
    /// m^k
    static Polynomial monomial(unsigned k);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    BigInt leading_coefficient() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

    BigInt evaluate(const BigInt& m) const;
    BigInt operator()(const BigInt& m) const { return evaluate(m); }

    /// p(m - shift)
    Polynomial shifted(const BigInt& shift) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form in the variable `m`, e.g. "m^3 - 3m^2 + 2m".
    std::string str() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

}  // namespace dpc
