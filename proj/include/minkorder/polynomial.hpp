#pragma once

#include <string>
#include <vector>

#include "minkorder/rational.hpp"

namespace minkorder {

/// Polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first with no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    /// c * t^d
    static IntPoly monomial(const BigInt& c, int d);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero poly
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(int d) const {
        return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : BigInt(0);
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt eval(const BigInt& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

} // namespace minkorder
