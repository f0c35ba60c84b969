#include "minkorder/polynomial.hpp"

#include <sstream>

namespace minkorder {

IntPoly IntPoly::monomial(const BigInt& c, int d) {
    if (c == 0) return IntPoly();
    std::vector<BigInt> v(static_cast<size_t>(d) + 1, BigInt(0));
    v.back() = c;
    return IntPoly(std::move(v));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        BigInt c = coeff(d);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigInt a = abs(c);
        if (a != 1 || d == 0) os << a.get_str();
        if (d > 0) os << "t";
        if (d > 1) os << "^" << d;
        first = false;
    }
    return os.str();
}

} // namespace minkorder
