#include "minkorder/rational.hpp"

#include <cctype>
#include <sstream>

namespace minkorder {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw input_error("bad rational literal: \"" + text + "\"");
    BigInt n(num), d(den);
    if (d == 0) throw input_error("bad rational literal (zero denominator): \"" + text + "\"");
    if (neg) n = -n;
    return Rational(n, d);
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw input_error("vector dimension mismatch in dot product");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational norm_sq(const RatVec& a) { return dot(a, a); }

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw input_error("vector dimension mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw input_error("vector dimension mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec scale(const Rational& c, const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero(const RatVec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

std::string str(const RatVec& a) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        os << a[i].str();
    }
    os << ")";
    return os.str();
}

} // namespace minkorder
