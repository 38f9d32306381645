#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace splitiv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Valuation value: a non-negative integer or infinity (v(0)).
///
/// Infinity is a distinguished state, never a sentinel integer, so that
/// min/sum arithmetic cannot be corrupted by v(0).
class ExtNat {
public:
    ExtNat() : value_(0), infinite_(false) {}
    explicit ExtNat(std::int64_t v) : value_(v), infinite_(false) {}

    static ExtNat infinity() {
        ExtNat n;
        n.infinite_ = true;
        return n;
    }

    bool is_infinite() const { return infinite_; }

    /// Finite value; must not be called on infinity.
    std::int64_t finite() const;

    friend bool operator==(const ExtNat& a, const ExtNat& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const ExtNat& a, const ExtNat& b) { return !(a == b); }
    friend bool operator<(const ExtNat& a, const ExtNat& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtNat& a, const ExtNat& b) { return a < b || a == b; }
    friend bool operator>(const ExtNat& a, const ExtNat& b) { return b < a; }
    friend bool operator>=(const ExtNat& a, const ExtNat& b) { return b <= a; }

    friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtNat(a.value_ + b.value_);
    }

    friend ExtNat min(const ExtNat& a, const ExtNat& b) { return a < b ? a : b; }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, const ExtNat& n) { return os << n.str(); }

private:
    std::int64_t value_;
    bool infinite_;
};

}  // namespace splitiv
