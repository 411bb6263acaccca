#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kgh {

/// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
/// Sized for exact simplex pivoting at desk scale; no asymptotic cleverness.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, mirrors integer literals

    static BigInt from_string(const std::string& s);
    std::string to_string() const;

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// Truncated division (quotient rounds toward zero).
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& rem);
    static BigInt gcd(BigInt a, BigInt b);  // nonnegative

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

  private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zero limbs

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

/// Exact rational number, always normalized: den > 0, gcd(|num|, den) = 1.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rat(BigInt num, BigInt den);
    Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or "p" with optional leading '-'.
    static Rat from_string(const std::string& s);
    std::string to_string() const;  // "p/q", or "p" when q == 1

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }

    Rat operator-() const;

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b);
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& v);

  private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace kgh
