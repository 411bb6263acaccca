#include "kgh/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace kgh {

namespace {

constexpr std::uint64_t kBase = 1ull << 32;

int bit_length(const std::vector<std::uint32_t>& mag) {
    if (mag.empty()) return 0;
    std::uint32_t top = mag.back();
    int bits = 0;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return static_cast<int>(mag.size() - 1) * 32 + bits;
}

bool get_bit(const std::vector<std::uint32_t>& mag, int i) {
    return (mag[static_cast<std::size_t>(i / 32)] >> (i % 32)) & 1u;
}

// mag <<= 1, then set the low bit to `carry_in`.
void shl1_or(std::vector<std::uint32_t>& mag, bool carry_in) {
    std::uint32_t carry = carry_in ? 1u : 0u;
    for (auto& limb : mag) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) mag.push_back(carry);
}

}  // namespace

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long u =
        v > 0 ? static_cast<unsigned long long>(v)
              : (static_cast<unsigned long long>(~v) + 1ull);  // avoids LLONG_MIN overflow
    while (u) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

// Requires a >= b.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (s < 0) {
            s += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(s));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.sign_ = a.sign_;
        out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.sign_ = a.sign_;
            out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            out.sign_ = b.sign_;
            out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt out;
    out.sign_ = a.sign_ * b.sign_;
    out.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.mag_.size(); ++j) {
            std::uint64_t cur = out.mag_[i + j] +
                                static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] + carry;
            out.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        std::size_t pos = i + b.mag_.size();
        while (carry) {
            std::uint64_t cur = out.mag_[pos] + carry;
            out.mag_[pos] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++pos;
        }
    }
    out.trim();
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& rem) {
    if (b.sign_ == 0) throw std::domain_error("division by zero");
    if (a.sign_ == 0) {
        q = BigInt();
        rem = BigInt();
        return;
    }
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
        q = BigInt();
        rem = a;
        return;
    }
    // Shift-subtract long division on magnitudes.
    int bits = bit_length(a.mag_);
    std::vector<std::uint32_t> quot(a.mag_.size(), 0);
    std::vector<std::uint32_t> r;
    for (int i = bits - 1; i >= 0; --i) {
        shl1_or(r, get_bit(a.mag_, i));
        if (cmp_mag(r, b.mag_) >= 0) {
            r = sub_mag(r, b.mag_);
            quot[static_cast<std::size_t>(i / 32)] |= (1u << (i % 32));
        }
    }
    q = BigInt();
    q.mag_ = std::move(quot);
    q.sign_ = a.sign_ * b.sign_;
    q.trim();
    rem = BigInt();
    rem.mag_ = std::move(r);
    rem.sign_ = a.sign_;  // remainder follows the dividend (truncated division)
    rem.trim();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t pos = 0;
    int sign = 1;
    if (s[0] == '-' || s[0] == '+') {
        sign = s[0] == '-' ? -1 : 1;
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    BigInt out;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            throw std::invalid_argument("bad integer literal: " + s);
        out = out * BigInt(10) + BigInt(s[pos] - '0');
    }
    if (!out.is_zero() && sign < 0) out.sign_ = -1;
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    BigInt v = abs();
    BigInt ten(10);
    while (!v.is_zero()) {
        BigInt q, r;
        divmod(v, ten, q, r);
        digits += static_cast<char>('0' + (r.is_zero() ? 0 : r.mag_[0]));
        v = q;
    }
    if (sign_ < 0) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rat::normalize() {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt::from_string(s), BigInt(1));
    return Rat(BigInt::from_string(s.substr(0, slash)),
               BigInt::from_string(s.substr(slash + 1)));
}

std::string Rat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rat Rat::operator-() const {
    Rat out = *this;
    out.num_ = -out.num_;
    return out;
}

Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const Rat& a, const Rat& b) {
    return (a.num_ * b.den_) < (b.num_ * a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.to_string(); }

}  // namespace kgh
