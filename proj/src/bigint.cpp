#include "eqkl/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqkl {

namespace {
constexpr std::uint64_t kBase = std::uint64_t(1) << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value < 0 ? -1 : 1;
    // Avoid overflow on LLONG_MIN by widening before negation.
    std::uint64_t mag = value < 0 ? std::uint64_t(0) - std::uint64_t(value) : std::uint64_t(value);
    while (mag != 0) {
        mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<std::uint32_t> out;
    out.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t sum = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
        carry = sum >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = std::int64_t(a[i]) - borrow - (i < b.size() ? std::int64_t(b[i]) : 0);
        if (diff < 0) {
            diff += std::int64_t(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        mag_ = add_mag(mag_, rhs.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, rhs.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, rhs.mag_);
    } else {
        mag_ = sub_mag(rhs.mag_, mag_);
        sign_ = rhs.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) {
        sign_ = 0;
        mag_.clear();
        return *this;
    }
    std::vector<std::uint32_t> out(mag_.size() + rhs.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.mag_.size(); ++j) {
            std::uint64_t cur = std::uint64_t(mag_[i]) * rhs.mag_[j] + out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.mag_.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    mag_ = std::move(out);
    sign_ *= rhs.sign_;
    trim();
    return *this;
}

bool BigInt::operator<(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_;
    int c = cmp_mag(mag_, rhs.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::div_exact(std::uint32_t divisor) const {
    if (divisor == 0) throw std::logic_error("BigInt::div_exact: division by zero");
    if (sign_ == 0) return BigInt();
    BigInt out;
    out.sign_ = sign_;
    out.mag_.assign(mag_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | mag_[i];
        out.mag_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    if (rem != 0) throw std::logic_error("BigInt::div_exact: inexact division");
    out.trim();
    return out;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt out(1);
    for (unsigned i = 2; i <= n; ++i) out *= BigInt(i);
    return out;
}

BigInt BigInt::binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt();
    if (k > n - k) k = n - k;
    BigInt out(1);
    for (unsigned i = 1; i <= k; ++i) {
        out *= BigInt(n - k + i);
        out = out.div_exact(i);
    }
    return out;
}

BigInt BigInt::from_decimal(std::string_view text) {
    BigInt out;
    bool negative = false;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt::from_decimal: empty number");
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt::from_decimal: bad digit");
        out *= BigInt(10);
        out += BigInt(c - '0');
    }
    if (negative) out.sign_ = -out.sign_;
    return out;
}

std::string BigInt::to_decimal() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<std::uint32_t> mag = mag_;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        std::string chunk = std::to_string(rem);
        if (!mag.empty()) chunk.insert(0, 9 - chunk.size(), '0');
        digits.insert(0, chunk);
    }
    return sign_ < 0 ? "-" + digits : digits;
}

long long BigInt::to_ll() const {
    if (sign_ == 0) return 0;
    if (mag_.size() > 2) throw std::overflow_error("BigInt::to_ll: value out of range");
    std::uint64_t mag = mag_[0];
    if (mag_.size() == 2) mag |= std::uint64_t(mag_[1]) << 32;
    if (sign_ > 0) {
        if (mag > 0x7fffffffffffffffull) throw std::overflow_error("BigInt::to_ll: value out of range");
        return static_cast<long long>(mag);
    }
    if (mag > 0x8000000000000000ull) throw std::overflow_error("BigInt::to_ll: value out of range");
    return static_cast<long long>(-mag);
}

} // namespace eqkl
