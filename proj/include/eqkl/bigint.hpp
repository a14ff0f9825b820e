#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eqkl {

/// Signed arbitrary-precision integer, sized for tableau counts and
/// characteristic-polynomial coefficients. Little-endian 32-bit limbs.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    static BigInt from_decimal(std::string_view text);
    static BigInt factorial(unsigned n);
    static BigInt binomial(unsigned n, unsigned k);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }

    bool operator==(const BigInt& rhs) const = default;
    bool operator<(const BigInt& rhs) const;

    /// Quotient under division by a small positive integer; the division
    /// must be exact (throws std::logic_error on a nonzero remainder).
    BigInt div_exact(std::uint32_t divisor) const;

    std::string to_decimal() const;

    /// Value as long long; throws std::overflow_error if it does not fit.
    long long to_ll() const;

private:
    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> mag_;   // empty iff sign_ == 0

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

} // namespace eqkl
