#include "eqkl/partition.hpp"

#include <algorithm>
#include <numeric>

#include "eqkl/schur.hpp"

namespace eqkl {

Partition::Partition(std::initializer_list<int> parts) {
    *this = from_parts(std::vector<int>(parts));
}

Partition Partition::from_parts(const std::vector<int>& raw) {
    Partition p;
    p.parts_.reserve(raw.size());
    for (int part : raw) {
        if (part < 0) throw NotWeaklyDecreasing("partition parts must be nonnegative");
        if (part == 0) continue;
        if (!p.parts_.empty() && p.parts_.back() < part)
            throw NotWeaklyDecreasing("partition parts must be weakly decreasing");
        p.parts_.push_back(part);
        p.size_ += part;
    }
    return p;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.parts_[static_cast<std::size_t>(i)] > parts_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

Partition Partition::conjugate() const {
    Partition out;
    if (parts_.empty()) return out;
    out.parts_.resize(static_cast<std::size_t>(parts_[0]));
    for (int col = 0; col < parts_[0]; ++col) {
        int count = 0;
        while (count < length() && parts_[static_cast<std::size_t>(count)] > col) ++count;
        out.parts_[static_cast<std::size_t>(col)] = count;
    }
    out.size_ = size_;
    return out;
}

Partition make_partition(const std::vector<int>& raw) { return Partition::from_parts(raw); }

std::optional<Partition> compact_partition(int head, int twos, int ones) {
    if (twos < 0 || ones < 0 || head < 0) return std::nullopt;
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(twos + ones + 1));
    if (head > 0) parts.push_back(head);
    parts.insert(parts.end(), static_cast<std::size_t>(twos), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    if (head == 0 && (twos > 0 || ones > 0)) return std::nullopt;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i - 1] < parts[i]) return std::nullopt;
    }
    return Partition::from_parts(parts);
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    // Interlacing: outer_i >= inner_i >= outer_{i+1}.
    for (int i = 0; i < outer.length(); ++i) {
        if (inner.part(i) < outer.part(i + 1)) return false;
    }
    return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (int i = 0; i < outer.length(); ++i) {
        if (outer.part(i) - inner.part(i) > 1) return false;
    }
    return true;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("SkewShape: inner partition not contained in outer");
}

BigInt syt_count(const Partition& shape) {
    const int n = shape.size();
    if (n == 0) return BigInt(1);
    // n!/∏hooks via prime exponents, so no intermediate quotient is ever
    // required to be integral.
    std::vector<int> exponents(static_cast<std::size_t>(n) + 1, 0);
    for (int p = 2; p <= n; ++p) {
        if (exponents[static_cast<std::size_t>(p)] != 0) continue;  // not prime
        for (long long pk = p; pk <= n; pk *= p) exponents[static_cast<std::size_t>(p)] += n / static_cast<int>(pk);
        for (int q = 2 * p; q <= n; q += p) exponents[static_cast<std::size_t>(q)] = -1;  // composite marker
    }
    for (std::size_t q = 2; q < exponents.size(); ++q) {
        if (exponents[q] < 0) exponents[q] = 0;
    }
    Partition conj = shape.conjugate();
    for (int row = 0; row < shape.length(); ++row) {
        for (int col = 0; col < shape.part(row); ++col) {
            int hook = (shape.part(row) - col - 1) + (conj.part(col) - row - 1) + 1;
            for (int p = 2; p * p <= hook; ++p) {
                while (hook % p == 0) {
                    --exponents[static_cast<std::size_t>(p)];
                    hook /= p;
                }
            }
            if (hook > 1) --exponents[static_cast<std::size_t>(hook)];
        }
    }
    BigInt out(1);
    for (std::size_t p = 2; p < exponents.size(); ++p) {
        if (exponents[p] < 0) throw std::logic_error("syt_count: hook product does not divide n!");
        for (int e = 0; e < exponents[p]; ++e) out *= BigInt(static_cast<long long>(p));
    }
    return out;
}

BigInt skew_syt_count(const SkewShape& shape) {
    BigInt out;
    const SchurVector expansion = skew_schur_expand(shape);
    for (const auto& [nu, coeff] : expansion.terms()) {
        out += BigInt(coeff) * syt_count(nu);
    }
    return out;
}

} // namespace eqkl
