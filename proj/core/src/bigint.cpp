#include "pcgraph/bigint.hpp"

#include <algorithm>
#include <ostream>

#include "pcgraph/errors.hpp"

namespace pcg {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = carry + limbs_[i];
        if (i < rhs.limbs_.size()) s += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
    BigUint out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + carry +
                                std::uint64_t(lhs.limbs_[i]) * rhs.limbs_[j];
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    out.trim();
    return out;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigUint BigUint::pow(const BigUint& base, std::uint64_t exp) {
    BigUint result(1);
    BigUint sq = base;
    while (exp) {
        if (exp & 1) result = result * sq;
        exp >>= 1;
        if (exp) sq = sq * sq;
    }
    return result;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw Overflow("value does not fit in 64 bits: " + str());
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = std::uint64_t(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigUint::str() const {
    if (is_zero()) return "0";
    // Repeatedly divide by 10^9 and collect 9-digit groups.
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::string group = std::to_string(rem);
        if (!work.empty()) group.insert(0, 9 - group.size(), '0');
        out.insert(0, group);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigUint& v) {
    return os << v.str();
}

}  // namespace pcg
