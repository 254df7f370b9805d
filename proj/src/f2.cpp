#include <chromgh/f2.hpp>

#include <algorithm>
#include <bit>

namespace chromgh::f2 {

bool BitVector::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> BitVector::top() const {
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return std::nullopt;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVector BitVector::concat(const BitVector& tail) const {
    BitVector out(size_ + tail.size_);
    for (std::size_t i = 0; i < size_; ++i)
        if (test(i)) out.set(i);
    for (std::size_t i = 0; i < tail.size_; ++i)
        if (tail.test(i)) out.set(size_ + i);
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t end) const {
    BitVector out(end - begin);
    for (std::size_t i = begin; i < end; ++i)
        if (test(i)) out.set(i - begin);
    return out;
}

bool Subspace::insert(BitVector v) {
    while (auto t = v.top()) {
        auto it = basis_.find(*t);
        if (it == basis_.end()) {
            basis_.emplace(*t, std::move(v));
            return true;
        }
        v ^= it->second;
    }
    return false;
}

bool Subspace::contains(BitVector v) const {
    while (auto t = v.top()) {
        auto it = basis_.find(*t);
        if (it == basis_.end()) return false;
        v ^= it->second;
    }
    return true;
}

std::vector<BitVector> Subspace::basis() const {
    std::vector<BitVector> out;
    for (const auto& [k, v] : basis_) out.push_back(v);
    return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    Subspace out = a;
    for (const auto& v : b.basis()) out.insert(v);
    return out;
}

// Zassenhaus: echelonize rows (u|u) and (v|0) with the left block dominant;
// rows whose left block vanishes carry a basis of the intersection.
Subspace intersection(const Subspace& a, const Subspace& b) {
    const std::size_t n = a.ambient_dim();
    const BitVector zero(n);
    Subspace joint(2 * n);
    // Left block must dominate the pivot choice, so it sits in the high half.
    for (const auto& u : a.basis()) joint.insert(u.concat(u));
    for (const auto& v : b.basis()) joint.insert(zero.concat(v));
    Subspace out(n);
    for (const auto& row : joint.basis())
        if (row.slice(n, 2 * n).none()) out.insert(row.slice(0, n));
    return out;
}

Subspace kernel(const std::vector<BitVector>& columns, std::size_t image_dim) {
    const std::size_t k = columns.size();
    // Rows (image | identity) with the image block in the high coordinates.
    Subspace joint(image_dim + k);
    for (std::size_t i = 0; i < k; ++i) {
        BitVector unit(k);
        unit.set(i);
        joint.insert(unit.concat(columns[i]));
    }
    Subspace out(k);
    for (const auto& row : joint.basis())
        if (row.slice(k, k + image_dim).none()) out.insert(row.slice(0, k));
    return out;
}

}  // namespace chromgh::f2
