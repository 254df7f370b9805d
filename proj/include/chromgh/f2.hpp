#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace chromgh::f2 {

// Dense vector over the two-element field.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool none() const;
    // Highest set coordinate, if any.
    std::optional<std::size_t> top() const;

    BitVector& operator^=(const BitVector& other);
    bool operator==(const BitVector&) const = default;

    // Concatenation used by the intersection routine.
    BitVector concat(const BitVector& tail) const;
    BitVector slice(std::size_t begin, std::size_t end) const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Subspace of F2^n kept in echelon form keyed by the top coordinate.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : n_(ambient_dim) {}

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    // Returns false when v was already in the span.
    bool insert(BitVector v);
    bool contains(BitVector v) const;
    std::vector<BitVector> basis() const;

private:
    std::size_t n_;
    std::map<std::size_t, BitVector> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

// Null space of the linear map whose columns are images of the unit vectors
// e_0..e_{k-1}; returned inside F2^k.
Subspace kernel(const std::vector<BitVector>& columns, std::size_t image_dim);

}  // namespace chromgh::f2
