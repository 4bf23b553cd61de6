#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kimura/partition.hpp"

namespace kimura {

// Bijection of {1..n}, stored 0-based.  Ranked by Lehmer code so group
// algebra terms can be keyed densely; rank 0 is the identity.
class Permutation {
public:
    explicit Permutation(int degree);                 // identity
    explicit Permutation(std::vector<int> images);    // 1-based images

    int degree() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }
    const std::vector<int>& images0() const { return images_; }

    // (*this) o other: apply `other` first.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    Partition cycle_type() const;
    bool is_identity() const;

    std::uint64_t rank() const;
    static Permutation unrank(int degree, std::uint64_t r);

    std::string str() const;  // "[2,1,3]"

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

    std::vector<int> images_;
};

std::int64_t factorial(int n);  // exact for n <= 20

}  // namespace kimura
