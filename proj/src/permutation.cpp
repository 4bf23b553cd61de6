#include "kimura/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "kimura/errors.hpp"

namespace kimura {

std::int64_t factorial(int n) {
    if (n < 0 || n > 20) throw LimitError("factorial: argument outside exact int64 range [0,20]");
    std::int64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

Permutation::Permutation(int degree) {
    if (degree < 0) throw UsageError("permutation degree must be nonnegative");
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int& v : images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw UsageError("permutation images must be a bijection of {1..n}");
        seen[static_cast<std::size_t>(v - 1)] = true;
        v -= 1;
    }
    images_ = std::move(images);
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        throw UsageError("cannot compose permutations of different degree");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out[i] = images_[static_cast<std::size_t>(other.images_[i])];
    return Permutation(std::move(out), Unchecked{});
}

Permutation Permutation::inverse() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(out), Unchecked{});
}

Partition Permutation::cycle_type() const {
    std::vector<bool> visited(images_.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (visited[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!visited[j]) {
            visited[j] = true;
            j = static_cast<std::size_t>(images_[j]);
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

std::uint64_t Permutation::rank() const {
    const int n = degree();
    // Horner over the factorial number system: digit i has radix n - i.
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j < n; ++j)
            if (images_[static_cast<std::size_t>(j)] < images_[static_cast<std::size_t>(i)])
                ++smaller_after;
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_after);
    }
    return r;
}

Permutation Permutation::unrank(int degree, std::uint64_t r) {
    if (degree < 0) throw UsageError("permutation degree must be nonnegative");
    std::vector<int> lehmer(static_cast<std::size_t>(degree), 0);
    for (int i = degree - 1; i >= 0; --i) {
        auto radix = static_cast<std::uint64_t>(degree - i);
        lehmer[static_cast<std::size_t>(i)] = static_cast<int>(r % radix);
        r /= radix;
    }
    if (r != 0) throw UsageError("permutation rank out of range for this degree");
    std::vector<int> pool(static_cast<std::size_t>(degree));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) {
        int d = lehmer[static_cast<std::size_t>(i)];
        images[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(d)];
        pool.erase(pool.begin() + d);
    }
    return Permutation(std::move(images), Unchecked{});
}

std::string Permutation::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(images_[i] + 1);
    }
    return out + "]";
}

}  // namespace kimura
