#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kimura {

// Weakly decreasing sequence of positive integers.  The empty partition is a
// first-class value of weight 0.  Serializes as "[3,1]" / "[]".
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    std::size_t rows() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // 1-based row access; rows beyond the shape read as 0.
    int part(std::size_t i) const {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    Partition conjugate() const;

    std::string str() const;
    static Partition parse(std::string_view s);

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n, each once, in lexicographically decreasing order:
// (n), (n-1,1), ..., (1,...,1).  n = 0 yields only the empty partition.
std::vector<Partition> enumerate_partitions(int n);

// dim V_lambda by the hook length formula n!/prod(hooks); divisibility is
// asserted.  Errors on the empty partition; weight capped at 20 so the
// __int128 intermediates stay exact.
std::int64_t irrep_dimension(const Partition& lambda);

// True iff lambda_{p+1} <= q, i.e. the cell (p+1, q+1) is not in lambda.
bool fits_hook(const Partition& lambda, std::int64_t p, std::int64_t q);

// Hook length of the 0-based cell (row, col); the cell must be in the shape.
int hook_length(const Partition& lambda, int row, int col);

// Classical semistandard tableau count of the shape with the given number of
// letters: the hook content formula prod (letters + col - row)/hook.
std::int64_t ssyt_count(const Partition& shape, std::int64_t letters);

}  // namespace kimura
