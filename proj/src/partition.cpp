#include "kimura/partition.hpp"

#include <numeric>

#include "kimura/errors.hpp"
#include "kimura/rational.hpp"

namespace kimura {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw UsageError("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw UsageError("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> transposed(static_cast<std::size_t>(parts_[0]));
    for (int j = 0; j < parts_[0]; ++j) {
        int count = 0;
        for (int row : parts_)
            if (row >= j + 1) ++count;
        transposed[static_cast<std::size_t>(j)] = count;
    }
    return Partition(std::move(transposed));
}

std::string Partition::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

Partition Partition::parse(std::string_view s) {
    auto fail = [&]() -> Partition {
        throw UsageError("malformed partition: '" + std::string(s) + "' (expected e.g. \"[3,1]\")");
    };
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (i >= s.size() || s[i] != '[') return fail();
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < s.size() && s[i] == ']') {
        ++i;
        skip_ws();
        if (i != s.size()) return fail();
        return Partition{};
    }
    while (true) {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start) return fail();
        parts.push_back(std::stoi(std::string(s.substr(start, i - start))));
        skip_ws();
        if (i < s.size() && s[i] == ',') { ++i; continue; }
        if (i < s.size() && s[i] == ']') { ++i; break; }
        return fail();
    }
    skip_ws();
    if (i != s.size()) return fail();
    return Partition(std::move(parts));
}

namespace {

void extend_partitions(std::vector<int>& prefix, int remaining, int max_part,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        extend_partitions(prefix, remaining - k, k, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw UsageError("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend_partitions(prefix, n, n, out);
    if (n == 0) out.assign(1, Partition{});
    return out;
}

int hook_length(const Partition& lambda, int row, int col) {
    int arm = lambda.part(static_cast<std::size_t>(row) + 1) - col - 1;
    int leg = lambda.conjugate().part(static_cast<std::size_t>(col) + 1) - row - 1;
    if (arm < 0 || leg < 0) throw UsageError("hook_length: cell outside the shape");
    return arm + leg + 1;
}

std::int64_t irrep_dimension(const Partition& lambda) {
    if (lambda.empty()) throw UsageError("irrep_dimension: empty partition");
    int n = lambda.weight();
    if (n > 20) throw LimitError("irrep_dimension: weight > 20 exceeds exact integer range");

    const Partition conj = lambda.conjugate();
    __int128 hooks = 1;
    for (std::size_t r = 0; r < lambda.rows(); ++r)
        for (int c = 0; c < lambda.parts()[r]; ++c) {
            int arm = lambda.parts()[r] - c - 1;
            int leg = conj.parts()[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            hooks *= arm + leg + 1;
        }
    __int128 fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    if (fact % hooks != 0)
        throw CrossCheckError("hook length formula produced a non-integer dimension");
    return static_cast<std::int64_t>(fact / hooks);
}

bool fits_hook(const Partition& lambda, std::int64_t p, std::int64_t q) {
    if (p < 0 || q < 0) throw UsageError("fits_hook: p, q must be nonnegative");
    if (p >= static_cast<std::int64_t>(lambda.rows())) return true;
    return lambda.parts()[static_cast<std::size_t>(p)] <= q;
}

std::int64_t ssyt_count(const Partition& shape, std::int64_t letters) {
    if (letters < 0) throw UsageError("ssyt_count: letter count must be nonnegative");
    if (shape.empty()) return 1;
    if (static_cast<std::int64_t>(shape.rows()) > letters) return 0;
    const Partition conj = shape.conjugate();
    Rational total(1);
    for (std::size_t r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.parts()[r]; ++c) {
            int arm = shape.parts()[r] - c - 1;
            int leg = conj.parts()[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            total *= Rational(letters + c - static_cast<std::int64_t>(r), arm + leg + 1);
        }
    return total.to_integer();
}

}  // namespace kimura
