#include "kimura/orbit.hpp"

#include <algorithm>

namespace kimura {

bool solve_linear_system(RatMatrix a, std::vector<Rational> b, std::vector<Rational>& x) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw UsageError("solve_linear_system: rhs size mismatch");

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t k = 0; k < cols; ++k) std::swap(a.at(rank, k), a.at(pivot, k));
        std::swap(b[rank], b[pivot]);
        const Rational inv = Rational(1) / a.at(rank, c);
        for (std::size_t k = c; k < cols; ++k) a.at(rank, k) *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a.at(r, c).is_zero()) continue;
            const Rational factor = a.at(r, c);
            for (std::size_t k = c; k < cols; ++k)
                a.at(r, k) -= factor * a.at(rank, k);
            b[r] -= factor * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return false;

    x.assign(cols, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return true;
}

GradedObject GradedObject::twisted(int n) const {
    GradedObject out = *this;
    for (GradedComponent& c : out.components) c.twist += n;
    return out;
}

GradedObject GradedObject::make(std::size_t k, const std::string& prefix) {
    GradedObject out;
    out.components.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.components.push_back({prefix + std::to_string(i), 0});
    return out;
}

GradedObject oplus(const GradedObject& a, const GradedObject& b) {
    GradedObject out = a;
    out.components.insert(out.components.end(), b.components.begin(), b.components.end());
    return out;
}

OrbitMorphism::OrbitMorphism(GradedObject domain, GradedObject codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {}

void OrbitMorphism::set_part(int n, RatMatrix m) {
    if (m.rows() != codomain_.size() || m.cols() != domain_.size())
        throw UsageError("orbit morphism part has the wrong shape");
    if (m.is_zero())
        parts_.erase(n);
    else
        parts_[n] = std::move(m);
}

RatMatrix OrbitMorphism::part(int n) const {
    auto it = parts_.find(n);
    if (it != parts_.end()) return it->second;
    return RatMatrix(codomain_.size(), domain_.size());
}

int OrbitMorphism::max_support() const {
    int m = 0;
    for (const auto& [n, mat] : parts_) m = std::max(m, n < 0 ? -n : n);
    return m;
}

OrbitMorphism OrbitMorphism::identity(const GradedObject& a) {
    OrbitMorphism id(a, a);
    if (a.size() > 0) id.set_part(0, RatMatrix::identity(a.size()));
    return id;
}

bool OrbitMorphism::is_identity() const {
    if (domain_ != codomain_) return false;
    if (domain_.size() == 0) return parts_.empty();
    return parts_.size() == 1 && parts_.begin()->first == 0 &&
           parts_.begin()->second.is_identity();
}

OrbitMorphism compose(const OrbitMorphism& g, const OrbitMorphism& f) {
    if (f.codomain() != g.domain())
        throw UsageError("compose: codomain of f does not match domain of g");
    OrbitMorphism out(f.domain(), g.codomain());
    std::map<int, RatMatrix> acc;
    for (const auto& [n, fn] : f.parts())
        for (const auto& [m, gm] : g.parts()) {
            const int i = m + n;  // g_{i-n} with i - n = m
            RatMatrix prod = gm * fn;
            auto it = acc.find(i);
            if (it == acc.end())
                acc.emplace(i, std::move(prod));
            else
                it->second += prod;
        }
    for (auto& [i, mat] : acc) out.set_part(i, std::move(mat));
    return out;
}

OrbitMorphism project(const RatMatrix& f0, GradedObject domain, GradedObject codomain) {
    OrbitMorphism out(std::move(domain), std::move(codomain));
    out.set_part(0, f0);
    return out;
}

OrbitMorphism oplus(const OrbitMorphism& a, const OrbitMorphism& b) {
    OrbitMorphism out(oplus(a.domain(), b.domain()), oplus(a.codomain(), b.codomain()));
    std::vector<int> supports;
    for (const auto& [n, m] : a.parts()) supports.push_back(n);
    for (const auto& [n, m] : b.parts()) supports.push_back(n);
    for (int n : supports) {
        RatMatrix block(out.codomain().size(), out.domain().size());
        const RatMatrix pa = a.part(n), pb = b.part(n);
        for (std::size_t r = 0; r < pa.rows(); ++r)
            for (std::size_t c = 0; c < pa.cols(); ++c) block.at(r, c) = pa.at(r, c);
        for (std::size_t r = 0; r < pb.rows(); ++r)
            for (std::size_t c = 0; c < pb.cols(); ++c)
                block.at(pa.rows() + r, pa.cols() + c) = pb.at(r, c);
        out.set_part(n, std::move(block));
    }
    return out;
}

UnfoldResult unfold_summand(const OrbitMorphism& f, const OrbitMorphism& g, int n_window) {
    if (f.domain() != g.codomain() || f.codomain() != g.domain())
        throw UsageError("unfold_summand: f and g must be morphisms a -> b and b -> a");
    if (n_window < 1) throw UsageError("unfold_summand: N must be positive");
    if (n_window < f.max_support() || n_window < g.max_support())
        throw UsageError("unfold_summand: N is smaller than the morphism supports");
    if (!compose(g, f).is_identity())
        throw HypothesisError("unfold_summand: g o f is not the orbit identity of the source");

    const GradedObject& a = f.domain();
    const GradedObject& b = f.codomain();
    const std::size_t db = b.size();
    const std::size_t window = static_cast<std::size_t>(2 * n_window + 1);

    UnfoldResult out;
    for (int n = -n_window; n <= n_window; ++n)
        out.stacked = oplus(out.stacked, b.twisted(n));

    out.alpha = RatMatrix(window * db, a.size());
    out.beta = RatMatrix(a.size(), window * db);
    for (int n = -n_window; n <= n_window; ++n) {
        const std::size_t block = static_cast<std::size_t>(n + n_window) * db;
        const RatMatrix fn = f.part(n);
        const RatMatrix gn = g.part(-n);  // g_{-n} twisted by n keeps its entries
        for (std::size_t r = 0; r < db; ++r)
            for (std::size_t c = 0; c < a.size(); ++c) {
                out.alpha.at(block + r, c) = fn.at(r, c);
                out.beta.at(c, block + r) = gn.at(c, r);
            }
    }
    out.is_summand = (out.beta * out.alpha).is_identity();
    return out;
}

}  // namespace kimura
