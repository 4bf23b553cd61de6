#pragma once

#include <map>
#include <string>
#include <vector>

#include "kimura/matrix.hpp"

namespace kimura {

// Formal direct summand: an atom identity plus a twist index.  Tensoring by
// the invertible object shifts every twist index by one.
struct GradedComponent {
    std::string label;
    int twist = 0;

    friend bool operator==(const GradedComponent& a, const GradedComponent& b) {
        return a.label == b.label && a.twist == b.twist;
    }
};

struct GradedObject {
    std::vector<GradedComponent> components;

    std::size_t size() const { return components.size(); }
    GradedObject twisted(int n) const;

    // k anonymous components "e0".."e{k-1}" at twist 0.
    static GradedObject make(std::size_t k, const std::string& prefix = "e");

    friend bool operator==(const GradedObject& a, const GradedObject& b) {
        return a.components == b.components;
    }
    friend bool operator!=(const GradedObject& a, const GradedObject& b) { return !(a == b); }
};

GradedObject oplus(const GradedObject& a, const GradedObject& b);

// Morphism in the orbit category: a finite-support family {f_n} where f_n is
// a matrix from the components of the domain to the components of the
// codomain twisted n times.  Twisting relabels components bijectively, so
// every part has the same shape.
class OrbitMorphism {
public:
    OrbitMorphism(GradedObject domain, GradedObject codomain);

    const GradedObject& domain() const { return domain_; }
    const GradedObject& codomain() const { return codomain_; }
    const std::map<int, RatMatrix>& parts() const { return parts_; }

    void set_part(int n, RatMatrix m);  // zero matrices are dropped
    RatMatrix part(int n) const;        // zero matrix when unsupported
    int max_support() const;            // max |n| over the support; 0 if empty

    static OrbitMorphism identity(const GradedObject& a);
    bool is_identity() const;

    friend bool operator==(const OrbitMorphism& a, const OrbitMorphism& b) {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.parts_ == b.parts_;
    }

private:
    GradedObject domain_, codomain_;
    std::map<int, RatMatrix> parts_;
};

// (g o f)_i = sum_n (g_{i-n} twisted by n) o f_n.  Twisting leaves matrix
// entries unchanged in this model, so the sum is a convolution of the parts.
OrbitMorphism compose(const OrbitMorphism& g, const OrbitMorphism& f);

// Canonical functor on morphisms: support {0} with the given matrix.
OrbitMorphism project(const RatMatrix& f0, GradedObject domain, GradedObject codomain);

// Block-diagonal direct sum of morphisms.
OrbitMorphism oplus(const OrbitMorphism& a, const OrbitMorphism& b);

struct UnfoldResult {
    GradedObject stacked;  // direct sum of codomain(n) for n = -N..N
    RatMatrix alpha;       // domain -> stacked, rows blocked by n
    RatMatrix beta;        // stacked -> domain
    bool is_summand = false;
};

// Mechanized summand argument: from g o f = id build alpha from {f_n} and
// beta from {g_{-n} twisted by n}; beta o alpha equals the 0th component of
// g o f, hence the plain identity of the domain.  Throws HypothesisError when
// g o f is not the orbit identity, and UsageError when N is below the
// supports.
UnfoldResult unfold_summand(const OrbitMorphism& f, const OrbitMorphism& g, int n_window);

}  // namespace kimura
