#pragma once

#include <vector>

#include "abelkit/group.hpp"

namespace abelkit {

/// Homomorphism between finitely generated abelian groups, stored as the
/// matrix of images of source generators: matrix is target.coords() rows by
/// source.coords() columns, torsion rows reduced into [0, d). A matrix is a
/// valid morphism iff annihilating each source generator annihilates its image.
struct Morphism {
    FgAbGroup source, target;
    IntegerMatrix matrix;

    bool operator==(const Morphism& o) const {
        return source == o.source && target == o.target && matrix == o.matrix;
    }
    bool is_zero() const { return matrix.is_zero(); }
};

/// Validates well-definedness and reduces torsion rows. Throws InvalidMorphismError.
Morphism make_morphism(FgAbGroup source, FgAbGroup target, IntegerMatrix matrix);

Morphism identity_morphism(const FgAbGroup& g);
Morphism zero_morphism(const FgAbGroup& source, const FgAbGroup& target);

/// g after f, i.e. (g o f)(x) = g(f(x)). Throws SourceTargetMismatchError.
Morphism compose(const Morphism& g, const Morphism& f);

Morphism add_morphisms(const Morphism& f, const Morphism& g);
Morphism negate_morphism(const Morphism& f);

GroupElement apply(const Morphism& f, const GroupElement& x);

/// Kernel subgroup is trivial / image is the whole target. Both are decided
/// structurally (lattice computations), so they work for infinite groups too.
bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);

/// Basis (one column per vector) of the lattice of source coordinate vectors
/// representing kernel elements. The lattice contains the source's zero
/// representatives, so the columns generate Ker(f) as a subgroup.
IntegerMatrix kernel_vector_basis(const Morphism& f);

/// Hom(M, N) described by generators of its underlying abelian group: every
/// morphism is a unique combination sum_t c_t * g_t with 0 <= c_t < orders[t]
/// (c_t in Z when orders[t] == 0, which happens iff Hom is infinite).
struct HomGroupDescription {
    FgAbGroup source, target;
    std::vector<Morphism> generators;
    std::vector<Int> orders;  // parallel to generators, 0 = infinite order
    bool finite = true;
    Int size = 1;  // meaningful only when finite

    bool is_zero() const { return generators.empty(); }
};

HomGroupDescription hom_group(const FgAbGroup& source, const FgAbGroup& target);

Morphism morphism_from_coefficients(const HomGroupDescription& desc,
                                    const std::vector<Int>& coeffs);

/// Default enumeration budget: 2^25 morphisms.
Int default_hom_budget();

/// Restartable stream over a finite Hom set in deterministic odometer order
/// (coefficient of generator 0 varies fastest, zero morphism first).
/// Throws InfiniteHomSetError / BudgetExceededError up front.
class HomStream {
public:
    HomStream(FgAbGroup source, FgAbGroup target, const Int& budget);

    bool done() const { return done_; }
    const Morphism& current() const { return cur_; }
    void advance();

    const HomGroupDescription& description() const { return desc_; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    Int size() const { return desc_.size; }

private:
    HomGroupDescription desc_;
    std::vector<Int> coeffs_;
    Morphism cur_;
    bool done_ = false;
};

/// Materialized Hom set for small cases; same order as HomStream.
std::vector<Morphism> all_homs(const FgAbGroup& source, const FgAbGroup& target,
                               const Int& budget);

/// Canonical direct sum with its injections and projections.
struct DirectSumMaps {
    FgAbGroup sum;
    Morphism inj_a, inj_b;    // A -> S, B -> S
    Morphism proj_a, proj_b;  // S -> A, S -> B
};
DirectSumMaps direct_sum_maps(const FgAbGroup& a, const FgAbGroup& b);

}  // namespace abelkit
