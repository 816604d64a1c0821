#pragma once

#include <optional>
#include <vector>

#include "abelkit/fastscan.hpp"
#include "abelkit/morphism.hpp"

namespace abelkit {

/// Subgroup of an ambient group, carried as a canonical group together with an
/// injective structure map. For finite ambients the sorted element set is
/// materialized too; it is the canonical identity of the subobject.
struct Subobject {
    FgAbGroup ambient;
    FgAbGroup group;
    Morphism embedding;  // group -> ambient, injective
    std::vector<GroupElement> element_set;
    bool has_element_set = false;

    bool is_zero() const { return group.is_zero(); }
    bool is_full() const;
};

/// Subgroup generated by the given ambient coordinate vectors. Works for
/// infinite ambients; element sets are only materialized for finite ones.
Subobject subgroup_from_generator_vectors(const FgAbGroup& ambient,
                                          const std::vector<std::vector<Int>>& generators);
Subobject subgroup_from_elements(const FgAbGroup& ambient,
                                 const std::vector<GroupElement>& generators);
Subobject full_subobject(const FgAbGroup& g);
Subobject zero_subobject(const FgAbGroup& g);

/// Same subgroup of the same ambient. Finite ambients compare element sets;
/// infinite ones compare representative lattices.
bool subobjects_equal(const Subobject& a, const Subobject& b);

Subobject kernel(const Morphism& f);
Subobject image(const Morphism& f);

/// Quotient of the morphism's endpoint with its natural epimorphism.
struct QuotientObject {
    FgAbGroup group;
    Morphism projection;  // ambient -> group, surjective
};
QuotientObject cokernel(const Morphism& f);  // target / image
QuotientObject coimage(const Morphism& f);   // source / kernel

/// Induced map coimage -> image. Checked to be an isomorphism; composing
/// image.embedding * induced * coimage.projection reproduces f.
Morphism image_factorization(const Morphism& f);

/// Left inverse p with p * k = id when the (injective) k splits, else absent.
/// Decided structurally by solving the congruence system for p, so it is
/// exact for infinite groups too. Non-injective k never splits.
std::optional<Morphism> is_section(const Morphism& k);

/// Right inverse s with c * s = id when the (surjective) c splits, else absent.
std::optional<Morphism> is_retraction(const Morphism& c);

/// Every endomorphism of the ambient maps the subgroup into itself. Decided on
/// the generators of End(ambient): through elements when the ambient is finite,
/// and by solving for the restricted endomorphism otherwise. With paranoid set
/// and both paths available they are cross-checked.
bool is_fully_invariant(const Subobject& s, bool paranoid = true);

/// Every endomorphism h of the source descends along the epimorphism c, i.e.
/// some g with g * c = c * h exists. Decided by solving for g directly; with
/// paranoid set the kernel-invariance route is computed too and must agree.
bool is_fully_coinvariant(const Morphism& c, bool paranoid = true);

/// Existence of an epimorphism from -> onto (equivalently, onto is a quotient
/// of from). Structural: spare free rank plus aligned divisibility of the
/// largest invariant factors.
bool exists_epimorphism(const FgAbGroup& from, const FgAbGroup& onto);
/// Oracle that enumerates Hom(from, onto) and tests surjectivity.
bool exists_epimorphism_by_scan(const FgAbGroup& from, const FgAbGroup& onto, const Int& budget);

/// Existence of a monomorphism sub -> into.
bool exists_monomorphism(const FgAbGroup& sub, const FgAbGroup& into);
bool exists_monomorphism_by_scan(const FgAbGroup& sub, const FgAbGroup& into, const Int& budget);

/// Some alpha with h * k = k * alpha, i.e. h maps the image of the
/// monomorphism k into itself.
bool factors_through(const Morphism& h, const Morphism& k);

/// Some gamma with gamma * c = c * h, i.e. h descends along the epimorphism c.
bool descends_along(const Morphism& h, const Morphism& c);

/// Subgroup carried by an addition-closed set of element indexes of the
/// table's group.
Subobject subobject_from_bits(const ElementTable& table, const SmallBitset& bits);

/// All subgroups of a finite group of order <= kMaxTableOrder, deterministic
/// order (by size, then by element set).
std::vector<Subobject> subgroups_of(const FgAbGroup& g);

}  // namespace abelkit
