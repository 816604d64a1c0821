#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "abelkit/snf.hpp"

namespace abelkit {

/// Finitely generated abelian group in invariant-factor form:
///   Z^free_rank  (+)  Z/d_1 (+) ... (+) Z/d_k   with  2 <= d_1 | d_2 | ... | d_k.
/// The zero group is free_rank == 0 with no torsion. Coordinates are ordered
/// free generators first, then torsion generators in chain order.
struct FgAbGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    int coords() const { return free_rank + int(torsion.size()); }

    /// 0 for a free coordinate, d for a torsion coordinate.
    Int modulus(int i) const { return i < free_rank ? Int(0) : torsion[i - free_rank]; }

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    /// nullopt for infinite groups; the zero group has order 1.
    std::optional<Int> order() const;

    bool operator==(const FgAbGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator<(const FgAbGroup& o) const {
        if (free_rank != o.free_rank) return free_rank < o.free_rank;
        return std::lexicographical_compare(torsion.begin(), torsion.end(), o.torsion.begin(),
                                            o.torsion.end());
    }
};

/// Throws unless the invariant-factor invariants hold.
void canonical_check(const FgAbGroup& g);

/// Canonical form of Z^free_rank (+) (+)_i Z/factors[i]. Factors may be given in
/// any order and need not form a chain; factors equal to 1 are dropped.
FgAbGroup group_from_factors(int free_rank, const std::vector<Int>& factors);

/// Canonical form of the cokernel Z^num_generators / column-span(relations),
/// together with the projection and a lift of the canonical generators.
struct PresentedQuotient {
    FgAbGroup group;
    /// coords() x num_generators; row i gives canonical coordinate i of each
    /// original generator's image (torsion rows reduced into [0, d)).
    IntegerMatrix projection;
    /// num_generators x coords(); column t is a preimage of canonical generator t.
    IntegerMatrix lift;
};
PresentedQuotient group_from_presentation(int num_generators, const IntegerMatrix& relations);

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Number of isomorphism classes with order <= max_order, in deterministic order
/// (ascending order, then per-prime partition order). Includes the zero group.
std::vector<FgAbGroup> enumerate_groups(const Int& max_order);

/// Group expression grammar: `0`, `Z`, `Z/6`, `Z^2 + Z/4 + Z/6`, `(Z/2)^3` written
/// as `Z/2^3` (the exponent binds to the whole term). Whitespace is free.
FgAbGroup parse_group(const std::string& text);
std::string format_group(const FgAbGroup& g);

struct GroupElement {
    FgAbGroup group;
    std::vector<Int> coords;

    bool is_zero() const;
    bool operator==(const GroupElement& o) const {
        return group == o.group && coords == o.coords;
    }
    bool operator<(const GroupElement& o) const {
        return std::lexicographical_compare(coords.begin(), coords.end(), o.coords.begin(),
                                            o.coords.end());
    }
};

/// Element with the given coordinates, reduced into canonical range.
GroupElement make_element(const FgAbGroup& g, std::vector<Int> coords);
GroupElement zero_element(const FgAbGroup& g);
GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement negate(const GroupElement& x);

/// Restartable stream over all elements of a finite group, identity first,
/// in mixed-radix order (first torsion coordinate varies fastest).
/// Throws InfiniteGroupError when free_rank > 0.
class ElementRange {
public:
    explicit ElementRange(FgAbGroup g);

    class iterator {
    public:
        using value_type = GroupElement;
        iterator() = default;
        iterator(const FgAbGroup* g, bool end);
        GroupElement operator*() const;
        iterator& operator++();
        bool operator==(const iterator& other) const;

    private:
        const FgAbGroup* g_ = nullptr;
        std::vector<Int> cur_;
        bool end_ = true;
    };

    iterator begin() const { return iterator(&g_, false); }
    iterator end() const { return iterator(&g_, true); }

private:
    FgAbGroup g_;
};

inline ElementRange elements(const FgAbGroup& g) { return ElementRange(g); }

}  // namespace abelkit
