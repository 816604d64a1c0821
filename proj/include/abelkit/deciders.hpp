#pragma once

#include <unordered_map>
#include <vector>

#include "abelkit/homcalc.hpp"
#include "abelkit/report.hpp"

namespace abelkit {

struct DeciderConfig {
    Int hom_budget = default_hom_budget();
    /// Re-derive scan verdicts along an independent second path and throw
    /// InternalCheckError on any disagreement. Bounded, so it stays on by
    /// default; large scans skip the second pass on their own.
    bool paranoid = true;
};

/// Per-subgroup facts about one finite ambient group, keyed by element index
/// set and computed lazily. Kernel- and image-driven scans share one analyzer
/// so each distinct subgroup is examined once per ambient.
class SubgroupAnalyzer {
public:
    explicit SubgroupAnalyzer(const FgAbGroup& ambient, DeciderConfig cfg = {});

    struct Facts {
        Subobject sub;
        bool summand;          // the embedding admits a left inverse
        bool fully_invariant;  // element path over endomorphism generators
    };
    struct QuotientFacts {
        FgAbGroup group;
        Morphism projection;
        bool splits;  // the projection admits a right inverse
    };

    const FgAbGroup& ambient() const { return ambient_; }
    const ElementTable& table() const { return table_; }
    const std::vector<Morphism>& end_generators() const { return end_gens_; }

    SmallBitset bits_for(const std::vector<GroupElement>& elements) const;

    const Facts& facts(const SmallBitset& bits);
    /// Always checked against facts(bits).summand: a subgroup splits off
    /// exactly when its quotient projection does.
    const QuotientFacts& quotient_facts(const SmallBitset& bits);
    /// Every endomorphism descends along the quotient projection. Solver
    /// route, independent of the element path behind facts().fully_invariant.
    bool quotient_fully_coinvariant(const SmallBitset& bits);

private:
    FgAbGroup ambient_;
    DeciderConfig cfg_;
    ElementTable table_;
    std::vector<Morphism> end_gens_;
    std::vector<std::vector<std::uint16_t>> end_gen_values_;
    std::unordered_map<SmallBitset, Facts, SmallBitsetHash> facts_;
    std::unordered_map<SmallBitset, QuotientFacts, SmallBitsetHash> quotients_;
    std::unordered_map<SmallBitset, bool, SmallBitsetHash> coinvariant_;
};

/// Kernel of every morphism from `m` into `n` splits off `m`.
PropertyReport is_rickart(const FgAbGroup& m, const FgAbGroup& n, const DeciderConfig& cfg = {});
/// ... and is fully invariant in `m`.
PropertyReport is_strongly_rickart(const FgAbGroup& m, const FgAbGroup& n,
                                   const DeciderConfig& cfg = {});
/// Image of every morphism from `m` into `n` splits off `n`. The equivalent
/// cokernel formulation is computed alongside and must agree.
PropertyReport is_dual_rickart(const FgAbGroup& m, const FgAbGroup& n,
                               const DeciderConfig& cfg = {});
/// ... and is fully invariant in `n` (cokernel side: the natural projection
/// is fully coinvariant; the two formulations must agree).
PropertyReport is_dual_strongly_rickart(const FgAbGroup& m, const FgAbGroup& n,
                                        const DeciderConfig& cfg = {});

/// All idempotent endomorphisms of `m`, in enumeration order (the zero
/// morphism first; the identity appears wherever the odometer meets it).
std::vector<Morphism> idempotent_endomorphisms(const FgAbGroup& m, const DeciderConfig& cfg = {});

/// b * e = e * b * e for every endomorphism b (checked on generators; the
/// condition is additive in b). Multiplication is composition.
bool is_left_semicentral(const Morphism& e, const DeciderConfig& cfg = {});
/// e * b = e * b * e for every endomorphism b.
bool is_right_semicentral(const Morphism& e, const DeciderConfig& cfg = {});
/// e * b = b * e for every endomorphism b.
bool is_central_endomorphism(const Morphism& e, const DeciderConfig& cfg = {});

/// Every idempotent endomorphism of `m` is central. Paranoid mode also checks
/// the equivalent statements "every idempotent is left semicentral" and
/// "every idempotent is right semicentral" when the endomorphism count allows.
PropertyReport is_end_ring_abelian(const FgAbGroup& m, const DeciderConfig& cfg = {});

/// Image of every idempotent endomorphism is fully invariant. Infinite groups
/// are settled structurally, with an explicit witness when the answer is no.
PropertyReport is_weak_duo(const FgAbGroup& m, const DeciderConfig& cfg = {});

/// All direct summands of a finite group, each as a subobject, deterministic
/// order (by size, then by element set).
std::vector<Subobject> direct_summands(const FgAbGroup& m, const DeciderConfig& cfg = {});

/// Summands are closed under pairwise intersection (checked on the full
/// intersection closure of the summand lattice).
PropertyReport has_ssip(const FgAbGroup& m, const DeciderConfig& cfg = {});
/// Summands are closed under pairwise sum.
PropertyReport has_sssp(const FgAbGroup& m, const DeciderConfig& cfg = {});

/// Hom(m, Ker f) is nonzero for every endomorphism f with nonzero kernel.
PropertyReport is_k_quasi_retractable(const FgAbGroup& m, const DeciderConfig& cfg = {});
/// Hom(Coker f, m) is nonzero for every endomorphism f with nonzero cokernel.
PropertyReport is_c_quasi_coretractable(const FgAbGroup& m, const DeciderConfig& cfg = {});

}  // namespace abelkit
