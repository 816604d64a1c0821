#pragma once

#include "abelkit/deciders.hpp"
#include "abelkit/fastscan.hpp"
#include "abelkit/group.hpp"
#include "abelkit/morphism.hpp"
#include "abelkit/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace abelkit {

/// End(M) of a finite group, materialized extensionally: element i is a full
/// value table over M, listed in enumeration order (the zero endomorphism is
/// index 0). Addition and multiplication act on indexes. Small rings carry
/// dense index tables; larger ones compose value tables on demand, so rings
/// up to the enumeration budget stay usable.
///
/// Construction self-checks the ring axioms: identity laws for every element,
/// associativity and distributivity exhaustively for rings with at most 64
/// elements and on 1000 seeded random triples above that.
class FiniteRing {
public:
    explicit FiniteRing(const FgAbGroup& m, const Int& budget = default_hom_budget());

    const FgAbGroup& module() const { return module_; }
    const std::string& name() const { return name_; }
    int size() const { return int(vals_.size()); }

    int zero() const { return 0; }
    int one() const { return one_; }

    int add(int a, int b) const;
    int mul(int a, int b) const;
    int neg(int a) const;

    /// Materializes element idx as a morphism M -> M.
    Morphism element(int idx) const;
    /// Index of an endomorphism of M; throws if f lives elsewhere.
    int index_of(const Morphism& f) const;

    /// Indexes of the additive generators of the underlying abelian group of
    /// the ring; every element is a sum of multiples of these.
    const std::vector<int>& additive_generators() const { return gens_; }

    std::vector<int> idempotents() const;
    bool is_idempotent(int a) const;
    bool is_commutative() const;

    /// b*e == e*b*e for every b (additive in b, so generators are checked).
    bool left_semicentral(int e) const;
    /// e*b == e*b*e for every b.
    bool right_semicentral(int e) const;

    /// Same elements and addition, multiplication reversed.
    FiniteRing opposite() const;

private:
    struct ValueHash {
        std::size_t operator()(const std::vector<std::uint16_t>& v) const;
    };

    int mul_raw(int a, int b) const;
    int lookup(const std::vector<std::uint16_t>& v) const;
    void check_axioms() const;

    FgAbGroup module_;
    std::string name_;
    ElementTable table_;
    std::vector<std::vector<std::uint16_t>> vals_;
    std::unordered_map<std::vector<std::uint16_t>, int, ValueHash> index_;
    std::vector<int> gens_;
    int one_ = 0;
    bool reversed_ = false;
    // Dense index tables, built only when size() <= kDenseRingLimit.
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
};

/// A right ideal given by the sorted indexes of its elements. Instances
/// produced by right_annihilator are verified closed before being returned.
struct RightIdeal {
    std::vector<int> elements;

    bool contains(int idx) const;
};

/// {s : a*s == 0}. The result is checked to be closed under addition and
/// under right multiplication (on the ring's additive generators, which
/// suffices since s |-> s*t is additive in t).
RightIdeal right_annihilator(const FiniteRing& ring, int a);

/// Every right annihilator is generated by an idempotent (ann(a) = e*ring
/// with e*e == e) and is in addition invariant under all left
/// multiplications. The witness on failure is the offending element a;
/// witness_property says which half broke.
PropertyReport is_strongly_self_rickart_ring(const FiniteRing& ring);

/// One group, three routes to the same verdict: the module-side strong
/// self-Rickart scan, the ring-side annihilator condition combined with
/// every endomorphism kernel being an image of M, and the ring-side
/// condition combined with k-quasi-retractability. The routes are provably
/// equivalent, so `agree` false means an implementation bug.
struct TransferReport {
    FgAbGroup group;
    Int ring_size = 0;
    bool module_strongly = false;   // module-side scan
    bool ring_strongly = false;     // annihilator condition in End(M)
    bool kernels_cyclic = false;    // every Ker f admits an epimorphism from M
    bool quasi_retractable = false; // k-quasi-retractable
    bool via_kernels = false;       // ring_strongly && kernels_cyclic
    bool via_retractability = false;// ring_strongly && quasi_retractable
    bool agree = false;
    // Verdict of the annihilator condition on the opposite ring; only run
    // when the ring is commutative (where it must match ring_strongly).
    std::optional<bool> opposite_check;
    std::string notes;
};

TransferReport verify_endring_transfer(const FgAbGroup& m, const DeciderConfig& cfg = {});

}  // namespace abelkit
