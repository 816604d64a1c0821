#include "abelkit/endring.hpp"

#include "abelkit/errors.hpp"
#include "abelkit/homcalc.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace abelkit {

namespace {

// Dense index tables stop here; bigger rings compose value tables on demand.
const int kDenseRingLimit = 2048;
// Cap on size() * |M| so value storage stays within desk-scale memory.
const long kValueStorageLimit = 1L << 24;

const unsigned kAxiomSeed = 1729;
const int kSampledTriples = 1000;
const int kExhaustiveAxiomLimit = 64;
const int kExhaustivePairLimit = 256;

const FgAbGroup& finite_ring_module(const FgAbGroup& m) {
    if (!m.is_finite()) throw InfiniteHomSetError("End(" + format_group(m) + ") is infinite");
    return m;
}

}  // namespace

std::size_t FiniteRing::ValueHash::operator()(const std::vector<std::uint16_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t x : v) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

FiniteRing::FiniteRing(const FgAbGroup& m, const Int& budget)
    : module_(m), name_("End(" + format_group(m) + ")"), table_(finite_ring_module(m)) {
    HomGroupDescription desc = hom_group(m, m);
    if (desc.size * table_.size() > kValueStorageLimit)
        throw BudgetExceededError("endomorphism ring of " + format_group(m) +
                                  " needs more value storage than the cap allows");

    HomScan scan(table_, table_, budget);
    vals_.reserve(std::size_t(to_int64(desc.size)));
    for (; !scan.done(); scan.advance()) {
        index_.emplace(scan.values(), int(vals_.size()));
        vals_.push_back(scan.values());
    }
    if (!vals_[0].empty() && vals_[0] != std::vector<std::uint16_t>(vals_[0].size(), 0))
        throw InternalCheckError("enumeration did not start at the zero endomorphism");

    one_ = index_of(identity_morphism(m));
    gens_.reserve(desc.generators.size());
    for (const Morphism& g : desc.generators) gens_.push_back(index_of(g));

    if (size() <= kDenseRingLimit) {
        add_table_.resize(std::size_t(size()) * size());
        mul_table_.resize(std::size_t(size()) * size());
        std::vector<std::uint16_t> tmp(table_.size());
        for (int a = 0; a < size(); ++a) {
            for (int b = 0; b < size(); ++b) {
                for (int x = 0; x < table_.size(); ++x)
                    tmp[x] = table_.add(vals_[a][x], vals_[b][x]);
                add_table_[std::size_t(a) * size() + b] = std::uint16_t(lookup(tmp));
                for (int x = 0; x < table_.size(); ++x) tmp[x] = vals_[a][vals_[b][x]];
                mul_table_[std::size_t(a) * size() + b] = std::uint16_t(lookup(tmp));
            }
        }
    }

    check_axioms();
}

int FiniteRing::lookup(const std::vector<std::uint16_t>& v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw InternalCheckError("a composed value table is not an endomorphism of the module");
    return it->second;
}

int FiniteRing::add(int a, int b) const {
    if (!add_table_.empty()) return add_table_[std::size_t(a) * size() + b];
    std::vector<std::uint16_t> tmp(table_.size());
    for (int x = 0; x < table_.size(); ++x) tmp[x] = table_.add(vals_[a][x], vals_[b][x]);
    return lookup(tmp);
}

int FiniteRing::mul_raw(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * size() + b];
    std::vector<std::uint16_t> tmp(table_.size());
    for (int x = 0; x < table_.size(); ++x) tmp[x] = vals_[a][vals_[b][x]];
    return lookup(tmp);
}

int FiniteRing::mul(int a, int b) const {
    return reversed_ ? mul_raw(b, a) : mul_raw(a, b);
}

int FiniteRing::neg(int a) const {
    std::vector<std::uint16_t> tmp(table_.size());
    for (int x = 0; x < table_.size(); ++x) tmp[x] = table_.negate(vals_[a][x]);
    return lookup(tmp);
}

Morphism FiniteRing::element(int idx) const {
    IntegerMatrix mat(module_.coords(), module_.coords());
    for (int j = 0; j < module_.coords(); ++j) {
        const GroupElement& img = table_.element(vals_[idx][table_.generator_index(j)]);
        for (int i = 0; i < module_.coords(); ++i) mat.at(i, j) = img.coords[i];
    }
    return make_morphism(module_, module_, mat);
}

int FiniteRing::index_of(const Morphism& f) const {
    if (!(f.source == module_) || !(f.target == module_))
        throw InvalidMorphismError("the ring only contains endomorphisms of " +
                                   format_group(module_));
    std::vector<std::uint16_t> v(table_.size());
    for (int x = 0; x < table_.size(); ++x)
        v[x] = std::uint16_t(table_.index_of(apply(f, table_.element(x))));
    return lookup(v);
}

bool FiniteRing::is_idempotent(int a) const { return mul_raw(a, a) == a; }

std::vector<int> FiniteRing::idempotents() const {
    std::vector<int> out;
    for (int a = 0; a < size(); ++a)
        if (is_idempotent(a)) out.push_back(a);
    return out;
}

bool FiniteRing::is_commutative() const {
    // The commutator is additive in each argument, so generators suffice.
    for (int a : gens_)
        for (int b : gens_)
            if (mul_raw(a, b) != mul_raw(b, a)) return false;
    return true;
}

bool FiniteRing::left_semicentral(int e) const {
    if (!is_idempotent(e)) throw InvalidMorphismError("semicentrality is asked of an idempotent");
    for (int b : gens_) {
        int be = mul(b, e);
        if (be != mul(e, be)) return false;
    }
    return true;
}

bool FiniteRing::right_semicentral(int e) const {
    if (!is_idempotent(e)) throw InvalidMorphismError("semicentrality is asked of an idempotent");
    for (int b : gens_) {
        int eb = mul(e, b);
        if (eb != mul(eb, e)) return false;
    }
    return true;
}

FiniteRing FiniteRing::opposite() const {
    FiniteRing op = *this;
    op.reversed_ = !reversed_;
    if (!op.name_.empty() && op.name_.size() >= 3 && op.name_.substr(op.name_.size() - 3) == "^op")
        op.name_.resize(op.name_.size() - 3);
    else
        op.name_ += "^op";
    return op;
}

void FiniteRing::check_axioms() const {
    const int n = size();
    for (int a = 0; a < n; ++a) {
        if (mul_raw(one_, a) != a || mul_raw(a, one_) != a)
            throw InternalCheckError("identity law fails in " + name_);
        if (add(zero(), a) != a || add(a, neg(a)) != zero())
            throw InternalCheckError("additive group law fails in " + name_);
    }
    auto probe = [&](int a, int b, int c) {
        if (mul_raw(a, mul_raw(b, c)) != mul_raw(mul_raw(a, b), c))
            throw InternalCheckError("associativity fails in " + name_);
        if (add(a, add(b, c)) != add(add(a, b), c) || add(a, b) != add(b, a))
            throw InternalCheckError("addition laws fail in " + name_);
        if (mul_raw(a, add(b, c)) != add(mul_raw(a, b), mul_raw(a, c)))
            throw InternalCheckError("left distributivity fails in " + name_);
        if (mul_raw(add(a, b), c) != add(mul_raw(a, c), mul_raw(b, c)))
            throw InternalCheckError("right distributivity fails in " + name_);
    };
    if (n <= kExhaustiveAxiomLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) probe(a, b, c);
    } else {
        std::mt19937_64 rng(kAxiomSeed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < kSampledTriples; ++i) probe(pick(rng), pick(rng), pick(rng));
    }
}

bool RightIdeal::contains(int idx) const {
    return std::binary_search(elements.begin(), elements.end(), idx);
}

RightIdeal right_annihilator(const FiniteRing& ring, int a) {
    const int n = ring.size();
    RightIdeal ideal;
    for (int s = 0; s < n; ++s)
        if (ring.mul(a, s) == ring.zero()) ideal.elements.push_back(s);

    if (int(ideal.elements.size()) == n) return ideal;  // the whole ring, trivially closed

    const auto& members = ideal.elements;
    auto check_member = [&](int idx, const char* law) {
        if (!ideal.contains(idx))
            throw InternalCheckError(std::string("right annihilator is not closed under ") + law);
    };
    if (int(members.size()) <= kExhaustivePairLimit) {
        for (int s : members)
            for (int t : members) check_member(ring.add(s, t), "addition");
    } else {
        std::mt19937_64 rng(kAxiomSeed);
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        for (int i = 0; i < kSampledTriples; ++i)
            check_member(ring.add(members[pick(rng)], members[pick(rng)]), "addition");
    }
    // s*t is additive in t, so right multiplication only needs the generators.
    for (int s : members)
        for (int g : ring.additive_generators()) check_member(ring.mul(s, g), "right multiplication");
    return ideal;
}

PropertyReport is_strongly_self_rickart_ring(const FiniteRing& ring) {
    PropertyReport r;
    r.property = "strongly-self-rickart-ring";
    r.subject = ring.name();
    r.holds = true;
    const int n = ring.size();
    for (int a = 0; a < n; ++a) {
        r.work += 1;
        RightIdeal ann = right_annihilator(ring, a);
        if (int(ann.elements.size()) == n) continue;  // ann(a) = 1*S, invariant

        int e = -1;
        for (int cand : ann.elements) {
            if (!ring.is_idempotent(cand)) continue;
            bool identity_on_ideal = true;
            for (int t : ann.elements) {
                if (ring.mul(cand, t) != t) {
                    identity_on_ideal = false;
                    break;
                }
            }
            if (identity_on_ideal) {
                e = cand;
                break;
            }
        }
        if (e < 0) {
            r.holds = false;
            r.witness = ring.element(a);
            r.witness_property = "annihilator-idempotent-generated";
            r.notes = "no idempotent generates the right annihilator of the witness";
            return r;
        }
        // Invariance under left multiplication; additive in the multiplier.
        for (int g : ring.additive_generators()) {
            for (int t : ann.elements) {
                if (!ann.contains(ring.mul(g, t))) {
                    r.holds = false;
                    r.witness = ring.element(a);
                    r.witness_property = "annihilator-left-invariant";
                    r.notes = "the right annihilator of the witness is not invariant under left multiplication";
                    return r;
                }
            }
        }
    }
    r.notes = "every right annihilator is idempotent generated and left invariant";
    return r;
}

TransferReport verify_endring_transfer(const FgAbGroup& m, const DeciderConfig& cfg) {
    TransferReport rep;
    rep.group = m;

    FiniteRing ring(m, cfg.hom_budget);
    rep.ring_size = ring.size();
    rep.module_strongly = is_strongly_rickart(m, m, cfg).holds;

    PropertyReport ring_report = is_strongly_self_rickart_ring(ring);
    rep.ring_strongly = ring_report.holds;

    rep.kernels_cyclic = true;
    ElementTable table(m);
    std::unordered_set<SmallBitset, SmallBitsetHash> seen;
    for (HomScan scan(table, table, cfg.hom_budget); !scan.done(); scan.advance()) {
        SmallBitset k = scan.kernel_bits();
        if (!seen.insert(k).second) continue;
        Subobject sub = subobject_from_bits(table, k);
        if (!exists_epimorphism(m, sub.group)) {
            rep.kernels_cyclic = false;
            break;
        }
    }

    rep.quasi_retractable = is_k_quasi_retractable(m, cfg).holds;
    rep.via_kernels = rep.ring_strongly && rep.kernels_cyclic;
    rep.via_retractability = rep.ring_strongly && rep.quasi_retractable;
    rep.agree = rep.module_strongly == rep.via_kernels && rep.via_kernels == rep.via_retractability;

    if (ring.is_commutative()) {
        rep.opposite_check = is_strongly_self_rickart_ring(ring.opposite()).holds;
        if (*rep.opposite_check != rep.ring_strongly)
            throw InternalCheckError("the opposite of a commutative ring returned a different verdict");
    }

    rep.notes = rep.agree ? "module scan, kernel route and retractability route agree"
                          : "the three routes disagree: implementation bug";
    return rep;
}

}  // namespace abelkit
