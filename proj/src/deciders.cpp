#include "abelkit/deciders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "abelkit/errors.hpp"

namespace abelkit {

namespace {

// Largest Hom set the paranoid mode re-derives along the generic path after a
// table scan. Above this the table verdict stands alone (the generic path is
// still exercised by smaller instances).
const long kParanoidRescanLimit = 4096;

bool table_sized(const FgAbGroup& g) {
    auto n = g.order();
    return n.has_value() && *n <= kMaxTableOrder;
}

std::string pair_subject(const FgAbGroup& m, const FgAbGroup& n) {
    return format_group(m) + " -> " + format_group(n);
}

// Idempotent projection onto the first free coordinate. The standard witness
// against invariance-flavored properties of infinite groups: some other
// coordinate receives a nonzero map from it.
Morphism first_free_projection(const FgAbGroup& m) {
    IntegerMatrix e(m.coords(), m.coords());
    e.at(0, 0) = 1;
    return make_morphism(m, m, e);
}

}  // namespace

SubgroupAnalyzer::SubgroupAnalyzer(const FgAbGroup& ambient, DeciderConfig cfg)
    : ambient_(ambient), cfg_(std::move(cfg)), table_(ambient) {
    end_gens_ = hom_group(ambient_, ambient_).generators;
    end_gen_values_.reserve(end_gens_.size());
    for (const Morphism& h : end_gens_) {
        std::vector<std::uint16_t> vals(static_cast<std::size_t>(table_.size()));
        for (int i = 0; i < table_.size(); ++i)
            vals[static_cast<std::size_t>(i)] =
                static_cast<std::uint16_t>(table_.index_of(apply(h, table_.element(i))));
        end_gen_values_.push_back(std::move(vals));
    }
}

SmallBitset SubgroupAnalyzer::bits_for(const std::vector<GroupElement>& elements) const {
    SmallBitset b;
    for (const GroupElement& e : elements) b.set(table_.index_of(e));
    return b;
}

const SubgroupAnalyzer::Facts& SubgroupAnalyzer::facts(const SmallBitset& bits) {
    auto it = facts_.find(bits);
    if (it != facts_.end()) return it->second;

    Facts fx{subobject_from_bits(table_, bits), false, true};
    fx.summand = is_section(fx.sub.embedding).has_value();
    for (const auto& vals : end_gen_values_) {
        for (int x : bits.bits())
            if (!bits.test(vals[static_cast<std::size_t>(x)])) {
                fx.fully_invariant = false;
                break;
            }
        if (!fx.fully_invariant) break;
    }
    if (cfg_.paranoid && fx.fully_invariant != is_fully_invariant(fx.sub, true))
        throw InternalCheckError("full invariance paths disagree on a cached subgroup");
    return facts_.emplace(bits, std::move(fx)).first->second;
}

const SubgroupAnalyzer::QuotientFacts& SubgroupAnalyzer::quotient_facts(const SmallBitset& bits) {
    auto it = quotients_.find(bits);
    if (it != quotients_.end()) return it->second;

    bool summand = facts(bits).summand;
    QuotientObject q = cokernel(facts(bits).sub.embedding);
    QuotientFacts qf{q.group, q.projection, is_retraction(q.projection).has_value()};
    if (qf.splits != summand)
        throw InternalCheckError("subgroup splits but its quotient projection does not, or conversely");
    return quotients_.emplace(bits, std::move(qf)).first->second;
}

bool SubgroupAnalyzer::quotient_fully_coinvariant(const SmallBitset& bits) {
    auto it = coinvariant_.find(bits);
    if (it != coinvariant_.end()) return it->second;

    const QuotientFacts& qf = quotient_facts(bits);
    bool ok = true;
    for (const Morphism& h : end_gens_)
        if (!descends_along(h, qf.projection)) {
            ok = false;
            break;
        }
    return coinvariant_.emplace(bits, ok).first->second;
}

namespace {

struct ScanOutcome {
    bool holds = true;
    std::optional<Morphism> witness;
    std::string witness_property;
    Int work = 0;
    Int hom_size = 0;
};

ScanOutcome scan_table(const FgAbGroup& m, const FgAbGroup& n, bool dual, bool strong,
                       const DeciderConfig& cfg) {
    ElementTable src(m), tgt(n);
    SubgroupAnalyzer analyzer(dual ? n : m, cfg);

    ScanOutcome out;
    HomScan scan(src, tgt, cfg.hom_budget);
    out.hom_size = scan.size();
    for (; !scan.done(); scan.advance()) {
        ++out.work;
        SmallBitset bits = dual ? scan.image_bits() : scan.kernel_bits();
        const SubgroupAnalyzer::Facts& fx = analyzer.facts(bits);
        if (!fx.summand) {
            out.holds = false;
            out.witness = scan.current_morphism();
            out.witness_property = dual ? "image-splits" : "kernel-splits";
            return out;
        }
        if (strong && !fx.fully_invariant) {
            out.holds = false;
            out.witness = scan.current_morphism();
            out.witness_property = dual ? "image-fully-invariant" : "kernel-fully-invariant";
            return out;
        }
        if (dual) {
            analyzer.quotient_facts(bits);  // asserts split agreement with the subgroup side
            if (strong && analyzer.quotient_fully_coinvariant(bits) != fx.fully_invariant)
                throw InternalCheckError("image invariance and cokernel coinvariance disagree");
        }
    }
    return out;
}

ScanOutcome scan_generic(const FgAbGroup& m, const FgAbGroup& n, bool dual, bool strong,
                         const DeciderConfig& cfg) {
    struct SubFacts {
        bool summand;
        bool fully_invariant;
    };
    auto examine = [&](const Subobject& s) -> SubFacts {
        SubFacts g{is_section(s.embedding).has_value(), true};
        if (strong) g.fully_invariant = is_fully_invariant(s, cfg.paranoid);
        if (dual) {
            QuotientObject q = cokernel(s.embedding);
            if (is_retraction(q.projection).has_value() != g.summand)
                throw InternalCheckError(
                    "subgroup splits but its quotient projection does not, or conversely");
            if (strong && is_fully_coinvariant(q.projection, cfg.paranoid) != g.fully_invariant)
                throw InternalCheckError("image invariance and cokernel coinvariance disagree");
        }
        return g;
    };

    std::map<std::vector<GroupElement>, SubFacts> cache;
    ScanOutcome out;
    HomStream stream(m, n, cfg.hom_budget);
    out.hom_size = stream.size();
    for (; !stream.done(); stream.advance()) {
        ++out.work;
        const Morphism& f = stream.current();
        Subobject s = dual ? image(f) : kernel(f);

        SubFacts fx{false, false};
        if (s.has_element_set) {
            auto it = cache.find(s.element_set);
            if (it == cache.end()) {
                std::vector<GroupElement> key = s.element_set;
                it = cache.emplace(std::move(key), examine(s)).first;
            }
            fx = it->second;
        } else {
            fx = examine(s);
        }

        if (!fx.summand) {
            out.holds = false;
            out.witness = f;
            out.witness_property = dual ? "image-splits" : "kernel-splits";
            return out;
        }
        if (strong && !fx.fully_invariant) {
            out.holds = false;
            out.witness = f;
            out.witness_property = dual ? "image-fully-invariant" : "kernel-fully-invariant";
            return out;
        }
    }
    return out;
}

ScanOutcome run_scan(const FgAbGroup& m, const FgAbGroup& n, bool dual, bool strong,
                     const DeciderConfig& cfg) {
    if (!table_sized(m) || !table_sized(n)) return scan_generic(m, n, dual, strong, cfg);

    ScanOutcome fast = scan_table(m, n, dual, strong, cfg);
    if (cfg.paranoid && fast.hom_size <= kParanoidRescanLimit) {
        ScanOutcome slow = scan_generic(m, n, dual, strong, cfg);
        bool same_witness = fast.witness.has_value() == slow.witness.has_value() &&
                            (!fast.witness || *fast.witness == *slow.witness);
        if (fast.holds != slow.holds || !same_witness || fast.work != slow.work)
            throw InternalCheckError("table scan and generic scan disagree");
    }
    return fast;
}

PropertyReport scan_report(const char* property, const FgAbGroup& m, const FgAbGroup& n,
                           bool dual, bool strong, const DeciderConfig& cfg) {
    PropertyReport r;
    r.property = property;
    r.subject = pair_subject(m, n);
    ScanOutcome out = run_scan(m, n, dual, strong, cfg);
    r.holds = out.holds;
    r.witness = std::move(out.witness);
    r.witness_property = std::move(out.witness_property);
    r.work = out.work;
    return r;
}

}  // namespace

PropertyReport is_rickart(const FgAbGroup& m, const FgAbGroup& n, const DeciderConfig& cfg) {
    return scan_report("rickart", m, n, false, false, cfg);
}

PropertyReport is_strongly_rickart(const FgAbGroup& m, const FgAbGroup& n,
                                   const DeciderConfig& cfg) {
    return scan_report("strongly-rickart", m, n, false, true, cfg);
}

PropertyReport is_dual_rickart(const FgAbGroup& m, const FgAbGroup& n, const DeciderConfig& cfg) {
    return scan_report("dual-rickart", m, n, true, false, cfg);
}

PropertyReport is_dual_strongly_rickart(const FgAbGroup& m, const FgAbGroup& n,
                                        const DeciderConfig& cfg) {
    return scan_report("dual-strongly-rickart", m, n, true, true, cfg);
}

std::vector<Morphism> idempotent_endomorphisms(const FgAbGroup& m, const DeciderConfig& cfg) {
    std::vector<Morphism> out;
    if (table_sized(m)) {
        ElementTable t(m);
        HomScan scan(t, t, cfg.hom_budget);
        Int total = scan.size();
        for (; !scan.done(); scan.advance())
            if (scan.is_idempotent()) out.push_back(scan.current_morphism());

        if (cfg.paranoid && total <= kParanoidRescanLimit) {
            std::vector<Morphism> slow;
            for (HomStream st(m, m, cfg.hom_budget); !st.done(); st.advance())
                if (compose(st.current(), st.current()) == st.current())
                    slow.push_back(st.current());
            if (!(slow == out)) throw InternalCheckError("idempotent enumerations disagree");
        }
        return out;
    }
    for (HomStream st(m, m, cfg.hom_budget); !st.done(); st.advance())
        if (compose(st.current(), st.current()) == st.current()) out.push_back(st.current());
    return out;
}

namespace {

const Morphism& require_idempotent(const Morphism& e) {
    if (!(e.source == e.target))
        throw InvalidMorphismError("semicentrality is asked of an endomorphism");
    if (!(compose(e, e) == e))
        throw InvalidMorphismError("semicentrality is asked of an idempotent");
    return e;
}

}  // namespace

bool is_left_semicentral(const Morphism& e, const DeciderConfig& cfg) {
    require_idempotent(e);
    (void)cfg;
    // b * e = e * b * e is additive in b, so the generators of End decide it.
    for (const Morphism& b : hom_group(e.source, e.source).generators)
        if (!(compose(b, e) == compose(e, compose(b, e)))) return false;
    return true;
}

bool is_right_semicentral(const Morphism& e, const DeciderConfig& cfg) {
    require_idempotent(e);
    (void)cfg;
    for (const Morphism& b : hom_group(e.source, e.source).generators)
        if (!(compose(e, b) == compose(e, compose(b, e)))) return false;
    return true;
}

bool is_central_endomorphism(const Morphism& e, const DeciderConfig& cfg) {
    if (!(e.source == e.target))
        throw InvalidMorphismError("centrality is asked of an endomorphism");
    (void)cfg;
    for (const Morphism& b : hom_group(e.source, e.source).generators)
        if (!(compose(e, b) == compose(b, e))) return false;
    return true;
}

PropertyReport is_end_ring_abelian(const FgAbGroup& m, const DeciderConfig& cfg) {
    PropertyReport r;
    r.property = "end-ring-abelian";
    r.subject = format_group(m);

    if (!m.is_finite()) {
        if (m.free_rank == 1 && m.torsion.empty()) {
            r.holds = true;
            r.notes = "endomorphisms are the integer multiples of the identity; "
                      "the only idempotents are 0 and 1";
            return r;
        }
        // Another coordinate receives a nonzero map from the first free one,
        // so the projection onto it cannot commute with everything.
        Morphism e = first_free_projection(m);
        if (is_central_endomorphism(e, cfg))
            throw InternalCheckError("structural non-central idempotent is central after all");
        r.holds = false;
        r.witness = std::move(e);
        r.witness_property = "central";
        r.notes = "settled structurally from the free rank and torsion shape";
        return r;
    }

    std::vector<Morphism> gens = hom_group(m, m).generators;
    if (table_sized(m)) {
        ElementTable t(m);
        // Generator value tables make the centrality test a pure index chase.
        std::vector<std::vector<std::uint16_t>> gen_vals;
        gen_vals.reserve(gens.size());
        for (const Morphism& h : gens) {
            std::vector<std::uint16_t> vals(static_cast<std::size_t>(t.size()));
            for (int i = 0; i < t.size(); ++i)
                vals[static_cast<std::size_t>(i)] =
                    static_cast<std::uint16_t>(t.index_of(apply(h, t.element(i))));
            gen_vals.push_back(std::move(vals));
        }

        HomScan scan(t, t, cfg.hom_budget);
        Int total = scan.size();
        for (; !scan.done(); scan.advance()) {
            ++r.work;
            if (!scan.is_idempotent()) continue;
            const std::vector<std::uint16_t>& ev = scan.values();
            bool central = true;
            for (const auto& bv : gen_vals) {
                for (int x = 0; x < t.size() && central; ++x)
                    central = ev[bv[static_cast<std::size_t>(x)]] ==
                              bv[ev[static_cast<std::size_t>(x)]];
                if (!central) break;
            }
            if (!central) {
                r.holds = false;
                r.witness = scan.current_morphism();
                r.witness_property = "central";
                if (is_central_endomorphism(*r.witness, cfg))
                    throw InternalCheckError("table centrality and composition centrality disagree");
                return r;
            }
        }

        if (cfg.paranoid && total <= kParanoidRescanLimit) {
            // The equivalent one-sided forms must quantify the same way.
            bool all_central = true, all_left = true, all_right = true;
            for (const Morphism& e : idempotent_endomorphisms(m, cfg)) {
                all_central = all_central && is_central_endomorphism(e, cfg);
                all_left = all_left && is_left_semicentral(e, cfg);
                all_right = all_right && is_right_semicentral(e, cfg);
            }
            if (!all_central || all_central != all_left || all_left != all_right)
                throw InternalCheckError("one-sided and central idempotent tests disagree");
        }
        r.holds = true;
        return r;
    }

    for (HomStream st(m, m, cfg.hom_budget); !st.done(); st.advance()) {
        ++r.work;
        const Morphism& e = st.current();
        if (!(compose(e, e) == e)) continue;
        if (!is_central_endomorphism(e, cfg)) {
            r.holds = false;
            r.witness = e;
            r.witness_property = "central";
            return r;
        }
    }
    r.holds = true;
    return r;
}

PropertyReport is_weak_duo(const FgAbGroup& m, const DeciderConfig& cfg) {
    PropertyReport r;
    r.property = "weak-duo";
    r.subject = format_group(m);

    if (!m.is_finite()) {
        if (m.free_rank == 1 && m.torsion.empty()) {
            r.holds = true;
            r.notes = "the only summands are 0 and the whole group";
            return r;
        }
        // The image of the first-coordinate projection maps onto some other
        // coordinate, so it is a non-invariant summand.
        Morphism e = first_free_projection(m);
        if (!(compose(e, e) == e) || is_fully_invariant(image(e), cfg.paranoid))
            throw InternalCheckError("structural weak duo witness does not work");
        r.holds = false;
        r.witness = std::move(e);
        r.witness_property = "image-fully-invariant";
        r.notes = "settled structurally from the free rank and torsion shape";
        return r;
    }

    if (table_sized(m)) {
        SubgroupAnalyzer analyzer(m, cfg);
        HomScan scan(analyzer.table(), analyzer.table(), cfg.hom_budget);
        Int total = scan.size();
        r.holds = true;
        for (; !scan.done(); scan.advance()) {
            ++r.work;
            if (!scan.is_idempotent()) continue;
            if (!analyzer.facts(scan.image_bits()).fully_invariant) {
                r.holds = false;
                r.witness = scan.current_morphism();
                r.witness_property = "image-fully-invariant";
                break;
            }
        }

        if (cfg.paranoid && total <= kParanoidRescanLimit) {
            std::optional<Morphism> slow_witness;
            for (HomStream st(m, m, cfg.hom_budget); !st.done(); st.advance()) {
                const Morphism& e = st.current();
                if (!(compose(e, e) == e)) continue;
                if (!is_fully_invariant(image(e), cfg.paranoid)) {
                    slow_witness = e;
                    break;
                }
            }
            bool same = slow_witness.has_value() == r.witness.has_value() &&
                        (!slow_witness || *slow_witness == *r.witness);
            if (slow_witness.has_value() == r.holds || !same)
                throw InternalCheckError("weak duo paths disagree");
        }
        return r;
    }

    for (HomStream st(m, m, cfg.hom_budget); !st.done(); st.advance()) {
        ++r.work;
        const Morphism& e = st.current();
        if (!(compose(e, e) == e)) continue;
        if (!is_fully_invariant(image(e), cfg.paranoid)) {
            r.holds = false;
            r.witness = e;
            r.witness_property = "image-fully-invariant";
            return r;
        }
    }
    r.holds = true;
    return r;
}

namespace {

// Deduplicated element index sets of all idempotent images.
std::set<SmallBitset> summand_bits(SubgroupAnalyzer& analyzer, const DeciderConfig& cfg) {
    std::set<SmallBitset> seen;
    HomScan scan(analyzer.table(), analyzer.table(), cfg.hom_budget);
    for (; !scan.done(); scan.advance())
        if (scan.is_idempotent()) seen.insert(scan.image_bits());

    if (cfg.paranoid) {
        // A subgroup is a summand exactly when its embedding splits; the
        // idempotent sweep must find precisely those.
        for (const Subobject& s : subgroups_of(analyzer.ambient())) {
            bool listed = seen.count(analyzer.bits_for(s.element_set)) > 0;
            if (listed != is_section(s.embedding).has_value())
                throw InternalCheckError("idempotent images and splitting subgroups disagree");
        }
    }
    return seen;
}

}  // namespace

std::vector<Subobject> direct_summands(const FgAbGroup& m, const DeciderConfig& cfg) {
    SubgroupAnalyzer analyzer(m, cfg);
    std::set<SmallBitset> seen = summand_bits(analyzer, cfg);

    std::vector<SmallBitset> ordered(seen.begin(), seen.end());
    std::sort(ordered.begin(), ordered.end(), [](const SmallBitset& a, const SmallBitset& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });

    std::vector<Subobject> out;
    out.reserve(ordered.size());
    for (const SmallBitset& bits : ordered) out.push_back(analyzer.facts(bits).sub);
    return out;
}

namespace {

PropertyReport closure_scan(const char* property, const FgAbGroup& m, bool meet,
                            const DeciderConfig& cfg) {
    PropertyReport r;
    r.property = property;
    r.subject = format_group(m);

    SubgroupAnalyzer analyzer(m, cfg);
    std::set<SmallBitset> seen = summand_bits(analyzer, cfg);
    std::vector<SmallBitset> items(seen.begin(), seen.end());

    // Close under the lattice operation, testing each new subgroup as it
    // appears. In a failing group the walk stops at the first offender.
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            SmallBitset x = meet ? (items[i] & items[j])
                                 : analyzer.table().span((items[i] | items[j]).bits());
            if (!seen.insert(x).second) continue;
            ++r.work;
            const SubgroupAnalyzer::Facts& fx = analyzer.facts(x);
            if (!fx.summand) {
                r.holds = false;
                r.witness = fx.sub.embedding;
                r.witness_property = "section";
                r.notes = meet ? "meet of two summands fails to split"
                               : "sum of two summands fails to split";
                return r;
            }
            items.push_back(x);
        }
    r.holds = true;
    return r;
}

}  // namespace

PropertyReport has_ssip(const FgAbGroup& m, const DeciderConfig& cfg) {
    return closure_scan("ssip", m, true, cfg);
}

PropertyReport has_sssp(const FgAbGroup& m, const DeciderConfig& cfg) {
    return closure_scan("sssp", m, false, cfg);
}

namespace {

PropertyReport quasi_scan(const char* property, const FgAbGroup& m, bool kernel_side,
                          const DeciderConfig& cfg) {
    PropertyReport r;
    r.property = property;
    r.subject = format_group(m);

    if (table_sized(m)) {
        SubgroupAnalyzer analyzer(m, cfg);
        HomScan scan(analyzer.table(), analyzer.table(), cfg.hom_budget);
        for (; !scan.done(); scan.advance()) {
            ++r.work;
            bool ok;
            if (kernel_side) {
                SmallBitset k = scan.kernel_bits();
                ok = k.count() == 1 || !hom_group(m, analyzer.facts(k).sub.group).is_zero();
            } else {
                SmallBitset im = scan.image_bits();
                ok = im.count() == analyzer.table().size() ||
                     !hom_group(analyzer.quotient_facts(im).group, m).is_zero();
            }
            if (!ok) {
                r.holds = false;
                r.witness = scan.current_morphism();
                r.witness_property = kernel_side ? "kernel-hom-nonzero" : "cokernel-hom-nonzero";
                return r;
            }
        }
        r.holds = true;
        return r;
    }

    for (HomStream st(m, m, cfg.hom_budget); !st.done(); st.advance()) {
        ++r.work;
        const Morphism& f = st.current();
        bool ok;
        if (kernel_side) {
            Subobject k = kernel(f);
            ok = k.is_zero() || !hom_group(m, k.group).is_zero();
        } else {
            QuotientObject c = cokernel(f);
            ok = c.group.is_zero() || !hom_group(c.group, m).is_zero();
        }
        if (!ok) {
            r.holds = false;
            r.witness = f;
            r.witness_property = kernel_side ? "kernel-hom-nonzero" : "cokernel-hom-nonzero";
            return r;
        }
    }
    r.holds = true;
    return r;
}

}  // namespace

PropertyReport is_k_quasi_retractable(const FgAbGroup& m, const DeciderConfig& cfg) {
    return quasi_scan("k-quasi-retractable", m, true, cfg);
}

PropertyReport is_c_quasi_coretractable(const FgAbGroup& m, const DeciderConfig& cfg) {
    return quasi_scan("c-quasi-coretractable", m, false, cfg);
}

}  // namespace abelkit
