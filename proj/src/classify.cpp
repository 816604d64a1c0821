#include "abelkit/classify.hpp"

#include <utility>

#include "abelkit/errors.hpp"

namespace abelkit {

Classification classify(const FgAbGroup& g) {
    Classification c;
    c.group = g;

    if (g.is_zero()) {
        c.reason = "degenerate-zero";
        c.strongly_self_rickart = true;
        c.dual_strongly_self_rickart = true;
        c.symbolic_notes.push_back("the endomorphism ring is trivial, so both scans are vacuous");
        return c;
    }
    if (g.free_rank > 0 && !g.torsion.empty()) {
        c.reason = "mixed-free-and-torsion";
        c.symbolic_notes.push_back(
            "a nonzero map from the free part into the torsion part has a kernel "
            "that does not split, and a torsion image that does not either");
        return c;
    }
    if (g.free_rank == 1) {
        c.reason = "free-rank-one";
        c.strongly_self_rickart = true;
        c.symbolic_notes.push_back("kernels of integer multiplications are 0 or everything");
        c.symbolic_notes.push_back(
            "images n*Z with n >= 2 never split, so the dual side fails; the divisible "
            "counterpart of this group is the rationals Q, symbolic only");
        return c;
    }
    if (g.free_rank >= 2) {
        c.reason = "free-rank-at-least-two";
        c.symbolic_notes.push_back(
            "a coordinate hyperplane is the kernel of a projection but is not invariant "
            "under coordinate swaps");
        return c;
    }

    if (g.torsion.size() == 1) {
        if (is_squarefree(g.torsion[0])) {
            c.reason = "squarefree-cyclic";
            c.strongly_self_rickart = true;
            c.dual_strongly_self_rickart = true;
            c.symbolic_notes.push_back("splits as one simple cyclic factor per prime divisor");
        } else {
            c.reason = "non-squarefree-cyclic";
            c.symbolic_notes.push_back(
                "a repeated prime p gives the kernel p^(k-1)*G of a power map, which is "
                "essential in its primary part and cannot split");
        }
        return c;
    }

    c.reason = "repeated-prime-factor";
    c.symbolic_notes.push_back(
        "two invariant factors share a prime, so a coordinate kernel is movable by an "
        "endomorphism and fails invariance");
    return c;
}

std::vector<Discrepancy> classification_discrepancies(const FgAbGroup& g,
                                                      const DeciderConfig& cfg) {
    Classification predicted = classify(g);
    std::vector<Discrepancy> out;

    bool strongly = is_strongly_rickart(g, g, cfg).holds;
    if (strongly != predicted.strongly_self_rickart)
        out.push_back({g, "strongly-rickart", predicted.strongly_self_rickart, strongly});

    bool dual = is_dual_strongly_rickart(g, g, cfg).holds;
    if (dual != predicted.dual_strongly_self_rickart)
        out.push_back({g, "dual-strongly-rickart", predicted.dual_strongly_self_rickart, dual});

    return out;
}

std::vector<Discrepancy> predict_vs_bruteforce(Int max_order, const DeciderConfig& cfg) {
    std::vector<Discrepancy> out;
    for (const FgAbGroup& g : enumerate_groups(max_order)) {
        try {
            for (Discrepancy& d : classification_discrepancies(g, cfg))
                out.push_back(std::move(d));
        } catch (const BudgetExceededError& e) {
            throw BudgetExceededError(format_group(g) + ": " + e.what());
        }
    }
    return out;
}

TorsionFamilyClassification classify_torsion_family(const std::vector<TorsionFactor>& factors) {
    TorsionFamilyClassification c;
    c.factors = factors;

    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!is_prime(factors[i].prime))
            throw ParseError("torsion family entry " + factors[i].prime.str() + " is not prime");
        for (std::size_t j = 0; j < i; ++j)
            if (factors[i].prime == factors[j].prime)
                throw DuplicatePrimeError("prime " + factors[i].prime.str() +
                                          " appears twice; the factors must be over distinct primes");
    }

    if (factors.empty()) {
        c.reason = "degenerate-zero";
        c.strongly_self_rickart = true;
        c.dual_strongly_self_rickart = true;
        c.symbolic_notes.push_back("the empty family is the zero group");
        return c;
    }

    bool all_simple = true, all_pruefer = true;
    for (const TorsionFactor& f : factors) {
        all_simple = all_simple && f.kind == TorsionKind::Simple;
        all_pruefer = all_pruefer && f.kind == TorsionKind::Pruefer;
    }

    c.strongly_self_rickart = all_simple;
    c.dual_strongly_self_rickart = all_simple || all_pruefer;
    if (all_simple) {
        c.reason = "distinct-prime-simple-family";
        c.symbolic_notes.push_back("one simple cyclic factor per prime, so every kernel "
                                   "and image is a fully invariant summand");
    } else if (all_pruefer) {
        c.reason = "homogeneous-divisible-family";
        c.symbolic_notes.push_back(
            "Pruefer factors p^infinity are divisible, hence every image splits and is "
            "invariant; their proper kernels are essential, so the strong side fails. "
            "Symbolic only: no finitely generated value backs p^infinity");
    } else {
        c.reason = "mixed-kind-family";
        c.symbolic_notes.push_back(
            "simple and Pruefer factors together break homogeneity, so neither side "
            "survives. Symbolic only: no finitely generated value backs p^infinity");
    }
    return c;
}

TorsionFamilyClassification parse_torsion_family(const std::string& text) {
    std::vector<std::string> entries;
    if (!text.empty()) {
        std::size_t pos = 0;
        for (;;) {
            std::size_t comma = text.find(',', pos);
            entries.push_back(text.substr(pos, comma == std::string::npos ? comma : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }

    std::vector<TorsionFactor> factors;
    for (const std::string& entry : entries) {
        std::size_t colon = entry.find(':');
        if (colon == std::string::npos)
            throw ParseError("torsion family entry '" + entry + "' lacks a ':kind' part");
        std::string num = entry.substr(0, colon);
        std::string kind = entry.substr(colon + 1);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("torsion family entry '" + entry + "' has a malformed prime");

        TorsionFactor f;
        f.prime = Int(num);
        if (kind == "simple")
            f.kind = TorsionKind::Simple;
        else if (kind == "pruefer")
            f.kind = TorsionKind::Pruefer;
        else
            throw ParseError("torsion kind '" + kind + "' is neither 'simple' nor 'pruefer'");
        factors.push_back(std::move(f));
    }
    return classify_torsion_family(factors);
}

}  // namespace abelkit
