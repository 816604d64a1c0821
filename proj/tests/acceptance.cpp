// Gate checks for the finished library. Each criterion prints exactly one
// PASS/FAIL line on stdout; failure details go to stderr. Run one criterion
// with --criterion N or all eight with no arguments. Exit 0 iff everything
// requested passed.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "abelkit/classify.hpp"
#include "abelkit/deciders.hpp"
#include "abelkit/harness.hpp"
#include "abelkit/homcalc.hpp"

using namespace abelkit;

namespace {

struct Verdict {
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
};

void report_suite(Verdict& v, const SuiteResult& r) {
    if (r.instances == 0) {
        v.pass = false;
        v.details.push_back(r.suite + ": ran zero instances (vacuous)");
    }
    if (!r.passed()) {
        v.pass = false;
        for (const SuiteFailure& f : r.failures)
            v.details.push_back(r.suite + ": " + f.instance + ": " + f.detail +
                                " (replay: " + f.replay + ")");
    }
}

SuiteResult run_capped(const std::string& id, long max_order) {
    HarnessConfig cfg;
    cfg.max_order = max_order;
    return run_suite(id, cfg);
}

long elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() -
                                                            start)
        .count();
}

// 1: the closed-form classifier agrees with exhaustive scans for every
// isomorphism class of order <= 32, and the strongly self-Rickart groups in
// that range are exactly the squarefree cyclic ones. Budgeted at ten minutes.
Verdict criterion1() {
    Verdict v{true, "", {}};
    auto start = std::chrono::steady_clock::now();
    SuiteResult r = run_capped("classification-audit", 32);
    report_suite(v, r);

    std::vector<long> strongly;
    for (const FgAbGroup& g : enumerate_groups(Int(32)))
        if (classify(g).strongly_self_rickart) {
            if (g.free_rank != 0 || g.torsion.size() > 1) {
                v.pass = false;
                v.details.push_back("non-cyclic group classified strongly: " + format_group(g));
            }
            strongly.push_back(g.is_zero() ? 1 : long(*g.order()));
        }
    const std::vector<long> expected = {1,  2,  3,  5,  6,  7,  10, 11, 13, 14,
                                        15, 17, 19, 21, 22, 23, 26, 29, 30, 31};
    if (strongly != expected) {
        v.pass = false;
        v.details.push_back("strongly self-Rickart orders through 32 deviate from the "
                            "squarefree list");
    }
    long secs = elapsed_s(start);
    if (secs > 600) {
        v.pass = false;
        v.details.push_back("audit exceeded the ten-minute budget: " + std::to_string(secs) +
                            "s");
    }
    v.summary = "classifier vs exhaustive scans through order 32, exact strongly list (" +
                std::to_string(r.instances) + " checks, " + std::to_string(secs) + "s)";
    return v;
}

// 2: the pinned example verdicts hold, with the exact witnesses.
Verdict criterion2() {
    Verdict v{true, "", {}};
    SuiteResult r = run_capped("known-cases", 0);
    report_suite(v, r);
    v.summary = "pinned example verdicts and witnesses (" + std::to_string(r.instances) +
                " checks)";
    return v;
}

// 3: for every morphism between groups of order <= 16, full invariance of the
// kernel matches full coinvariance of its own quotient, and likewise on the
// image side. Budgeted at five minutes.
Verdict criterion3() {
    Verdict v{true, "", {}};
    auto start = std::chrono::steady_clock::now();
    SuiteResult r = run_capped("kernel-invariance-duality", 16);
    report_suite(v, r);
    long secs = elapsed_s(start);
    if (secs > 300) {
        v.pass = false;
        v.details.push_back("duality sweep exceeded the five-minute budget: " +
                            std::to_string(secs) + "s");
    }
    v.summary = "kernel/image invariance vs quotient coinvariance through order 16 (" +
                std::to_string(r.instances) + " morphisms, " + std::to_string(secs) + "s)";
    return v;
}

// 4: strongly = Rickart + weak duo = Rickart + abelian End ring, and dually,
// for every group of order <= 24.
Verdict criterion4() {
    Verdict v{true, "", {}};
    SuiteResult r = run_capped("self-rickart-equivalences", 24);
    report_suite(v, r);
    v.summary = "three-way equivalences for strongly and dual strongly through order 24 (" +
                std::to_string(r.instances) + " groups)";
    return v;
}

// 5: as stated, exactly one semicentrality orientation is supposed to
// correlate with full invariance of the image across all idempotents of
// groups of order <= 16. The per-idempotent orientation laws (left vs image,
// right vs kernel) are checked first and must hold.
Verdict criterion5() {
    Verdict v{true, "", {}};
    SuiteResult r = run_capped("semicentral-orientation", 16);
    report_suite(v, r);

    bool left_correlates = true, right_correlates = true;
    long idempotents = 0;
    DeciderConfig cfg;
    for (const FgAbGroup& m : enumerate_groups(Int(16))) {
        for (const Morphism& e : idempotent_endomorphisms(m, cfg)) {
            ++idempotents;
            bool fi_image = is_fully_invariant(image(e), cfg.paranoid);
            if (is_left_semicentral(e, cfg) != fi_image) left_correlates = false;
            if (is_right_semicentral(e, cfg) != fi_image) right_correlates = false;
        }
    }
    if (left_correlates == right_correlates) {
        v.pass = false;
        v.details.push_back(
            left_correlates
                ? "both orientations correlate with image invariance across all " +
                      std::to_string(idempotents) +
                      " idempotents: for an idempotent splitting M = Ker e + Im e, invariance "
                      "of either part forces the complementary Hom group to vanish, and over "
                      "finite abelian groups Hom(A,B) and Hom(B,A) vanish together, so kernel "
                      "and image invariance coincide and no single orientation can be singled "
                      "out"
                : "neither orientation correlates with image invariance");
    }
    v.summary = "exactly one semicentrality orientation tracks image invariance through order "
                "16 (" +
                std::to_string(idempotents) + " idempotents)";
    return v;
}

// 6: closure package: direct sums in the target (and dually), transfer along
// epimorphic sources / monomorphic targets, extensions, two-factor
// decompositions with Hom vanishing, and component pairs of strongly
// self-Rickart sums. The sampled suites must not be vacuous.
Verdict criterion6() {
    Verdict v{true, "", {}};
    SuiteResult ds = run_capped("direct-sum-closure", 12);
    report_suite(v, ds);
    SuiteResult epi = run_capped("image-epi-restriction", 12);
    report_suite(v, epi);
    if (epi.instances < 200) {
        v.pass = false;
        v.details.push_back("image-epi-restriction sampled fewer than 200 instances");
    }
    SuiteResult ext = run_capped("extension-closure", 12);
    report_suite(v, ext);
    if (ext.instances < 200) {
        v.pass = false;
        v.details.push_back("extension-closure covered fewer than 200 instances");
    }
    SuiteResult homzero = run_capped("hom-vanishing-decompositions", 24);
    report_suite(v, homzero);
    SuiteResult rel = run_capped("relative-rickart-pairs", 12);
    report_suite(v, rel);
    v.summary = "closure under sums, transfer, extensions, decompositions (" +
                std::to_string(ds.instances + epi.instances + ext.instances +
                               homzero.instances + rel.instances) +
                " checks)";
    return v;
}

// 7: the module-side strong verdict, the kernel-cyclicity route and the
// retractability route through the endomorphism ring agree for every group of
// order <= 16 (endomorphism rings up to 2^16 elements).
Verdict criterion7() {
    Verdict v{true, "", {}};
    SuiteResult r = run_capped("endo-ring-transfer", 16);
    report_suite(v, r);
    v.summary = "module and endomorphism-ring routes agree through order 16 (" +
                std::to_string(r.instances) + " groups)";
    return v;
}

// 8: infrastructure: normal-form reconstruction on 1000 random matrices,
// split deciders vs the complement search through order 16, and structural
// epi/mono criteria vs exhaustive scans through order 16.
Verdict criterion8() {
    Verdict v{true, "", {}};
    SuiteResult snf = run_capped("smith-normal-form", 0);
    report_suite(v, snf);
    if (snf.instances < 1000) {
        v.pass = false;
        v.details.push_back("normal-form suite ran fewer than 1000 matrices");
    }
    SuiteResult split = run_capped("split-decider-agreement", 16);
    report_suite(v, split);
    SuiteResult em = run_capped("epi-mono-criteria", 16);
    report_suite(v, em);
    v.summary = "normal forms, split deciders, epi/mono criteria (" +
                std::to_string(snf.instances + split.instances + em.instances) + " checks)";
    return v;
}

Verdict (*const kCriteria[])() = {criterion1, criterion2, criterion3, criterion4,
                                  criterion5, criterion6, criterion7, criterion8};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
            return 2;
        }
    }
    if (only < 0 || only > 8) {
        std::cerr << "criterion must be between 1 and 8\n";
        return 2;
    }

    bool all_pass = true;
    for (int n = 1; n <= 8; ++n) {
        if (only != 0 && n != only) continue;
        Verdict v;
        try {
            v = kCriteria[n - 1]();
        } catch (const std::exception& e) {
            v.pass = false;
            v.summary = "aborted";
            v.details.push_back(e.what());
        }
        std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << " - "
                  << v.summary << "\n";
        for (const std::string& d : v.details) std::cerr << "  " << d << "\n";
        all_pass = all_pass && v.pass;
    }
    return all_pass ? 0 : 1;
}
