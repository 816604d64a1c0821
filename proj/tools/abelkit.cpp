// Command line front end. Every subcommand prints one JSON document (or JSON
// lines for `verify`) on stdout; human-facing text goes to stderr or behind
// --format table. Exit codes: 0 property holds / all checks pass, 1 property
// fails (witness in the output), 2 bad input or resource limit, 3 a
// verification suite or audit found a mismatch.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abelkit/classify.hpp"
#include "abelkit/endring.hpp"
#include "abelkit/errors.hpp"
#include "abelkit/harness.hpp"
#include "abelkit/json_io.hpp"

using namespace abelkit;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSuiteFailure = 3;

Int env_hom_budget() {
    if (const char* env = std::getenv("ABELKIT_HOM_BUDGET")) {
        try {
            return Int(std::string(env));
        } catch (const std::exception&) {
            throw ParseError("ABELKIT_HOM_BUDGET is not an integer: " + std::string(env));
        }
    }
    return default_hom_budget();
}

std::string slurp_morphism_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot read morphism file " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Morphism parse_morphism_arg(const std::string& arg) {
    Json j;
    try {
        j = Json::parse(slurp_morphism_arg(arg));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("morphism JSON: ") + e.what());
    }
    return morphism_from_json(j);
}

int emit_report(const PropertyReport& r) {
    std::cout << report_to_json(r).dump(2) << "\n";
    return r.holds ? kExitHolds : kExitFails;
}

int emit_bool(const std::string& property, const std::string& subject, bool holds) {
    PropertyReport r;
    r.property = property;
    r.subject = subject;
    r.holds = holds;
    return emit_report(r);
}

// ---------------------------------------------------------------------------
// decide
// ---------------------------------------------------------------------------

int decide_on_groups(const std::string& prop, const std::vector<std::string>& exprs,
                     const DeciderConfig& cfg) {
    if (exprs.empty()) throw ParseError("property " + prop + " needs a group expression");
    FgAbGroup a = parse_group(exprs[0]);
    FgAbGroup b = exprs.size() > 1 ? parse_group(exprs[1]) : a;

    if (prop == "rickart") return emit_report(is_rickart(a, b, cfg));
    if (prop == "strongly-rickart") return emit_report(is_strongly_rickart(a, b, cfg));
    if (prop == "dual-rickart") return emit_report(is_dual_rickart(a, b, cfg));
    if (prop == "dual-strongly-rickart")
        return emit_report(is_dual_strongly_rickart(a, b, cfg));
    if (prop == "epimorphism-exists")
        return emit_bool(prop, format_group(a) + " ->> " + format_group(b),
                         exists_epimorphism(a, b));
    if (prop == "monomorphism-exists")
        return emit_bool(prop, format_group(a) + " >-> " + format_group(b),
                         exists_monomorphism(a, b));

    if (exprs.size() > 1)
        throw ParseError("property " + prop + " takes a single group expression");
    if (prop == "weak-duo") return emit_report(is_weak_duo(a, cfg));
    if (prop == "end-ring-abelian") return emit_report(is_end_ring_abelian(a, cfg));
    if (prop == "ssip") return emit_report(has_ssip(a, cfg));
    if (prop == "sssp") return emit_report(has_sssp(a, cfg));
    if (prop == "k-quasi-retractable") return emit_report(is_k_quasi_retractable(a, cfg));
    if (prop == "c-quasi-coretractable") return emit_report(is_c_quasi_coretractable(a, cfg));
    throw ParseError("unknown group property: " + prop);
}

int decide_on_morphism(const std::string& prop, const Morphism& f, const DeciderConfig& cfg) {
    std::string subject = morphism_json_string(f);
    if (prop == "injective") return emit_bool(prop, subject, is_injective(f));
    if (prop == "surjective") return emit_bool(prop, subject, is_surjective(f));
    if (prop == "section") return emit_bool(prop, subject, is_section(f).has_value());
    if (prop == "retraction") return emit_bool(prop, subject, is_retraction(f).has_value());
    if (prop == "kernel-splits")
        return emit_bool(prop, subject, is_section(kernel(f).embedding).has_value());
    if (prop == "image-splits")
        return emit_bool(prop, subject, is_section(image(f).embedding).has_value());
    if (prop == "kernel-fully-invariant")
        return emit_bool(prop, subject, is_fully_invariant(kernel(f), cfg.paranoid));
    if (prop == "image-fully-invariant")
        return emit_bool(prop, subject, is_fully_invariant(image(f), cfg.paranoid));
    if (prop == "fully-coinvariant") {
        if (!is_surjective(f))
            throw InvalidMorphismError("fully-coinvariant asks about an epimorphism");
        return emit_bool(prop, subject, is_fully_coinvariant(f, cfg.paranoid));
    }
    if (prop == "idempotent") {
        if (!(f.source == f.target))
            throw InvalidMorphismError("idempotency asks about an endomorphism");
        return emit_bool(prop, subject, compose(f, f) == f);
    }
    if (prop == "left-semicentral") return emit_bool(prop, subject, is_left_semicentral(f, cfg));
    if (prop == "right-semicentral")
        return emit_bool(prop, subject, is_right_semicentral(f, cfg));
    if (prop == "central") return emit_bool(prop, subject, is_central_endomorphism(f, cfg));
    throw ParseError("unknown morphism property: " + prop);
}

// ---------------------------------------------------------------------------
// verify output
// ---------------------------------------------------------------------------

void print_suite_table(const SuiteResult& r) {
    std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.suite << "  (" << r.instances
              << " instances, " << r.skipped.size() << " skipped, " << r.elapsed_ms << " ms)\n";
    for (const SuiteFailure& f : r.failures) {
        std::cout << "      " << f.instance << ": " << f.detail << "\n";
        std::cout << "        replay: " << f.replay << "\n";
    }
    for (const std::string& s : r.skipped) std::cout << "      skipped: " << s << "\n";
    for (const std::string& n : r.notes) std::cout << "      note: " << n << "\n";
}

int run_verify(const std::vector<std::string>& suite_ids, const HarnessConfig& cfg,
               const std::string& format, bool list_only) {
    if (list_only) {
        for (const auto& [id, summary] : suite_catalog())
            std::cout << id << "  " << summary << "\n";
        return kExitHolds;
    }
    std::vector<SuiteResult> results;
    if (suite_ids.empty()) {
        results = run_all(cfg);
    } else {
        for (const std::string& id : suite_ids) results.push_back(run_suite(id, cfg));
    }
    long total_instances = 0, total_failures = 0, total_skipped = 0, total_ms = 0;
    for (const SuiteResult& r : results) {
        total_instances += r.instances;
        total_failures += long(r.failures.size());
        total_skipped += long(r.skipped.size());
        total_ms += r.elapsed_ms;
        if (format == "table")
            print_suite_table(r);
        else
            std::cout << suite_result_to_json(r).dump() << "\n";
    }
    bool ok = total_failures == 0;
    if (format == "table") {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << results.size() << " suites, "
                  << total_instances << " instances, " << total_failures << " failures, "
                  << total_skipped << " skipped, " << total_ms << " ms\n";
    } else {
        Json summary{{"suites", results.size()},      {"instances", total_instances},
                     {"failures", total_failures},    {"skipped", total_skipped},
                     {"elapsed_ms", total_ms},        {"passed", ok}};
        std::cout << summary.dump() << "\n";
    }
    return ok ? kExitHolds : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finitely generated abelian groups: deciders and verification suites"};
    app.require_subcommand(1);

    std::string budget_text;
    app.add_option("--budget", budget_text,
                   "hom enumeration budget (overrides ABELKIT_HOM_BUDGET)");

    // decide
    auto* decide = app.add_subcommand(
        "decide", "decide one property of a group, a pair of groups, or a morphism");
    std::string property;
    std::vector<std::string> group_exprs;
    std::string morphism_arg;
    bool no_paranoid = false;
    decide->add_option("property", property, "property name")->required();
    decide->add_option("group", group_exprs, "group expression(s), e.g. 'Z/2 + Z/4'")
        ->expected(0, 2);
    decide->add_option("--morphism", morphism_arg,
                       "morphism as JSON {source,target,matrix}, or @file");
    decide->add_flag("--no-paranoid", no_paranoid, "skip the redundant cross-checks");

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "closed-form verdicts from the invariant factors");
    std::vector<std::string> classify_exprs;
    classify_cmd->add_option("group", classify_exprs, "group expression(s)")->required();

    // classify-torsion
    auto* torsion_cmd = app.add_subcommand(
        "classify-torsion", "closed-form verdicts for a torsion family over distinct primes");
    std::string torsion_expr;
    torsion_cmd
        ->add_option("family", torsion_expr, "comma-separated prime:kind, e.g. '2:simple,3:pruefer'")
        ->required();

    // audit
    auto* audit = app.add_subcommand(
        "audit", "compare the closed-form classifier against exhaustive scans");
    long audit_max_order = 32;
    bool audit_no_paranoid = false;
    audit->add_option("--max-order", audit_max_order, "largest group order to audit");
    audit->add_flag("--no-paranoid", audit_no_paranoid, "skip the redundant cross-checks");

    // ring-audit
    auto* ring_audit = app.add_subcommand(
        "ring-audit", "check the module-side and ring-side strong verdicts against each other");
    std::string ring_expr;
    ring_audit->add_option("group", ring_expr, "group expression")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::vector<std::string> suite_ids;
    long verify_max_order = 0;
    std::uint64_t verify_seed = 1729;
    int verify_samples = 200;
    bool verify_no_paranoid = false;
    bool verify_list = false;
    std::string verify_format = "json";
    verify->add_option("--suite", suite_ids, "suite id (repeatable; default: all)");
    verify->add_option("--max-order", verify_max_order,
                       "order cap for every suite (0 = per-suite defaults)");
    verify->add_option("--seed", verify_seed, "seed for the sampled suites");
    verify->add_option("--samples", verify_samples, "sample count for the sampled suites");
    verify->add_flag("--no-paranoid", verify_no_paranoid, "skip the redundant cross-checks");
    verify->add_flag("--list", verify_list, "list the suite catalog and exit");
    verify->add_option("--format", verify_format, "json (lines) or table")
        ->check(CLI::IsMember({"json", "table"}));

    // explain
    auto* explain = app.add_subcommand("explain", "one-page dossier for a group expression");
    std::string explain_expr;
    explain->add_option("group", explain_expr, "group expression")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Int budget = budget_text.empty() ? env_hom_budget() : Int(budget_text);

        if (decide->parsed()) {
            DeciderConfig cfg;
            cfg.hom_budget = budget;
            cfg.paranoid = !no_paranoid;
            if (!morphism_arg.empty()) {
                if (!group_exprs.empty())
                    throw ParseError("give either group expressions or --morphism, not both");
                return decide_on_morphism(property, parse_morphism_arg(morphism_arg), cfg);
            }
            return decide_on_groups(property, group_exprs, cfg);
        }

        if (classify_cmd->parsed()) {
            for (const std::string& expr : classify_exprs)
                std::cout << classification_to_json(classify(parse_group(expr))).dump(2) << "\n";
            return kExitHolds;
        }

        if (torsion_cmd->parsed()) {
            std::cout << torsion_family_to_json(parse_torsion_family(torsion_expr)).dump(2)
                      << "\n";
            return kExitHolds;
        }

        if (audit->parsed()) {
            DeciderConfig cfg;
            cfg.hom_budget = budget;
            cfg.paranoid = !audit_no_paranoid;
            auto discrepancies = predict_vs_bruteforce(Int(audit_max_order), cfg);
            Json out{{"max_order", audit_max_order},
                     {"discrepancies", discrepancies_to_json(discrepancies)},
                     {"passed", discrepancies.empty()}};
            std::cout << out.dump(2) << "\n";
            return discrepancies.empty() ? kExitHolds : kExitSuiteFailure;
        }

        if (ring_audit->parsed()) {
            DeciderConfig cfg;
            cfg.hom_budget = budget;
            TransferReport rep = verify_endring_transfer(parse_group(ring_expr), cfg);
            std::cout << transfer_to_json(rep).dump(2) << "\n";
            return rep.agree ? kExitHolds : kExitSuiteFailure;
        }

        if (verify->parsed()) {
            HarnessConfig cfg;
            cfg.max_order = verify_max_order;
            cfg.hom_budget = budget;
            cfg.random_seed = verify_seed;
            cfg.sample_count = verify_samples;
            cfg.paranoid = !verify_no_paranoid;
            return run_verify(suite_ids, cfg, verify_format, verify_list);
        }

        if (explain->parsed()) {
            HarnessConfig cfg;
            cfg.hom_budget = budget;
            std::cout << explain_group(explain_expr, cfg);
            return kExitHolds;
        }
    } catch (const Error& e) {
        std::cerr << "abelkit: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "abelkit: unexpected: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
