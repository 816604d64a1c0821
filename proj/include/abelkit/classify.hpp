#pragma once

#include <string>
#include <vector>

#include "abelkit/deciders.hpp"
#include "abelkit/group.hpp"

namespace abelkit {

/// Verdicts read off the invariant factors alone, no scanning. The reason tag
/// names the one decisive shape of the group; symbolic_notes carry the
/// explanatory text, including labels for objects that have no computable
/// value here (divisible groups and the rationals).
struct Classification {
    FgAbGroup group;
    std::string reason;
    bool strongly_self_rickart = false;
    bool dual_strongly_self_rickart = false;
    std::vector<std::string> symbolic_notes;
};

Classification classify(const FgAbGroup& g);

/// One scan-vs-prediction mismatch found by the audit.
struct Discrepancy {
    FgAbGroup group;
    std::string property;
    bool predicted = false;
    bool computed = false;
};

/// Compare classify() against the scanning deciders for one finite group.
std::vector<Discrepancy> classification_discrepancies(const FgAbGroup& g,
                                                      const DeciderConfig& cfg = {});

/// ... for every isomorphism class of order <= max_order. Empty result means
/// the fast predictor and the exhaustive scans agree everywhere. Budget
/// errors are rethrown with the offending group named.
std::vector<Discrepancy> predict_vs_bruteforce(Int max_order, const DeciderConfig& cfg = {});

/// Torsion families over distinct primes, each factor either the simple
/// cyclic group of that prime or its Pruefer limit (the union of all
/// p-power cyclics). The latter is symbolic: no group value backs it, so the
/// verdicts are closed-form. A family is strongly self-determined exactly
/// when every factor is simple, and dual strongly exactly when the factors
/// are homogeneous in kind.
enum class TorsionKind { Simple, Pruefer };

struct TorsionFactor {
    Int prime;
    TorsionKind kind;
};

struct TorsionFamilyClassification {
    std::vector<TorsionFactor> factors;
    std::string reason;
    bool strongly_self_rickart = false;
    bool dual_strongly_self_rickart = false;
    std::vector<std::string> symbolic_notes;
};

/// Throws DuplicatePrimeError on a repeated prime and ParseError on an entry
/// that is not prime.
TorsionFamilyClassification classify_torsion_family(const std::vector<TorsionFactor>& factors);

/// Text form: comma-separated `prime:kind` with kind `simple` or `pruefer`,
/// e.g. "2:simple,3:pruefer".
TorsionFamilyClassification parse_torsion_family(const std::string& text);

}  // namespace abelkit
