#pragma once

#include <optional>
#include <string>

#include "abelkit/morphism.hpp"

namespace abelkit {

/// Outcome of a property decision. When the property fails on a scanned
/// morphism, `witness` holds the first offender in enumeration order and
/// `witness_property` names the per-morphism requirement it violates, phrased
/// so that the same check can be replayed on the witness alone.
struct PropertyReport {
    std::string property;
    std::string subject;
    bool holds = false;
    std::optional<Morphism> witness;
    std::string witness_property;
    Int work = 0;  // morphisms examined before the verdict
    std::string notes;
};

}  // namespace abelkit
