#include "abelkit/json_io.hpp"

#include <limits>

#include "abelkit/errors.hpp"

namespace abelkit {

namespace {

Int int_from_entry(const Json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError(std::string(what) + " is not an integer: " + j.dump());
        }
    }
    throw ParseError(std::string(what) + " must be an integer or a decimal string, got " +
                     j.dump());
}

}  // namespace

Json int_to_json(const Int& v) {
    static const Int lo(std::numeric_limits<long long>::min());
    static const Int hi(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return Json(to_int64(v));
    return Json(v.str());
}

Int int_from_json(const Json& j) { return int_from_entry(j, "value"); }

Json group_to_json(const FgAbGroup& g) { return Json(format_group(g)); }

FgAbGroup group_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("group must be an expression string, got " + j.dump());
    return parse_group(j.get<std::string>());
}

Json morphism_to_json(const Morphism& f) {
    Json mat = Json::array();
    for (int i = 0; i < f.matrix.rows(); ++i)
        for (int j = 0; j < f.matrix.cols(); ++j) mat.push_back(int_to_json(f.matrix.at(i, j)));
    return Json{{"source", group_to_json(f.source)},
                {"target", group_to_json(f.target)},
                {"matrix", mat}};
}

Morphism morphism_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("morphism must be a JSON object, got " + j.dump());
    for (const char* key : {"source", "target", "matrix"})
        if (!j.contains(key)) throw ParseError(std::string("morphism lacks \"") + key + "\"");
    FgAbGroup source = group_from_json(j["source"]);
    FgAbGroup target = group_from_json(j["target"]);
    const Json& mat = j["matrix"];
    if (!mat.is_array()) throw ParseError("morphism matrix must be an array");

    const int rows = target.coords(), cols = source.coords();
    IntegerMatrix m(rows, cols);
    if (!mat.empty() && mat.front().is_array()) {
        if (int(mat.size()) != rows)
            throw ParseError("morphism matrix has " + std::to_string(mat.size()) +
                             " rows, the target needs " + std::to_string(rows));
        for (int i = 0; i < rows; ++i) {
            if (int(mat[i].size()) != cols)
                throw ParseError("morphism matrix row " + std::to_string(i) + " has " +
                                 std::to_string(mat[i].size()) + " entries, the source needs " +
                                 std::to_string(cols));
            for (int c = 0; c < cols; ++c) m.at(i, c) = int_from_entry(mat[i][c], "matrix entry");
        }
    } else {
        if (int(mat.size()) != rows * cols)
            throw ParseError("morphism matrix has " + std::to_string(mat.size()) +
                             " entries, expected " + std::to_string(rows * cols) +
                             " (row-major " + std::to_string(rows) + "x" + std::to_string(cols) +
                             ")");
        for (int i = 0; i < rows; ++i)
            for (int c = 0; c < cols; ++c)
                m.at(i, c) = int_from_entry(mat[std::size_t(i) * cols + c], "matrix entry");
    }
    return make_morphism(std::move(source), std::move(target), std::move(m));
}

std::string morphism_json_string(const Morphism& f) { return morphism_to_json(f).dump(); }

Json report_to_json(const PropertyReport& r) {
    Json j{{"property", r.property},
           {"subject", r.subject},
           {"holds", r.holds},
           {"work", int_to_json(r.work)}};
    if (r.witness) {
        j["witness"] = morphism_to_json(*r.witness);
        j["witness_property"] = r.witness_property;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

Json classification_to_json(const Classification& c) {
    return Json{{"group", group_to_json(c.group)},
                {"reason", c.reason},
                {"strongly_self_rickart", c.strongly_self_rickart},
                {"dual_strongly_self_rickart", c.dual_strongly_self_rickart},
                {"symbolic_notes", c.symbolic_notes}};
}

Json discrepancies_to_json(const std::vector<Discrepancy>& list) {
    Json arr = Json::array();
    for (const Discrepancy& d : list)
        arr.push_back(Json{{"group", group_to_json(d.group)},
                           {"property", d.property},
                           {"predicted", d.predicted},
                           {"computed", d.computed}});
    return arr;
}

Json torsion_family_to_json(const TorsionFamilyClassification& c) {
    Json factors = Json::array();
    for (const TorsionFactor& f : c.factors)
        factors.push_back(Json{{"prime", int_to_json(f.prime)},
                               {"kind", f.kind == TorsionKind::Simple ? "simple" : "pruefer"}});
    return Json{{"factors", factors},
                {"reason", c.reason},
                {"strongly_self_rickart", c.strongly_self_rickart},
                {"dual_strongly_self_rickart", c.dual_strongly_self_rickart},
                {"symbolic_notes", c.symbolic_notes}};
}

Json transfer_to_json(const TransferReport& r) {
    Json j{{"group", group_to_json(r.group)},
           {"ring_size", int_to_json(r.ring_size)},
           {"module_strongly", r.module_strongly},
           {"ring_strongly", r.ring_strongly},
           {"kernels_cyclic", r.kernels_cyclic},
           {"quasi_retractable", r.quasi_retractable},
           {"via_kernels", r.via_kernels},
           {"via_retractability", r.via_retractability},
           {"agree", r.agree},
           {"notes", r.notes}};
    if (r.opposite_check) j["opposite_check"] = *r.opposite_check;
    return j;
}

Json suite_result_to_json(const SuiteResult& r) {
    Json failures = Json::array();
    for (const SuiteFailure& f : r.failures) {
        Json jf{{"instance", f.instance}, {"detail", f.detail}, {"replay", f.replay}};
        if (f.witness) jf["witness"] = morphism_to_json(*f.witness);
        failures.push_back(std::move(jf));
    }
    return Json{{"suite", r.suite},
                {"summary", r.summary},
                {"instances", r.instances},
                {"passed", r.passed()},
                {"failures", failures},
                {"skipped", r.skipped},
                {"notes", r.notes},
                {"elapsed_ms", r.elapsed_ms},
                {"config",
                 Json{{"max_order", int_to_json(r.config.max_order)},
                      {"hom_budget", int_to_json(r.config.hom_budget)},
                      {"random_seed", r.config.random_seed},
                      {"sample_count", r.config.sample_count},
                      {"paranoid", r.config.paranoid}}}};
}

}  // namespace abelkit
