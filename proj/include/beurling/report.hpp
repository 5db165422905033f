// Structured experiment reports. Serialization is hand-rolled so that the
// on-disk documents are byte-stable: fixed field order, 17-significant-digit
// floats, no timing fields.
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace beurling {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "1.0.0";

// Minimal ordered JSON-style document tree.
class Doc {
public:
    Doc() = default;  // null

    static Doc object();
    static Doc array();
    static Doc of(bool v);
    static Doc of(long long v);
    static Doc of(long v) { return of(static_cast<long long>(v)); }
    static Doc of(int v) { return of(static_cast<long long>(v)); }
    static Doc of(double v);
    static Doc of(const std::string& v);
    static Doc of(const char* v) { return of(std::string(v)); }

    bool is_object() const;
    bool is_array() const;

    Doc& set(const std::string& key, Doc v);  // appends an object field
    Doc& push(Doc v);                         // appends an array element

    // Pretty-printed with two-space indentation; deterministic.
    std::string dump() const;

    // Leaf paths and rendered values in document order ("payload.records.0.d").
    void flatten(const std::string& prefix,
                 std::vector<std::pair<std::string, std::string>>& out) const;

private:
    struct ObjectNode {
        std::vector<std::string> keys;
        std::vector<Doc> values;
    };
    struct ArrayNode {
        std::vector<Doc> items;
    };
    using Value =
        std::variant<std::nullptr_t, bool, long long, double, std::string, ObjectNode, ArrayNode>;
    Value value_ = nullptr;

    void dump_to(std::string& out, int depth) const;
};

// %.17g, with non-finite values rendered as quoted strings in JSON.
std::string format_double_full(double v);
// %.6g for human tables.
std::string format_double_short(double v);

struct ExperimentReport {
    std::string command;
    Doc parameters = Doc::object();
    Doc payload = Doc::object();
    Doc witnesses = Doc::object();
    std::string verdict = "pass";  // pass | fail | inconclusive
    double wall_clock_ms = 0.0;    // shown in human output only
};

// Deterministic structured document for --out and --format json.
std::string render_json(const ExperimentReport& report);
// Flat key,value CSV over the same content; deterministic.
std::string render_csv(const ExperimentReport& report);
// Human-readable table (6 significant digits, includes the wall clock).
std::string render_table(const ExperimentReport& report);

}  // namespace beurling
