#include "beurling/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace beurling {

Doc Doc::object() {
    Doc d;
    d.value_ = ObjectNode{};
    return d;
}

Doc Doc::array() {
    Doc d;
    d.value_ = ArrayNode{};
    return d;
}

Doc Doc::of(bool v) {
    Doc d;
    d.value_ = v;
    return d;
}

Doc Doc::of(long long v) {
    Doc d;
    d.value_ = v;
    return d;
}

Doc Doc::of(double v) {
    Doc d;
    d.value_ = v;
    return d;
}

Doc Doc::of(const std::string& v) {
    Doc d;
    d.value_ = v;
    return d;
}

bool Doc::is_object() const { return std::holds_alternative<ObjectNode>(value_); }
bool Doc::is_array() const { return std::holds_alternative<ArrayNode>(value_); }

Doc& Doc::set(const std::string& key, Doc v) {
    auto* node = std::get_if<ObjectNode>(&value_);
    if (!node) throw std::logic_error("Doc::set on a non-object");
    node->keys.push_back(key);
    node->values.push_back(std::move(v));
    return *this;
}

Doc& Doc::push(Doc v) {
    auto* node = std::get_if<ArrayNode>(&value_);
    if (!node) throw std::logic_error("Doc::push on a non-array");
    node->items.push_back(std::move(v));
    return *this;
}

std::string format_double_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_double_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void append_double(std::string& out, double v) {
    if (std::isfinite(v)) {
        out += format_double_full(v);
    } else {
        // JSON has no non-finite numbers
        append_escaped(out, std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf"));
    }
}

std::string indent_of(int depth) { return std::string(static_cast<std::size_t>(2 * depth), ' '); }

}  // namespace

void Doc::dump_to(std::string& out, int depth) const {
    if (std::holds_alternative<std::nullptr_t>(value_)) {
        out += "null";
    } else if (const bool* b = std::get_if<bool>(&value_)) {
        out += *b ? "true" : "false";
    } else if (const long long* i = std::get_if<long long>(&value_)) {
        out += std::to_string(*i);
    } else if (const double* d = std::get_if<double>(&value_)) {
        append_double(out, *d);
    } else if (const std::string* s = std::get_if<std::string>(&value_)) {
        append_escaped(out, *s);
    } else if (const ObjectNode* node = std::get_if<ObjectNode>(&value_)) {
        if (node->keys.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        for (std::size_t i = 0; i < node->keys.size(); ++i) {
            out += indent_of(depth + 1);
            append_escaped(out, node->keys[i]);
            out += ": ";
            node->values[i].dump_to(out, depth + 1);
            if (i + 1 < node->keys.size()) out += ',';
            out += '\n';
        }
        out += indent_of(depth) + "}";
    } else if (const ArrayNode* node = std::get_if<ArrayNode>(&value_)) {
        if (node->items.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < node->items.size(); ++i) {
            out += indent_of(depth + 1);
            node->items[i].dump_to(out, depth + 1);
            if (i + 1 < node->items.size()) out += ',';
            out += '\n';
        }
        out += indent_of(depth) + "]";
    }
}

std::string Doc::dump() const {
    std::string out;
    dump_to(out, 0);
    return out;
}

void Doc::flatten(const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out) const {
    if (const ObjectNode* node = std::get_if<ObjectNode>(&value_)) {
        for (std::size_t i = 0; i < node->keys.size(); ++i) {
            const std::string path = prefix.empty() ? node->keys[i] : prefix + "." + node->keys[i];
            node->values[i].flatten(path, out);
        }
        return;
    }
    if (const ArrayNode* node = std::get_if<ArrayNode>(&value_)) {
        for (std::size_t i = 0; i < node->items.size(); ++i)
            node->items[i].flatten(prefix + "." + std::to_string(i), out);
        return;
    }
    std::string rendered;
    if (std::holds_alternative<std::nullptr_t>(value_)) {
        rendered = "null";
    } else if (const bool* b = std::get_if<bool>(&value_)) {
        rendered = *b ? "true" : "false";
    } else if (const long long* i = std::get_if<long long>(&value_)) {
        rendered = std::to_string(*i);
    } else if (const double* d = std::get_if<double>(&value_)) {
        rendered = std::isfinite(*d) ? format_double_full(*d)
                                     : (std::isnan(*d) ? "nan" : (*d > 0 ? "inf" : "-inf"));
    } else if (const std::string* s = std::get_if<std::string>(&value_)) {
        rendered = *s;
    }
    out.emplace_back(prefix, rendered);
}

namespace {

Doc assemble(const ExperimentReport& report) {
    Doc root = Doc::object();
    root.set("schema_version", Doc::of(kReportSchemaVersion));
    root.set("artifact_version", Doc::of(kArtifactVersion));
    root.set("command", Doc::of(report.command));
    root.set("parameters", report.parameters);
    root.set("payload", report.payload);
    root.set("witnesses", report.witnesses);
    root.set("verdict", Doc::of(report.verdict));
    return root;
}

}  // namespace

std::string render_json(const ExperimentReport& report) { return assemble(report).dump() + "\n"; }

std::string render_csv(const ExperimentReport& report) {
    std::vector<std::pair<std::string, std::string>> rows;
    assemble(report).flatten("", rows);
    std::string out = "key,value\n";
    for (const auto& [key, value] : rows) {
        auto cell = [](const std::string& s) {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char c : s) {
                if (c == '"') q += '"';
                q += c;
            }
            q += '"';
            return q;
        };
        out += cell(key) + "," + cell(value) + "\n";
    }
    return out;
}

std::string render_table(const ExperimentReport& report) {
    std::string out;
    out += "command : " + report.command + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    report.parameters.flatten("", rows);
    for (const auto& [key, value] : rows) out += "  param " + key + " = " + value + "\n";

    rows.clear();
    // tables carry reduced precision
    std::vector<std::pair<std::string, std::string>> payload_rows;
    Doc combined = Doc::object();
    combined.set("result", report.payload);
    combined.set("witness", report.witnesses);
    combined.flatten("", payload_rows);
    for (auto& [key, value] : payload_rows) {
        if (value.find_first_not_of("-+.0123456789eE") == std::string::npos &&
            value.find('.') != std::string::npos) {
            try {
                value = format_double_short(std::stod(value));
            } catch (...) {
            }
        }
        out += "  " + key + " = " + value + "\n";
    }
    out += "verdict : " + report.verdict + "\n";
    out += "wall_clock_ms : " + format_double_short(report.wall_clock_ms) + "\n";
    return out;
}

}  // namespace beurling
