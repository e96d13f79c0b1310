#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace secant::report {

/// Ordered key/value tree used by verdicts and certificates. Values are
/// strings; children are nested nodes. Insertion order is preserved, so
/// serialization is deterministic.
class Node {
public:
    Node& put(std::string key, std::string value) {
        entries_.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    Node& put(std::string key, const char* value) {
        return put(std::move(key), std::string(value));
    }
    Node& put(std::string key, bool value) {
        return put(std::move(key), std::string(value ? "true" : "false"));
    }

    /// Appends a child node and returns a reference to it.
    Node& child(std::string key) {
        entries_.emplace_back(std::move(key), std::make_unique<Node>());
        return *std::get<std::unique_ptr<Node>>(entries_.back().second);
    }

    /// Indented "key: value" text, two spaces per level.
    std::string to_text(int indent = 0) const;

    /// JSON object text; repeated keys become "key", "key#2", ...
    /// so the output always parses.
    std::string to_json_string(int indent = 2) const;

    /// Leaf lookup by dotted path, empty when absent.
    std::string find(const std::string& dotted_path) const;

    struct Leaf {
        std::string path;
        std::string value;
    };
    /// All leaves with dotted paths, in order.
    std::vector<Leaf> leaves() const;

    const auto& entries() const { return entries_; }

private:
    using Value = std::variant<std::string, std::unique_ptr<Node>>;
    std::vector<std::pair<std::string, Value>> entries_;
};

} // namespace secant::report

namespace secant {

/// Verification outcome plus a serializable certificate.
struct Check {
    bool pass = true;
    report::Node details;
};

} // namespace secant
