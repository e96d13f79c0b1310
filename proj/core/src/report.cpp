#include "secant/report.hpp"

#include <json.hpp>

namespace secant::report {

namespace {

void render_text(const Node& n, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : n.entries()) {
        if (std::holds_alternative<std::string>(value)) {
            out += pad + key + ": " + std::get<std::string>(value) + "\n";
        } else {
            out += pad + key + ":\n";
            render_text(*std::get<std::unique_ptr<Node>>(value), indent + 1, out);
        }
    }
}

nlohmann::ordered_json to_ordered_json(const Node& n) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, value] : n.entries()) {
        std::string k = key;
        int suffix = 2;
        while (j.contains(k)) k = key + "#" + std::to_string(suffix++);
        if (std::holds_alternative<std::string>(value))
            j[k] = std::get<std::string>(value);
        else
            j[k] = to_ordered_json(*std::get<std::unique_ptr<Node>>(value));
    }
    return j;
}

void collect_leaves(const Node& n, const std::string& prefix, std::vector<Node::Leaf>& out) {
    for (const auto& [key, value] : n.entries()) {
        const std::string path = prefix.empty() ? key : prefix + "." + key;
        if (std::holds_alternative<std::string>(value))
            out.push_back({path, std::get<std::string>(value)});
        else
            collect_leaves(*std::get<std::unique_ptr<Node>>(value), path, out);
    }
}

} // namespace

std::string Node::to_text(int indent) const {
    std::string out;
    render_text(*this, indent, out);
    return out;
}

std::string Node::to_json_string(int indent) const {
    return to_ordered_json(*this).dump(indent);
}

std::string Node::find(const std::string& dotted_path) const {
    const auto dot = dotted_path.find('.');
    const std::string head = dotted_path.substr(0, dot);
    for (const auto& [key, value] : entries_) {
        if (key != head) continue;
        if (dot == std::string::npos) {
            if (std::holds_alternative<std::string>(value)) return std::get<std::string>(value);
            return {};
        }
        if (std::holds_alternative<std::unique_ptr<Node>>(value))
            return std::get<std::unique_ptr<Node>>(value)->find(dotted_path.substr(dot + 1));
        return {};
    }
    return {};
}

std::vector<Node::Leaf> Node::leaves() const {
    std::vector<Leaf> out;
    collect_leaves(*this, "", out);
    return out;
}

} // namespace secant::report
