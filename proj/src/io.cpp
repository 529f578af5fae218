#include "trisect/io.hpp"

#include <algorithm>
#include <initializer_list>
#include <string_view>

namespace trisect::io {

namespace {

void expect_keys(const Json& j, std::initializer_list<std::string_view> keys, std::string_view what) {
    if (!j.is_object()) {
        throw FormatError(std::string(what) + " must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw FormatError("unknown field '" + key + "' in " + std::string(what));
        }
    }
    for (const auto key : keys) {
        if (!j.contains(key)) {
            throw FormatError("missing field '" + std::string(key) + "' in " + std::string(what));
        }
    }
}

int get_int(const Json& j, std::string_view key, int min_value) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) {
        throw FormatError("field '" + std::string(key) + "' must be an integer");
    }
    const auto value = v.get<long long>();
    if (value < min_value || value > 1'000'000'000LL) {
        throw FormatError("field '" + std::string(key) + "' out of range");
    }
    return static_cast<int>(value);
}

ComponentId component_from_json(const Json& j) {
    if (!j.is_string()) {
        throw FormatError("component labels must be strings");
    }
    return ComponentId::parse(j.get<std::string>());
}

std::vector<ComponentId> components_from_json(const Json& j, std::string_view what) {
    if (!j.is_array()) {
        throw FormatError(std::string(what) + " must be an array");
    }
    std::vector<ComponentId> out;
    for (const auto& c : j) out.push_back(component_from_json(c));
    return out;
}

Json components_to_json(const std::vector<ComponentId>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(c.str());
    return out;
}

MoveOp op_from_name(const std::string& name) {
    for (const auto op : {MoveOp::Stab, MoveOp::Destab, MoveOp::FakeStab}) {
        if (op_name(op) == name) return op;
    }
    throw FormatError("unknown move op '" + name + "'");
}

Json profile_array(const Profile& p) { return Json::array({p.h1, p.h2, p.h3, p.b}); }

}  // namespace

Json to_json(const ArcClass& arc) {
    Json j = Json::object();
    if (arc.is_same()) {
        j["same"] = arc.first.str();
    } else {
        j["distinct"] = Json::array({arc.first.str(), arc.second.str()});
    }
    return j;
}

ArcClass arc_from_json(const Json& j) {
    if (!j.is_object() || j.size() != 1) {
        throw FormatError(R"(arc must be {"same":c} or {"distinct":[c,d]})");
    }
    if (j.contains("same")) {
        return ArcClass::same(component_from_json(j.at("same")));
    }
    if (j.contains("distinct")) {
        const auto pair = components_from_json(j.at("distinct"), "distinct arc");
        if (pair.size() != 2 || pair[0] == pair[1]) {
            throw FormatError("distinct arc needs two different components");
        }
        return ArcClass::distinct(pair[0], pair[1]);
    }
    throw FormatError(R"(arc must be {"same":c} or {"distinct":[c,d]})");
}

Json to_json(const MoveRecord& r) {
    Json j = Json::object();
    j["op"] = std::string(op_name(r.op));
    j["handlebody"] = index_of(r.handlebody);
    j["arc"] = to_json(r.arc);
    j["created"] = components_to_json(r.created);
    j["removed"] = components_to_json(r.removed);
    return j;
}

MoveRecord record_from_json(const Json& j) {
    expect_keys(j, {"op", "handlebody", "arc", "created", "removed"}, "move record");
    if (!j.at("op").is_string()) {
        throw FormatError("move op must be a string");
    }
    MoveRecord r;
    r.op = op_from_name(j.at("op").get<std::string>());
    const int h = get_int(j, "handlebody", 1);
    if (h > 3) {
        throw FormatError("handlebody must be 1, 2 or 3");
    }
    r.handlebody = static_cast<Handlebody>(h);
    r.arc = arc_from_json(j.at("arc"));
    r.created = components_from_json(j.at("created"), "created");
    r.removed = components_from_json(j.at("removed"), "removed");
    // Stab and destab each rewrite the components named by the arc: one
    // splits into two, or two merge into one.
    if (r.op != MoveOp::FakeStab) {
        const bool same = r.arc.is_same();
        const std::vector<ComponentId> named =
            same ? std::vector<ComponentId>{r.arc.first} : std::vector<ComponentId>{r.arc.first, r.arc.second};
        if (r.removed != named || r.created.size() != (same ? 2U : 1U)) {
            throw FormatError("move record components do not match its arc " + r.arc.str());
        }
    }
    return r;
}

Json to_json(const MoveScript& script) {
    Json j = Json::array();
    for (const auto& r : script) j.push_back(to_json(r));
    return j;
}

MoveScript script_from_json(const Json& j) {
    if (!j.is_array()) {
        throw FormatError("a move script is a JSON array of move records");
    }
    MoveScript script;
    for (const auto& r : j) script.push_back(record_from_json(r));
    return script;
}

Json to_json(const SurfaceGenera& g) {
    Json j = Json::object();
    j["g12"] = g.g12;
    j["g13"] = g.g13;
    j["g23"] = g.g23;
    return j;
}

Json to_json(const TrisectionState& state) {
    Json j = Json::object();
    j["version"] = kFormatVersion;
    j["label"] = state.label();
    j["genera"] = to_json(state.genera());
    Json link = Json::object();
    link["components"] = components_to_json(state.link().components());
    link["next_id"] = state.link().next_id();
    j["link"] = std::move(link);
    j["history"] = to_json(state.history());
    return j;
}

TrisectionState state_from_json(const Json& j) {
    expect_keys(j, {"version", "label", "genera", "link", "history"}, "state");
    if (get_int(j, "version", 0) != kFormatVersion) {
        throw FormatError("unsupported state version");
    }
    if (!j.at("label").is_string()) {
        throw FormatError("label must be a string");
    }
    const auto& gj = j.at("genera");
    expect_keys(gj, {"g12", "g13", "g23"}, "genera");
    const SurfaceGenera genera{get_int(gj, "g12", 0), get_int(gj, "g13", 0), get_int(gj, "g23", 0)};

    const auto& lj = j.at("link");
    expect_keys(lj, {"components", "next_id"}, "link");
    auto current = components_from_json(lj.at("components"), "components");
    const auto next_id = static_cast<std::uint32_t>(get_int(lj, "next_id", 0));
    std::sort(current.begin(), current.end());
    if (current.empty() || std::adjacent_find(current.begin(), current.end()) != current.end()) {
        throw FormatError("link components must be nonempty and distinct");
    }
    const MoveScript history = script_from_json(j.at("history"));

    // Undo the history's component rewrites to recover the initial link.
    auto initial = current;
    for (auto it = history.rbegin(); it != history.rend(); ++it) {
        for (const auto& c : it->created) {
            if (std::find(initial.begin(), initial.end(), c) == initial.end()) {
                throw FormatError("history creates " + c.str() + " but it is not present afterwards");
            }
            std::erase(initial, c);
        }
        for (const auto& c : it->removed) {
            if (std::find(initial.begin(), initial.end(), c) != initial.end()) {
                throw FormatError("history removes " + c.str() + " twice");
            }
            initial.push_back(c);
        }
    }
    std::vector<GenealogyEvent> events;
    for (const auto& r : history) events.push_back({std::string(op_name(r.op)), r.removed, r.created});
    auto link = LinkComponentSet::from_genealogy(initial, next_id, events);
    if (link.components() != current) {
        throw FormatError("history does not reproduce the link components");
    }
    try {
        return TrisectionState(genera, std::move(link), history, j.at("label").get<std::string>());
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
}

Json to_json(const MoveGraphNode& node) {
    Json j = Json::object();
    j["g12"] = node.g12;
    j["g13"] = node.g13;
    j["g23"] = node.g23;
    j["b"] = node.b;
    return j;
}

Json to_json(const PlanReport& report) {
    const auto side = [](const PlanSteps& s) {
        Json steps = Json::object();
        steps["step1_balance"] = to_json(s.step1_balance);
        steps["step2_build"] = to_json(s.step2_build);
        steps["step3_fake"] = to_json(s.step3_fake);
        steps["step4_s12_to_disk"] = to_json(s.step4_s12_to_disk);
        steps["step5_s13_to_disk"] = to_json(s.step5_s13_to_disk);
        Json j = Json::object();
        j["steps"] = std::move(steps);
        return j;
    };
    Json j = Json::object();
    j["version"] = kFormatVersion;
    j["rs_bound"] = report.rs_bound;
    j["final_profile"] = profile_array(report.final_profile);
    j["final_genera"] = to_json(report.final_genera);
    j["a"] = side(report.a);
    j["b"] = side(report.b);
    return j;
}

Json to_json(const VerificationReport& report) {
    Json props = Json::array();
    for (const auto& p : report.properties) {
        Json entry = Json::object();
        entry["property"] = p.property;
        Json range = Json::object();
        range["max_sum"] = p.max_sum;
        entry["range"] = std::move(range);
        entry["pass"] = p.pass;
        Json ces = Json::array();
        for (const auto& n : p.counterexamples) ces.push_back(to_json(n));
        entry["counterexamples"] = std::move(ces);
        entry["detail"] = p.detail;
        props.push_back(std::move(entry));
    }
    Json j = Json::object();
    j["version"] = kFormatVersion;
    j["scope"] = "parameter shadow";
    j["max_sum"] = report.max_sum;
    j["common_stabilization_slack"] = report.slack;
    j["properties"] = std::move(props);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace trisect::io
