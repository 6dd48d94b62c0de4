#include "latip/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace latip {

namespace {

using nlohmann::json;

Int json_to_int(const json& v, const std::string& field) {
    if (v.is_string()) return parse_int(v.get<std::string>());
    if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()), 10);
    throw std::invalid_argument("field '" + field + "' must be a decimal string or integer");
}

IntVec json_to_vec(const json& v, const std::string& field) {
    if (!v.is_array()) throw std::invalid_argument("field '" + field + "' must be an array");
    IntVec out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(json_to_int(e, field));
    return out;
}

json vec_to_json(const IntVec& v) {
    json out = json::array();
    for (const Int& e : v) out.push_back(int_str(e));
    return out;
}

void require_instance_valid(const std::vector<std::string>& violations) {
    if (violations.empty()) return;
    std::string msg = "invalid instance:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw std::invalid_argument(msg);
}

}  // namespace

ParsedInstance parse_instance_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("instance document must be an object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw std::invalid_argument("missing string field 'kind'");
    const std::string kind = doc["kind"].get<std::string>();

    ParsedInstance out;
    if (kind == "bkp") {
        out.kind = ParsedInstance::Kind::Bkp;
        if (!doc.contains("a") || !doc.contains("b") || !doc.contains("u"))
            throw std::invalid_argument("bkp instance needs fields a, b, u");
        BkpInstance inst;
        inst.a = json_to_vec(doc["a"], "a");
        inst.b = json_to_int(doc["b"], "b");
        inst.u = json_to_vec(doc["u"], "u");
        require_instance_valid(validate_instance(inst));
        out.bkp = std::move(inst);
    } else if (kind == "bip") {
        out.kind = ParsedInstance::Kind::Bip;
        if (!doc.contains("A") || !doc.contains("b") || !doc.contains("u"))
            throw std::invalid_argument("bip instance needs fields A, b, u");
        BipInstance inst;
        if (!doc["A"].is_array()) throw std::invalid_argument("field 'A' must be an array");
        for (const auto& row : doc["A"]) inst.A.push_back(json_to_vec(row, "A"));
        inst.b = json_to_vec(doc["b"], "b");
        inst.u = json_to_vec(doc["u"], "u");
        require_instance_valid(validate_instance(inst));
        out.bip = std::move(inst);
    } else {
        throw std::invalid_argument("unknown kind '" + kind + "' (expected bip or bkp)");
    }
    if (doc.contains("c")) {
        IntVec c = json_to_vec(doc["c"], "c");
        const std::size_t n = out.kind == ParsedInstance::Kind::Bkp ? out.bkp->size()
                                                                    : out.bip->cols();
        if (c.size() != n) throw std::invalid_argument("objective length mismatch");
        out.objective = std::move(c);
    }
    return out;
}

ParsedInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str());
}

std::string instance_to_json(const BkpInstance& inst, const IntVec* objective) {
    json doc;
    doc["kind"] = "bkp";
    doc["a"] = vec_to_json(inst.a);
    doc["b"] = int_str(inst.b);
    doc["u"] = vec_to_json(inst.u);
    if (objective) doc["c"] = vec_to_json(*objective);
    return doc.dump(2);
}

std::string instance_to_json(const BipInstance& inst, const IntVec* objective) {
    json doc;
    doc["kind"] = "bip";
    json rows = json::array();
    for (const auto& row : inst.A) rows.push_back(vec_to_json(row));
    doc["A"] = std::move(rows);
    doc["b"] = vec_to_json(inst.b);
    doc["u"] = vec_to_json(inst.u);
    if (objective) doc["c"] = vec_to_json(*objective);
    return doc.dump(2);
}

IntVec parse_objective_arg(const std::string& arg, std::size_t expected_len) {
    // An existing path wins; anything else is a comma-separated inline list.
    if (std::ifstream probe(arg); probe.good()) {
        ParsedInstance parsed = load_instance_file(arg);
        if (!parsed.objective)
            throw std::invalid_argument("objective file has no 'c' field: " + arg);
        if (parsed.objective->size() != expected_len)
            throw std::invalid_argument("objective length mismatch");
        return *parsed.objective;
    }
    IntVec out;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok));
    if (out.size() != expected_len)
        throw std::invalid_argument("objective length mismatch (expected " +
                                    std::to_string(expected_len) + " entries)");
    return out;
}

}  // namespace latip
