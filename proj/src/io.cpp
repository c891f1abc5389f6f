#include "tde/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tde {

Json rational_json(const Rational& r) { return r.str(); }

Json point_json(const Point2& p) { return Json::array({p.x.str(), p.y.str()}); }

Json domain_json(const ToricDomainSpec& d) {
    Json b = Json::array();
    for (const auto& p : d.boundary()) b.push_back(point_json(p));
    return Json{{"type", to_string(d.kind())}, {"boundary", std::move(b)}};
}

namespace {

Rational coordinate(const Json& v) {
    if (!v.is_string()) throw InputError("coordinates must be strings such as \"2/3\", got " + v.dump());
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

}  // namespace

ToricDomainSpec parse_domain(const Json& j) {
    if (!j.is_object()) throw InputError("domain file must be a JSON object");
    if (!j.contains("type") || !j["type"].is_string()) throw InputError("missing string field \"type\"");
    std::string type = j["type"];
    DomainKind kind;
    if (type == "concave")
        kind = DomainKind::Concave;
    else if (type == "convex")
        kind = DomainKind::Convex;
    else
        throw InputError("type must be \"concave\" or \"convex\", got \"" + type + "\"");
    if (!j.contains("boundary") || !j["boundary"].is_array()) throw InputError("missing array field \"boundary\"");
    std::vector<Point2> b;
    for (const auto& p : j["boundary"]) {
        if (!p.is_array() || p.size() != 2) throw InputError("boundary entries must be [x, y] pairs, got " + p.dump());
        b.push_back({coordinate(p[0]), coordinate(p[1])});
    }
    return {kind, std::move(b)};
}

ToricDomainSpec parse_domain_text(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return parse_domain(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ToricDomainSpec read_domain(const std::string& path) { return parse_domain_text(read_file(path)); }

std::string emit_domain(const ToricDomainSpec& d) { return domain_json(d).dump(2) + "\n"; }

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace tde
