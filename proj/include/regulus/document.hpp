#pragma once

// JSON form of a congruence certificate. Keys are emitted in a fixed order so
// documents are byte-stable.

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "certify.hpp"

namespace regulus {

inline constexpr const char* tool_version = "regulus 1.0.0";
inline constexpr int document_version = 1;

struct certificate_document {
    int version = document_version;
    std::string generated_by = tool_version;
    congruence_certificate certificate;

    friend bool operator==(const certificate_document&, const certificate_document&) = default;
};

inline certificate_status parse_status(const std::string& s) {
    if (s == "certified") return certificate_status::certified;
    if (s == "failed") return certificate_status::failed;
    if (s == "insufficient_precision") return certificate_status::insufficient_precision;
    throw std::invalid_argument("unknown certificate status '" + s + "'");
}

inline nlohmann::ordered_json to_json(const certificate_document& doc) {
    const auto& c = doc.certificate;
    nlohmann::ordered_json j;
    j["version"] = doc.version;
    j["m"] = c.m;
    j["l"] = c.l;
    j["weight"] = c.weight;
    j["level"] = c.level;
    j["character"] = c.character;
    j["sturm_bound"] = c.sturm_bound;
    j["coefficients_checked"] = c.coefficients_checked;
    j["status"] = to_string(c.status);
    if (c.first_nonzero) {
        j["first_nonzero"] = {{"index", c.first_nonzero->index}, {"residue", c.first_nonzero->residue}};
    } else {
        j["first_nonzero"] = nullptr;
    }
    auto progs = nlohmann::ordered_json::array();
    for (const auto& p : c.progressions) progs.push_back({{"A", p.A}, {"B", p.B}});
    j["progressions"] = std::move(progs);
    auto timings = nlohmann::ordered_json::object();
    for (const auto& [stage, ms] : c.timings) timings[stage] = ms;
    j["timings"] = std::move(timings);
    j["generated_by"] = doc.generated_by;
    j["required_precision"] = c.required_precision;
    return j;
}

inline std::string serialize(const certificate_document& doc, int indent = 2) { return to_json(doc).dump(indent); }

inline certificate_document parse_document(std::string_view text) {
    const auto j = nlohmann::ordered_json::parse(text);
    certificate_document doc;
    doc.version = j.at("version").get<int>();
    doc.generated_by = j.value("generated_by", std::string{});
    auto& c = doc.certificate;
    c.m = j.at("m").get<u32>();
    c.l = j.at("l").get<u64>();
    c.weight = j.at("weight").get<i64>();
    c.level = j.at("level").get<u64>();
    c.character = j.at("character").get<i64>();
    c.sturm_bound = j.at("sturm_bound").get<u64>();
    c.coefficients_checked = j.at("coefficients_checked").get<u64>();
    c.status = parse_status(j.at("status").get<std::string>());
    if (const auto& fz = j.at("first_nonzero"); !fz.is_null()) {
        c.first_nonzero = nonzero_coefficient{fz.at("index").get<u64>(), fz.at("residue").get<u32>()};
    }
    for (const auto& p : j.at("progressions")) c.progressions.push_back({p.at("A").get<u64>(), p.at("B").get<u64>(), c.m});
    for (const auto& [stage, ms] : j.at("timings").items()) c.timings.emplace_back(stage, ms.get<double>());
    c.required_precision = j.value("required_precision", u64{0});
    return doc;
}

}  // namespace regulus
