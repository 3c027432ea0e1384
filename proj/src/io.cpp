#include "gbs/io.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

#include "gbs/error.hpp"

namespace gbs::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view token, std::string_view context) {
    token = trim(token);
    std::int64_t value = 0;
    const auto *end = token.data() + token.size();
    const auto res = std::from_chars(token.data(), end, value);
    if (token.empty() || res.ec != std::errc{} || res.ptr != end) {
        throw Error(ErrorCode::Parse, "malformed integer '" + std::string(token) + "' in '" +
                                          std::string(context) + "'");
    }
    return value;
}

Json index_json(McsIndex idx) { return Json::array({idx.i, idx.j}); }

Json hit_json(const McsHit &hit) {
    Json j;
    j["index"] = index_json(hit.index);
    j["branch"] = branch_name(hit.branch);
    return j;
}

Json coords_json(const std::vector<GpmCoord> &coords) {
    Json arr = Json::array();
    for (const auto &c : coords) arr.push_back(to_json(c));
    return arr;
}

std::string coords_text(const std::vector<GpmCoord> &coords) {
    std::string out;
    for (const auto &c : coords) {
        if (!out.empty()) out += ' ';
        out += to_string(c);
    }
    return out;
}

}  // namespace

GbsSet parse_set(std::string_view text, const RingContext &ring) {
    std::vector<GpmCoord> coords;
    if (trim(text).empty()) throw Error(ErrorCode::Parse, "empty set string");
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto stop = std::min(text.find(';', start), text.size());
        const auto pair = text.substr(start, stop - start);
        const auto comma = pair.find(',');
        if (comma == std::string_view::npos || pair.find(',', comma + 1) != std::string_view::npos) {
            throw Error(ErrorCode::Parse, "expected 'm,n' but found '" + std::string(trim(pair)) + "'");
        }
        coords.push_back({parse_int(pair.substr(0, comma), pair), parse_int(pair.substr(comma + 1), pair)});
        start = stop + 1;
    }
    return GbsSet(ring, std::move(coords));
}

GbsSet parse_set_json(std::string_view text, const RingContext &ring) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw Error(ErrorCode::Parse, "set JSON must be an array of [m,n] pairs");
    std::vector<GpmCoord> coords;
    for (const auto &entry : doc) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer()) {
            throw Error(ErrorCode::Parse, "set JSON entries must be [m,n] integer pairs, got " + entry.dump());
        }
        coords.push_back({entry[0].get<std::int64_t>(), entry[1].get<std::int64_t>()});
    }
    return GbsSet(ring, std::move(coords));
}

std::string format_set(const GbsSet &s) {
    std::string out;
    for (const auto &c : s.elements()) {
        if (!out.empty()) out += ';';
        out += std::to_string(c.m) + "," + std::to_string(c.n);
    }
    return out;
}

Json to_json(GpmCoord c) { return Json::array({c.m, c.n}); }

Json to_json(const Mcs &mcs) {
    Json j;
    j["d"] = mcs.ring().d();
    j["index"] = index_json(mcs.index());
    j["elements"] = coords_json(mcs.elements());
    return j;
}

Json to_json(const DetectionReport &r) {
    Json j;
    j["d"] = r.input.ring().d();
    j["set"] = coords_json(r.input.elements());
    j["diff"] = coords_json(r.diff.elements());
    j["detected"] = r.detected;
    j["mcs_hit"] = r.mcs_hit ? hit_json(*r.mcs_hit) : Json(nullptr);
    Json all = Json::array();
    for (const auto &h : r.all_mcs_hits) all.push_back(hit_json(h));
    j["all_mcs_hits"] = std::move(all);
    Json classical;
    classical["discriminant_witness"] =
        r.classical.discriminant_witness ? to_json(*r.classical.discriminant_witness) : Json(nullptr);
    classical["commutative_difference"] = r.classical.commutative_difference;
    classical["unit_coordinate_cover"] = r.classical.unit_coordinate_cover;
    j["classical"] = std::move(classical);
    if (!r.fan_hit) {
        j["fan"] = nullptr;
    } else if (r.fan_hit->no_transform()) {
        j["fan"] = "no-transform";
    } else {
        j["fan"] = Json{{"alpha", *r.fan_hit->alpha}};
    }
    j["notes"] = r.notes;
    return j;
}

void print_report(std::ostream &out, const DetectionReport &r) {
    out << "d = " << r.input.ring().d() << ", set = {" << coords_text(r.input.elements()) << "}\n";
    out << "difference set (" << r.diff.size() << "): " << coords_text(r.diff.elements()) << '\n';
    if (r.mcs_hit) {
        out << "MCS criterion: fires on C(" << r.mcs_hit->index.i << ',' << r.mcs_hit->index.j << "), "
            << branch_name(r.mcs_hit->branch) << " branch (" << r.all_mcs_hits.size() << " firing MCS)\n";
    } else {
        out << "MCS criterion: no MCS fires\n";
    }
    out << "discriminant set: "
        << (r.classical.discriminant_witness ? "nonempty, witness " + to_string(*r.classical.discriminant_witness)
                                             : std::string("empty"))
        << '\n';
    out << "commutative difference set: " << (r.classical.commutative_difference ? "yes" : "no") << '\n';
    out << "composite d with unit coordinates: " << (r.classical.unit_coordinate_cover ? "yes" : "no") << '\n';
    out << "F-type transform: ";
    if (!r.fan_hit) {
        out << "none\n";
    } else if (r.fan_hit->no_transform()) {
        out << "already F-type\n";
    } else {
        out << "alpha = " << *r.fan_hit->alpha << '\n';
    }
    for (const auto &note : r.notes) out << "note: " << note << '\n';
    out << (r.detected ? "DETECTED: locally distinguishable\n" : "UNDETECTED: no sufficient criterion fired\n");
}

}  // namespace gbs::io
