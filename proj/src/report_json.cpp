#include "famc/report_json.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace famc {

std::string spectrum_str(const DegreeSpectrum& spec) {
    std::string s;
    for (std::size_t i = 0; i < spec.entries.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(spec.entries[i].first) + "^" +
             std::to_string(spec.entries[i].second);
    }
    return s;
}

std::string approx6(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", r.to_double());
    return buf;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

namespace {

nlohmann::ordered_json flags_json(const GroupFlags& f) {
    nlohmann::ordered_json j;
    j["abelian"] = f.abelian;
    j["ad_maximal"] = f.ad_maximal;
    j["two_degree"] = f.two_degree;
    j["center_index_4"] = f.center_index_4;
    return j;
}

std::string flags_text(const GroupFlags& f) {
    std::string s;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!s.empty()) s += " ";
        s += name;
    };
    add(f.abelian, "abelian");
    add(f.ad_maximal, "ad_maximal");
    add(f.two_degree, "two_degree");
    add(f.center_index_4, "center_index_4");
    return s.empty() ? "none" : s;
}

}  // namespace

std::string report_to_json(const AmenabilityReport& r, int indent) {
    nlohmann::ordered_json j;
    j["group"] = r.group;
    j["order"] = r.order;
    j["am"] = r.am.str();
    j["ad"] = r.ad.str();
    j["bounds"] = {{"lower", r.runde_lower.str()},
                   {"upper", r.runde_upper},
                   {"improved", r.improved_upper.str()}};
    j["nu_omega"] = r.nu_omega.str();
    j["maxdeg"] = r.maxdeg;
    j["commutator_order"] = r.commutator_order;
    j["center_index"] = r.center_index;
    auto spec = nlohmann::ordered_json::array();
    for (auto [d, m] : r.spectrum.entries) {
        spec.push_back(nlohmann::ordered_json::array({d, m}));
    }
    j["spectrum"] = std::move(spec);
    j["flags"] = flags_json(r.flags);
    return j.dump(indent);
}

std::string report_csv_header() {
    return "group,order,am,ad,bounds_lower,bounds_upper,bounds_improved,"
           "nu_omega,maxdeg,commutator_order,center_index,spectrum,"
           "abelian,ad_maximal,two_degree,center_index_4";
}

std::string report_csv_row(const AmenabilityReport& r) {
    std::ostringstream os;
    os << csv_field(r.group) << "," << r.order << "," << r.am.str() << ","
       << r.ad.str()
       << "," << r.runde_lower.str() << "," << r.runde_upper << ","
       << r.improved_upper.str() << "," << r.nu_omega.str() << "," << r.maxdeg
       << "," << r.commutator_order << "," << r.center_index << ","
       << spectrum_str(r.spectrum) << "," << (r.flags.abelian ? 1 : 0) << ","
       << (r.flags.ad_maximal ? 1 : 0) << "," << (r.flags.two_degree ? 1 : 0)
       << "," << (r.flags.center_index_4 ? 1 : 0);
    return os.str();
}

std::string report_to_text(const AmenabilityReport& r) {
    std::ostringstream os;
    os << "group: " << r.group << "\n"
       << "order: " << r.order << "\n"
       << "am: " << r.am.str() << " (~" << approx6(r.am) << ")\n"
       << "ad: " << r.ad.str() << " (~" << approx6(r.ad) << ")\n"
       << "bounds: lower " << r.runde_lower.str() << " (~"
       << approx6(r.runde_lower) << "), improved " << r.improved_upper.str()
       << " (~" << approx6(r.improved_upper) << "), maxdeg " << r.runde_upper
       << "\n"
       << "nu_omega: " << r.nu_omega.str() << " (~" << approx6(r.nu_omega)
       << ")\n"
       << "commutator_order: " << r.commutator_order << "\n"
       << "center_index: " << r.center_index << "\n"
       << "spectrum: " << spectrum_str(r.spectrum) << "\n"
       << "flags: " << flags_text(r.flags) << "\n";
    return os.str();
}

}  // namespace famc
