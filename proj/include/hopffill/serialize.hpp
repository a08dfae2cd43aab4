#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopffill/classify.hpp"
#include "hopffill/config_search.hpp"
#include "hopffill/errors.hpp"
#include "hopffill/filling.hpp"
#include "hopffill/legendrian.hpp"
#include "hopffill/numeric.hpp"
#include "hopffill/openbook.hpp"

namespace hopffill {

// All structured output is JSON with insertion-ordered keys, emitted through
// dump_document() so identical values serialize to identical bytes.
using Json = nlohmann::ordered_json;

inline std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

inline Json curve_to_json(const PlanarPage& page, const Curve& curve, long long multiplicity) {
    Json entry;
    std::vector<std::string> labels;
    for (std::size_t h : curve.indices()) labels.push_back(page.label(h));
    entry["encloses"] = labels;
    entry["multiplicity"] = multiplicity;
    return entry;
}

// Factorization document: {"holes": [...], "curves": [{"encloses": [...],
// "multiplicity": n}, ...]} with curves in canonical order.
inline Json factorization_to_json(const Factorization& f) {
    Json doc;
    doc["holes"] = f.page().holes();
    Json curves = Json::array();
    for (const auto& [curve, mult] : f.curves()) curves.push_back(curve_to_json(f.page(), curve, mult));
    doc["curves"] = std::move(curves);
    return doc;
}

inline Factorization factorization_from_json(const Json& doc) {
    try {
        std::vector<std::string> holes = doc.at("holes").get<std::vector<std::string>>();
        PlanarPage page(std::move(holes));
        std::vector<std::pair<Curve, long long>> curves;
        for (const auto& entry : doc.at("curves")) {
            const auto labels = entry.at("encloses").get<std::vector<std::string>>();
            if (!entry.at("multiplicity").is_number_integer())
                throw InvalidInput("curve multiplicity must be an integer");
            const long long mult = entry.at("multiplicity").get<long long>();
            if (mult < 1) throw InvalidInput("curve multiplicity must be positive");
            curves.emplace_back(Curve::of_labels(page, labels), mult);
        }
        return Factorization(std::move(page), curves);
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed factorization document: ") + e.what());
    }
}

inline Factorization parse_factorization(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    return factorization_from_json(doc);
}

inline Json profile_to_json(const MultiplicityProfile& profile) {
    Json doc;
    Json single = Json::object();
    for (std::size_t h = 0; h < profile.hole_count(); ++h)
        single[profile.labels()[h]] = profile.single(h);
    doc["single"] = std::move(single);
    Json joint = Json::object();
    for (std::size_t h = 0; h < profile.hole_count(); ++h)
        for (std::size_t g = h + 1; g < profile.hole_count(); ++g)
            joint[profile.labels()[h] + "," + profile.labels()[g]] = profile.joint(h, g);
    doc["joint"] = std::move(joint);
    return doc;
}

inline std::string profile_to_text(const MultiplicityProfile& profile) {
    std::ostringstream os;
    for (std::size_t h = 0; h < profile.hole_count(); ++h)
        os << "m(" << profile.labels()[h] << ")=" << profile.single(h) << "\n";
    for (std::size_t h = 0; h < profile.hole_count(); ++h)
        for (std::size_t g = h + 1; g < profile.hole_count(); ++g)
            os << "m(" << profile.labels()[h] << "," << profile.labels()[g]
               << ")=" << profile.joint(h, g) << "\n";
    return os.str();
}

inline Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_int64(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json invariants_to_json(const FillingInvariants& inv) {
    Json doc;
    doc["b2"] = inv.b2;
    doc["chi"] = inv.chi;
    doc["sigma"] = inv.sigma;
    Json h1 = Json::array();
    for (const Int& d : inv.h1_factors) h1.push_back(to_int64(d));
    doc["h1_factors"] = std::move(h1);
    doc["det_abs"] = to_int64(inv.det_abs);
    doc["Q"] = matrix_to_json(inv.Q);
    Json basis = Json::array();
    for (const auto& v : inv.kernel_basis) {
        Json vec = Json::array();
        for (const Int& x : v) vec.push_back(to_int64(x));
        basis.push_back(std::move(vec));
    }
    doc["kernel_basis"] = std::move(basis);
    return doc;
}

inline std::string h1_to_text(const std::vector<Int>& factors) {
    if (factors.empty()) return "trivial";
    std::string s;
    for (const Int& d : factors) {
        if (!s.empty()) s += " x ";
        s += d == 0 ? "Z" : "Z/" + d.str();
    }
    return s;
}

inline std::string invariants_to_text(const FillingInvariants& inv) {
    std::ostringstream os;
    os << "b2: " << inv.b2 << "\n"
       << "chi: " << inv.chi << "\n"
       << "sigma: " << inv.sigma << "\n"
       << "H1: " << h1_to_text(inv.h1_factors) << "\n"
       << "|det Q|: " << inv.det_abs << "\n"
       << "Q: " << inv.Q.str() << "\n";
    return os.str();
}

inline Json report_to_json(const ClassificationReport& report) {
    Json doc;
    doc["lens"] = Json{{"p", to_int64(report.p)}, {"q", to_int64(report.q)}};
    doc["cf"] = report.cf;
    doc["rot"] = report.rot;
    doc["structure"] = to_string(report.structure);
    doc["case"] = to_string(report.case_kind);
    Json classes = Json::array();
    for (const auto& cls : report.filling_classes)
        classes.push_back(Json{{"b2", cls.b2}, {"status", to_string(cls.status)}});
    doc["filling_classes"] = std::move(classes);
    doc["d3"] = to_string(report.d3);
    return doc;
}

inline std::string rot_to_text(const std::vector<long long>& rot) {
    std::string s = "(";
    for (std::size_t i = 0; i < rot.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rot[i]);
    }
    return s + ")";
}

inline std::string report_to_text(const ClassificationReport& report) {
    std::ostringstream os;
    os << "lens: L(" << report.p << "," << report.q << ")\n";
    os << "cf: [";
    for (std::size_t i = 0; i < report.cf.size(); ++i) os << (i ? "," : "") << report.cf[i];
    os << "]\n";
    os << "rot: " << rot_to_text(report.rot) << "\n";
    os << "structure: " << to_string(report.structure) << "\n";
    os << "case: " << to_string(report.case_kind) << "\n";
    if (report.filling_classes.empty()) {
        os << "filling classes: not classified here (universally tight)\n";
    } else {
        os << "filling classes: ";
        for (std::size_t i = 0; i < report.filling_classes.size(); ++i) {
            if (i) os << ", ";
            os << "b2=" << report.filling_classes[i].b2 << " ("
               << to_string(report.filling_classes[i].status) << ")";
        }
        os << "\n";
    }
    os << "d3: " << to_string(report.d3) << "\n";
    return os.str();
}

inline Json structures_to_json(const ContinuedFraction& cf, const StructureEnumeration& s) {
    Json doc;
    doc["cf"] = cf.terms();
    Json entries = Json::array();
    for (const auto& e : s.entries) {
        Json entry;
        entry["rot"] = e.rot;
        entry["structure"] = to_string(e.kind);
        entry["d3"] = to_string(d3_of_chain(chain_from_rot(cf, e.rot)));
        entry["class"] = e.contactomorphism_class + 1;
        entries.push_back(std::move(entry));
    }
    doc["isotopy_classes"] = std::move(entries);
    doc["isotopy_class_count"] = s.entries.size();
    doc["contactomorphism_class_count"] = s.class_representatives.size();
    return doc;
}

inline std::string structures_to_text(const ContinuedFraction& cf, const StructureEnumeration& s) {
    std::ostringstream os;
    for (const auto& e : s.entries) {
        os << "rot=" << rot_to_text(e.rot) << " structure=" << to_string(e.kind)
           << " d3=" << to_string(d3_of_chain(chain_from_rot(cf, e.rot)))
           << " class=" << (e.contactomorphism_class + 1) << "\n";
    }
    os << "isotopy classes: " << s.entries.size() << "\n";
    os << "contactomorphism classes: " << s.class_representatives.size() << "\n";
    return os.str();
}

inline Json configs_to_json(const PlanarPage& page, const ConfigResult& result,
                            SymmetryMode mode) {
    Json doc;
    doc["holes"] = page.holes();
    doc["count_raw"] = result.count_raw;
    doc["count_up_to_symmetry"] = result.count_up_to_symmetry;
    doc["listed"] = mode == SymmetryMode::Raw ? "raw" : "up-to-profile-symmetry";
    Json configs = Json::array();
    for (const auto& f : result.configurations) {
        Json curves = Json::array();
        for (const auto& [curve, mult] : f.curves())
            curves.push_back(curve_to_json(page, curve, mult));
        configs.push_back(std::move(curves));
    }
    doc["configurations"] = std::move(configs);
    return doc;
}

inline std::string configs_to_text(const ConfigResult& result, SymmetryMode mode) {
    std::ostringstream os;
    os << "raw configurations: " << result.count_raw << "\n";
    os << "configurations up to profile symmetry: " << result.count_up_to_symmetry << "\n";
    os << "listed (" << (mode == SymmetryMode::Raw ? "raw" : "up to profile symmetry")
       << "):\n";
    for (std::size_t i = 0; i < result.configurations.size(); ++i)
        os << "config " << (i + 1) << ": " << result.configurations[i].str() << "\n";
    return os.str();
}

} // namespace hopffill
