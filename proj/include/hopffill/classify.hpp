#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hopffill/continued_fraction.hpp"
#include "hopffill/errors.hpp"
#include "hopffill/filling.hpp"
#include "hopffill/legendrian.hpp"
#include "hopffill/numeric.hpp"
#include "hopffill/openbook.hpp"

namespace hopffill {

// Which branch of the classification applies to a length-2 chain.
//
// The Menke cases delete a mixed component: (a) both components carry
// stabilizations on both sides, (b) exactly one does and the other has
// framing different from -4, (c) exactly one does and the other has framing
// -4. When no component is mixed the two components are stabilized on
// opposite sides and the open-book analysis applies, with an extra filling
// exactly when some framing is -4. Universally tight structures fall outside
// this classifier.
enum class CaseKind {
    MenkeA,
    MenkeB,
    MenkeC,
    OppositeSidesUnique,
    OppositeSidesExtra,
    UniversallyTightOutOfScope,
};

inline const char* to_string(CaseKind c) {
    switch (c) {
        case CaseKind::MenkeA: return "menke-a";
        case CaseKind::MenkeB: return "menke-b";
        case CaseKind::MenkeC: return "menke-c";
        case CaseKind::OppositeSidesUnique: return "opposite-sides-unique";
        case CaseKind::OppositeSidesExtra: return "opposite-sides-extra";
        case CaseKind::UniversallyTightOutOfScope: return "universally-tight-out-of-scope";
    }
    return "?";
}

// The larger-b2 filling class is pinned up to diffeomorphism; the smaller
// one only up to homeomorphism.
enum class FillingStatus { UniqueDiffeo, UniqueHomeo };

inline const char* to_string(FillingStatus s) {
    return s == FillingStatus::UniqueDiffeo ? "unique-diffeo" : "unique-homeo";
}

struct FillingClass {
    long long b2;
    FillingStatus status;

    bool operator==(const FillingClass& o) const { return b2 == o.b2 && status == o.status; }
};

struct ClassificationReport {
    Int p, q;                        // boundary lens space L(p,q)
    std::vector<long long> cf;       // [a1, a2]
    std::vector<long long> rot;
    StructureKind structure;
    CaseKind case_kind;
    std::vector<FillingClass> filling_classes; // empty only for universally tight input
    Rational d3;
};

namespace detail {

inline bool is_mixed(const LegendrianComponent& c) { return c.splus > 0 && c.sminus > 0; }

} // namespace detail

// Classification of the Stein fillings of the contact structure given by
// contact (-1)-surgery on a two-component chain.
inline ClassificationReport classify(const ChainSurgery& chain) {
    if (chain.length() != 2)
        throw InvalidInput("classification is stated for chains of exactly two components");
    const auto& c1 = chain.components()[0];
    const auto& c2 = chain.components()[1];

    ClassificationReport report;
    report.cf = chain.framing_terms();
    const auto pq = cf_value(ContinuedFraction(report.cf));
    report.p = pq.first;
    report.q = pq.second;
    report.rot = chain.rot_vector();
    report.structure = classify_structure(chain);
    report.d3 = d3_of_chain(chain);

    const bool mixed1 = detail::is_mixed(c1);
    const bool mixed2 = detail::is_mixed(c2);

    if (report.structure == StructureKind::UniversallyTight) {
        report.case_kind = CaseKind::UniversallyTightOutOfScope;
        return report;
    }
    if (mixed1 && mixed2) {
        report.case_kind = CaseKind::MenkeA;
        report.filling_classes = {{2, FillingStatus::UniqueDiffeo}};
        return report;
    }
    if (mixed1 || mixed2) {
        const auto& other = mixed1 ? c2 : c1;
        if (other.a != 4) {
            report.case_kind = CaseKind::MenkeB;
            report.filling_classes = {{2, FillingStatus::UniqueDiffeo}};
        } else {
            // The unmixed -4 component has rot = ±2, so both fillings of
            // L(4,1) feed through the symplectic 2-handle attachment.
            report.case_kind = CaseKind::MenkeC;
            report.filling_classes = {{2, FillingStatus::UniqueDiffeo},
                                      {1, FillingStatus::UniqueHomeo}};
        }
        return report;
    }
    // Virtually overtwisted with no mixed component: the stabilizations sit
    // on opposite sides.
    if (c1.a != 4 && c2.a != 4) {
        report.case_kind = CaseKind::OppositeSidesUnique;
        report.filling_classes = {{2, FillingStatus::UniqueDiffeo}};
    } else {
        report.case_kind = CaseKind::OppositeSidesExtra;
        report.filling_classes = {{2, FillingStatus::UniqueDiffeo},
                                  {1, FillingStatus::UniqueHomeo}};
    }
    return report;
}

// Materialize the predicted fillings of an opposite-sides report from the
// canonical factorization, applying the lantern substitution on the side of
// a -4-framed component for the extra class. Menke-case fillings come from
// surgery on a sublink, not from this page model, and are not materialized.
inline std::vector<FillingInvariants> expected_filling_profile(const ClassificationReport& report) {
    if (report.case_kind != CaseKind::OppositeSidesUnique &&
        report.case_kind != CaseKind::OppositeSidesExtra)
        throw CaseUnsupported(std::string("no page model for case ") +
                              to_string(report.case_kind));

    const long long a1 = report.cf[0];
    const long long a2 = report.cf[1];
    const Factorization canonical = canonical_hopf_factorization(a1, a2);
    std::vector<FillingInvariants> fillings{filling_invariants(canonical)};

    if (report.case_kind == CaseKind::OppositeSidesExtra) {
        const std::size_t k = static_cast<std::size_t>(a1 - 2);
        const std::size_t l = static_cast<std::size_t>(a2 - 2);
        Factorization substituted = [&] {
            if (a2 == 4) {
                // S1, S2 are the two negative-side boundary-parallel curves,
                // S3 the curve around s and the positive holes.
                Curve s1 = Curve::of_indices({k + 1});
                Curve s2 = Curve::of_indices({k + 2});
                Curve s3 = Curve::of_indices({0});
                for (std::size_t i = 1; i <= k; ++i) s3 = s3.united(Curve::of_indices({i}));
                return lantern_substitute(canonical, s1, s2, s3);
            }
            Curve s1 = Curve::of_indices({1});
            Curve s2 = Curve::of_indices({2});
            Curve s3 = Curve::of_indices({0});
            for (std::size_t j = 1; j <= l; ++j) s3 = s3.united(Curve::of_indices({k + j}));
            return lantern_substitute(canonical, s1, s2, s3);
        }();
        fillings.push_back(filling_invariants(substituted));
    }

    // The page model must reproduce the b2 values promised by the report.
    std::vector<long long> expected, got;
    for (const auto& cls : report.filling_classes) expected.push_back(cls.b2);
    for (const auto& inv : fillings) got.push_back(inv.b2);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (expected != got)
        throw InvalidInput("filling profile does not match the reported b2 values");
    return fillings;
}

} // namespace hopffill
