#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hopffill/continued_fraction.hpp"
#include "hopffill/errors.hpp"
#include "hopffill/int_matrix.hpp"
#include "hopffill/linalg.hpp"
#include "hopffill/numeric.hpp"

namespace hopffill {

// One Legendrian unknot in the chain: topological framing -a, Thurston-
// Bennequin number -a+1, and a-2 stabilizations split into positive and
// negative ones. The rotation number is the signed stabilization count.
struct LegendrianComponent {
    long long a;
    long long splus;
    long long sminus;

    LegendrianComponent(long long a_, long long splus_, long long sminus_)
        : a(a_), splus(splus_), sminus(sminus_) {
        if (a < 2) throw InvalidInput("framing parameter must satisfy a >= 2");
        if (splus < 0 || sminus < 0 || splus + sminus != a - 2)
            throw InvalidInput("stabilizations must satisfy splus + sminus = a - 2");
    }

    long long tb() const { return -a + 1; }
    long long rot() const { return splus - sminus; }
};

// Linear chain of Legendrian unknots, consecutive components linked once.
// Length 2 is the classified range but the chain itself may be any length.
class ChainSurgery {
public:
    explicit ChainSurgery(std::vector<LegendrianComponent> components)
        : components_(std::move(components)) {
        if (components_.empty()) throw InvalidInput("chain must be nonempty");
    }

    const std::vector<LegendrianComponent>& components() const { return components_; }
    std::size_t length() const { return components_.size(); }

    std::vector<long long> framing_terms() const {
        std::vector<long long> t;
        for (const auto& c : components_) t.push_back(c.a);
        return t;
    }

    std::vector<long long> rot_vector() const {
        std::vector<long long> r;
        for (const auto& c : components_) r.push_back(c.rot());
        return r;
    }

    // Global sign flip of every stabilization (conjugation).
    ChainSurgery conjugate() const {
        std::vector<LegendrianComponent> flipped;
        for (const auto& c : components_) flipped.emplace_back(c.a, c.sminus, c.splus);
        return ChainSurgery(std::move(flipped));
    }

private:
    std::vector<LegendrianComponent> components_;
};

inline ChainSurgery make_chain(const std::vector<long long>& a,
                               const std::vector<std::pair<long long, long long>>& stabs) {
    if (a.size() != stabs.size())
        throw InvalidInput("stabilization list length must match chain length");
    std::vector<LegendrianComponent> comps;
    for (std::size_t i = 0; i < a.size(); ++i)
        comps.emplace_back(a[i], stabs[i].first, stabs[i].second);
    return ChainSurgery(std::move(comps));
}

// Linking matrix of the chain: diagonal -a_i, 1 at |i-j| = 1.
inline IntMatrix linking_matrix(const ChainSurgery& chain) {
    const std::size_t n = chain.length();
    return IntMatrix::build(n, n, [&](std::size_t i, std::size_t j) -> Int {
        if (i == j) return Int(-chain.components()[i].a);
        if (i + 1 == j || j + 1 == i) return Int(1);
        return Int(0);
    });
}

enum class StructureKind { UniversallyTight, VirtuallyOvertwisted };

inline const char* to_string(StructureKind k) {
    return k == StructureKind::UniversallyTight ? "universally-tight" : "virtually-overtwisted";
}

// Universally tight iff the zig-zags sit on one side only: at most one
// stabilization sign occurs across the whole chain. Components with a = 2
// carry no stabilizations and are sign-neutral.
inline StructureKind classify_structure(const ChainSurgery& chain) {
    bool has_plus = false, has_minus = false;
    for (const auto& c : chain.components()) {
        has_plus = has_plus || c.splus > 0;
        has_minus = has_minus || c.sminus > 0;
    }
    return (has_plus && has_minus) ? StructureKind::VirtuallyOvertwisted
                                   : StructureKind::UniversallyTight;
}

// One tight structure per choice of stabilization split; rot_i ranges over
// {-(a_i-2), -(a_i-2)+2, ..., a_i-2}. Contactomorphism classes are the
// orbits of rot -> -rot.
struct StructureEntry {
    std::vector<long long> rot;
    StructureKind kind;
    std::size_t contactomorphism_class; // index into class_representatives
};

struct StructureEnumeration {
    std::vector<StructureEntry> entries;              // lexicographic in rot
    std::vector<std::size_t> class_representatives;   // entry index of first member
};

inline ChainSurgery chain_from_rot(const ContinuedFraction& cf, const std::vector<long long>& rot) {
    std::vector<LegendrianComponent> comps;
    for (std::size_t i = 0; i < cf.length(); ++i) {
        const long long a = cf.terms()[i];
        comps.emplace_back(a, (a - 2 + rot[i]) / 2, (a - 2 - rot[i]) / 2);
    }
    return ChainSurgery(std::move(comps));
}

inline StructureEnumeration enumerate_structures(const ContinuedFraction& cf) {
    const std::size_t n = cf.length();
    StructureEnumeration out;

    std::vector<long long> rot(n);
    for (std::size_t i = 0; i < n; ++i) rot[i] = -(cf.terms()[i] - 2);

    for (;;) {
        out.entries.push_back(StructureEntry{rot, classify_structure(chain_from_rot(cf, rot)), 0});
        // Odometer over rot values, step 2 per component.
        bool advanced = false;
        std::size_t i = n;
        while (i-- > 0) {
            if (rot[i] + 2 <= cf.terms()[i] - 2) {
                rot[i] += 2;
                advanced = true;
                break;
            }
            rot[i] = -(cf.terms()[i] - 2);
        }
        if (!advanced) break;
    }

    // Pair each entry with its negation.
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        auto neg = out.entries[i].rot;
        for (auto& r : neg) r = -r;
        const auto it =
            std::find_if(out.entries.begin(), out.entries.end(),
                         [&](const StructureEntry& e) { return e.rot == neg; });
        const std::size_t j = static_cast<std::size_t>(it - out.entries.begin());
        if (j >= i) {
            out.entries[i].contactomorphism_class = out.class_representatives.size();
            if (j > i) out.entries[j].contactomorphism_class = out.class_representatives.size();
            out.class_representatives.push_back(i);
        }
    }
    return out;
}

// Data of the d3 formula: intersection form Q of the filling, rotation
// vector, Euler characteristic and signature.
struct D3Input {
    IntMatrix Q;
    std::vector<Int> rot;
    long long chi;
    long long sigma;
};

// d3 = (rot.Q^{-1}.rot - 3*sigma - 2*chi)/4, exactly. This convention has
// no correction term because the library only models contact (-1)-surgery.
inline Rational d3(const D3Input& input) {
    if (!input.Q.is_square() || !input.Q.is_symmetric())
        throw NotSymmetric("d3 needs a symmetric intersection form");
    if (input.rot.size() != input.Q.rows()) throw InvalidInput("d3 needs dim(Q) = len(rot)");
    const auto x = solve_rational(input.Q, input.rot); // throws SingularMatrix
    Rational c1sq = 0;
    for (std::size_t i = 0; i < x.size(); ++i) c1sq += Rational(input.rot[i]) * x[i];
    return (c1sq - 3 * Rational(input.sigma) - 2 * Rational(input.chi)) / 4;
}

// Package a chain: Q is the linking matrix, chi counts the 0-handle plus one
// 2-handle per component, sigma is computed exactly from Q.
inline D3Input d3_input_of_chain(const ChainSurgery& chain) {
    IntMatrix q = linking_matrix(chain);
    std::vector<Int> rot;
    for (const auto& c : chain.components()) rot.emplace_back(c.rot());
    const long long chi = static_cast<long long>(chain.length()) + 1;
    const long long sigma = signature(q);
    return D3Input{std::move(q), std::move(rot), chi, sigma};
}

inline Rational d3_of_chain(const ChainSurgery& chain) { return d3(d3_input_of_chain(chain)); }

} // namespace hopffill
