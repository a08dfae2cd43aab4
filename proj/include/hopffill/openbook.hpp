#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopffill/errors.hpp"

namespace hopffill {

// Genus-zero page with labeled interior holes. The outer boundary component
// is implicit and never appears as a hole. Hole order is fixed at
// construction and defines the canonical order on curves.
class PlanarPage {
public:
    static constexpr std::size_t kMaxHoles = 64;

    explicit PlanarPage(std::vector<std::string> holes) : holes_(std::move(holes)) {
        if (holes_.empty()) throw InvalidInput("page needs at least one hole");
        if (holes_.size() > kMaxHoles) throw InvalidInput("too many holes on a page");
        for (std::size_t i = 0; i < holes_.size(); ++i)
            for (std::size_t j = i + 1; j < holes_.size(); ++j)
                if (holes_[i] == holes_[j])
                    throw InvalidInput("duplicate hole label: " + holes_[i]);
    }

    // Page of the rolled-up chain: hole s from the starting annulus, then
    // k positive-stabilization holes p1..pk and l negative ones n1..nl.
    static PlanarPage canonical(std::size_t k, std::size_t l) {
        std::vector<std::string> labels{"s"};
        for (std::size_t i = 1; i <= k; ++i) labels.push_back("p" + std::to_string(i));
        for (std::size_t j = 1; j <= l; ++j) labels.push_back("n" + std::to_string(j));
        return PlanarPage(std::move(labels));
    }

    std::size_t hole_count() const { return holes_.size(); }
    const std::vector<std::string>& holes() const { return holes_; }
    const std::string& label(std::size_t i) const { return holes_[i]; }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < holes_.size(); ++i)
            if (holes_[i] == label) return i;
        throw InvalidInput("unknown hole label: " + label);
    }

    bool operator==(const PlanarPage& o) const { return holes_ == o.holes_; }
    bool operator!=(const PlanarPage& o) const { return !(*this == o); }

private:
    std::vector<std::string> holes_;
};

// A curve on a planar page, recorded by its homology class: the set of holes
// it encloses. A curve around every hole is parallel to the outer boundary;
// a curve around one hole is boundary-parallel around it.
class Curve {
public:
    Curve() : bits_(0) {}
    explicit Curve(std::uint64_t bits) : bits_(bits) {}

    static Curve of_indices(std::initializer_list<std::size_t> idx) {
        Curve c;
        for (std::size_t i : idx) c.bits_ |= (std::uint64_t{1} << i);
        return c;
    }

    static Curve of_labels(const PlanarPage& page, const std::vector<std::string>& labels) {
        Curve c;
        for (const auto& l : labels) c.bits_ |= (std::uint64_t{1} << page.index_of(l));
        return c;
    }

    static Curve all_holes(const PlanarPage& page) {
        return Curve(page.hole_count() == kWordBits
                         ? ~std::uint64_t{0}
                         : (std::uint64_t{1} << page.hole_count()) - 1);
    }

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    bool contains(std::size_t hole) const { return (bits_ >> hole) & 1; }
    std::size_t size() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }
    std::size_t min_hole() const {
        return bits_ == 0 ? kWordBits : static_cast<std::size_t>(__builtin_ctzll(bits_));
    }

    bool contains_all(const Curve& o) const { return (bits_ & o.bits_) == o.bits_; }
    bool intersects(const Curve& o) const { return (bits_ & o.bits_) != 0; }
    Curve united(const Curve& o) const { return Curve(bits_ | o.bits_); }
    Curve intersected(const Curve& o) const { return Curve(bits_ & o.bits_); }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::uint64_t b = bits_; b;) {
            out.push_back(static_cast<std::size_t>(__builtin_ctzll(b)));
            b &= b - 1;
        }
        return out;
    }

    std::string str(const PlanarPage& page) const {
        std::string s = "{";
        bool first = true;
        for (std::size_t i : indices()) {
            if (!first) s += ',';
            s += page.label(i);
            first = false;
        }
        return s + "}";
    }

    bool operator==(const Curve& o) const { return bits_ == o.bits_; }
    bool operator!=(const Curve& o) const { return bits_ != o.bits_; }

    // Canonical order: lexicographic on the sorted hole-index lists, so
    // {0} < {0,1} < {0,2} < {1}. Total on nonempty subsets.
    bool operator<(const Curve& o) const {
        std::uint64_t a = bits_, b = o.bits_;
        while (a && b) {
            const int ia = __builtin_ctzll(a), ib = __builtin_ctzll(b);
            if (ia != ib) return ia < ib;
            a &= a - 1;
            b &= b - 1;
        }
        return a == 0 && b != 0; // shorter prefix first
    }

private:
    static constexpr std::size_t kWordBits = 64;
    std::uint64_t bits_;
};

// Positive factorization of a planar monodromy: a multiset of curves, one
// positive Dehn twist per occurrence. Stored canonically as a sorted map
// curve -> multiplicity, so equal factorizations compare equal.
class Factorization {
public:
    using CurveMap = std::map<Curve, long long>;

    Factorization(PlanarPage page, const std::vector<std::pair<Curve, long long>>& curves)
        : page_(std::move(page)) {
        for (const auto& [curve, mult] : curves) add(curve, mult);
        if (curves_.empty()) throw InvalidInput("factorization needs at least one twist");
    }

    const PlanarPage& page() const { return page_; }
    const CurveMap& curves() const { return curves_; }

    long long multiplicity(const Curve& c) const {
        const auto it = curves_.find(c);
        return it == curves_.end() ? 0 : it->second;
    }

    long long twist_count() const {
        long long n = 0;
        for (const auto& [curve, mult] : curves_) n += mult;
        return n;
    }

    std::size_t distinct_curve_count() const { return curves_.size(); }

    // Sum of indicator vectors over all twist occurrences (the total class
    // in H_1 of the page), indexed by hole.
    std::vector<long long> total_homology_class() const {
        std::vector<long long> total(page_.hole_count(), 0);
        for (const auto& [curve, mult] : curves_)
            for (std::size_t h : curve.indices()) total[h] += mult;
        return total;
    }

    Factorization with_curves(const std::vector<std::pair<Curve, long long>>& delta) const {
        Factorization f = *this;
        for (const auto& [curve, mult] : delta) f.add(curve, mult);
        if (f.curves_.empty()) throw InvalidInput("factorization needs at least one twist");
        return f;
    }

    bool operator==(const Factorization& o) const {
        return page_ == o.page_ && curves_ == o.curves_;
    }
    bool operator!=(const Factorization& o) const { return !(*this == o); }

    // For deterministic ordering of configuration lists.
    bool operator<(const Factorization& o) const {
        return std::lexicographical_compare(
            curves_.begin(), curves_.end(), o.curves_.begin(), o.curves_.end(),
            [](const auto& x, const auto& y) {
                if (x.first != y.first) return x.first < y.first;
                return x.second > y.second; // more twists on an earlier curve first
            });
    }

    std::string str() const {
        std::string s;
        for (const auto& [curve, mult] : curves_) {
            if (!s.empty()) s += ' ';
            s += curve.str(page_);
            if (mult > 1) s += "x" + std::to_string(mult);
        }
        return s;
    }

private:
    void add(const Curve& curve, long long mult) {
        if (curve.empty()) throw InvalidInput("curve must enclose at least one hole");
        if (!Curve::all_holes(page_).contains_all(curve))
            throw InvalidInput("curve encloses a hole outside the page");
        const long long updated = (curves_[curve] += mult);
        if (updated < 0) throw InvalidInput("negative twist multiplicity");
        if (updated == 0) curves_.erase(curve);
    }

    PlanarPage page_;
    CurveMap curves_;
};

// Monodromy of the rolled-up two-component chain on the canonical page:
// one twist around everything (alpha), one around s and the positive holes
// (beta), one around s and the negative holes (gamma), and one boundary-
// parallel twist per stabilization hole. For a_i = 2 the corresponding side
// has no holes and beta or gamma collapses onto {s}.
inline Factorization canonical_hopf_factorization(long long a1, long long a2) {
    if (a1 < 2 || a2 < 2) throw InvalidInput("canonical factorization requires a1, a2 >= 2");
    const std::size_t k = static_cast<std::size_t>(a1 - 2);
    const std::size_t l = static_cast<std::size_t>(a2 - 2);
    PlanarPage page = PlanarPage::canonical(k, l);

    Curve alpha = Curve::all_holes(page);
    Curve beta, gamma;
    std::vector<std::pair<Curve, long long>> curves;
    beta = Curve::of_indices({0});
    gamma = Curve::of_indices({0});
    for (std::size_t i = 1; i <= k; ++i) beta = beta.united(Curve::of_indices({i}));
    for (std::size_t j = 1; j <= l; ++j) gamma = gamma.united(Curve::of_indices({k + j}));

    curves.emplace_back(alpha, 1);
    curves.emplace_back(beta, 1);
    curves.emplace_back(gamma, 1);
    for (std::size_t i = 1; i <= k + l; ++i) curves.emplace_back(Curve::of_indices({i}), 1);
    return Factorization(std::move(page), curves);
}

// Twist multiplicities around single holes and pairs of holes, the capping
// invariants. Joint multiplicities are stored densely for every pair.
class MultiplicityProfile {
public:
    MultiplicityProfile(const PlanarPage& page, std::vector<long long> single,
                        std::vector<std::vector<long long>> joint)
        : labels_(page.holes()), single_(std::move(single)), joint_(std::move(joint)) {
        const std::size_t n = labels_.size();
        if (single_.size() != n || joint_.size() != n)
            throw InvalidInput("profile dimensions do not match the page");
        for (std::size_t i = 0; i < n; ++i) {
            if (joint_[i].size() != n) throw InvalidInput("profile joint table is ragged");
            if (single_[i] < 0) throw InvalidInput("negative multiplicity");
            for (std::size_t j = 0; j < n; ++j) {
                if (joint_[i][j] != joint_[j][i]) throw InvalidInput("joint table not symmetric");
                if (i != j && joint_[i][j] > std::min(single_[i], single_[j]))
                    throw InvalidInput("joint multiplicity exceeds a single multiplicity");
                if (joint_[i][j] < 0) throw InvalidInput("negative multiplicity");
            }
        }
    }

    std::size_t hole_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    long long single(std::size_t h) const { return single_[h]; }
    long long joint(std::size_t h, std::size_t g) const { return joint_[h][g]; }

    long long max_single() const {
        long long m = 0;
        for (long long v : single_) m = std::max(m, v);
        return m;
    }

    bool operator==(const MultiplicityProfile& o) const {
        return labels_ == o.labels_ && single_ == o.single_ && joint_ == o.joint_;
    }
    bool operator!=(const MultiplicityProfile& o) const { return !(*this == o); }

private:
    std::vector<std::string> labels_;
    std::vector<long long> single_;
    std::vector<std::vector<long long>> joint_;
};

// m(h) counts twist occurrences enclosing h; m(h,h') counts occurrences
// enclosing both. These numbers do not depend on the chosen positive
// factorization of the monodromy, which is what the configuration search
// exploits.
inline MultiplicityProfile multiplicity_profile(const Factorization& f) {
    const std::size_t n = f.page().hole_count();
    std::vector<long long> single(n, 0);
    std::vector<std::vector<long long>> joint(n, std::vector<long long>(n, 0));
    for (const auto& [curve, mult] : f.curves()) {
        const auto idx = curve.indices();
        for (std::size_t a = 0; a < idx.size(); ++a) {
            single[idx[a]] += mult;
            joint[idx[a]][idx[a]] += mult;
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                joint[idx[a]][idx[b]] += mult;
                joint[idx[b]][idx[a]] += mult;
            }
        }
    }
    return MultiplicityProfile(f.page(), std::move(single), std::move(joint));
}

namespace detail {

inline void check_lantern_parts(const PlanarPage& page, const Curve& s1, const Curve& s2,
                                const Curve& s3) {
    if (s1.empty() || s2.empty() || s3.empty())
        throw InvalidInput("lantern parts must be nonempty");
    if (s1.intersects(s2) || s1.intersects(s3) || s2.intersects(s3))
        throw InvalidInput("lantern parts must be pairwise disjoint");
    if (!Curve::all_holes(page).contains_all(s1.united(s2).united(s3)))
        throw InvalidInput("lantern parts must lie on the page");
}

inline void require_curve(const Factorization& f, const Curve& c, const char* role) {
    if (f.multiplicity(c) < 1)
        throw MissingCurve(std::string("lantern needs the ") + role + " curve " +
                           c.str(f.page()) + " in the factorization");
}

} // namespace detail

// Lantern substitution at the homology level: trade one twist around each of
// S1, S2, S3 and one around their union for twists around the three pairwise
// unions. Drops the twist count by exactly one and preserves single and
// joint multiplicities.
inline Factorization lantern_substitute(const Factorization& f, const Curve& s1, const Curve& s2,
                                        const Curve& s3) {
    detail::check_lantern_parts(f.page(), s1, s2, s3);
    const Curve whole = s1.united(s2).united(s3);
    detail::require_curve(f, s1, "S1");
    detail::require_curve(f, s2, "S2");
    detail::require_curve(f, s3, "S3");
    detail::require_curve(f, whole, "S1+S2+S3");

    return f.with_curves({{s1, -1},
                          {s2, -1},
                          {s3, -1},
                          {whole, -1},
                          {s1.united(s2), 1},
                          {s1.united(s3), 1},
                          {s2.united(s3), 1}});
}

// Inverse lantern move. The three arguments must be the pairwise unions
// S1+S2, S1+S3, S2+S3 of disjoint nonempty sets, which are then recovered
// as pairwise intersections.
inline Factorization lantern_unsubstitute(const Factorization& f, const Curve& p12,
                                          const Curve& p13, const Curve& p23) {
    detail::require_curve(f, p12, "S1+S2");
    detail::require_curve(f, p13, "S1+S3");
    detail::require_curve(f, p23, "S2+S3");

    const Curve s1 = p12.intersected(p13);
    const Curve s2 = p12.intersected(p23);
    const Curve s3 = p13.intersected(p23);
    const bool disjoint = !s1.intersects(s2) && !s1.intersects(s3) && !s2.intersects(s3);
    if (!disjoint || s1.empty() || s2.empty() || s3.empty() || s1.united(s2) != p12 ||
        s1.united(s3) != p13 || s2.united(s3) != p23)
        throw InconsistentPairs("classes are not the pairwise unions of disjoint nonempty sets");

    return f.with_curves({{p12, -1},
                          {p13, -1},
                          {p23, -1},
                          {s1, 1},
                          {s2, 1},
                          {s3, 1},
                          {s1.united(s2).united(s3), 1}});
}

} // namespace hopffill
