#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hopffill/errors.hpp"
#include "hopffill/openbook.hpp"

namespace hopffill {

enum class SymmetryMode { Raw, UpToProfileSymmetry };

struct ConfigQuery {
    PlanarPage page;
    MultiplicityProfile profile;
    SymmetryMode symmetry = SymmetryMode::UpToProfileSymmetry;

    ConfigQuery(PlanarPage page_, MultiplicityProfile profile_,
                SymmetryMode symmetry_ = SymmetryMode::UpToProfileSymmetry)
        : page(std::move(page_)), profile(std::move(profile_)), symmetry(symmetry_) {
        if (profile.labels() != page.holes())
            throw InvalidInput("profile must be keyed exactly by the page's holes");
    }
};

struct ConfigResult {
    std::vector<Factorization> configurations; // canonical order, no duplicates
    std::uint64_t count_raw = 0;
    std::uint64_t count_up_to_symmetry = 0;
};

inline bool verify_config(const Factorization& f, const MultiplicityProfile& profile) {
    return multiplicity_profile(f) == profile;
}

// Hole permutations preserving the profile, found by backtracking with
// single- and pair-multiplicity consistency checks at every level. The
// identity is always included.
inline std::vector<std::vector<std::size_t>>
profile_automorphisms(const MultiplicityProfile& profile) {
    const std::size_t n = profile.hole_count();
    std::vector<std::vector<std::size_t>> group;
    std::vector<std::size_t> image(n);
    std::vector<bool> used(n, false);

    auto extend = [&](auto&& self, std::size_t h) -> void {
        if (h == n) {
            group.push_back(image);
            return;
        }
        for (std::size_t target = 0; target < n; ++target) {
            if (used[target] || profile.single(target) != profile.single(h)) continue;
            bool ok = true;
            for (std::size_t g = 0; g < h && ok; ++g)
                ok = profile.joint(image[g], target) == profile.joint(g, h);
            if (!ok) continue;
            used[target] = true;
            image[h] = target;
            self(self, h + 1);
            used[target] = false;
        }
    };
    extend(extend, 0);
    return group;
}

namespace detail {

inline Curve permuted(const Curve& c, const std::vector<std::size_t>& perm) {
    std::uint64_t bits = 0;
    for (std::size_t h : c.indices()) bits |= (std::uint64_t{1} << perm[h]);
    return Curve(bits);
}

inline Factorization permuted(const Factorization& f, const std::vector<std::size_t>& perm) {
    std::vector<std::pair<Curve, long long>> curves;
    for (const auto& [curve, mult] : f.curves()) curves.emplace_back(permuted(curve, perm), mult);
    return Factorization(f.page(), curves);
}

// Depth-first search over multisets of curves listed in non-decreasing
// canonical order. Budgets are the remaining single and joint
// multiplicities; a partial multiset survives only while every budget stays
// non-negative and every joint budget is still coverable, i.e.
// r(h,h') <= min(r(h), r(h')).
class ConfigSearch {
public:
    ConfigSearch(const PlanarPage& page, const MultiplicityProfile& profile)
        : page_(page), holes_(page.hole_count()) {
        single_.resize(holes_);
        joint_.assign(holes_, std::vector<long long>(holes_, 0));
        for (std::size_t h = 0; h < holes_; ++h) {
            single_[h] = profile.single(h);
            for (std::size_t g = 0; g < holes_; ++g) joint_[h][g] = profile.joint(h, g);
        }

        // All nonempty subsets in canonical curve order; min_hole is
        // non-decreasing along this list.
        const std::uint64_t limit = holes_ >= 64 ? 0 : (std::uint64_t{1} << holes_);
        for (std::uint64_t bits = 1; bits < limit; ++bits) subsets_.emplace_back(bits);
        std::sort(subsets_.begin(), subsets_.end());
    }

    std::vector<Factorization> run() {
        chosen_.clear();
        results_.clear();
        descend(0);
        return std::move(results_);
    }

private:
    const PlanarPage& page_;
    std::size_t holes_;
    std::vector<long long> single_;
    std::vector<std::vector<long long>> joint_;
    std::vector<Curve> subsets_;
    std::vector<std::pair<Curve, long long>> chosen_;
    std::vector<Factorization> results_;

    bool feasible(const Curve& c) const {
        const auto idx = c.indices();
        for (std::size_t a = 0; a < idx.size(); ++a) {
            if (single_[idx[a]] < 1) return false;
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                if (joint_[idx[a]][idx[b]] < 1) return false;
        }
        return true;
    }

    void apply(const Curve& c, long long delta) {
        const auto idx = c.indices();
        for (std::size_t a = 0; a < idx.size(); ++a) {
            single_[idx[a]] += delta;
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                joint_[idx[a]][idx[b]] += delta;
                joint_[idx[b]][idx[a]] += delta;
            }
        }
    }

    // After taking one copy of c, a pair budget through a hole of c must not
    // exceed the hole's remaining single budget.
    bool consistent_after(const Curve& c) const {
        for (std::size_t h : c.indices())
            for (std::size_t g = 0; g < holes_; ++g)
                if (g != h && joint_[h][g] > std::min(single_[h], single_[g])) return false;
        return true;
    }

    bool satisfied() const {
        for (std::size_t h = 0; h < holes_; ++h) {
            if (single_[h] != 0) return false;
            for (std::size_t g = h + 1; g < holes_; ++g)
                if (joint_[h][g] != 0) return false;
        }
        return true;
    }

    void record() { results_.emplace_back(page_, chosen_); }

    void descend(std::size_t start) {
        // Smallest hole still owed twists; all curves through it have
        // min_hole <= h_min, and the canonical order walks min_hole upward,
        // so the candidate window below is exact.
        std::size_t h_min = holes_;
        for (std::size_t h = 0; h < holes_; ++h)
            if (single_[h] > 0) {
                h_min = h;
                break;
            }
        if (h_min == holes_) {
            if (satisfied() && !chosen_.empty()) record();
            return;
        }

        for (std::size_t i = start; i < subsets_.size(); ++i) {
            const Curve& c = subsets_[i];
            if (c.min_hole() > h_min) break; // nothing later can pay h_min's budget
            if (!feasible(c)) continue;
            apply(c, -1);
            if (consistent_after(c)) {
                chosen_.emplace_back(c, 1);
                descend(i); // same curve may repeat: multiset
                chosen_.pop_back();
            }
            apply(c, +1);
        }
    }
};

} // namespace detail

// Exhaustive enumeration of the curve multisets realizing a profile. Raw
// results come out in canonical order; symmetry reduction keeps the
// lexicographically smallest member of each orbit under the profile's hole
// symmetries.
inline ConfigResult enumerate_configs(const ConfigQuery& q) {
    if (q.page.hole_count() > 12)
        throw BoundsExceeded("configuration search supports at most 12 holes");
    if (q.profile.max_single() > 8)
        throw BoundsExceeded("configuration search supports multiplicities up to 8");

    detail::ConfigSearch search(q.page, q.profile);
    std::vector<Factorization> raw = search.run();

    ConfigResult result;
    result.count_raw = raw.size();

    const auto group = profile_automorphisms(q.profile);
    std::vector<Factorization> representatives;
    for (const auto& config : raw) {
        const Factorization* rep = &config;
        std::vector<Factorization> images;
        images.reserve(group.size());
        for (const auto& perm : group) {
            images.push_back(detail::permuted(config, perm));
            if (images.back() < *rep) rep = &images.back();
        }
        if (std::find(representatives.begin(), representatives.end(), *rep) ==
            representatives.end())
            representatives.push_back(*rep);
    }
    result.count_up_to_symmetry = representatives.size();

    if (q.symmetry == SymmetryMode::Raw) {
        result.configurations = std::move(raw);
    } else {
        std::sort(representatives.begin(), representatives.end());
        result.configurations = std::move(representatives);
    }
    return result;
}

} // namespace hopffill
