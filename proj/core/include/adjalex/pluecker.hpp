#pragma once

#include <optional>
#include <string>
#include <vector>

namespace adjalex {

struct LocalBranch {
    std::string type;  // e.g. B29,2 or B1,1 for a smooth branch
    long mu = 0;
    long min_degree = 1;
};

// Branches of one singular point together with their pairwise
// intersection numbers.
struct BranchProfile {
    std::vector<LocalBranch> branches;
    std::vector<std::vector<long>> intersection;  // symmetric, zero diagonal

    long mu() const;
    long milnor_of(const std::vector<std::size_t>& subset) const;
};

struct SingularityRecord {
    std::string label;
    long mu = 0;
    long r_loc = 1;
    std::optional<BranchProfile> profile;  // without one the point moves as a unit
};

struct EulerVerdict {
    long chi = 0;
    bool feasible = true;
};

// d (3 - d) + sum (mu + r - 1), feasible iff at most 2
EulerVerdict euler_check(long d, const std::vector<SingularityRecord>& assigned);
EulerVerdict euler_check(long d, long mu, long r_loc);

// u^p + v^q: gcd(p,q) branches, each B(p/g, q/g)
BranchProfile brieskorn_profile(long p, long q);
// union of two germs; each cross pair meets with the given multiplicity
BranchProfile compose_profiles(const BranchProfile& a, const BranchProfile& b, long cross);
// "B29,2oB6,3", "B20,5", "B15,2*B10,3"; cross terms min(a d, b c) of the Brieskorn models
BranchProfile parse_profile(const std::string& text);
SingularityRecord record_from_profile(const std::string& label, const BranchProfile& profile);

struct ComponentCheck {
    long degree = 0;
    std::vector<std::string> branches;  // "point:index" of every branch carried
    long mu = 0;                        // sum of the local Milnor numbers
    long r_loc = 0;
    long chi = 0;
    bool feasible = true;
    std::string failure;  // euler | degree | empty
};

struct SplitHypothesis {
    std::vector<long> degrees;             // non-increasing
    std::vector<std::vector<int>> assign;  // per point, per unit: component index
    std::vector<ComponentCheck> components;
    std::vector<std::string> bezout_failures;  // "i-j: I > di*dj"
    bool feasible = true;
};

struct PartitionVerdict {
    std::vector<long> degrees;
    std::size_t assignments = 0;
    std::vector<SplitHypothesis> survivors;
    std::optional<SplitHypothesis> witness;  // first refuted assignment when none survives
    bool feasible() const { return !survivors.empty(); }
};

// all partitions of d in lexicographically decreasing order; every unit is
// assigned to one component, equal-degree components are taken up to
// permutation
std::vector<PartitionVerdict> enumerate_splittings(long d, const std::vector<SingularityRecord>& records);

std::string partition_string(const std::vector<long>& degrees);

}  // namespace adjalex
