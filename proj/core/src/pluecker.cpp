#include "adjalex/pluecker.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

#include "adjalex/error.hpp"

namespace adjalex {

long BranchProfile::mu() const {
    std::vector<std::size_t> all(branches.size());
    std::iota(all.begin(), all.end(), 0);
    return milnor_of(all);
}

long BranchProfile::milnor_of(const std::vector<std::size_t>& subset) const {
    if (subset.empty()) return 0;
    long m = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        m += branches[subset[i]].mu;
        for (std::size_t j = i + 1; j < subset.size(); ++j) m += 2 * intersection[subset[i]][subset[j]];
    }
    return m - static_cast<long>(subset.size()) + 1;
}

EulerVerdict euler_check(long d, long mu, long r_loc) {
    EulerVerdict v;
    v.chi = d * (3 - d) + mu + r_loc - 1;
    v.feasible = v.chi <= 2;
    return v;
}

EulerVerdict euler_check(long d, const std::vector<SingularityRecord>& assigned) {
    EulerVerdict v;
    v.chi = d * (3 - d);
    for (const auto& rec : assigned) v.chi += rec.mu + rec.r_loc - 1;
    v.feasible = v.chi <= 2;
    return v;
}

BranchProfile brieskorn_profile(long p, long q) {
    require(p >= 1 && q >= 1, ErrorKind::Precondition, "Brieskorn exponents must be positive");
    long g = std::gcd(p, q);
    long a = p / g, b = q / g;
    BranchProfile prof;
    std::ostringstream name;
    name << "B" << a << "," << b;
    for (long i = 0; i < g; ++i) prof.branches.push_back({name.str(), (a - 1) * (b - 1), 1});
    prof.intersection.assign(g, std::vector<long>(g, a * b));
    for (long i = 0; i < g; ++i) prof.intersection[i][i] = 0;
    return prof;
}

BranchProfile compose_profiles(const BranchProfile& a, const BranchProfile& b, long cross) {
    BranchProfile out;
    out.branches = a.branches;
    out.branches.insert(out.branches.end(), b.branches.begin(), b.branches.end());
    std::size_t na = a.branches.size(), n = out.branches.size();
    out.intersection.assign(n, std::vector<long>(n, cross));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i < na && j < na) out.intersection[i][j] = a.intersection[i][j];
            else if (i >= na && j >= na) out.intersection[i][j] = b.intersection[i - na][j - na];
        }
        out.intersection[i][i] = 0;
    }
    return out;
}

BranchProfile parse_profile(const std::string& text) {
    static const std::regex term(R"(\s*B\s*(\d+)\s*,\s*(\d+)\s*)");
    std::string s = text;
    for (const std::string sep : {"∘", "*", "o"}) {
        std::size_t pos;
        while ((pos = s.find(sep)) != std::string::npos) s.replace(pos, sep.size(), "|");
    }
    std::vector<std::pair<long, long>> terms;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, '|')) {
        std::smatch m;
        require(std::regex_match(piece, m, term), ErrorKind::Syntax, "bad singularity type '" + text + "'");
        terms.emplace_back(std::stol(m[1]), std::stol(m[2]));
    }
    require(!terms.empty(), ErrorKind::Syntax, "empty singularity type");
    BranchProfile prof = brieskorn_profile(terms[0].first, terms[0].second);
    std::vector<std::pair<long, long>> seen{terms[0]};
    for (std::size_t t = 1; t < terms.size(); ++t) {
        auto [c, d] = terms[t];
        BranchProfile next = brieskorn_profile(c, d);
        long g2 = std::gcd(c, d);
        // cross numbers are uniform only against a single previous term
        require(seen.size() == 1, ErrorKind::Unsupported, "at most two Brieskorn terms are supported");
        auto [a, b] = seen[0];
        long g1 = std::gcd(a, b);
        long total = std::min(a * d, b * c);
        require(total % (g1 * g2) == 0, ErrorKind::Precondition, "cross intersection does not split evenly");
        prof = compose_profiles(prof, next, total / (g1 * g2));
        seen.push_back(terms[t]);
    }
    return prof;
}

SingularityRecord record_from_profile(const std::string& label, const BranchProfile& profile) {
    SingularityRecord rec;
    rec.label = label;
    rec.mu = profile.mu();
    rec.r_loc = static_cast<long>(profile.branches.size());
    rec.profile = profile;
    return rec;
}

std::string partition_string(const std::vector<long>& degrees) {
    std::string s = "{";
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
    return s + "}";
}

namespace {

struct Unit {
    int point;
    int index;  // branch index, or -1 for an unsplit record
};

void partitions(long rest, long max_part, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(rest, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(rest - p, p, cur, out);
        cur.pop_back();
    }
}

SplitHypothesis evaluate(const std::vector<long>& degrees, const std::vector<SingularityRecord>& records,
                         const std::vector<Unit>& units, const std::vector<int>& comp) {
    SplitHypothesis h;
    h.degrees = degrees;
    std::size_t nc = degrees.size();
    h.assign.resize(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        std::size_t n = records[i].profile ? records[i].profile->branches.size() : 1;
        h.assign[i].assign(n, -1);
    }
    for (std::size_t u = 0; u < units.size(); ++u)
        h.assign[units[u].point][std::max(units[u].index, 0)] = comp[u];

    h.components.resize(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        auto& cc = h.components[c];
        cc.degree = degrees[c];
        cc.chi = degrees[c] * (3 - degrees[c]);
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& rec = records[i];
            std::vector<std::size_t> mine;
            for (std::size_t b = 0; b < h.assign[i].size(); ++b)
                if (h.assign[i][b] == static_cast<int>(c)) mine.push_back(b);
            if (mine.empty()) continue;
            long mu, r;
            if (rec.profile) {
                mu = rec.profile->milnor_of(mine);
                r = static_cast<long>(mine.size());
                for (std::size_t b : mine) {
                    cc.branches.push_back(rec.label + ":" + std::to_string(b));
                    if (rec.profile->branches[b].min_degree > cc.degree) cc.failure = "degree";
                }
            } else {
                mu = rec.mu;
                r = rec.r_loc;
                cc.branches.push_back(rec.label);
            }
            cc.mu += mu;
            cc.r_loc += r;
            cc.chi += mu + r - 1;
        }
        if (cc.failure.empty() && cc.chi > 2) cc.failure = "euler";
        cc.feasible = cc.failure.empty();
        h.feasible = h.feasible && cc.feasible;
    }
    for (std::size_t c1 = 0; c1 < nc; ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < nc; ++c2) {
            long I = 0;
            for (std::size_t i = 0; i < records.size(); ++i) {
                if (!records[i].profile) continue;
                const auto& A = h.assign[i];
                for (std::size_t a = 0; a < A.size(); ++a)
                    for (std::size_t b = 0; b < A.size(); ++b)
                        if (A[a] == static_cast<int>(c1) && A[b] == static_cast<int>(c2))
                            I += records[i].profile->intersection[a][b];
            }
            long bound = degrees[c1] * degrees[c2];
            if (I > bound) {
                h.bezout_failures.push_back(std::to_string(c1) + "-" + std::to_string(c2) + ": " +
                                            std::to_string(I) + " > " + std::to_string(bound));
                h.feasible = false;
            }
        }
    }
    return h;
}

}  // namespace

std::vector<PartitionVerdict> enumerate_splittings(long d, const std::vector<SingularityRecord>& records) {
    require(d >= 1, ErrorKind::Precondition, "degree must be positive");
    std::vector<Unit> units;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        require(rec.mu >= 0 && rec.r_loc >= 1, ErrorKind::Precondition, "record '" + rec.label + "' needs mu >= 0, r >= 1");
        if (rec.profile) {
            const auto& p = *rec.profile;
            require(!p.branches.empty() && p.intersection.size() == p.branches.size(), ErrorKind::Precondition,
                    "record '" + rec.label + "' has a malformed branch profile");
            for (std::size_t b = 0; b < p.branches.size(); ++b) {
                require(p.intersection[b].size() == p.branches.size(), ErrorKind::Precondition,
                        "record '" + rec.label + "' has a malformed intersection matrix");
                units.push_back({static_cast<int>(i), static_cast<int>(b)});
            }
        } else {
            units.push_back({static_cast<int>(i), -1});
        }
    }

    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    partitions(d, d, cur, parts);

    std::vector<PartitionVerdict> out;
    for (const auto& degrees : parts) {
        PartitionVerdict pv;
        pv.degrees = degrees;
        std::size_t nc = degrees.size();
        // group[c]: first component with the same degree
        std::vector<std::size_t> group(nc);
        for (std::size_t c = 0; c < nc; ++c) group[c] = (c > 0 && degrees[c] == degrees[c - 1]) ? group[c - 1] : c;

        std::vector<int> comp(units.size(), -1);
        std::vector<std::size_t> used(nc, 0);  // per group leader: components opened so far
        auto rec = [&](auto&& self, std::size_t u) -> void {
            if (u == units.size()) {
                ++pv.assignments;
                auto h = evaluate(degrees, records, units, comp);
                if (h.feasible) pv.survivors.push_back(std::move(h));
                else if (!pv.witness) pv.witness = std::move(h);
                return;
            }
            for (std::size_t c = 0; c < nc; ++c) {
                std::size_t lead = group[c];
                std::size_t slot = c - lead;
                if (slot > used[lead]) continue;
                bool opened = slot == used[lead];
                if (opened) ++used[lead];
                comp[u] = static_cast<int>(c);
                self(self, u + 1);
                if (opened) --used[lead];
            }
        };
        rec(rec, 0);
        out.push_back(std::move(pv));
    }
    return out;
}

}  // namespace adjalex
