#pragma once

#include "schubmf/demolition.hpp"
#include "schubmf/lr.hpp"
#include "schubmf/partition.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace schubmf::testing {

/// Every non-overlapping (lam, mu) pair inside the frame, lam-major
/// lexicographic order.
inline std::vector<std::pair<Partition, Partition>> richardson_pairs(RectangleFrame frame) {
    std::vector<std::pair<Partition, Partition>> out;
    const std::vector<Partition> shapes = all_partitions_in(frame);
    for (const Partition& lam : shapes)
        for (const Partition& mu : shapes)
            if (!overlaps(lam, mu, frame)) out.emplace_back(lam, mu);
    return out;
}

/// Memoizing wrapper around the brute-force multiplicity test; the
/// exhaustive sweeps revisit the same demolished quadruples constantly.
class MultiplicityOracle {
public:
    bool operator()(const RichardsonQuadruple& q) {
        return (*this)(q.lam(), q.mu(), q.frame());
    }

    bool operator()(const Partition& lam, const Partition& mu, RectangleFrame frame) {
        Key key{lam.parts(), mu.parts(), frame.rows, frame.cols};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        bool result = has_multiplicity_bruteforce(lam, mu, frame);
        cache_.emplace(std::move(key), result);
        return result;
    }

private:
    using Key = std::tuple<std::vector<int>, std::vector<int>, int, int>;
    std::map<Key, bool> cache_;
};

} // namespace schubmf::testing
