#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrw/activity.hpp"
#include "lrw/encoding.hpp"
#include "lrw/width.hpp"

namespace lrw {

// One (Class, NC) equivalence class together with its cotree, which is the
// F-tree restricted to the class (meets of members become the inner nodes,
// each marked union or join by the delegation parity of a witness pair).
struct CographClass {
    std::vector<int> vertices; // positions, increasing
    Cotree cotree;
    int height = 0;
};

struct CographPartition {
    int r = 0;
    std::vector<CographClass> classes; // ordered by smallest member
    int max_height = 0;
};

// Groups positions by equality of (Class, NC) and certifies each class with
// a cotree of height <= r+2. InvariantError (with the witness pairs) if two
// pairs meeting at the same F-tree node disagree on adjacency.
CographPartition partition(const ActivityData& ad, const ColoredOrder& labels);

struct ChiBoundReport {
    int class_count = 0;
    BigInt f_r;
    bool class_count_ok = false;
    int max_cotree_height = 0;
    bool height_ok = false;
    std::optional<int> omega;
    std::optional<int> chi;
    std::optional<BigInt> chi_bound; // f(r) * omega
    std::optional<bool> chi_bound_ok;
    bool partial = false; // some exact value skipped by a guard
    struct PerClass {
        int size = 0;
        int height = 0;
        std::optional<bool> perfect; // chi(G[X]) == omega(G[X])
    };
    std::vector<PerClass> per_class;
};

ChiBoundReport chi_bound_report(const Graph& g, const CographPartition& p,
                                int omega_guard = kDefaultCliqueGuard,
                                int chi_guard = kDefaultChromaticGuard);

} // namespace lrw
