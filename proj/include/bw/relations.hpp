#pragma once

#include <optional>
#include <vector>

#include "bw/combinatorics.hpp"

namespace bw {

/* One monomial of a quadratic relation: coeff * Delta^a * Delta^b. */
struct RelationTerm {
    int coeff;
    Partition a, b;
};

/* A homogeneous quadratic relation among Plucker coordinates, indexed by
 * partitions (the indexing is the one where a sorted column set
 * (i_1 < ... < i_d) of a d x m matrix corresponds to the partition
 * (i_d - d, ..., i_1 - 1)).  Every term satisfies |a| + |b| constant. */
struct PluckerRelation {
    std::vector<RelationTerm> terms;
};

enum class RelationFamily { all, single_column, single_row };

/* The relation generated by a pair of partitions (lam from the rank-(d+1)
 * index, mu from the rank-(d-1) index), restricted to the d x (m-d) box.
 * Returns nullopt when the restriction is syntactically trivial, i.e. the
 * terms cancel pairwise under commutative collapse. */
std::optional<PluckerRelation> plucker_relation_for(const Partition& lam, const Partition& mu,
                                                    int d, int m);

/* All non-trivial relations for Gr(d,m) of the requested family, in a
 * deterministic order.  Relations whose commutatively-collapsed,
 * sign-normalized form coincides are emitted once (the first generated
 * representative is kept, so printed signs match the generating pair). */
std::vector<PluckerRelation> plucker_relations(int d, int m, RelationFamily family);

/* Canonical signature used for de-duplication; exposed for tests. */
std::vector<RelationTerm> relation_signature(const PluckerRelation& r);

}  // namespace bw
