#pragma once

#include <cstdint>
#include <vector>

#include "k1k2/em.hpp"
#include "k1k2/f2.hpp"

namespace k1k2::margolis {

/// Per-degree census of the Q1 action on H*(K(Z/2,2)).
struct Report {
    int max_degree = 0;                        // degrees covered: 0 .. max_degree
    std::vector<std::int64_t> total_dims;      // dim H^n
    std::vector<std::int64_t> homology_dims;   // dim (ker Q1 / im Q1) in degree n
    std::vector<std::int64_t> free_counts;     // free E(Q1)-summand generators born in degree n
    std::vector<std::vector<em::CohomologyClass>> representatives;  // filled on request
    bool operator==(const Report&) const = default;
};

/// Matrix of Q1 from basis(n) to basis(n+3); columns follow the canonical
/// monomial order of degree n. Requires n + 3 <= N.
f2::Matrix q1_matrix(const em::Algebra& algebra, int n);

/// dim ker(q1_matrix(n)) - dim im(q1_matrix(n-3)); degrees 0..2 have no
/// incoming differential. Requires 0 <= n <= N - 3.
std::int64_t homology_dim(const em::Algebra& algebra, int n);

/// rank(q1_matrix(n)): the number of free E(Q1)-summands generated in degree
/// n, which is also the count of filtration-0 classes of k(1)_n(K(Z/2,2)).
std::int64_t free_generator_count(const em::Algebra& algebra, int n);

/// Kernel vectors reduced modulo the image, as classes; exactly
/// homology_dim(n) of them.
std::vector<em::CohomologyClass> homology_representatives(const em::Algebra& algebra, int n);

/// Census over degrees 0..up_to (up_to <= N - 3), each Q1 matrix built once.
Report build_report(const em::Algebra& algebra, int up_to, bool with_representatives = false);

}  // namespace k1k2::margolis
