#include "k1k2/margolis.hpp"

#include <map>
#include <stdexcept>

namespace k1k2::margolis {

f2::Matrix q1_matrix(const em::Algebra& algebra, int n) {
    if (n < 0 || n + 3 > algebra.max_degree())
        throw std::invalid_argument("q1_matrix: degree out of range");
    const auto& domain = algebra.basis(n);
    const auto& codomain = algebra.basis(n + 3);
    f2::Matrix m(codomain.size(), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const em::CohomologyClass image = algebra.q1(domain[c]);
        for (const auto& term : image.terms()) {
            const int r = algebra.basis_index(n + 3, term);
            if (r < 0)
                throw std::logic_error("q1_matrix: image term missing from basis");
            m.set(static_cast<std::size_t>(r), c);
        }
    }
    return m;
}

std::int64_t homology_dim(const em::Algebra& algebra, int n) {
    if (n < 0 || n + 3 > algebra.max_degree())
        throw std::invalid_argument("homology_dim: degree out of range");
    const f2::Matrix outgoing = q1_matrix(algebra, n);
    const auto kernel_dim =
        static_cast<std::int64_t>(outgoing.cols() - f2::rank(outgoing));
    if (n < 3) return kernel_dim;
    return kernel_dim - static_cast<std::int64_t>(f2::rank(q1_matrix(algebra, n - 3)));
}

std::int64_t free_generator_count(const em::Algebra& algebra, int n) {
    return static_cast<std::int64_t>(f2::rank(q1_matrix(algebra, n)));
}

namespace {

// Incremental echelon form keyed by pivot position. Iterating pivots in
// ascending order keeps reduction sound: an xor only introduces bits to the
// right of the pivot it cleared.
struct Echelon {
    std::map<std::size_t, f2::BitVec> rows;

    f2::BitVec reduce(f2::BitVec v) const {
        for (const auto& [pivot, row] : rows)
            if (v.get(pivot)) v.xor_with(row);
        return v;
    }
    // Returns the reduced vector; inserts it when nonzero.
    f2::BitVec insert(f2::BitVec v) {
        v = reduce(std::move(v));
        if (v.any()) rows.emplace(v.first_set(), v);
        return v;
    }
};

}  // namespace

std::vector<em::CohomologyClass> homology_representatives(const em::Algebra& algebra, int n) {
    if (n < 0 || n + 3 > algebra.max_degree())
        throw std::invalid_argument("homology_representatives: degree out of range");

    Echelon ech;
    if (n >= 3) {
        const f2::Matrix incoming = q1_matrix(algebra, n - 3);
        for (std::size_t c = 0; c < incoming.cols(); ++c)
            ech.insert(incoming.column(c));
    }

    std::vector<em::CohomologyClass> reps;
    const auto& basis = algebra.basis(n);
    for (f2::BitVec kernel_vec : f2::kernel_basis(q1_matrix(algebra, n))) {
        const f2::BitVec v = ech.insert(std::move(kernel_vec));
        if (!v.any()) continue;
        std::vector<em::Monomial> terms;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v.get(k)) terms.push_back(basis[k]);
        reps.push_back(em::CohomologyClass::from_terms(std::move(terms)));
    }
    return reps;
}

Report build_report(const em::Algebra& algebra, int up_to, bool with_representatives) {
    if (up_to < 0 || up_to + 3 > algebra.max_degree())
        throw std::invalid_argument("build_report: degree range too large for the algebra");
    Report report;
    report.max_degree = up_to;

    std::vector<std::int64_t> ranks(up_to + 1, 0);
    std::vector<std::int64_t> dims(up_to + 1, 0);
    for (int n = 0; n <= up_to; ++n) {
        const f2::Matrix m = q1_matrix(algebra, n);
        ranks[n] = static_cast<std::int64_t>(f2::rank(m));
        dims[n] = static_cast<std::int64_t>(m.cols());
    }

    report.total_dims = dims;
    report.free_counts = ranks;
    report.homology_dims.resize(up_to + 1, 0);
    for (int n = 0; n <= up_to; ++n) {
        const std::int64_t kernel_dim = dims[n] - ranks[n];
        report.homology_dims[n] = n < 3 ? kernel_dim : kernel_dim - ranks[n - 3];
    }
    if (with_representatives) {
        report.representatives.resize(up_to + 1);
        for (int n = 0; n <= up_to; ++n)
            report.representatives[n] = homology_representatives(algebra, n);
    }
    return report;
}

}  // namespace k1k2::margolis
