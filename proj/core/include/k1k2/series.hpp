#pragma once

#include <cstdint>
#include <vector>

namespace k1k2::series {

/// Formal power series over the integers, truncated above a fixed degree.
/// All arithmetic is exact; coefficients are 64-bit.
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1, 0) {}
    explicit TruncatedSeries(int max_degree);
    static TruncatedSeries one(int max_degree);
    /// coeff * x^degree; a degree beyond the bound gives the zero series.
    static TruncatedSeries term(int max_degree, int degree, std::int64_t coeff = 1);

    int max_degree() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(int n) const;
    void set_coeff(int n, std::int64_t value);
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    /// Cauchy product truncated at the common bound; mismatched bounds are rejected.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<std::int64_t> c_;  // c_[n] = coefficient of x^n, 0 <= n <= max_degree
};

/// 1/(1-x^k): coefficient 1 at multiples of k. k >= 1.
TruncatedSeries geometric(int k, int max_degree);

/// 1/(1+x^k): coefficient (-1)^j at jk. k >= 1.
TruncatedSeries alternating(int k, int max_degree);

/// prod (1+x^d) over the given degrees; factors beyond the bound drop out.
TruncatedSeries exterior_series(const std::vector<int>& degrees, int max_degree);

/// Poincaré series of the Q1-Margolis homology of H*(K(Z/2,2)), in closed form:
/// 1/(1-x^4) * (1-x^36)/(1-x^9) * (1-x^68)/(1-x^17) * prod_{i>=5} (1+x^{2^{i+1}+2}).
TruncatedSeries trivial_series(int max_degree);

/// Generator-count series of the reduced free part of H*(K(Z/2,2)) over E(Q1):
/// (1+x^2)/(1-x^5) * 1/(1-x^6) * prod_{i>=5} (1+x^{2^i+1})/(1-x^{2^i+4}) - 1/(1+x^3).
TruncatedSeries free_series(int max_degree);

/// free_series * trivial_series: counts the filtration-0 classes per degree.
TruncatedSeries filtration_zero_series(int max_degree);

}  // namespace k1k2::series
