#include "k1k2/series.hpp"

#include <stdexcept>

namespace k1k2::series {

TruncatedSeries::TruncatedSeries(int max_degree) {
    if (max_degree < 0)
        throw std::invalid_argument("TruncatedSeries: negative degree bound");
    c_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
}

TruncatedSeries TruncatedSeries::one(int max_degree) {
    TruncatedSeries s(max_degree);
    s.c_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::term(int max_degree, int degree, std::int64_t coeff) {
    if (degree < 0)
        throw std::invalid_argument("TruncatedSeries::term: negative degree");
    TruncatedSeries s(max_degree);
    if (degree <= max_degree) s.c_[degree] = coeff;
    return s;
}

std::int64_t TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > max_degree())
        throw std::out_of_range("TruncatedSeries::coeff: degree out of range");
    return c_[n];
}

void TruncatedSeries::set_coeff(int n, std::int64_t value) {
    if (n < 0 || n > max_degree())
        throw std::out_of_range("TruncatedSeries::set_coeff: degree out of range");
    c_[n] = value;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    if (rhs.max_degree() != max_degree())
        throw std::invalid_argument("TruncatedSeries: degree bound mismatch");
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += rhs.c_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    if (rhs.max_degree() != max_degree())
        throw std::invalid_argument("TruncatedSeries: degree bound mismatch");
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= rhs.c_[n];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.max_degree() != b.max_degree())
        throw std::invalid_argument("TruncatedSeries: degree bound mismatch");
    TruncatedSeries out(a.max_degree());
    const int n_max = a.max_degree();
    for (int i = 0; i <= n_max; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= n_max; ++j)
            out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
}

TruncatedSeries geometric(int k, int max_degree) {
    if (k < 1) throw std::invalid_argument("geometric: k must be positive");
    TruncatedSeries s(max_degree);
    for (int n = 0; n <= max_degree; n += k) {
        s.set_coeff(n, 1);
        if (n > max_degree - k) break;  // avoid overflow on n += k
    }
    return s;
}

TruncatedSeries alternating(int k, int max_degree) {
    if (k < 1) throw std::invalid_argument("alternating: k must be positive");
    TruncatedSeries s(max_degree);
    std::int64_t sign = 1;
    for (int n = 0; n <= max_degree; n += k) {
        s.set_coeff(n, sign);
        sign = -sign;
        if (n > max_degree - k) break;
    }
    return s;
}

TruncatedSeries exterior_series(const std::vector<int>& degrees, int max_degree) {
    TruncatedSeries s = TruncatedSeries::one(max_degree);
    for (int d : degrees) {
        if (d <= 0) throw std::invalid_argument("exterior_series: degrees must be positive");
        if (d > max_degree) continue;
        s = s * (TruncatedSeries::one(max_degree) + TruncatedSeries::term(max_degree, d));
    }
    return s;
}

TruncatedSeries trivial_series(int max_degree) {
    const auto one = TruncatedSeries::one(max_degree);
    auto s = geometric(4, max_degree);
    s = s * (one - TruncatedSeries::term(max_degree, 36)) * geometric(9, max_degree);
    s = s * (one - TruncatedSeries::term(max_degree, 68)) * geometric(17, max_degree);
    // exterior factors on degrees 2^{i+1}+2, i >= 5
    for (int i = 5;; ++i) {
        if (i + 1 >= 31) break;
        const long long d = (1LL << (i + 1)) + 2;
        if (d > max_degree) break;
        s = s * (one + TruncatedSeries::term(max_degree, static_cast<int>(d)));
    }
    return s;
}

TruncatedSeries free_series(int max_degree) {
    const auto one = TruncatedSeries::one(max_degree);
    auto s = (one + TruncatedSeries::term(max_degree, 2)) * geometric(5, max_degree);
    s = s * geometric(6, max_degree);
    for (int i = 5;; ++i) {
        if (i >= 31) break;
        const long long de = (1LL << i) + 1;  // exterior generator
        const long long dp = (1LL << i) + 4;  // polynomial generator
        if (de > max_degree && dp > max_degree) break;
        if (de <= max_degree)
            s = s * (one + TruncatedSeries::term(max_degree, static_cast<int>(de)));
        if (dp <= max_degree)
            s = s * geometric(static_cast<int>(dp), max_degree);
    }
    return s - alternating(3, max_degree);
}

TruncatedSeries filtration_zero_series(int max_degree) {
    return free_series(max_degree) * trivial_series(max_degree);
}

}  // namespace k1k2::series
