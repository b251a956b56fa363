#include "k1k2/em.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace k1k2::em {

int generator_degree(int index) {
    if (index < 0 || index > 30)
        throw std::invalid_argument("generator_degree: index out of range");
    return (1 << index) + 1;
}

Monomial::Monomial(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    std::vector<std::pair<int, int>> merged;
    for (auto [i, e] : factors_) {
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == i)
            merged.back().second += e;
        else
            merged.emplace_back(i, e);
    }
    factors_ = std::move(merged);
}

Monomial Monomial::power(int index, int exponent) {
    if (exponent == 0) return Monomial();
    return Monomial({{index, exponent}});
}

int Monomial::degree() const {
    int d = 0;
    for (auto [i, e] : factors_) d += e * generator_degree(i);
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    std::vector<std::pair<int, int>> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return Monomial(std::move(all));
}

std::string render(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (auto [i, e] : m.factors()) {
        if (!out.empty()) out += '*';
        out += 'u' + std::to_string(generator_degree(i));
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

CohomologyClass::CohomologyClass(Monomial m) : terms_{std::move(m)} {}

CohomologyClass CohomologyClass::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) kept.push_back(std::move(terms[i]));
        i = j;
    }
    for (std::size_t i = 1; i < kept.size(); ++i)
        if (kept[i].degree() != kept[0].degree())
            throw std::invalid_argument("CohomologyClass: inhomogeneous terms");
    CohomologyClass c;
    c.terms_ = std::move(kept);
    return c;
}

CohomologyClass CohomologyClass::operator+(const CohomologyClass& other) const {
    if (!is_zero() && !other.is_zero() && degree() != other.degree())
        throw std::invalid_argument("CohomologyClass: adding classes of different degree");
    std::vector<Monomial> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(std::move(all));
}

std::string render(const CohomologyClass& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& t : c.terms()) {
        if (!out.empty()) out += " + ";
        out += render(t);
    }
    return out;
}

std::vector<CohomologyClass> Algebra::standard_q1_images(int max_degree) {
    std::vector<CohomologyClass> images;
    for (int i = 0; i <= 30 && generator_degree(i) <= max_degree; ++i) {
        if (i == 0)
            images.emplace_back(Monomial::power(2, 1));  // Q1 u_2 = u_5
        else if (i == 1)
            images.emplace_back(Monomial::power(1, 2));  // Q1 u_3 = u_3^2
        else if (i == 2)
            images.emplace_back();                       // Q1 u_5 = 0
        else
            images.emplace_back(Monomial::power(i - 2, 4));  // Q1 u_{2^i+1} = u_{2^{i-2}+1}^4
    }
    return images;
}

Algebra::Algebra(int max_degree) : Algebra(max_degree, standard_q1_images(max_degree)) {}

Algebra::Algebra(int max_degree, std::vector<CohomologyClass> q1_generator_images)
    : max_degree_(max_degree), q1_images_(std::move(q1_generator_images)) {
    if (max_degree_ < 0)
        throw std::invalid_argument("Algebra: negative degree bound");
    for (int i = 0; i <= 30 && generator_degree(i) <= max_degree_; ++i)
        generators_.push_back({i, generator_degree(i)});
    if (q1_images_.size() != generators_.size())
        throw std::invalid_argument("Algebra: one Q1 image per instantiated generator required");
    for (std::size_t i = 0; i < q1_images_.size(); ++i)
        if (!q1_images_[i].is_zero() &&
            q1_images_[i].degree() != generators_[i].degree + 3)
            throw std::invalid_argument("Algebra: Q1 image must be zero or raise degree by 3");
    build_basis_tables();
}

void Algebra::build_basis_tables() {
    basis_.assign(max_degree_ + 1, {});
    basis_pos_.assign(max_degree_ + 1, {});
    basis_[0].push_back(Monomial());

    // Partition each degree over the generator degrees, lowest index outermost.
    std::vector<std::pair<int, int>> current;
    std::function<void(int, std::size_t, int)> rec = [&](int remaining, std::size_t gi, int n) {
        if (remaining == 0) {
            basis_[n].push_back(Monomial(current));
            return;
        }
        if (gi == generators_.size()) return;
        const int d = generators_[gi].degree;
        rec(remaining, gi + 1, n);
        for (int e = 1; e * d <= remaining; ++e) {
            current.emplace_back(generators_[gi].index, e);
            rec(remaining - e * d, gi + 1, n);
            current.pop_back();
        }
    };
    for (int n = 1; n <= max_degree_; ++n) rec(n, 0, n);

    for (int n = 0; n <= max_degree_; ++n) {
        std::sort(basis_[n].begin(), basis_[n].end());
        for (std::size_t k = 0; k < basis_[n].size(); ++k)
            basis_pos_[n].emplace(basis_[n][k], static_cast<int>(k));
    }
}

const std::vector<Monomial>& Algebra::basis(int n) const {
    if (n < 0 || n > max_degree_)
        throw std::invalid_argument("Algebra::basis: degree out of range");
    return basis_[n];
}

int Algebra::basis_index(int n, const Monomial& m) const {
    if (n < 0 || n > max_degree_)
        throw std::invalid_argument("Algebra::basis_index: degree out of range");
    auto it = basis_pos_[n].find(m);
    return it == basis_pos_[n].end() ? -1 : it->second;
}

CohomologyClass Algebra::multiply(const CohomologyClass& a, const CohomologyClass& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.degree() + b.degree() > max_degree_)
        throw std::invalid_argument("Algebra::multiply: product exceeds degree bound");
    std::vector<Monomial> products;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            products.push_back(ta.times(tb));
    return CohomologyClass::from_terms(std::move(products));
}

const CohomologyClass& Algebra::q1_generator(int index) const {
    if (index < 0 || static_cast<std::size_t>(index) >= generators_.size())
        throw std::invalid_argument("Algebra::q1_generator: generator not instantiated");
    const CohomologyClass& img = q1_images_[index];
    if (!img.is_zero() && img.degree() > max_degree_)
        throw std::invalid_argument("Algebra::q1_generator: image exceeds degree bound");
    return img;
}

CohomologyClass Algebra::q1(const Monomial& m) const {
    if (m.degree() + 3 > max_degree_)
        throw std::invalid_argument("Algebra::q1: result would exceed degree bound");
    std::vector<Monomial> terms;
    for (std::size_t k = 0; k < m.factors().size(); ++k) {
        const auto [i, e] = m.factors()[k];
        if (e % 2 == 0) continue;  // d(x^2) = 0 in characteristic 2
        const CohomologyClass& gen_image = q1_images_[i];
        if (gen_image.is_zero()) continue;
        auto rest = m.factors();
        if (e == 1)
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        else
            rest[k].second = e - 1;
        const Monomial base{std::move(rest)};
        for (const auto& g : gen_image.terms())
            terms.push_back(base.times(g));
    }
    return CohomologyClass::from_terms(std::move(terms));
}

CohomologyClass Algebra::q1(const CohomologyClass& c) const {
    if (c.is_zero()) return {};
    std::vector<Monomial> terms;
    for (const auto& m : c.terms())
        for (const auto& t : q1(m).terms())
            terms.push_back(t);
    return CohomologyClass::from_terms(std::move(terms));
}

}  // namespace k1k2::em
