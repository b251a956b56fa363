#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace k1k2::em {

/// Polynomial generator u_{2^i+1} of H*(K(Z/2,2); F2). u_2 is index 0.
struct Generator {
    int index;   // i >= 0
    int degree;  // 2^i + 1
    bool operator==(const Generator&) const = default;
};

/// 2^i + 1.
int generator_degree(int index);

/// Monomial in the u-generators: (index, exponent) pairs sorted by index,
/// all exponents positive. The empty monomial is the unit. Ordering is
/// lexicographic on the factor list, which fixes the canonical basis order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> factors);
    static Monomial power(int index, int exponent);

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int degree() const;
    Monomial times(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial& other) const { return factors_ <=> other.factors_; }

private:
    std::vector<std::pair<int, int>> factors_;
};

std::string render(const Monomial& m);

/// Homogeneous F2 sum of monomials. Terms are kept sorted and duplicate-free
/// (x + x = 0 on construction). The zero class has no terms and degree -1.
class CohomologyClass {
public:
    CohomologyClass() = default;
    explicit CohomologyClass(Monomial m);
    static CohomologyClass from_terms(std::vector<Monomial> terms);

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.front().degree(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    /// F2 sum (symmetric difference). Degrees must agree unless a side is zero.
    CohomologyClass operator+(const CohomologyClass& other) const;
    bool operator==(const CohomologyClass&) const = default;

private:
    std::vector<Monomial> terms_;
};

std::string render(const CohomologyClass& c);

/// H*(K(Z/2,2); F2) truncated at a degree bound N, as a polynomial algebra on
/// the u_{2^i+1} with the Q1 derivation. Basis tables for all degrees <= N are
/// built once in the constructor; everything afterwards is read-only.
class Algebra {
public:
    explicit Algebra(int max_degree);
    /// Custom generator images (one class per instantiated generator, each
    /// either zero or of degree 2^i+1+3). Intended for fault-injection tests.
    Algebra(int max_degree, std::vector<CohomologyClass> q1_generator_images);

    static std::vector<CohomologyClass> standard_q1_images(int max_degree);

    int max_degree() const { return max_degree_; }
    const std::vector<Generator>& generators() const { return generators_; }

    /// Degree-n monomial basis in canonical order. 0 <= n <= N.
    const std::vector<Monomial>& basis(int n) const;
    /// Position of m in basis(n), or -1 when absent.
    int basis_index(int n, const Monomial& m) const;

    /// F2 product. deg(a) + deg(b) <= N is required; beyond-bound products are
    /// rejected rather than truncated.
    CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) const;

    /// Q1 of a generator: u_2 -> u_5, u_3 -> u_3^2, u_5 -> 0, and
    /// u_{2^i+1} -> u_{2^{i-2}+1}^4 for i >= 3. Rejected when the image
    /// would land beyond the degree bound.
    const CohomologyClass& q1_generator(int index) const;

    /// Q1 extended as a derivation (Leibniz in characteristic 2: even
    /// exponents contribute nothing). Raises degree by 3; deg + 3 <= N.
    CohomologyClass q1(const Monomial& m) const;
    CohomologyClass q1(const CohomologyClass& c) const;

private:
    void build_basis_tables();

    int max_degree_;
    std::vector<Generator> generators_;
    std::vector<CohomologyClass> q1_images_;
    std::vector<std::vector<Monomial>> basis_;
    std::vector<std::map<Monomial, int>> basis_pos_;
};

}  // namespace k1k2::em
