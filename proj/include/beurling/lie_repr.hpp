// Exact combinatorics of irreducible SU(n) representations: dominant weights,
// Weyl dimensions, torus characters, semistandard tableaux and tensor products.
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace beurling {

// Thrown when an enumeration would exceed its configured budget.
// The budget is echoed so the caller can retry with a larger one.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, long long budget)
        : std::runtime_error(what + " (budget " + std::to_string(budget) + ")"),
          budget_(budget) {}
    long long budget() const { return budget_; }

private:
    long long budget_;
};

struct EnumerationBudget {
    long long max_tableaux = 10'000'000;
};

// Highest weight of an irreducible SU(n) representation: a nonincreasing tuple
// of n nonnegative integers. Normalized form has last part zero; full columns
// carry no SU(n) content.
class DominantWeight {
public:
    explicit DominantWeight(std::vector<int> parts);

    static DominantWeight zero(int n);
    // Parses "2,1,0"; when n > 0 the list may omit trailing zeros.
    static DominantWeight parse(const std::string& text, int n = 0);

    const std::vector<int>& parts() const { return parts_; }
    int rank() const { return static_cast<int>(parts_.size()); }
    int first() const { return parts_.front(); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    long long box_count() const;
    bool is_normalized() const { return parts_.back() == 0; }
    DominantWeight normalized() const;

    std::string to_string() const;  // "(2,1,0)"

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
    friend std::strong_ordering operator<=>(const DominantWeight&,
                                            const DominantWeight&) = default;

private:
    std::vector<int> parts_;
};

// Character of the maximal torus of SU(n), indexed by an (n-1)-tuple of
// integers.
struct TorusCharacter {
    std::vector<int> exponents;

    TorusCharacter() = default;
    explicit TorusCharacter(std::vector<int> e) : exponents(std::move(e)) {}
    static TorusCharacter zero(int n);  // rank n gives n-1 zero exponents
    static TorusCharacter parse(const std::string& text);

    int size() const { return static_cast<int>(exponents.size()); }
    long long abs_sum() const;
    std::string to_string() const;

    friend bool operator==(const TorusCharacter&, const TorusCharacter&) = default;
    friend std::strong_ordering operator<=>(const TorusCharacter&,
                                            const TorusCharacter&) = default;
};

// Multiplicity of each torus character in the restriction of an irreducible.
using WeightMultiplicitySet = std::map<TorusCharacter, long long>;

// Decomposition of a tensor product of two irreducibles into irreducibles
// with multiplicities. All keys are normalized dominant weights.
struct TensorDecomposition {
    DominantWeight lambda;
    DominantWeight mu;
    std::map<DominantWeight, long long> terms;

    // Canonical text form "(1,0,0) (x) (1,0,0) = 1*(1,1,0) + 1*(2,0,0)".
    std::string to_string() const;
    // Sum of multiplicity * dimension over all terms.
    std::int64_t total_dimension() const;
};

// dim pi_lambda = prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i), exact.
// Throws std::overflow_error if the result (or an intermediate product beyond
// 128 bits) does not fit in 64 bits.
std::int64_t weyl_dimension(const DominantWeight& lambda);

// ln dim pi_lambda, valid far beyond the 64-bit range of weyl_dimension.
double log_weyl_dimension(const DominantWeight& lambda);

// Word length of pi_lambda with respect to the fundamental generating set;
// equals the first part. Requires a normalized weight.
int length(const DominantWeight& lambda);

// Enumerates every semistandard Young tableau of shape lambda with entries in
// {1..n} and aggregates the torus characters (t_1 - t_n, ..., t_{n-1} - t_n).
WeightMultiplicitySet ssyt_weight_multiplicities(const DominantWeight& lambda,
                                                 const EnumerationBudget& budget = {});

// True iff chi_p occurs in pi_lambda restricted to the maximal torus, i.e.
// some semistandard tableau of shape lambda realizes the exponents p.
// Decides by constructing a single witness tableau; never enumerates.
bool contains_character(const DominantWeight& lambda, const TorusCharacter& p);

// Littlewood-Richardson decomposition of pi_lambda (x) pi_mu, restricted to
// at most n rows and normalized.
TensorDecomposition tensor_decompose(const DominantWeight& lambda,
                                     const DominantWeight& mu,
                                     const EnumerationBudget& budget = {});

// All normalized dominant weights of rank n with first part <= max_first_part,
// in lexicographic order.
std::vector<DominantWeight> enumerate_dominant(int n, int max_first_part);
void for_each_dominant(int n, int max_first_part,
                       const std::function<void(const DominantWeight&)>& fn);

// Normalized dominant weights with the given first part, lexicographic order.
void for_each_with_first_part(int n, int first_part,
                              const std::function<void(const DominantWeight&)>& fn);

// Number of weights enumerate_dominant(n, m) yields.
long long count_dominant(int n, int max_first_part);

}  // namespace beurling
