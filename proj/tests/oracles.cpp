#include "oracles.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace beurling::oracles {

std::map<DominantWeight, long long> character_product_decompose(const DominantWeight& lambda,
                                                                const DominantWeight& mu) {
    const WeightMultiplicitySet a = ssyt_weight_multiplicities(lambda);
    const WeightMultiplicitySet b = ssyt_weight_multiplicities(mu);

    std::map<TorusCharacter, long long> product;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            std::vector<int> sum(pa.exponents.size());
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] = pa.exponents[i] + pb.exponents[i];
            product[TorusCharacter(std::move(sum))] += ca * cb;
        }

    // Peel highest weights: the lexicographically largest remaining character
    // is the highest weight of a constituent, with its exact multiplicity.
    std::map<DominantWeight, long long> result;
    while (!product.empty()) {
        const auto top = std::prev(product.end());
        const TorusCharacter w = top->first;
        const long long mult = top->second;
        if (mult <= 0) throw std::logic_error("oracle: nonpositive leading multiplicity");
        std::vector<int> parts(w.exponents.begin(), w.exponents.end());
        parts.push_back(0);
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) throw std::logic_error("oracle: leading term not dominant");
        const DominantWeight nu{parts};
        result[nu] += mult;
        for (const auto& [p, c] : ssyt_weight_multiplicities(nu)) {
            const auto it = product.find(p);
            if (it == product.end()) throw std::logic_error("oracle: missing character");
            it->second -= mult * c;
            if (it->second < 0) throw std::logic_error("oracle: negative multiplicity");
            if (it->second == 0) product.erase(it);
        }
    }
    return result;
}

double svd_operator_norm(const Matrix& m) {
    Eigen::MatrixXd e(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    return e.jacobiSvd().singularValues()(0);
}

}  // namespace beurling::oracles
