// Weighted co-multiplication matrices on lattice boxes, their Littlewood
// decompositions and norms, lattice (Epstein) sums, Rudin-Shapiro / Hankel
// lower-bound certificates, and dual-object tail sums.
#pragma once

#include <cstdint>
#include <vector>

#include "beurling/lie_repr.hpp"
#include "beurling/matrix.hpp"
#include "beurling/weights.hpp"

namespace beurling {

inline constexpr std::size_t kDefaultMatrixRowCap = 4096;

// T(i,j) = rho_a(i+j) / (rho_a(i) rho_a(j)) on the box {1..d}^n with
// rho_a(x) = (1 + |x|_1)^a, rows and columns in lattice-lexicographic order.
struct MultiplierMatrix {
    int n = 0;
    int d = 0;
    double alpha = 0.0;
    Matrix t;
    std::vector<long long> point_norms;  // |i|_1 per lattice index
};
MultiplierMatrix build_t_matrix(int n, double alpha, int d,
                                std::size_t row_cap = kDefaultMatrixRowCap);

// Largest singular value by power iteration on M^T M with a deterministic
// all-ones start. Throws on non-convergence.
double operator_norm(const Matrix& m, double tol = 1e-10, long long max_iterations = 100000);

// sup over rows (columns) of the row (column) l2 norm.
double littlewood_row_norm(const Matrix& m);
double littlewood_col_norm(const Matrix& m);

// T = S o (U + V) with U(i,j) = u_i, V(i,j) = v_j, u_i = (1+|i|)^(-a);
// 0 < S <= 2^a entrywise. column_norm = (sum_i u_i^2)^(1/2).
struct LittlewoodDecomposition {
    int n = 0;
    int d = 0;
    double alpha = 0.0;
    std::vector<double> u;
    std::vector<double> v;
    Matrix s;
    double column_norm = 0.0;
};
LittlewoodDecomposition littlewood_decompose(int n, double alpha, int d,
                                             std::size_t row_cap = kDefaultMatrixRowCap);

// Partial lattice sum sum_{|i|_1 <= radius} (1 + |i|_1)^(-2a) over Z^n by
// shells, with an integral-comparison tail bound when 2a > n.
struct EpsteinResult {
    int n = 0;
    double alpha = 0.0;
    long long radius = 0;
    double partial_sum = 0.0;
    double tail_bound = 0.0;  // infinity when divergent
    bool converged = false;   // 2*alpha > n
};
EpsteinResult epstein_partial(int n, double alpha, long long radius);

// Number of lattice points in Z^n with |i|_1 = r.
long long lattice_shell_count(int n, long long r);

// The +-1 coefficient pair defined by p <- p + z^(2^k) q, q <- p - z^(2^k) q.
struct RudinShapiroPair {
    int k = 0;
    std::vector<int> p;
    std::vector<int> q;
};
RudinShapiroPair rudin_shapiro(int k);  // k <= 20

// Samples both polynomials on the unit circle, checking
// |P|^2 + |Q|^2 = 2^(k+1) and sup |P| <= sqrt(2^(k+1)).
struct SupnormReport {
    int k = 0;
    int samples = 0;
    double max_relative_deviation = 0.0;
    double max_abs_p = 0.0;
    double sup_bound = 0.0;
    bool pass = false;
};
SupnormReport supnorm_check(const RudinShapiroPair& pair, int samples,
                            double tolerance = 1e-9);

// d x d Hankel matrix with entries a_{i+j}, i,j in {0..d-1}, where a_m is the
// z^m coefficient of the generation-(k+1) polynomial. Operator norm <= 2 sqrt(d).
struct HankelSignMatrix {
    int k = 0;
    int d = 0;
    Matrix a;
};
HankelSignMatrix hankel_sign_matrix(int k);  // k <= 12

// Kronecker product with lattice-lexicographic index order.
Matrix kronecker(const Matrix& a, const Matrix& b);

// Per-box-size lower-bound data for the Schur norm of T^a:
//   quotient     = |T|_op / |B|_op,  B the n-fold tensor power of the Hankel
//                  sign matrix,
//   opnorm_bound = 2^(-a) d^(n/2) (sum_box (1+|i|)^(-2a))^(1/2),
//   quotient_bound = opnorm_bound / (2 sqrt(d))^n.
struct DivergenceRecord {
    int d = 0;
    double t_norm = 0.0;
    double b_norm = 0.0;
    double quotient = 0.0;
    double opnorm_bound = 0.0;
    double quotient_bound = 0.0;
    bool t_norm_ok = false;  // t_norm >= opnorm_bound (1e-10 relative)
};
struct DivergenceCertificate {
    int n = 0;
    double alpha = 0.0;
    std::vector<DivergenceRecord> records;
    bool all_bounds_hold = false;
};
DivergenceCertificate divergence_certificate(int n, double alpha, const std::vector<int>& d_list,
                                             std::size_t row_cap = kDefaultMatrixRowCap);

// Shell sums sum_{first part = m} dim^2 / w^2 over the dual of SU(n), with a
// log-log slope fit over the upper half of the range. A fitted slope below -1
// indicates a summable tail.
struct GroupTailReport {
    int n = 0;
    WeightFamily family;
    int first_part_max = 0;
    std::vector<double> shell_log;     // ln shell(m), m = 0..first_part_max
    std::vector<double> partial_sums;  // running sums of the shells
    double fitted_slope = 0.0;
    bool fitted_convergent = false;    // fitted_slope < -1
    bool analytic_convergent = false;  // family-specific closed-form criterion
};
GroupTailReport group_littlewood_tail(int n, const WeightFamily& family, int first_part_max);

}  // namespace beurling
