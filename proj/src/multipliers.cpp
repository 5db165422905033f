#include "beurling/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace beurling {

namespace {

void check_box(int n, int d, std::size_t row_cap, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": lattice dimension must be >= 1");
    if (d < 1) throw std::invalid_argument(std::string(what) + ": box side must be >= 1");
    double rows = 1.0;
    for (int i = 0; i < n; ++i) rows *= d;
    if (rows > static_cast<double>(row_cap))
        throw std::invalid_argument(std::string(what) + ": box has " + std::to_string(rows) +
                                    " rows, cap is " + std::to_string(row_cap));
}

// |i|_1 for every point of {1..d}^n in lexicographic order.
std::vector<long long> box_norms(int n, int d) {
    std::size_t count = 1;
    for (int i = 0; i < n; ++i) count *= static_cast<std::size_t>(d);
    std::vector<long long> norms(count);
    std::vector<int> point(static_cast<std::size_t>(n), 1);
    for (std::size_t idx = 0;; ++idx) {
        long long s = 0;
        for (int c : point) s += c;
        norms[idx] = s;
        int pos = n - 1;
        while (pos >= 0 && point[static_cast<std::size_t>(pos)] == d) {
            point[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++point[static_cast<std::size_t>(pos)];
    }
    return norms;
}

}  // namespace

MultiplierMatrix build_t_matrix(int n, double alpha, int d, std::size_t row_cap) {
    check_box(n, d, row_cap, "build_t_matrix");
    if (alpha < 0) throw std::invalid_argument("build_t_matrix: alpha must be >= 0");
    MultiplierMatrix out;
    out.n = n;
    out.d = d;
    out.alpha = alpha;
    out.point_norms = box_norms(n, d);
    const std::size_t rows = out.point_norms.size();
    out.t = Matrix(rows, rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const double a = static_cast<double>(out.point_norms[i]);
        for (std::size_t j = i; j < rows; ++j) {
            const double b = static_cast<double>(out.point_norms[j]);
            // |i+j|_1 = |i|_1 + |j|_1 on the positive orthant
            const double value = std::pow((1.0 + a + b) / ((1.0 + a) * (1.0 + b)), alpha);
            out.t(i, j) = value;
            out.t(j, i) = value;
        }
    }
    return out;
}

double operator_norm(const Matrix& m, double tol, long long max_iterations) {
    if (m.rows == 0 || m.cols == 0) return 0.0;
    for (double x : m.data)
        if (!std::isfinite(x)) throw std::invalid_argument("operator_norm: non-finite entry");

    std::vector<double> v(m.cols, 1.0 / std::sqrt(static_cast<double>(m.cols)));
    std::vector<double> w(m.rows), y(m.cols);
    double previous = 0.0;
    for (long long it = 0; it < max_iterations; ++it) {
        for (std::size_t i = 0; i < m.rows; ++i) {
            double s = 0.0;
            const double* row = m.data.data() + i * m.cols;
            for (std::size_t j = 0; j < m.cols; ++j) s += row[j] * v[j];
            w[i] = s;
        }
        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t i = 0; i < m.rows; ++i) {
            const double wi = w[i];
            const double* row = m.data.data() + i * m.cols;
            for (std::size_t j = 0; j < m.cols; ++j) y[j] += row[j] * wi;
        }
        double rayleigh = 0.0, norm_y = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) {
            rayleigh += v[j] * y[j];
            norm_y += y[j] * y[j];
        }
        if (norm_y == 0.0) return 0.0;
        const double sigma = std::sqrt(std::max(rayleigh, 0.0));
        if (it > 0 && std::abs(sigma - previous) <= tol * std::max(sigma, 1e-300)) return sigma;
        previous = sigma;
        norm_y = std::sqrt(norm_y);
        for (std::size_t j = 0; j < m.cols; ++j) v[j] = y[j] / norm_y;
    }
    throw std::runtime_error("operator_norm: power iteration did not converge in " +
                             std::to_string(max_iterations) + " iterations");
}

double littlewood_row_norm(const Matrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * m(i, j);
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

double littlewood_col_norm(const Matrix& m) {
    std::vector<double> sums(m.cols, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) sums[j] += m(i, j) * m(i, j);
    double best = 0.0;
    for (double s : sums) best = std::max(best, s);
    return std::sqrt(best);
}

LittlewoodDecomposition littlewood_decompose(int n, double alpha, int d, std::size_t row_cap) {
    const MultiplierMatrix t = build_t_matrix(n, alpha, d, row_cap);
    LittlewoodDecomposition out;
    out.n = n;
    out.d = d;
    out.alpha = alpha;
    const std::size_t rows = t.point_norms.size();
    out.u.resize(rows);
    for (std::size_t i = 0; i < rows; ++i)
        out.u[i] = std::pow(1.0 + static_cast<double>(t.point_norms[i]), -alpha);
    out.v = out.u;
    out.s = Matrix(rows, rows);
    const double s_cap = std::pow(2.0, alpha) * (1.0 + 1e-12);
    double sum_u2 = 0.0;
    for (std::size_t i = 0; i < rows; ++i) sum_u2 += out.u[i] * out.u[i];
    out.column_norm = std::sqrt(sum_u2);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) {
            const double s = t.t(i, j) / (out.u[i] + out.v[j]);
            if (!(s > 0.0) || s > s_cap)
                throw std::logic_error("littlewood_decompose: S entry " + std::to_string(s) +
                                       " outside (0, 2^alpha]");
            out.s(i, j) = s;
        }
    return out;
}

long long lattice_shell_count(int n, long long r) {
    if (n < 1 || r < 0) throw std::invalid_argument("lattice_shell_count: bad arguments");
    if (r == 0) return 1;
    // sum over the number k of nonzero coordinates: 2^k C(n,k) C(r-1,k-1)
    long long total = 0;
    for (int k = 1; k <= n && k <= r; ++k) {
        long long binom_nk = 1;
        for (int i = 0; i < k; ++i) binom_nk = binom_nk * (n - i) / (i + 1);
        long long binom_r = 1;
        for (int i = 0; i < k - 1; ++i) binom_r = binom_r * (r - 1 - i) / (i + 1);
        total += (1LL << k) * binom_nk * binom_r;
    }
    return total;
}

EpsteinResult epstein_partial(int n, double alpha, long long radius) {
    if (n < 1) throw std::invalid_argument("epstein_partial: n must be >= 1");
    if (radius < 0) throw std::invalid_argument("epstein_partial: radius must be >= 0");
    EpsteinResult out;
    out.n = n;
    out.alpha = alpha;
    out.radius = radius;
    out.converged = 2.0 * alpha > static_cast<double>(n);
    double sum = 0.0;
    for (long long r = 0; r <= radius; ++r)
        sum += static_cast<double>(lattice_shell_count(n, r)) *
               std::pow(1.0 + static_cast<double>(r), -2.0 * alpha);
    out.partial_sum = sum;
    if (!out.converged) {
        out.tail_bound = std::numeric_limits<double>::infinity();
        return out;
    }
    // Shell counts are below c_n r^(n-1) with c_n = sum_k 2^k C(n,k)/(k-1)!,
    // so the tail is below c_n R^(n-2a) / (2a - n).
    double c_n = 0.0;
    for (int k = 1; k <= n; ++k) {
        double binom_nk = 1.0;
        for (int i = 0; i < k; ++i) binom_nk = binom_nk * (n - i) / (i + 1);
        double fact = 1.0;
        for (int i = 2; i < k; ++i) fact *= i;
        c_n += std::pow(2.0, k) * binom_nk / fact;
    }
    const double r_eff = std::max<double>(1.0, static_cast<double>(radius));
    out.tail_bound = c_n * std::pow(r_eff, static_cast<double>(n) - 2.0 * alpha) /
                     (2.0 * alpha - static_cast<double>(n));
    return out;
}

RudinShapiroPair rudin_shapiro(int k) {
    if (k < 0 || k > 20) throw std::invalid_argument("rudin_shapiro: k must be in [0, 20]");
    RudinShapiroPair out;
    out.k = k;
    out.p = {1};
    out.q = {1};
    // p <- p + z^(2^k) q, q <- p - z^(2^k) q; the pair property
    // |P|^2 + |Q|^2 = 2^(k+1) holds by the parallelogram law.
    for (int step = 0; step < k; ++step) {
        const std::size_t half = out.p.size();
        std::vector<int> p_next(2 * half), q_next(2 * half);
        for (std::size_t i = 0; i < half; ++i) {
            p_next[i] = out.p[i];
            p_next[half + i] = out.q[i];
            q_next[i] = out.p[i];
            q_next[half + i] = -out.q[i];
        }
        out.p = std::move(p_next);
        out.q = std::move(q_next);
    }
    return out;
}

SupnormReport supnorm_check(const RudinShapiroPair& pair, int samples, double tolerance) {
    if (samples < 1) throw std::invalid_argument("supnorm_check: samples must be >= 1");
    SupnormReport report;
    report.k = pair.k;
    report.samples = samples;
    const double target = std::pow(2.0, pair.k + 1);
    report.sup_bound = std::sqrt(target);

    using Cl = std::complex<long double>;
    for (int s = 0; s < samples; ++s) {
        const long double theta =
            2.0L * std::numbers::pi_v<long double> * s / static_cast<long double>(samples);
        const Cl z(std::cos(theta), std::sin(theta));
        Cl pv = 0, qv = 0;
        for (std::size_t i = pair.p.size(); i-- > 0;) {
            pv = pv * z + static_cast<long double>(pair.p[i]);
            qv = qv * z + static_cast<long double>(pair.q[i]);
        }
        const long double modulus = std::norm(pv) + std::norm(qv);
        const double deviation =
            static_cast<double>(std::abs(modulus - static_cast<long double>(target))) / target;
        report.max_relative_deviation = std::max(report.max_relative_deviation, deviation);
        report.max_abs_p = std::max(report.max_abs_p, static_cast<double>(std::abs(pv)));
    }
    report.pass = report.max_relative_deviation <= tolerance &&
                  report.max_abs_p <= report.sup_bound * (1.0 + 1e-12);
    return report;
}

HankelSignMatrix hankel_sign_matrix(int k) {
    if (k < 0 || k > 12) throw std::invalid_argument("hankel_sign_matrix: k must be in [0, 12]");
    const RudinShapiroPair next = rudin_shapiro(k + 1);
    HankelSignMatrix out;
    out.k = k;
    out.d = 1 << k;
    out.a = Matrix(static_cast<std::size_t>(out.d), static_cast<std::size_t>(out.d));
    for (int i = 0; i < out.d; ++i)
        for (int j = 0; j < out.d; ++j)
            out.a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                static_cast<double>(next.p[static_cast<std::size_t>(i + j)]);
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            const double f = a(i, j);
            for (std::size_t p = 0; p < b.rows; ++p)
                for (std::size_t q = 0; q < b.cols; ++q)
                    out(i * b.rows + p, j * b.cols + q) = f * b(p, q);
        }
    return out;
}

DivergenceCertificate divergence_certificate(int n, double alpha, const std::vector<int>& d_list,
                                             std::size_t row_cap) {
    DivergenceCertificate cert;
    cert.n = n;
    cert.alpha = alpha;
    cert.all_bounds_hold = true;
    for (int d : d_list) {
        if (d < 1 || (d & (d - 1)) != 0)
            throw std::invalid_argument("divergence_certificate: box sides must be powers of two");
        int k = 0;
        while ((1 << k) < d) ++k;

        const MultiplierMatrix t = build_t_matrix(n, alpha, d, row_cap);
        const HankelSignMatrix hankel = hankel_sign_matrix(k);
        Matrix b = hankel.a;
        for (int rep = 1; rep < n; ++rep) b = kronecker(b, hankel.a);

        DivergenceRecord rec;
        rec.d = d;
        rec.t_norm = operator_norm(t.t);
        rec.b_norm = operator_norm(b);

        const double hankel_bound = 2.0 * std::sqrt(static_cast<double>(d));
        if (rec.b_norm > std::pow(hankel_bound, n) * (1.0 + 1e-10))
            throw std::logic_error("divergence_certificate: Hankel norm bound violated at d=" +
                                   std::to_string(d));

        double box_sum = 0.0;
        for (long long nm : t.point_norms)
            box_sum += std::pow(1.0 + static_cast<double>(nm), -2.0 * alpha);
        rec.opnorm_bound = std::pow(2.0, -alpha) *
                           std::pow(static_cast<double>(d), 0.5 * n) * std::sqrt(box_sum);
        rec.quotient = rec.t_norm / rec.b_norm;
        rec.quotient_bound = rec.opnorm_bound / std::pow(hankel_bound, n);
        rec.t_norm_ok = rec.t_norm >= rec.opnorm_bound * (1.0 - 1e-10);
        cert.all_bounds_hold = cert.all_bounds_hold && rec.t_norm_ok &&
                               rec.quotient >= rec.quotient_bound * (1.0 - 1e-10);
        cert.records.push_back(rec);
    }
    return cert;
}

GroupTailReport group_littlewood_tail(int n, const WeightFamily& family, int first_part_max) {
    if (n < 2) throw std::invalid_argument("group_littlewood_tail: rank must be >= 2");
    if (first_part_max < 4)
        throw std::invalid_argument("group_littlewood_tail: need first_part_max >= 4");
    GroupTailReport report;
    report.n = n;
    report.family = family;
    report.first_part_max = first_part_max;

    double running = 0.0;
    for (int m = 0; m <= first_part_max; ++m) {
        // log-sum-exp over the shell of weights with first part m
        std::vector<double> terms;
        for_each_with_first_part(n, m, [&](const DominantWeight& w) {
            terms.push_back(2.0 * (log_weyl_dimension(w) - log_weight(family, w)));
        });
        double peak = -std::numeric_limits<double>::infinity();
        for (double t : terms) peak = std::max(peak, t);
        double acc = 0.0;
        for (double t : terms) acc += std::exp(t - peak);
        const double shell_log = peak + std::log(acc);
        report.shell_log.push_back(shell_log);
        running += std::exp(shell_log);
        report.partial_sums.push_back(running);
    }

    // least-squares slope of ln shell against ln(1+m) over the upper half
    const int lo = std::max(2, first_part_max / 2);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int m = lo; m <= first_part_max; ++m) {
        const double x = std::log1p(static_cast<double>(m));
        const double y = report.shell_log[static_cast<std::size_t>(m)];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    report.fitted_slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    report.fitted_convergent = report.fitted_slope < -1.0;

    // Closed-form criteria: shells grow like m^(n-2) * m^(deg) with
    // deg = n(n-1)(1-a) for the dimension family and deg = n(n-1) - 2a for the
    // polynomial family; exponential weights always win.
    const double positive_roots = 0.5 * n * (n - 1);
    switch (family.kind) {
        case WeightFamily::Kind::polynomial_length:
            report.analytic_convergent = 2.0 * family.param > static_cast<double>(n) * n - 1.0;
            break;
        case WeightFamily::Kind::dimension:
            report.analytic_convergent =
                (n - 2.0) + 2.0 * positive_roots * (1.0 - family.param) < -1.0;
            break;
        case WeightFamily::Kind::exponential_length:
            report.analytic_convergent = true;
            break;
    }
    return report;
}

}  // namespace beurling
