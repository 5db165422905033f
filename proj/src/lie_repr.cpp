#include "beurling/lie_repr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace beurling {

namespace {

void check_rank(int n) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2, got " + std::to_string(n));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad integer list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list '" + text + "'");
    return out;
}

}  // namespace

DominantWeight::DominantWeight(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2)
        throw std::invalid_argument("dominant weight needs at least 2 parts");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("dominant weight parts must be nonnegative: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("dominant weight parts must be nonincreasing: " + to_string());
    }
}

DominantWeight DominantWeight::zero(int n) {
    check_rank(n);
    return DominantWeight(std::vector<int>(static_cast<std::size_t>(n), 0));
}

DominantWeight DominantWeight::parse(const std::string& text, int n) {
    std::vector<int> parts = parse_int_list(text);
    if (n > 0) {
        if (static_cast<int>(parts.size()) > n)
            throw std::invalid_argument("weight '" + text + "' has more than " + std::to_string(n) + " parts");
        parts.resize(static_cast<std::size_t>(n), 0);
    }
    return DominantWeight(std::move(parts));
}

long long DominantWeight::box_count() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

DominantWeight DominantWeight::normalized() const {
    std::vector<int> p = parts_;
    const int last = p.back();
    for (int& x : p) x -= last;
    return DominantWeight(std::move(p));
}

std::string DominantWeight::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

TorusCharacter TorusCharacter::zero(int n) {
    check_rank(n);
    return TorusCharacter(std::vector<int>(static_cast<std::size_t>(n - 1), 0));
}

TorusCharacter TorusCharacter::parse(const std::string& text) {
    return TorusCharacter(parse_int_list(text));
}

long long TorusCharacter::abs_sum() const {
    long long s = 0;
    for (int x : exponents) s += std::abs(static_cast<long long>(x));
    return s;
}

std::string TorusCharacter::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(exponents[i]);
    }
    s += ')';
    return s;
}

std::string TensorDecomposition::to_string() const {
    std::string s = lambda.to_string() + " (x) " + mu.to_string() + " =";
    bool first = true;
    for (const auto& [nu, c] : terms) {
        s += first ? " " : " + ";
        s += std::to_string(c) + "*" + nu.to_string();
        first = false;
    }
    if (first) s += " 0";
    return s;
}

std::int64_t TensorDecomposition::total_dimension() const {
    std::int64_t total = 0;
    for (const auto& [nu, c] : terms) total += c * weyl_dimension(nu);
    return total;
}

std::int64_t weyl_dimension(const DominantWeight& lambda) {
    const auto& p = lambda.parts();
    const int n = lambda.rank();
    unsigned __int128 num = 1, den = 1;
    const unsigned __int128 cap = std::numeric_limits<unsigned __int128>::max();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto f = static_cast<unsigned __int128>(p[i] - p[j] + j - i);
            if (f != 0 && num > cap / f)
                throw std::overflow_error("weyl_dimension overflow for " + lambda.to_string());
            num *= f;
            den *= static_cast<unsigned __int128>(j - i);
        }
    }
    const unsigned __int128 d = num / den;
    if (d > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("weyl_dimension exceeds 64 bits for " + lambda.to_string());
    return static_cast<std::int64_t>(d);
}

double log_weyl_dimension(const DominantWeight& lambda) {
    const auto& p = lambda.parts();
    const int n = lambda.rank();
    long double s = 0.0L;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            s += std::log(static_cast<long double>(p[i] - p[j] + j - i)) -
                 std::log(static_cast<long double>(j - i));
    return static_cast<double>(s);
}

int length(const DominantWeight& lambda) {
    if (!lambda.is_normalized())
        throw std::invalid_argument("length requires a normalized weight: " + lambda.to_string());
    return lambda.first();
}

WeightMultiplicitySet ssyt_weight_multiplicities(const DominantWeight& lambda,
                                                 const EnumerationBudget& budget) {
    if (!lambda.is_normalized())
        throw std::invalid_argument("ssyt enumeration requires a normalized weight");
    const int n = lambda.rank();

    // The tableau count equals the dimension, so the budget can be checked
    // up front.
    std::int64_t dim = 0;
    try {
        dim = weyl_dimension(lambda);
    } catch (const std::overflow_error&) {
        throw BudgetError("tableau enumeration for " + lambda.to_string() + " exceeds budget",
                          budget.max_tableaux);
    }
    if (dim > budget.max_tableaux)
        throw BudgetError("tableau enumeration for " + lambda.to_string() + " exceeds budget",
                          budget.max_tableaux);

    std::vector<int> rows;
    for (int r = 0; r < n; ++r)
        if (lambda.part(r) > 0) rows.push_back(lambda.part(r));

    WeightMultiplicitySet out;
    std::vector<int> content(static_cast<std::size_t>(n), 0);
    if (rows.empty()) {
        out[TorusCharacter::zero(n)] = 1;
        return out;
    }

    // grid[r] holds the entries of row r filled so far.
    std::vector<std::vector<int>> grid(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) grid[r].reserve(static_cast<std::size_t>(rows[r]));

    auto emit = [&]() {
        std::vector<int> e(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n - 1; ++i) e[static_cast<std::size_t>(i)] = content[static_cast<std::size_t>(i)] - content[static_cast<std::size_t>(n - 1)];
        ++out[TorusCharacter(std::move(e))];
    };

    std::function<void(std::size_t, int)> rec = [&](std::size_t r, int c) {
        if (r == rows.size()) {
            emit();
            return;
        }
        if (c == rows[r]) {
            rec(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][static_cast<std::size_t>(c - 1)]);
        if (r > 0 && c < rows[r - 1]) lo = std::max(lo, grid[r - 1][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            grid[r].push_back(v);
            ++content[static_cast<std::size_t>(v - 1)];
            rec(r, c + 1);
            --content[static_cast<std::size_t>(v - 1)];
            grid[r].pop_back();
        }
    };
    rec(0, 0);
    return out;
}

namespace {

// Content vector realizing p inside shape lambda, if the box counts admit one:
// t_i = p_i + s with t_n = s forced by the total box count.
bool character_content(const DominantWeight& lambda, const TorusCharacter& p,
                       std::vector<long long>& t) {
    const int n = lambda.rank();
    const long long total = lambda.box_count();
    long long psum = 0;
    for (int x : p.exponents) psum += x;
    const long long num = total - psum;
    if (num % n != 0) return false;
    const long long s = num / n;
    if (s < 0) return false;
    t.assign(static_cast<std::size_t>(n), s);
    for (int i = 0; i < n - 1; ++i) {
        t[static_cast<std::size_t>(i)] = p.exponents[static_cast<std::size_t>(i)] + s;
        if (t[static_cast<std::size_t>(i)] < 0) return false;
    }
    return true;
}

// A semistandard tableau of shape lambda and content t exists iff the sorted
// content is dominated by lambda. Certified constructively: values are placed
// from n down to 1 as horizontal strips, filling the lowest admissible rows.
bool build_witness_tableau(const DominantWeight& lambda, const std::vector<long long>& t) {
    const int n = lambda.rank();
    std::vector<long long> shape(lambda.parts().begin(), lambda.parts().end());
    std::vector<long long> before(static_cast<std::size_t>(n));
    for (int v = n; v >= 1; --v) {
        long long need = t[static_cast<std::size_t>(v - 1)];
        before = shape;  // shape prior to this value's strip
        for (int r = n - 1; r >= 0 && need > 0; --r) {
            const long long floor_len = (r + 1 < n) ? before[static_cast<std::size_t>(r + 1)] : 0;
            const long long can = shape[static_cast<std::size_t>(r)] - floor_len;
            if (can <= 0) continue;
            const long long take = std::min(can, need);
            shape[static_cast<std::size_t>(r)] -= take;
            need -= take;
        }
        if (need > 0) return false;
    }
    for (long long x : shape)
        if (x != 0) return false;
    return true;
}

}  // namespace

bool contains_character(const DominantWeight& lambda, const TorusCharacter& p) {
    if (!lambda.is_normalized())
        throw std::invalid_argument("contains_character requires a normalized weight");
    if (p.size() != lambda.rank() - 1)
        throw std::invalid_argument("torus character rank mismatch");
    std::vector<long long> t;
    if (!character_content(lambda, p, t)) return false;

    // Dominance of the sorted content is the exact existence criterion.
    std::vector<long long> sorted = t;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    long long ct = 0, cl = 0;
    for (int k = 0; k < lambda.rank(); ++k) {
        ct += sorted[static_cast<std::size_t>(k)];
        cl += lambda.part(k);
        if (ct > cl) return false;
    }
    if (ct != cl) return false;

    if (!build_witness_tableau(lambda, t))
        throw std::logic_error("witness construction failed for dominated content " +
                               lambda.to_string() + " / " + p.to_string());
    return true;
}

TensorDecomposition tensor_decompose(const DominantWeight& lambda, const DominantWeight& mu,
                                     const EnumerationBudget& budget) {
    if (!lambda.is_normalized() || !mu.is_normalized())
        throw std::invalid_argument("tensor_decompose requires normalized weights");
    if (lambda.rank() != mu.rank())
        throw std::invalid_argument("tensor_decompose rank mismatch: " + lambda.to_string() +
                                    " vs " + mu.to_string());
    const int n = lambda.rank();

    TensorDecomposition out{lambda, mu, {}};

    // Skew fillings of nu/lambda with content mu, built one value at a time as
    // horizontal strips over at most n rows. cum_prev[r] counts boxes of the
    // previous value in rows 1..r; the reverse-reading-word condition is
    //   #(value v in rows 1..r) <= #(value v-1 in rows 1..r-1)  for all r.
    std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
    long long fillings = 0;

    auto emit = [&]() {
        if (++fillings > budget.max_tableaux)
            throw BudgetError("tensor_decompose " + lambda.to_string() + " (x) " +
                                  mu.to_string() + " exceeds budget",
                              budget.max_tableaux);
        std::vector<int> parts = shape;
        const int last = parts.back();
        for (int& x : parts) x -= last;
        ++out.terms[DominantWeight(std::move(parts))];
    };

    // Places the remaining `left` boxes of value v into rows >= r. `before` is
    // the shape prior to value v's strip (strip boxes of one value may not
    // share a column), cum_prev/cum_cur are cumulative row counts of values
    // v-1 and v.
    std::function<void(int, int, int, const std::vector<int>&, const std::vector<long long>&,
                       std::vector<long long>&)>
        rec = [&](int v, int r, int left, const std::vector<int>& before,
                  const std::vector<long long>& cum_prev, std::vector<long long>& cum_cur) {
            if (left == 0) {
                for (int q = r; q <= n; ++q)
                    cum_cur[static_cast<std::size_t>(q)] = cum_cur[static_cast<std::size_t>(q - 1)];
                if (v == n) {
                    emit();
                } else {
                    const std::vector<int> next_before = shape;
                    std::vector<long long> next_cum(static_cast<std::size_t>(n) + 1, 0);
                    rec(v + 1, 1, mu.part(v), next_before, cum_cur, next_cum);
                }
                return;
            }
            if (r > n) return;
            int hi = left;
            if (r >= 2)
                hi = std::min(hi, before[static_cast<std::size_t>(r - 2)] -
                                      shape[static_cast<std::size_t>(r - 1)]);
            if (v >= 2)
                hi = static_cast<int>(std::min<long long>(
                    hi, cum_prev[static_cast<std::size_t>(r - 1)] -
                            cum_cur[static_cast<std::size_t>(r - 1)]));
            for (int k = 0; k <= hi; ++k) {
                shape[static_cast<std::size_t>(r - 1)] += k;
                cum_cur[static_cast<std::size_t>(r)] =
                    cum_cur[static_cast<std::size_t>(r - 1)] + k;
                rec(v, r + 1, left - k, before, cum_prev, cum_cur);
                shape[static_cast<std::size_t>(r - 1)] -= k;
            }
        };

    std::vector<long long> cum0(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long long> cur0(static_cast<std::size_t>(n) + 1, 0);
    const std::vector<int> before0 = shape;
    rec(1, 1, mu.part(0), before0, cum0, cur0);
    return out;
}

void for_each_dominant(int n, int max_first_part,
                       const std::function<void(const DominantWeight&)>& fn) {
    check_rank(n);
    if (max_first_part < 0) throw std::invalid_argument("max_first_part must be >= 0");
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n - 1) {
            fn(DominantWeight(parts));
            return;
        }
        const int hi = (i == 0) ? max_first_part : parts[static_cast<std::size_t>(i - 1)];
        for (int v = 0; v <= hi; ++v) {
            parts[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
        parts[static_cast<std::size_t>(i)] = 0;
    };
    rec(0);
}

std::vector<DominantWeight> enumerate_dominant(int n, int max_first_part) {
    std::vector<DominantWeight> out;
    for_each_dominant(n, max_first_part, [&](const DominantWeight& w) { out.push_back(w); });
    return out;
}

void for_each_with_first_part(int n, int first_part,
                              const std::function<void(const DominantWeight&)>& fn) {
    check_rank(n);
    if (first_part < 0) throw std::invalid_argument("first_part must be >= 0");
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    parts[0] = first_part;
    std::function<void(int)> rec = [&](int i) {
        if (i == n - 1) {
            fn(DominantWeight(parts));
            return;
        }
        for (int v = 0; v <= parts[static_cast<std::size_t>(i - 1)]; ++v) {
            parts[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
        parts[static_cast<std::size_t>(i)] = 0;
    };
    rec(1);
}

long long count_dominant(int n, int max_first_part) {
    long long c = 0;
    for_each_dominant(n, max_first_part, [&](const DominantWeight&) { ++c; });
    return c;
}

}  // namespace beurling
