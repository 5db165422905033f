#include "beurling/lr_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace beurling {

namespace {

constexpr const char* kFormatLine = "beurling-lr 1";

std::string dotted(const DominantWeight& w) {
    std::string s;
    for (int i = 0; i < w.rank(); ++i) {
        if (i) s += '.';
        s += std::to_string(w.part(i));
    }
    return s;
}

std::optional<TensorDecomposition> read_entry(const std::filesystem::path& path,
                                              const DominantWeight& lambda,
                                              const DominantWeight& mu) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != kFormatLine) return std::nullopt;
    TensorDecomposition dec{lambda, mu, {}};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        long long mult = 0;
        std::string parts;
        if (!(row >> mult >> parts) || mult <= 0) return std::nullopt;
        for (char& c : parts)
            if (c == '.') c = ',';
        try {
            DominantWeight nu = DominantWeight::parse(parts, lambda.rank());
            if (!nu.is_normalized()) return std::nullopt;
            if (!dec.terms.emplace(std::move(nu), mult).second) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return dec;
}

void write_entry(const std::filesystem::path& path, const TensorDecomposition& dec) {
    std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << kFormatLine << '\n';
        for (const auto& [nu, mult] : dec.terms) out << mult << ' ' << dotted(nu) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

LrCache::LrCache(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path LrCache::entry_path(const DominantWeight& lambda,
                                          const DominantWeight& mu) const {
    return root_ / ("su" + std::to_string(lambda.rank())) /
           (dotted(lambda) + "__" + dotted(mu) + ".lr");
}

TensorDecomposition LrCache::get_or_compute(const DominantWeight& lambda, const DominantWeight& mu,
                                            const EnumerationBudget& budget) {
    const std::filesystem::path path = entry_path(lambda, mu);
    if (auto cached = read_entry(path, lambda, mu)) return *cached;
    TensorDecomposition dec = tensor_decompose(lambda, mu, budget);
    write_entry(path, dec);
    return dec;
}

std::filesystem::path LrCache::resolve_directory(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "beurling" / "lr";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".local" / "share" / "beurling" / "lr";
    return std::filesystem::temp_directory_path() / "beurling-lr";
}

void LrCache::clear() {
    std::error_code ec;
    std::filesystem::remove_all(root_, ec);
}

}  // namespace beurling
