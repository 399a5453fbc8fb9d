#include "qplab/series_cache.hpp"

#include <cstdlib>
#include <fstream>

namespace qplab {

SeriesCache::SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

SeriesCache SeriesCache::resolve(const std::optional<std::string>& flag_dir) {
    if (flag_dir && !flag_dir->empty()) return SeriesCache(*flag_dir);
    if (const char* env = std::getenv("QPLAB_CACHE_DIR"); env && *env)
        return SeriesCache(std::filesystem::path(env));
    return SeriesCache();
}

std::filesystem::path SeriesCache::file_for(const Multiset& A) const {
    std::string name = A.canonical_string();
    for (auto& ch : name)
        if (ch == ',') ch = '-';
    return dir_ / (name + ".series");
}

namespace {

// Rows must be "n,value" with n = 0,1,2,... contiguous; anything else
// invalidates the whole file.
std::optional<std::vector<Int>> load_rows(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::vector<Int> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) return std::nullopt;
        auto comma = line.find(',');
        if (comma == std::string::npos) return std::nullopt;
        try {
            Int n = parse_int(line.substr(0, comma));
            Int v = parse_int(line.substr(comma + 1));
            if (n != Int(static_cast<long>(values.size())) || v < 0) return std::nullopt;
            values.push_back(std::move(v));
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    if (values.empty() || values[0] != 1) return std::nullopt;
    return values;
}

void write_rows(const std::filesystem::path& file, const std::vector<Int>& values,
                std::size_t from) {
    std::ofstream out(file, from == 0 ? std::ios::trunc : std::ios::app);
    for (std::size_t n = from; n < values.size(); ++n)
        out << n << "," << values[n].get_str() << "\n";
}

}  // namespace

std::vector<Int> SeriesCache::get(const Multiset& A, long N) const {
    if (N < 0) N = 0;
    std::size_t want = static_cast<std::size_t>(N) + 1;
    if (!enabled()) return series(A, N).values;

    std::filesystem::path file = file_for(A);
    auto cached = load_rows(file);
    if (cached && cached->size() >= want) {
        cached->resize(want);
        return std::move(*cached);
    }
    std::vector<Int> values = series(A, N).values;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (cached && std::equal(cached->begin(), cached->end(), values.begin())) {
        write_rows(file, values, cached->size());  // append the new tail
    } else {
        write_rows(file, values, 0);
    }
    return values;
}

}  // namespace qplab
