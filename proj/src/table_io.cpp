#include "hls/table_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "hls/errors.hpp"

namespace hls {

namespace {

constexpr std::array<char, 4> kMagic{'H', 'L', 'S', '1'};

template <typename T>
void put_le(std::ostream& out, T value)
{
    std::array<char, sizeof(T)> bytes{};
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
    }
    out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in, const char* what)
{
    std::array<unsigned char, sizeof(T)> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
        throw FormatError(fmt::format("HLS1 cache truncated while reading {}", what));
    }
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        value |= static_cast<T>(bytes[i]) << (8 * i);
    }
    return value;
}

std::uint64_t parse_u64(std::string_view field, std::size_t line)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
        throw FormatError(fmt::format("CSV line {}: bad integer '{}'", line, field));
    }
    return v;
}

} // namespace

void write_csv(const CoeffTable& table, std::ostream& out)
{
    out << "n,h\n";
    const auto values = table.values();
    for (std::uint64_t n = 1; n < values.size(); ++n) {
        out << n << ',' << values[n] << '\n';
    }
}

CoeffTable read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != "n,h") {
        throw FormatError("CSV: expected header 'n,h'");
    }
    std::vector<std::uint64_t> values{0};
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw FormatError(fmt::format("CSV line {}: missing ','", line_no));
        }
        const std::string_view view(line);
        const std::uint64_t n = parse_u64(view.substr(0, comma), line_no);
        const std::uint64_t h = parse_u64(view.substr(comma + 1), line_no);
        if (n != values.size()) {
            throw FormatError(fmt::format("CSV line {}: expected n = {}, got {}", line_no,
                                          values.size(), n));
        }
        values.push_back(h);
    }
    if (values.size() < 2) {
        throw FormatError("CSV: no rows");
    }
    const std::uint64_t limit = values.size() - 1;
    return CoeffTable(limit, std::move(values));
}

void write_cache(const CoeffTable& table, std::ostream& out)
{
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint64_t>(out, table.limit());
    const auto values = table.values();
    for (std::uint64_t n = 1; n < values.size(); ++n) {
        if (values[n] > std::numeric_limits<std::uint32_t>::max()) {
            throw FormatError(fmt::format("HLS1 cache: h({}) = {} exceeds 32 bits", n, values[n]));
        }
        put_le<std::uint32_t>(out, static_cast<std::uint32_t>(values[n]));
    }
    if (!out) {
        throw std::ios_base::failure("HLS1 cache: write failed");
    }
}

void write_cache(const CoeffTable& table, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::ios_base::failure(fmt::format("cannot open '{}' for writing", path.string()));
    }
    write_cache(table, out);
}

CoeffTable read_cache(std::istream& in)
{
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
        throw FormatError("HLS1 cache: bad magic");
    }
    const auto limit = get_le<std::uint64_t>(in, "X");
    if (limit == 0) {
        throw FormatError("HLS1 cache: X = 0");
    }
    std::vector<std::uint64_t> values;
    values.reserve(limit + 1);
    values.push_back(0);
    for (std::uint64_t n = 1; n <= limit; ++n) {
        values.push_back(get_le<std::uint32_t>(in, "values"));
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw FormatError("HLS1 cache: trailing bytes");
    }
    return CoeffTable(limit, std::move(values));
}

CoeffTable read_cache(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure(fmt::format("cannot open '{}'", path.string()));
    }
    return read_cache(in);
}

CoeffTable load_or_sieve(std::uint64_t x, unsigned workers,
                         const std::optional<std::filesystem::path>& path, bool* cache_written)
{
    if (cache_written != nullptr) {
        *cache_written = false;
    }
    if (path && std::filesystem::exists(*path)) {
        CoeffTable cached = read_cache(*path);
        if (cached.limit() >= x) {
            return cached.limit() == x ? std::move(cached) : cached.truncated(x);
        }
    }
    CoeffTable table = sieve_h(x, workers);
    if (path) {
        write_cache(table, *path);
        if (cache_written != nullptr) {
            *cache_written = true;
        }
    }
    return table;
}

} // namespace hls
