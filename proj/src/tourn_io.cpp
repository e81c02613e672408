#include "tfvs/tourn_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tfvs {

namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Tournament read_tourn(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input, expected vertex count", 1, 1);
    strip_cr(line);
    int n = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), n);
    if (ec != std::errc{} || ptr != line.data() + line.size() || n < 1)
        throw ParseError("first line must be a positive vertex count, got '" + line + "'", 1, 1);

    std::vector<VertexSet> out(static_cast<std::size_t>(n), VertexSet(n));
    for (int u = 1; u <= n; ++u) {
        if (!std::getline(in, line)) throw ParseError("missing row " + std::to_string(u), u + 1, 1);
        strip_cr(line);
        if (static_cast<int>(line.size()) != n)
            throw ParseError("row " + std::to_string(u) + " has " + std::to_string(line.size()) + " characters, expected " + std::to_string(n),
                             u + 1, static_cast<int>(std::min<std::size_t>(line.size(), static_cast<std::size_t>(n))) + 1);
        for (int v = 1; v <= n; ++v) {
            const char c = line[v - 1];
            if (c != '0' && c != '1')
                throw ParseError(std::string("invalid character '") + c + "' at (" + std::to_string(u) + "," + std::to_string(v) + ")", u + 1, v);
            if (c == '1') {
                if (u == v) throw ParseError("diagonal entry (" + std::to_string(u) + "," + std::to_string(v) + ") must be 0", u + 1, v);
                out[u - 1].insert(v);
            }
        }
    }
    while (std::getline(in, line)) {
        strip_cr(line);
        if (!line.empty()) throw ParseError("unexpected content after matrix", n + 2, 1);
    }
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (out[u - 1].contains(v) == out[v - 1].contains(u))
                throw ParseError("not a tournament: pair (" + std::to_string(u) + "," + std::to_string(v) + ") has " +
                                     (out[u - 1].contains(v) ? "both arcs" : "no arc"),
                                 u + 1, v);
        }
    }
    return Tournament::from_out_sets(std::move(out));
}

Tournament read_tourn_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
    return read_tourn(in);
}

void write_tourn(std::ostream& out, const Tournament& t) {
    const int n = t.order();
    out << n << '\n';
    std::string row(static_cast<std::size_t>(n), '0');
    for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) row[v - 1] = t.beats(u, v) ? '1' : '0';
        out << row << '\n';
    }
}

std::string to_tourn_string(const Tournament& t) {
    std::ostringstream os;
    write_tourn(os, t);
    return os.str();
}

}  // namespace tfvs
