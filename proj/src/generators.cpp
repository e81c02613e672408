#include "tfvs/generators.hpp"

#include <cctype>
#include <charconv>
#include <random>
#include <string>

namespace tfvs {

Tournament transitive(int n) {
    return Tournament::from_relation(n, [](int, int) { return true; });
}

Tournament circular(int n, const std::vector<int>& residues) {
    if (n < 1) throw TournamentError("circular tournament needs n >= 1");
    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    for (int r : residues) {
        if (r < 1 || r >= n) throw TournamentError("residue " + std::to_string(r) + " is not a non-zero element of Z_" + std::to_string(n));
        in_set[r] = 1;
    }
    for (int r = 1; r < n; ++r) {
        if (in_set[r] == in_set[n - r])
            throw TournamentError("residues must contain exactly one of " + std::to_string(r) + " and " + std::to_string(n - r));
    }
    return Tournament::from_relation(n, [&](int i, int j) { return in_set[(j - i) % n] != 0; });
}

Tournament c3() { return circular(3, {1}); }
Tournament st7() { return circular(7, {1, 2, 4}); }
Tournament st6() { return st7().induced(VertexSet::full(7).without(1)); }
Tournament rt5() { return circular(5, {1, 2}); }

Tournament pq(const Tournament& inner) {
    const int m = inner.order();
    const int q = m + 2;
    return Tournament::from_relation(m + 2, [&](int a, int b) {
        if (b <= m) return inner.beats(a, b);
        if (a <= m) return b == q;  // t -> q, p -> t
        return false;               // a == p, b == q: q -> p
    });
}

int u_family_u1(int n) { return n - 1; }
int u_family_u2(int n) { return n; }

Tournament u_family(int n) {
    if (n < 3) throw TournamentError("u_family needs n >= 3");
    if (n == 3) return c3();
    const int u1 = u_family_u1(n);
    return Tournament::from_relation(n, [&](int a, int b) {
        if (b <= n - 2) return true;  // transitive core, a < b
        if (a == u1) return true;     // u_1 -> u_2
        return a != 1;                // 2..n-2 beat u_i; u_i beat 1
    });
}

Tournament disjoint_sum(const Tournament& first, const Tournament& second) {
    const int n1 = first.order();
    return Tournament::from_relation(n1 + second.order(), [&](int a, int b) {
        if (b <= n1) return first.beats(a, b);
        if (a <= n1) return true;
        return second.beats(a - n1, b - n1);
    });
}

Tournament repeated_sum(const Tournament& t, int copies) {
    if (copies < 1) throw TournamentError("need at least one copy");
    Tournament out = t;
    for (int i = 1; i < copies; ++i) out = disjoint_sum(out, t);
    return out;
}

Tournament random_tournament(int n, std::uint64_t seed) {
    if (n < 0) throw TournamentError("tournament order must be non-negative");
    std::mt19937_64 rng(seed);
    std::vector<VertexSet> out(static_cast<std::size_t>(n), VertexSet(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (rng() >> 63)
                out[i - 1].insert(j);
            else
                out[j - 1].insert(i);
        }
    }
    return Tournament::from_out_sets(std::move(out));
}

int pair_count(int n) { return n * (n - 1) / 2; }

Tournament from_arc_pattern(int n, std::uint64_t pattern) {
    if (pair_count(n) > 64) throw TournamentError("arc pattern supports at most 11 vertices");
    std::vector<VertexSet> out(static_cast<std::size_t>(n), VertexSet(n));
    int bit = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j, ++bit) {
            if ((pattern >> bit) & 1U)
                out[i - 1].insert(j);
            else
                out[j - 1].insert(i);
        }
    }
    return Tournament::from_out_sets(std::move(out));
}

namespace {

class GeneratorParser {
public:
    explicit GeneratorParser(std::string_view text) : text_(text) {}

    Tournament parse() {
        Tournament t = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw TournamentError("generator '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string name() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected a generator name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint64_t integer() {
        skip_space();
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{}) fail("expected a non-negative integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }
    int small_int() {
        const std::uint64_t v = integer();
        if (v > 100000) fail("integer argument too large");
        return static_cast<int>(v);
    }

    Tournament expr() {
        const std::string id = name();
        if (id == "st7") return st7();
        if (id == "st6") return st6();
        if (id == "rt5") return rt5();
        if (id == "c3") return c3();
        expect('(');
        Tournament t;
        if (id == "tt" || id == "transitive") {
            t = transitive(small_int());
        } else if (id == "u") {
            t = u_family(small_int());
        } else if (id == "circular") {
            const int n = small_int();
            std::vector<int> residues;
            while (accept(',')) residues.push_back(small_int());
            t = circular(n, residues);
        } else if (id == "pq") {
            t = pq(expr());
        } else if (id == "sum") {
            t = expr();
            while (accept(',')) t = disjoint_sum(t, expr());
        } else if (id == "copies") {
            Tournament base = expr();
            expect(',');
            t = repeated_sum(base, small_int());
        } else if (id == "random") {
            const int n = small_int();
            expect(',');
            t = random_tournament(n, integer());
        } else {
            fail("unknown generator '" + id + "'");
        }
        expect(')');
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Tournament parse_generator(std::string_view expr) { return GeneratorParser(expr).parse(); }

}  // namespace tfvs
