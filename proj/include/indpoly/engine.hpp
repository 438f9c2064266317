#pragma once

#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "indpoly/canonical.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/poly.hpp"

namespace indpoly {

namespace detail {

inline std::string base64_encode(const std::string& in) {
    static const char* tbl = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    std::size_t i = 0;
    while (i + 2 < in.size()) {
        std::uint32_t v = (static_cast<std::uint8_t>(in[i]) << 16) |
                          (static_cast<std::uint8_t>(in[i + 1]) << 8) |
                          static_cast<std::uint8_t>(in[i + 2]);
        out += tbl[(v >> 18) & 63];
        out += tbl[(v >> 12) & 63];
        out += tbl[(v >> 6) & 63];
        out += tbl[v & 63];
        i += 3;
    }
    if (i + 1 == in.size()) {
        std::uint32_t v = static_cast<std::uint8_t>(in[i]) << 16;
        out += tbl[(v >> 18) & 63];
        out += tbl[(v >> 12) & 63];
        out += "==";
    } else if (i + 2 == in.size()) {
        std::uint32_t v = (static_cast<std::uint8_t>(in[i]) << 16) |
                          (static_cast<std::uint8_t>(in[i + 1]) << 8);
        out += tbl[(v >> 18) & 63];
        out += tbl[(v >> 12) & 63];
        out += tbl[(v >> 6) & 63];
        out += '=';
    }
    return out;
}

}  // namespace detail

// Isomorphism-keyed memo for independence polynomials, shared across
// computations. Thread-safe: concurrent readers, exclusive insertion.
// Optionally backed by a line-delimited file "key-base64 TAB poly-text".
class PolyCache {
public:
    PolyCache() = default;

    void attach_file(std::string path) {
        std::unique_lock lock(mu_);
        file_ = std::move(path);
        loaded_ = false;
    }

    std::optional<Poly> lookup(const std::string& key) {
        ensure_loaded();
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) {
            ++misses_;
            return std::nullopt;
        }
        ++hits_;
        return it->second;
    }

    void insert(const std::string& key, const Poly& p) {
        ensure_loaded();
        std::unique_lock lock(mu_);
        auto [it, fresh] = map_.emplace(key, p);
        if (fresh && !file_.empty()) {
            std::string line =
                detail::base64_encode(key) + "\t" + poly_to_string(p) + "\n";
            std::ofstream out(file_, std::ios::app);
            out << line;  // one buffered write per record
        }
    }

    std::uint64_t hits() const {
        std::shared_lock lock(mu_);
        return hits_;
    }
    std::uint64_t misses() const {
        std::shared_lock lock(mu_);
        return misses_;
    }
    std::size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }

private:
    static std::string base64_decode(const std::string& in) {
        auto val = [](char c) -> int {
            if (c >= 'A' && c <= 'Z') return c - 'A';
            if (c >= 'a' && c <= 'z') return c - 'a' + 26;
            if (c >= '0' && c <= '9') return c - '0' + 52;
            if (c == '+') return 62;
            if (c == '/') return 63;
            return -1;
        };
        std::string out;
        std::uint32_t buf = 0;
        int bits = 0;
        for (char c : in) {
            if (c == '=') break;
            int v = val(c);
            if (v < 0) throw ParseError("invalid base64 character in cache file", 0);
            buf = (buf << 6) | static_cast<std::uint32_t>(v);
            bits += 6;
            if (bits >= 8) {
                bits -= 8;
                out += static_cast<char>((buf >> bits) & 0xff);
            }
        }
        return out;
    }

    void ensure_loaded() {
        std::unique_lock lock(mu_);
        if (loaded_ || file_.empty()) return;
        loaded_ = true;
        std::ifstream in(file_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw ParseError("cache record missing tab separator", 0);
            map_.emplace(base64_decode(line.substr(0, tab)),
                         poly_from_string(line.substr(tab + 1)));
        }
    }

    mutable std::shared_mutex mu_;
    std::map<std::string, Poly> map_;
    std::string file_;
    bool loaded_ = true;
    mutable std::uint64_t hits_ = 0;
    mutable std::uint64_t misses_ = 0;
};

inline PolyCache& global_cache() {
    static PolyCache cache;
    return cache;
}

// i_k = number of independent k-subsets, by exhaustive enumeration. This is
// the oracle the recursive paths are validated against.
inline Poly independence_poly_bruteforce(const Graph& g) {
    if (g.order() > 25) throw BudgetError("brute-force enumeration limited to 25 vertices");
    std::vector<Int> counts(static_cast<std::size_t>(g.order()) + 1);
    // DFS over independent sets: pick the lowest remaining vertex, branch on
    // excluding it or including it (dropping its closed neighbourhood)
    struct Frame {
        std::uint64_t remaining;
        int size;
    };
    std::vector<Frame> stack{{g.order() == 64 ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << g.order()) - 1,
                              0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        ++counts[static_cast<std::size_t>(f.size)];
        while (f.remaining) {
            int v = std::countr_zero(f.remaining);
            f.remaining &= f.remaining - 1;
            stack.push_back({f.remaining & ~g.neighbors_mask(v), f.size + 1});
        }
    }
    return Poly{std::move(counts)};
}

namespace detail {

inline Poly edgeless_poly(int n) { return Poly{{Int(1), Int(1)}}.pow(n); }

inline Poly path_poly(int n) {
    // I(P_n) = I(P_{n-1}) + x I(P_{n-2})
    Poly prev = Poly::one();          // P_0
    Poly cur{{Int(1), Int(1)}};       // P_1
    if (n == 0) return prev;
    for (int k = 2; k <= n; ++k) {
        Poly next = cur + Poly::x() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline Poly cycle_poly(int n) {
    // I(C_n) = I(P_{n-1}) + x I(P_{n-3}), n >= 3
    return path_poly(n - 1) + Poly::x() * path_poly(n - 3);
}

// Closed form if the connected graph is a recognized family.
inline std::optional<Poly> closed_form(const Graph& g) {
    int n = g.order();
    int m = g.size();
    if (m == 0) return edgeless_poly(n);
    if (m == n * (n - 1) / 2) return Poly{{Int(1), Int(n)}};  // K_n
    if (max_degree(g) <= 2) {
        if (m == n) return cycle_poly(n);
        return path_poly(n);  // connected, max degree 2, m = n-1
    }
    // complete bipartite (covers stars): 2-colour then check the edge count
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{0};
    colour[0] = 0;
    int a = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v : mask_to_vertices(g.neighbors_mask(u))) {
            if (colour[static_cast<std::size_t>(v)] < 0) {
                colour[static_cast<std::size_t>(v)] = 1 - colour[static_cast<std::size_t>(u)];
                a += colour[static_cast<std::size_t>(v)] == 0 ? 1 : 0;
                queue.push_back(v);
            } else if (colour[static_cast<std::size_t>(v)] ==
                       colour[static_cast<std::size_t>(u)]) {
                return std::nullopt;  // odd cycle
            }
        }
    }
    int b = n - a;
    if (m == a * b) {
        Poly one = Poly::one();
        return Poly{{Int(1), Int(1)}}.pow(a) + Poly{{Int(1), Int(1)}}.pow(b) - one;
    }
    return std::nullopt;
}

inline Poly independence_poly_component(const Graph& g, PolyCache& cache);

inline Poly independence_poly_split(const Graph& g, PolyCache& cache) {
    Poly out = Poly::one();
    for (const auto& comp : components(g)) out *= independence_poly_component(comp, cache);
    return out;
}

inline Poly independence_poly_component(const Graph& g, PolyCache& cache) {
    if (auto p = closed_form(g)) return *p;
    std::string key;
    if (g.order() <= kCanonicalOrderLimit) {
        key = canonical_key(g);
        if (auto p = cache.lookup(key)) return *p;
    }
    // pivot on a maximum-degree vertex (ties: smallest index)
    int pivot = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(pivot)) pivot = v;
    Poly result = independence_poly_split(delete_vertex(g, pivot), cache) +
                  Poly::x() * independence_poly_split(delete_closed_neighborhood(g, pivot), cache);
    if (!key.empty()) cache.insert(key, result);
    return result;
}

}  // namespace detail

inline Poly independence_poly(const Graph& g, PolyCache& cache) {
    if (g.order() > kMaxVertices)
        throw BudgetError("graph too large; use brute-force limits for guidance");
    return detail::independence_poly_split(g, cache);
}

inline Poly independence_poly(const Graph& g) { return independence_poly(g, global_cache()); }

// Clique-deletion identity: I(G) = I(G-C) + x * sum_{v in C} I(G-N[v]).
inline Poly independence_poly_clique(const Graph& g, const std::vector<int>& clique, PolyCache& cache) {
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adjacent(clique[i], clique[j]))
                throw PreconditionError("vertex set is not a clique");
    Poly sum;
    for (int v : clique) sum += independence_poly(delete_closed_neighborhood(g, v), cache);
    return independence_poly(delete_vertices(g, clique), cache) + Poly::x() * sum;
}

inline Poly independence_poly_clique(const Graph& g, const std::vector<int>& clique) {
    return independence_poly_clique(g, clique, global_cache());
}

inline int independence_number(const Graph& g) { return independence_poly(g).degree(); }

}  // namespace indpoly
