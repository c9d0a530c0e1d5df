#include "kg/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kg {

Eigen::MatrixXd Graph::adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [i, j] : edges) {
        a(i, j) = 1.0;
        a(j, i) = 1.0;
    }
    return a;
}

namespace {
void rec_parts(int n, int mn, int left, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (left == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    // smallest admissible part first keeps each M-block lexicographic
    for (int k = mn; k * left <= n; ++k) {
        cur.push_back(k);
        rec_parts(n - k, k, left - 1, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<std::vector<int>> partitions_min3(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int m = 1; 3 * m <= n; ++m) rec_parts(n, 3, m, cur, out);
    return out;
}

Graph cycles_from_partition(int n, const std::vector<int>& parts) {
    Graph g;
    g.n = n;
    g.degree = 2;
    int base = 0;
    int total = 0;
    for (int L : parts) {
        if (L < 3) throw std::invalid_argument("cycle length below 3");
        for (int k = 0; k < L; ++k) {
            int a = base + k, b = base + (k + 1) % L;
            g.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        base += L;
        total += L;
    }
    if (total != n) throw std::invalid_argument("partition does not sum to n");
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph sample_regular(int n, int d, std::mt19937_64& rng) {
    if (n * d % 2 != 0) throw std::invalid_argument("n*d must be even");
    if (d >= n) throw std::invalid_argument("degree too large");
    std::vector<int> stubs(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs[static_cast<size_t>(v) * d + k] = v;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) { ok = false; break; }
            auto e = std::minmax(a, b);
            if (!seen.insert({e.first, e.second}).second) { ok = false; break; }
        }
        if (!ok) continue;
        Graph g;
        g.n = n;
        g.degree = d;
        g.edges.assign(seen.begin(), seen.end());
        return g;
    }
    throw std::runtime_error("configuration model: 10000 attempts exhausted");
}

Graph permute_graph(const Graph& g, const std::vector<int>& perm) {
    Graph out;
    out.n = g.n;
    out.degree = g.degree;
    for (auto [i, j] : g.edges) {
        int a = perm[i], b = perm[j];
        out.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<int> cycle_lengths(const Graph& g) {
    if (g.degree != 2) throw std::invalid_argument("cycle_lengths expects degree 2");
    std::vector<int> out;
    for (const auto& c : connected_components(g)) out.push_back(static_cast<int>(c.size()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string iso_certificate(const Graph& g) {
    std::ostringstream os;
    if (g.degree == 2) {
        os << "c2:";
        for (int L : cycle_lengths(g)) os << L << ",";
        return os.str();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.adjacency(), Eigen::EigenvaluesOnly);
    os << "sp:";
    for (int i = 0; i < g.n; ++i) os << llround(es.eigenvalues()[i] * 1e8) << ",";
    // Weisfeiler-Leman color refinement to separate cospectral graphs
    std::vector<std::vector<int>> adj(g.n);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<long long> color(g.n, 0);
    for (int round = 0; round < g.n; ++round) {
        std::map<std::pair<long long, std::vector<long long>>, long long> next;
        std::vector<long long> nc(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<long long> ncolors;
            for (int w : adj[v]) ncolors.push_back(color[w]);
            std::sort(ncolors.begin(), ncolors.end());
            auto key = std::make_pair(color[v], ncolors);
            auto it = next.find(key);
            if (it == next.end()) it = next.insert({key, static_cast<long long>(next.size())}).first;
            nc[v] = it->second;
        }
        color = nc;
    }
    std::vector<long long> hist = color;
    std::sort(hist.begin(), hist.end());
    os << "wl:";
    for (long long c : hist) os << c << ",";
    return os.str();
}

std::vector<Graph> all_regular_graphs(int n, int d, std::mt19937_64& rng, int stall) {
    std::map<std::string, Graph> found;
    int since_new = 0;
    while (since_new < stall) {
        Graph g = sample_regular(n, d, rng);
        auto cert = iso_certificate(g);
        if (found.insert({cert, g}).second)
            since_new = 0;
        else
            ++since_new;
    }
    std::vector<Graph> out;
    for (auto& [cert, g] : found) out.push_back(std::move(g));
    return out;
}

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    Graph g;
    if (!(in >> g.n >> g.degree)) throw std::runtime_error("bad graph header in " + path);
    int i, j;
    while (in >> i >> j) {
        if (i < 0 || j < 0 || i >= g.n || j >= g.n || i == j)
            throw std::runtime_error("bad edge in " + path);
        g.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    for (int v = 0; v < g.n; ++v) {
        int deg = 0;
        for (auto [a, b] : g.edges) deg += (a == v) + (b == v);
        if (deg != g.degree)
            throw std::runtime_error("vertex degree mismatch in " + path);
    }
    return g;
}

void write_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    out << g.n << " " << g.degree << "\n";
    for (auto [i, j] : g.edges) out << i << " " << j << "\n";
}

} // namespace kg
