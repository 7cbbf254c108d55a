#include "emd/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "emd/emd_core.hpp"

namespace emd {

std::vector<std::vector<int>> EmdGraph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count()));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

std::vector<int> EmdGraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count()), 0);
    for (auto [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

int EmdGraph::max_degree() const {
    std::vector<int> deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

namespace {

std::vector<std::string> default_labels(std::size_t m) {
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = std::to_string(i);
    return labels;
}

}  // namespace

EmdGraph build_emd_graph(const std::vector<ProbVector>& dists,
                         const BigRational& threshold,
                         const std::vector<std::string>& labels) {
    if (threshold < 0) throw std::invalid_argument("threshold must be >= 0");
    int n = dists.empty() ? 0 : dists[0].size();
    for (const ProbVector& d : dists)
        if (d.size() != n) throw std::invalid_argument("mixed distribution lengths");
    if (!dists.empty() && n < 2)
        throw std::invalid_argument("normalization undefined");
    if (!labels.empty() && labels.size() != dists.size())
        throw std::invalid_argument("label count does not match distribution count");

    EmdGraph g;
    g.labels = labels.empty() ? default_labels(dists.size()) : labels;
    g.threshold = threshold;
    for (std::size_t i = 0; i < dists.size(); ++i)
        for (std::size_t j = i + 1; j < dists.size(); ++j) {
            BigRational d = emd_continuous(dists[i], dists[j]) / BigRational(n - 1);
            if (d <= threshold)
                g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

EmdGraph earth_movers_graph(long long s, int n, long long max_vertices) {
    if (s < 0 || n < 1) throw std::invalid_argument("earth_movers_graph needs s >= 0, n >= 1");
    if (count_compositions(s, n) > to_bigint(max_vertices))
        throw std::invalid_argument("vertex cap exceeded");
    std::vector<Composition> vertices = all_compositions(s, n);
    EmdGraph g;
    g.labels.reserve(vertices.size());
    for (const Composition& c : vertices) g.labels.push_back(c.to_string());
    g.threshold = 1;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (emd_discrete(vertices[i], vertices[j]) == 1)
                g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return g;
}

std::vector<std::vector<int>> connected_components(const EmdGraph& g) {
    int m = g.vertex_count();
    std::vector<std::vector<int>> adj = g.adjacency_lists();
    std::vector<int> component(static_cast<std::size_t>(m), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < m; ++start) {
        if (component[static_cast<std::size_t>(start)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> queue{start};
        component[static_cast<std::size_t>(start)] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (int w : adj[static_cast<std::size_t>(v)])
                if (component[static_cast<std::size_t>(w)] == -1) {
                    component[static_cast<std::size_t>(w)] = id;
                    queue.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::vector<std::pair<BigRational, int>> threshold_sweep(
    const std::vector<ProbVector>& dists, const std::vector<BigRational>& thresholds) {
    for (std::size_t i = 1; i < thresholds.size(); ++i)
        if (thresholds[i] < thresholds[i - 1])
            throw std::invalid_argument("thresholds must be ascending");
    int n = dists.empty() ? 0 : dists[0].size();
    for (const ProbVector& d : dists)
        if (d.size() != n) throw std::invalid_argument("mixed distribution lengths");
    if (!dists.empty() && n < 2)
        throw std::invalid_argument("normalization undefined");

    // Pairwise distances once; each threshold then costs one union pass.
    std::size_t m = dists.size();
    std::vector<std::vector<BigRational>> dist(m, std::vector<BigRational>(m, BigRational(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            dist[i][j] = emd_continuous(dists[i], dists[j]) / BigRational(n - 1);

    std::vector<std::pair<BigRational, int>> out;
    out.reserve(thresholds.size());
    for (const BigRational& t : thresholds) {
        std::vector<int> parent(m);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        int components = static_cast<int>(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (dist[i][j] <= t) {
                    int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
                    if (a != b) {
                        parent[static_cast<std::size_t>(a)] = b;
                        --components;
                    }
                }
        out.emplace_back(t, components);
    }
    return out;
}

Matrix laplacian(const EmdGraph& g) {
    std::size_t m = static_cast<std::size_t>(g.vertex_count());
    Matrix l(m, std::vector<double>(m, 0.0));
    for (auto [u, v] : g.edges) {
        auto i = static_cast<std::size_t>(u), j = static_cast<std::size_t>(v);
        l[i][j] -= 1.0;
        l[j][i] -= 1.0;
        l[i][i] += 1.0;
        l[j][j] += 1.0;
    }
    return l;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
}

}  // namespace

Spectrum spectrum(const Matrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(m[i][j] - m[j][i]) > 1e-12)
                throw std::invalid_argument("matrix is not symmetric");

    Matrix a = m;
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a[i][j]));

    // Cyclic Jacobi: annihilate each off-diagonal pair per sweep.
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_norm(a) < 1e-12 * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double apq = a[p][q], app = a[p][p], aqq = a[q][q];
                a[p][q] = a[q][p] = 0.0;
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    double arp = a[r][p], arq = a[r][q];
                    a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
                    a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
                }
            }
        }
    }

    Spectrum out;
    out.eigenvalues.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues.push_back(a[i][i]);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

double algebraic_connectivity(const EmdGraph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("algebraic connectivity needs at least 2 vertices");
    return spectrum(laplacian(g)).eigenvalues[1];
}

BigRational isoperimetric_number(const EmdGraph& g, int max_vertices) {
    int m = g.vertex_count();
    if (m > max_vertices) throw std::invalid_argument("exact enumeration infeasible");
    if (m < 2) throw std::invalid_argument("isoperimetric number needs at least 2 vertices");

    std::vector<std::uint32_t> adj_mask(static_cast<std::size_t>(m), 0);
    for (auto [u, v] : g.edges) {
        adj_mask[static_cast<std::size_t>(u)] |= 1u << v;
        adj_mask[static_cast<std::size_t>(v)] |= 1u << u;
    }

    long long best_boundary = 0, best_size = 0;  // best ratio so far, as a fraction
    bool found = false;
    std::uint32_t full = (1u << m) - 1;
    int half = m / 2;
    for (std::uint32_t x = 1; x <= full; ++x) {
        int size = std::popcount(x);
        if (size > half) continue;
        long long boundary = 0;
        for (std::uint32_t rest = x; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            boundary += std::popcount(adj_mask[static_cast<std::size_t>(v)] & ~x);
        }
        if (!found || boundary * best_size < best_boundary * size) {
            best_boundary = boundary;
            best_size = size;
            found = true;
        }
    }
    return make_rational(best_boundary, best_size);
}

std::pair<double, double> cheeger_bounds(double lambda2, int d_max) {
    if (lambda2 < 0 || lambda2 > 2.0 * d_max)
        throw std::invalid_argument("lambda2 outside [0, 2 d_max]");
    double upper = std::sqrt(lambda2 * (2.0 * d_max - lambda2));
    return {lambda2 / 2.0, upper};
}

std::vector<long long> bfs_distances(const EmdGraph& g, int source) {
    std::vector<std::vector<int>> adj = g.adjacency_lists();
    std::vector<long long> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(w)] == -1) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

BigRational mean_distance(const EmdGraph& g) {
    long long m = g.vertex_count();
    if (m < 2) throw std::invalid_argument("mean distance needs at least 2 vertices");
    BigInt total = 0;
    for (int v = 0; v < m; ++v) {
        std::vector<long long> dist = bfs_distances(g, v);
        for (long long d : dist) {
            if (d == -1) throw std::invalid_argument("mean distance undefined");
            total += to_bigint(d);
        }
    }
    return make_rational(total, to_bigint(m) * to_bigint(m - 1));
}

std::pair<double, double> mean_distance_bounds(double lambda2, int d_max, int m) {
    if (lambda2 <= 0) throw std::invalid_argument("lambda2 must be positive");
    if (m < 2) throw std::invalid_argument("bounds need at least 2 vertices");
    double lower = (2.0 / lambda2 + (m - 2) / 2.0) / (m - 1);
    double upper = (static_cast<double>(m) / (m - 1)) *
                   ((d_max - lambda2) / (4.0 * lambda2)) * std::log(static_cast<double>(m - 1));
    return {lower, upper};
}

void write_edge_list(std::ostream& out, const EmdGraph& g) {
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

}  // namespace emd
