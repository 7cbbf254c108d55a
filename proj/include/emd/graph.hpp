#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "emd/compositions.hpp"
#include "emd/prob_vector.hpp"
#include "emd/rational.hpp"

namespace emd {

using Matrix = std::vector<std::vector<double>>;

/// Undirected graph on labeled distributions, with edges decided by a
/// distance-threshold rule. No self-loops.
struct EmdGraph {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;  // u < v, lexicographic
    BigRational threshold = 0;               // rule the edges came from

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency_lists() const;
    std::vector<int> degrees() const;
    int max_degree() const;
};

/// Graph on distributions of equal length: an edge joins two vertices when
/// their unit-normalized EMD is <= threshold (exact rational comparison).
EmdGraph build_emd_graph(const std::vector<ProbVector>& dists,
                         const BigRational& threshold,
                         const std::vector<std::string>& labels = {});

/**
 * The graph on all compositions of s into n parts with edges at discrete
 * EMD exactly 1; its shortest-path metric recovers the EMD. Guarded by a
 * vertex-count cap since the vertex set grows like s^(n-1).
 */
EmdGraph earth_movers_graph(long long s, int n, long long max_vertices = 20000);

/// Partition of the vertices into maximal connected sets (sorted, smallest
/// vertex first).
std::vector<std::vector<int>> connected_components(const EmdGraph& g);

/// Component count per threshold; thresholds must be ascending and counts
/// are non-increasing along them.
std::vector<std::pair<BigRational, int>> threshold_sweep(
    const std::vector<ProbVector>& dists, const std::vector<BigRational>& thresholds);

/// Degree matrix minus adjacency matrix; rows sum to zero.
Matrix laplacian(const EmdGraph& g);

/// Ascending eigenvalues of a symmetric matrix.
struct Spectrum {
    std::vector<double> eigenvalues;
};

/**
 * Full eigenvalue list of a symmetric matrix via cyclic Jacobi rotations.
 * Sweeps run until the off-diagonal Frobenius norm drops below 1e-12
 * (relative to the matrix scale), capped at 100 sweeps. Rejects matrices
 * that are not symmetric within 1e-12.
 */
Spectrum spectrum(const Matrix& m);

/// Second-smallest Laplacian eigenvalue; zero iff the graph is disconnected.
double algebraic_connectivity(const EmdGraph& g);

/**
 * Exact isoperimetric number: minimum over vertex subsets X with
 * 0 < |X| <= floor(m/2) of (edges leaving X) / |X|. Exhaustive over all
 * subsets, so the vertex count is capped.
 */
BigRational isoperimetric_number(const EmdGraph& g, int max_vertices = 25);

/// Spectral sandwich for the isoperimetric number:
/// lambda2/2 <= i(G) <= sqrt(lambda2 (2 d_max - lambda2)).
std::pair<double, double> cheeger_bounds(double lambda2, int d_max);

/// Exact mean shortest-path distance over distinct vertex pairs.
/// Requires a connected graph with at least two vertices.
BigRational mean_distance(const EmdGraph& g);

/// Spectral sandwich for the mean distance:
/// (1/(m-1)) (2/lambda2 + (m-2)/2) <= mean <= (m/(m-1)) ((d_max - lambda2)/(4 lambda2)) ln(m-1).
std::pair<double, double> mean_distance_bounds(double lambda2, int d_max, int m);

/// BFS distances from one vertex; -1 marks unreachable vertices.
std::vector<long long> bfs_distances(const EmdGraph& g, int source);

/// One "u v" line per edge.
void write_edge_list(std::ostream& out, const EmdGraph& g);

}  // namespace emd
