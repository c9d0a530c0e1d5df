#pragma once
#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace kg {

struct Graph {
    int n = 0;
    int degree = 0;
    std::vector<std::pair<int, int>> edges; // i < j, sorted

    Eigen::MatrixXd adjacency() const;
};

// Partitions of n into parts >= 3, ascending within each partition,
// enumerated by part count M ascending and then lexicographically.
std::vector<std::vector<int>> partitions_min3(int n);

// d = 2 graph for a partition: consecutive vertex blocks, one cycle per part.
Graph cycles_from_partition(int n, const std::vector<int>& parts);

// Configuration-model d-regular sampler; rejects self-loops and duplicate
// edges, retries up to 10000 times before throwing.
Graph sample_regular(int n, int d, std::mt19937_64& rng);

Graph permute_graph(const Graph& g, const std::vector<int>& perm);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Cycle lengths of a d = 2 graph (every component is a cycle).
std::vector<int> cycle_lengths(const Graph& g);

// Isomorphism certificate: exact sorted cycle lengths for d = 2; rounded
// sorted adjacency spectrum plus Weisfeiler-Leman refinement for d = 3.
std::string iso_certificate(const Graph& g);

// All non-isomorphic d-regular graphs found by sampling until the certificate
// set saturates (no new graph for `stall` consecutive draws). Practical for
// small n where the family is tiny.
std::vector<Graph> all_regular_graphs(int n, int d, std::mt19937_64& rng, int stall = 600);

Graph read_graph(const std::string& path);
void write_graph(const Graph& g, const std::string& path);

} // namespace kg
