#pragma once
#include <cstdint>
#include <vector>

namespace kg {

// Partition-ensemble theory for d = 2 regular graphs (parts >= 3), plus the
// d = 3 constants. All averages weight a loop of length L by the uniform
// site-choice probability L/N within a graph, then average over partitions.
struct TheoryRow {
    int n = 0;
    int64_t count = 0;          // number of partitions of n into parts >= 3
    double d_free = 0.0;        // average of sum_L L^2 * (L/N)
    double log4_d_int_upper = 0.0; // average over partitions of log4(sum_L (L/N) 4^L)
    double loop_avg = 0.0;      // average of sum_L L * (L/N); also log4 of the lower bound
};

int64_t partition_count_min3(int n);

// partitions of n into exactly m parts, each >= i (i >= 3)
int64_t count_partitions(int n, int m, int i);
double theory_d_free(int n);
double theory_loop_avg(int n);
double theory_d_int_upper_log4(int n);
TheoryRow theory_row(int n);
std::vector<TheoryRow> theory_table(const std::vector<int>& sizes);

// degree-3 graphs are treated as one loop of length N
inline double theory_d3_d_free(int n) { return double(n) * n; }
inline double theory_d3_loop(int n) { return double(n); }

} // namespace kg
