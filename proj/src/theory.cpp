#include "kg/theory.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace kg {

namespace {

constexpr int kMaxN = 400;

// memo over (n, min part); counts fit int64 well past n = 200
int64_t cnt(int n, int mn, std::unordered_map<int64_t, int64_t>& memo) {
    if (n == 0) return 1;
    if (mn > n) return 0;
    int64_t key = int64_t(n) * 1024 + mn;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int64_t tot = 0;
    for (int k = mn; k <= n; ++k)
        if (n - k == 0 || n - k >= k) tot += cnt(n - k, k, memo);
    memo[key] = tot;
    return tot;
}

// sum over partitions (parts >= mn) of sum_{L in partition} L^p
int64_t powsum(int n, int mn, int p, std::unordered_map<int64_t, int64_t>& cmemo,
               std::unordered_map<int64_t, int64_t>& smemo) {
    if (n == 0) return 0;
    if (mn > n) return 0;
    int64_t key = int64_t(n) * 1024 + mn;
    auto it = smemo.find(key);
    if (it != smemo.end()) return it->second;
    int64_t tot = 0;
    for (int k = mn; k <= n; ++k) {
        if (n - k != 0 && n - k < k) continue;
        int64_t kp = 1;
        for (int q = 0; q < p; ++q) kp *= k;
        tot += kp * cnt(n - k, k, cmemo) + powsum(n - k, k, p, cmemo, smemo);
    }
    smemo[key] = tot;
    return tot;
}

// partitions of n into exactly m parts, each >= mn
int64_t cnt_parts(int n, int m, int mn, std::unordered_map<int64_t, int64_t>& memo) {
    if (m == 0) return n == 0 ? 1 : 0;
    if (n < int64_t(m) * mn) return 0;
    int64_t key = (int64_t(n) * 512 + m) * 512 + mn;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int64_t tot = 0;
    for (int k = mn; k * m <= n; ++k) tot += cnt_parts(n - k, m - 1, k, memo);
    memo[key] = tot;
    return tot;
}

struct Caches {
    std::unordered_map<int64_t, int64_t> cnt3, sum2, sum3, exact;
};
Caches& caches() {
    static Caches c;
    return c;
}

// per-partition log4 of sum_L (L/N) 4^L, accumulated over all partitions;
// 4^L stays inside double range for L <= 400. This average of logs cannot be
// collapsed into the count recurrences, so the partitions are walked
// explicitly; a power table keeps the walk at a few ns per node.
double upper_log4_total(int n, int mn, double acc, int topn,
                        const std::vector<double>& pow4) {
    double tot = 0.0;
    for (int k = mn; k <= n; ++k) {
        if (n - k != 0 && n - k < k) continue;
        double term = acc + double(k) / topn * pow4[k];
        if (n - k == 0)
            tot += std::log2(term) * 0.5;
        else
            tot += upper_log4_total(n - k, k, term, topn, pow4);
    }
    return tot;
}

void check_n(int n) {
    if (n < 3 || n > kMaxN) throw std::invalid_argument("theory size out of range [3,400]");
}

} // namespace

int64_t partition_count_min3(int n) {
    check_n(n);
    return cnt(n, 3, caches().cnt3);
}

int64_t count_partitions(int n, int m, int i) {
    if (n < 0 || m < 1 || i < 3) return 0;
    return cnt_parts(n, m, i, caches().exact);
}

double theory_d_free(int n) {
    check_n(n);
    auto& c = caches();
    return double(powsum(n, 3, 3, c.cnt3, c.sum3)) / (double(n) * cnt(n, 3, c.cnt3));
}

double theory_loop_avg(int n) {
    check_n(n);
    auto& c = caches();
    return double(powsum(n, 3, 2, c.cnt3, c.sum2)) / (double(n) * cnt(n, 3, c.cnt3));
}

double theory_d_int_upper_log4(int n) {
    check_n(n);
    std::vector<double> pow4(n + 1, 1.0);
    for (int k = 1; k <= n; ++k) pow4[k] = 4.0 * pow4[k - 1];
    return upper_log4_total(n, 3, 0.0, n, pow4) / double(partition_count_min3(n));
}

TheoryRow theory_row(int n) {
    TheoryRow r;
    r.n = n;
    r.count = partition_count_min3(n);
    r.d_free = theory_d_free(n);
    r.loop_avg = theory_loop_avg(n);
    r.log4_d_int_upper = theory_d_int_upper_log4(n);
    return r;
}

std::vector<TheoryRow> theory_table(const std::vector<int>& sizes) {
    std::vector<TheoryRow> out;
    out.reserve(sizes.size());
    for (int n : sizes) out.push_back(theory_row(n));
    return out;
}

} // namespace kg
