// Independent brute-force reference implementations used to cross-check the
// library. Deliberately shares no code with it: diagrams are raw row strings,
// enumeration runs on odometers, and vertex colors come from a framed exchange
// matrix instead of a tracked basis inverse.
#pragma once

#include <gmpxx.h>

#include <set>
#include <string>
#include <vector>

namespace oracle {

// Row strings of '0'/'1', top row first. True iff lengths form a partition
// (positive, weakly decreasing) and every 0 has an all-zero row segment to its
// left or an all-zero column segment above it.
bool is_le(const std::vector<std::string>& rows);

// Every valid diagram whose shape fits in rows x cols, as '/'-joined strings
// (the empty diagram is the empty string). Order is the set's own.
std::set<std::string> all_le(int rows, int cols);

long long count_le(int rows, int cols);

// Framed exchange matrix: the n x n matrix b extended to 2n x 2n with an arrow
// from each vertex to its private frozen copy. Mutating only the first n rows
// and columns makes the right block track the c-vectors, whose row signs give
// the green/red classification.
struct FramedState {
    int n = 0;
    std::vector<std::vector<mpz_class>> bhat;
};

FramedState framed_init(const std::vector<std::vector<mpz_class>>& b);
void framed_mutate(FramedState& state, int k);

enum class FramedColor { Green, Red, Mixed };
FramedColor framed_color(const FramedState& state, int k);

// Row k of the frame block (the c-vector of vertex k).
std::vector<mpz_class> framed_c_row(const FramedState& state, int k);

}  // namespace oracle
