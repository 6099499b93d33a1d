#pragma once

#include <functional>
#include <map>
#include <vector>

#include "galecount/rational.hpp"

namespace galecount {
namespace oracle {

/// Labels around the 2k-gon, read from the root in traversal order.
/// S1: opposite labels not both zero; S2: adjacent labels not both zero.
using WheelSequence = std::vector<int>;

enum class Group { Dihedral, Cyclic };

/// Image of s under the rotation (l,+) or reflection (l,-).
WheelSequence apply(const WheelSequence& s, int l, bool reflect);

/// Streams every wheel-sequence of total size n (all lengths 2k,
/// 1 <= k <= n), each exactly once. S1/S2 are pruned during generation.
void enumerate_wheel_sequences(int n, const std::function<void(const WheelSequence&)>& yield);
std::vector<WheelSequence> wheel_sequences(int n);

/// Half-plane condition in window form: every k-1 cyclically consecutive
/// labels sum to at least 2. For k = 1 the window is empty and the
/// condition fails.
bool satisfies_p3(const WheelSequence& s);

/// Orbit count under the chosen group via lexicographic-minimum
/// canonical forms. All sequences must have one common length.
long orbit_count(const std::vector<WheelSequence>& seqs, Group group);

struct FixedPairCounts {
    long rooted = 0;           // plain sequence count
    long rotation_pairs = 0;   // (sequence, nontrivial rotation) fixed pairs
    long reflection_pairs = 0; // (sequence, reflection) fixed pairs
};

/// Ground truth for R, R+, R- per (size, diameters).
std::map<int, FixedPairCounts> fixed_pair_counts(int n);

/// Rooted wheels fixed by the two canonical reflections, per diameter
/// count: ground truth for R^(0,-) and R^(-1,-).
struct ReflectionFixedCounts {
    long vertex_axis = 0;  // fixed by (0,-)
    long edge_axis = 0;    // fixed by (-1,-)
};
std::map<int, ReflectionFixedCounts> reflection_fixed_counts(int n);

/// Wheel orbit counts of size n per diameter count.
std::map<int, long> wheel_orbit_counts(int n, Group group);
/// Same restricted to wheels violating the half-plane condition.
std::map<int, long> not_p3_orbit_counts(int n, Group group);

struct BruteForceCounts {
    Int c;
    Int c_plus;
    Int c_minus;
};

/// Reduced-Gale-diagram counts of size n: dihedral orbits (c), cyclic
/// orbits (c+), achiral count (c-) computed both as 2c - c+ and directly
/// as orbits containing a reflection-fixed sequence (the two must agree).
/// Diagrams sum a centre label and a P3-satisfying wheel with k >= 2.
BruteForceCounts brute_force_counts(int n, int jobs = 1);

}  // namespace oracle
}  // namespace galecount
