#include "galecount/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace galecount {
namespace oracle {

WheelSequence apply(const WheelSequence& s, int l, bool reflect) {
    const int L = static_cast<int>(s.size());
    WheelSequence r(s.size());
    for (int i = 0; i < L; ++i) {
        const int j = reflect ? ((l + 1 - i) % L + L) % L : (i + l) % L;
        r[static_cast<size_t>(i)] = s[static_cast<size_t>(j)];
    }
    return r;
}

namespace {

void enumerate_length(int n, int k, const std::function<void(const WheelSequence&)>& yield) {
    const int L = 2 * k;
    WheelSequence seq(static_cast<size_t>(L), 0);
    // depth-first over label values with S1/S2 pruning against already
    // placed positions
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == L) {
            if (rem != 0) return;
            // wrap-around adjacency (last, first)
            if (seq[static_cast<size_t>(L - 1)] == 0 && seq[0] == 0) return;
            yield(seq);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            if (v == 0) {
                if (pos > 0 && seq[static_cast<size_t>(pos - 1)] == 0) continue;
                if (pos >= k && seq[static_cast<size_t>(pos - k)] == 0) continue;
            }
            seq[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rem - v);
        }
        seq[static_cast<size_t>(pos)] = 0;
    };
    rec(0, n);
}

}  // namespace

void enumerate_wheel_sequences(int n, const std::function<void(const WheelSequence&)>& yield) {
    if (n < 1) throw std::invalid_argument("size must be >= 1");
    for (int k = 1; k <= n; ++k) enumerate_length(n, k, yield);
}

std::vector<WheelSequence> wheel_sequences(int n) {
    std::vector<WheelSequence> out;
    enumerate_wheel_sequences(n, [&](const WheelSequence& s) { out.push_back(s); });
    return out;
}

bool satisfies_p3(const WheelSequence& s) {
    const int L = static_cast<int>(s.size());
    const int k = L / 2;
    if (k == 1) return false;
    for (int i = 0; i < L; ++i) {
        int sum = 0;
        for (int j = 0; j < k - 1; ++j) sum += s[static_cast<size_t>((i + j) % L)];
        if (sum < 2) return false;
    }
    return true;
}

namespace {

WheelSequence canonical(const WheelSequence& s, Group group) {
    const int L = static_cast<int>(s.size());
    WheelSequence best = s;
    for (int l = 0; l < L; ++l) {
        WheelSequence r = apply(s, l, false);
        if (r < best) best = r;
        if (group == Group::Dihedral) {
            WheelSequence m = apply(s, l, true);
            if (m < best) best = m;
        }
    }
    return best;
}

}  // namespace

long orbit_count(const std::vector<WheelSequence>& seqs, Group group) {
    if (seqs.empty()) return 0;
    const size_t len = seqs.front().size();
    std::set<WheelSequence> reps;
    for (const auto& s : seqs) {
        if (s.size() != len) throw std::invalid_argument("orbit_count: mixed lengths");
        reps.insert(canonical(s, group));
    }
    return static_cast<long>(reps.size());
}

std::map<int, FixedPairCounts> fixed_pair_counts(int n) {
    std::map<int, FixedPairCounts> out;
    enumerate_wheel_sequences(n, [&](const WheelSequence& s) {
        const int L = static_cast<int>(s.size());
        auto& c = out[L / 2];
        c.rooted++;
        for (int l = 1; l < L; ++l)
            if (apply(s, l, false) == s) c.rotation_pairs++;
        for (int l = 0; l < L; ++l)
            if (apply(s, l, true) == s) c.reflection_pairs++;
    });
    return out;
}

std::map<int, ReflectionFixedCounts> reflection_fixed_counts(int n) {
    // apply(s, -1, true) maps i -> -i: the axis through position 0 and its
    // opposite; apply(s, 0, true) maps i -> 1-i: the axis between 0 and 1
    std::map<int, ReflectionFixedCounts> out;
    enumerate_wheel_sequences(n, [&](const WheelSequence& s) {
        auto& c = out[static_cast<int>(s.size()) / 2];
        if (apply(s, -1, true) == s) c.vertex_axis++;
        if (apply(s, 0, true) == s) c.edge_axis++;
    });
    return out;
}

namespace {

std::map<int, long> orbit_counts_filtered(int n, Group group, bool want_p3_violating) {
    std::map<int, std::set<WheelSequence>> reps;
    enumerate_wheel_sequences(n, [&](const WheelSequence& s) {
        if (want_p3_violating == satisfies_p3(s)) return;
        reps[static_cast<int>(s.size()) / 2].insert(canonical(s, group));
    });
    std::map<int, long> out;
    for (const auto& [k, r] : reps) out[k] = static_cast<long>(r.size());
    return out;
}

}  // namespace

std::map<int, long> wheel_orbit_counts(int n, Group group) {
    std::map<int, std::set<WheelSequence>> reps;
    enumerate_wheel_sequences(n, [&](const WheelSequence& s) {
        reps[static_cast<int>(s.size()) / 2].insert(canonical(s, group));
    });
    std::map<int, long> out;
    for (const auto& [k, r] : reps) out[k] = static_cast<long>(r.size());
    return out;
}

std::map<int, long> not_p3_orbit_counts(int n, Group group) {
    return orbit_counts_filtered(n, group, true);
}

namespace {

struct DiagramTally {
    long dihedral = 0;
    long cyclic = 0;
    long achiral = 0;
};

// P3 wheels of one size m and one diameter count k, tallied by orbit.
DiagramTally tally_size_k(int m, int k) {
    DiagramTally t;
    std::set<WheelSequence> seen_d, seen_c;
    std::vector<WheelSequence> all;
    enumerate_length(m, k, [&](const WheelSequence& s) {
        if (satisfies_p3(s)) all.push_back(s);
    });
    for (const auto& s : all) {
        auto cd = canonical(s, Group::Dihedral);
        if (seen_d.insert(cd).second) {
            // the orbit contains a reflection-fixed element iff s itself is
            // fixed by some reflection (conjugates of reflections by group
            // elements are reflections)
            const int L = 2 * k;
            bool achiral = false;
            for (int l = 0; l < L && !achiral; ++l)
                if (apply(s, l, true) == s) achiral = true;
            if (achiral) t.achiral++;
            t.dihedral++;
        }
        if (seen_c.insert(canonical(s, Group::Cyclic)).second) t.cyclic++;
    }
    return t;
}

}  // namespace

BruteForceCounts brute_force_counts(int n, int jobs) {
    if (n < 1) throw std::invalid_argument("size must be >= 1");
    if (jobs < 1) jobs = 1;
    // (wheel size m, diameters k) tasks; centre label absorbs n - m
    std::vector<std::pair<int, int>> tasks;
    for (int m = 1; m <= n; ++m)
        for (int k = 2; 2 * k <= 2 * m; ++k) tasks.emplace_back(m, k);
    std::vector<DiagramTally> tallies(tasks.size());
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) tallies[i] = tally_size_k(tasks[i].first, tasks[i].second);
    } else {
        std::vector<std::thread> workers;
        std::atomic<size_t> next{0};
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&]() {
                for (;;) {
                    const size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    tallies[i] = tally_size_k(tasks[i].first, tasks[i].second);
                }
            });
        }
        for (auto& w : workers) w.join();
    }
    long c = 0, cp = 0, ca = 0;
    for (const auto& t : tallies) {
        c += t.dihedral;
        cp += t.cyclic;
        ca += t.achiral;
    }
    if (2 * c - cp != ca)
        throw std::logic_error("achiral count mismatch: 2c - c+ != direct reflection-orbit count");
    return {Int(c), Int(cp), Int(2 * c - cp)};
}

}  // namespace oracle
}  // namespace galecount
