#include "galecount/halfplane.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace galecount {

namespace {

using Pattern = std::vector<Occupancy>;

Pattern apply(const Pattern& p, int l, bool reflect) {
    const int L = static_cast<int>(p.size());
    Pattern r(p.size());
    for (int i = 0; i < L; ++i) {
        const int j = reflect ? ((l + 1 - i) % L + L) % L : (i + l) % L;
        r[static_cast<size_t>(i)] = p[static_cast<size_t>(j)];
    }
    return r;
}

std::set<Pattern> dihedral_orbit(const Pattern& p) {
    std::set<Pattern> orbit;
    const int L = static_cast<int>(p.size());
    for (int l = 0; l < L; ++l) {
        orbit.insert(apply(p, l, false));
        orbit.insert(apply(p, l, true));
    }
    return orbit;
}

Pattern pat(std::initializer_list<int> slots) {
    Pattern p;
    for (int v : slots)
        p.push_back(v == 0 ? Occupancy::Zero : (v == 1 ? Occupancy::Positive : Occupancy::AtLeastTwo));
    return p;
}

}  // namespace

void ConfigurationSpec::validate() const {
    const int L = static_cast<int>(pattern.size());
    const int k = L / 2;
    if (L < 2 || L % 2 != 0) throw std::invalid_argument("pattern length must be even and >= 2");
    if (k > 4) throw std::invalid_argument("configurations exist only for k <= 4");
    for (int i = 0; i < L; ++i) {
        const bool z1 = pattern[static_cast<size_t>(i)] == Occupancy::Zero;
        if (z1 && pattern[static_cast<size_t>((i + k) % L)] == Occupancy::Zero)
            throw std::invalid_argument("opposite slots both empty");
        if (z1 && pattern[static_cast<size_t>((i + 1) % L)] == Occupancy::Zero)
            throw std::invalid_argument("adjacent slots both empty");
    }
    // AtLeastTwo marks are the half-plane-forced slots: a slot is forced
    // iff it is the unique occupied slot of some window of k-1 consecutive
    // positions. Marked patterns must carry exactly the forced set.
    bool any_marked = false;
    for (const auto& o : pattern) any_marked |= (o == Occupancy::AtLeastTwo);
    if (!any_marked) return;
    for (int i = 0; i < L; ++i) {
        int occupied = 0, last = -1;
        for (int j = 0; j < k - 1; ++j) {
            const int p = (i + j) % L;
            if (pattern[static_cast<size_t>(p)] != Occupancy::Zero) {
                ++occupied;
                last = p;
            }
        }
        if (occupied == 0) throw std::invalid_argument("marked pattern cannot satisfy the half-plane condition");
        if (occupied == 1 && pattern[static_cast<size_t>(last)] != Occupancy::AtLeastTwo)
            throw std::invalid_argument("missing >=2 mark on a forced slot");
    }
    for (int p = 0; p < L; ++p) {
        if (pattern[static_cast<size_t>(p)] != Occupancy::AtLeastTwo) continue;
        bool forced = false;
        for (int i = 0; i < L && !forced; ++i) {
            int occupied = 0;
            bool covers = false;
            for (int j = 0; j < k - 1; ++j) {
                const int q = (i + j) % L;
                if (pattern[static_cast<size_t>(q)] != Occupancy::Zero) {
                    ++occupied;
                    if (q == p) covers = true;
                }
            }
            forced = covers && occupied == 1;
        }
        if (!forced) throw std::invalid_argument(">=2 mark on a slot the half-plane condition does not force");
    }
}

const std::vector<ConfigurationSpec>& wheel_configurations() {
    static const std::vector<ConfigurationSpec> configs = [] {
        std::vector<ConfigurationSpec> v;
        v.push_back({pat({1, 1})});
        v.push_back({pat({0, 1})});
        v.push_back({pat({1, 1, 1, 1})});
        v.push_back({pat({0, 1, 1, 1})});
        v.push_back({pat({0, 1, 0, 1, 0, 1})});
        v.push_back({pat({0, 1, 0, 1, 1, 1})});
        v.push_back({pat({0, 1, 1, 1, 1, 1})});
        v.push_back({pat({1, 1, 1, 1, 1, 1})});
        v.push_back({pat({0, 1, 0, 1, 1, 0, 1, 1})});
        v.push_back({pat({1, 1, 1, 1, 1, 1, 1, 1})});
        v.push_back({pat({0, 1, 0, 1, 1, 1, 1, 1})});
        v.push_back({pat({0, 1, 1, 1, 1, 1, 1, 1})});
        v.push_back({pat({0, 1, 1, 0, 1, 1, 1, 1})});
        for (const auto& c : v) c.validate();
        return v;
    }();
    return configs;
}

const std::vector<ConfigurationSpec>& halfplane_configurations() {
    static const std::vector<ConfigurationSpec> configs = [] {
        std::vector<ConfigurationSpec> v;
        v.push_back({pat({2, 2, 2, 2})});
        v.push_back({pat({0, 2, 0, 2, 0, 2})});
        v.push_back({pat({0, 2, 0, 2, 1, 2})});
        v.push_back({pat({0, 2, 1, 1, 1, 2})});
        v.push_back({pat({1, 1, 1, 1, 1, 1})});
        v.push_back({pat({0, 2, 0, 1, 1, 0, 1, 1})});
        v.push_back({pat({1, 1, 1, 1, 1, 1, 1, 1})});
        v.push_back({pat({0, 2, 0, 1, 1, 1, 1, 1})});
        v.push_back({pat({0, 1, 1, 1, 1, 1, 1, 1})});
        v.push_back({pat({0, 1, 1, 0, 1, 1, 1, 1})});
        for (const auto& c : v) c.validate();
        return v;
    }();
    return configs;
}

TruncatedSeries configuration_contribution(const ConfigurationSpec& spec, bool oriented, int order) {
    spec.validate();
    const int L = static_cast<int>(spec.pattern.size());
    const int group_size = oriented ? L : 2 * L;
    const TruncatedSeries pos_weight = TruncatedSeries::from_rational({0, 1}, {1, -1}, order);
    const TruncatedSeries two_weight = TruncatedSeries::from_rational({0, 0, 1}, {1, -1}, order);

    TruncatedSeries total(order);
    for (const Pattern& q : dihedral_orbit(spec.pattern)) {
        for (int gi = 0; gi < group_size; ++gi) {
            const int l = gi % L;
            const bool reflect = gi >= L;
            if (apply(q, l, reflect) != q) continue;
            // cycles of the position permutation i -> preimage index
            std::vector<bool> seen(static_cast<size_t>(L), false);
            TruncatedSeries term = TruncatedSeries::from_polynomial(Polynomial({1}), order);
            for (int i = 0; i < L; ++i) {
                if (seen[static_cast<size_t>(i)]) continue;
                int len = 0;
                int j = i;
                while (!seen[static_cast<size_t>(j)]) {
                    seen[static_cast<size_t>(j)] = true;
                    ++len;
                    j = reflect ? ((l + 1 - j) % L + L) % L : (j + l) % L;
                }
                switch (q[static_cast<size_t>(i)]) {
                    case Occupancy::Zero:
                        break;  // forced label 0, weight 1
                    case Occupancy::Positive:
                        term = term * pos_weight.substitute_power(len);
                        break;
                    case Occupancy::AtLeastTwo:
                        term = term * two_weight.substitute_power(len);
                        break;
                }
            }
            total = total + term;
        }
    }
    return total.scaled(Rational(1, group_size));
}

TruncatedSeries wheels_not_p3_series(bool oriented, int order) {
    return wheels_not_p3_series_dropping(-1, oriented, order);
}

TruncatedSeries wheels_not_p3_series_dropping(int halfplane_index, bool oriented, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    TruncatedSeries total(order);
    for (const auto& spec : wheel_configurations())
        total = total + configuration_contribution(spec, oriented, order);
    const auto& hp = halfplane_configurations();
    for (size_t i = 0; i < hp.size(); ++i) {
        if (static_cast<int>(i) == halfplane_index) continue;
        total = total - configuration_contribution(hp[i], oriented, order);
    }
    return total;
}

TruncatedSeries not_p3_rational(int order) {
    const Polynomial num = Polynomial({0, 1}) * Polynomial({1, -1, -1, 3, 0, 0, 1, -2, 1});
    const Polynomial den = Polynomial({1, 1}) * Polynomial({1, 1}) * Polynomial({1, -1}) *
                           Polynomial({1, -1}) * Polynomial({1, -1}) * Polynomial({1, -1}) *
                           Polynomial({1, -1});
    return TruncatedSeries::from_rational(num, den, order);
}

TruncatedSeries oriented_not_p3_rational(int order) {
    const Polynomial num = Polynomial({0, 1}) * Polynomial({1, -2, 1, 3, -3, 7, -7, 1, 1});
    const Polynomial den = Polynomial({1, 1}) * Polynomial({1, -1}) * Polynomial({1, -1}) *
                           Polynomial({1, -1}) * Polynomial({1, -1}) * Polynomial({1, -1});
    return TruncatedSeries::from_rational(num, den, order);
}

TruncatedSeries oriented_not_p3_rational_legacy(int order) {
    const Polynomial num({0, 1, 0, -2, 3, 4, 4, 4, -7, -3, 3, 1});
    const Polynomial den = Polynomial({1, 1}) * Polynomial({1, 1}) * Polynomial({1, 1}) *
                           Polynomial({1, -1}) * Polynomial({1, -1}) * Polynomial({1, -1}) *
                           Polynomial({1, -1}) * Polynomial({1, -1});
    return TruncatedSeries::from_rational(num, den, order);
}

}  // namespace galecount
