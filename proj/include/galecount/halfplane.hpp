#pragma once

#include <vector>

#include "galecount/series.hpp"

namespace galecount {

enum class Occupancy { Zero, Positive, AtLeastTwo };

/// Occupancy pattern of a wheel with at most 4 diameters, one slot per
/// vertex of the 2k-gon. Positive slots carry weight I(x) = x/(1-x),
/// AtLeastTwo slots J(x) = x^2/(1-x); AtLeastTwo marks appear exactly
/// where the half-plane condition forces a label >= 2.
struct ConfigurationSpec {
    std::vector<Occupancy> pattern;

    int diameters() const { return static_cast<int>(pattern.size()) / 2; }
    void validate() const;
};

/// The 13 occupancy classes of wheels with at most 4 diameters.
const std::vector<ConfigurationSpec>& wheel_configurations();

/// The 10 classes additionally satisfying the half-plane condition, with
/// forced >= 2 marks. Index 7 is the four-diameter class with two empty
/// slots at distance 2, the one whose omission reproduces a historically
/// wrong count.
const std::vector<ConfigurationSpec>& halfplane_configurations();

/// Generating function of (oriented) wheels whose occupancy lies in the
/// dihedral class of `spec`: Burnside average over the pattern's orbit,
/// each stabilizing group element contributing the product over its
/// position cycles of the slot weight at x^{cycle length}.
TruncatedSeries configuration_contribution(const ConfigurationSpec& spec, bool oriented, int order);

/// Wheels violating the half-plane condition: sum of the 13 contributions
/// minus the sum of the 10.
TruncatedSeries wheels_not_p3_series(bool oriented, int order);

/// Same with one of the 10 subtractions omitted (regression hook).
TruncatedSeries wheels_not_p3_series_dropping(int halfplane_index, bool oriented, int order);

/// Closed forms. The oriented "legacy" variant reproduces older published
/// tables; the configuration sum and exhaustive enumeration both refute
/// it (first difference at x^8), see the verify report.
TruncatedSeries not_p3_rational(int order);
TruncatedSeries oriented_not_p3_rational(int order);
TruncatedSeries oriented_not_p3_rational_legacy(int order);

}  // namespace galecount
