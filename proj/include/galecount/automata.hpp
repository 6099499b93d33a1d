#pragma once

#include <set>
#include <utility>
#include <vector>

#include "galecount/bivariate.hpp"
#include "galecount/series.hpp"

namespace galecount {

/// Letter classes of the word encoding of rooted wheels. A letter is a
/// pair of opposite vertex labels; B = both positive, C = top positive
/// only, D = bottom positive only.
enum class LetterTag { B, C, D };

struct LetterClass {
    LetterTag tag;
    TruncatedSeries weight;  // size-generating function of the class
};

/// B(x) = x^2/(1-x)^2, C(x) = D(x) = x/(1-x).
LetterClass letter_class(LetterTag tag, int order);

struct Transition {
    int from;
    LetterTag letter;
    int to;
};

/// Finite automaton whose transitions are labeled by letter classes.
/// Deterministic per (state, class).
class WeightedAutomaton {
  public:
    WeightedAutomaton(int state_count, std::vector<Transition> transitions);

    int state_count() const { return state_count_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

  private:
    int state_count_;
    std::vector<Transition> transitions_;
};

/// The 3-state machine on words avoiding the factors CC and DD.
/// States: 0 = last letter in B (or start), 1 = last letter in C,
/// 2 = last letter in D.
WeightedAutomaton generic_automaton();

/// Machine for non-empty words avoiding CC and DD whose (first, last)
/// letter pair is not in CxD nor DxC. State 0 is the bare start; states
/// 1..9 are (first−letter class, last−letter class) pairs.
WeightedAutomaton rooted_wheel_automaton();
std::set<int> rooted_wheel_accepts();

/// Sum over accepted words of x^size u^length, by iterating the transfer
/// step on truncated bivariate series. Each letter carries size >= 1, so
/// `order` steps are enough.
BivariateSeries solve_transfer(const WeightedAutomaton& a, int start, const std::set<int>& accepts,
                               int order);

/// L_ij of the generic automaton: words from state i to state j.
BivariateSeries transfer_L(int i, int j, int order);

/// R(x,u): rooted wheels by size and number of diameters, from the word
/// automaton.
BivariateSeries rooted_wheel_series_automaton(int order);

/// Rooted wheels fixed by the two canonical reflections, from the
/// first-letter-read-separately machine: the inner word is weighted at
/// (x^2, u^2) because every non-axis letter covers two vertices and two
/// diameters, the self-opposite tail carries u x^2/(1-x^2).
/// Returns (R^(0,-), R^(-1,-)).
std::pair<BivariateSeries, BivariateSeries> reflection_word_series_automaton(int order);

/// Closed-form counterparts, entered as rational functions and expanded
/// by recurrence. These are the cross-check oracles for the machine
/// routes above.
BivariateSeries rooted_wheel_series_closed(int order);
BivariateSeries transfer_L10_closed(int order);
BivariateSeries reflection_vertex_axis_closed(int order);  // R^(0,-)
BivariateSeries reflection_edge_axis_closed(int order);    // R^(-1,-)

}  // namespace galecount
