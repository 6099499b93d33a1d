#include "galecount/automata.hpp"

#include <stdexcept>

namespace galecount {

LetterClass letter_class(LetterTag tag, int order) {
    switch (tag) {
        case LetterTag::B:
            return {tag, TruncatedSeries::from_rational({0, 0, 1}, {1, -2, 1}, order)};
        case LetterTag::C:
        case LetterTag::D:
            return {tag, TruncatedSeries::from_rational({0, 1}, {1, -1}, order)};
    }
    throw std::logic_error("unreachable");
}

WeightedAutomaton::WeightedAutomaton(int state_count, std::vector<Transition> transitions)
    : state_count_(state_count), transitions_(std::move(transitions)) {
    std::vector<std::vector<bool>> seen(static_cast<size_t>(state_count), std::vector<bool>(3, false));
    for (const auto& t : transitions_) {
        if (t.from < 0 || t.from >= state_count || t.to < 0 || t.to >= state_count)
            throw std::invalid_argument("transition endpoint out of range");
        auto s = seen[static_cast<size_t>(t.from)][static_cast<size_t>(t.letter)];
        if (s) throw std::invalid_argument("automaton not deterministic per (state, class)");
        seen[static_cast<size_t>(t.from)][static_cast<size_t>(t.letter)] = true;
    }
}

WeightedAutomaton generic_automaton() {
    using T = LetterTag;
    return WeightedAutomaton(3, {
                                    {0, T::B, 0}, {0, T::C, 1}, {0, T::D, 2},
                                    {1, T::B, 0}, {1, T::D, 2},
                                    {2, T::B, 0}, {2, T::C, 1},
                                });
}

WeightedAutomaton rooted_wheel_automaton() {
    using T = LetterTag;
    // state 0: start; 1 + 3*f + l for first-letter class f and last-letter
    // class l (B=0, C=1, D=2)
    std::vector<Transition> tr;
    const T tags[3] = {T::B, T::C, T::D};
    for (int f = 0; f < 3; ++f) {
        tr.push_back({0, tags[f], 1 + 3 * f + f});
        for (int l = 0; l < 3; ++l) {
            const int s = 1 + 3 * f + l;
            for (int nxt = 0; nxt < 3; ++nxt) {
                if (l == 1 && nxt == 1) continue;  // no CC factor
                if (l == 2 && nxt == 2) continue;  // no DD factor
                tr.push_back({s, tags[nxt], 1 + 3 * f + nxt});
            }
        }
    }
    return WeightedAutomaton(10, tr);
}

std::set<int> rooted_wheel_accepts() {
    // first B: any last; first C: last not D; first D: last not C
    return {1, 2, 3, 4, 5, 7, 9};
}

namespace {

std::vector<BivariateSeries> transfer_from(const WeightedAutomaton& a, int start, int order) {
    if (start < 0 || start >= a.state_count()) throw std::invalid_argument("bad start state");
    TruncatedSeries w[3] = {letter_class(LetterTag::B, order).weight,
                            letter_class(LetterTag::C, order).weight,
                            letter_class(LetterTag::D, order).weight};
    std::vector<BivariateSeries> acc(static_cast<size_t>(a.state_count()), BivariateSeries(order));
    std::vector<BivariateSeries> cur(static_cast<size_t>(a.state_count()), BivariateSeries(order));
    cur[static_cast<size_t>(start)] = BivariateSeries::constant(1, order);
    acc[static_cast<size_t>(start)] = cur[static_cast<size_t>(start)];
    for (int step = 1; step <= order; ++step) {
        std::vector<BivariateSeries> nxt(static_cast<size_t>(a.state_count()), BivariateSeries(order));
        bool any = false;
        for (const auto& t : a.transitions()) {
            const auto& src = cur[static_cast<size_t>(t.from)];
            if (src.is_zero()) continue;
            nxt[static_cast<size_t>(t.to)] =
                nxt[static_cast<size_t>(t.to)] + src.times_univariate(w[static_cast<int>(t.letter)], 1);
            any = true;
        }
        if (!any) break;
        cur = std::move(nxt);
        for (int s = 0; s < a.state_count(); ++s)
            acc[static_cast<size_t>(s)] = acc[static_cast<size_t>(s)] + cur[static_cast<size_t>(s)];
    }
    return acc;
}

}  // namespace

BivariateSeries solve_transfer(const WeightedAutomaton& a, int start, const std::set<int>& accepts,
                               int order) {
    if (accepts.empty()) throw std::invalid_argument("solve_transfer: empty accept set");
    auto acc = transfer_from(a, start, order);
    BivariateSeries out(order);
    for (int s : accepts) {
        if (s < 0 || s >= a.state_count()) throw std::invalid_argument("bad accept state");
        out = out + acc[static_cast<size_t>(s)];
    }
    return out;
}

BivariateSeries transfer_L(int i, int j, int order) {
    if (i < 0 || i > 2 || j < 0 || j > 2) throw std::invalid_argument("generic automaton states are 0..2");
    return solve_transfer(generic_automaton(), i, {j}, order);
}

BivariateSeries rooted_wheel_series_automaton(int order) {
    return solve_transfer(rooted_wheel_automaton(), 0, rooted_wheel_accepts(), order);
}

std::pair<BivariateSeries, BivariateSeries> reflection_word_series_automaton(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    const auto aut = generic_automaton();
    TruncatedSeries w[3] = {letter_class(LetterTag::B, order).weight,
                            letter_class(LetterTag::C, order).weight,
                            letter_class(LetterTag::D, order).weight};
    // row sums sum_j L_ij, evaluated at (x^2, u^2): the non-axis letters
    // cover two opposite vertices and two diameters each
    std::vector<BivariateSeries> rows2;
    rows2.reserve(3);
    for (int i = 0; i < 3; ++i) {
        auto acc = transfer_from(aut, i, order);
        rows2.push_back((acc[0] + acc[1] + acc[2]).substitute_powers(2));
    }
    // self-opposite vertex on the axis: label >= 1 on one diameter,
    // counted twice in size
    const TruncatedSeries tail = TruncatedSeries::from_rational({0, 0, 1}, {1, 0, -1}, order);

    // vertex-axis reflection (0,-): the axis letter (beta, gamma) is read
    // once at (x, u); odd diameter count has no trailing factor, even
    // adds one self-opposite vertex
    BivariateSeries r0_odd(order);
    for (int i = 0; i < 3; ++i) r0_odd = r0_odd + rows2[static_cast<size_t>(i)].times_univariate(w[i], 1);
    BivariateSeries r0 = r0_odd + r0_odd.times_univariate(tail, 1);

    // edge-axis reflection (-1,-): the word must be empty or start with a
    // letter in B (the two vertices adjacent to the axis are their own
    // neighbours), all letters counted twice
    const TruncatedSeries b2 = w[0].substitute_power(2);
    const BivariateSeries core = rows2[0].times_univariate(b2, 2);
    const BivariateSeries one = BivariateSeries::constant(1, order);
    BivariateSeries r1 = (one + core).times_univariate(tail, 1) + core;
    return {r0, r1};
}

BivariateSeries rooted_wheel_series_closed(int order) {
    const XUPoly num = {{4, 3, 1}, {4, 2, -2}, {3, 2, 2}, {4, 1, -1}, {3, 1, 4}, {2, 1, -5}, {1, 1, 2}};
    const XUPoly den_a = {{3, 2, 1}, {2, 1, -1}, {2, 0, -3}, {3, 0, 1}, {1, 0, 3}, {1, 1, 1}, {0, 0, -1}};
    const XUPoly den_b = {{1, 0, 1}, {1, 1, -1}, {0, 0, -1}};
    return BivariateSeries::from_rational(num, xu_mul(den_a, den_b), order);
}

BivariateSeries transfer_L10_closed(int order) {
    const XUPoly num = {{2, 1, 1}, {3, 1, -1}};
    const XUPoly den = {{0, 0, 1}, {1, 0, -3}, {1, 1, -1}, {2, 0, 3}, {2, 1, 1}, {3, 0, -1}, {3, 2, -1}};
    return BivariateSeries::from_rational(num, den, order);
}

namespace {
const XUPoly kReflDen = {{6, 4, 1}, {4, 2, -1}, {2, 2, 1}, {6, 0, 1}, {4, 0, -3}, {2, 0, 3}, {0, 0, -1}};
const XUPoly kReflN1 = {{3, 0, 1}, {3, 2, 1}, {2, 0, -2}, {1, 0, -1}, {0, 0, 2}};
}  // namespace

BivariateSeries reflection_vertex_axis_closed(int order) {
    const XUPoly ux_xp1 = xu_mul({{1, 1, 1}}, {{1, 0, 1}, {0, 0, 1}});
    const XUPoly mid = {{0, 0, 1}, {2, 0, -1}, {2, 1, 1}};
    const XUPoly num = xu_mul(xu_mul(ux_xp1, mid), kReflN1);
    const XUPoly den = xu_mul({{1, 0, 1}, {0, 0, -1}}, kReflDen);
    return BivariateSeries::from_rational(num, den, order);
}

BivariateSeries reflection_edge_axis_closed(int order) {
    const XUPoly num = xu_mul({{2, 1, 1}}, XUPoly{{4, 1, 1},
                                                  {4, 3, -1},
                                                  {2, 1, -1},
                                                  {0, 0, -1},
                                                  {2, 0, 2},
                                                  {4, 0, -1},
                                                  {2, 2, 1},
                                                  {4, 2, -1}});
    return BivariateSeries::from_rational(num, kReflDen, order);
}

}  // namespace galecount
