#pragma once

// Reference tables of the HW observables for d=3 and d=4, transcribed
// symbolically and evaluated independently of hw_observable().
//
// Entry notation: terms joined by '+', each term an optional '-' followed by a
// product of factors
//   c = chi = (1+i)/2,  C = chi*,  w = omega = e^{2 pi i/d},  W = omega*,
//   i = imaginary unit,  1 = one,  0 = zero.
// A table flagged `scaled` is multiplied by 1/sqrt2.

#include "hwobs/hw_basis.hpp"
#include "hwobs/numerics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace hwobs::golden {

struct Table {
    int d;
    int l;
    int m;
    bool scaled;
    std::vector<std::vector<std::string_view>> rows;
};

namespace detail {

inline Complex evaluate_term(std::string_view term, int d) {
    Complex v{1.0, 0.0};
    const Complex chi{0.5, 0.5};
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
    for (char ch : term) {
        switch (ch) {
            case '-': v = -v; break;
            case 'c': v *= chi; break;
            case 'C': v *= std::conj(chi); break;
            case 'w': v *= omega; break;
            case 'W': v *= std::conj(omega); break;
            case 'i': v *= Complex{0.0, 1.0}; break;
            case '1': break;
            case '0': v = 0.0; break;
            case ' ': break;
            default: throw ValidationError(std::string("unknown symbol '") + ch + "' in golden table entry");
        }
    }
    return v;
}

}  // namespace detail

inline Complex evaluate_entry(std::string_view entry, int d) {
    Complex sum{0.0, 0.0};
    std::size_t start = 0;
    while (start <= entry.size()) {
        const auto plus = entry.find('+', start);
        const auto end = plus == std::string_view::npos ? entry.size() : plus;
        sum += detail::evaluate_term(entry.substr(start, end - start), d);
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return sum;
}

inline ComplexMatrix evaluate(const Table& t) {
    const auto n = static_cast<std::size_t>(t.d);
    ComplexMatrix m(n, n);
    const double scale = t.scaled ? 1.0 / std::numbers::sqrt2 : 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = scale * evaluate_entry(t.rows.at(i).at(j), t.d);
    return m;
}

inline const std::vector<Table>& tables() {
    static const std::vector<Table> all = {
        // d = 3
        {3, 0, 0, false, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}},
        {3, 0, 1, false, {{"0", "C", "c"}, {"c", "0", "C"}, {"C", "c", "0"}}},
        {3, 0, 2, false, {{"0", "c", "C"}, {"C", "0", "c"}, {"c", "C", "0"}}},
        {3, 1, 0, false, {{"c+C", "0", "0"}, {"0", "cw+CW", "0"}, {"0", "0", "cW+Cw"}}},
        {3, 1, 1, false, {{"0", "-Cw", "-cw"}, {"-cW", "0", "-C"}, {"-CW", "-c", "0"}}},
        {3, 1, 2, false, {{"0", "cW", "CW"}, {"Cw", "0", "c"}, {"cw", "C", "0"}}},
        {3, 2, 0, false, {{"c+C", "0", "0"}, {"0", "cW+Cw", "0"}, {"0", "0", "cw+CW"}}},
        {3, 2, 1, false, {{"0", "CW", "cW"}, {"cw", "0", "C"}, {"Cw", "c", "0"}}},
        {3, 2, 2, false, {{"0", "cw", "Cw"}, {"CW", "0", "c"}, {"cW", "C", "0"}}},
        // d = 4
        {4, 0, 0, false, {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}},
        {4, 0, 1, false, {{"0", "C", "0", "c"}, {"c", "0", "C", "0"}, {"0", "c", "0", "C"}, {"C", "0", "c", "0"}}},
        {4, 0, 2, false, {{"0", "0", "1", "0"}, {"0", "0", "0", "1"}, {"1", "0", "0", "0"}, {"0", "1", "0", "0"}}},
        {4, 0, 3, false, {{"0", "c", "0", "C"}, {"C", "0", "c", "0"}, {"0", "C", "0", "c"}, {"c", "0", "C", "0"}}},
        {4, 1, 0, false, {{"1", "0", "0", "0"}, {"0", "-1", "0", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "1"}}},
        {4, 1, 1, true, {{"0", "-i", "0", "1"}, {"i", "0", "-1", "0"}, {"0", "-1", "0", "i"}, {"1", "0", "-i", "0"}}},
        {4, 1, 2, false, {{"0", "0", "-i", "0"}, {"0", "0", "0", "i"}, {"i", "0", "0", "0"}, {"0", "-i", "0", "0"}}},
        {4, 1, 3, true, {{"0", "-i", "0", "-1"}, {"i", "0", "1", "0"}, {"0", "1", "0", "i"}, {"-1", "0", "-i", "0"}}},
        {4, 2, 0, false, {{"1", "0", "0", "0"}, {"0", "-1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "-1"}}},
        {4, 2, 1, false, {{"0", "-c", "0", "C"}, {"-C", "0", "c", "0"}, {"0", "C", "0", "-c"}, {"c", "0", "-C", "0"}}},
        {4, 2, 2, false, {{"0", "0", "-1", "0"}, {"0", "0", "0", "1"}, {"-1", "0", "0", "0"}, {"0", "1", "0", "0"}}},
        {4, 2, 3, false, {{"0", "-C", "0", "c"}, {"-c", "0", "C", "0"}, {"0", "c", "0", "-C"}, {"C", "0", "-c", "0"}}},
        {4, 3, 0, false, {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "-1"}}},
        {4, 3, 1, true, {{"0", "-1", "0", "-i"}, {"-1", "0", "-i", "0"}, {"0", "i", "0", "1"}, {"i", "0", "1", "0"}}},
        {4, 3, 2, false, {{"0", "0", "i", "0"}, {"0", "0", "0", "i"}, {"-i", "0", "0", "0"}, {"0", "-i", "0", "0"}}},
        {4, 3, 3, true, {{"0", "1", "0", "-i"}, {"1", "0", "-i", "0"}, {"0", "i", "0", "-1"}, {"i", "0", "-1", "0"}}},
    };
    return all;
}

struct Mismatch {
    PhasePoint point;
    double max_abs_diff;
};

/// Compares every table against hw_observable(); empty result means all match.
inline std::vector<Mismatch> compare_all(double tol = 1e-12) {
    std::vector<Mismatch> out;
    for (const auto& t : tables()) {
        const PhasePoint p{t.d, t.l, t.m};
        const double diff = max_abs_diff(evaluate(t), hw_observable(p).matrix);
        if (!(diff <= tol)) out.push_back({p, diff});
    }
    return out;
}

}  // namespace hwobs::golden
