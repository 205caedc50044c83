#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"
#include "gentle/representation.hpp"

namespace gentle {

// A nonzero path of positive length, read forwards or as a formal inverse.
struct HomotopyLetter {
    NonzeroPath path;
    bool inverse = false;

    // Walk endpoints: a direct letter runs s(p) -> t(p), an inverse one t(p) -> s(p).
    int walk_source() const { return inverse ? path.end : path.start; }
    int walk_target() const { return inverse ? path.start : path.end; }
    int weight() const { return inverse ? -1 : 1; }
    HomotopyLetter inverted() const { return {path, !inverse}; }
    friend bool operator==(const HomotopyLetter&, const HomotopyLetter&) = default;
    friend auto operator<=>(const HomotopyLetter&, const HomotopyLetter&) = default;
};

struct HomotopyWord {
    int start = 0;
    std::vector<HomotopyLetter> letters;
    bool closed = false;

    int length() const { return static_cast<int>(letters.size()); }
    int end() const { return letters.empty() ? start : letters.back().walk_target(); }
    int balance() const;
    friend bool operator==(const HomotopyWord&, const HomotopyWord&) = default;
};

HomotopyWord inverse(const HomotopyWord& h);

// Whether y may follow x in a homotopy string.
bool homotopy_pair_ok(const BoundQuiver& bq, const HomotopyLetter& x, const HomotopyLetter& y);

struct HomotopyVerdict {
    bool ok = true;
    int index = -1;  // offending letter (or pair start)
    std::string reason;
};
HomotopyVerdict is_homotopy_string(const BoundQuiver& bq, const HomotopyWord& h);
HomotopyVerdict is_homotopy_band(const BoundQuiver& bq, const HomotopyWord& h);

using ArrowFilter = std::function<bool(int arrow)>;

// All letters (both orientations) whose arrows pass the filter.
std::vector<HomotopyLetter> homotopy_letters(const BoundQuiver& bq, const ArrowFilter& allowed = {});

struct HomotopyBandSearch {
    bool exists = false;
    std::optional<HomotopyWord> witness;
};
HomotopyBandSearch homotopy_band_exists(const BoundQuiver& bq);

// Homotopy strings with at most max_letters letters, one per inversion class,
// trivial words included.
std::vector<HomotopyWord> enumerate_homotopy_strings(const BoundQuiver& bq, int max_letters,
                                                     const ArrowFilter& allowed = {});

// Degree of the summand at walk vertex i; vertex 0 sits in degree `anchor`.
std::vector<int> string_complex_degrees(const HomotopyWord& h, int anchor);
ComplexOfReps string_complex(const BoundQuiver& bq, const HomotopyWord& h, int anchor = 0);

struct WidthReport {
    std::vector<CohomologyDegree> cohomology;
    int hw = 0;
    int lowest_nonzero = 0;
    int highest_nonzero = 0;
};
WidthReport cohomological_width(const BoundQuiver& bq, const ComplexOfReps& x);
WidthReport hw(const BoundQuiver& bq, const HomotopyWord& h, int anchor = 0);

HomotopyWord parse_homotopy_word(const BoundQuiver& bq, const std::string& text);
std::string format_homotopy_word(const BoundQuiver& bq, const HomotopyWord& h);

struct TheoremMain2Report {
    int strings_checked = 0;
    int max_hw = 0;
    std::optional<HomotopyWord> widest;
    bool side1 = true;   // every enumerated off-cycle string has hw <= 2
    bool cond1 = false;  // fin.dim <= 2
    bool cond2 = false;
    bool side2 = false;
    bool agree = false;
};
TheoremMain2Report check_theorem_main2(const BoundQuiver& bq, int max_letters = 6);

}  // namespace gentle
