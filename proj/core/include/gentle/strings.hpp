#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

struct Letter {
    int arrow = 0;
    bool inverse = false;

    Letter inverted() const { return {arrow, !inverse}; }
    bool direct() const { return !inverse; }
    // Dense code 2*arrow + inverse; also the letter order used for canonical forms.
    int code() const { return 2 * arrow + (inverse ? 1 : 0); }
    static Letter from_code(int code) { return {code / 2, (code % 2) != 0}; }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend bool operator<(const Letter& a, const Letter& b) { return a.code() < b.code(); }
};

inline int letter_source(const BoundQuiver& bq, Letter l) {
    return l.inverse ? bq.target(l.arrow) : bq.source(l.arrow);
}
inline int letter_target(const BoundQuiver& bq, Letter l) {
    return l.inverse ? bq.source(l.arrow) : bq.target(l.arrow);
}

// A walk w_1 ... w_n read left to right, with t(w_i) = s(w_{i+1}).  The
// start vertex is stored explicitly so that trivial walks carry their vertex.
struct Word {
    int start = 0;
    std::vector<Letter> letters;

    bool trivial() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }
    int end(const BoundQuiver& bq) const { return trivial() ? start : letter_target(bq, letters.back()); }
    // Vertex sitting before letter i (i = 0..n).
    int vertex_at(const BoundQuiver& bq, int i) const {
        return i == 0 ? start : letter_target(bq, letters[i - 1]);
    }

    friend bool operator==(const Word&, const Word&) = default;
};

// Shortlex order: length first, then letters; trivial words by vertex.
bool word_less(const Word& a, const Word& b);
struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

Word trivial_word(int v);
Word make_word(const BoundQuiver& bq, std::vector<Letter> letters);  // start from first letter
Word inverse(const BoundQuiver& bq, const Word& w);

struct StringVerdict {
    bool ok = true;
    int index = -1;          // offending letter index (0-based), -1 if none
    std::string reason;
};

// Checks composability, reducedness and I-avoidance.  Throws InvalidInput on
// unknown arrows.
StringVerdict is_string(const BoundQuiver& bq, const Word& w);
// Two-letter check shared by the automaton: may u be followed by w?
bool letters_compatible(const BoundQuiver& bq, Letter u, Letter w);

void require_string(const BoundQuiver& bq, const Word& w);  // throws NotAString

Word canonical_string(const BoundQuiver& bq, const Word& w);

// A band is a closed string, not a proper power, whose closing pair is also
// compatible (so every rotation and power is a string).
StringVerdict is_band(const BoundQuiver& bq, const Word& w);
Word canonical_band(const BoundQuiver& bq, const Word& w);  // throws NotABand

using LetterFilter = std::function<bool(Letter)>;

std::vector<Word> enumerate_strings(const BoundQuiver& bq, int max_len, const LetterFilter& filter = {});
std::vector<Word> enumerate_bands(const BoundQuiver& bq, int max_len);

// Literal syntax: "a41 a12^-1 a52", "e:v", optionally prefixed "band:".
Word parse_word(const BoundQuiver& bq, std::string_view text);
std::string format_word(const BoundQuiver& bq, const Word& w);

// States are letter codes 0..2|Q1|-1 followed by one trivial state per
// vertex.  Letter states carry the 2-local transitions; a trivial state has
// no transitions and only realizes the pair (e_v, e_v).
class StringAutomaton {
public:
    explicit StringAutomaton(const BoundQuiver& bq);

    int letter_state_count() const { return letters_; }
    int state_count() const { return letters_ + vertices_; }
    int trivial_state(int v) const { return letters_ + v; }
    bool is_trivial_state(int s) const { return s >= letters_; }
    const std::vector<int>& successors(int state) const { return succ_[state]; }

private:
    int letters_;
    int vertices_;
    std::vector<std::vector<int>> succ_;
};

// First and last automaton state of a word.
int first_state(const StringAutomaton& a, const Word& w);
int last_state(const StringAutomaton& a, const Word& w);

std::set<std::pair<int, int>> reachable_end_pairs(const StringAutomaton& automaton,
                                                  const std::vector<int>& left,
                                                  const std::vector<int>& right);

}  // namespace gentle
