#include "gentle/strings.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "gentle/error.hpp"

namespace gentle {

bool word_less(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    if (a.trivial()) return a.start < b.start;
    return std::lexicographical_compare(a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end());
}

Word trivial_word(int v) { return Word{v, {}}; }

Word make_word(const BoundQuiver& bq, std::vector<Letter> letters) {
    if (letters.empty()) throw InvalidInput("a nontrivial word needs at least one letter");
    for (auto l : letters)
        if (l.arrow < 0 || l.arrow >= bq.arrow_count()) throw InvalidInput("word uses an unknown arrow");
    int start = letter_source(bq, letters.front());
    return Word{start, std::move(letters)};
}

Word inverse(const BoundQuiver& bq, const Word& w) {
    if (w.trivial()) return w;
    Word r{w.end(bq), {}};
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(it->inverted());
    return r;
}

bool letters_compatible(const BoundQuiver& bq, Letter u, Letter w) {
    if (letter_target(bq, u) != letter_source(bq, w)) return false;
    if (w == u.inverted()) return false;
    if (u.direct() && w.direct()) return !bq.is_relation(u.arrow, w.arrow);
    if (u.inverse && w.inverse) return !bq.is_relation(w.arrow, u.arrow);
    return true;
}

StringVerdict is_string(const BoundQuiver& bq, const Word& w) {
    for (auto l : w.letters)
        if (l.arrow < 0 || l.arrow >= bq.arrow_count()) throw InvalidInput("word uses an unknown arrow");
    if (w.start < 0 || w.start >= bq.vertex_count()) throw InvalidInput("word starts at an unknown vertex");
    if (w.trivial()) return {};
    if (letter_source(bq, w.letters[0]) != w.start) return {false, 0, "first letter does not leave the start vertex"};
    for (int i = 1; i < w.length(); ++i) {
        Letter u = w.letters[i - 1], x = w.letters[i];
        if (letter_target(bq, u) != letter_source(bq, x)) return {false, i, "letters do not compose"};
        if (x == u.inverted()) return {false, i, "walk is not reduced"};
        if (u.direct() && x.direct() && bq.is_relation(u.arrow, x.arrow))
            return {false, i, "direct run contains " + bq.arrow_name(u.arrow) + "*" + bq.arrow_name(x.arrow) + " in I"};
        if (u.inverse && x.inverse && bq.is_relation(x.arrow, u.arrow))
            return {false, i, "inverse run contains " + bq.arrow_name(x.arrow) + "*" + bq.arrow_name(u.arrow) + " in I"};
    }
    return {};
}

void require_string(const BoundQuiver& bq, const Word& w) {
    auto v = is_string(bq, w);
    if (!v.ok) throw NotAString(format_word(bq, w) + " is not a string: " + v.reason + " at letter " + std::to_string(v.index));
}

Word canonical_string(const BoundQuiver& bq, const Word& w) {
    if (w.trivial()) return w;
    Word inv = inverse(bq, w);
    return word_less(inv, w) ? inv : w;
}

namespace {

bool is_proper_power(const std::vector<Letter>& ls) {
    const size_t n = ls.size();
    for (size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool periodic = true;
        for (size_t i = d; i < n && periodic; ++i) periodic = ls[i] == ls[i - d];
        if (periodic) return true;
    }
    return false;
}

}  // namespace

StringVerdict is_band(const BoundQuiver& bq, const Word& w) {
    if (w.trivial()) return {false, -1, "trivial walks are not bands"};
    auto sv = is_string(bq, w);
    if (!sv.ok) return sv;
    if (w.end(bq) != w.start) return {false, -1, "walk is not closed"};
    if (!letters_compatible(bq, w.letters.back(), w.letters.front()))
        return {false, 0, "closing pair violates the string conditions"};
    if (is_proper_power(w.letters)) return {false, -1, "walk is a proper power"};
    return {};
}

Word canonical_band(const BoundQuiver& bq, const Word& w) {
    auto v = is_band(bq, w);
    if (!v.ok) throw NotABand(format_word(bq, w) + " is not a band: " + v.reason);
    std::optional<Word> best;
    for (const Word& base : {w, inverse(bq, w)}) {
        const size_t n = base.letters.size();
        for (size_t r = 0; r < n; ++r) {
            std::vector<Letter> rot(base.letters.begin() + r, base.letters.end());
            rot.insert(rot.end(), base.letters.begin(), base.letters.begin() + r);
            Word cand = make_word(bq, std::move(rot));
            if (!best || word_less(cand, *best)) best = std::move(cand);
        }
    }
    return *best;
}

std::vector<Word> enumerate_strings(const BoundQuiver& bq, int max_len, const LetterFilter& filter) {
    if (max_len < 0) throw InvalidInput("max_len must be non-negative");
    std::set<Word, WordLess> classes;
    for (int v = 0; v < bq.vertex_count(); ++v) classes.insert(trivial_word(v));

    const int codes = 2 * bq.arrow_count();
    std::vector<char> allowed(codes, 1);
    if (filter)
        for (int c = 0; c < codes; ++c) allowed[c] = filter(Letter::from_code(c)) ? 1 : 0;

    std::vector<Letter> stack;
    std::function<void()> extend = [&]() {
        classes.insert(canonical_string(bq, make_word(bq, stack)));
        if (static_cast<int>(stack.size()) >= max_len) return;
        Letter last = stack.back();
        for (int c = 0; c < codes; ++c) {
            if (!allowed[c]) continue;
            Letter next = Letter::from_code(c);
            if (!letters_compatible(bq, last, next)) continue;
            stack.push_back(next);
            extend();
            stack.pop_back();
        }
    };
    if (max_len >= 1)
        for (int c = 0; c < codes; ++c) {
            if (!allowed[c]) continue;
            stack.assign(1, Letter::from_code(c));
            extend();
        }
    return {classes.begin(), classes.end()};
}

std::vector<Word> enumerate_bands(const BoundQuiver& bq, int max_len) {
    std::set<Word, WordLess> classes;
    const int codes = 2 * bq.arrow_count();
    std::vector<Letter> stack;
    std::function<void()> extend = [&]() {
        Word w = make_word(bq, stack);
        if (w.end(bq) == w.start && letters_compatible(bq, stack.back(), stack.front()) &&
            !is_proper_power(stack))
            classes.insert(canonical_band(bq, w));
        if (static_cast<int>(stack.size()) >= max_len) return;
        for (int c = 0; c < codes; ++c) {
            Letter next = Letter::from_code(c);
            if (!letters_compatible(bq, stack.back(), next)) continue;
            stack.push_back(next);
            extend();
            stack.pop_back();
        }
    };
    if (max_len >= 1)
        for (int c = 0; c < codes; ++c) {
            stack.assign(1, Letter::from_code(c));
            extend();
        }
    return {classes.begin(), classes.end()};
}

Word parse_word(const BoundQuiver& bq, std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& x) {
        size_t b = x.find_first_not_of(" \t\r\n");
        size_t e = x.find_last_not_of(" \t\r\n");
        x = b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
    };
    trim(s);
    if (s.rfind("band:", 0) == 0) {
        s = s.substr(5);
        trim(s);
    }
    if (s.empty()) throw InvalidInput("empty word literal");
    if (s.rfind("e:", 0) == 0) {
        std::string v = s.substr(2);
        trim(v);
        return trivial_word(bq.vertex_index(v));
    }
    std::istringstream in(s);
    std::vector<Letter> letters;
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
            inv = true;
            tok.resize(tok.size() - 3);
        }
        letters.push_back({bq.arrow_index(tok), inv});
    }
    return make_word(bq, std::move(letters));
}

std::string format_word(const BoundQuiver& bq, const Word& w) {
    if (w.trivial()) return "e:" + bq.vertex_name(w.start);
    std::string s;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += ' ';
        s += bq.arrow_name(w.letters[i].arrow);
        if (w.letters[i].inverse) s += "^-1";
    }
    return s;
}

StringAutomaton::StringAutomaton(const BoundQuiver& bq)
    : letters_(2 * bq.arrow_count()), vertices_(bq.vertex_count()), succ_(letters_ + vertices_) {
    for (int u = 0; u < letters_; ++u)
        for (int w = 0; w < letters_; ++w)
            if (letters_compatible(bq, Letter::from_code(u), Letter::from_code(w))) succ_[u].push_back(w);
}

int first_state(const StringAutomaton& a, const Word& w) {
    return w.trivial() ? a.trivial_state(w.start) : w.letters.front().code();
}

int last_state(const StringAutomaton& a, const Word& w) {
    return w.trivial() ? a.trivial_state(w.start) : w.letters.back().code();
}

std::set<std::pair<int, int>> reachable_end_pairs(const StringAutomaton& automaton, const std::vector<int>& left,
                                                  const std::vector<int>& right) {
    std::vector<char> want(automaton.state_count(), 0);
    for (int r : right) want[r] = 1;
    std::set<std::pair<int, int>> result;
    for (int l : left) {
        if (automaton.is_trivial_state(l)) {
            if (want[l]) result.emplace(l, l);
            continue;
        }
        std::vector<char> seen(automaton.state_count(), 0);
        std::deque<int> queue{l};
        seen[l] = 1;
        while (!queue.empty()) {
            int s = queue.front();
            queue.pop_front();
            if (want[s]) result.emplace(l, s);
            for (int t : automaton.successors(s))
                if (!seen[t]) {
                    seen[t] = 1;
                    queue.push_back(t);
                }
        }
    }
    return result;
}

}  // namespace gentle
