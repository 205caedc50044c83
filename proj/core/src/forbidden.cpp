#include "gentle/forbidden.hpp"

#include <algorithm>

#include "gentle/error.hpp"

namespace gentle {

std::optional<int> forbidden_successor(const BoundQuiver& bq, int arrow) { return bq.successor(arrow); }

namespace {

std::vector<int> canonical_rotation(const BoundQuiver& bq, std::vector<int> cycle) {
    auto best = std::min_element(cycle.begin(), cycle.end(),
                                 [&](int a, int b) { return bq.arrow_name(a) < bq.arrow_name(b); });
    std::rotate(cycle.begin(), best, cycle.end());
    return cycle;
}

// Arrows of the successor cycle through a, starting at a.
std::vector<int> cycle_through(const BoundQuiver& bq, int a) {
    std::vector<int> cycle{a};
    for (auto c = bq.successor(a); c && *c != a; c = bq.successor(*c)) cycle.push_back(*c);
    return cycle;
}

}  // namespace

Extension extend_right_maximal(const BoundQuiver& bq, int seed) {
    if (seed < 0 || seed >= bq.arrow_count()) throw InvalidInput("unknown seed arrow");
    Extension ext;
    std::vector<char> seen(bq.arrow_count(), 0);
    std::vector<int> path{seed};
    seen[seed] = 1;
    int cur = seed;
    while (auto next = bq.successor(cur)) {
        if (seen[*next]) {
            ext.kind = Extension::Kind::OnCycle;
            ext.cycle = canonical_rotation(bq, cycle_through(bq, *next));
            ext.path.vertex = bq.source(seed);
            ext.path.arrows = std::move(path);
            return ext;
        }
        seen[*next] = 1;
        path.push_back(*next);
        cur = *next;
    }
    ext.path.vertex = bq.source(seed);
    ext.path.arrows = std::move(path);
    ext.path.right_maximal = true;
    ext.path.left_maximal = !bq.predecessor(seed).has_value();
    return ext;
}

Extension extend_left_maximal(const BoundQuiver& bq, int seed) {
    Extension ext = extend_right_maximal(opposite(bq), seed);
    std::reverse(ext.path.arrows.begin(), ext.path.arrows.end());
    if (ext.on_cycle()) {
        std::reverse(ext.cycle.begin(), ext.cycle.end());
        ext.cycle = canonical_rotation(bq, ext.cycle);
    } else {
        ext.path.left_maximal = true;
        ext.path.right_maximal = !bq.successor(seed).has_value();
    }
    ext.path.vertex = bq.source(ext.path.arrows.front());
    return ext;
}

std::vector<std::vector<int>> find_forbidden_cycles(const BoundQuiver& bq) {
    const int n = bq.arrow_count();
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on current chain, 2 done
    std::vector<std::vector<int>> cycles;
    for (int root = 0; root < n; ++root) {
        if (state[root]) continue;
        std::vector<int> chain;
        int cur = root;
        while (true) {
            state[cur] = 1;
            chain.push_back(cur);
            auto next = bq.successor(cur);
            if (!next || state[*next] == 2) break;
            if (state[*next] == 1) {
                cycles.push_back(canonical_rotation(bq, cycle_through(bq, *next)));
                break;
            }
            cur = *next;
        }
        for (int a : chain) state[a] = 2;
    }
    std::sort(cycles.begin(), cycles.end(), [&](const auto& x, const auto& y) {
        return bq.arrow_name(x.front()) < bq.arrow_name(y.front());
    });
    return cycles;
}

CycleArrowIndex::CycleArrowIndex(const BoundQuiver& bq)
    : cycles_(find_forbidden_cycles(bq)), cycle_of_(bq.arrow_count(), -1), position_(bq.arrow_count(), -1) {
    for (size_t c = 0; c < cycles_.size(); ++c)
        for (size_t p = 0; p < cycles_[c].size(); ++p) {
            int a = cycles_[c][p];
            if (cycle_of_[a] >= 0) throw FalsificationError("forbidden cycles share arrow " + bq.arrow_name(a));
            cycle_of_[a] = static_cast<int>(c);
            position_[a] = static_cast<int>(p);
        }
}

std::vector<int> CycleArrowIndex::cycle_arrows() const {
    std::vector<int> all;
    for (const auto& c : cycles_) all.insert(all.end(), c.begin(), c.end());
    return all;
}

bool is_relational_on_walk(const BoundQuiver& bq, const Word& w, int position) {
    if (position < 0 || position > w.length()) throw InvalidInput("walk position out of range");
    if (position == 0 || position == w.length()) return false;
    Letter u = w.letters[position - 1], x = w.letters[position];
    if (u.direct() && x.direct()) return bq.is_relation(u.arrow, x.arrow);
    if (u.inverse && x.inverse) return bq.is_relation(x.arrow, u.arrow);
    return false;
}

bool is_relational_vertex(const BoundQuiver& bq, int v) {
    for (const auto& [x, y] : bq.relations())
        if (bq.target(x) == v) return true;
    return false;
}

bool is_forbidden_module(const CycleArrowIndex& index, const Word& s) {
    return std::any_of(s.letters.begin(), s.letters.end(), [&](Letter l) { return index.on_cycle(l.arrow); });
}

bool is_forbidden_module(const BoundQuiver& bq, const Word& s) { return is_forbidden_module(CycleArrowIndex(bq), s); }

std::vector<ForbiddenPath> maximal_forbidden_paths(const BoundQuiver& bq) {
    std::vector<ForbiddenPath> result;
    for (int a = 0; a < bq.arrow_count(); ++a) {
        if (bq.predecessor(a)) continue;
        Extension ext = extend_right_maximal(bq, a);
        if (!ext.on_cycle()) result.push_back(ext.path);
    }
    return result;
}

LemmaForbcycVerdict check_lemma_forbcyc(const BoundQuiver& bq) {
    CycleArrowIndex index(bq);
    for (int a = 0; a < bq.arrow_count(); ++a) {
        Extension ext = extend_right_maximal(bq, a);
        if (index.on_cycle(a)) {
            if (!ext.on_cycle())
                return {false, "arrow " + bq.arrow_name(a) + " lies on a forbidden cycle but extends finitely"};
            continue;
        }
        if (ext.on_cycle())
            return {false, "forbidden path from " + bq.arrow_name(a) + " runs into cycle " + format_arrows(bq, ext.cycle)};
        for (int b : ext.path.arrows)
            if (index.on_cycle(b))
                return {false, "forbidden path " + format_arrows(bq, ext.path.arrows) + " mixes cycle arrow " +
                                   bq.arrow_name(b) + " with off-cycle arrows"};
    }
    return {};
}

SourcesSinks strong_sources_sinks(const BoundQuiver& bq) {
    SourcesSinks r;
    for (int v = 0; v < bq.vertex_count(); ++v) {
        if (bq.in_arrows(v).empty() && bq.out_arrows(v).size() <= 1) r.strong_sources.push_back(v);
        if (bq.out_arrows(v).empty() && bq.in_arrows(v).size() <= 1) r.strong_sinks.push_back(v);
    }
    return r;
}

std::string format_arrows(const BoundQuiver& bq, const std::vector<int>& arrows) {
    std::string s;
    for (size_t i = 0; i < arrows.size(); ++i) {
        if (i) s += '*';
        s += bq.arrow_name(arrows[i]);
    }
    return s;
}

}  // namespace gentle
