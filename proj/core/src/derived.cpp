#include "gentle/derived.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "gentle/classify.hpp"
#include "gentle/error.hpp"
#include "gentle/forbidden.hpp"

namespace gentle {

int HomotopyWord::balance() const {
    int b = 0;
    for (const auto& l : letters) b += l.weight();
    return b;
}

HomotopyWord inverse(const HomotopyWord& h) {
    HomotopyWord r;
    r.start = h.end();
    r.closed = h.closed;
    for (auto it = h.letters.rbegin(); it != h.letters.rend(); ++it) r.letters.push_back(it->inverted());
    return r;
}

bool homotopy_pair_ok(const BoundQuiver& bq, const HomotopyLetter& x, const HomotopyLetter& y) {
    const auto& p = x.path;
    const auto& q = y.path;
    if (!x.inverse && !y.inverse) return p.end == q.start && bq.is_relation(p.arrows.back(), q.arrows.front());
    if (!x.inverse && y.inverse) return p.end == q.end && p.arrows.back() != q.arrows.back();
    if (x.inverse && !y.inverse) return p.start == q.start && p.arrows.front() != q.arrows.front();
    return p.start == q.end && bq.is_relation(q.arrows.back(), p.arrows.front());
}

namespace {

HomotopyVerdict letters_valid(const BoundQuiver& bq, const HomotopyWord& h) {
    if (h.start < 0 || h.start >= bq.vertex_count()) return {false, -1, "start vertex out of range"};
    for (int i = 0; i < h.length(); ++i) {
        const NonzeroPath& p = h.letters[i].path;
        if (p.trivial()) return {false, i, "letter " + std::to_string(i) + " is a trivial path"};
        try {
            if (make_path(bq, p.start, p.arrows) != p) return {false, i, "letter endpoints are inconsistent"};
        } catch (const InvalidInput&) {
            return {false, i, "path " + format_path(bq, p) + " is zero"};
        }
    }
    if (!h.letters.empty() && h.letters.front().walk_source() != h.start)
        return {false, 0, "first letter does not start at the start vertex"};
    return {};
}

std::string pair_reason(const BoundQuiver& bq, const HomotopyLetter& x, const HomotopyLetter& y) {
    const std::string px = format_path(bq, x.path), py = format_path(bq, y.path);
    if (!x.inverse && !y.inverse) return px + " followed by " + py + " does not compose into I";
    if (!x.inverse && y.inverse) return px + " followed by (" + py + ")^-1 must end at one vertex with different last arrows";
    if (x.inverse && !y.inverse) return "(" + px + ")^-1 followed by " + py + " must start at one vertex with different first arrows";
    return "(" + px + ")^-1 followed by (" + py + ")^-1 does not compose into I";
}

}  // namespace

HomotopyVerdict is_homotopy_string(const BoundQuiver& bq, const HomotopyWord& h) {
    HomotopyVerdict v = letters_valid(bq, h);
    if (!v.ok) return v;
    for (int i = 0; i + 1 < h.length(); ++i)
        if (!homotopy_pair_ok(bq, h.letters[i], h.letters[i + 1]))
            return {false, i, pair_reason(bq, h.letters[i], h.letters[i + 1])};
    return v;
}

HomotopyVerdict is_homotopy_band(const BoundQuiver& bq, const HomotopyWord& h) {
    HomotopyVerdict v = is_homotopy_string(bq, h);
    if (!v.ok) return v;
    const int n = h.length();
    if (n == 0) return {false, -1, "a band needs at least one letter"};
    if (h.end() != h.start) return {false, n - 1, "the walk is not closed"};
    if (!homotopy_pair_ok(bq, h.letters.back(), h.letters.front()))
        return {false, n - 1, "closing pair: " + pair_reason(bq, h.letters.back(), h.letters.front())};
    if (h.balance() != 0) return {false, -1, "direct and inverse letters are not balanced"};
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        bool periodic = true;
        for (int i = d; i < n && periodic; ++i) periodic = h.letters[i] == h.letters[i - d];
        if (periodic) return {false, -1, "the word is a proper power"};
    }
    return v;
}

std::vector<HomotopyLetter> homotopy_letters(const BoundQuiver& bq, const ArrowFilter& allowed) {
    std::vector<HomotopyLetter> out;
    for (auto& p : enumerate_nonzero_paths(bq)) {
        if (p.trivial()) continue;
        if (allowed && !std::all_of(p.arrows.begin(), p.arrows.end(), allowed)) continue;
        out.push_back({p, false});
        out.push_back({std::move(p), true});
    }
    return out;
}

namespace {

using Graph = std::vector<std::vector<int>>;

Graph transition_graph(const BoundQuiver& bq, const std::vector<HomotopyLetter>& letters) {
    Graph g(letters.size());
    for (size_t i = 0; i < letters.size(); ++i)
        for (size_t j = 0; j < letters.size(); ++j)
            if (homotopy_pair_ok(bq, letters[i], letters[j])) g[i].push_back(static_cast<int>(j));
    return g;
}

std::vector<int> strongly_connected(const Graph& g) {
    const int n = static_cast<int>(g.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    int counter = 0, components = 0;
    // Iterative Tarjan.
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<int, size_t>> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            if (next < g[v].size()) {
                int w = g[v][next++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = components;
                } while (w != v);
                ++components;
            }
            int finished = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[finished]);
        }
    }
    return comp;
}

// A simple cycle inside `nodes` of negative total cost, if any.  Costs sit on
// the edge's head.
std::optional<std::vector<int>> negative_cycle(const Graph& g, const std::vector<int>& nodes,
                                               const std::vector<char>& inside, const std::vector<long long>& cost) {
    std::map<int, long long> dist;
    std::map<int, int> pred;
    for (int v : nodes) dist[v] = 0, pred[v] = -1;
    int last = -1;
    for (size_t round = 0; round < nodes.size(); ++round) {
        last = -1;
        for (int u : nodes)
            for (int v : g[u]) {
                if (!inside[v]) continue;
                if (dist[u] + cost[v] < dist[v]) {
                    dist[v] = dist[u] + cost[v];
                    pred[v] = u;
                    last = v;
                }
            }
        if (last < 0) return std::nullopt;
    }
    int x = last;
    for (size_t i = 0; i < nodes.size(); ++i) x = pred[x];
    std::vector<int> cycle{x};
    for (int y = pred[x]; y != x; y = pred[y]) cycle.push_back(y);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

std::vector<int> shortest_path(const Graph& g, const std::vector<char>& inside, int from, int to) {
    std::map<int, int> parent{{from, from}};
    std::queue<int> q;
    q.push(from);
    while (!q.empty() && !parent.count(to)) {
        int u = q.front();
        q.pop();
        for (int v : g[u])
            if (inside[v] && !parent.count(v)) {
                parent[v] = u;
                q.push(v);
            }
    }
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

long long walk_weight(const std::vector<int>& walk, const std::vector<HomotopyLetter>& letters) {
    long long w = 0;
    for (int x : walk) w += letters[x].weight();
    return w;
}

std::vector<int> repeated(const std::vector<int>& walk, long long times) {
    std::vector<int> out;
    for (long long i = 0; i < times; ++i) out.insert(out.end(), walk.begin(), walk.end());
    return out;
}

std::vector<int> primitive_root(const std::vector<int>& walk) {
    const size_t n = walk.size();
    for (size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool periodic = true;
        for (size_t i = d; i < n && periodic; ++i) periodic = walk[i] == walk[i - d];
        if (periodic) return {walk.begin(), walk.begin() + static_cast<long>(d)};
    }
    return walk;
}

// Shortest closed walk of weight zero through the component, searching
// partial weights within [-bound, bound].
std::optional<std::vector<int>> shortest_balanced_cycle(const Graph& g, const std::vector<int>& nodes,
                                                        const std::vector<char>& inside,
                                                        const std::vector<HomotopyLetter>& letters, int bound) {
    std::optional<std::vector<int>> best;
    for (int s : nodes) {
        std::map<std::pair<int, int>, std::pair<int, int>> parent;
        std::queue<std::pair<int, int>> q;
        const std::pair<int, int> origin{s, letters[s].weight()};
        parent[origin] = origin;
        q.push(origin);
        std::optional<std::pair<int, int>> closing;
        while (!q.empty() && !closing) {
            auto [v, w] = q.front();
            q.pop();
            for (int y : g[v]) {
                if (!inside[y]) continue;
                if (y == s) {
                    if (w == 0) {
                        closing = std::make_pair(v, w);
                        break;
                    }
                    continue;
                }
                std::pair<int, int> next{y, w + letters[y].weight()};
                if (std::abs(next.second) > bound || parent.count(next)) continue;
                parent[next] = {v, w};
                q.push(next);
            }
        }
        if (!closing) continue;
        std::vector<int> walk;
        for (auto st = *closing;; st = parent.at(st)) {
            walk.push_back(st.first);
            if (st == origin) break;
        }
        std::reverse(walk.begin(), walk.end());
        if (!best || walk.size() < best->size()) best = std::move(walk);
    }
    return best;
}

}  // namespace

HomotopyBandSearch homotopy_band_exists(const BoundQuiver& bq) {
    const auto letters = homotopy_letters(bq);
    const Graph g = transition_graph(bq, letters);
    const std::vector<int> comp = strongly_connected(g);
    const int components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

    for (int c = 0; c < components; ++c) {
        std::vector<int> nodes;
        std::vector<char> inside(letters.size(), 0);
        for (size_t v = 0; v < letters.size(); ++v)
            if (comp[v] == c) nodes.push_back(static_cast<int>(v)), inside[v] = 1;
        const long long n = static_cast<long long>(nodes.size());

        // Scaling by n+1 and subtracting one per edge turns "weight <= 0" into
        // "cost < 0" for simple cycles.
        std::vector<long long> low_cost(letters.size()), high_cost(letters.size());
        for (size_t v = 0; v < letters.size(); ++v) {
            low_cost[v] = letters[v].weight() * (n + 1) - 1;
            high_cost[v] = -letters[v].weight() * (n + 1) - 1;
        }
        auto nonpositive = negative_cycle(g, nodes, inside, low_cost);
        if (!nonpositive) continue;
        auto nonnegative = negative_cycle(g, nodes, inside, high_cost);
        if (!nonnegative) continue;

        std::vector<int> closed;
        if (auto shortest = shortest_balanced_cycle(g, nodes, inside, letters, static_cast<int>(n))) {
            closed = std::move(*shortest);
        } else if (walk_weight(*nonpositive, letters) == 0) {
            closed = *nonpositive;
        } else if (walk_weight(*nonnegative, letters) == 0) {
            closed = *nonnegative;
        } else {
            // Route through the positive cycle's first node, pump the negative
            // cycle until the detour is negative, then balance the two.
            const std::vector<int>& up = *nonnegative;
            const std::vector<int>& down = *nonpositive;
            const int base = up.front(), entry = down.front();
            std::vector<int> there = shortest_path(g, inside, base, entry);
            std::vector<int> back = shortest_path(g, inside, entry, base);
            there.pop_back();
            back.pop_back();
            const long long detour = walk_weight(there, letters) + walk_weight(back, letters);
            const long long wd = walk_weight(down, letters);
            long long k = 1;
            while (detour + k * wd >= 0) ++k;
            std::vector<int> negative = there;
            auto pumped = repeated(down, k);
            negative.insert(negative.end(), pumped.begin(), pumped.end());
            negative.insert(negative.end(), back.begin(), back.end());
            const long long wn = walk_weight(negative, letters), wu = walk_weight(up, letters);
            closed = repeated(negative, wu);
            auto ups = repeated(up, -wn);
            closed.insert(closed.end(), ups.begin(), ups.end());
        }
        closed = primitive_root(closed);

        HomotopyWord witness;
        witness.closed = true;
        for (int x : closed) witness.letters.push_back(letters[x]);
        witness.start = witness.letters.front().walk_source();
        auto verdict = is_homotopy_band(bq, witness);
        if (!verdict.ok) throw FalsificationError("homotopy band witness failed verification: " + verdict.reason);
        return {true, std::move(witness)};
    }
    return {};
}

std::vector<HomotopyWord> enumerate_homotopy_strings(const BoundQuiver& bq, int max_letters,
                                                     const ArrowFilter& allowed) {
    const auto letters = homotopy_letters(bq, allowed);
    const Graph g = transition_graph(bq, letters);
    std::vector<HomotopyWord> out;
    for (int v = 0; v < bq.vertex_count(); ++v) out.push_back({v, {}, false});
    if (max_letters < 1) return out;

    std::vector<int> stack;
    auto emit = [&] {
        HomotopyWord h;
        for (int x : stack) h.letters.push_back(letters[x]);
        h.start = h.letters.front().walk_source();
        HomotopyWord r = inverse(h);
        // Keep the orientation whose letter sequence is lexicographically smaller.
        if (!(r.letters < h.letters)) out.push_back(std::move(h));
    };
    std::function<void()> grow = [&] {
        emit();
        if (static_cast<int>(stack.size()) == max_letters) return;
        for (int y : g[stack.back()]) {
            stack.push_back(y);
            grow();
            stack.pop_back();
        }
    };
    for (size_t x = 0; x < letters.size(); ++x) {
        stack.assign(1, static_cast<int>(x));
        grow();
    }
    return out;
}

std::vector<int> string_complex_degrees(const HomotopyWord& h, int anchor) {
    std::vector<int> deg{anchor};
    for (const auto& l : h.letters) deg.push_back(deg.back() - l.weight());
    return deg;
}

namespace {

// P(v) = e_v A with basis the nonzero paths from v, indexed per end vertex.
struct ProjectiveBasis {
    std::vector<NonzeroPath> paths;
    std::vector<int> local;
    std::vector<int> dims;
    std::map<NonzeroPath, int> index;
};

std::vector<ProjectiveBasis> projective_bases(const BoundQuiver& bq) {
    std::vector<ProjectiveBasis> out(bq.vertex_count());
    for (auto& b : out) b.dims.assign(bq.vertex_count(), 0);
    for (auto& p : enumerate_nonzero_paths(bq)) {
        ProjectiveBasis& b = out[p.start];
        b.index[p] = static_cast<int>(b.paths.size());
        b.local.push_back(b.dims[p.end]++);
        b.paths.push_back(std::move(p));
    }
    return out;
}

}  // namespace

ComplexOfReps string_complex(const BoundQuiver& bq, const HomotopyWord& h, int anchor) {
    auto verdict = is_homotopy_string(bq, h);
    if (!verdict.ok) throw InvalidInput("not a homotopy string: " + verdict.reason);
    const auto proj = projective_bases(bq);
    const int nv = bq.vertex_count();
    const std::vector<int> deg = string_complex_degrees(h, anchor);
    std::vector<int> walk{h.start};
    for (const auto& l : h.letters) walk.push_back(l.walk_target());

    const int low = *std::min_element(deg.begin(), deg.end());
    const int high = *std::max_element(deg.begin(), deg.end());
    const int terms_count = high - low + 1;

    // offset[i][u]: where summand i starts inside its term at vertex u.
    std::vector<std::vector<int>> term_dims(terms_count, std::vector<int>(nv, 0));
    std::vector<std::vector<int>> offset(walk.size(), std::vector<int>(nv, 0));
    for (size_t i = 0; i < walk.size(); ++i) {
        auto& dims = term_dims[deg[i] - low];
        for (int u = 0; u < nv; ++u) {
            offset[i][u] = dims[u];
            dims[u] += proj[walk[i]].dims[u];
        }
    }

    std::vector<Representation> terms;
    for (int t = 0; t < terms_count; ++t) {
        std::vector<Matrix> maps;
        for (int a = 0; a < bq.arrow_count(); ++a) maps.emplace_back(term_dims[t][bq.source(a)], term_dims[t][bq.target(a)]);
        for (size_t i = 0; i < walk.size(); ++i) {
            if (deg[i] - low != t) continue;
            const ProjectiveBasis& pb = proj[walk[i]];
            for (size_t k = 0; k < pb.paths.size(); ++k) {
                const NonzeroPath& q = pb.paths[k];
                for (int a : bq.out_arrows(q.end)) {
                    auto qa = multiply_paths(bq, q, make_path(bq, {a}));
                    if (!qa) continue;
                    int j = pb.index.at(*qa);
                    maps[a](offset[i][q.end] + pb.local[k], offset[i][bq.target(a)] + pb.local[j]) = 1;
                }
            }
        }
        terms.push_back(Representation::make(bq, term_dims[t], std::move(maps)));
    }

    std::vector<Homomorphism> diffs(terms_count - 1);
    for (int t = 0; t + 1 < terms_count; ++t)
        for (int u = 0; u < nv; ++u) diffs[t].maps.emplace_back(term_dims[t][u], term_dims[t + 1][u]);
    for (int i = 0; i < h.length(); ++i) {
        const HomotopyLetter& l = h.letters[i];
        // Left multiplication by the path sends P(t(p)) to P(s(p)).
        const int from = l.inverse ? i : i + 1;
        const int to = l.inverse ? i + 1 : i;
        const ProjectiveBasis& src = proj[walk[from]];
        const ProjectiveBasis& dst = proj[walk[to]];
        auto& d = diffs[deg[from] - low];
        for (size_t k = 0; k < src.paths.size(); ++k) {
            auto pq = multiply_paths(bq, l.path, src.paths[k]);
            if (!pq) continue;
            const int u = src.paths[k].end;
            d.maps[u](offset[from][u] + src.local[k], offset[to][u] + dst.local[dst.index.at(*pq)]) += 1;
        }
    }
    return ComplexOfReps::make(bq, low, std::move(terms), std::move(diffs));
}

WidthReport cohomological_width(const BoundQuiver& bq, const ComplexOfReps& x) {
    WidthReport r;
    r.cohomology = cohomology_dims(bq, x);
    bool any = false;
    for (const auto& c : r.cohomology) {
        if (c.total == 0) continue;
        if (!any) r.lowest_nonzero = c.degree;
        r.highest_nonzero = c.degree;
        any = true;
    }
    r.hw = any ? r.highest_nonzero - r.lowest_nonzero + 1 : 0;
    return r;
}

WidthReport hw(const BoundQuiver& bq, const HomotopyWord& h, int anchor) {
    return cohomological_width(bq, string_complex(bq, h, anchor));
}

HomotopyWord parse_homotopy_word(const BoundQuiver& bq, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) throw InvalidInput("empty homotopy word literal");
    HomotopyWord h;
    if (tokens.size() == 1 && tokens[0].rfind("e:", 0) == 0) {
        h.start = bq.vertex_index(tokens[0].substr(2));
        return h;
    }
    for (auto tok : tokens) {
        bool inv = false;
        if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
            inv = true;
            tok.resize(tok.size() - 3);
        }
        if (tok.size() > 2 && tok.front() == '(' && tok.back() == ')') tok = tok.substr(1, tok.size() - 2);
        NonzeroPath p = parse_path(bq, tok);
        if (p.trivial()) throw InvalidInput("homotopy letters must have positive length");
        h.letters.push_back({std::move(p), inv});
    }
    h.start = h.letters.front().walk_source();
    auto v = is_homotopy_string(bq, h);
    if (!v.ok) throw InvalidInput("not a homotopy string: " + v.reason);
    return h;
}

std::string format_homotopy_word(const BoundQuiver& bq, const HomotopyWord& h) {
    if (h.letters.empty()) return "e:" + bq.vertex_name(h.start);
    std::string s;
    for (size_t i = 0; i < h.letters.size(); ++i) {
        if (i) s += ' ';
        s += format_path(bq, h.letters[i].path);
        if (h.letters[i].inverse) s += "^-1";
    }
    return s;
}

TheoremMain2Report check_theorem_main2(const BoundQuiver& bq, int max_letters) {
    require_gentle(bq);
    CycleArrowIndex index(bq);
    TheoremMain2Report r;
    const auto strings = enumerate_homotopy_strings(bq, max_letters, [&](int a) { return !index.on_cycle(a); });
    for (const auto& h : strings) {
        int width = hw(bq, h).hw;
        ++r.strings_checked;
        if (width > r.max_hw) {
            r.max_hw = width;
            r.widest = h;
        }
    }
    r.side1 = r.max_hw <= 2;
    TheoremMainConditions c = theorem_main_conditions(bq);
    r.cond1 = c.cond1;
    r.cond2 = c.cond2;
    r.side2 = c.holds();
    r.agree = r.side1 == r.side2;
    return r;
}

}  // namespace gentle
