#include "gentle/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gentle/error.hpp"

namespace gentle {

BoundQuiver BoundQuiver::make(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                              std::vector<Relation> relations) {
    if (vertices.empty()) throw InvalidInput("a bound quiver needs at least one vertex");
    BoundQuiver bq;
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) {
        std::map<std::string, int> count;
        for (const auto& v : vertices)
            if (++count[v] == 2) throw InvalidInput("duplicate vertex identifier '" + v + "'");
    }
    std::set<std::string> arrow_names;
    const int nv = static_cast<int>(vertices.size());
    for (const auto& a : arrows) {
        if (!arrow_names.insert(a.name).second)
            throw InvalidInput("duplicate arrow identifier '" + a.name + "'");
        if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv)
            throw InvalidInput("arrow '" + a.name + "' has an undeclared endpoint");
    }
    const size_t na = arrows.size();
    bq.relation_matrix_.assign(na * na, 0);
    for (const auto& [x, y] : relations) {
        if (x < 0 || y < 0 || static_cast<size_t>(x) >= na || static_cast<size_t>(y) >= na)
            throw InvalidInput("relation names an undeclared arrow");
        if (arrows[x].target != arrows[y].source)
            throw InvalidInput("relation " + arrows[x].name + "*" + arrows[y].name +
                               " is not composable");
        char& slot = bq.relation_matrix_[x * na + y];
        if (slot) throw InvalidInput("duplicate relation " + arrows[x].name + "*" + arrows[y].name);
        slot = 1;
    }
    std::sort(relations.begin(), relations.end());

    bq.out_.assign(nv, {});
    bq.in_.assign(nv, {});
    for (size_t a = 0; a < na; ++a) {
        bq.out_[arrows[a].source].push_back(static_cast<int>(a));
        bq.in_[arrows[a].target].push_back(static_cast<int>(a));
    }
    bq.successor_.assign(na, std::nullopt);
    bq.predecessor_.assign(na, std::nullopt);
    for (const auto& [x, y] : relations) {
        if (!bq.successor_[x]) bq.successor_[x] = y;
        if (!bq.predecessor_[y]) bq.predecessor_[y] = x;
    }
    bq.vertices_ = std::move(vertices);
    bq.arrows_ = std::move(arrows);
    bq.relations_ = std::move(relations);
    return bq;
}

std::optional<int> BoundQuiver::find_vertex(std::string_view name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[v] == name) return v;
    return std::nullopt;
}

std::optional<int> BoundQuiver::find_arrow(std::string_view name) const {
    for (int a = 0; a < arrow_count(); ++a)
        if (arrows_[a].name == name) return a;
    return std::nullopt;
}

int BoundQuiver::vertex_index(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw InvalidInput("unknown vertex '" + std::string(name) + "'");
}

int BoundQuiver::arrow_index(std::string_view name) const {
    if (auto a = find_arrow(name)) return *a;
    throw InvalidInput("unknown arrow '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Text format

namespace {

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class LineCursor {
public:
    LineCursor(std::string_view text, int line) : text_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    int column() const { return static_cast<int>(pos_) + 1; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }

    std::string ident(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }
    bool try_literal(std::string_view lit) {
        skip_ws();
        if (text_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view lit) {
        if (!try_literal(lit)) fail("expected '" + std::string(lit) + "'");
    }
    // Keyword followed by ':'; only consumed when both are present.
    bool try_keyword(std::string_view kw) {
        skip_ws();
        size_t save = pos_;
        if (text_.substr(pos_, kw.size()) != kw) return false;
        pos_ += kw.size();
        if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
            pos_ = save;
            return false;
        }
        return true;
    }

private:
    std::string_view text_;
    int line_;
    size_t pos_ = 0;
};

}  // namespace

BoundQuiver parse_bound_quiver(std::string_view text) {
    enum class Section { Start, Vertices, Arrows, Relations };
    Section section = Section::Start;

    std::vector<std::string> vertices;
    std::map<std::string, int> vertex_index;
    std::vector<Arrow> arrows;
    std::map<std::string, int> arrow_index;
    std::vector<Relation> relations;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        LineCursor cur(line, line_no);
        if (cur.at_end()) continue;

        if (cur.try_keyword("vertices")) {
            if (section != Section::Start && section != Section::Vertices)
                cur.fail("vertices must be declared before arrows and relations");
            cur.expect(":");
            section = Section::Vertices;
            while (!cur.at_end()) {
                int col = cur.column();
                std::string v = cur.ident("vertex identifier");
                if (vertex_index.count(v)) throw ParseError(line_no, col, "duplicate vertex '" + v + "'");
                vertex_index[v] = static_cast<int>(vertices.size());
                vertices.push_back(v);
            }
        } else if (cur.try_keyword("arrow")) {
            if (section == Section::Start) cur.fail("arrow declared before vertices");
            if (section == Section::Relations) cur.fail("arrow declared after relations");
            section = Section::Arrows;
            int col = cur.column();
            std::string name = cur.ident("arrow identifier");
            if (arrow_index.count(name)) throw ParseError(line_no, col, "duplicate arrow '" + name + "'");
            cur.expect(":");
            int scol = cur.column();
            std::string src = cur.ident("source vertex");
            cur.expect("->");
            int tcol = cur.column();
            std::string tgt = cur.ident("target vertex");
            if (!cur.at_end()) cur.fail("unexpected trailing text");
            auto s = vertex_index.find(src);
            if (s == vertex_index.end()) throw ParseError(line_no, scol + 1, "undeclared vertex '" + src + "'");
            auto t = vertex_index.find(tgt);
            if (t == vertex_index.end()) throw ParseError(line_no, tcol + 1, "undeclared vertex '" + tgt + "'");
            arrow_index[name] = static_cast<int>(arrows.size());
            arrows.push_back({name, s->second, t->second});
        } else if (cur.try_keyword("relations")) {
            if (section == Section::Start) cur.fail("relations declared before vertices");
            cur.expect(":");
            section = Section::Relations;
            bool first = true;
            while (!cur.at_end()) {
                if (!first) cur.expect(",");
                first = false;
                int xcol = cur.column();
                std::string x = cur.ident("arrow identifier");
                cur.expect("*");
                int ycol = cur.column();
                std::string y = cur.ident("arrow identifier");
                auto xi = arrow_index.find(x);
                if (xi == arrow_index.end()) throw ParseError(line_no, xcol + 1, "undeclared arrow '" + x + "'");
                auto yi = arrow_index.find(y);
                if (yi == arrow_index.end()) throw ParseError(line_no, ycol + 1, "undeclared arrow '" + y + "'");
                if (arrows[xi->second].target != arrows[yi->second].source)
                    throw ParseError(line_no, xcol + 1, "relation " + x + "*" + y + " is not composable");
                Relation r{xi->second, yi->second};
                if (std::find(relations.begin(), relations.end(), r) != relations.end())
                    throw ParseError(line_no, xcol + 1, "duplicate relation " + x + "*" + y);
                relations.push_back(r);
            }
        } else {
            cur.fail("expected 'vertices:', 'arrow' or 'relations:'");
        }
    }
    if (vertices.empty()) throw ParseError(line_no, 1, "missing vertices declaration");
    return BoundQuiver::make(std::move(vertices), std::move(arrows), std::move(relations));
}

std::string serialize(const BoundQuiver& bq) {
    std::ostringstream out;
    std::vector<std::string> vs = bq.vertices();
    std::sort(vs.begin(), vs.end());
    out << "vertices:";
    for (const auto& v : vs) out << ' ' << v;
    out << '\n';
    for (const auto& a : bq.arrows())
        out << "arrow " << a.name << ": " << bq.vertex_name(a.source) << " -> " << bq.vertex_name(a.target)
            << '\n';
    if (!bq.relations().empty()) {
        std::vector<std::string> rs;
        for (const auto& [x, y] : bq.relations()) rs.push_back(bq.arrow_name(x) + "*" + bq.arrow_name(y));
        std::sort(rs.begin(), rs.end());
        out << "relations:";
        for (size_t i = 0; i < rs.size(); ++i) out << (i ? ", " : " ") << rs[i];
        out << '\n';
    }
    return out.str();
}

bool structurally_equal(const BoundQuiver& a, const BoundQuiver& b) {
    auto content = [](const BoundQuiver& q) {
        std::set<std::string> vs(q.vertices().begin(), q.vertices().end());
        std::set<std::tuple<std::string, std::string, std::string>> as;
        for (const auto& x : q.arrows()) as.emplace(x.name, q.vertex_name(x.source), q.vertex_name(x.target));
        std::set<std::pair<std::string, std::string>> rs;
        for (const auto& [x, y] : q.relations()) rs.emplace(q.arrow_name(x), q.arrow_name(y));
        return std::make_tuple(vs, as, rs);
    };
    return content(a) == content(b);
}

// ---------------------------------------------------------------------------
// Gentleness

GentleVerdict validate_gentle(const BoundQuiver& bq) {
    GentleVerdict verdict;
    auto add = [&](const char* cond, std::string detail) { verdict.violations.push_back({cond, std::move(detail)}); };

    for (int v = 0; v < bq.vertex_count(); ++v) {
        if (bq.out_arrows(v).size() > 2)
            add("G1", "vertex " + bq.vertex_name(v) + " has " + std::to_string(bq.out_arrows(v).size()) +
                          " outgoing arrows");
        if (bq.in_arrows(v).size() > 2)
            add("G1", "vertex " + bq.vertex_name(v) + " has " + std::to_string(bq.in_arrows(v).size()) +
                          " incoming arrows");
    }
    // G2: two distinct arrows a, b ending where c starts; exactly one of
    // (a,c), (b,c) is a relation.  G3 is the mirror image.
    for (int c = 0; c < bq.arrow_count(); ++c) {
        const auto& ins = bq.in_arrows(bq.source(c));
        for (size_t i = 0; i < ins.size(); ++i)
            for (size_t j = i + 1; j < ins.size(); ++j) {
                int a = ins[i], b = ins[j];
                if (bq.is_relation(a, c) == bq.is_relation(b, c))
                    add("G2", "arrows " + bq.arrow_name(a) + ", " + bq.arrow_name(b) + " into the source of " +
                                  bq.arrow_name(c) + ": " +
                                  (bq.is_relation(a, c) ? "both" : "neither") + " composite lies in I");
            }
        const auto& outs = bq.out_arrows(bq.target(c));
        for (size_t i = 0; i < outs.size(); ++i)
            for (size_t j = i + 1; j < outs.size(); ++j) {
                int a = outs[i], b = outs[j];
                if (bq.is_relation(c, a) == bq.is_relation(c, b))
                    add("G3", "arrows " + bq.arrow_name(a) + ", " + bq.arrow_name(b) + " out of the target of " +
                                  bq.arrow_name(c) + ": " +
                                  (bq.is_relation(c, a) ? "both" : "neither") + " composite lies in I");
            }
    }
    if (auto cycle = find_relation_free_cycle(bq)) {
        NonzeroPath p{bq.source(cycle->front()), bq.target(cycle->back()), *cycle};
        add("FD", "oriented cycle " + format_path(bq, p) + " avoids I, so the algebra is infinite-dimensional");
    }
    return verdict;
}

void require_gentle(const BoundQuiver& bq) {
    auto verdict = validate_gentle(bq);
    if (verdict.ok()) return;
    std::string msg = "bound quiver is not gentle:";
    for (const auto& v : verdict.violations) msg += " [" + v.condition + "] " + v.detail + ";";
    throw InvalidInput(msg);
}

// ---------------------------------------------------------------------------
// Paths

NonzeroPath trivial_path(int v) { return NonzeroPath{v, v, {}}; }

NonzeroPath make_path(const BoundQuiver& bq, int start, const std::vector<int>& arrows) {
    if (start < 0 || start >= bq.vertex_count()) throw InvalidInput("path start is not a vertex");
    int at = start;
    for (size_t i = 0; i < arrows.size(); ++i) {
        int a = arrows[i];
        if (a < 0 || a >= bq.arrow_count()) throw InvalidInput("path uses an unknown arrow");
        if (bq.source(a) != at) throw InvalidInput("path arrows do not compose at " + bq.arrow_name(a));
        if (i > 0 && bq.is_relation(arrows[i - 1], a))
            throw InvalidInput("path " + bq.arrow_name(arrows[i - 1]) + "*" + bq.arrow_name(a) + " lies in I");
        at = bq.target(a);
    }
    return NonzeroPath{start, at, arrows};
}

NonzeroPath make_path(const BoundQuiver& bq, const std::vector<int>& arrows) {
    if (arrows.empty()) throw InvalidInput("an empty arrow list needs an explicit start vertex");
    if (arrows.front() < 0 || arrows.front() >= bq.arrow_count()) throw InvalidInput("path uses an unknown arrow");
    return make_path(bq, bq.source(arrows.front()), arrows);
}

std::optional<NonzeroPath> multiply_paths(const BoundQuiver& bq, const NonzeroPath& p, const NonzeroPath& q) {
    if (p.end != q.start) return std::nullopt;
    if (!p.trivial() && !q.trivial() && bq.is_relation(p.arrows.back(), q.arrows.front())) return std::nullopt;
    NonzeroPath r{p.start, q.end, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

BoundQuiver opposite(const BoundQuiver& bq) {
    std::vector<Arrow> arrows;
    arrows.reserve(bq.arrow_count());
    for (const auto& a : bq.arrows()) arrows.push_back({a.name, a.target, a.source});
    std::vector<Relation> relations;
    relations.reserve(bq.relations().size());
    for (const auto& [x, y] : bq.relations()) relations.emplace_back(y, x);
    return BoundQuiver::make(bq.vertices(), std::move(arrows), std::move(relations));
}

std::optional<std::vector<int>> find_relation_free_cycle(const BoundQuiver& bq) {
    // Depth-first search on the graph whose nodes are arrows and whose edges
    // join a to b when a*b is a nonzero path.
    const int n = bq.arrow_count();
    std::vector<int> state(n, 0), parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (state[root]) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty()) {
            auto& [a, idx] = stack.back();
            const auto& outs = bq.out_arrows(bq.target(a));
            if (idx < outs.size()) {
                int b = outs[idx++];
                if (bq.is_relation(a, b)) continue;
                if (state[b] == 1) {
                    std::vector<int> cycle{b};
                    for (auto it = stack.rbegin(); it != stack.rend() && it->first != b; ++it) cycle.push_back(it->first);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    return cycle;
                }
                if (state[b] == 0) {
                    state[b] = 1;
                    parent[b] = a;
                    stack.emplace_back(b, 0);
                }
            } else {
                state[a] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

std::vector<NonzeroPath> enumerate_nonzero_paths(const BoundQuiver& bq) {
    if (auto cycle = find_relation_free_cycle(bq)) {
        NonzeroPath p{bq.source(cycle->front()), bq.target(cycle->back()), *cycle};
        throw InfiniteDimension("oriented cycle " + format_path(bq, p) + " avoids I; the path set is infinite");
    }
    std::vector<NonzeroPath> result;
    for (int v = 0; v < bq.vertex_count(); ++v) {
        std::vector<NonzeroPath> layer{trivial_path(v)};
        while (!layer.empty()) {
            std::vector<NonzeroPath> next;
            for (const auto& p : layer) {
                for (int a : bq.out_arrows(p.end)) {
                    if (!p.trivial() && bq.is_relation(p.arrows.back(), a)) continue;
                    NonzeroPath q{p.start, bq.target(a), p.arrows};
                    q.arrows.push_back(a);
                    next.push_back(std::move(q));
                }
            }
            std::sort(next.begin(), next.end(), [](const NonzeroPath& x, const NonzeroPath& y) {
                return x.arrows < y.arrows;
            });
            for (auto& p : layer) result.push_back(std::move(p));
            layer = std::move(next);
        }
    }
    return result;
}

std::string format_path(const BoundQuiver& bq, const NonzeroPath& p) {
    if (p.trivial()) return "e:" + bq.vertex_name(p.start);
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += '*';
        s += bq.arrow_name(p.arrows[i]);
    }
    return s;
}

NonzeroPath parse_path(const BoundQuiver& bq, std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.substr(0, 2) == "e:") return trivial_path(bq.vertex_index(text.substr(2)));
    std::vector<int> arrows;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t star = text.find('*', pos);
        if (star == std::string_view::npos) star = text.size();
        arrows.push_back(bq.arrow_index(text.substr(pos, star - pos)));
        pos = star + 1;
    }
    return make_path(bq, arrows);
}

// ---------------------------------------------------------------------------
// Components

BoundQuiver induced_subquiver(const BoundQuiver& bq, const std::vector<int>& keep_vertices) {
    std::vector<int> new_index(bq.vertex_count(), -1);
    std::vector<std::string> vertices;
    for (int v : keep_vertices) {
        new_index[v] = static_cast<int>(vertices.size());
        vertices.push_back(bq.vertex_name(v));
    }
    std::vector<int> arrow_index(bq.arrow_count(), -1);
    std::vector<Arrow> arrows;
    for (int a = 0; a < bq.arrow_count(); ++a) {
        int s = new_index[bq.source(a)], t = new_index[bq.target(a)];
        if (s < 0 || t < 0) continue;
        arrow_index[a] = static_cast<int>(arrows.size());
        arrows.push_back({bq.arrow_name(a), s, t});
    }
    std::vector<Relation> relations;
    for (const auto& [x, y] : bq.relations())
        if (arrow_index[x] >= 0 && arrow_index[y] >= 0) relations.emplace_back(arrow_index[x], arrow_index[y]);
    return BoundQuiver::make(std::move(vertices), std::move(arrows), std::move(relations));
}

std::vector<Component> connected_components(const BoundQuiver& bq) {
    std::vector<int> parent(bq.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : bq.arrows()) parent[find(a.source)] = find(a.target);

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < bq.vertex_count(); ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> ordered;
    for (auto& [root, vs] : groups) ordered.push_back(std::move(vs));
    std::sort(ordered.begin(), ordered.end());

    std::vector<Component> result;
    for (auto& vs : ordered) {
        Component c;
        c.quiver = induced_subquiver(bq, vs);
        std::vector<char> in(bq.vertex_count(), 0);
        for (int v : vs) in[v] = 1;
        for (int a = 0; a < bq.arrow_count(); ++a)
            if (in[bq.source(a)]) c.arrows.push_back(a);
        c.vertices = std::move(vs);
        result.push_back(std::move(c));
    }
    return result;
}

}  // namespace gentle
