#include "gentle/generator.hpp"

#include <random>
#include <vector>

#include "gentle/error.hpp"

namespace gentle {

GeneratorShape parse_generator_shape(const std::string& text) {
    if (text == "any") return GeneratorShape::Any;
    if (text == "tree") return GeneratorShape::Tree;
    if (text == "one-cycle") return GeneratorShape::OneCycle;
    throw InvalidInput("unknown shape '" + text + "' (expected any, tree or one-cycle)");
}

std::string to_string(GeneratorShape s) {
    switch (s) {
        case GeneratorShape::Any: return "any";
        case GeneratorShape::Tree: return "tree";
        case GeneratorShape::OneCycle: return "one-cycle";
    }
    return "?";
}

namespace {

struct Draft {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> in, out;

    explicit Draft(int vertices) : n(vertices), in(vertices, 0), out(vertices, 0) {}
    bool can_add(int s, int t) const { return out[s] < 2 && in[t] < 2; }
    void add(int s, int t) {
        arrows.emplace_back(s, t);
        ++out[s];
        ++in[t];
    }
};

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
    bool chance(double p) { return static_cast<double>(rng_() % 1000000) < p * 1000000.0; }

private:
    std::mt19937_64 rng_;
};

// Attach vertex v to an earlier vertex, orientation chosen at random.
bool attach(Draft& d, Sampler& s, int v) {
    for (int tries = 0; tries < 4 * v + 4; ++tries) {
        int u = s.below(v);
        bool forward = s.below(2) == 0;
        int src = forward ? u : v, tgt = forward ? v : u;
        if (d.can_add(src, tgt)) {
            d.add(src, tgt);
            return true;
        }
    }
    return false;
}

bool add_random_arrow(Draft& d, Sampler& s) {
    for (int tries = 0; tries < 8 * d.n + 8; ++tries) {
        int src = s.below(d.n), tgt = s.below(d.n);
        if (src == tgt && d.n > 1) continue;
        if (d.can_add(src, tgt)) {
            d.add(src, tgt);
            return true;
        }
    }
    return false;
}

// At each vertex the relations between incoming and outgoing arrows: with
// two of each side they form a perfect matching, with one on some side a
// two-element side forces exactly one relation, and a single pair is optional.
std::vector<Relation> choose_relations(const Draft& d, Sampler& s, double density) {
    std::vector<std::vector<int>> ins(d.n), outs(d.n);
    for (size_t a = 0; a < d.arrows.size(); ++a) {
        outs[d.arrows[a].first].push_back(static_cast<int>(a));
        ins[d.arrows[a].second].push_back(static_cast<int>(a));
    }
    std::vector<Relation> rel;
    for (int v = 0; v < d.n; ++v) {
        const auto& i = ins[v];
        const auto& o = outs[v];
        if (i.empty() || o.empty()) continue;
        if (i.size() == 2 && o.size() == 2) {
            int k = s.below(2);
            rel.emplace_back(i[0], o[k]);
            rel.emplace_back(i[1], o[1 - k]);
        } else if (i.size() == 2) {
            rel.emplace_back(i[s.below(2)], o[0]);
        } else if (o.size() == 2) {
            rel.emplace_back(i[0], o[s.below(2)]);
        } else if (s.chance(density)) {
            rel.emplace_back(i[0], o[0]);
        }
    }
    return rel;
}

}  // namespace

BoundQuiver generate(const GeneratorConfig& config) {
    if (config.min_vertices < 1 || config.max_vertices < config.min_vertices)
        throw InvalidInput("vertex range must satisfy 1 <= min <= max");
    if (config.arrows && *config.arrows < 0) throw InvalidInput("arrow count must be non-negative");
    if (config.arrows && *config.arrows > 2 * config.max_vertices)
        throw InvalidInput("unsatisfiable: " + std::to_string(*config.arrows) + " arrows exceed the bound of two per vertex");

    Sampler s(config.seed);
    for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
        const int n = config.min_vertices + s.below(config.max_vertices - config.min_vertices + 1);
        int m = 0;
        switch (config.shape) {
            case GeneratorShape::Tree: m = n - 1; break;
            case GeneratorShape::OneCycle: m = n; break;
            case GeneratorShape::Any: {
                m = n - 1;
                for (int k = 0; k < n + 1 && m < 2 * n; ++k)
                    if (s.chance(config.arrow_density)) ++m;
                break;
            }
        }
        if (config.arrows) {
            if (config.shape != GeneratorShape::Any && *config.arrows != m) continue;
            m = *config.arrows;
        }
        if (m > 2 * n) continue;

        Draft d(n);
        bool ok = true;
        for (int v = 1; v < n && static_cast<int>(d.arrows.size()) < m && ok; ++v) ok = attach(d, s, v);
        while (ok && static_cast<int>(d.arrows.size()) < m) ok = add_random_arrow(d, s);
        if (!ok) continue;

        std::vector<std::string> vertices;
        for (int v = 0; v < n; ++v) vertices.push_back(std::to_string(v + 1));
        std::vector<Arrow> arrows;
        for (size_t a = 0; a < d.arrows.size(); ++a)
            arrows.push_back({"a" + std::to_string(a + 1), d.arrows[a].first, d.arrows[a].second});
        BoundQuiver bq = BoundQuiver::make(vertices, arrows, choose_relations(d, s, config.relation_density));
        if (find_relation_free_cycle(bq)) continue;
        if (!validate_gentle(bq).ok()) continue;
        return bq;
    }
    throw InvalidInput("unsatisfiable generator configuration: no gentle quiver found in " +
                       std::to_string(config.max_attempts) + " attempts");
}

}  // namespace gentle
