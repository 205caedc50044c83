#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gentle {

// Vertices and arrows are addressed by dense indices into the declaration
// order.  Names are only used at the text boundary.
struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
};

// A relation (a, b) means the length-2 path "a then b" lies in I.
using Relation = std::pair<int, int>;

class BoundQuiver {
public:
    BoundQuiver() = default;

    // Checks identifier uniqueness, endpoint validity and relation
    // composability; throws InvalidInput otherwise.  Duplicate relations are
    // rejected too.
    static BoundQuiver make(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                            std::vector<Relation> relations);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Relation>& relations() const { return relations_; }

    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::string& arrow_name(int a) const { return arrows_[a].name; }
    int source(int a) const { return arrows_[a].source; }
    int target(int a) const { return arrows_[a].target; }

    const std::vector<int>& out_arrows(int v) const { return out_[v]; }
    const std::vector<int>& in_arrows(int v) const { return in_[v]; }

    bool is_relation(int a, int b) const {
        return relation_matrix_[static_cast<size_t>(a) * arrows_.size() + b] != 0;
    }

    // First arrow c with (a, c) in I (unique for gentle input).
    std::optional<int> successor(int a) const { return successor_[a]; }
    // First arrow c with (c, a) in I.
    std::optional<int> predecessor(int a) const { return predecessor_[a]; }

    std::optional<int> find_vertex(std::string_view name) const;
    std::optional<int> find_arrow(std::string_view name) const;
    int vertex_index(std::string_view name) const;  // throws InvalidInput
    int arrow_index(std::string_view name) const;   // throws InvalidInput

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<char> relation_matrix_;
    std::vector<std::optional<int>> successor_;
    std::vector<std::optional<int>> predecessor_;
};

BoundQuiver parse_bound_quiver(std::string_view text);
std::string serialize(const BoundQuiver& bq);

// Equality of the name-level content: vertex set, arrow set with endpoints,
// relation set.  Declaration order is ignored.
bool structurally_equal(const BoundQuiver& a, const BoundQuiver& b);

struct GentleViolation {
    std::string condition;  // "G1", "G2", "G3", "FD"
    std::string detail;
};

struct GentleVerdict {
    std::vector<GentleViolation> violations;
    bool ok() const { return violations.empty(); }
};

GentleVerdict validate_gentle(const BoundQuiver& bq);
void require_gentle(const BoundQuiver& bq);  // throws InvalidInput listing violations

struct NonzeroPath {
    int start = 0;
    int end = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }
    friend bool operator==(const NonzeroPath&, const NonzeroPath&) = default;
    friend auto operator<=>(const NonzeroPath&, const NonzeroPath&) = default;
};

NonzeroPath trivial_path(int v);
// Throws InvalidInput when the arrows do not compose or hit a relation.
NonzeroPath make_path(const BoundQuiver& bq, int start, const std::vector<int>& arrows);
NonzeroPath make_path(const BoundQuiver& bq, const std::vector<int>& arrows);

std::optional<NonzeroPath> multiply_paths(const BoundQuiver& bq, const NonzeroPath& p,
                                          const NonzeroPath& q);

// Arrow i of the opposite quiver is arrow i reversed, with the same name, so
// letters and paths translate by index.
BoundQuiver opposite(const BoundQuiver& bq);

// An oriented cycle none of whose consecutive pairs (closing pair included)
// lies in I, if one exists.
std::optional<std::vector<int>> find_relation_free_cycle(const BoundQuiver& bq);

// All nonzero paths, trivial ones included, ordered by start vertex, then
// length, then arrow indices.  Throws InfiniteDimension naming a cycle when
// the set is infinite.
std::vector<NonzeroPath> enumerate_nonzero_paths(const BoundQuiver& bq);

// Arrow names joined by '*'; "e:v" for trivial paths.
std::string format_path(const BoundQuiver& bq, const NonzeroPath& p);
NonzeroPath parse_path(const BoundQuiver& bq, std::string_view text);

// Sub-bound-quivers on the connected components of the underlying graph,
// together with the original vertex indices of each.
struct Component {
    BoundQuiver quiver;
    std::vector<int> vertices;
    std::vector<int> arrows;
};
std::vector<Component> connected_components(const BoundQuiver& bq);

// Keeps the listed vertices, every arrow between kept vertices and every
// relation between kept arrows.  Order of kept items follows bq.
BoundQuiver induced_subquiver(const BoundQuiver& bq, const std::vector<int>& keep_vertices);

}  // namespace gentle
