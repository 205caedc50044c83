#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"
#include "gentle/strings.hpp"

namespace gentle {

struct ForbiddenPath {
    int vertex = 0;           // start vertex; the only datum when arrows is empty
    std::vector<int> arrows;  // consecutive pairs all lie in I
    bool left_maximal = false;
    bool right_maximal = false;
    bool cycle = false;

    int length() const { return static_cast<int>(arrows.size()); }
};

// Result of extending a seed arrow along forbidden successors.
struct Extension {
    enum class Kind { Finite, OnCycle };
    Kind kind = Kind::Finite;
    ForbiddenPath path;            // the right-maximal path when finite
    std::vector<int> cycle;        // the forbidden cycle reached, canonical rotation

    bool on_cycle() const { return kind == Kind::OnCycle; }
};

std::optional<int> forbidden_successor(const BoundQuiver& bq, int arrow);
Extension extend_right_maximal(const BoundQuiver& bq, int seed);
// Left-maximal extension, computed as right-maximal extension over the
// opposite algebra and reversed back.
Extension extend_left_maximal(const BoundQuiver& bq, int seed);

// Cycles of the forbidden-successor map, each rotated so that the arrow with
// the smallest name comes first; sorted by that arrow's name.
std::vector<std::vector<int>> find_forbidden_cycles(const BoundQuiver& bq);

class CycleArrowIndex {
public:
    explicit CycleArrowIndex(const BoundQuiver& bq);

    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    bool on_cycle(int arrow) const { return cycle_of_[arrow] >= 0; }
    int cycle_of(int arrow) const { return cycle_of_[arrow]; }
    int position(int arrow) const { return position_[arrow]; }
    bool empty() const { return cycles_.empty(); }
    std::vector<int> cycle_arrows() const;  // in cycle order

private:
    std::vector<std::vector<int>> cycles_;
    std::vector<int> cycle_of_;
    std::vector<int> position_;
};

// A vertex on a walk is relational when the two letters meeting there run in
// the same direction and compose into I.  Positions are 0..length.
bool is_relational_on_walk(const BoundQuiver& bq, const Word& w, int position);

// A bare vertex is treated as relational when some relation passes through it.
bool is_relational_vertex(const BoundQuiver& bq, int v);

bool is_forbidden_module(const BoundQuiver& bq, const Word& s);
bool is_forbidden_module(const CycleArrowIndex& index, const Word& s);

// All maximal forbidden paths of length >= 1 that are not cycles.
std::vector<ForbiddenPath> maximal_forbidden_paths(const BoundQuiver& bq);

struct LemmaForbcycVerdict {
    bool holds = true;
    std::string counterexample;
};
LemmaForbcycVerdict check_lemma_forbcyc(const BoundQuiver& bq);

struct SourcesSinks {
    std::vector<int> strong_sources;
    std::vector<int> strong_sinks;
};
SourcesSinks strong_sources_sinks(const BoundQuiver& bq);

std::string format_arrows(const BoundQuiver& bq, const std::vector<int>& arrows);

}  // namespace gentle
