#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/homodim.hpp"
#include "gentle/quiver.hpp"
#include "gentle/strings.hpp"

namespace gentle {

struct QuasiTiltedVerdict {
    bool quasi_tilted = false;
    HomDim gl_dim;
    std::optional<Word> witness;  // a string with pd >= 2 and id >= 2
    std::string reason;
};
QuasiTiltedVerdict is_quasi_tilted(const BoundQuiver& bq);

struct TheoremMainConditions {
    HomDim fin_dim;
    bool cond1 = false;  // fin.dim <= 2
    bool cond2 = false;  // pd + id <= 3 on non-forbidden strings of finite pd and id
    std::optional<Word> cond2_witness;
    // The abstract states the second condition with bound 2; kept for the audit log.
    bool abstract_cond2 = false;
    std::optional<Word> abstract_witness;
    bool readings_diverge() const { return cond2 != abstract_cond2; }
    bool holds() const { return cond1 && cond2; }
};
TheoremMainConditions theorem_main_conditions(const BoundQuiver& bq);

struct TheoremMainReport {
    BoundQuiver ctilde;
    QuasiTiltedVerdict quasi_tilted;
    TheoremMainConditions conditions;
    bool agree = false;
};
// Throws FalsificationError when the two sides disagree and `strict` is set.
TheoremMainReport check_theorem_main(const BoundQuiver& bq, bool strict = false);

enum class Shape { Tree, OneCycle, MultiCycle };
std::string to_string(Shape s);

struct ComponentShape {
    std::vector<int> vertices;
    int arrow_count = 0;
    int cycle_count = 0;  // arrows - vertices + 1
    Shape shape = Shape::Tree;
};
struct ShapeClass {
    std::vector<ComponentShape> components;
    int max_cycle_count = 0;
    Shape shape = Shape::Tree;  // by the component with most independent cycles
};
ShapeClass shape_class(const BoundQuiver& bq);

// No homotopy band.  Only licensed for trees and one-cycle algebras.
bool derived_discrete(const BoundQuiver& bq);
// Throws UnsupportedShape on multi-cycle input.
bool piecewise_hereditary_gentle(const BoundQuiver& bq);

struct KgVerdict {
    enum class Kind { Exactly, AtLeast };
    Kind kind = Kind::Exactly;
    int value = 0;
    std::string provenance;

    static KgVerdict exactly(int v, std::string why) { return {Kind::Exactly, v, std::move(why)}; }
    static KgVerdict at_least(int v, std::string why) { return {Kind::AtLeast, v, std::move(why)}; }
    bool exact() const { return kind == Kind::Exactly; }
    std::string str() const;
    bool same_value(const KgVerdict& o) const { return kind == o.kind && value == o.value; }
};
// Throws UnsupportedShape when some component has two or more independent cycles.
KgVerdict kg_dimension(const BoundQuiver& bq);

enum class ClauseResult { Pass, Fail, Skipped };
std::string to_string(ClauseResult r);

struct CorollaryMain3Report {
    KgVerdict kg_a, kg_c, kg_ctilde;
    bool a_iso_c = false;
    ClauseResult clause1 = ClauseResult::Skipped;
    ClauseResult clause2 = ClauseResult::Skipped;
    ClauseResult clause3 = ClauseResult::Skipped;
    std::string detail1, detail2, detail3;
};
CorollaryMain3Report check_corollary_main3(const BoundQuiver& bq);

}  // namespace gentle
