#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/forbidden.hpp"
#include "gentle/quiver.hpp"
#include "gentle/strings.hpp"

namespace gentle {

class HomDim {
public:
    HomDim() : value_(0) {}
    static HomDim finite(int v) { return HomDim(v); }
    static HomDim infinite() {
        HomDim d;
        d.value_.reset();
        return d;
    }

    bool is_finite() const { return value_.has_value(); }
    int value() const { return *value_; }  // only when finite
    std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

    friend bool operator==(const HomDim&, const HomDim&) = default;
    friend bool operator<(const HomDim& a, const HomDim& b) {
        if (!a.is_finite()) return false;
        if (!b.is_finite()) return true;
        return a.value() < b.value();
    }
    friend HomDim max(const HomDim& a, const HomDim& b) { return a < b ? b : a; }

private:
    explicit HomDim(int v) : value_(v) {}
    std::optional<int> value_;
};

// Cached per-algebra data shared by the dimension computations: the
// opposite algebra, the forbidden-successor extensions in both directions
// and the cycle index.  Construction requires gentle input.
class GentleContext {
public:
    explicit GentleContext(BoundQuiver bq);

    const BoundQuiver& quiver() const { return bq_; }
    const BoundQuiver& op() const { return op_; }
    const CycleArrowIndex& cycles() const { return cycles_; }
    const StringAutomaton& automaton() const { return automaton_; }
    // Right-maximal extension from an arrow, in A and in A^op.
    const Extension& extension(int arrow) const { return ext_[arrow]; }
    const Extension& op_extension(int arrow) const { return op_ext_[arrow]; }

private:
    BoundQuiver bq_;
    BoundQuiver op_;
    CycleArrowIndex cycles_;
    StringAutomaton automaton_;
    std::vector<Extension> ext_;
    std::vector<Extension> op_ext_;
};

struct AttachmentSlot {
    enum class Kind { Absent, Finite, OnCycle };
    Kind kind = Kind::Absent;
    std::optional<int> junction;  // arrow adjacent to the string end
    std::vector<int> arrows;      // the forbidden path, written in A's orientation
    std::vector<int> cycle;       // when on-cycle

    int length() const { return kind == Kind::Finite ? static_cast<int>(arrows.size()) : 0; }
    bool on_cycle() const { return kind == Kind::OnCycle; }
};

// lu/ru are the ascending (left-maximal) attachments at the left/right end,
// ld/rd the descending (right-maximal) ones.
struct EndAttachment {
    AttachmentSlot lu, ru, ld, rd;
};

// The word with every letter's direction flipped; it is the same walk read
// in the opposite quiver, and realizes the dual module there.
Word flip_directions(const Word& w);

EndAttachment end_attachments(const GentleContext& ctx, const Word& s);
EndAttachment end_attachments(const BoundQuiver& bq, const Word& s);

// Interior vertex where a direct letter is followed by an inverse one.
bool has_valley(const Word& s);
bool has_peak(const Word& s);

HomDim proj_dim_string(const GentleContext& ctx, const Word& s);
HomDim inj_dim_string(const GentleContext& ctx, const Word& s);
HomDim proj_dim_string(const BoundQuiver& bq, const Word& s);
HomDim inj_dim_string(const BoundQuiver& bq, const Word& s);

std::pair<HomDim, HomDim> band_dims(const BoundQuiver& bq, const Word& band);

HomDim global_dimension(const BoundQuiver& bq);
HomDim finitistic_dimension(const BoundQuiver& bq);
HomDim finitistic_dimension(const GentleContext& ctx);

struct Dim2Predicates {
    bool condA = false;
    bool condB = false;
    bool condC = false;
};
Dim2Predicates lemma_dim2_predicates(const GentleContext& ctx, const Word& s);

// One representative per class of strings sharing the data the dimension
// formulas depend on: first letter, last letter, and whether the word has an
// interior valley, an interior peak, or a letter on a forbidden cycle.  The
// list is exact: every string of the algebra (restricted to the filter) has
// the (pd, id, forbidden) of some entry.  Trivial strings are included.
struct StringClass {
    Word witness;
    HomDim pd;
    HomDim id;
    bool forbidden = false;
};
std::vector<StringClass> string_classes(const GentleContext& ctx, const LetterFilter& filter = {});

bool band_exists(const StringAutomaton& automaton);

struct LmxzVerdict {
    enum class Status { NotApplicable, Holds, Violated };
    Status status = Status::NotApplicable;
    std::string reason;
    int bound = 0;
    int supremum = 0;
    std::optional<Word> witness;
};
LmxzVerdict check_theorem_lmxz(const BoundQuiver& bq);

}  // namespace gentle
