#include "gentle/homodim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "gentle/error.hpp"

namespace gentle {

GentleContext::GentleContext(BoundQuiver bq)
    : bq_((require_gentle(bq), std::move(bq))), op_(opposite(bq_)), cycles_(bq_), automaton_(bq_) {
    ext_.reserve(bq_.arrow_count());
    op_ext_.reserve(bq_.arrow_count());
    for (int a = 0; a < bq_.arrow_count(); ++a) {
        ext_.push_back(extend_right_maximal(bq_, a));
        op_ext_.push_back(extend_right_maximal(op_, a));
    }
}

Word flip_directions(const Word& w) {
    Word f = w;
    for (auto& l : f.letters) l.inverse = !l.inverse;
    return f;
}

namespace {

// The arrow leaving the start of w along which a descending attachment
// hangs: the other outgoing arrow after a direct first letter, and the
// outgoing arrow not composing into I after an inverse one.
std::optional<int> descending_junction(const BoundQuiver& q, const Word& w) {
    const Letter first = w.letters.front();
    for (int x : q.out_arrows(w.start)) {
        if (first.direct()) {
            if (x != first.arrow) return x;
        } else if (!q.is_relation(first.arrow, x)) {
            return x;
        }
    }
    return std::nullopt;
}

using ExtensionOf = const Extension& (*)(const GentleContext&, int);

const Extension& ext_in_a(const GentleContext& ctx, int a) { return ctx.extension(a); }
const Extension& ext_in_op(const GentleContext& ctx, int a) { return ctx.op_extension(a); }

AttachmentSlot slot_from(const GentleContext& ctx, ExtensionOf ext_of, std::optional<int> junction) {
    AttachmentSlot slot;
    if (!junction) return slot;
    slot.junction = junction;
    const Extension& ext = ext_of(ctx, *junction);
    if (ext.on_cycle()) {
        slot.kind = AttachmentSlot::Kind::OnCycle;
        slot.cycle = ext.cycle;
    } else {
        slot.kind = AttachmentSlot::Kind::Finite;
    }
    slot.arrows = ext.path.arrows;
    return slot;
}

// (left, right) descending slots of w over the quiver q, which is either A
// or A^op.  For a trivial word the two slots are the outgoing arrows.
std::pair<AttachmentSlot, AttachmentSlot> descending_slots(const GentleContext& ctx, const BoundQuiver& q,
                                                           ExtensionOf ext_of, const Word& w) {
    std::optional<int> left, right;
    if (w.trivial()) {
        const auto& outs = q.out_arrows(w.start);
        if (!outs.empty()) left = outs[0];
        if (outs.size() > 1) right = outs[1];
    } else {
        left = descending_junction(q, w);
        right = descending_junction(q, inverse(q, w));
    }
    return {slot_from(ctx, ext_of, left), slot_from(ctx, ext_of, right)};
}

HomDim pd_from_slots(const std::pair<AttachmentSlot, AttachmentSlot>& slots, bool valley) {
    if (slots.first.on_cycle() || slots.second.on_cycle()) return HomDim::infinite();
    int m = std::max(slots.first.length(), slots.second.length());
    // A valley contributes a projective summand to the first syzygy, so the
    // module is not projective even when neither end carries an attachment.
    if (m == 0 && valley) m = 1;
    return HomDim::finite(m);
}

}  // namespace

bool has_valley(const Word& s) {
    for (int i = 0; i + 1 < s.length(); ++i)
        if (s.letters[i].direct() && s.letters[i + 1].inverse) return true;
    return false;
}

bool has_peak(const Word& s) {
    for (int i = 0; i + 1 < s.length(); ++i)
        if (s.letters[i].inverse && s.letters[i + 1].direct()) return true;
    return false;
}

EndAttachment end_attachments(const GentleContext& ctx, const Word& s) {
    require_string(ctx.quiver(), s);
    EndAttachment e;
    std::tie(e.ld, e.rd) = descending_slots(ctx, ctx.quiver(), ext_in_a, s);
    std::tie(e.lu, e.ru) = descending_slots(ctx, ctx.op(), ext_in_op, flip_directions(s));
    for (AttachmentSlot* slot : {&e.lu, &e.ru}) {
        std::reverse(slot->arrows.begin(), slot->arrows.end());
        std::reverse(slot->cycle.begin(), slot->cycle.end());
    }
    return e;
}

EndAttachment end_attachments(const BoundQuiver& bq, const Word& s) { return end_attachments(GentleContext(bq), s); }

HomDim proj_dim_string(const GentleContext& ctx, const Word& s) {
    require_string(ctx.quiver(), s);
    return pd_from_slots(descending_slots(ctx, ctx.quiver(), ext_in_a, s), has_valley(s));
}

// id_A M(s) = pd over A^op of the dual module, which is the string module of
// the direction-flipped word there.
HomDim inj_dim_string(const GentleContext& ctx, const Word& s) {
    require_string(ctx.quiver(), s);
    Word f = flip_directions(s);
    return pd_from_slots(descending_slots(ctx, ctx.op(), ext_in_op, f), has_valley(f));
}

HomDim proj_dim_string(const BoundQuiver& bq, const Word& s) { return proj_dim_string(GentleContext(bq), s); }
HomDim inj_dim_string(const BoundQuiver& bq, const Word& s) { return inj_dim_string(GentleContext(bq), s); }

std::pair<HomDim, HomDim> band_dims(const BoundQuiver& bq, const Word& band) {
    auto v = is_band(bq, band);
    if (!v.ok) throw NotABand(format_word(bq, band) + " is not a band: " + v.reason);
    return {HomDim::finite(1), HomDim::finite(1)};
}

HomDim global_dimension(const BoundQuiver& bq) {
    require_gentle(bq);
    if (!find_forbidden_cycles(bq).empty()) return HomDim::infinite();
    int best = 0;
    for (int a = 0; a < bq.arrow_count(); ++a) best = std::max(best, extend_right_maximal(bq, a).path.length());
    return HomDim::finite(best);
}

Dim2Predicates lemma_dim2_predicates(const GentleContext& ctx, const Word& s) {
    EndAttachment e = end_attachments(ctx, s);
    auto len_ok = [](const AttachmentSlot& x) { return !x.on_cycle() && x.length() <= 2; };
    auto exactly2 = [](const AttachmentSlot& x) { return !x.on_cycle() && x.length() == 2; };
    Dim2Predicates p;
    p.condA = len_ok(e.lu) && len_ok(e.ru) && len_ok(e.ld) && len_ok(e.rd);
    p.condB = exactly2(e.lu) || exactly2(e.ru);
    p.condC = exactly2(e.ld) || exactly2(e.rd);
    return p;
}

std::vector<StringClass> string_classes(const GentleContext& ctx, const LetterFilter& filter) {
    const BoundQuiver& q = ctx.quiver();
    const StringAutomaton& aut = ctx.automaton();
    const int codes = aut.letter_state_count();
    std::vector<char> allowed(codes, 1);
    if (filter)
        for (int c = 0; c < codes; ++c) allowed[c] = filter(Letter::from_code(c)) ? 1 : 0;

    constexpr int kValley = 1, kPeak = 2, kCycle = 4, kFlags = 8;
    auto cyc = [&](int code) { return ctx.cycles().on_cycle(Letter::from_code(code).arrow) ? kCycle : 0; };

    std::vector<StringClass> out;
    for (int v = 0; v < q.vertex_count(); ++v) {
        Word w = trivial_word(v);
        out.push_back({w, proj_dim_string(ctx, w), inj_dim_string(ctx, w), false});
    }

    const int states = codes * kFlags;
    for (int l = 0; l < codes; ++l) {
        if (!allowed[l]) continue;
        std::vector<int> parent(states, -2);
        int s0 = l * kFlags + cyc(l);
        parent[s0] = -1;
        std::deque<int> queue{s0};
        while (!queue.empty()) {
            int s = queue.front();
            queue.pop_front();
            std::vector<Letter> letters;
            for (int t = s; t >= 0; t = parent[t]) letters.push_back(Letter::from_code(t / kFlags));
            std::reverse(letters.begin(), letters.end());
            Word w = make_word(q, std::move(letters));
            out.push_back({w, proj_dim_string(ctx, w), inj_dim_string(ctx, w), (s % kFlags & kCycle) != 0});

            const int code = s / kFlags, flags = s % kFlags;
            const Letter u = Letter::from_code(code);
            for (int nxt : aut.successors(code)) {
                if (!allowed[nxt]) continue;
                const Letter x = Letter::from_code(nxt);
                int f = flags | cyc(nxt);
                if (u.direct() && x.inverse) f |= kValley;
                if (u.inverse && x.direct()) f |= kPeak;
                int t = nxt * kFlags + f;
                if (parent[t] != -2) continue;
                parent[t] = s;
                queue.push_back(t);
            }
        }
    }
    return out;
}

bool band_exists(const StringAutomaton& automaton) {
    const int n = automaton.letter_state_count();
    std::vector<int> state(n, 0);
    for (int root = 0; root < n; ++root) {
        if (state[root]) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty()) {
            auto& [s, idx] = stack.back();
            const auto& succ = automaton.successors(s);
            if (idx < succ.size()) {
                int t = succ[idx++];
                if (state[t] == 1) return true;
                if (state[t] == 0) {
                    state[t] = 1;
                    stack.emplace_back(t, 0);
                }
            } else {
                state[s] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

HomDim finitistic_dimension(const GentleContext& ctx) {
    HomDim best = HomDim::finite(0);
    for (const auto& c : string_classes(ctx))
        if (c.pd.is_finite()) best = max(best, c.pd);
    if (band_exists(ctx.automaton())) best = max(best, HomDim::finite(1));
    return best;
}

HomDim finitistic_dimension(const BoundQuiver& bq) { return finitistic_dimension(GentleContext(bq)); }

LmxzVerdict check_theorem_lmxz(const BoundQuiver& bq) {
    GentleContext ctx(bq);
    LmxzVerdict v;
    HomDim gl = global_dimension(bq);
    if (!gl.is_finite()) {
        v.reason = "global dimension is infinite";
        return v;
    }
    if (gl.value() < 2) {
        v.reason = "global dimension " + gl.str() + " < 2: no maximal forbidden path of length >= 2";
        return v;
    }
    auto ss = strong_sources_sinks(bq);
    auto contains = [](const std::vector<int>& xs, int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); };
    bool starts = true, ends = true;
    for (const auto& p : maximal_forbidden_paths(bq)) {
        if (p.length() < 2) continue;
        starts = starts && contains(ss.strong_sources, bq.source(p.arrows.front()));
        ends = ends && contains(ss.strong_sinks, bq.target(p.arrows.back()));
    }
    if (!starts && !ends) {
        v.reason = "maximal forbidden paths of length >= 2 neither all start at strong sources nor all end at strong sinks";
        return v;
    }
    v.bound = 2 * gl.value() - 1;
    v.supremum = band_exists(ctx.automaton()) ? 2 : 0;
    for (const auto& c : string_classes(ctx)) {
        int sum = c.pd.value() + c.id.value();
        if (sum > v.supremum || !v.witness) {
            if (sum >= v.supremum) {
                v.supremum = sum;
                v.witness = c.witness;
            }
        }
    }
    v.status = v.supremum <= v.bound ? LmxzVerdict::Status::Holds : LmxzVerdict::Status::Violated;
    return v;
}

}  // namespace gentle
