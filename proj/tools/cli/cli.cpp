#include "cli.hpp"

#include <CLI11.hpp>
#include <boost/crc.hpp>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "gentle/classify.hpp"
#include "gentle/cma.hpp"
#include "gentle/derived.hpp"
#include "gentle/error.hpp"
#include "gentle/forbidden.hpp"
#include "gentle/generator.hpp"
#include "gentle/homodim.hpp"
#include "gentle/representation.hpp"

namespace gentle::cli {

using json = nlohmann::json;

std::string digest(const std::string& text) {
    boost::crc_32_type crc;
    crc.process_bytes(text.data(), text.size());
    std::ostringstream s;
    s << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
    return s.str();
}

namespace {

struct Options {
    std::string input;
    std::string report;
    std::string string_literal;
    std::string homotopy;
    std::string vertex_list;
    std::string shape = "tree";
    int max_len = 4;
    int max_letters = 6;
    int cap = 16;
    int anchor = 0;
    int jobs = 1;
    int vertices = 0;
    int min_vertices = 1;
    int max_vertices = 8;
    int arrows = -1;
    std::uint64_t seed = 1;
    bool verify = false;
};

json dim_json(const HomDim& d) { return d.is_finite() ? json(d.value()) : json("inf"); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> split_names(const std::string& text) {
    std::string s = text;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

std::vector<int> vertex_indices(const BoundQuiver& bq, const std::string& text) {
    std::vector<int> out;
    for (const auto& name : split_names(text)) out.push_back(bq.vertex_index(name));
    return out;
}

json arrows_json(const BoundQuiver& bq, const std::vector<int>& arrows) {
    json a = json::array();
    for (int x : arrows) a.push_back(bq.arrow_name(x));
    return a;
}

// Formula value against the resolution oracle: a finite value must match
// exactly, an infinite one must exhaust the cap.
bool oracle_agrees(const HomDim& formula, const ResolutionResult& oracle) {
    if (!formula.is_finite()) return oracle.cap_reached;
    return !oracle.cap_reached && oracle.value == formula.value();
}

std::string oracle_str(const ResolutionResult& r, int cap) {
    return r.cap_reached ? "cap " + std::to_string(cap) + " reached" : std::to_string(r.value);
}

class Session {
public:
    Session(const Options& o, std::istream& in, std::ostream& out) : opt_(o), in_(in), out_(out) {}

    json report;

    const BoundQuiver& quiver() {
        if (!bq_) {
            std::string text;
            if (opt_.input.empty() || opt_.input == "-") {
                std::stringstream s;
                s << in_.rdbuf();
                text = s.str();
            } else {
                std::ifstream f(opt_.input, std::ios::binary);
                if (!f) throw InvalidInput("cannot read input file '" + opt_.input + "'");
                std::stringstream s;
                s << f.rdbuf();
                text = s.str();
            }
            report["input_digest"] = digest(text);
            bq_ = parse_bound_quiver(text);
        }
        return *bq_;
    }

    std::ostream& out() { return out_; }
    const Options& opt() const { return opt_; }

private:
    const Options& opt_;
    std::istream& in_;
    std::ostream& out_;
    std::optional<BoundQuiver> bq_;
};

json cmd_validate(Session& s) {
    const auto& bq = s.quiver();
    GentleVerdict v = validate_gentle(bq);
    json r{{"gentle", v.ok()}, {"violations", json::array()}};
    for (const auto& x : v.violations) r["violations"].push_back({{"condition", x.condition}, {"detail", x.detail}});
    s.out() << "gentle: " << yes_no(v.ok()) << "\n";
    for (const auto& x : v.violations) s.out() << "  " << x.condition << ": " << x.detail << "\n";
    return r;
}

json cmd_info(Session& s) {
    const auto& bq = s.quiver();
    require_gentle(bq);
    GentleContext ctx(bq);
    json cycles = json::array();
    for (const auto& c : ctx.cycles().cycles()) cycles.push_back(arrows_json(bq, c));
    const HomDim gl = global_dimension(bq), fin = finitistic_dimension(ctx);
    const ShapeClass shape = shape_class(bq);
    const bool band = band_exists(ctx.automaton());
    json r{{"vertices", bq.vertex_count()},
           {"arrows", bq.arrow_count()},
           {"relations", bq.relations().size()},
           {"forbidden_cycles", cycles},
           {"gl_dim", dim_json(gl)},
           {"fin_dim", dim_json(fin)},
           {"shape", to_string(shape.shape)},
           {"max_cycle_count", shape.max_cycle_count},
           {"band_exists", band}};
    auto& o = s.out();
    o << "vertices: " << bq.vertex_count() << ", arrows: " << bq.arrow_count() << ", relations: " << bq.relations().size() << "\n";
    o << "forbidden cycles: " << ctx.cycles().cycles().size() << "\n";
    for (const auto& c : ctx.cycles().cycles()) o << "  (" << format_arrows(bq, c) << ")\n";
    o << "gl.dim: " << gl.str() << "\nfin.dim: " << fin.str() << "\nshape: " << to_string(shape.shape)
      << "\nbands: " << yes_no(band) << "\n";
    return r;
}

struct DimRow {
    Word word;
    HomDim pd, id;
    bool forbidden = false;
    std::optional<ResolutionResult> pd_oracle, id_oracle;
};

void verify_rows(const BoundQuiver& bq, std::vector<DimRow>& rows, int cap, int jobs) {
    const int n = static_cast<int>(rows.size());
    jobs = std::max(1, std::min(jobs, n));
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&, j] {
            for (int i = j; i < n; i += jobs) {
                Representation m = string_module(bq, rows[i].word);
                rows[i].pd_oracle = resolve_pd(bq, m, cap);
                rows[i].id_oracle = resolve_id(bq, m, cap);
            }
        });
    for (auto& t : pool) t.join();
    for (const auto& r : rows) {
        if (!oracle_agrees(r.pd, *r.pd_oracle) || !oracle_agrees(r.id, *r.id_oracle))
            throw FalsificationError("string " + format_word(bq, r.word) + ": formula pd " + r.pd.str() + ", id " +
                                     r.id.str() + " but resolution pd " + oracle_str(*r.pd_oracle, cap) + ", id " +
                                     oracle_str(*r.id_oracle, cap));
    }
}

json cmd_strings(Session& s) {
    const auto& bq = s.quiver();
    require_gentle(bq);
    GentleContext ctx(bq);
    std::vector<DimRow> rows;
    for (auto& w : enumerate_strings(bq, s.opt().max_len))
        rows.push_back({w, proj_dim_string(ctx, w), inj_dim_string(ctx, w), is_forbidden_module(ctx.cycles(), w), {}, {}});
    if (s.opt().verify) verify_rows(bq, rows, s.opt().cap, s.opt().jobs);
    json list = json::array();
    for (const auto& r : rows) {
        list.push_back({{"string", format_word(bq, r.word)},
                        {"length", r.word.length()},
                        {"pd", dim_json(r.pd)},
                        {"id", dim_json(r.id)},
                        {"forbidden", r.forbidden}});
        s.out() << format_word(bq, r.word) << "\tpd " << r.pd.str() << "\tid " << r.id.str()
                << (r.forbidden ? "\tforbidden" : "") << "\n";
    }
    s.out() << rows.size() << " strings of length <= " << s.opt().max_len
            << (s.opt().verify ? ", all verified against resolutions" : "") << "\n";
    return {{"max_len", s.opt().max_len}, {"count", rows.size()}, {"strings", list}, {"verified", s.opt().verify}};
}

json cmd_bands(Session& s) {
    const auto& bq = s.quiver();
    require_gentle(bq);
    json list = json::array();
    const auto bands = enumerate_bands(bq, s.opt().max_len);
    for (const auto& b : bands) {
        auto [pd, id] = band_dims(bq, b);
        list.push_back({{"band", format_word(bq, b)}, {"pd", dim_json(pd)}, {"id", dim_json(id)}});
        s.out() << "band: " << format_word(bq, b) << "\tpd " << pd.str() << "\tid " << id.str() << "\n";
    }
    s.out() << bands.size() << " bands of length <= " << s.opt().max_len << "\n";
    return {{"max_len", s.opt().max_len}, {"count", bands.size()}, {"bands", list}};
}

json cmd_dims(Session& s) {
    const auto& bq = s.quiver();
    require_gentle(bq);
    if (s.opt().string_literal.empty()) throw InvalidInput("dims needs --string");
    const std::string& lit = s.opt().string_literal;
    const bool is_band_literal = lit.find("band:") != std::string::npos;
    Word w = parse_word(bq, lit);
    HomDim pd, id;
    Representation m;
    if (is_band_literal) {
        std::tie(pd, id) = band_dims(bq, w);
        m = band_module(bq, w, {});
    } else {
        require_string(bq, w);
        pd = proj_dim_string(bq, w);
        id = inj_dim_string(bq, w);
        m = string_module(bq, w);
    }
    const int cap = s.opt().cap;
    ResolutionResult rp = resolve_pd(bq, m, cap), ri = resolve_id(bq, m, cap);
    if (!oracle_agrees(pd, rp) || !oracle_agrees(id, ri))
        throw FalsificationError(format_word(bq, w) + ": formula pd " + pd.str() + ", id " + id.str() +
                                 " but resolution pd " + oracle_str(rp, cap) + ", id " + oracle_str(ri, cap));
    s.out() << (is_band_literal ? "band " : "string ") << format_word(bq, w) << "\npd " << pd.str() << "\nid " << id.str()
            << "\n";
    json r{{"pd", dim_json(pd)}, {"id", dim_json(id)}, {"kind", is_band_literal ? "band" : "string"},
           {"word", format_word(bq, w)}, {"oracle_agrees", true}};
    if (!is_band_literal) {
        r["forbidden"] = is_forbidden_module(bq, w);
        Dim2Predicates p = lemma_dim2_predicates(GentleContext(bq), w);
        r["lemma_dim2"] = {{"A", p.condA}, {"B", p.condB}, {"C", p.condC}};
    }
    return r;
}

json cmd_resolve(Session& s) {
    const auto& bq = s.quiver();
    if (s.opt().string_literal.empty()) throw InvalidInput("resolve needs --string");
    Word w = parse_word(bq, s.opt().string_literal);
    const bool is_band_literal = s.opt().string_literal.find("band:") != std::string::npos;
    Representation m = is_band_literal ? band_module(bq, w, {}) : string_module(bq, w);
    const int cap = s.opt().cap;
    ResolutionResult rp = resolve_pd(bq, m, cap), ri = resolve_id(bq, m, cap);
    auto side = [&](const ResolutionResult& r) {
        return json{{"cap_reached", r.cap_reached},
                    {"value", r.cap_reached ? json("inf") : json(r.value)},
                    {"syzygy_dims", r.syzygy_dims}};
    };
    auto dims_text = [](const std::vector<int>& d) {
        std::string t;
        for (size_t i = 0; i < d.size(); ++i) t += (i ? " " : "") + std::to_string(d[i]);
        return t;
    };
    s.out() << "pd " << oracle_str(rp, cap) << "  (syzygy dimensions " << dims_text(rp.syzygy_dims) << ")\n";
    s.out() << "id " << oracle_str(ri, cap) << "  (cosyzygy dimensions " << dims_text(ri.syzygy_dims) << ")\n";
    return {{"word", format_word(bq, w)}, {"cap", cap}, {"projective", side(rp)}, {"injective", side(ri)}};
}

json cmd_cma(Session& s) {
    const auto& bq = s.quiver();
    CmaPresentation cma = build_cma(bq);
    const BoundQuiver& c = cma.quiver;
    json catalog = json::array();
    std::string comments;
    for (size_t k = 0; k < cma.catalog_arrow.size(); ++k) {
        const std::string v = c.vertex_name(cma.catalog_vertex[k]), a = bq.arrow_name(cma.catalog_arrow[k]);
        catalog.push_back({{"vertex", v}, {"arrow", a}});
        comments += "# vertex " + v + " = " + a + "A\n";
    }
    const std::string text = serialize(c);
    s.out() << comments << text;
    return {{"vertices", c.vertex_count()},
            {"arrows", c.arrow_count()},
            {"relations", c.relations().size()},
            {"gentle", validate_gentle(c).ok()},
            {"gl_dim", dim_json(global_dimension(c))},
            {"catalog", catalog},
            {"quiver", text}};
}

json cmd_quotient(Session& s) {
    const auto& bq = s.quiver();
    BoundQuiver q;
    json r;
    if (!s.opt().vertex_list.empty()) {
        q = quotient_by_idempotent(bq, vertex_indices(bq, s.opt().vertex_list));
        r["mode"] = "delete";
    } else {
        CmaPresentation cma = build_cma(bq);
        q = cma.catalog_vertex.empty() ? cma.quiver : quotient_by_idempotent(cma.quiver, cma.catalog_vertex);
        r["mode"] = "ctilde";
        if (!cma.catalog_vertex.empty()) {
            BoundQuiver cbar = quotient_by_idempotent(cma.quiver, cma.original_vertices());
            r["cbar"] = {{"vertices", cbar.vertex_count()}, {"arrows", cbar.arrow_count()}};
        }
    }
    const std::string text = serialize(q);
    s.out() << text;
    r["quiver"] = text;
    r["vertices"] = q.vertex_count();
    r["arrows"] = q.arrow_count();
    r["components"] = connected_components(q).size();
    return r;
}

json cmd_corner(Session& s) {
    const auto& bq = s.quiver();
    json r;
    BoundQuiver ambient;
    std::vector<int> keep;
    if (!s.opt().vertex_list.empty()) {
        ambient = bq;
        keep = vertex_indices(bq, s.opt().vertex_list);
        r["mode"] = "keep";
    } else {
        CmaPresentation cma = build_cma(bq);
        ambient = cma.quiver;
        keep = cma.original_vertices();
        r["mode"] = "epsilon-star";
    }
    CornerAlgebra ca = corner_algebra(ambient, keep);
    RecoveredPresentation pres = recover_gentle_presentation(ambient, ca);
    const std::string text = serialize(pres.quiver);
    const bool iso = find_isomorphism(pres.quiver, bq).has_value();
    s.out() << "# corner dimension " << ca.dimension() << "\n" << text;
    s.out() << "isomorphic to input: " << yes_no(iso) << "\n";
    r["dimension"] = ca.dimension();
    r["quiver"] = text;
    r["gentle"] = pres.gentle.ok();
    r["isomorphic_to_input"] = iso;
    return r;
}

json cmd_recollement(Session& s) {
    const auto& bq = s.quiver();
    RecollementReport rep = verify_recollement_package(bq);
    json items = json::array();
    for (const auto& it : rep.items) {
        items.push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
        s.out() << (it.pass ? "pass " : "FAIL ") << it.name << ": " << it.detail << "\n";
    }
    return {{"items", items}, {"all_pass", rep.all_pass()}};
}

json cmd_hw(Session& s) {
    const auto& bq = s.quiver();
    if (s.opt().homotopy.empty()) throw InvalidInput("hw needs --homotopy");
    HomotopyWord h = parse_homotopy_word(bq, s.opt().homotopy);
    WidthReport w = hw(bq, h, s.opt().anchor);
    json degrees = json::array();
    for (const auto& c : w.cohomology) {
        degrees.push_back({{"degree", c.degree}, {"dims", c.dims}, {"total", c.total}});
        s.out() << "H^" << c.degree << ": " << c.total << "\n";
    }
    s.out() << "hw " << w.hw << "\n";
    return {{"homotopy_string", format_homotopy_word(bq, h)}, {"anchor", s.opt().anchor}, {"cohomology", degrees}, {"hw", w.hw}};
}

json word_or_null(const BoundQuiver& bq, const std::optional<Word>& w) {
    return w ? json(format_word(bq, *w)) : json(nullptr);
}

json cmd_quasi_tilted(Session& s) {
    const auto& bq = s.quiver();
    QuasiTiltedVerdict v = is_quasi_tilted(bq);
    s.out() << "quasi-tilted: " << yes_no(v.quasi_tilted) << "\n" << v.reason << "\n";
    return {{"quasi_tilted", v.quasi_tilted}, {"gl_dim", dim_json(v.gl_dim)}, {"witness", word_or_null(bq, v.witness)},
            {"reason", v.reason}};
}

json cmd_theorem_main(Session& s) {
    const auto& bq = s.quiver();
    TheoremMainReport r = check_theorem_main(bq);
    const auto& c = r.conditions;
    s.out() << "quasi-tilted(C~): " << yes_no(r.quasi_tilted.quasi_tilted) << "\n"
            << "condition (1) fin.dim " << c.fin_dim.str() << " <= 2: " << yes_no(c.cond1) << "\n"
            << "condition (2) pd + id <= 3: " << yes_no(c.cond2) << "\n"
            << "agree: " << yes_no(r.agree) << "\n";
    if (c.readings_diverge()) s.out() << "note: the pd + id <= 2 reading differs on this algebra\n";
    if (!r.agree)
        throw FalsificationError("theorem-main sides disagree: quasi-tilted(C~) = " +
                                 std::string(r.quasi_tilted.quasi_tilted ? "true" : "false") + ", conditions = " +
                                 (c.holds() ? "true" : "false"));
    return {{"quasi_tilted_ctilde", r.quasi_tilted.quasi_tilted},
            {"ctilde_witness", word_or_null(r.ctilde, r.quasi_tilted.witness)},
            {"fin_dim", dim_json(c.fin_dim)},
            {"cond1", c.cond1},
            {"cond2", c.cond2},
            {"cond2_witness", word_or_null(bq, c.cond2_witness)},
            {"abstract_cond2", c.abstract_cond2},
            {"readings_diverge", c.readings_diverge()},
            {"agree", r.agree}};
}

json cmd_theorem_main2(Session& s) {
    const auto& bq = s.quiver();
    TheoremMain2Report r = check_theorem_main2(bq, s.opt().max_letters);
    s.out() << "homotopy strings off forbidden cycles (<= " << s.opt().max_letters << " letters): " << r.strings_checked
            << "\nmax hw: " << r.max_hw;
    if (r.widest) s.out() << " (" << format_homotopy_word(bq, *r.widest) << ")";
    s.out() << "\nside (1): " << yes_no(r.side1) << "\nside (2): " << yes_no(r.side2) << "\nagree: " << yes_no(r.agree)
            << "\n";
    return {{"max_letters", s.opt().max_letters},
            {"strings_checked", r.strings_checked},
            {"max_hw", r.max_hw},
            {"widest", r.widest ? json(format_homotopy_word(bq, *r.widest)) : json(nullptr)},
            {"side1", r.side1},
            {"cond1", r.cond1},
            {"cond2", r.cond2},
            {"side2", r.side2},
            {"agree", r.agree}};
}

json kg_json(const KgVerdict& v) { return {{"verdict", v.str()}, {"provenance", v.provenance}}; }

json cmd_kg(Session& s) {
    const auto& bq = s.quiver();
    KgVerdict v = kg_dimension(bq);
    s.out() << "KGdim: " << v.str() << "\n" << v.provenance << "\n";
    json r = kg_json(v);
    r["shape"] = to_string(shape_class(bq).shape);
    return r;
}

json cmd_corollary(Session& s) {
    const auto& bq = s.quiver();
    CorollaryMain3Report r = check_corollary_main3(bq);
    s.out() << "KG(A): " << r.kg_a.str() << "\nKG(C): " << r.kg_c.str() << "\nKG(C~): " << r.kg_ctilde.str()
            << "\nA isomorphic to C: " << yes_no(r.a_iso_c) << "\n"
            << "clause (1): " << to_string(r.clause1) << " - " << r.detail1 << "\n"
            << "clause (2): " << to_string(r.clause2) << " - " << r.detail2 << "\n"
            << "clause (3): " << to_string(r.clause3) << " - " << r.detail3 << "\n";
    auto clause = [](ClauseResult c, const std::string& d) { return json{{"result", to_string(c)}, {"detail", d}}; };
    return {{"kg_a", kg_json(r.kg_a)},
            {"kg_c", kg_json(r.kg_c)},
            {"kg_ctilde", kg_json(r.kg_ctilde)},
            {"a_iso_c", r.a_iso_c},
            {"clause1", clause(r.clause1, r.detail1)},
            {"clause2", clause(r.clause2, r.detail2)},
            {"clause3", clause(r.clause3, r.detail3)}};
}

json cmd_generate(Session& s) {
    const Options& o = s.opt();
    GeneratorConfig cfg;
    cfg.seed = o.seed;
    cfg.shape = parse_generator_shape(o.shape);
    cfg.min_vertices = o.vertices > 0 ? o.vertices : o.min_vertices;
    cfg.max_vertices = o.vertices > 0 ? o.vertices : o.max_vertices;
    if (o.arrows >= 0) cfg.arrows = o.arrows;
    BoundQuiver bq = generate(cfg);
    const std::string text = serialize(bq);
    s.report["input_digest"] = digest("generate seed=" + std::to_string(o.seed) + " shape=" + o.shape + " vertices=" +
                                      std::to_string(cfg.min_vertices) + ".." + std::to_string(cfg.max_vertices) +
                                      " arrows=" + std::to_string(o.arrows));
    s.out() << text;
    return {{"seed", o.seed}, {"shape", o.shape}, {"quiver", text}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"gentle-lab: homological and derived invariants of gentle algebras", "gentle-lab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);
    app.add_option("--input", opt.input, "bound-quiver file (default: standard input)");
    app.add_option("--report", opt.report, "write the structured JSON report here");
    app.add_option("--max-len", opt.max_len, "maximal string or band length");
    app.add_option("--max-letters", opt.max_letters, "maximal homotopy string length in letters");
    app.add_option("--cap", opt.cap, "resolution depth cap for the linear-algebra oracle");
    app.add_option("--seed", opt.seed, "generator seed");
    app.add_option("--jobs", opt.jobs, "worker threads for oracle verification")->check(CLI::PositiveNumber);
    app.add_option("--string", opt.string_literal, "string literal, e.g. \"a12 a52^-1\", \"e:4\" or \"band: ...\"");
    app.add_option("--homotopy", opt.homotopy, "homotopy string literal, e.g. \"a*b c^-1\"");
    app.add_option("--anchor", opt.anchor, "degree of the first summand of a string complex");
    app.add_option("--vertices", opt.vertices, "generator exact vertex count");
    app.add_option("--delete,--keep", opt.vertex_list, "vertex names for quotient (deleted) or corner (kept)");
    app.add_option("--shape", opt.shape, "generator shape: any, tree or one-cycle");
    app.add_option("--min-vertices", opt.min_vertices, "generator vertex range minimum");
    app.add_option("--max-vertices", opt.max_vertices, "generator vertex range maximum");
    app.add_option("--arrows", opt.arrows, "generator exact arrow count");
    app.add_flag("--verify", opt.verify, "cross-check every formula value against resolutions");

    std::map<std::string, std::function<json(Session&)>> handlers;
    auto add = [&](CLI::App& parent, const std::string& name, const std::string& help, std::function<json(Session&)> f,
                   const std::string& id) {
        parent.add_subcommand(name, help);
        handlers[id] = std::move(f);
    };
    add(app, "validate", "check the gentle conditions", cmd_validate, "validate");
    add(app, "info", "forbidden cycles, global and finitistic dimension", cmd_info, "info");
    add(app, "strings", "enumerate strings with pd and id", cmd_strings, "strings");
    add(app, "bands", "enumerate bands", cmd_bands, "bands");
    add(app, "dims", "pd and id of one string or band, cross-checked", cmd_dims, "dims");
    add(app, "resolve", "projective and injective resolutions by linear algebra", cmd_resolve, "resolve");
    add(app, "cma", "CM-Auslander algebra presentation", cmd_cma, "cma");
    add(app, "quotient", "idempotent quotient (default: C~ of the CM-Auslander algebra)", cmd_quotient, "quotient");
    add(app, "corner", "corner algebra and its recovered presentation", cmd_corner, "corner");
    add(app, "recollement-verify", "verify the recollement package", cmd_recollement, "recollement-verify");
    add(app, "hw", "cohomological width of a string complex", cmd_hw, "hw");
    add(app, "kg-dim", "Krull-Gabriel dimension of the derived category", cmd_kg, "kg-dim");
    add(app, "generate", "random gentle bound quiver", cmd_generate, "generate");
    CLI::App* check = app.add_subcommand("check", "theorem harnesses");
    check->require_subcommand(1);
    add(*check, "quasi-tilted", "quasi-tilted decision", cmd_quasi_tilted, "check quasi-tilted");
    add(*check, "theorem-main", "quasi-tilted C~ versus conditions (1) and (2)", cmd_theorem_main, "check theorem-main");
    add(*check, "theorem-main2", "cohomological width versus conditions (1) and (2)", cmd_theorem_main2,
        "check theorem-main2");
    add(*check, "corollary-main3", "Krull-Gabriel clauses for one-cycle algebras", cmd_corollary,
        "check corollary-main3");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    std::string id;
    for (CLI::App* sub : app.get_subcommands()) {
        id = sub->get_name();
        for (CLI::App* leaf : sub->get_subcommands()) id += " " + leaf->get_name();
    }

    Session session(opt, in, out);
    session.report["command"] = id;
    session.report["tool_version"] = kToolVersion;
    int code = 0;
    try {
        session.report["result"] = handlers.at(id)(session);
        session.report["status"] = "ok";
    } catch (const FalsificationError& e) {
        err << "falsification: " << e.what() << "\n";
        session.report["status"] = "falsification";
        session.report["error"] = e.what();
        code = 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        session.report["status"] = "input-error";
        session.report["error"] = e.what();
        code = 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        session.report["status"] = "falsification";
        session.report["error"] = e.what();
        code = 2;
    }
    if (!opt.report.empty()) {
        std::ofstream f(opt.report, std::ios::binary);
        if (!f) {
            err << "error: cannot write report '" << opt.report << "'\n";
            return code ? code : 1;
        }
        f << session.report.dump(2) << "\n";
    }
    return code;
}

}  // namespace gentle::cli
