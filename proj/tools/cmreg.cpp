// Command-line front end for the library: parse ideal files, dispatch
// computations, and emit deterministic text or JSON.
//
// Exit codes: 0 success; 1 mathematical check failure (a false membership,
// a complex that fails verification, a suite with hard failures); 2 input
// error (malformed file, unknown name, bad flag).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cmreg/cmreg.hpp"

using nlohmann::json;
using namespace cmreg;

namespace {

struct CommonOpts {
    std::string ideal_file;
    std::string order_override;
    long char_override = -1;
    bool as_json = false;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_ideal = true) {
    if (with_ideal)
        cmd->add_option("--ideal", o.ideal_file, "ideal file to read")->required();
    cmd->add_option("--order", o.order_override, "monomial order override (grevlex|lex)");
    cmd->add_option("--char", o.char_override, "field characteristic override (0 for Q)");
    cmd->add_flag("--json", o.as_json, "emit JSON instead of text");
    cmd->add_option("--out", o.out_path, "write output to this file instead of stdout");
}

void emit(const std::string& text, const CommonOpts& o) {
    if (o.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw std::runtime_error("cannot write file '" + o.out_path + "'");
        f << text;
        if (!text.empty() && text.back() != '\n') f << "\n";
    }
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Loaded {
    IdealFileText text;
    long characteristic = 0;
    MonomialOrder ord = MonomialOrder::grevlex();
};

Loaded load(const CommonOpts& o) {
    Loaded L;
    L.text = read_ideal_file_text(slurp(o.ideal_file));
    L.characteristic = o.char_override >= 0 ? o.char_override : L.text.characteristic;
    L.ord = order_from_name(o.order_override.empty() ? L.text.order_name : o.order_override);
    return L;
}

template <class F>
int with_field(long characteristic, F&& f) {
    if (characteristic == 0) return std::forward<F>(f).template operator()<QQ>();
    return std::forward<F>(f).template operator()<Zp>();
}

template <class K>
Ideal<K> ideal_from_entry(const IdealFileEntry& e, const RingPtr& R, const MonomialOrder& ord) {
    std::vector<Polynomial<K>> gens;
    for (const auto& s : e.polys) gens.push_back(parse_polynomial<K>(R, ord, s, e.line));
    return Ideal<K>(R, ord, gens);
}

const IdealFileEntry& pick_entry(const IdealFileText& t, const std::string& name) {
    if (name.empty()) {
        if (t.entries.empty()) throw std::runtime_error("file contains no ideals");
        return t.entries.front();
    }
    const IdealFileEntry* e = t.find(name);
    if (!e) throw std::runtime_error("no ideal named '" + name + "' in file");
    return *e;
}

// Canonical polynomial strings of a reduced basis, ascending leading term,
// display-scaled over Q.
template <class K>
std::vector<std::string> basis_strings(std::vector<Polynomial<K>> gens) {
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
        if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
        return a.order().cmp(a.leading_term().m, b.leading_term().m) < 0;
    });
    std::vector<std::string> out;
    for (const auto& g : gens) out.push_back(poly_to_string(primitive_rescale(g)));
    return out;
}

std::string field_name(long characteristic) {
    return characteristic == 0 ? "Q" : "Fp " + std::to_string(characteristic);
}

std::string order_name_of(const MonomialOrder& ord) {
    return ord.kind() == MonomialOrder::Kind::Lex ? "lex" : "grevlex";
}

// Serialize one or more named polynomial lists as an ideal file / JSON bundle.
std::string render_bundle(long characteristic, const std::vector<std::string>& vars,
                          const MonomialOrder& ord,
                          const std::vector<std::pair<std::string, std::vector<std::string>>>& entries,
                          bool as_json) {
    if (as_json) {
        json j;
        j["field"] = field_name(characteristic);
        j["vars"] = vars;
        j["order"] = order_name_of(ord);
        json ideals = json::object();
        for (const auto& [name, polys] : entries) ideals[name] = polys;
        j["ideals"] = ideals;
        return j.dump(2);
    }
    IdealFileText t;
    t.characteristic = characteristic;
    t.vars = vars;
    t.order_name = order_name_of(ord);
    for (const auto& [name, polys] : entries) {
        IdealFileEntry e;
        e.name = name;
        e.polys = polys;
        t.entries.push_back(std::move(e));
    }
    return write_ideal_file_text(t);
}

template <class K>
std::string render_ideal_result(const Loaded& L, const Ideal<K>& I, bool as_json,
                                const std::vector<std::string>* vars_override = nullptr) {
    std::vector<std::string> vars = vars_override ? *vars_override : L.text.vars;
    return render_bundle(L.characteristic, vars, I.order(),
                         {{"result", basis_strings(I.gb().elements())}}, as_json);
}

std::string scalar_result(const std::string& key, const std::string& value, bool as_json) {
    if (as_json) {
        json j;
        // numbers stay numbers when they fit
        try {
            std::size_t pos = 0;
            long long v = std::stoll(value, &pos);
            if (pos == value.size()) {
                j[key] = v;
                return j.dump(2);
            }
        } catch (...) {
        }
        j[key] = value;
        return j.dump(2);
    }
    return key + " = " + value;
}

std::string bool_result(const std::string& key, bool value, bool as_json) {
    if (as_json) {
        json j;
        j[key] = value;
        return j.dump(2);
    }
    return key + " = " + (value ? "true" : "false");
}

json betti_to_json(const BettiTable& b) {
    json rows = json::array();
    for (std::size_t j = 0; j < b.by_level.size(); ++j)
        for (const auto& [d, m] : b.by_level[j])
            rows.push_back({{"level", j}, {"degree", d}, {"multiplicity", m}});
    return rows;
}

json be_to_json(const BEReport& r) {
    json positions = json::array();
    for (const auto& p : r.positions) {
        json q = {{"k", p.k},
                  {"rank_free", p.rank_free},
                  {"r_k", p.r_k},
                  {"r_next", p.r_next},
                  {"rank_ok", p.rank_ok},
                  {"required", p.required},
                  {"codim_ok", p.codim_ok}};
        if (p.codim_infinite)
            q["codim"] = "infinity";
        else
            q["codim"] = p.codim;
        q["codim_is_lower_bound"] = p.codim_lower_bound;
        if (!p.note.empty()) q["note"] = p.note;
        positions.push_back(q);
    }
    return json{{"exact", r.exact}, {"positions", positions}};
}

json suite_to_json(const SuiteReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json q = {{"name", c.name},
                  {"status", c.pass ? "PASS" : (c.documented_deviation ? "DEVIATION" : "FAIL")},
                  {"expected", c.expected},
                  {"actual", c.actual}};
        if (!c.note.empty()) q["note"] = c.note;
        checks.push_back(q);
    }
    return json{{"suite", rep.suite},
                {"checks", checks},
                {"summary",
                 {{"checks", rep.checks.size()},
                  {"passed", rep.passed()},
                  {"failed", rep.failed()},
                  {"deviations", rep.deviations()}}}};
}

template <class K>
Ideal<K> maximal_ideal(const RingPtr& R, const MonomialOrder& ord) {
    std::vector<Polynomial<K>> vars;
    for (int i = 0; i < R->nvars(); ++i) vars.push_back(Polynomial<K>::variable(R, ord, i));
    return Ideal<K>(R, ord, vars);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact commutative-algebra engine: Groebner bases, resolutions, "
                 "regularity, Hilbert data, Ext/local cohomology, and verification suites"};
    app.require_subcommand(1);

    // ---- per-subcommand options ----
    CommonOpts o;
    std::string name, with_name, by_name, poly_text, drop_text, suite_name, family_name,
        which, mode = "both", complex_file, emit_complex;
    std::string of_resolve = "quotient", of_betti = "quotient", of_reg = "ideal";
    long long m_param = 1, n_param = 1, alpha = 0;
    int q_param = 0, i_param = 0, from_deg = 0, to_deg = 0, at_degree = -1, twist = 0;
    bool twist_set = false, have_from = false, have_to = false;
    std::vector<long> degrees;
    std::vector<std::string> var_names;

    auto* c_gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    add_common(c_gb, o);
    c_gb->add_option("--name", name, "ideal name in the file (default: first)");

    auto* c_member = app.add_subcommand("member", "test membership of a polynomial");
    add_common(c_member, o);
    c_member->add_option("--name", name, "ideal name in the file (default: first)");
    c_member->add_option("--poly", poly_text, "polynomial to test")->required();

    auto* c_quotient = app.add_subcommand("quotient", "ideal quotient A : B");
    add_common(c_quotient, o);
    c_quotient->add_option("--name", name, "ideal A (default: first)");
    c_quotient->add_option("--by", by_name, "ideal B")->required();

    auto* c_saturate = app.add_subcommand("saturate", "saturation A : B^infinity");
    add_common(c_saturate, o);
    c_saturate->add_option("--name", name, "ideal A (default: first)");
    c_saturate->add_option("--by", by_name,
                           "ideal B (default: the maximal ideal of the variables)");

    auto* c_intersect = app.add_subcommand("intersect", "intersection A ∩ B");
    add_common(c_intersect, o);
    c_intersect->add_option("--name", name, "ideal A (default: first)");
    c_intersect->add_option("--with", with_name, "ideal B")->required();

    auto* c_eliminate = app.add_subcommand("eliminate", "eliminate variables from an ideal");
    add_common(c_eliminate, o);
    c_eliminate->add_option("--name", name, "ideal name in the file (default: first)");
    c_eliminate->add_option("--drop", drop_text, "space- or comma-separated variables to drop")
        ->required();

    auto* c_curve = app.add_subcommand("curve", "defining ideal of a smooth monomial curve");
    add_common(c_curve, o, /*with_ideal=*/false);
    c_curve->add_option("--degrees", degrees, "parameter exponents, e.g. --degrees 1 6 8")
        ->required()
        ->expected(-1);
    c_curve->add_option("--vars", var_names, "variable names (one more than degrees)")
        ->required()
        ->expected(-1);

    auto* c_resolve = app.add_subcommand("resolve", "minimal graded free resolution");
    add_common(c_resolve, o);
    c_resolve->add_option("--name", name, "ideal name in the file (default: first)");
    c_resolve->add_option("--of", of_resolve, "resolve the quotient R/I or the ideal I")
        ->check(CLI::IsMember({"quotient", "ideal"}));

    auto* c_betti = app.add_subcommand("betti", "Betti table of the minimal resolution");
    add_common(c_betti, o);
    c_betti->add_option("--name", name, "ideal name in the file (default: first)");
    c_betti->add_option("--of", of_betti, "table of R/I or of I")
        ->check(CLI::IsMember({"quotient", "ideal"}));

    auto* c_reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
    add_common(c_reg, o);
    c_reg->add_option("--name", name, "ideal name in the file (default: first)");
    c_reg->add_option("--of", of_reg, "regularity of the ideal I (default) or of R/I")
        ->check(CLI::IsMember({"quotient", "ideal"}));

    auto* c_depth = app.add_subcommand("depth", "depth of R/I");
    add_common(c_depth, o);
    c_depth->add_option("--name", name, "ideal name in the file (default: first)");

    auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert series or function of R/I");
    add_common(c_hilbert, o);
    c_hilbert->add_option("--name", name, "ideal name in the file (default: first)");
    c_hilbert->add_option("--degree", at_degree, "evaluate the Hilbert function at this degree");

    auto* c_dim = app.add_subcommand("dim", "Krull dimension of R/I");
    add_common(c_dim, o);
    c_dim->add_option("--name", name, "ideal name in the file (default: first)");

    auto* c_deg = app.add_subcommand("deg", "degree (multiplicity) of R/I");
    add_common(c_deg, o);
    c_deg->add_option("--name", name, "ideal name in the file (default: first)");

    auto* c_verify = app.add_subcommand(
        "verify-complex", "check a graded complex: composition zero + exactness criterion");
    c_verify->add_option("--complex", complex_file, "complex file to verify")->required();
    c_verify->add_option("--order", o.order_override, "monomial order override");
    c_verify->add_option("--char", o.char_override, "characteristic override");
    c_verify->add_flag("--json", o.as_json, "emit JSON");
    c_verify->add_option("--out", o.out_path, "write output to this file");

    auto* c_radical = app.add_subcommand("same-radical",
                                         "do two ideals cut out the same set?");
    add_common(c_radical, o);
    c_radical->add_option("--name", name, "ideal A (default: first)");
    c_radical->add_option("--with", with_name, "ideal B")->required();

    auto* c_ext = app.add_subcommand("ext", "Ext^q(R/I, R(twist)) as a presented module");
    add_common(c_ext, o);
    c_ext->add_option("--name", name, "ideal name in the file (default: first)");
    c_ext->add_option("--q", q_param, "cohomological degree")->required();
    c_ext->add_option("--twist", twist, "twist of the dualizing free module (default: -#vars)");
    c_ext->add_option("--from", from_deg, "first degree for graded dimensions");
    c_ext->add_option("--to", to_deg, "last degree for graded dimensions");

    auto* c_socle = app.add_subcommand("socle",
                                       "socle degrees of Ext^q(R/I, R(twist))");
    add_common(c_socle, o);
    c_socle->add_option("--name", name, "ideal name in the file (default: first)");
    c_socle->add_option("--q", q_param, "cohomological degree")->required();
    c_socle->add_option("--twist", twist, "twist (default: -#vars)");

    auto* c_lc = app.add_subcommand("lc-dims",
                                    "graded dimensions of local cohomology H^i of R/I");
    add_common(c_lc, o);
    c_lc->add_option("--name", name, "ideal name in the file (default: first)");
    c_lc->add_option("--i", i_param, "cohomological index")->required();
    c_lc->add_option("--from", from_deg, "first degree")->required();
    c_lc->add_option("--to", to_deg, "last degree")->required();

    auto* c_family = app.add_subcommand("family",
                                        "construct a named ideal family as an ideal bundle");
    c_family->add_option("--name", family_name,
                         "example21 | example22 | cm_family | p4_family | surface_ideal")
        ->required();
    c_family->add_option("--m", m_param, "family parameter m");
    c_family->add_option("--n", n_param, "family parameter n");
    c_family->add_option("--which", which, "surface selector: ex34 | ex35");
    c_family->add_option("--emit-complex", emit_complex,
                         "emit this explicit complex instead of the ideal bundle "
                         "(example21: j|k; example22: b; cm_family: image)");
    c_family->add_option("--char", o.char_override, "characteristic (default 0; surfaces 101)");
    c_family->add_flag("--json", o.as_json, "emit JSON");
    c_family->add_option("--out", o.out_path, "write output to this file");

    auto* c_count = app.add_subcommand("appendix-count",
                                       "sumset count: dynamic-programming oracle / closed form");
    c_count->add_option("--m", m_param, "parameter m")->required();
    c_count->add_option("--n", n_param, "parameter n")->required();
    c_count->add_option("--alpha", alpha, "fold count")->required();
    c_count->add_option("--mode", mode, "oracle | closed | both")
        ->check(CLI::IsMember({"oracle", "closed", "both"}));
    c_count->add_flag("--json", o.as_json, "emit JSON");
    c_count->add_option("--out", o.out_path, "write output to this file");

    auto* c_suite = app.add_subcommand("suite", "run a named verification suite");
    c_suite->add_option("name", suite_name, "ex21 | ex22 | lemma24 | ex25 | appendix | ex34 | "
                                            "ex35 | properties")
        ->required();
    c_suite->add_flag("--json", o.as_json, "emit JSON");
    c_suite->add_option("--out", o.out_path, "write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }

    twist_set = c_ext->count("--twist") > 0 || c_socle->count("--twist") > 0;
    have_from = c_ext->count("--from") > 0;
    have_to = c_ext->count("--to") > 0;

    try {
        // ---- subcommands that need no ideal file ----
        if (*c_count) {
            SumsetSpec spec(m_param, n_param);
            long long oracle_v = -1, closed_v = -1;
            if (mode == "oracle" || mode == "both")
                oracle_v = sumset_count_oracle(spec.base(), alpha);
            if (mode == "closed" || mode == "both") closed_v = sumset_count_closed(spec, alpha);
            if (o.as_json) {
                json j{{"m", m_param}, {"n", n_param}, {"alpha", alpha}};
                if (oracle_v >= 0) j["oracle"] = oracle_v;
                if (closed_v >= 0) j["closed"] = closed_v;
                emit(j.dump(2), o);
            } else {
                std::string s;
                if (oracle_v >= 0) s += std::to_string(oracle_v) + "\n";
                if (closed_v >= 0) s += std::to_string(closed_v) + "\n";
                emit(s, o);
            }
            return 0;
        }

        if (*c_suite) {
            SuiteReport rep = run_suite(suite_name);
            emit(o.as_json ? suite_to_json(rep).dump(2) : report_to_text(rep), o);
            return rep.ok() ? 0 : 1;
        }

        if (*c_family) {
            long ch = o.char_override >= 0 ? o.char_override : 0;
            return with_field(ch, [&]<class K>() -> int {
                std::vector<std::pair<std::string, std::vector<std::string>>> entries;
                std::vector<std::string> vars;
                MonomialOrder ord = MonomialOrder::grevlex();
                long fam_char = ch;
                if (family_name == "example21") {
                    auto E = example21<K>(ch);
                    vars = {"x", "y", "z", "t"};
                    if (!emit_complex.empty()) {
                        if (emit_complex == "j")
                            emit(write_complex_file_text(E.j_complex, vars), o);
                        else if (emit_complex == "k")
                            emit(write_complex_file_text(E.k_complex, vars), o);
                        else
                            throw std::runtime_error("example21 complexes are 'j' and 'k'");
                        return 0;
                    }
                    entries = {{"I", basis_strings(E.I.generators())},
                               {"J", basis_strings(E.J.generators())},
                               {"K", basis_strings(E.Kid.generators())}};
                    ord = E.ord;
                } else if (family_name == "example22") {
                    auto E = example22<K>(ch);
                    vars = {"x", "y", "z", "t"};
                    if (!emit_complex.empty()) {
                        if (emit_complex != "b")
                            throw std::runtime_error("example22's complex is 'b'");
                        emit(write_complex_file_text(E.b_complex, vars), o);
                        return 0;
                    }
                    auto E21 = example21<K>(ch);
                    Ideal<K> zJ =
                        multiply(parse_polynomial<K>(E21.ring, E21.ord, "z"), E21.J);
                    entries = {{"b", basis_strings(E.b.generators())},
                               {"zJ", basis_strings(zJ.generators())}};
                    ord = E.ord;
                } else if (family_name == "cm_family") {
                    auto F = cm_family<K>(m_param, n_param, ch);
                    vars = {"x", "y", "z", "t"};
                    if (!emit_complex.empty()) {
                        if (emit_complex != "image")
                            throw std::runtime_error("cm_family's complex is 'image'");
                        emit(write_complex_file_text(F.complex, vars), o);
                        return 0;
                    }
                    entries = {{"I", basis_strings(F.I.generators())},
                               {"image", basis_strings(F.image.generators())}};
                    ord = F.ord;
                } else if (family_name == "p4_family") {
                    auto F = p4_family<K>(m_param, n_param, ch);
                    vars = {"x", "y", "z", "u", "v"};
                    if (!emit_complex.empty())
                        throw std::runtime_error("p4_family has no explicit complex");
                    entries = {{"J0", basis_strings(F.J0.generators())},
                               {"J", basis_strings(F.J.generators())},
                               {"IC", basis_strings(F.IC.generators())},
                               {"L", basis_strings(F.L.generators())},
                               {"M1", {poly_to_string(primitive_rescale(F.M1))}},
                               {"M2", {poly_to_string(primitive_rescale(F.M2))}}};
                    ord = F.ord;
                } else if (family_name == "surface_ideal") {
                    if (which != "ex34" && which != "ex35")
                        throw std::runtime_error("surface_ideal needs --which ex34 or ex35");
                    auto S = surface_ideal<K>(which, ch);
                    vars = {"x0", "x1", "x2", "x3", "x4", "x5"};
                    if (!emit_complex.empty())
                        throw std::runtime_error("surface_ideal has no explicit complex");
                    entries = {{"P", basis_strings(S.P.generators())}};
                    ord = S.ord;
                } else {
                    throw std::runtime_error("unknown family '" + family_name + "'");
                }
                emit(render_bundle(fam_char, vars, ord, entries, o.as_json), o);
                return 0;
            });
        }

        if (*c_curve) {
            long ch = o.char_override >= 0 ? o.char_override : 0;
            if (var_names.size() != degrees.size() + 1)
                throw std::runtime_error("curve needs one more variable than degrees (got " +
                                         std::to_string(var_names.size()) + " vars, " +
                                         std::to_string(degrees.size()) + " degrees)");
            MonomialOrder ord =
                order_from_name(o.order_override.empty() ? "grevlex" : o.order_override);
            return with_field(ch, [&]<class K>() -> int {
                Ideal<K> I = monomial_curve_ideal<K>(degrees, var_names, ch, ord);
                emit(render_bundle(ch, var_names, ord,
                                   {{"result", basis_strings(I.gb().elements())}}, o.as_json),
                     o);
                return 0;
            });
        }

        if (*c_verify) {
            ComplexFileText data = read_complex_file_text(slurp(complex_file));
            long ch = o.char_override >= 0 ? o.char_override : data.characteristic;
            MonomialOrder ord =
                order_from_name(o.order_override.empty() ? data.order_name : o.order_override);
            return with_field(ch, [&]<class K>() -> int {
                RingPtr R = make_ring(data.vars, ch);
                GradedComplex<K> C = complex_from_text<K>(data, R, ord);
                bool comp = check_composition_zero(C);
                bool pass = false;
                std::string be_text;
                json be_json;
                if (comp) {
                    BEReport rep = buchsbaum_eisenbud(C);
                    pass = rep.exact;
                    be_text = rep.to_string();
                    be_json = be_to_json(rep);
                }
                if (o.as_json) {
                    json j = comp ? be_json : json{{"exact", false}};
                    j["composition_zero"] = comp;
                    j["verified"] = pass;
                    emit(j.dump(2), o);
                } else {
                    std::string s = std::string("composition zero: ") + (comp ? "yes" : "NO") +
                                    "\n" + be_text + (pass ? "verified" : "NOT verified");
                    emit(s, o);
                }
                return pass ? 0 : 1;
            });
        }

        // ---- subcommands over an ideal file ----
        Loaded L = load(o);
        return with_field(L.characteristic, [&]<class K>() -> int {
            RingPtr R = make_ring(L.text.vars, L.characteristic);
            auto get = [&](const std::string& nm) {
                return ideal_from_entry<K>(pick_entry(L.text, nm), R, L.ord);
            };

            if (*c_gb) {
                Ideal<K> I = get(name);
                if (o.as_json) {
                    json j{{"generators", basis_strings(I.gb().elements())}};
                    emit(j.dump(2), o);
                } else {
                    emit(basis_to_string(I.gb().elements()), o);
                }
                return 0;
            }
            if (*c_member) {
                Ideal<K> I = get(name);
                Polynomial<K> f = parse_polynomial<K>(R, L.ord, poly_text);
                bool in = I.contains(f);
                emit(bool_result("member", in, o.as_json), o);
                return in ? 0 : 1;
            }
            if (*c_quotient) {
                emit(render_ideal_result(L, quotient(get(name), get(by_name)), o.as_json), o);
                return 0;
            }
            if (*c_saturate) {
                Ideal<K> B = by_name.empty() ? maximal_ideal<K>(R, L.ord) : get(by_name);
                emit(render_ideal_result(L, saturate(get(name), B), o.as_json), o);
                return 0;
            }
            if (*c_intersect) {
                emit(render_ideal_result(L, intersect(get(name), get(with_name)), o.as_json), o);
                return 0;
            }
            if (*c_eliminate) {
                std::vector<std::string> drop;
                std::string piece;
                std::istringstream ds(drop_text);
                while (std::getline(ds, piece, ',')) {
                    std::istringstream ws(piece);
                    std::string w;
                    while (ws >> w) drop.push_back(w);
                }
                if (drop.empty()) throw std::runtime_error("no variables to drop");
                Ideal<K> E = eliminate(get(name), drop);
                std::vector<std::string> kept;
                for (const auto& v : L.text.vars)
                    if (std::find(drop.begin(), drop.end(), v) == drop.end()) kept.push_back(v);
                emit(render_ideal_result(L, E, o.as_json, &kept), o);
                return 0;
            }
            if (*c_resolve) {
                Ideal<K> I = get(name);
                GradedComplex<K> res =
                    of_resolve == "ideal"
                        ? resolution_of_ideal<K>(R, L.ord, I.generators())
                        : resolve_quotient<K>(R, L.ord, I.generators());
                emit(write_complex_file_text(res, L.text.vars), o);
                return 0;
            }
            if (*c_betti) {
                Ideal<K> I = get(name);
                GradedComplex<K> res =
                    of_betti == "ideal"
                        ? resolution_of_ideal<K>(R, L.ord, I.generators())
                        : resolve_quotient<K>(R, L.ord, I.generators());
                BettiTable b = betti_table(res);
                emit(o.as_json ? betti_to_json(b).dump(2) : b.to_string(), o);
                return 0;
            }
            if (*c_reg) {
                Ideal<K> I = get(name);
                int r = of_reg == "quotient"
                            ? regularity_of_quotient<K>(R, L.ord, I.generators())
                            : regularity_of_ideal<K>(R, L.ord, I.generators());
                emit(scalar_result("reg", std::to_string(r), o.as_json), o);
                return 0;
            }
            if (*c_depth) {
                int d = depth_of_quotient<K>(R, L.ord, get(name).generators());
                emit(scalar_result("depth", std::to_string(d), o.as_json), o);
                return 0;
            }
            if (*c_hilbert) {
                Ideal<K> I = get(name);
                if (at_degree >= 0) {
                    mpz_class v = hilbert_function_quotient(I.gb(), at_degree);
                    emit(scalar_result("HF(" + std::to_string(at_degree) + ")", v.get_str(),
                                       o.as_json),
                         o);
                } else {
                    ZPoly num = hilbert_numerator(I.gb());
                    if (o.as_json) {
                        json j{{"numerator", num.to_string()},
                               {"denominator_power", R->nvars()}};
                        emit(j.dump(2), o);
                    } else {
                        emit("hilbert series = " + hilbert_series_string(num, R->nvars()), o);
                    }
                }
                return 0;
            }
            if (*c_dim) {
                ZPoly num = hilbert_numerator(get(name).gb());
                emit(scalar_result("dim",
                                   std::to_string(dimension_from_numerator(num, R->nvars())),
                                   o.as_json),
                     o);
                return 0;
            }
            if (*c_deg) {
                ZPoly num = hilbert_numerator(get(name).gb());
                emit(scalar_result("degree", degree_from_numerator(num).get_str(), o.as_json), o);
                return 0;
            }
            if (*c_radical) {
                bool eq = same_radical(get(name), get(with_name));
                emit(bool_result("same_radical", eq, o.as_json), o);
                return eq ? 0 : 1;
            }
            if (*c_ext) {
                Ideal<K> I = get(name);
                int tw = twist_set ? twist : -R->nvars();
                PresentedModule<K> E = ext_cyclic<K>(I, q_param, tw);
                if (o.as_json) {
                    json j{{"q", q_param}, {"twist", tw}, {"zero", E.is_zero()},
                           {"generator_twists", E.twists()}};
                    if (have_from && have_to) {
                        json dims = json::array();
                        for (int d = from_deg; d <= to_deg; ++d)
                            dims.push_back(
                                {{"degree", d}, {"dim", E.graded_dimension(d).get_str()}});
                        j["graded_dimensions"] = dims;
                    }
                    emit(j.dump(2), o);
                } else {
                    std::ostringstream s;
                    s << "Ext^" << q_param << " twist " << tw << ": "
                      << (E.is_zero() ? "zero" : "nonzero") << "\n";
                    s << "generator twists:";
                    for (int t : E.twists()) s << " " << t;
                    s << "\n";
                    if (have_from && have_to) {
                        for (int d = from_deg; d <= to_deg; ++d)
                            s << "dim_" << d << " = " << E.graded_dimension(d).get_str() << "\n";
                    }
                    emit(s.str(), o);
                }
                return 0;
            }
            if (*c_socle) {
                Ideal<K> I = get(name);
                int tw = twist_set ? twist : -R->nvars();
                PresentedModule<K> E = ext_cyclic<K>(I, q_param, tw);
                std::vector<int> soc = socle_degrees(E);
                std::sort(soc.begin(), soc.end());
                if (o.as_json) {
                    emit(json{{"socle_degrees", soc}}.dump(2), o);
                } else {
                    std::string s = "socle degrees:";
                    for (int d : soc) s += " " + std::to_string(d);
                    emit(s, o);
                }
                return 0;
            }
            if (*c_lc) {
                Ideal<K> I = get(name);
                auto dims = local_cohomology_dims(I, i_param, from_deg, to_deg);
                if (o.as_json) {
                    json arr = json::array();
                    for (int d = from_deg; d <= to_deg; ++d)
                        arr.push_back(
                            {{"degree", d}, {"dim", dims[d - from_deg].get_str()}});
                    emit(json{{"i", i_param}, {"dims", arr}}.dump(2), o);
                } else {
                    std::ostringstream s;
                    for (int d = from_deg; d <= to_deg; ++d)
                        s << "h^" << i_param << "_" << d << " = "
                          << dims[d - from_deg].get_str() << "\n";
                    emit(s.str(), o);
                }
                return 0;
            }
            throw std::runtime_error("unhandled subcommand");
        });
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
}
