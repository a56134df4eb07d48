// smc-kit: command-line front end for workspaces of complexes and collections.
#include "smckit/errors.hpp"
#include "smckit/verify.hpp"
#include "smckit/workspace.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using namespace smckit;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, MathFailed = 1, BadInput = 2, Bound = 3 };

struct Flags {
    std::string field;
    bool json = false;
    bool dual = false;
    bool force = false;
    bool certify = false;
    std::size_t pd_bound = 32;
    std::size_t strip_cap = 10000;
    std::size_t iso_trials = 40;
    int threshold = 1;
    std::string algebra = "A";
};

struct Out {
    json doc;
    std::string text;
    int code = Ok;
};

Options options(const Flags& f)
{
    Options o;
    o.pd_bound = f.pd_bound;
    o.strip_cap = f.strip_cap;
    o.iso_trials = f.iso_trials;
    o.certify = f.certify;
    return o;
}

std::uint32_t parse_field(const std::string& s)
{
    if (s == "rationals" || s == "Q")
        return 0;
    try {
        std::size_t used = 0;
        unsigned long p = std::stoul(s, &used);
        if (used == s.size()) {
            Field::prime(static_cast<std::uint32_t>(p));
            return static_cast<std::uint32_t>(p);
        }
    } catch (const std::logic_error&) {
    }
    throw InputError("--field expects a prime or \"rationals\", got \"" + s + "\"");
}

json objects_json(const SMC& s)
{
    json a = json::array();
    for (const auto& x : s.objects)
        a.push_back(describe(x));
    return a;
}

json spec_json(const ProjComplex& x)
{
    ObjectSpec s = object_spec(x, "A");
    json j;
    if (s.shorthand)
        return *s.shorthand;
    for (const auto& [n, v] : s.terms)
        j["terms"][std::to_string(n)] = v;
    for (const auto& [n, rows] : s.diffs)
        j["differentials"][std::to_string(n)] = rows;
    return j;
}

json smc_report_json(const SmcReport& r)
{
    return {{"axiom1", r.axiom1},
            {"axiom3", r.axiom3},
            {"euler_unimodular", r.euler_unimodular},
            {"euler_det", r.euler_det},
            {"evidence", r.evidence},
            {"witnesses", r.witnesses},
            {"passed", r.passed()}};
}

std::string smc_report_text(const SmcReport& r)
{
    std::string t;
    t += std::string("  Hom vanishing in degree 0:        ") + (r.axiom1 ? "yes" : "no") + "\n";
    t += std::string("  no negative extensions:           ") + (r.axiom3 ? "yes" : "no") + "\n";
    t += "  Euler classes unimodular:         " + std::string(r.euler_unimodular ? "yes" : "no") +
         " (det " + std::to_string(r.euler_det) + ")\n";
    t += "  generation evidence:              " + r.evidence + "\n";
    for (const auto& w : r.witnesses)
        t += "  witness: " + w + "\n";
    return t;
}

json check_json(const CheckReport& c)
{
    return {{"name", c.name},         {"inputs", c.inputs},         {"status", to_string(c.status)},
            {"witness", c.witness},   {"conditions", c.conditions}, {"seconds", c.seconds}};
}

std::string check_text(const CheckReport& c)
{
    std::string t = "  [" + to_string(c.status) + "] " + c.name + "  (" + c.inputs + ")\n";
    for (const auto& w : c.witness)
        t += "      witness: " + w + "\n";
    if (c.status != Status::Pass)
        for (const auto& w : c.conditions)
            t += "      " + w + "\n";
    return t;
}

void need_args(const std::vector<std::string>& a, std::size_t n, const std::string& usage)
{
    if (a.size() != n)
        throw InputError("usage: " + usage);
}

Out cmd_validate(const Workspace& ws, const std::vector<std::string>& a)
{
    need_args(a, 1, "validate WORKSPACE SMC");
    SMC s = ws.smc(a[0]);
    SmcReport r = validate_smc(s);
    Out o;
    o.doc = {{"command", "validate"}, {"smc", a[0]}, {"objects", objects_json(s)}, {"report", smc_report_json(r)}};
    o.text = "validate " + a[0] + " = " + describe(s) + ": " + (r.passed() ? "simple-minded" : "NOT simple-minded") +
             "\n" + smc_report_text(r);
    o.code = r.passed() ? Ok : MathFailed;
    return o;
}

Out cmd_glue(const Workspace& ws, const std::vector<std::string>& a, const Flags& f)
{
    need_args(a, 2, "glue WORKSPACE SMC_X SMC_Y [--dual]");
    if (ws.smc_algebra(a[0]) != "X" || ws.smc_algebra(a[1]) != "Y")
        throw InputError("glue expects a collection over X (A/AeA) and one over Y (eAe)");
    const Recollement& r = ws.recollement();
    SMC sx = ws.smc(a[0]), sy = ws.smc(a[1]);
    Glued g = f.dual ? glue_dual(sx, sy, r) : glue(sx, sy, r);
    SmcReport v = validate_smc(g.smc);
    std::vector<CheckReport> checks = check_gluing(sx, sy, r, ws.options());
    Out o;
    json pieces = json::array();
    for (const auto& p : g.report.pieces)
        pieces.push_back({{"y", describe(p.y)},
                          {"image", describe(p.image)},
                          {"middle", describe(p.middle)},
                          {f.dual ? "m" : "u", describe(p.trunc.u)},
                          {f.dual ? "n" : "v", describe(p.trunc.v)},
                          {"object", describe(p.object)}});
    json objs = json::array();
    for (const auto& x : g.smc.objects)
        objs.push_back(spec_json(x));
    bool ok = v.passed();
    json cj = json::array();
    for (const auto& c : checks) {
        cj.push_back(check_json(c));
        ok = ok && c.ok();
    }
    bool primal_iso = true;
    if (f.dual)
        primal_iso = smc_iso(g.smc, glue(sx, sy, r).smc, ws.options());
    ok = ok && primal_iso;
    o.doc = {{"command", "glue"}, {"dual", f.dual},           {"glued", describe(g.smc)},
             {"objects", objs},   {"pieces", pieces},         {"validation", smc_report_json(v)},
             {"checks", cj},      {"iso_to_primal", primal_iso}};
    o.text = std::string(f.dual ? "dual gluing" : "gluing") + " of " + describe(sx) + " and " + describe(sy) + ": " +
             describe(g.smc) + "\n";
    for (std::size_t j = 0; j < g.report.pieces.size(); ++j) {
        const auto& p = g.report.pieces[j];
        std::string idx = std::to_string(j + 1);
        if (f.dual)
            o.text += "  j_*(Y" + idx + ") = " + describe(p.image) + " -> i_*N" + idx + " = " + describe(p.trunc.v) +
                      " -> P" + idx + "[1], P" + idx + " = " + describe(p.object) + "\n";
        else
            o.text += "  i_*U" + idx + " = " + describe(p.trunc.u) + " -> j_!(Y" + idx + ") = " + describe(p.image) +
                      " -> W" + idx + " = " + describe(p.object) + "\n";
    }
    o.text += smc_report_text(v);
    if (f.dual)
        o.text += std::string("  iso to primal: ") + (primal_iso ? "true" : "false") + "\n";
    for (const auto& c : checks)
        o.text += check_text(c);
    o.code = ok ? Ok : MathFailed;
    return o;
}

Direction parse_direction(const std::string& s)
{
    if (s == "left" || s == "+" || s == "plus")
        return Direction::Left;
    if (s == "right" || s == "-" || s == "minus")
        return Direction::Right;
    throw InputError("direction must be left (mu^+) or right (mu^-), got \"" + s + "\"");
}

Out cmd_mutate(const Workspace& ws, const std::vector<std::string>& a, const Flags& f)
{
    need_args(a, 3, "mutate WORKSPACE SMC INDEX left|right [--force]");
    SMC s = ws.smc(a[0]);
    std::size_t idx = 0;
    try {
        idx = std::stoul(a[1]);
    } catch (const std::logic_error&) {
        throw InputError("index must be a positive integer");
    }
    if (idx == 0 || idx > s.size())
        throw InputError("index " + a[1] + " out of range 1.." + std::to_string(s.size()));
    Direction d = parse_direction(a[2]);
    Mutated m = mutate(s, idx - 1, d, f.force);
    SmcReport v = validate_smc(m.smc);
    json objs = json::array();
    for (const auto& x : m.smc.objects)
        objs.push_back(spec_json(x));
    Out o;
    o.doc = {{"command", "mutate"},
             {"smc", a[0]},
             {"index", idx},
             {"direction", d == Direction::Left ? "left" : "right"},
             {"result", describe(m.smc)},
             {"objects", objs},
             {"multiplicity", m.step.multiplicity},
             {"validation", smc_report_json(v)}};
    o.text = std::string(d == Direction::Left ? "mu^+_" : "mu^-_") + std::to_string(idx) + "(" + describe(s) +
             ") = " + describe(m.smc) + "\n" + smc_report_text(v);
    o.code = v.passed() ? Ok : MathFailed;
    return o;
}

Out cmd_order(const Workspace& ws, const std::vector<std::string>& a)
{
    need_args(a, 2, "order WORKSPACE SMC_A SMC_B");
    SMC s = ws.smc(a[0]), s2 = ws.smc(a[1]);
    Order ord = compare(s, s2, ws.options());
    const char* sym = ord == Order::Equal ? "=" : ord == Order::Greater ? ">=" : ord == Order::Less ? "<=" : "incomparable";
    Out o;
    o.doc = {{"command", "order"}, {"a", a[0]}, {"b", a[1]}, {"order", to_string(ord)}, {"symbol", sym}};
    o.text = a[0] + " " + sym + " " + a[1] + "   (" + describe(s) + " vs " + describe(s2) + ")\n";
    return o;
}

Out cmd_truncate(const Workspace& ws, const std::vector<std::string>& a, const Flags& f)
{
    need_args(a, 2, "truncate WORKSPACE OBJECT SMC [--threshold n]");
    SMC s = ws.smc(a[1]);
    ProjComplex t = ws.object(a[0], ws.smc_algebra(a[1]));
    Truncation tr = truncate(t, s, f.threshold, ws.options());
    json strips = json::array();
    for (const auto& [i, b] : tr.strips)
        strips.push_back({{"object", i + 1}, {"shift", -b}});
    Out o;
    o.doc = {{"command", "truncate"}, {"object", a[0]},          {"smc", a[1]},
             {"threshold", tr.threshold}, {"u", describe(tr.u)}, {"v", describe(tr.v)},
             {"strips", strips},          {"u_member", tr.u_member}, {"v_member", tr.v_member},
             {"cone_ok", tr.cone_ok}};
    o.text = "U -> " + describe(t) + " -> V with U = " + describe(tr.u) + ", V = " + describe(tr.v) + "\n" +
             "  U in the aisle: " + (tr.u_member ? "yes" : "no") + ", V in the coaisle: " +
             (tr.v_member ? "yes" : "no") + ", triangle checks: " + (tr.cone_ok ? "yes" : "no") + "\n";
    o.code = tr.u_member && tr.v_member && tr.cone_ok ? Ok : MathFailed;
    return o;
}

Out cmd_hom(const Workspace& ws, const std::vector<std::string>& a, const Flags& f)
{
    need_args(a, 2, "hom WORKSPACE OBJECT_X OBJECT_Y [--algebra A|X|Y]");
    ProjComplex x = ws.object(a[0], f.algebra), y = ws.object(a[1], f.algebra);
    HomTable h = hom_table(x, y);
    json dims = json::object();
    Out o;
    o.text = "dim Hom(" + describe(x) + ", " + describe(y) + "[n])\n";
    for (int n = h.min_degree; n <= h.max_degree; ++n) {
        dims[std::to_string(n)] = h.dim(n);
        if (h.dim(n) != 0)
            o.text += "  n = " + std::to_string(n) + ": " + std::to_string(h.dim(n)) + "\n";
    }
    o.doc = {{"command", "hom"}, {"x", describe(x)}, {"y", describe(y)}, {"dims", dims}};
    return o;
}

Out cmd_paper_examples(const Flags& f)
{
    Field fld = Field();
    if (!f.field.empty()) {
        std::uint32_t p = parse_field(f.field);
        fld = p == 0 ? Field::rationals() : Field::prime(p);
    }
    auto reps = run_paper_examples(fld, options(f));
    Out o;
    json arr = json::array();
    std::size_t failed = 0, gated = 0;
    for (const auto& c : reps) {
        arr.push_back(check_json(c));
        o.text += check_text(c);
        failed += c.status == Status::Fail;
        gated += c.status == Status::HypothesisFailed;
    }
    o.text += std::to_string(reps.size()) + " checks, " + std::to_string(failed) + " failed, " + std::to_string(gated) +
              " with hypotheses not met\n";
    o.doc = {{"command", "paper-examples"}, {"field", fld.name()}, {"checks", arr}, {"failed", failed}};
    o.code = failed == 0 ? Ok : MathFailed;
    return o;
}

Out dispatch(const std::string& op, const Workspace& ws, const std::vector<std::string>& args, const Flags& f)
{
    if (op == "validate")
        return cmd_validate(ws, args);
    if (op == "glue")
        return cmd_glue(ws, args, f);
    if (op == "mutate")
        return cmd_mutate(ws, args, f);
    if (op == "order")
        return cmd_order(ws, args);
    if (op == "truncate")
        return cmd_truncate(ws, args, f);
    if (op == "hom")
        return cmd_hom(ws, args, f);
    throw InputError("unknown command \"" + op + "\"");
}

// Runs one subcommand; without arguments, runs the workspace's stored commands of that kind.
int run(const std::string& op, const std::string& path, const std::vector<std::string>& args, const Flags& f)
{
    json results = json::array();
    int code = Ok;
    auto emit_error = [&](int c, const std::string& kind, const std::string& msg) {
        if (f.json)
            std::cout << json{{"command", op}, {"error", kind}, {"message", msg}, {"exit", c}}.dump(2) << "\n";
        else
            std::cerr << "smc-kit " << op << ": " << msg << "\n";
        return c;
    };
    try {
        WorkspaceDoc doc = load_workspace(path);
        if (!f.field.empty())
            doc.characteristic = parse_field(f.field);
        Workspace ws(std::move(doc), options(f));
        std::vector<std::vector<std::string>> todo;
        if (!args.empty())
            todo.push_back(args);
        else
            for (const auto& c : ws.doc().commands)
                if (c.op == op)
                    todo.push_back(c.args);
        if (todo.empty())
            throw InputError("no arguments given and the workspace stores no \"" + op + "\" commands");
        for (const auto& a : todo) {
            Out o;
            try {
                o = dispatch(op, ws, a, f);
            } catch (const MathError& e) {
                o.doc = {{"command", op}, {"args", a}, {"error", "math"}, {"message", e.what()}};
                o.text = std::string("refused: ") + e.what() + (op == "mutate" ? " (use --force to override)" : "") + "\n";
                o.code = MathFailed;
            }
            o.doc["exit"] = o.code;
            results.push_back(o.doc);
            if (!f.json)
                std::cout << o.text;
            code = std::max(code, o.code);
        }
    } catch (const InputError& e) {
        return emit_error(BadInput, "input", e.what());
    } catch (const BoundExceeded& e) {
        return emit_error(Bound, "bound", e.what());
    }
    if (f.json)
        std::cout << (results.size() == 1 ? results[0] : results).dump(2) << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simple-minded collections, recollements, gluing and mutation over quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    app.add_option("--field", f.field, "prime characteristic or \"rationals\" (overrides the workspace)");
    app.add_flag("--json", f.json, "machine-readable output");
    app.add_flag("--certify", f.certify, "exhaustive isomorphism search where feasible");
    app.add_option("--pd-bound", f.pd_bound, "projective dimension bound")->capture_default_str();
    app.add_option("--strip-cap", f.strip_cap, "maximum truncation strips")->capture_default_str();
    app.add_option("--iso-trials", f.iso_trials, "random trials per isomorphism test")->capture_default_str();

    std::string path;
    std::vector<std::string> args;
    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("workspace", path, "workspace JSON file")->required();
        s->add_option("args", args, "command arguments");
        return s;
    };
    add("validate", "check the axioms of a collection: SMC");
    CLI::App* glue = add("glue", "glue a collection over X with one over Y: SMC_X SMC_Y");
    glue->add_flag("--dual", f.dual, "use the dual construction");
    CLI::App* mut = add("mutate", "mutate a collection: SMC INDEX left|right");
    mut->add_flag("--force", f.force, "mutate even at a non-rigid object");
    add("order", "compare two collections: SMC_A SMC_B");
    CLI::App* tr = add("truncate", "truncation triangle of an object: OBJECT SMC");
    tr->add_option("--threshold", f.threshold, "split into Filt S[>= 1 - t] and Filt S[<= -t]")->capture_default_str();
    CLI::App* hom = add("hom", "Hom table of two objects: OBJECT_X OBJECT_Y");
    hom->add_option("--algebra", f.algebra, "A, X or Y")->capture_default_str();
    CLI::App* pe = app.add_subcommand("paper-examples", "run the built-in A2 and beta alpha examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e);
        return c == 0 ? Ok : BadInput;
    }
    if (pe->parsed()) {
        try {
            Out o = cmd_paper_examples(f);
            std::cout << (f.json ? o.doc.dump(2) + "\n" : o.text);
            return o.code;
        } catch (const InputError& e) {
            std::cerr << "smc-kit: " << e.what() << "\n";
            return BadInput;
        }
    }
    for (const auto* s : app.get_subcommands())
        return run(s->get_name(), path, args, f);
    return BadInput;
}
