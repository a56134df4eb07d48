#include "smckit/workspace.hpp"

#include "smckit/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace smckit {

using nlohmann::json;

namespace {

std::string where(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& need(const json& j, const char* key, const std::string& ctx)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(ctx + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string str(const json& j, const std::string& ctx)
{
    if (!j.is_string())
        throw InputError(ctx + ": expected a string");
    return j.get<std::string>();
}

std::vector<std::string> strings(const json& j, const std::string& ctx)
{
    if (!j.is_array())
        throw InputError(ctx + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j)
        out.push_back(str(x, ctx));
    return out;
}

int degree(const std::string& key, const std::string& ctx)
{
    try {
        std::size_t used = 0;
        int n = std::stoi(key, &used);
        if (used == key.size())
            return n;
    } catch (const std::exception&) {
    }
    throw InputError(ctx + ": degree key \"" + key + "\" is not an integer");
}

ObjectSpec parse_object(const json& j, const std::string& ctx)
{
    ObjectSpec s;
    if (j.is_string()) {
        s.shorthand = j.get<std::string>();
        return s;
    }
    if (!j.is_object())
        throw InputError(ctx + ": expected a string or an object");
    if (j.contains("algebra"))
        s.algebra = str(j.at("algebra"), ctx + ".algebra");
    if (j.contains("shorthand")) {
        s.shorthand = str(j.at("shorthand"), ctx + ".shorthand");
        return s;
    }
    const json& terms = need(j, "terms", ctx);
    if (!terms.is_object())
        throw InputError(ctx + ".terms: expected an object keyed by degree");
    for (const auto& [k, v] : terms.items())
        s.terms[degree(k, ctx + ".terms")] = strings(v, ctx + ".terms." + k);
    if (j.contains("differentials")) {
        const json& d = j.at("differentials");
        if (!d.is_object())
            throw InputError(ctx + ".differentials: expected an object keyed by degree");
        for (const auto& [k, v] : d.items()) {
            std::string c = ctx + ".differentials." + k;
            if (!v.is_array())
                throw InputError(c + ": expected an array of rows");
            std::vector<std::vector<std::string>> rows;
            for (const auto& row : v)
                rows.push_back(strings(row, c));
            s.diffs[degree(k, c)] = rows;
        }
    }
    return s;
}

json object_json(const ObjectSpec& s)
{
    if (s.shorthand && s.algebra == "A")
        return *s.shorthand;
    json j;
    j["algebra"] = s.algebra;
    if (s.shorthand) {
        j["shorthand"] = *s.shorthand;
        return j;
    }
    j["terms"] = json::object();
    for (const auto& [n, v] : s.terms)
        j["terms"][std::to_string(n)] = v;
    if (!s.diffs.empty()) {
        j["differentials"] = json::object();
        for (const auto& [n, rows] : s.diffs)
            j["differentials"][std::to_string(n)] = rows;
    }
    return j;
}

int vertex_of(const Algebra& a, const std::string& label, const std::string& ctx)
{
    const auto& v = a.vertex_labels();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == label)
            return static_cast<int>(i);
    throw InputError(ctx + ": unknown vertex \"" + label + "\"");
}

} // namespace

WorkspaceDoc parse_workspace(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("workspace is not valid JSON at " + where(text, e.byte) + ": " + e.what());
    }
    WorkspaceDoc d;
    d.schema = str(need(j, "schema", "workspace"), "schema");
    if (d.schema != kWorkspaceSchema)
        throw InputError("unsupported schema \"" + d.schema + "\" (expected " + kWorkspaceSchema + ")");
    if (j.contains("field")) {
        const json& f = j.at("field");
        if (f.is_string()) {
            std::string s = f.get<std::string>();
            if (s == "rationals" || s == "Q")
                d.characteristic = 0;
            else
                d.characteristic = static_cast<std::uint32_t>(degree(s, "field"));
        } else if (f.is_number_unsigned()) {
            d.characteristic = f.get<std::uint32_t>();
        } else {
            throw InputError("field: expected a prime or \"rationals\"");
        }
    }
    const json& q = need(j, "quiver", "workspace");
    d.quiver.vertices = strings(need(q, "vertices", "quiver"), "quiver.vertices");
    if (q.contains("arrows")) {
        if (!q.at("arrows").is_array())
            throw InputError("quiver.arrows: expected an array");
        for (const auto& a : q.at("arrows")) {
            std::string lbl = str(need(a, "label", "arrow"), "arrow.label");
            std::string c = "arrow " + lbl;
            int s = d.quiver.vertex_index(str(need(a, "source", c), c + ".source"));
            int t = d.quiver.vertex_index(str(need(a, "target", c), c + ".target"));
            d.quiver.arrows.push_back({lbl, s, t});
        }
    }
    if (j.contains("relations"))
        d.relations = strings(j.at("relations"), "relations");
    if (j.contains("idempotent") && !j.at("idempotent").is_null())
        d.idempotent = strings(j.at("idempotent"), "idempotent");
    if (j.contains("objects")) {
        if (!j.at("objects").is_object())
            throw InputError("objects: expected an object keyed by name");
        for (const auto& [k, v] : j.at("objects").items())
            d.objects[k] = parse_object(v, "objects." + k);
    }
    if (j.contains("smcs")) {
        if (!j.at("smcs").is_object())
            throw InputError("smcs: expected an object keyed by name");
        for (const auto& [k, v] : j.at("smcs").items()) {
            SmcSpec s;
            if (v.is_array()) {
                s.members = strings(v, "smcs." + k);
            } else {
                if (v.contains("algebra"))
                    s.algebra = str(v.at("algebra"), "smcs." + k + ".algebra");
                s.members = strings(need(v, "objects", "smcs." + k), "smcs." + k + ".objects");
            }
            d.smcs[k] = s;
        }
    }
    if (j.contains("commands")) {
        if (!j.at("commands").is_array())
            throw InputError("commands: expected an array");
        for (const auto& c : j.at("commands")) {
            CommandSpec cs;
            cs.op = str(need(c, "op", "command"), "command.op");
            if (c.contains("args"))
                cs.args = strings(c.at("args"), "command " + cs.op + ".args");
            d.commands.push_back(cs);
        }
    }
    return d;
}

WorkspaceDoc load_workspace(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open workspace " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_workspace(ss.str());
}

std::string serialize_workspace(const WorkspaceDoc& d)
{
    json j;
    j["schema"] = d.schema;
    if (d.characteristic == 0)
        j["field"] = "rationals";
    else
        j["field"] = d.characteristic;
    j["quiver"]["vertices"] = d.quiver.vertices;
    j["quiver"]["arrows"] = json::array();
    for (const auto& a : d.quiver.arrows)
        j["quiver"]["arrows"].push_back({{"label", a.label},
                                         {"source", d.quiver.vertices[static_cast<std::size_t>(a.source)]},
                                         {"target", d.quiver.vertices[static_cast<std::size_t>(a.target)]}});
    j["relations"] = d.relations;
    if (d.idempotent)
        j["idempotent"] = *d.idempotent;
    j["objects"] = json::object();
    for (const auto& [k, v] : d.objects)
        j["objects"][k] = object_json(v);
    j["smcs"] = json::object();
    for (const auto& [k, v] : d.smcs) {
        if (v.algebra == "A")
            j["smcs"][k] = v.members;
        else
            j["smcs"][k] = {{"algebra", v.algebra}, {"objects", v.members}};
    }
    j["commands"] = json::array();
    for (const auto& c : d.commands)
        j["commands"].push_back({{"op", c.op}, {"args", c.args}});
    return j.dump(2) + "\n";
}

ObjectSpec object_spec(const ProjComplex& x, const std::string& algebra)
{
    ObjectSpec s;
    s.algebra = algebra;
    if (x.is_zero()) {
        s.shorthand = "0";
        return s;
    }
    const Algebra& a = *x.alg;
    for (int n = x.low; n <= x.high(); ++n) {
        auto& t = s.terms[n];
        for (int v : x.term(n))
            t.push_back(a.vertex_labels()[static_cast<std::size_t>(v)]);
    }
    for (int n = x.low; n < x.high(); ++n) {
        ElemMatrix d = x.diff(n);
        if (d.is_zero())
            continue;
        std::vector<std::vector<std::string>> rows(d.rows());
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c)
                rows[r].push_back(a.format(d(r, c)));
        s.diffs[n] = rows;
    }
    return s;
}

Workspace::Workspace(WorkspaceDoc doc, Options opts) : doc_(std::move(doc)), opts_(opts)
{
    Field f = doc_.characteristic == 0 ? Field::rationals() : Field::prime(doc_.characteristic);
    std::vector<Path> rel;
    for (const auto& r : doc_.relations) {
        Path p;
        std::stringstream ss(r);
        std::string lbl;
        while (std::getline(ss, lbl, '.'))
            p.push_back(doc_.quiver.arrow_index(lbl));
        rel.push_back(p);
    }
    a_ = build_path_algebra(f, doc_.quiver, rel);
    for (const auto& [name, s] : doc_.objects)
        built_[name] = build(name, s);
    for (const auto& [name, s] : doc_.smcs)
        smc(name);
}

AlgebraPtr Workspace::algebra(const std::string& which) const
{
    if (which == "A")
        return a_;
    if (which == "X")
        return recollement().x_algebra();
    if (which == "Y")
        return recollement().y_algebra();
    throw InputError("unknown algebra \"" + which + "\" (use A, X or Y)");
}

const Recollement& Workspace::recollement() const
{
    if (!rec_) {
        if (!doc_.idempotent)
            throw InputError("the workspace has no idempotent");
        std::vector<int> e;
        for (const auto& v : *doc_.idempotent)
            e.push_back(doc_.quiver.vertex_index(v));
        rec_ = std::make_unique<Recollement>(a_, e, opts_);
    }
    return *rec_;
}

ProjComplex Workspace::shorthand(const std::string& text, const std::string& alg) const
{
    AlgebraPtr a = algebra(alg);
    static const std::regex re(R"(\s*(eA|0|([SPI])([^\[\]\s]+))\s*(\[\s*(-?\d+)\s*\])?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw InputError("cannot read object \"" + text + "\" (expected a name or S<v>, P<v>, I<v>, eA, 0 with [n])");
    int n = m[5].matched ? std::stoi(m[5].str()) : 0;
    ProjComplex x(a);
    if (m[1] == "0")
        return x;
    if (m[1] == "eA") {
        if (alg != "A")
            throw InputError("eA is only defined over A");
        for (int v : recollement().idempotent())
            x = direct_sum(x, stalk_projective(a, v, 0));
        return shift(x, n);
    }
    int v = vertex_of(*a, m[3].str(), "object \"" + text + "\"");
    char kind = m[2].str()[0];
    if (kind == 'S')
        x = simple_complex(a, v, 0, opts_);
    else if (kind == 'P')
        x = stalk_projective(a, v, 0);
    else
        x = module_complex(Module::injective(a, v), 0, opts_);
    return shift(x, n);
}

ProjComplex Workspace::build(const std::string& name, const ObjectSpec& s) const
{
    if (s.shorthand)
        return shorthand(*s.shorthand, s.algebra);
    AlgebraPtr a = algebra(s.algebra);
    ProjComplex x(a);
    std::string ctx = "object \"" + name + "\"";
    for (const auto& [n, labels] : s.terms) {
        std::vector<int> vs;
        for (const auto& l : labels)
            vs.push_back(vertex_of(*a, l, ctx));
        x.set_term(n, vs);
    }
    for (const auto& [n, rows] : s.diffs) {
        if (!s.terms.count(n) || !s.terms.count(n + 1))
            throw InputError(ctx + ": differential in degree " + std::to_string(n) + " between missing terms");
        std::size_t nr = x.term(n + 1).size(), nc = x.term(n).size();
        if (rows.size() != nr)
            throw InputError(ctx + ": differential in degree " + std::to_string(n) + " needs " +
                             std::to_string(nr) + " rows");
        ElemMatrix d(nr, nc);
        for (std::size_t r = 0; r < nr; ++r) {
            if (rows[r].size() != nc)
                throw InputError(ctx + ": differential in degree " + std::to_string(n) + " needs " +
                                 std::to_string(nc) + " columns");
            for (std::size_t c = 0; c < nc; ++c)
                d(r, c) = a->parse(rows[r][c]);
        }
        x.set_diff(n, d);
    }
    try {
        x.check();
    } catch (const InputError& e) {
        throw InputError(ctx + ": " + e.what());
    }
    return x;
}

ProjComplex Workspace::object(const std::string& name, const std::string& alg) const
{
    auto it = built_.find(name);
    if (it != built_.end()) {
        const std::string& tag = doc_.objects.at(name).algebra;
        if (tag != alg)
            throw InputError("object \"" + name + "\" lives over " + tag + ", not " + alg);
        return it->second;
    }
    return shorthand(name, alg);
}

SMC Workspace::smc(const std::string& name) const
{
    auto it = doc_.smcs.find(name);
    if (it == doc_.smcs.end())
        throw InputError("unknown collection \"" + name + "\"");
    SMC s;
    s.alg = algebra(it->second.algebra);
    for (const auto& m : it->second.members)
        s.objects.push_back(object(m, it->second.algebra));
    s.certificate.kind = Evidence::UserAssumed;
    s.certificate.detail = "workspace collection " + name;
    return s;
}

std::string Workspace::smc_algebra(const std::string& name) const
{
    auto it = doc_.smcs.find(name);
    if (it == doc_.smcs.end())
        throw InputError("unknown collection \"" + name + "\"");
    return it->second.algebra;
}

} // namespace smckit
