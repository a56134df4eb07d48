#include "smckit/algebra.hpp"

#include "smckit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace smckit {

// ---------------------------------------------------------------- Elem

Elem::Elem(std::uint32_t basis_index, Scalar coeff)
{
    if (!coeff.is_zero())
        terms_.emplace_back(basis_index, std::move(coeff));
}

Elem Elem::from_terms(const std::vector<Term>& terms)
{
    Elem e;
    for (const auto& t : terms)
        e.add_term(t.first, t.second);
    return e;
}

std::optional<Scalar> Elem::coeff(std::uint32_t basis_index) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), basis_index,
                               [](const Term& t, std::uint32_t i) { return t.first < i; });
    if (it == terms_.end() || it->first != basis_index)
        return std::nullopt;
    return it->second;
}

void Elem::add_term(std::uint32_t basis_index, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), basis_index,
                               [](const Term& t, std::uint32_t i) { return t.first < i; });
    if (it != terms_.end() && it->first == basis_index) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else {
        terms_.insert(it, Term(basis_index, c));
    }
}

Elem& Elem::operator+=(const Elem& o)
{
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].second + o.terms_[j].second;
            if (!s.is_zero())
                out.emplace_back(terms_[i].first, s);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Elem& Elem::operator-=(const Elem& o) { return *this += -o; }

Elem Elem::operator+(const Elem& o) const
{
    Elem r = *this;
    r += o;
    return r;
}

Elem Elem::operator-(const Elem& o) const
{
    Elem r = *this;
    r -= o;
    return r;
}

Elem Elem::operator-() const
{
    Elem r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

Elem Elem::scaled(const Scalar& s) const
{
    if (s.is_zero())
        return Elem();
    Elem r = *this;
    for (auto& t : r.terms_)
        t.second *= s;
    return r;
}

// ---------------------------------------------------------------- Quiver

int Quiver::vertex_index(const std::string& label) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label)
            return static_cast<int>(i);
    throw InputError("unknown vertex '" + label + "'");
}

int Quiver::arrow_index(const std::string& label) const
{
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label)
            return static_cast<int>(i);
    throw InputError("unknown arrow '" + label + "'");
}

void Quiver::validate() const
{
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (v.empty() || !seen.insert(v).second)
            throw InputError("vertex labels must be non-empty and unique ('" + v + "')");
    std::set<std::string> seen_arrows;
    const int n = static_cast<int>(vertices.size());
    for (const auto& a : arrows) {
        if (a.label.empty() || !seen_arrows.insert(a.label).second)
            throw InputError("arrow labels must be non-empty and unique ('" + a.label + "')");
        if (a.label.find_first_of(".*+-/ ") != std::string::npos)
            throw InputError("arrow label '" + a.label + "' contains a reserved character");
        if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
            throw InputError("arrow '" + a.label + "' has an undeclared endpoint");
    }
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(Field field, std::vector<std::string> vertices, std::vector<BasisElement> basis,
                 std::vector<std::uint32_t> idempotents, StructureConstants mult)
    : field_(field), vertices_(std::move(vertices)), basis_(std::move(basis)),
      idempotents_(std::move(idempotents)), mult_(std::move(mult))
{
    const std::size_t n = basis_.size();
    if (idempotents_.size() != vertices_.size())
        throw InputError("need exactly one idempotent per vertex");
    if (mult_.size() != n)
        throw InputError("structure constant table has wrong size");
    for (const auto& row : mult_)
        if (row.size() != n)
            throw InputError("structure constant table has wrong size");
    idempotent_vertex_.assign(n, -1);
    for (std::size_t v = 0; v < idempotents_.size(); ++v) {
        if (idempotents_[v] >= n)
            throw InputError("idempotent index out of range");
        if (idempotent_vertex_[idempotents_[v]] >= 0)
            throw InputError("idempotents must be distinct basis elements");
        idempotent_vertex_[idempotents_[v]] = static_cast<int>(v);
    }
    for (std::size_t b = 0; b < n; ++b) {
        const auto& be = basis_[b];
        if (be.source < 0 || be.target < 0 || be.source >= static_cast<int>(vertices_.size()) ||
            be.target >= static_cast<int>(vertices_.size()))
            throw InputError("basis element '" + be.label + "' has an invalid corner");
        if (!label_index_.emplace(be.label, b).second)
            throw InputError("duplicate basis label '" + be.label + "'");
    }
    // normalise the structure constants: sorted, merged, nonzero
    for (auto& row : mult_)
        for (auto& cell : row) {
            Elem e;
            for (const auto& t : cell) {
                if (t.first >= n)
                    throw InputError("structure constant refers to an unknown basis element");
                if (t.second.field() != field_)
                    throw InputError("structure constant over the wrong field");
                e.add_term(t.first, t.second);
            }
            cell = e.terms();
        }
    index_corners();
    validate();
}

void Algebra::index_corners()
{
    const std::size_t r = vertices_.size();
    corners_.assign(r, std::vector<std::vector<std::uint32_t>>(r));
    rows_.assign(r, {});
    corner_pos_.assign(basis_.size(), 0);
    row_pos_.assign(basis_.size(), 0);
    for (std::uint32_t b = 0; b < basis_.size(); ++b) {
        auto s = static_cast<std::size_t>(basis_[b].source);
        auto t = static_cast<std::size_t>(basis_[b].target);
        corner_pos_[b] = corners_[s][t].size();
        corners_[s][t].push_back(b);
        row_pos_[b] = rows_[s].size();
        rows_[s].push_back(b);
    }
}

void Algebra::validate() const
{
    const std::size_t n = basis_.size();
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        const auto& be = basis_[idempotents_[v]];
        if (be.source != static_cast<int>(v) || be.target != static_cast<int>(v))
            throw InputError("idempotent e_" + vertices_[v] + " must lie in its own corner");
    }
    // unit and homogeneity: e_s b = b = b e_t and products respect corners
    for (std::size_t b = 0; b < n; ++b) {
        const auto& be = basis_[b];
        Elem bb = basis_elem(b);
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            Elem left = Elem::from_terms(mult_[idempotents_[v]][b]);
            Elem right = Elem::from_terms(mult_[b][idempotents_[v]]);
            if (left != (static_cast<int>(v) == be.source ? bb : Elem()))
                throw InputError("idempotents do not act as the unit on '" + be.label + "'");
            if (right != (static_cast<int>(v) == be.target ? bb : Elem()))
                throw InputError("idempotents do not act as the unit on '" + be.label + "'");
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto& cell = mult_[a][b];
            if (cell.empty())
                continue;
            if (basis_[a].target != basis_[b].source)
                throw InputError("product '" + basis_[a].label + "*" + basis_[b].label +
                                 "' must vanish (corners do not compose)");
            for (const auto& t : cell) {
                const auto& c = basis_[t.first];
                if (c.source != basis_[a].source || c.target != basis_[b].target)
                    throw InputError("product '" + basis_[a].label + "*" + basis_[b].label +
                                     "' leaves its corner");
                if (!is_idempotent(a) && !is_idempotent(b) && is_idempotent(t.first))
                    throw InputError("radical is not an ideal: '" + basis_[a].label + "*" +
                                     basis_[b].label + "' has an idempotent term");
            }
        }
    // associativity on composable triples
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (basis_[a].target != basis_[b].source)
                continue;
            Elem ab = Elem::from_terms(mult_[a][b]);
            for (std::size_t c = 0; c < n; ++c) {
                if (basis_[b].target != basis_[c].source)
                    continue;
                Elem bc = Elem::from_terms(mult_[b][c]);
                if (multiply(ab, basis_elem(c)) != multiply(basis_elem(a), bc))
                    throw InputError("multiplication is not associative on (" + basis_[a].label + ", " +
                                     basis_[b].label + ", " + basis_[c].label + ")");
            }
        }
    if (loewy_length() > n + 1)
        throw InputError("radical is not nilpotent");
}

const std::vector<std::uint32_t>& Algebra::corner(int from, int to) const
{
    return corners_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
}

std::vector<std::uint32_t> Algebra::radical_basis() const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t b = 0; b < basis_.size(); ++b)
        if (!is_idempotent(b))
            out.push_back(b);
    return out;
}

Elem Algebra::multiply(const Elem& x, const Elem& y) const
{
    Elem out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            const auto& cell = mult_[a][b];
            if (cell.empty())
                continue;
            Scalar c = ca * cb;
            for (const auto& [k, ck] : cell)
                out.add_term(k, c * ck);
        }
    return out;
}

std::size_t Algebra::basis_index(const std::string& label) const
{
    auto it = label_index_.find(label);
    if (it == label_index_.end())
        throw InputError("unknown basis element '" + label + "'");
    return it->second;
}

std::string Algebra::format(const Elem& x) const
{
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : x.terms()) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg)
            cs.erase(0, 1);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (cs != "1")
            out += cs + "*";
        out += basis_[b].label;
        first = false;
    }
    return out;
}

Elem Algebra::parse(const std::string& text) const
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw InputError("empty algebra element");
    // split into signed terms
    std::vector<std::pair<bool, std::string>> terms;
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    std::string cur;
    for (; pos <= s.size(); ++pos) {
        if (pos == s.size() || s[pos] == '+' || s[pos] == '-') {
            if (cur.empty())
                throw InputError("malformed algebra element '" + text + "'");
            terms.emplace_back(neg, cur);
            cur.clear();
            if (pos < s.size())
                neg = s[pos] == '-';
        } else {
            cur += s[pos];
        }
    }
    Elem out;
    for (const auto& [negative, term] : terms) {
        std::string coeff = "1", label = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = term.substr(0, star);
            label = term.substr(star + 1);
        }
        Scalar c = field_.parse(coeff);
        if (negative)
            c = -c;
        if (label == "0")
            continue;
        if (std::all_of(label.begin(), label.end(),
                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '/'; }) &&
            star == std::string::npos) {
            if (field_.parse(label).is_zero())
                continue;
            throw InputError("bare scalar '" + label + "' is not an algebra element (use e<vertex>)");
        }
        Elem value;
        auto it = label_index_.find(label);
        if (it != label_index_.end()) {
            value = basis_elem(it->second);
        } else {
            // a product of basis labels joined by '.', possibly zero by a relation
            std::stringstream ss(label);
            std::string piece;
            bool started = false;
            while (std::getline(ss, piece, '.')) {
                Elem f = basis_elem(basis_index(piece));
                value = started ? multiply(value, f) : f;
                started = true;
            }
            if (!started)
                throw InputError("malformed algebra element '" + text + "'");
        }
        out += value.scaled(c);
    }
    return out;
}

std::shared_ptr<const Algebra> Algebra::opposite() const
{
    std::vector<BasisElement> basis = basis_;
    for (auto& b : basis)
        std::swap(b.source, b.target);
    StructureConstants mult(basis_.size(), std::vector<std::vector<Elem::Term>>(basis_.size()));
    for (std::size_t a = 0; a < basis_.size(); ++a)
        for (std::size_t b = 0; b < basis_.size(); ++b)
            mult[a][b] = mult_[b][a];
    return std::make_shared<Algebra>(field_, vertices_, std::move(basis), idempotents_, std::move(mult));
}

std::size_t Algebra::loewy_length() const
{
    const std::size_t n = basis_.size();
    auto rad = radical_basis();
    std::vector<Elem> layer;
    for (auto b : rad)
        layer.push_back(basis_elem(b));
    std::size_t k = 0;
    while (true) {
        Subspace span(field_, n);
        std::vector<Elem> kept;
        for (const auto& x : layer) {
            Vec v = zero_vec(field_, n);
            for (const auto& [i, c] : x.terms())
                v[i] = c;
            if (span.add(v))
                kept.push_back(x);
        }
        if (kept.empty())
            return k + 1;
        ++k;
        if (k > n + 1)
            return k;
        std::vector<Elem> next;
        for (const auto& x : kept)
            for (auto b : rad) {
                Elem y = multiply(x, basis_elem(b));
                if (!y.is_zero())
                    next.push_back(std::move(y));
            }
        layer = std::move(next);
    }
}

// ---------------------------------------------------------------- builders

AlgebraPtr build_path_algebra(const Field& field, const Quiver& q, const std::vector<Path>& relations,
                              std::size_t path_cap)
{
    q.validate();
    const int na = static_cast<int>(q.arrows.size());
    for (const auto& r : relations) {
        if (r.size() < 2)
            throw InputError("relations must be paths of length at least 2");
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (r[k] < 0 || r[k] >= na)
                throw InputError("relation refers to an unknown arrow");
            if (k + 1 < r.size() &&
                q.arrows[static_cast<std::size_t>(r[k])].target != q.arrows[static_cast<std::size_t>(r[k + 1])].source)
                throw InputError("relation is not a path (arrows do not compose left to right)");
        }
    }
    auto has_relation_suffix = [&](const Path& p) {
        for (const auto& r : relations)
            if (r.size() <= p.size() && std::equal(r.begin(), r.end(), p.end() - static_cast<std::ptrdiff_t>(r.size())))
                return true;
        return false;
    };

    const std::size_t nv = q.vertices.size();
    std::vector<Path> paths;
    std::vector<BasisElement> basis;
    std::vector<std::uint32_t> idem;
    for (std::size_t v = 0; v < nv; ++v) {
        idem.push_back(static_cast<std::uint32_t>(basis.size()));
        basis.push_back({"e" + q.vertices[v], static_cast<int>(v), static_cast<int>(v)});
        paths.push_back({});
    }
    std::deque<std::size_t> frontier;
    for (int a = 0; a < na; ++a) {
        const auto& arr = q.arrows[static_cast<std::size_t>(a)];
        frontier.push_back(basis.size());
        basis.push_back({arr.label, arr.source, arr.target});
        paths.push_back({a});
    }
    if (basis.size() > path_cap)
        throw BoundExceeded("path algebra exceeds the path cap of " + std::to_string(path_cap));
    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        for (int a = 0; a < na; ++a) {
            const auto& arr = q.arrows[static_cast<std::size_t>(a)];
            if (arr.source != basis[cur].target)
                continue;
            Path p = paths[cur];
            p.push_back(a);
            if (has_relation_suffix(p))
                continue;
            frontier.push_back(basis.size());
            basis.push_back({basis[cur].label + "." + arr.label, basis[cur].source, arr.target});
            paths.push_back(std::move(p));
            if (basis.size() > path_cap)
                throw BoundExceeded("path algebra exceeds the path cap of " + std::to_string(path_cap) +
                                    " (infinite-dimensional?)");
        }
    }

    std::map<Path, std::uint32_t> index;
    for (std::uint32_t b = static_cast<std::uint32_t>(nv); b < basis.size(); ++b)
        index.emplace(paths[b], b);
    const std::size_t n = basis.size();
    Algebra::StructureConstants mult(n, std::vector<std::vector<Elem::Term>>(n));
    const Scalar one = field.one();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            if (basis[a].target != basis[b].source)
                continue;
            if (a < nv) {
                mult[a][b].emplace_back(b, one);
            } else if (b < nv) {
                mult[a][b].emplace_back(a, one);
            } else {
                Path p = paths[a];
                p.insert(p.end(), paths[b].begin(), paths[b].end());
                auto it = index.find(p);
                if (it != index.end())
                    mult[a][b].emplace_back(it->second, one);
            }
        }
    auto alg = std::make_shared<Algebra>(field, q.vertices, std::move(basis), std::move(idem), std::move(mult));
    alg->set_paths(std::move(paths));
    return alg;
}

std::vector<int> normalize_idempotent(const Algebra& a, std::vector<int> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (v < 0 || v >= static_cast<int>(a.num_vertices()))
            throw InputError("idempotent refers to an unknown vertex");
    return vertices;
}

CornerAlgebra corner_algebra(const AlgebraPtr& a, const std::vector<int>& e_in)
{
    auto e = normalize_idempotent(*a, e_in);
    std::vector<int> new_vertex(a->num_vertices(), -1);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < e.size(); ++k) {
        new_vertex[static_cast<std::size_t>(e[k])] = static_cast<int>(k);
        labels.push_back(a->vertex_labels()[static_cast<std::size_t>(e[k])]);
    }
    CornerAlgebra out;
    out.vertex_map = e;
    std::vector<int> new_index(a->dim(), -1);
    std::vector<BasisElement> basis;
    for (std::uint32_t b = 0; b < a->dim(); ++b) {
        const auto& be = a->basis(b);
        int s = new_vertex[static_cast<std::size_t>(be.source)];
        int t = new_vertex[static_cast<std::size_t>(be.target)];
        if (s < 0 || t < 0)
            continue;
        new_index[b] = static_cast<int>(basis.size());
        basis.push_back({be.label, s, t});
        out.embedding.push_back(b);
    }
    const std::size_t n = basis.size();
    Algebra::StructureConstants mult(n, std::vector<std::vector<Elem::Term>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (const auto& [k, c] : a->product(out.embedding[x], out.embedding[y]))
                mult[x][y].emplace_back(static_cast<std::uint32_t>(new_index[k]), c);
    std::vector<std::uint32_t> idem;
    for (int v : e)
        idem.push_back(static_cast<std::uint32_t>(new_index[a->idempotent(v)]));
    out.algebra = std::make_shared<Algebra>(a->field(), std::move(labels), std::move(basis), std::move(idem),
                                            std::move(mult));
    return out;
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const std::vector<int>& e_in)
{
    auto e = normalize_idempotent(*a, e_in);
    const std::size_t n = a->dim();
    const Field& f = a->field();
    std::vector<bool> in_e(a->num_vertices(), false);
    for (int v : e)
        in_e[static_cast<std::size_t>(v)] = true;

    // AeA is spanned by the products x*y with x ending and y starting in e
    Subspace ideal(f, n);
    for (std::uint32_t x = 0; x < n; ++x) {
        if (!in_e[static_cast<std::size_t>(a->basis(x).target)])
            continue;
        for (std::uint32_t y = 0; y < n; ++y) {
            if (a->basis(y).source != a->basis(x).target)
                continue;
            Vec v = zero_vec(f, n);
            for (const auto& [k, c] : a->product(x, y))
                v[k] = c;
            ideal.add(v);
        }
    }
    Subspace total = ideal;
    std::vector<std::uint32_t> complement;
    for (std::uint32_t b = 0; b < n; ++b) {
        Vec u = zero_vec(f, n);
        u[b] = f.one();
        if (total.add(u))
            complement.push_back(b);
    }
    // columns: ideal basis then complement units; invert to read off coordinates
    std::vector<Vec> cols = ideal.basis();
    for (auto b : complement) {
        Vec u = zero_vec(f, n);
        u[b] = f.one();
        cols.push_back(u);
    }
    Mat m = Mat::from_columns(f, cols, n);
    auto inv = inverse(m);
    if (!inv)
        throw std::logic_error("quotient_algebra: complement is not a complement");

    QuotientAlgebra out;
    std::vector<int> new_vertex(a->num_vertices(), -1);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < a->num_vertices(); ++v)
        if (!in_e[v]) {
            new_vertex[v] = static_cast<int>(out.vertex_map.size());
            out.vertex_map.push_back(static_cast<int>(v));
            labels.push_back(a->vertex_labels()[v]);
        }
    const std::size_t id = ideal.dim();
    out.lift = complement;
    out.projection.resize(n);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < complement.size(); ++k) {
            const Scalar& c = (*inv)(id + k, b);
            if (!c.is_zero())
                out.projection[b].add_term(static_cast<std::uint32_t>(k), c);
        }
    std::vector<BasisElement> basis;
    for (auto b : complement) {
        const auto& be = a->basis(b);
        int s = new_vertex[static_cast<std::size_t>(be.source)];
        int t = new_vertex[static_cast<std::size_t>(be.target)];
        if (s < 0 || t < 0)
            throw std::logic_error("quotient_algebra: complement element touches e");
        basis.push_back({be.label, s, t});
    }
    const std::size_t qn = complement.size();
    Algebra::StructureConstants mult(qn, std::vector<std::vector<Elem::Term>>(qn));
    for (std::size_t x = 0; x < qn; ++x)
        for (std::size_t y = 0; y < qn; ++y) {
            Elem p;
            for (const auto& [k, c] : a->product(complement[x], complement[y]))
                p += out.projection[k].scaled(c);
            mult[x][y] = p.terms();
        }
    std::vector<std::uint32_t> idem;
    for (int v : out.vertex_map) {
        const auto& proj = out.projection[a->idempotent(v)];
        if (proj.terms().size() != 1 || !proj.terms()[0].second.is_one())
            throw std::logic_error("quotient_algebra: idempotent does not survive");
        idem.push_back(proj.terms()[0].first);
    }
    out.algebra = std::make_shared<Algebra>(f, std::move(labels), std::move(basis), std::move(idem), std::move(mult));
    return out;
}

Elem embed(const CornerAlgebra& c, const Elem& x)
{
    Elem out;
    for (const auto& [b, s] : x.terms())
        out.add_term(c.embedding[b], s);
    return out;
}

} // namespace smckit
