#include <chromgh/error.hpp>
#include <chromgh/persistence.hpp>

#include <algorithm>
#include <map>

namespace chromgh {

namespace {

using Column = std::vector<std::size_t>;  // sorted row keys
constexpr long kNone = -1;

void add_into(Column& target, const Column& source) {
    Column out;
    out.reserve(target.size() + source.size());
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(), std::back_inserter(out));
    target = std::move(out);
}

struct Reduction {
    std::vector<Column> r;
    std::vector<Column> v;          // filled only when requested
    std::vector<long> column_of;    // row key -> column whose low it is
};

// Standard left-to-right column reduction.
Reduction reduce(std::vector<Column> columns, std::size_t num_keys, bool track_v) {
    Reduction red;
    red.column_of.assign(num_keys, kNone);
    if (track_v) {
        red.v.resize(columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) red.v[j] = {j};
    }
    for (std::size_t j = 0; j < columns.size(); ++j) {
        Column& col = columns[j];
        while (!col.empty() && red.column_of[col.back()] != kNone) {
            const auto k = static_cast<std::size_t>(red.column_of[col.back()]);
            add_into(col, columns[k]);
            if (track_v) add_into(red.v[j], red.v[k]);
        }
        if (!col.empty()) red.column_of[col.back()] = static_cast<long>(j);
    }
    red.r = std::move(columns);
    return red;
}

// Codomain filtration with the domain marked inside it.
struct Pair {
    const Filtration& k;
    std::vector<Column> boundary;   // faces as K indices
    std::vector<bool> in_l;
    std::vector<std::size_t> l_pos;  // K index -> position among domain simplices
    std::vector<std::size_t> l_index;  // position -> K index

    Pair(const Filtration& domain, const Filtration& codomain) : k(codomain) {
        std::map<std::vector<Index>, std::size_t> where;
        for (std::size_t j = 0; j < k.simplices.size(); ++j) where.emplace(k.simplices[j].vertices, j);
        boundary.resize(k.simplices.size());
        for (std::size_t j = 0; j < k.simplices.size(); ++j) {
            const auto& verts = k.simplices[j].vertices;
            if (verts.size() < 2) continue;
            for (std::size_t drop = 0; drop < verts.size(); ++drop) {
                std::vector<Index> face;
                for (std::size_t q = 0; q < verts.size(); ++q)
                    if (q != drop) face.push_back(verts[q]);
                boundary[j].push_back(where.at(face));
            }
            std::sort(boundary[j].begin(), boundary[j].end());
        }
        in_l.assign(k.simplices.size(), false);
        l_pos.assign(k.simplices.size(), 0);
        for (const auto& s : domain.simplices) {
            auto it = where.find(s.vertices);
            if (it == where.end() || k.simplices[it->second].value != s.value)
                throw Error(ErrorCode::NotASubcomplex, "domain filtration is not contained in the codomain");
            in_l[it->second] = true;
        }
        for (std::size_t j = 0; j < k.simplices.size(); ++j)
            if (in_l[j]) {
                l_pos[j] = l_index.size();
                l_index.push_back(j);
            }
    }

    int dim(std::size_t j) const { return k.simplices[j].dim(); }
    double value(std::size_t j) const { return k.simplices[j].value; }
};

PersistenceDiagram make_diagram(int p, const Pair& pr, const std::vector<std::size_t>& births,
                                const std::map<std::size_t, std::size_t>& death_of) {
    PersistenceDiagram d;
    d.degree = p;
    for (std::size_t b : births) {
        auto it = death_of.find(b);
        const double birth = pr.value(b);
        if (it == death_of.end()) {
            d.points.push_back({birth, std::numeric_limits<double>::infinity()});
        } else if (pr.value(it->second) > birth) {
            d.points.push_back({birth, pr.value(it->second)});
        }
    }
    std::sort(d.points.begin(), d.points.end());
    return d;
}

void require_dim(const Filtration& f, int p) {
    if (p < 0 || f.max_dim < p + 1)
        throw Error(ErrorCode::InsufficientDimension,
                    "degree " + std::to_string(p) + " needs simplices up to dimension " + std::to_string(p + 1));
}

}  // namespace

std::size_t PersistenceDiagram::count_alive(double s, double t) const {
    return static_cast<std::size_t>(
        std::count_if(points.begin(), points.end(), [&](const DiagramPoint& q) { return q.birth <= s && q.death > t; }));
}

const char* to_string(ModuleKind kind) {
    switch (kind) {
        case ModuleKind::Dom: return "dom";
        case ModuleKind::Cod: return "cod";
        case ModuleKind::Img: return "img";
        case ModuleKind::Ker: return "ker";
        case ModuleKind::Cok: return "cok";
        case ModuleKind::Rel: return "rel";
    }
    return "?";
}

const PersistenceDiagram& SixPack::operator[](ModuleKind kind) const {
    switch (kind) {
        case ModuleKind::Dom: return dom;
        case ModuleKind::Cod: return cod;
        case ModuleKind::Img: return img;
        case ModuleKind::Ker: return ker;
        case ModuleKind::Cok: return cok;
        case ModuleKind::Rel: return rel;
    }
    return dom;
}

SixPack sixpack(const Filtration& domain, const Filtration& codomain, int p) {
    require_dim(domain, p);
    require_dim(codomain, p);
    const Pair pr(domain, codomain);
    const std::size_t n = codomain.simplices.size();
    const std::size_t nl = pr.l_index.size();
    SixPack out;

    // Codomain: plain reduction.
    const Reduction cod = reduce(pr.boundary, n, false);
    std::vector<std::size_t> cod_births;
    std::map<std::size_t, std::size_t> cod_death;
    for (std::size_t j = 0; j < n; ++j) {
        if (pr.dim(j) == p && cod.r[j].empty()) cod_births.push_back(j);
        if (pr.dim(j) == p + 1 && !cod.r[j].empty()) cod_death.emplace(cod.r[j].back(), j);
    }
    out.cod = make_diagram(p, pr, cod_births, cod_death);

    // Domain: reduction inside the domain, keeping cycle representatives.
    std::vector<Column> l_cols(nl);
    for (std::size_t q = 0; q < nl; ++q)
        for (std::size_t face : pr.boundary[pr.l_index[q]]) l_cols[q].push_back(pr.l_pos[face]);
    const Reduction dom = reduce(l_cols, nl, true);
    std::vector<std::size_t> dom_births;
    std::map<std::size_t, std::size_t> dom_death;
    for (std::size_t q = 0; q < nl; ++q) {
        const std::size_t j = pr.l_index[q];
        if (pr.dim(j) == p && dom.r[q].empty()) dom_births.push_back(j);
        if (pr.dim(j) == p + 1 && !dom.r[q].empty()) dom_death.emplace(pr.l_index[dom.r[q].back()], j);
    }
    out.dom = make_diagram(p, pr, dom_births, dom_death);

    // Image: rows reordered with domain simplices first, so a column whose
    // low lands in the domain block is a boundary supported in the domain.
    std::vector<std::size_t> key(n);
    for (std::size_t j = 0, outside = 0; j < n; ++j) key[j] = pr.in_l[j] ? pr.l_pos[j] : nl + outside++;
    std::vector<Column> im_cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t face : pr.boundary[j]) im_cols[j].push_back(key[face]);
        std::sort(im_cols[j].begin(), im_cols[j].end());
    }
    const Reduction im = reduce(im_cols, n, false);
    std::map<std::size_t, std::size_t> img_death;
    std::vector<std::size_t> kernel_gens;
    for (std::size_t j = 0; j < n; ++j) {
        if (pr.dim(j) != p + 1 || im.r[j].empty() || im.r[j].back() >= nl) continue;
        img_death.emplace(pr.l_index[im.r[j].back()], j);
        kernel_gens.push_back(j);
    }
    out.img = make_diagram(p, pr, dom_births, img_death);

    // Kernel: domain boundaries written in the basis of those reduced columns.
    // Coordinates are indexed by the column (birth time) of each generator.
    std::vector<Column> ker_cols;
    std::vector<std::size_t> ker_col_simplex;
    for (std::size_t q = 0; q < nl; ++q) {
        const std::size_t j = pr.l_index[q];
        if (pr.dim(j) != p + 1) continue;
        Column v = im_cols[j];
        Column coords;
        while (!v.empty()) {
            const long g = im.column_of[v.back()];
            add_into(v, im.r[static_cast<std::size_t>(g)]);
            coords.push_back(static_cast<std::size_t>(g));
        }
        // Lows strictly decrease along the elimination, so no generator repeats.
        std::sort(coords.begin(), coords.end());
        ker_cols.push_back(std::move(coords));
        ker_col_simplex.push_back(j);
    }
    const Reduction ker = reduce(ker_cols, n, false);
    std::map<std::size_t, std::size_t> ker_death;
    for (std::size_t c = 0; c < ker_cols.size(); ++c)
        if (!ker.r[c].empty()) ker_death.emplace(ker.r[c].back(), ker_col_simplex[c]);
    out.ker = make_diagram(p, pr, kernel_gens, ker_death);

    // Cokernel: boundaries of the codomain plus cycles of the domain.
    std::vector<Column> cok_cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (pr.dim(j) == p + 1) {
            cok_cols[j] = pr.boundary[j];
        } else if (pr.dim(j) == p && pr.in_l[j] && dom.r[pr.l_pos[j]].empty()) {
            for (std::size_t q : dom.v[pr.l_pos[j]]) cok_cols[j].push_back(pr.l_index[q]);
            std::sort(cok_cols[j].begin(), cok_cols[j].end());
        }
    }
    const Reduction cok = reduce(cok_cols, n, false);
    std::map<std::size_t, std::size_t> cok_death;
    for (std::size_t j = 0; j < n; ++j)
        if (!cok.r[j].empty()) cok_death.emplace(cok.r[j].back(), j);
    out.cok = make_diagram(p, pr, cod_births, cok_death);

    // Relative: quotient complex, boundary taken modulo the domain.
    std::vector<Column> rel_cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (pr.in_l[j]) continue;
        for (std::size_t face : pr.boundary[j])
            if (!pr.in_l[face]) rel_cols[j].push_back(face);
    }
    const Reduction rel = reduce(rel_cols, n, false);
    std::vector<std::size_t> rel_births;
    std::map<std::size_t, std::size_t> rel_death;
    for (std::size_t j = 0; j < n; ++j) {
        if (pr.in_l[j]) continue;
        if (pr.dim(j) == p && rel.r[j].empty()) rel_births.push_back(j);
        if (pr.dim(j) == p + 1 && !rel.r[j].empty()) rel_death.emplace(rel.r[j].back(), j);
    }
    out.rel = make_diagram(p, pr, rel_births, rel_death);

    out.dom.degree = out.cod.degree = out.img.degree = out.ker.degree = out.cok.degree = out.rel.degree = p;
    return out;
}

SixPack sixpack(const ChromaticPair& pair, const ComplexSpec& lambda, const ComplexSpec& gamma, int p,
                std::size_t cap) {
    if (!lambda.is_subcomplex_of(gamma)) throw Error(ErrorCode::NotASubcomplex, "lambda is not a subcomplex of gamma");
    const Filtration k = chromatic_filtration(pair, gamma, p + 1, cap);
    const Filtration l = chromatic_filtration(pair, lambda, p + 1, cap);
    return sixpack(l, k, p);
}

PersistenceDiagram dgm(const Filtration& filtration, int p) { return sixpack(filtration, filtration, p).cod; }

}  // namespace chromgh
