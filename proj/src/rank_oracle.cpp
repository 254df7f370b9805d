#include <chromgh/error.hpp>
#include <chromgh/f2.hpp>
#include <chromgh/persistence.hpp>

#include <map>

namespace chromgh {

namespace {

using f2::BitVector;
using f2::Subspace;

// Chain spaces of the codomain in degrees p-1, p and p+1, with the domain
// marked; every subspace below lives in C_p of the whole codomain.
class ChainModel {
public:
    ChainModel(const Filtration& domain, const Filtration& codomain, int p) : k_(codomain), p_(p) {
        std::map<std::vector<Index>, std::size_t> where;
        for (std::size_t j = 0; j < k_.simplices.size(); ++j) {
            const auto& s = k_.simplices[j];
            where.emplace(s.vertices, j);
            const int dim = s.dim();
            if (dim == p - 1) pos_lower_.emplace(j, pos_lower_.size());
            if (dim == p) pos_.emplace(j, pos_.size());
        }
        in_domain_.assign(k_.simplices.size(), false);
        for (const auto& s : domain.simplices) {
            auto it = where.find(s.vertices);
            if (it == where.end()) throw Error(ErrorCode::NotASubcomplex, "domain is not inside the codomain");
            in_domain_[it->second] = true;
        }
        faces_.resize(k_.simplices.size());
        for (std::size_t j = 0; j < k_.simplices.size(); ++j) {
            const auto& v = k_.simplices[j].vertices;
            if (v.size() < 2) continue;
            for (std::size_t drop = 0; drop < v.size(); ++drop) {
                std::vector<Index> face;
                for (std::size_t q = 0; q < v.size(); ++q)
                    if (q != drop) face.push_back(v[q]);
                faces_[j].push_back(where.at(face));
            }
        }
    }

    // Cycles of degree p supported on the selected simplices; with `relative`
    // the boundary only needs to vanish outside the domain at time u.
    Subspace cycles(double u, bool domain_only, bool relative) const {
        std::vector<std::size_t> support;
        std::vector<BitVector> images;
        for (const auto& [j, pos] : pos_) {
            if (!alive(j, u, domain_only)) continue;
            BitVector b(pos_lower_.size());
            for (std::size_t face : faces_[j]) {
                if (relative && alive(face, u, true)) continue;
                b.flip(pos_lower_.at(face));
            }
            support.push_back(pos);
            images.push_back(std::move(b));
        }
        const Subspace null = f2::kernel(images, pos_lower_.size());
        Subspace out(pos_.size());
        for (const auto& coeffs : null.basis()) {
            BitVector chain(pos_.size());
            for (std::size_t i = 0; i < support.size(); ++i)
                if (coeffs.test(i)) chain.flip(support[i]);
            out.insert(std::move(chain));
        }
        return out;
    }

    Subspace boundaries(double u, bool domain_only) const {
        Subspace out(pos_.size());
        for (std::size_t j = 0; j < k_.simplices.size(); ++j) {
            if (k_.simplices[j].dim() != p_ + 1 || !alive(j, u, domain_only)) continue;
            BitVector b(pos_.size());
            for (std::size_t face : faces_[j]) b.flip(pos_.at(face));
            out.insert(std::move(b));
        }
        return out;
    }

    Subspace chains(double u, bool domain_only) const {
        Subspace out(pos_.size());
        for (const auto& [j, pos] : pos_) {
            if (!alive(j, u, domain_only)) continue;
            BitVector e(pos_.size());
            e.set(pos);
            out.insert(std::move(e));
        }
        return out;
    }

private:
    bool alive(std::size_t j, double u, bool domain_only) const {
        return k_.simplices[j].value <= u && (!domain_only || in_domain_[j]);
    }

    const Filtration& k_;
    int p_;
    std::map<std::size_t, std::size_t> pos_lower_;
    std::map<std::size_t, std::size_t> pos_;
    std::vector<bool> in_domain_;
    std::vector<std::vector<std::size_t>> faces_;
};

int dim_of(const Subspace& s) { return static_cast<int>(s.dim()); }

}  // namespace

int rank_oracle(const Filtration& domain, const Filtration& codomain, int p, double s, double t, ModuleKind kind) {
    if (p < 0 || domain.max_dim < p + 1 || codomain.max_dim < p + 1)
        throw Error(ErrorCode::InsufficientDimension, "rank oracle needs simplices up to dimension p+1");
    if (s > t) throw Error(ErrorCode::BadParams, "rank oracle needs s <= t");
    const ChainModel m(domain, codomain, p);
    constexpr bool kDomain = true, kWhole = false;

    switch (kind) {
        case ModuleKind::Dom: {
            const auto b = m.boundaries(t, kDomain);
            return dim_of(f2::sum(m.cycles(s, kDomain, false), b)) - dim_of(b);
        }
        case ModuleKind::Cod: {
            const auto b = m.boundaries(t, kWhole);
            return dim_of(f2::sum(m.cycles(s, kWhole, false), b)) - dim_of(b);
        }
        case ModuleKind::Img: {
            const auto b = m.boundaries(t, kWhole);
            return dim_of(f2::sum(m.cycles(s, kDomain, false), b)) - dim_of(b);
        }
        case ModuleKind::Ker: {
            const auto killed = f2::intersection(m.boundaries(s, kWhole), m.chains(s, kDomain));
            const auto b = m.boundaries(t, kDomain);
            return dim_of(f2::sum(killed, b)) - dim_of(b);
        }
        case ModuleKind::Cok: {
            const auto base = f2::sum(m.cycles(t, kDomain, false), m.boundaries(t, kWhole));
            return dim_of(f2::sum(m.cycles(s, kWhole, false), base)) - dim_of(base);
        }
        case ModuleKind::Rel: {
            const auto base = f2::sum(m.chains(t, kDomain), m.boundaries(t, kWhole));
            return dim_of(f2::sum(m.cycles(s, kWhole, true), base)) - dim_of(base);
        }
    }
    return 0;
}

int rank_oracle(const Filtration& filtration, int p, double s, double t) {
    return rank_oracle(filtration, filtration, p, s, t, ModuleKind::Cod);
}

}  // namespace chromgh
