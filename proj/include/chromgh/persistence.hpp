#pragma once

#include <chromgh/cech.hpp>
#include <chromgh/metric.hpp>

#include <limits>
#include <vector>

namespace chromgh {

struct DiagramPoint {
    double birth = 0.0;
    double death = std::numeric_limits<double>::infinity();

    bool is_essential() const { return death == std::numeric_limits<double>::infinity(); }
    auto operator<=>(const DiagramPoint&) const = default;
};

struct PersistenceDiagram {
    int degree = 0;
    std::vector<DiagramPoint> points;  // sorted

    // Points with birth <= s and death > t.
    std::size_t count_alive(double s, double t) const;
    bool operator==(const PersistenceDiagram&) const = default;
};

PersistenceDiagram dgm(const Filtration& filtration, int p);

enum class ModuleKind { Dom, Cod, Img, Ker, Cok, Rel };

inline constexpr ModuleKind kAllKinds[] = {ModuleKind::Dom, ModuleKind::Cod, ModuleKind::Img,
                                           ModuleKind::Ker, ModuleKind::Cok, ModuleKind::Rel};

const char* to_string(ModuleKind kind);

struct SixPack {
    PersistenceDiagram dom, cod, img, ker, cok, rel;

    const PersistenceDiagram& operator[](ModuleKind kind) const;
};

// Six diagrams of the inclusion of a filtration into a larger one at degree p.
SixPack sixpack(const Filtration& domain, const Filtration& codomain, int p);
SixPack sixpack(const ChromaticPair& pair, const ComplexSpec& lambda, const ComplexSpec& gamma, int p,
                std::size_t cap = kDefaultSimplexCap);

// Rank of the structure map from s to t of the chosen module, computed by
// plain linear algebra on the complexes at s and t. Dom and Cod read the
// domain and codomain filtrations respectively.
int rank_oracle(const Filtration& domain, const Filtration& codomain, int p, double s, double t, ModuleKind kind);
int rank_oracle(const Filtration& filtration, int p, double s, double t);

double bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

}  // namespace chromgh
