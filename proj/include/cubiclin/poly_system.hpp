#ifndef CUBICLIN_POLY_SYSTEM_HPP
#define CUBICLIN_POLY_SYSTEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "multipoly.hpp"

namespace cubiclin {

/// Which part of the defining equations a generator encodes.
struct Provenance {
    enum class Kind { KellerCoefficient, PencilCoefficient, CubicRow, Auxiliary };
    Kind kind = Kind::Auxiliary;
    int s_degree = 0;  // PencilCoefficient
    int t_degree = 0;  // PencilCoefficient
    int row = 0;       // CubicRow

    static Provenance cubic_row(int i) { return {Kind::CubicRow, 0, 0, i}; }
    static Provenance pencil(int sd, int td) { return {Kind::PencilCoefficient, sd, td, 0}; }
    static Provenance keller() { return {Kind::KellerCoefficient, 0, 0, 0}; }
    static Provenance aux() { return {Kind::Auxiliary, 0, 0, 0}; }

    std::string to_string() const {
        switch (kind) {
            case Kind::KellerCoefficient: return "keller";
            case Kind::PencilCoefficient:
                return "pencil(s^" + std::to_string(s_degree) + ",t^" +
                       std::to_string(t_degree) + ")";
            case Kind::CubicRow: return "row(" + std::to_string(row) + ")";
            case Kind::Auxiliary: return "aux";
        }
        return "?";
    }

    bool operator==(const Provenance&) const = default;
};

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Ordered generator list with provenance; the unit the Groebner engine runs on.
class PolySystem {
public:
    PolySystem() = default;
    explicit PolySystem(UniversePtr u) : universe_(std::move(u)) {}

    const UniversePtr& universe() const { return universe_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }
    const std::vector<Provenance>& provenance() const { return prov_; }
    size_t size() const { return gens_.size(); }

    /// Zero polynomials are silently dropped (empty equations carry nothing).
    void push(MultiPoly p, Provenance prov) {
        if (p.is_zero()) return;
        if (!same_universe(p.universe(), universe_))
            throw structural_error("generator universe mismatch");
        gens_.push_back(std::move(p));
        prov_.push_back(prov);
    }

    uint64_t hash() const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (auto& n : universe_->names()) h = fnv1a64(n + ";", h);
        for (size_t i = 0; i < gens_.size(); ++i)
            h = fnv1a64(prov_[i].to_string() + ":" + gens_[i].to_string() + "\n", h);
        return h;
    }

private:
    UniversePtr universe_;
    std::vector<MultiPoly> gens_;
    std::vector<Provenance> prov_;
};

/// Z_k = (1,...,1,0,...,0) with k leading ones; Z_k^3 = Z_k componentwise.
struct ZkVector {
    size_t n, k;
    ZkVector(size_t n_, size_t k_) : n(n_), k(k_) {
        if (k_ < 1 || k_ > n_) throw std::invalid_argument("ZkVector requires 1 <= k <= n");
    }
    GaussianRational at(size_t i) const {
        return GaussianRational(i < k ? 1 : 0);
    }
    std::vector<GaussianRational> to_vector() const {
        std::vector<GaussianRational> v(n);
        for (size_t i = 0; i < k; ++i) v[i] = GaussianRational(1);
        return v;
    }
};

}  // namespace cubiclin

#endif
