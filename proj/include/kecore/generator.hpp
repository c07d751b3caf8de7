#ifndef KECORE_GENERATOR_HPP
#define KECORE_GENERATOR_HPP

#include <cstdint>
#include <string>

#include "kecore/graph.hpp"

namespace kecore {

/// splitmix64: 64-bit state, cross-platform identical streams per seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) using the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

enum class GenFlavor { Ke, BipartiteKe, PerfectMatchingKe };

const char* to_string(GenFlavor f);
GenFlavor gen_flavor_from_string(const std::string& s);

/// Recipe for a KE graph with prescribed matching number.
///
/// Construction: S = {0 .. n-mu-1} stays independent, D = {n-mu .. n-1};
/// edge (n-mu+i, i) is mandatory for i < mu; every other candidate edge
/// inside D or between D and S is included independently with probability
/// extra_edge_prob. Every edge meets D, so D is a vertex cover of size mu
/// and the mandatory edges saturate it: mu(G) = mu and alpha(G) = n - mu,
/// hence the output is KE by construction. The bipartite flavor skips
/// D-internal candidates; the perfect-matching flavor requires 2*mu = n.
struct GenSpec {
    int n = 0;
    int mu = 0;
    double extra_edge_prob = 0.0;
    std::uint64_t seed = 0;
    GenFlavor flavor = GenFlavor::Ke;

    /// Throws std::invalid_argument when out of range (2*mu <= n required).
    void validate() const;
};

/// Deterministic: candidates are enumerated in a fixed canonical order
/// (D-internal pairs lexicographically, then D-to-S pairs lexicographically)
/// with one probability draw each, so a spec maps to one edge list.
Graph gen_ke(const GenSpec& spec);

/// gen_ke rendered in the edge-list format with a comment header
/// recording the generation parameters.
std::string gen_edge_list(const GenSpec& spec);

} // namespace kecore

#endif
