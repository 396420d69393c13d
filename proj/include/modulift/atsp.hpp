#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modulift {

using Cost = std::int64_t;

// Directed instance with strictly positive arc costs. Vertices are
// 0-indexed internally; TSPLIB I/O converts to 1-indexed.
struct AtspInstance {
    std::string name;
    int n = 0;
    std::vector<Cost> costs;     // n*n row-major, diagonal unused
    std::vector<char> present;   // n*n arc mask, diagonal always 0

    Cost cost(int a, int b) const { return costs[static_cast<std::size_t>(a) * n + b]; }
    bool has_arc(int a, int b) const {
        return a != b && present[static_cast<std::size_t>(a) * n + b] != 0;
    }
    int num_arcs() const;

    // All ordered pairs (a,b), a != b, in row-major order.
    std::vector<std::pair<int, int>> arcs() const;

    void check_valid() const;  // throws on violated invariants
};

struct Tour {
    std::vector<int> order;  // cyclic visiting sequence, a permutation of 0..n-1

    int n() const { return static_cast<int>(order.size()); }
    // Successor map: succ[a] = city visited after a.
    std::vector<int> successor() const;
    bool is_permutation() const;
};

enum class OracleMethod { held_karp, brute_force };

struct OracleResult {
    Tour optimal_tour;
    Cost optimal_cost = 0;
    OracleMethod method = OracleMethod::held_karp;
};

// First violated degree/subtour constraint, if any.
struct TourValidation {
    enum class Kind { pass, out_degree, in_degree, subtour };
    Kind kind = Kind::pass;
    int vertex = -1;                // degree violations
    std::vector<int> witness_set;   // subtour violations: the set S
    bool ok() const { return kind == Kind::pass; }
};

struct OracleLimits {
    int held_karp_max = 14;
    int brute_force_max = 10;
};

AtspInstance parse_tsplib(const std::string& text);
std::string write_tsplib(const AtspInstance& inst);

AtspInstance random_instance(int n, Cost cost_lo, Cost cost_hi, std::uint64_t seed);

Cost tour_cost(const AtspInstance& inst, const Tour& tour);

OracleResult exact_optimum(const AtspInstance& inst,
                           OracleMethod method = OracleMethod::held_karp,
                           const OracleLimits& limits = {});

// x given as the set of selected arcs.
TourValidation validate_tour(const AtspInstance& inst,
                             const std::vector<std::pair<int, int>>& selected);

TourValidation validate_tour(const AtspInstance& inst, const Tour& tour);

// Enumerate every Hamiltonian cycle cost (n <= brute limit); used by tests
// that need the k-th best tour.
std::vector<std::pair<Cost, Tour>> all_tours_sorted(const AtspInstance& inst);

}  // namespace modulift
