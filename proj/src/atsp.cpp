#include "modulift/atsp.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace modulift {

namespace {

std::size_t idx(int n, int a, int b) { return static_cast<std::size_t>(a) * n + b; }

}  // namespace

int AtspInstance::num_arcs() const {
    int count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && present[idx(n, a, b)]) ++count;
    return count;
}

std::vector<std::pair<int, int>> AtspInstance::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && present[idx(n, a, b)]) out.emplace_back(a, b);
    return out;
}

void AtspInstance::check_valid() const {
    if (n < 3) throw std::invalid_argument("instance needs n >= 3");
    if (costs.size() != static_cast<std::size_t>(n) * n ||
        present.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("cost/present matrix size mismatch");
    std::vector<int> outdeg(n, 0), indeg(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (!present[idx(n, a, b)]) continue;
            if (costs[idx(n, a, b)] <= 0)
                throw std::invalid_argument("non-positive cost on arc (" +
                                            std::to_string(a + 1) + "," +
                                            std::to_string(b + 1) + ")");
            ++outdeg[a];
            ++indeg[b];
        }
    for (int v = 0; v < n; ++v)
        if (outdeg[v] < 1 || indeg[v] < 1)
            throw std::invalid_argument("vertex " + std::to_string(v + 1) +
                                        " lacks in/out arcs");
}

std::vector<int> Tour::successor() const {
    std::vector<int> succ(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        succ[order[i]] = order[(i + 1) % order.size()];
    return succ;
}

bool Tour::is_permutation() const {
    std::vector<char> seen(order.size(), 0);
    for (int v : order) {
        if (v < 0 || v >= n() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

AtspInstance parse_tsplib(const std::string& text) {
    AtspInstance inst;
    std::istringstream in(text);
    std::string line;
    int dimension = -1;
    bool explicit_weights = false, full_matrix = false;
    std::vector<Cost> entries;
    bool in_matrix = false;

    auto trim = [](std::string s) {
        auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
        while (!s.empty() && issp(s.front())) s.erase(s.begin());
        while (!s.empty() && issp(s.back())) s.pop_back();
        return s;
    };

    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t == "EOF") break;
        if (in_matrix) {
            if (t.find(':') != std::string::npos) { in_matrix = false; }
            else {
                std::istringstream ls(t);
                Cost v;
                while (ls >> v) entries.push_back(v);
                continue;
            }
        }
        if (t == "EDGE_WEIGHT_SECTION") { in_matrix = true; continue; }
        auto colon = t.find(':');
        if (colon == std::string::npos) continue;
        std::string key = trim(t.substr(0, colon));
        std::string val = trim(t.substr(colon + 1));
        if (key == "NAME") inst.name = val;
        else if (key == "TYPE") {
            if (val != "ATSP" && val != "TSP")
                throw std::invalid_argument("unsupported TYPE: " + val);
        } else if (key == "DIMENSION") dimension = std::stoi(val);
        else if (key == "EDGE_WEIGHT_TYPE") {
            if (val != "EXPLICIT")
                throw std::invalid_argument("unsupported weight type: " + val);
            explicit_weights = true;
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            if (val != "FULL_MATRIX")
                throw std::invalid_argument("unsupported weight format: " + val);
            full_matrix = true;
        }
    }

    if (!explicit_weights) throw std::invalid_argument("unsupported weight type");
    if (!full_matrix) throw std::invalid_argument("unsupported weight format");
    if (dimension < 3) throw std::invalid_argument("DIMENSION must be >= 3");
    if (entries.size() != static_cast<std::size_t>(dimension) * dimension)
        throw std::invalid_argument("dimension mismatch in EDGE_WEIGHT_SECTION");

    inst.n = dimension;
    inst.costs = std::move(entries);
    inst.present.assign(static_cast<std::size_t>(dimension) * dimension, 0);
    for (int a = 0; a < dimension; ++a)
        for (int b = 0; b < dimension; ++b)
            if (a != b) inst.present[idx(dimension, a, b)] = 1;
    inst.check_valid();
    return inst;
}

std::string write_tsplib(const AtspInstance& inst) {
    std::ostringstream out;
    out << "NAME: " << (inst.name.empty() ? "instance" : inst.name) << "\n";
    out << "TYPE: ATSP\n";
    out << "DIMENSION: " << inst.n << "\n";
    out << "EDGE_WEIGHT_TYPE: EXPLICIT\n";
    out << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
    out << "EDGE_WEIGHT_SECTION\n";
    for (int a = 0; a < inst.n; ++a) {
        for (int b = 0; b < inst.n; ++b) {
            if (b) out << ' ';
            out << (a == b ? Cost{0} : inst.cost(a, b));
        }
        out << "\n";
    }
    out << "EOF\n";
    return out.str();
}

AtspInstance random_instance(int n, Cost cost_lo, Cost cost_hi, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_instance: n must be >= 3");
    if (cost_lo < 1 || cost_lo > cost_hi)
        throw std::invalid_argument("random_instance: need 1 <= lo <= hi");
    AtspInstance inst;
    inst.name = "random-n" + std::to_string(n) + "-s" + std::to_string(seed);
    inst.n = n;
    inst.costs.assign(static_cast<std::size_t>(n) * n, 0);
    inst.present.assign(static_cast<std::size_t>(n) * n, 0);
    std::mt19937_64 rng(seed);
    const std::uint64_t span = static_cast<std::uint64_t>(cost_hi - cost_lo) + 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            // explicit mapping instead of uniform_int_distribution: the
            // distribution's output is not specified across standard libraries
            inst.costs[idx(n, a, b)] = cost_lo + static_cast<Cost>(rng() % span);
            inst.present[idx(n, a, b)] = 1;
        }
    return inst;
}

Cost tour_cost(const AtspInstance& inst, const Tour& tour) {
    if (tour.n() != inst.n || !tour.is_permutation())
        throw std::invalid_argument("tour is not a permutation of the cities");
    Cost total = 0;
    for (int i = 0; i < inst.n; ++i) {
        const int a = tour.order[i];
        const int b = tour.order[(i + 1) % inst.n];
        if (!inst.has_arc(a, b))
            throw std::invalid_argument("tour uses missing arc (" +
                                        std::to_string(a + 1) + "," +
                                        std::to_string(b + 1) + ")");
        total += inst.cost(a, b);
    }
    return total;
}

namespace {

OracleResult brute_force_optimum(const AtspInstance& inst) {
    const int n = inst.n;
    std::vector<int> perm(n - 1);
    for (int i = 0; i < n - 1; ++i) perm[i] = i + 1;
    Cost best = std::numeric_limits<Cost>::max();
    Tour best_tour;
    do {
        Tour t;
        t.order.reserve(n);
        t.order.push_back(0);
        t.order.insert(t.order.end(), perm.begin(), perm.end());
        bool feasible = true;
        Cost c = 0;
        for (int i = 0; i < n && feasible; ++i) {
            const int a = t.order[i], b = t.order[(i + 1) % n];
            if (!inst.has_arc(a, b)) feasible = false;
            else c += inst.cost(a, b);
        }
        if (feasible && c < best) { best = c; best_tour = std::move(t); }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best == std::numeric_limits<Cost>::max())
        throw std::runtime_error("no Hamiltonian cycle exists");
    return {best_tour, best, OracleMethod::brute_force};
}

OracleResult held_karp_optimum(const AtspInstance& inst) {
    const int n = inst.n;
    const int m = n - 1;  // subsets over cities 1..n-1, tour anchored at 0
    const Cost inf = std::numeric_limits<Cost>::max() / 4;
    const std::size_t nsub = std::size_t{1} << m;
    std::vector<Cost> dp(nsub * m, inf);
    std::vector<int> parent(nsub * m, -1);
    for (int j = 0; j < m; ++j)
        if (inst.has_arc(0, j + 1)) dp[(std::size_t{1} << j) * m + j] = inst.cost(0, j + 1);
    for (std::size_t mask = 1; mask < nsub; ++mask) {
        for (int j = 0; j < m; ++j) {
            if (!(mask >> j & 1)) continue;
            const Cost cur = dp[mask * m + j];
            if (cur >= inf) continue;
            for (int k = 0; k < m; ++k) {
                if (mask >> k & 1) continue;
                if (!inst.has_arc(j + 1, k + 1)) continue;
                const std::size_t next = mask | (std::size_t{1} << k);
                const Cost cand = cur + inst.cost(j + 1, k + 1);
                if (cand < dp[next * m + k]) {
                    dp[next * m + k] = cand;
                    parent[next * m + k] = j;
                }
            }
        }
    }
    const std::size_t full = nsub - 1;
    Cost best = inf;
    int last = -1;
    for (int j = 0; j < m; ++j) {
        if (!inst.has_arc(j + 1, 0)) continue;
        if (dp[full * m + j] >= inf) continue;
        const Cost cand = dp[full * m + j] + inst.cost(j + 1, 0);
        if (cand < best) { best = cand; last = j; }
    }
    if (last < 0) throw std::runtime_error("no Hamiltonian cycle exists");
    std::vector<int> rev;
    std::size_t mask = full;
    int j = last;
    while (j >= 0) {
        rev.push_back(j + 1);
        const int pj = parent[mask * m + j];
        mask &= ~(std::size_t{1} << j);
        j = pj;
    }
    Tour tour;
    tour.order.push_back(0);
    tour.order.insert(tour.order.end(), rev.rbegin(), rev.rend());
    return {tour, best, OracleMethod::held_karp};
}

}  // namespace

OracleResult exact_optimum(const AtspInstance& inst, OracleMethod method,
                           const OracleLimits& limits) {
    inst.check_valid();
    const int limit = method == OracleMethod::held_karp ? limits.held_karp_max
                                                        : limits.brute_force_max;
    if (inst.n > limit)
        throw std::invalid_argument("oracle out of range: n = " +
                                    std::to_string(inst.n) + " exceeds limit " +
                                    std::to_string(limit));
    return method == OracleMethod::held_karp ? held_karp_optimum(inst)
                                             : brute_force_optimum(inst);
}

TourValidation validate_tour(const AtspInstance& inst,
                             const std::vector<std::pair<int, int>>& selected) {
    const int n = inst.n;
    std::vector<int> outdeg(n, 0), indeg(n, 0), succ(n, -1);
    for (auto [a, b] : selected) {
        ++outdeg[a];
        ++indeg[b];
        succ[a] = b;
    }
    for (int v = 0; v < n; ++v)
        if (outdeg[v] != 1) return {TourValidation::Kind::out_degree, v, {}};
    for (int v = 0; v < n; ++v)
        if (indeg[v] != 1) return {TourValidation::Kind::in_degree, v, {}};
    // Degrees are all 1: the arcs form disjoint cycles; a short one is the
    // witness S for the violated subtour constraint.
    std::vector<char> seen(n, 0);
    std::vector<int> cycle;
    int v = 0;
    while (!seen[v]) {
        seen[v] = 1;
        cycle.push_back(v);
        v = succ[v];
    }
    if (static_cast<int>(cycle.size()) < n)
        return {TourValidation::Kind::subtour, -1, cycle};
    return {};
}

TourValidation validate_tour(const AtspInstance& inst, const Tour& tour) {
    if (tour.n() != inst.n || !tour.is_permutation())
        return {TourValidation::Kind::out_degree, 0, {}};
    std::vector<std::pair<int, int>> sel;
    for (int i = 0; i < inst.n; ++i)
        sel.emplace_back(tour.order[i], tour.order[(i + 1) % inst.n]);
    return validate_tour(inst, sel);
}

std::vector<std::pair<Cost, Tour>> all_tours_sorted(const AtspInstance& inst) {
    const int n = inst.n;
    if (n > 10) throw std::invalid_argument("all_tours_sorted: n too large");
    std::vector<int> perm(n - 1);
    for (int i = 0; i < n - 1; ++i) perm[i] = i + 1;
    std::vector<std::pair<Cost, Tour>> out;
    do {
        Tour t;
        t.order.push_back(0);
        t.order.insert(t.order.end(), perm.begin(), perm.end());
        bool feasible = true;
        Cost c = 0;
        for (int i = 0; i < n && feasible; ++i) {
            const int a = t.order[i], b = t.order[(i + 1) % n];
            if (!inst.has_arc(a, b)) feasible = false;
            else c += inst.cost(a, b);
        }
        if (feasible) out.emplace_back(c, std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace modulift
