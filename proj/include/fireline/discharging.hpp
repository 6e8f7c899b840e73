#pragma once

// Density-based containment classes and the weight-transfer argument.
// Vertices fall into three classes from which the fire is cheap to contain:
//   v1: degree <= k                                  (burned = 1)
//   v2: degree k+1, some neighbor of degree <= k+1   (burned = 2)
//   v3: degree k+1, not v2, some neighbor w of degree k+2 having at least
//       two neighbors of degree k+1                  (burned = 3)
// Every vertex outside the classes starts with weight = degree; each vertex
// of degree >= k+2 then gives 1/(k+2) to each degree-(k+1) neighbor outside
// the classes. The discharged weight of every vertex outside the classes is
// at least the density threshold k+2 - 1/(k+2), which forces
// |v1|+|v2|+|v3| >= eps*n/threshold on any graph with 2m/n <= threshold-eps.
// All weights are exact rationals; the inequalities are tight at the
// threshold so floating point is banned here.

#include <optional>
#include <vector>

#include "fireline/graph.hpp"
#include "fireline/rational.hpp"

namespace fireline {

enum class VertexClass : unsigned char { none, v1, v2, v3 };

struct ClassificationReport {
    int k = 1;
    Rational tau; // density threshold k+2 - 1/(k+2)
    std::vector<VertexClass> cls;
    std::vector<int> v1, v2, v3; // sorted memberships
    std::vector<long long> omega;       // initial weight = degree (all vertices)
    std::vector<Rational> omega_prime;  // discharged weight (transfers touch only
                                        // vertices outside v1|v2|v3)
    long long bound_lhs = 0;            // |v1| + |v2| + |v3|
    std::optional<Rational> bound_rhs;  // eps*n/tau when eps was supplied

    bool in_class(int v) const { return cls[static_cast<std::size_t>(v)] != VertexClass::none; }
};

// tau_k = k+2 - 1/(k+2), exact. pre: k >= 1.
Rational density_threshold(int k);

// Class membership only (weights left empty). Density-independent.
ClassificationReport classify(const Graph& g, int k);

// classify + the weight transfer. Verifies the three discharged-weight
// inequalities and exact weight conservation internally (logic_error on
// violation; they hold for every graph, so a throw means a code bug).
ClassificationReport discharge(const Graph& g, int k);

struct BoundVerdict {
    bool holds = false;
    Rational lhs;       // |v1|+|v2|+|v3|
    Rational rhs;       // eps*n/tau
    Rational density;   // 2m/n
    Rational limit;     // tau - eps
};

// pre: eps > 0 and 2m/n <= tau - eps; violation raises invalid_argument
// naming the actual density.
BoundVerdict verify_bound(const Graph& g, int k, const Rational& eps);

// Surviving-rate floor 2*eps / (5*tau_k). pre: eps > 0.
Rational rho_floor(int k, const Rational& eps);

} // namespace fireline
