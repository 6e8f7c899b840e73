#include "fireline/json_io.hpp"

namespace fireline {

Json play_to_json(const PlayOutcome& out) {
    return Json{{"v", out.v},
                {"k", out.k},
                {"rounds", out.rounds},
                {"saved", out.saved},
                {"burned", out.burned},
                {"schedule", out.schedule}};
}

Json solve_to_json(const SolveResult& res) {
    return Json{{"v", res.v},
                {"k", res.k},
                {"sn", res.sn},
                {"exact", res.exact},
                {"nodes_expanded", res.nodes_expanded},
                {"schedule", res.schedule}};
}

Json classification_to_json(const ClassificationReport& rep) {
    Json j{{"k", rep.k},
           {"tau", rational_str(rep.tau)},
           {"v1", rep.v1},
           {"v2", rep.v2},
           {"v3", rep.v3},
           {"omega", rep.omega},
           {"bound_lhs", rep.bound_lhs}};
    if (!rep.omega_prime.empty()) {
        std::vector<std::string> wp;
        wp.reserve(rep.omega_prime.size());
        for (const auto& r : rep.omega_prime) wp.push_back(rational_str(r));
        j["omega_prime"] = wp;
    }
    if (rep.bound_rhs) j["bound_rhs"] = rational_str(*rep.bound_rhs);
    return j;
}

Json bound_to_json(const BoundVerdict& v) {
    return Json{{"holds", v.holds},
                {"lhs", rational_str(v.lhs)},
                {"rhs", rational_str(v.rhs)},
                {"density", rational_str(v.density)},
                {"density_limit", rational_str(v.limit)}};
}

Json simplicity_to_json(const SimplicityStats& s) {
    return Json{{"d", s.d},
                {"n", s.n},
                {"trials", s.trials},
                {"simple_count", s.simple_count},
                {"estimate", s.estimate},
                {"lambda", s.lambda},
                {"predicted", s.predicted}};
}

Json expansion_to_json(const ExpansionReport& rep) {
    Json viols = Json::array();
    for (const auto& v : rep.violations)
        viols.push_back(Json{{"K", v.subset}, {"neighborhood", v.neighborhood}, {"required", v.required}});
    return Json{{"side", rep.side},
                {"checked_sizes", rep.checked_sizes},
                {"sampled_sizes", rep.sampled_sizes},
                {"subsets_checked", rep.subsets_checked},
                {"violations", viols},
                {"clean", rep.clean()}};
}

Json rate_to_json(const RateReport& rep) {
    Json j{{"k", rep.k},
           {"mode", rep.mode},
           {"rho", rep.rho},
           {"strategy", rep.strategy},
           {"samples", rep.samples}};
    if (rep.mode == "exact") {
        j["rho_rational"] = rational_str(rep.rho_rational);
        j["all_exact"] = rep.all_exact;
        j["per_vertex"] = rep.per_vertex;
    } else {
        j["stderr"] = rep.stderr_val;
    }
    return j;
}

Json recurrence_to_json(const RecurrenceTrace& tr) {
    Json j{{"k", tr.k},
           {"seed_side", tr.seed_side == IgnitionSide::x_side ? "X" : "Y"},
           {"s", tr.s},
           {"q", tr.q}};
    if (tr.p) j["p"] = *tr.p;
    return j;
}

Json growth_to_json(const GrowthTimeline& t) {
    return Json{{"t_tree", t.t_tree},
                {"t_half", t.t_half},
                {"t_stop", t.t_stop},
                {"saved_bound", t.saved_bound},
                {"o1_zeroed", t.o1_zeroed}};
}

} // namespace fireline
