#include "tridom/json_io.hpp"

namespace tridom {
namespace {

const char* status_name(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::verified: return "verified";
        case VerificationReport::Status::failed: return "failed";
        case VerificationReport::Status::vacuous: return "vacuous";
        case VerificationReport::Status::not_applicable: return "not-applicable";
    }
    return "?";
}

}  // namespace

Json to_json(const GirthResult& r) {
    Json j;
    if (r.kind == GirthResult::Kind::infinite) {
        j["kind"] = "infinite";
    } else {
        j["kind"] = "finite";
        j["length"] = r.length;
        j["cycle"] = r.cycle;
    }
    return j;
}

Json to_json(const SkReport& r) {
    Json j;
    j["k"] = r.k;
    j["holds"] = r.holds;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    if (r.dominators_by_rank) j["dominators_by_rank"] = *r.dominators_by_rank;
    return j;
}

Json to_json(const GirthBoundAudit& r) {
    Json j;
    j["n"] = r.n;
    j["s2"] = r.s2;
    j["girth"] = to_json(r.girth);
    j["bound"] = r.bound;
    switch (r.verdict) {
        case GirthBoundAudit::Verdict::pass: j["verdict"] = "pass"; break;
        case GirthBoundAudit::Verdict::fail: j["verdict"] = "fail"; break;
        case GirthBoundAudit::Verdict::not_applicable: j["verdict"] = "not-applicable"; break;
    }
    return j;
}

Json to_json(const Digraph& d) {
    Json j;
    j["n"] = d.order();
    Json arcs = Json::array();
    for (const auto& [u, v] : d.arcs()) arcs.push_back(Json::array({u, v}));
    j["arcs"] = std::move(arcs);
    return j;
}

Json to_json(const DominationCertificate& c) {
    Json j;
    j["mode"] = c.mode == DominationCertificate::Mode::exact ? "exact" : "greedy";
    j["value"] = c.value;
    j["witness"] = c.witness;
    Json triples = Json::array();
    for (const auto& wt : c.witness_triples) {
        Json t;
        t["vertex"] = wt.vertex;
        t["triple"] = wt.triple;
        t["tail"] = wt.tail;
        triples.push_back(std::move(t));
    }
    j["witness_triples"] = std::move(triples);
    if (c.lower_bound_record) {
        j["lower_bound_record"] = {{"size", c.lower_bound_record->size},
                                   {"sets_examined", c.lower_bound_record->sets_examined}};
    }
    return j;
}

Json to_json(const GreedyResult& g) {
    Json j = to_json(g.certificate);
    Json steps = Json::array();
    for (const auto& s : g.steps) {
        Json sj;
        sj["remaining_before"] = s.remaining_before;
        sj["pick"] = s.pick;
        sj["tail_count"] = s.tail_count_induced;
        sj["remaining_after"] = s.remaining_after;
        steps.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps);
    return j;
}

Json to_json(const PairTailReport& r) {
    Json j;
    j["holds"] = r.holds;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["premises"] = {{"k", r.premises.k},
                     {"girth", to_json(r.premises.girth)},
                     {"sk", to_json(r.premises.sk)}};
    Json dom;
    dom["claimed_lower_bound"] = r.domination.claimed_lower_bound;
    dom["exact"] = to_json(r.domination.exact);
    dom["status"] = status_name(r.domination.status);
    dom["pass"] = r.domination.pass();
    j["conclusion_domination"] = std::move(dom);

    Json pt;
    pt["applicable"] = r.pair_tail.applicable;
    if (r.pair_tail.report) pt["report"] = to_json(*r.pair_tail.report);
    pt["status"] = status_name(r.pair_tail.status);
    pt["pass"] = r.pair_tail.pass();
    j["conclusion_pair_tail"] = std::move(pt);

    j["pass"] = r.pass();
    return j;
}

Json to_json(const SearchReport& r) {
    Json params;
    params["k"] = r.k;
    params["l"] = r.l;
    params["mode"] = r.mode == SearchMode::exhaustive ? "exhaustive" : "random";
    params["limit"] = r.limit;
    if (r.n_lo == r.n_hi) params["n"] = r.n_lo;
    else params["n_range"] = Json::array({r.n_lo, r.n_hi});
    if (r.mode == SearchMode::random) {
        params["seed"] = r.seed;
        params["trials"] = r.trials;
    }

    Json j;
    j["parameters"] = std::move(params);
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    j["witnesses"] = std::move(witnesses);
    Json orders = Json::array();
    for (const auto& o : r.orders) {
        Json oj;
        oj["n"] = o.n;
        oj["exhausted"] = o.exhausted;
        oj["nodes"] = o.nodes;
        oj["leaves"] = o.leaves;
        oj["witnesses_found"] = o.witnesses_found;
        orders.push_back(std::move(oj));
    }
    j["orders"] = std::move(orders);
    j["exhausted"] = r.exhausted;
    j["nodes_explored"] = r.nodes_explored;
    j["leaves"] = r.leaves;
    if (r.min_order) j["min_order"] = *r.min_order;
    return j;
}

}  // namespace tridom
