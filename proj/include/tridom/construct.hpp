#pragma once

#include <optional>

#include "tridom/digraph.hpp"
#include "tridom/tournament.hpp"

namespace tridom {

/// Verification record for one digraph instance: the girth / S_k premises,
/// the domination-number conclusion (must reach k+1 when S_k holds), and
/// the pair-tail conclusion (applies when the girth is at least 5).
struct VerificationReport {
    enum class Status { verified, failed, vacuous, not_applicable };

    struct Premises {
        GirthResult girth;
        SkReport sk;
        int k = 0;
    };
    struct DominationConclusion {
        int claimed_lower_bound = 0;  // k + 1
        DominationCertificate exact;
        Status status = Status::failed;
        bool pass() const { return status != Status::failed; }
    };
    struct PairTailConclusion {
        bool applicable = false;  // girth infinite or >= 5
        std::optional<PairTailReport> report;
        Status status = Status::not_applicable;
        bool pass() const { return status != Status::failed; }
    };

    Premises premises;
    DominationConclusion domination;
    PairTailConclusion pair_tail;

    bool pass() const { return domination.pass() && pair_tail.pass(); }
};

/// Builds the 3-tournament whose tails follow the maximum-path rule: for
/// each triple A, the tail is the smallest vertex (by id) from which a
/// directed path of maximum length starts in the sub-digraph induced on A.
/// Requires every triple to induce an acyclic sub-digraph, i.e. girth
/// infinite or >= 4; otherwise throws CyclicTripleError naming the first
/// offending triple in colex order. The chosen tail always has indegree 0
/// inside its triple, which is checked per triple.
Tournament3 build_tournament(const Digraph& d, int threads = 1);

/// Full verification pipeline: evaluates S_k, builds the tournament, runs
/// the exact domination solver, and checks the pair-tail property when the
/// girth permits. The domination conclusion is vacuous when S_k fails.
/// Requires k < n; propagates CyclicTripleError when the girth is <= 3.
VerificationReport verify_construction(const Digraph& d, int k, int threads = 1);

}  // namespace tridom
