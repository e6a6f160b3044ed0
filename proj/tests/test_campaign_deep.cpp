/* Slower exhaustive checks, split out so the main campaign suite stays
 * quick: the per-prime family verdicts at the top of the desk-scale range. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fminor/campaign.hpp"

using namespace fminor;

TEST_CASE("per-prime family verdicts at orders 17, 19, 21")
{
    // for each prime p | N, every (N/p)-principal minor of F_N is nonzero;
    // N/p = 1 degenerates to the family of all index pairs
    struct Case {
        unsigned order;
        FamilySpec family;
    };
    const std::vector<Case> cases = {
        {17, {FamilyKind::AllPairs, 0}},
        {19, {FamilyKind::AllPairs, 0}},
        {21, {FamilyKind::DPrincipal, 7}},
        {21, {FamilyKind::DPrincipal, 3}},
    };
    for (const auto& c : cases) {
        CampaignConfig cfg;
        cfg.order = c.order;
        cfg.family = c.family;
        cfg.workers = 2;
        CampaignReport rep = verify_family(cfg);
        CAPTURE(c.order);
        CAPTURE(c.family.label());
        CHECK(rep.complete);
        CHECK(rep.zero_witnesses_count == 0);
    }
}
