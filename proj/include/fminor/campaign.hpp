#pragma once

/* Verification campaigns: exhaustive family checks per order, in
 * characteristic zero or a prime q coprime to the order, plus the
 * certification rules that lift small verified orders to larger ones.
 *
 * The unit of work is one canonical orbit.  Orbits are evaluated in
 * canonical-key order and the final report is a pure function of the
 * configuration, independent of worker count or interruption pattern.
 * Checkpoints are newline-delimited JSON records, append-only, one per
 * orbit, each carrying a checksum; a torn trailing line is discarded on
 * resume, anything else inconsistent is an error. */

#include "fminor/bounds.hpp"
#include "fminor/minors.hpp"
#include "fminor/symmetry.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fminor {

using Json = nlohmann::ordered_json;

struct CampaignConfig {
    unsigned order = 1;
    FamilySpec family;
    unsigned max_size = 0;      // 0: floor(order/2)
    u64 characteristic = 0;     // 0 or a prime q with q coprime to order
    unsigned workers = 1;
    std::string checkpoint_path; // empty: no checkpointing
    u64 factor_budget = 0;       // 0: statuses only, no factorizations
    bool allow_nonsquarefree = false;

    unsigned effective_max_size() const { return max_size == 0 ? order / 2 : max_size; }
    std::string digest() const; // 16 hex digits over the semantic fields
};

enum class RecordStatus { Nonzero, ZeroWitness, ApCertified, SkippedByComplement };

std::string status_label(RecordStatus s);

struct VerificationRecord {
    OrbitKey key;
    RecordStatus status = RecordStatus::Nonzero;
    std::optional<BigInt> norm;               // exact signed norm, when computed
    std::optional<Factorization> factors;     // of |norm|, when budgeted
    u64 micros = 0;                           // checkpoint-only; not in reports
    std::string backend;
};

struct CampaignReport {
    unsigned order = 1;
    FamilySpec family;
    unsigned max_size = 0;
    u64 characteristic = 0;
    std::string config_digest;
    u64 orbit_count = 0;
    u64 member_count = 0; // sum of orbit sizes
    u64 nonzero = 0, ap_certified = 0, zero_witnesses_count = 0;
    std::vector<VerificationRecord> zero_witnesses;
    bool complete = false;

    bool clean() const { return complete && zero_witnesses_count == 0; }
    Json to_json() const; // deterministic; no timing or worker data
};

struct RunControl {
    u64 stop_after = ~u64(0); // test hook: stop after this many new records
};

// Exhaustive family verification over canonical orbits up to the configured
// size.  With a checkpoint path, completed prefixes are skipped on re-entry.
CampaignReport verify_family(const CampaignConfig& cfg);
CampaignReport verify_family(const CampaignConfig& cfg, const RunControl& control);

// Spec'd entry point for resumption: same campaign, explicit checkpoint.
CampaignReport run_resume(CampaignConfig cfg, const std::string& checkpoint_path);

// Every minor of the family of F_nprime must have norm not divisible by p.
struct CharPReport {
    unsigned nprime = 1;
    u64 p = 0;
    bool pass = false;
    CampaignReport campaign;
};
CharPReport char_p_verify(unsigned nprime, u64 p, const FamilySpec& family);

// q-Chebotarev property of F_M: no minor norm divisible by q, evaluated over
// all canonical pair orbits of size up to floor(M/2).  Norm tables are cached
// per M, so sweeps over many q are cheap.
struct ChebotarevReport {
    unsigned order = 1;
    u64 q = 0;
    bool holds = false;
    std::vector<std::pair<OrbitKey, BigInt>> witnesses; // orbits with q | norm
    u64 pairs_checked = 0;
};
ChebotarevReport chebotarev_property(unsigned M, u64 q);

// Exact norms of all canonical pair orbits of F_M up to half size (cached).
const std::vector<std::pair<OrbitKey, BigInt>>& pair_norm_table(unsigned M);

enum class CertifyStrategy { Auto, PrimeOnly, CharLift, ThresholdChain, HadamardLift };

struct CertNode {
    std::string rule;      // prime-order | char-lift | threshold-chain | hadamard-lift | campaign
    std::string statement; // human-readable claim of this node
    Json data;
    std::vector<CertNode> children;
};

struct Certificate {
    bool success = false;
    unsigned order = 1;
    std::string claim;
    CertNode root;
    std::vector<std::string> near_misses; // failed rule attempts, when unsuccessful
    Json to_json() const;
};

// Certification of "all principal minors of F_N are nonzero" for square-free
// N by, in order: the prime-order theorem; a characteristic-p verification of
// F_{N/p} lifted through the induction step; the pure threshold chain; and
// the Hadamard-bound lift of a characteristic-zero verification.
Certificate certify(unsigned N, CertifyStrategy strategy = CertifyStrategy::Auto);

} // namespace fminor
