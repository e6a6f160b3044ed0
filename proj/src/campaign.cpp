#include "fminor/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fminor {

namespace {

u64 fnv1a(const std::string& s)
{
    u64 h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex16(u64 v)
{
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

Json key_to_json(const OrbitKey& key)
{
    Json j;
    j["n"] = key.order;
    j["rows"] = key.rows;
    j["cols"] = key.cols;
    j["orbit_size"] = key.orbit_size;
    return j;
}

Json factors_to_json(const Factorization& f)
{
    Json primes = Json::array();
    for (const auto& [p, e] : f.prime_powers) primes.push_back(Json::array({to_hex(p), e}));
    Json j;
    j["primes"] = primes;
    j["cofactor"] = to_hex(f.cofactor);
    return j;
}

void validate_config(const CampaignConfig& cfg)
{
    if (cfg.order == 0) throw std::invalid_argument("campaign: order must be positive");
    if (!cfg.allow_nonsquarefree && !is_squarefree(cfg.order))
        throw std::invalid_argument(
            "campaign: order is not square-free (use allow_nonsquarefree for negative controls)");
    if (cfg.max_size != 0 && cfg.max_size > cfg.order / 2)
        throw std::invalid_argument(
            "campaign: max size exceeds floor(N/2); complementarity covers larger minors");
    if (cfg.characteristic != 0) {
        if (!is_prime_u64(cfg.characteristic))
            throw std::invalid_argument("campaign: characteristic must be prime");
        if (cfg.order % cfg.characteristic == 0)
            throw std::invalid_argument("campaign: characteristic divides the order");
    }
    if (cfg.family.kind == FamilyKind::DPrincipal &&
        (cfg.family.d == 0 || cfg.order % cfg.family.d != 0))
        throw std::invalid_argument("campaign: family divisor must divide the order");

    // refuse unbounded work up front, with an estimate
    const unsigned msize = cfg.effective_max_size();
    if (msize > 0) {
        BigInt subsets;
        mpz_bin_uiui(subsets.get_mpz_t(), cfg.order, msize);
        BigInt group = cfg.order >= 3 ? BigInt(cfg.order) * totient(cfg.order) : BigInt(1);
        BigInt orbits = subsets / group + 1;
        if (cfg.family.kind != FamilyKind::Principal) orbits *= orbits;
        if (orbits > 10000000)
            throw std::invalid_argument("campaign: estimated " + orbits.get_str() +
                                        " orbits exceeds the 1e7 desk-scale limit");
    }
}

std::vector<OrbitKey> all_orbits(const CampaignConfig& cfg)
{
    std::vector<OrbitKey> out;
    for (unsigned m = 1; m <= cfg.effective_max_size(); ++m) {
        auto part = enumerate_orbits(cfg.order, m, cfg.family);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

VerificationRecord evaluate_orbit(const CampaignConfig& cfg, const OrbitKey& key)
{
    const auto t0 = std::chrono::steady_clock::now();
    VerificationRecord rec;
    rec.key = key;
    const MinorSpec spec = key.spec();
    if (ap_certificate(spec)) {
        // progression certificate: nonzero in characteristic 0 and in every
        // characteristic coprime to N, which covers cfg.characteristic
        rec.status = RecordStatus::ApCertified;
        rec.backend = "ap";
    } else if (cfg.characteristic == 0) {
        if (minor_is_zero(spec)) {
            if (!fourier_minor(spec).is_zero())
                throw std::logic_error("campaign: modular zero not confirmed by the symbolic backend");
            rec.status = RecordStatus::ZeroWitness;
            rec.norm = 0;
            rec.backend = "crt+symbolic";
        } else {
            rec.status = RecordStatus::Nonzero;
            rec.backend = "crt";
            if (cfg.factor_budget > 0) {
                rec.norm = minor_norm_value(spec, NormBackend::MultiModular);
                if (*rec.norm != 0 && babs(*rec.norm) != 1)
                    rec.factors = factor_integer(babs(*rec.norm), cfg.factor_budget);
            }
        }
    } else {
        const BigInt norm = minor_norm_value(spec, NormBackend::MultiModular);
        rec.norm = norm;
        const bool dead =
            norm == 0 || mpz_divisible_ui_p(norm.get_mpz_t(), static_cast<unsigned long>(cfg.characteristic));
        rec.status = dead ? RecordStatus::ZeroWitness : RecordStatus::Nonzero;
        rec.backend = "crt";
        if (cfg.factor_budget > 0 && norm != 0 && babs(norm) != 1)
            rec.factors = factor_integer(babs(norm), cfg.factor_budget);
    }
    rec.micros = static_cast<u64>(
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0)
            .count());
    return rec;
}

Json record_body(const VerificationRecord& rec, const std::string& digest, const FamilySpec& family)
{
    Json j;
    j["schema_version"] = 1;
    j["config_digest"] = digest;
    j["orbit_key"] = key_to_json(rec.key);
    j["family"] = family.label();
    j["status"] = status_label(rec.status);
    j["norm_hex"] = rec.norm ? Json(to_hex(*rec.norm)) : Json(nullptr);
    j["factors"] = rec.factors ? factors_to_json(*rec.factors) : Json(nullptr);
    j["micros"] = rec.micros;
    j["backend"] = rec.backend;
    return j;
}

std::string record_line(const VerificationRecord& rec, const std::string& digest,
                        const FamilySpec& family)
{
    Json j = record_body(rec, digest, family);
    j["checksum"] = hex16(fnv1a(j.dump()));
    return j.dump();
}

RecordStatus status_from_label(const std::string& s)
{
    if (s == "nonzero") return RecordStatus::Nonzero;
    if (s == "zero-witness") return RecordStatus::ZeroWitness;
    if (s == "ap-certified") return RecordStatus::ApCertified;
    if (s == "skipped-by-complement") return RecordStatus::SkippedByComplement;
    throw std::runtime_error("checkpoint: unknown status " + s);
}

// Completed prefix of records from an existing checkpoint; validates digest,
// per-record checksums, and agreement with the enumeration order.
std::vector<VerificationRecord> load_checkpoint(const std::string& path, const std::string& digest,
                                                const std::vector<OrbitKey>& orbits,
                                                const FamilySpec& family)
{
    std::vector<VerificationRecord> out;
    std::ifstream in(path);
    if (!in.is_open()) return out;
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        Json j;
        try {
            j = Json::parse(lines[i]);
        } catch (const std::exception&) {
            if (i + 1 == lines.size()) break; // torn trailing write; recompute that orbit
            throw std::runtime_error("checkpoint: unparsable record before end of file");
        }
        if (!j.contains("checksum")) throw std::runtime_error("checkpoint: record without checksum");
        const std::string stored = j["checksum"];
        j.erase("checksum");
        if (hex16(fnv1a(j.dump())) != stored)
            throw std::runtime_error("checkpoint: record checksum mismatch (corruption)");
        if (j["config_digest"] != digest)
            throw std::runtime_error("checkpoint: config digest mismatch");
        if (j["family"] != family.label())
            throw std::runtime_error("checkpoint: family mismatch");
        if (i >= orbits.size()) throw std::runtime_error("checkpoint: more records than orbits");
        VerificationRecord rec;
        const Json& k = j["orbit_key"];
        rec.key.order = k["n"];
        rec.key.rows = k["rows"].get<std::vector<unsigned>>();
        rec.key.cols = k["cols"].get<std::vector<unsigned>>();
        rec.key.orbit_size = k["orbit_size"];
        if (rec.key.rows != orbits[i].rows || rec.key.cols != orbits[i].cols ||
            rec.key.order != orbits[i].order)
            throw std::runtime_error("checkpoint: record does not match the enumeration");
        rec.status = status_from_label(j["status"]);
        if (!j["norm_hex"].is_null()) rec.norm = from_hex(j["norm_hex"].get<std::string>());
        if (!j["factors"].is_null()) {
            Factorization f;
            for (const auto& pe : j["factors"]["primes"])
                f.prime_powers.push_back({from_hex(pe[0].get<std::string>()), pe[1].get<unsigned>()});
            f.cofactor = from_hex(j["factors"]["cofactor"].get<std::string>());
            rec.factors = std::move(f);
        }
        rec.micros = j["micros"];
        rec.backend = j["backend"];
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace

std::string status_label(RecordStatus s)
{
    switch (s) {
    case RecordStatus::Nonzero: return "nonzero";
    case RecordStatus::ZeroWitness: return "zero-witness";
    case RecordStatus::ApCertified: return "ap-certified";
    case RecordStatus::SkippedByComplement: return "skipped-by-complement";
    }
    return "?";
}

std::string CampaignConfig::digest() const
{
    std::ostringstream os;
    os << "v1|n=" << order << "|family=" << family.label() << "|maxsize=" << effective_max_size()
       << "|char=" << characteristic << "|budget=" << factor_budget;
    return hex16(fnv1a(os.str()));
}

Json CampaignReport::to_json() const
{
    Json j;
    j["schema_version"] = 1;
    j["order"] = order;
    j["family"] = family.label();
    j["max_size"] = max_size;
    j["characteristic"] = characteristic;
    j["config_digest"] = config_digest;
    j["orbit_count"] = orbit_count;
    j["member_count"] = member_count;
    j["counts"] = Json{{"nonzero", nonzero},
                       {"ap_certified", ap_certified},
                       {"zero_witnesses", zero_witnesses_count}};
    Json wits = Json::array();
    for (const auto& w : zero_witnesses) {
        Json e;
        e["orbit_key"] = key_to_json(w.key);
        e["norm_hex"] = w.norm ? Json(to_hex(*w.norm)) : Json(nullptr);
        e["backend"] = w.backend;
        wits.push_back(std::move(e));
    }
    j["zero_witnesses"] = std::move(wits);
    j["complete"] = complete;
    return j;
}

CampaignReport verify_family(const CampaignConfig& cfg) { return verify_family(cfg, RunControl{}); }

CampaignReport verify_family(const CampaignConfig& cfg, const RunControl& control)
{
    validate_config(cfg);
    const std::string digest = cfg.digest();
    const std::vector<OrbitKey> orbits = all_orbits(cfg);
    std::vector<VerificationRecord> records(orbits.size());
    std::vector<char> have(orbits.size(), 0);

    std::size_t start = 0;
    const bool checkpointing = !cfg.checkpoint_path.empty();
    if (checkpointing && std::filesystem::exists(cfg.checkpoint_path)) {
        auto loaded = load_checkpoint(cfg.checkpoint_path, digest, orbits, cfg.family);
        for (std::size_t i = 0; i < loaded.size(); ++i) {
            records[i] = std::move(loaded[i]);
            have[i] = 1;
        }
        start = loaded.size();
    }

    std::size_t todo_end = orbits.size();
    if (control.stop_after < todo_end - start) todo_end = start + control.stop_after;

    if (start < todo_end) {
        const unsigned workers = std::max(1u, cfg.workers);
        std::atomic<std::size_t> next{start};
        std::unique_ptr<std::atomic<unsigned char>[]> done(
            new std::atomic<unsigned char>[orbits.size()]());
        std::mutex error_mutex;
        std::exception_ptr error;
        auto work = [&] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= todo_end) return;
                    records[i] = evaluate_orbit(cfg, orbits[i]);
                    done[i].store(1, std::memory_order_release);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(todo_end);
            }
        };
        // the coordinator flushes the contiguous completed prefix, every 1000
        // records or 10 seconds, whichever comes first
        std::ofstream out;
        if (checkpointing) {
            out.open(cfg.checkpoint_path, std::ios::app);
            if (!out.is_open())
                throw std::runtime_error("campaign: cannot open checkpoint " + cfg.checkpoint_path);
        }
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);

        std::size_t flushed = start;
        u64 pending = 0;
        auto last_flush = std::chrono::steady_clock::now();
        auto drain = [&](bool finishing) {
            while (flushed < todo_end && done[flushed].load(std::memory_order_acquire)) {
                if (checkpointing)
                    out << record_line(records[flushed], digest, cfg.family) << "\n";
                ++flushed;
                ++pending;
            }
            if (checkpointing && (pending >= 1000 || finishing ||
                                  std::chrono::steady_clock::now() - last_flush >
                                      std::chrono::seconds(10))) {
                out.flush();
                pending = 0;
                last_flush = std::chrono::steady_clock::now();
            }
        };
        while (flushed < todo_end) {
            drain(false);
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (error) break;
            }
            if (flushed < todo_end) std::this_thread::sleep_for(std::chrono::milliseconds(5));
        }
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
        drain(true);
        for (std::size_t i = start; i < todo_end; ++i) have[i] = 1;
    }

    CampaignReport rep;
    rep.order = cfg.order;
    rep.family = cfg.family;
    rep.max_size = cfg.effective_max_size();
    rep.characteristic = cfg.characteristic;
    rep.config_digest = digest;
    rep.orbit_count = orbits.size();
    for (const auto& k : orbits) rep.member_count += k.orbit_size;
    rep.complete = true;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (!have[i]) {
            rep.complete = false;
            continue;
        }
        switch (records[i].status) {
        case RecordStatus::Nonzero: ++rep.nonzero; break;
        case RecordStatus::ApCertified: ++rep.ap_certified; break;
        case RecordStatus::ZeroWitness:
            ++rep.zero_witnesses_count;
            rep.zero_witnesses.push_back(records[i]);
            break;
        case RecordStatus::SkippedByComplement: break;
        }
    }
    return rep;
}

CampaignReport run_resume(CampaignConfig cfg, const std::string& checkpoint_path)
{
    cfg.checkpoint_path = checkpoint_path;
    return verify_family(cfg);
}

CharPReport char_p_verify(unsigned nprime, u64 p, const FamilySpec& family)
{
    if (!is_prime_u64(p)) throw std::invalid_argument("char_p_verify: p must be prime");
    if (nprime == 0) throw std::invalid_argument("char_p_verify: order must be positive");
    if (nprime % p == 0) throw std::invalid_argument("char_p_verify: p divides the order");
    CampaignConfig cfg;
    cfg.order = nprime;
    cfg.family = family;
    cfg.characteristic = p;
    CharPReport rep;
    rep.nprime = nprime;
    rep.p = p;
    rep.campaign = verify_family(cfg);
    rep.pass = rep.campaign.clean();
    return rep;
}

namespace {
std::mutex g_table_mutex;
std::map<unsigned, std::vector<std::pair<OrbitKey, BigInt>>> g_pair_tables;
} // namespace

const std::vector<std::pair<OrbitKey, BigInt>>& pair_norm_table(unsigned M)
{
    if (M == 0) throw std::invalid_argument("pair_norm_table: order must be positive");
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_pair_tables.find(M);
    if (it != g_pair_tables.end()) return it->second;
    std::vector<std::pair<OrbitKey, BigInt>> table;
    const FamilySpec family{FamilyKind::AllPairs, 0};
    for (unsigned m = 1; m <= M / 2; ++m) {
        for (auto& key : enumerate_orbits(M, m, family)) {
            BigInt norm = minor_norm_value(key.spec(), NormBackend::MultiModular);
            table.push_back({std::move(key), std::move(norm)});
        }
    }
    return g_pair_tables.emplace(M, std::move(table)).first->second;
}

ChebotarevReport chebotarev_property(unsigned M, u64 q)
{
    if (!is_prime_u64(q)) throw std::invalid_argument("chebotarev_property: q must be prime");
    if (M == 0) throw std::invalid_argument("chebotarev_property: order must be positive");
    if (M % q == 0) throw std::invalid_argument("chebotarev_property: q divides the order");
    ChebotarevReport rep;
    rep.order = M;
    rep.q = q;
    const auto& table = pair_norm_table(M);
    rep.pairs_checked = table.size();
    for (const auto& [key, norm] : table) {
        if (norm == 0 || mpz_divisible_ui_p(norm.get_mpz_t(), static_cast<unsigned long>(q)))
            rep.witnesses.push_back({key, norm});
    }
    rep.holds = rep.witnesses.empty();
    return rep;
}

namespace {

CertNode campaign_leaf(const CampaignReport& rep)
{
    CertNode leaf;
    leaf.rule = "campaign";
    leaf.statement = "exhaustive verification over canonical orbits";
    leaf.data = rep.to_json();
    return leaf;
}

Json node_to_json(const CertNode& node)
{
    Json j;
    j["rule"] = node.rule;
    j["statement"] = node.statement;
    j["data"] = node.data;
    Json kids = Json::array();
    for (const auto& c : node.children) kids.push_back(node_to_json(c));
    j["children"] = std::move(kids);
    return j;
}

} // namespace

Json Certificate::to_json() const
{
    Json j;
    j["order"] = order;
    j["claim"] = claim;
    j["success"] = success;
    if (success)
        j["derivation"] = node_to_json(root);
    else
        j["near_misses"] = near_misses;
    return j;
}

Certificate certify(unsigned N, CertifyStrategy strategy)
{
    if (N == 0) throw std::invalid_argument("certify: order must be positive");
    if (!is_squarefree(N)) throw std::invalid_argument("certify: order must be square-free");
    Certificate cert;
    cert.order = N;
    cert.claim = "all principal minors of the order-" + std::to_string(N) + " Fourier matrix are nonzero";
    const auto primes = prime_divisors(N);
    const auto want = [&](CertifyStrategy s) {
        return strategy == CertifyStrategy::Auto || strategy == s;
    };

    if (N == 1) {
        cert.success = true;
        cert.root = CertNode{"trivial", "the order-1 Fourier matrix is the 1x1 identity", {}, {}};
        return cert;
    }

    // (a) prime order: every minor is nonzero
    if (want(CertifyStrategy::PrimeOnly) && primes.size() == 1 && N == primes[0]) {
        cert.success = true;
        cert.root = CertNode{
            "prime-order", "all minors of a prime-order Fourier matrix are nonzero", Json{{"p", N}}, {}};
        return cert;
    }

    // (b) characteristic-p verification of F_{N/p} lifts to F_N; the largest
    // prime first keeps the verified order smallest
    if (want(CertifyStrategy::CharLift)) {
        for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
            const unsigned p = *it;
            const unsigned nprime = N / p;
            try {
                CharPReport rep = char_p_verify(nprime, p, FamilySpec{FamilyKind::Principal, 0});
                if (rep.pass) {
                    cert.success = true;
                    CertNode node;
                    node.rule = "char-lift";
                    node.statement =
                        "principal minors of the order-" + std::to_string(nprime) +
                        " Fourier matrix are nonzero in characteristic " + std::to_string(p) +
                        ", so every " + std::to_string(nprime) + "-principal minor at order " +
                        std::to_string(N) + " is nonzero";
                    node.data = Json{{"p", p}, {"nprime", nprime}};
                    node.children.push_back(campaign_leaf(rep.campaign));
                    cert.root = std::move(node);
                    return cert;
                }
                cert.near_misses.push_back("char-lift p=" + std::to_string(p) +
                                           " nprime=" + std::to_string(nprime) + ": " +
                                           std::to_string(rep.campaign.zero_witnesses_count) +
                                           " witness orbit(s)");
            } catch (const std::invalid_argument& e) {
                cert.near_misses.push_back("char-lift p=" + std::to_string(p) +
                                           " nprime=" + std::to_string(nprime) + ": " + e.what());
            }
        }
    }

    // (c) pure threshold chain over the sorted prime factorization
    if (want(CertifyStrategy::ThresholdChain) && primes.size() >= 2) {
        bool all_hold = true;
        CertNode node;
        node.rule = "threshold-chain";
        node.statement = "each prime exceeds the chain threshold of the preceding prefix";
        std::vector<u64> prefix{primes[0]};
        std::string failure;
        for (std::size_t j = 1; j < primes.size() && all_hold; ++j) {
            ThresholdReport th = chain_threshold_holds(prefix, primes[j]);
            if (!th.holds) {
                all_hold = false;
                failure = "threshold-chain: step " + std::to_string(j) + " fails (" + th.description + ")";
                break;
            }
            CertNode step;
            step.rule = "threshold-step";
            step.statement = th.description;
            step.data = Json{{"threshold", th.threshold.get_str()},
                             {"next", primes[j]},
                             {"lhs", th.lhs.get_str()},
                             {"rhs", th.rhs.get_str()}};
            node.children.push_back(std::move(step));
            prefix.push_back(primes[j]);
        }
        if (all_hold) {
            node.data = Json{{"primes", primes}};
            cert.success = true;
            cert.root = std::move(node);
            return cert;
        }
        cert.near_misses.push_back(failure);
    }

    // (d) characteristic-zero verification of F_{N/p} plus the Hadamard bound
    if (want(CertifyStrategy::HadamardLift)) {
        const unsigned p = primes.back();
        const unsigned nprime = N / p;
        const unsigned m_max = nprime / 2;
        BigInt bound = 1;
        if (m_max >= 2) bound = hadamard_char_bound(m_max, nprime);
        if (bound < p) {
            try {
                CampaignConfig cfg;
                cfg.order = nprime;
                cfg.family = FamilySpec{FamilyKind::Principal, 0};
                CampaignReport rep = verify_family(cfg);
                if (rep.clean()) {
                    cert.success = true;
                    CertNode node;
                    node.rule = "hadamard-lift";
                    node.statement = "principal minors of the order-" + std::to_string(nprime) +
                                     " Fourier matrix are nonzero with norms bounded by " +
                                     bound.get_str() + " < " + std::to_string(p) +
                                     ", hence nonzero in characteristic " + std::to_string(p);
                    node.data = Json{{"p", p}, {"nprime", nprime}, {"bound", bound.get_str()}};
                    node.children.push_back(campaign_leaf(rep));
                    cert.root = std::move(node);
                    return cert;
                }
                cert.near_misses.push_back("hadamard-lift: base campaign found witnesses");
            } catch (const std::invalid_argument& e) {
                cert.near_misses.push_back(std::string("hadamard-lift: ") + e.what());
            }
        } else {
            cert.near_misses.push_back("hadamard-lift: bound " + bound.get_str() +
                                       " not below p=" + std::to_string(p));
        }
    }

    cert.success = false;
    return cert;
}

} // namespace fminor
