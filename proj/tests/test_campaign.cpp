#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fminor/campaign.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace fminor;

namespace {

CampaignConfig principal_cfg(unsigned n)
{
    CampaignConfig cfg;
    cfg.order = n;
    cfg.family = FamilySpec{FamilyKind::Principal, 0};
    return cfg;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path((std::filesystem::temp_directory_path() / name).string())
    {
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("square-free orders are clean at desk scale")
{
    for (unsigned n : {2u, 3u, 5u, 6u, 7u, 10u, 14u, 15u}) {
        CampaignReport rep = verify_family(principal_cfg(n));
        CHECK(rep.complete);
        CHECK(rep.zero_witnesses_count == 0);
        CHECK(rep.orbit_count > 0);
    }
}

TEST_CASE("negative controls: prime-square divisors force zero principal minors")
{
    auto cfg4 = principal_cfg(4);
    CHECK_THROWS_AS(verify_family(cfg4), std::invalid_argument); // gate
    cfg4.allow_nonsquarefree = true;
    CampaignReport rep4 = verify_family(cfg4);
    REQUIRE(rep4.zero_witnesses_count == 1);
    CHECK(rep4.zero_witnesses[0].key.rows == std::vector<unsigned>{0, 2});

    for (unsigned n : {8u, 9u}) {
        auto cfg = principal_cfg(n);
        cfg.allow_nonsquarefree = true;
        CampaignReport rep = verify_family(cfg);
        CHECK(rep.zero_witnesses_count > 0);
    }
}

TEST_CASE("characteristic-p verification")
{
    const FamilySpec principal{FamilyKind::Principal, 0};
    CharPReport ok = char_p_verify(6, 5, principal);
    CHECK(ok.pass);

    CharPReport bad = char_p_verify(7, 2, principal);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.campaign.zero_witnesses_count == 1);
    CHECK(bad.campaign.zero_witnesses[0].key.rows == std::vector<unsigned>{0, 1, 3});

    CHECK(char_p_verify(5, 3, principal).pass);
    CHECK(char_p_verify(1, 7, principal).pass); // vacuous
    CHECK_THROWS_AS(char_p_verify(6, 2, principal), std::invalid_argument);
}

TEST_CASE("q-Chebotarev property")
{
    CHECK(chebotarev_property(7, 3).holds);
    CHECK(chebotarev_property(5, 2).holds);
    CHECK(chebotarev_property(5, 7).holds);
    ChebotarevReport bad = chebotarev_property(7, 2);
    CHECK_FALSE(bad.holds);
    REQUIRE(!bad.witnesses.empty());
    CHECK(bad.witnesses[0].first.rows == std::vector<unsigned>{0, 1, 3});
    CHECK(bad.witnesses[0].second == 2744);
    CHECK_THROWS_AS(chebotarev_property(7, 7), std::invalid_argument);
}

TEST_CASE("chebotarev verdicts match per-orbit finite-field twists")
{
    for (auto [M, q] : std::vector<std::pair<unsigned, u64>>{{7, 2}, {7, 3}, {6, 5}, {10, 7}}) {
        auto ctx = build_field(M, q);
        bool any_twist_zero = false;
        for (const auto& [key, norm] : pair_norm_table(M)) {
            (void)norm;
            for (unsigned k : units_mod(M)) {
                std::vector<unsigned> cols;
                for (unsigned b : key.cols) cols.push_back(static_cast<unsigned>(k) * b % M);
                std::sort(cols.begin(), cols.end());
                any_twist_zero =
                    any_twist_zero || ff_minor(MinorSpec{M, key.rows, cols}, ctx).is_zero();
            }
        }
        CHECK(chebotarev_property(M, q).holds == !any_twist_zero);
    }
}

TEST_CASE("certification")
{
    // products 6p certify through the characteristic lift with base order 6
    for (unsigned p : {5u, 7u, 11u, 13u}) {
        Certificate cert = certify(6 * p);
        REQUIRE(cert.success);
        CHECK(cert.root.rule == "char-lift");
        CHECK(cert.root.data["nprime"] == 6);
        CHECK(cert.root.data["p"] == p);
    }
    // semiprimes with a small factor certify through the lift as well
    for (unsigned n : {15u, 21u, 35u}) {
        Certificate cert = certify(n);
        REQUIRE(cert.success);
        CHECK(cert.root.rule == "char-lift");
    }
    // primes certify by the prime-order rule
    Certificate cp = certify(13);
    CHECK(cp.success);
    CHECK(cp.root.rule == "prime-order");

    // 174 = 2 * 3 * 29 admits the pure threshold chain
    Certificate chain = certify(174, CertifyStrategy::ThresholdChain);
    REQUIRE(chain.success);
    CHECK(chain.root.rule == "threshold-chain");
    REQUIRE(chain.root.children.size() == 2);
    CHECK(chain.root.children[1].data["threshold"] == "27");

    // under the default rule order the characteristic lift fires first
    Certificate a174 = certify(174);
    CHECK(a174.success);
    CHECK(a174.root.rule == "char-lift");

    // the Hadamard lift alone also certifies 174: bound 27 < 29
    Certificate h174 = certify(174, CertifyStrategy::HadamardLift);
    REQUIRE(h174.success);
    CHECK(h174.root.rule == "hadamard-lift");
    CHECK(h174.root.data["bound"] == "27");

    CHECK_THROWS_AS(certify(12), std::invalid_argument);
    CHECK(certify(1).success);
}

TEST_CASE("certified orders cross-validate against exhaustive enumeration")
{
    for (unsigned n : {6u, 10u, 14u, 15u}) {
        Certificate cert = certify(n);
        REQUIRE(cert.success);
        CHECK((cert.root.rule == "char-lift" || cert.root.rule == "threshold-chain"));
        CampaignReport rep = verify_family(principal_cfg(n));
        CHECK(rep.clean());
    }
}

TEST_CASE("the stronger family conclusion holds exhaustively at desk scale")
{
    // for each prime p | N the (N/p)-principal minors are all nonzero
    for (unsigned n : {6u, 10u, 14u, 15u}) {
        for (unsigned p : prime_divisors(n)) {
            const unsigned nprime = n / p;
            CampaignConfig cfg;
            cfg.order = n;
            cfg.family = nprime == 1 ? FamilySpec{FamilyKind::AllPairs, 0}
                                     : FamilySpec{FamilyKind::DPrincipal, nprime};
            CampaignReport rep = verify_family(cfg);
            CHECK(rep.clean());
        }
    }
    // prime orders: every pair family is clean (all minors nonzero)
    for (unsigned n : {5u, 7u, 11u, 13u}) {
        CampaignConfig cfg;
        cfg.order = n;
        cfg.family = FamilySpec{FamilyKind::AllPairs, 0};
        CHECK(verify_family(cfg).clean());
    }
}

TEST_CASE("reports are identical across worker counts")
{
    for (unsigned workers : {1u, 2u, 3u}) {
        auto cfg = principal_cfg(15);
        cfg.workers = workers;
        static std::string reference;
        const std::string dump = verify_family(cfg).to_json().dump();
        if (workers == 1)
            reference = dump;
        else
            CHECK(dump == reference);
    }
}

TEST_CASE("checkpoint: interrupt and resume reproduces the fresh report")
{
    TempFile ck("fminor_test_resume.jsonl");
    auto cfg = principal_cfg(14);
    const std::string fresh = verify_family(cfg).to_json().dump();

    cfg.checkpoint_path = ck.path;
    RunControl half;
    half.stop_after = 20; // well inside the orbit count for order 14
    CampaignReport partial = verify_family(cfg, half);
    CHECK_FALSE(partial.complete);

    CampaignReport resumed = run_resume(cfg, ck.path);
    CHECK(resumed.complete);
    CHECK(resumed.to_json().dump() == fresh);

    // a second resume over the finished checkpoint recomputes nothing
    CampaignReport again = run_resume(cfg, ck.path);
    CHECK(again.to_json().dump() == fresh);
}

TEST_CASE("checkpoint: an empty file is a fresh run")
{
    TempFile ck("fminor_test_empty.jsonl");
    {
        std::ofstream touch(ck.path);
    }
    auto cfg = principal_cfg(14);
    CampaignReport rep = run_resume(cfg, ck.path);
    CHECK(rep.complete);
    CHECK(rep.to_json().dump() == verify_family(principal_cfg(14)).to_json().dump());
}

TEST_CASE("checkpoint: altered configuration is rejected")
{
    TempFile ck("fminor_test_digest.jsonl");
    auto cfg = principal_cfg(10);
    cfg.checkpoint_path = ck.path;
    verify_family(cfg);
    auto altered = cfg;
    altered.max_size = 3;
    CHECK_THROWS_WITH_AS(verify_family(altered), doctest::Contains("digest"), std::runtime_error);
}

TEST_CASE("checkpoint: corrupted records are rejected, torn tails are ignored")
{
    TempFile ck("fminor_test_corrupt.jsonl");
    auto cfg = principal_cfg(10);
    cfg.checkpoint_path = ck.path;
    verify_family(cfg);

    // flip a byte inside the first record
    std::ifstream in(ck.path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    std::string tampered = all;
    const auto pos = tampered.find("\"status\":\"");
    REQUIRE(pos != std::string::npos);
    tampered[pos + 10] = 'X';
    {
        std::ofstream out(ck.path, std::ios::trunc);
        out << tampered;
    }
    CHECK_THROWS_AS(verify_family(cfg), std::runtime_error);

    // a torn trailing line is not corruption: keep the whole first record
    // plus half of the second, as an interrupted write would leave it
    {
        std::istringstream lines(all);
        std::string l1, l2;
        std::getline(lines, l1);
        std::getline(lines, l2);
        std::ofstream out(ck.path, std::ios::trunc);
        out << l1 << "\n" << l2.substr(0, l2.size() / 2);
    }
    CampaignReport rep = verify_family(cfg);
    CHECK(rep.complete);
    CHECK(rep.to_json().dump() == verify_family(principal_cfg(10)).to_json().dump());
}

TEST_CASE("oversized campaigns are refused with an estimate")
{
    auto cfg = principal_cfg(59);
    CHECK_THROWS_WITH_AS(verify_family(cfg), doctest::Contains("desk-scale"), std::invalid_argument);
}

TEST_CASE("config validation")
{
    auto cfg = principal_cfg(10);
    cfg.max_size = 6; // beyond floor(10/2); complements cover those sizes
    CHECK_THROWS_AS(verify_family(cfg), std::invalid_argument);
    auto bad_char = principal_cfg(10);
    bad_char.characteristic = 5; // divides the order
    CHECK_THROWS_AS(verify_family(bad_char), std::invalid_argument);
    auto bad_d = principal_cfg(10);
    bad_d.family = FamilySpec{FamilyKind::DPrincipal, 3};
    CHECK_THROWS_AS(verify_family(bad_d), std::invalid_argument);
}

TEST_CASE("checkpoint schema carries the pinned fields")
{
    TempFile ck("fminor_test_schema.jsonl");
    auto cfg = principal_cfg(6);
    cfg.checkpoint_path = ck.path;
    cfg.factor_budget = 100000;
    verify_family(cfg);
    std::ifstream in(ck.path);
    std::string line;
    REQUIRE(std::getline(in, line));
    auto j = Json::parse(line);
    for (const char* field : {"schema_version", "config_digest", "orbit_key", "family", "status",
                              "norm_hex", "factors", "micros", "backend", "checksum"})
        CHECK(j.contains(field));
    CHECK(j["schema_version"] == 1);
    CHECK(j["family"] == "principal");
}
