#include <capelli/factor.hpp>
#include <capelli/report.hpp>
#include <capelli/text.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct RingChoice {
    std::string code = "z";
    std::int64_t q = 0;
    bool q_given = false;
};

capelli::RingDescriptor make_ring(const RingChoice& rc) {
    if (rc.code == "fq") {
        if (!rc.q_given) throw std::invalid_argument("--ring fq requires --q");
        return capelli::RingDescriptor::prime_field(rc.q);
    }
    if (rc.q_given) throw std::invalid_argument("--q only applies to --ring fq");
    return rc.code == "zi" ? capelli::RingDescriptor::gaussian()
                           : capelli::RingDescriptor::integers();
}

void add_ring_options(CLI::App* cmd, RingChoice& rc) {
    cmd->add_option("--ring", rc.code, "coefficient ring: z, zi, or fq")
        ->check(CLI::IsMember({"z", "zi", "fq"}));
    cmd->add_option("--q", rc.q, "field size for --ring fq (must be prime)")
        ->each([&rc](const std::string&) { rc.q_given = true; });
}

void emit(const capelli::Report& rep, bool json) {
    if (json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_human();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact irreducibility tests and reducibility witnesses for f(x^n)"};
    app.require_subcommand(1);

    RingChoice chk_ring;
    std::string chk_poly;
    std::int64_t chk_n = 0;
    bool chk_verify = false, chk_confirm = false, chk_json = false;
    std::uint64_t chk_work = capelli::default_oracle_work;
    auto* check = app.add_subcommand("check", "sufficient-condition test for f(x^n)");
    add_ring_options(check, chk_ring);
    check->add_option("--poly", chk_poly, "polynomial f")->required();
    check->add_option("--n", chk_n, "inflation exponent")->required();
    check->add_flag("--verify", chk_verify, "oracle-verify that f itself is irreducible");
    check->add_flag("--oracle-confirm", chk_confirm, "resolve silent cases with the oracle");
    check->add_option("--max-work", chk_work, "oracle work budget");
    check->add_flag("--json", chk_json, "machine-readable output");

    RingChoice adm_ring;
    std::string adm_a, adm_b;
    std::uint64_t adm_m = 0;
    std::vector<std::int64_t> adm_ns;
    bool adm_json = false;
    auto* adm = app.add_subcommand("admissible", "safe-exponent profile for a coefficient pair");
    add_ring_options(adm, adm_ring);
    adm->add_option("--a", adm_a, "leading coefficient")->required();
    adm->add_option("--b", adm_b, "constant coefficient")->required();
    adm->add_option("--m", adm_m, "degree of f")->required();
    adm->add_option("--n", adm_ns, "exponents to test, comma separated")->delimiter(',');
    adm->add_flag("--json", adm_json, "machine-readable output");

    RingChoice orc_ring;
    std::string orc_poly;
    bool orc_json = false;
    std::uint64_t orc_work = capelli::default_oracle_work;
    auto* orc = app.add_subcommand("oracle", "exhaustive factorization");
    add_ring_options(orc, orc_ring);
    orc->add_option("--poly", orc_poly, "polynomial to factor")->required();
    orc->add_option("--max-work", orc_work, "work budget");
    orc->add_flag("--json", orc_json, "machine-readable output");

    RingChoice wit_ring;
    std::string wit_poly;
    std::int64_t wit_n = 0;
    bool wit_json = false;
    std::uint64_t wit_work = capelli::default_oracle_work;
    auto* wit = app.add_subcommand("witness", "circulant decomposition certifying f(x^n) reducible");
    add_ring_options(wit, wit_ring);
    wit->add_option("--poly", wit_poly, "irreducible polynomial f")->required();
    wit->add_option("--n", wit_n, "inflation exponent")->required();
    wit->add_option("--max-work", wit_work, "oracle work budget");
    wit->add_flag("--json", wit_json, "machine-readable output");

    RingChoice cap_ring;
    std::string cap_a, cap_den = "1";
    std::int64_t cap_n = 0;
    bool cap_json = false;
    auto* cap = app.add_subcommand("capelli", "reducibility of the binomial x^n - a");
    cap->add_option("--ring", cap_ring.code, "coefficient ring: z or zi")
        ->check(CLI::IsMember({"z", "zi"}));
    cap->add_option("--a", cap_a, "numerator of a")->required();
    cap->add_option("--den", cap_den, "denominator of a");
    cap->add_option("--n", cap_n, "binomial exponent")->required();
    cap->add_flag("--json", cap_json, "machine-readable output");

    std::int64_t cyc_n = 0, cyc_q = 0;
    bool cyc_json = false;
    auto* cyc = app.add_subcommand("cyclotomic", "cyclotomic polynomial and its splitting data");
    cyc->add_option("--n", cyc_n, "index")->required();
    auto* cyc_q_opt = cyc->add_option("--q", cyc_q, "report splitting over the prime field F_q");
    cyc->add_flag("--json", cyc_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*check)
            emit(capelli::run_check(make_ring(chk_ring), chk_poly, chk_n, chk_verify, chk_confirm,
                                    chk_work),
                 chk_json);
        else if (*adm)
            emit(capelli::run_admissible(make_ring(adm_ring), adm_a, adm_b, adm_m, adm_ns),
                 adm_json);
        else if (*orc)
            emit(capelli::run_oracle(make_ring(orc_ring), orc_poly, orc_work), orc_json);
        else if (*wit)
            emit(capelli::run_witness(make_ring(wit_ring), wit_poly, wit_n, wit_work), wit_json);
        else if (*cap)
            emit(capelli::run_capelli(make_ring(cap_ring), cap_a, cap_den, cap_n), cap_json);
        else if (*cyc)
            emit(capelli::run_cyclotomic(cyc_n, cyc_q_opt->count() > 0
                                                    ? std::optional<std::int64_t>(cyc_q)
                                                    : std::nullopt),
                 cyc_json);
        return 0;
    } catch (const capelli::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const capelli::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
