#include <capelli/report.hpp>

#include <capelli/admissible.hpp>
#include <capelli/criteria.hpp>
#include <capelli/factor.hpp>
#include <capelli/text.hpp>
#include <capelli/witness.hpp>

#include <chrono>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace capelli {

namespace {

using nlohmann::ordered_json;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string status_token(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::irreducible_by_criterion: return "irreducible-by-criterion";
        case VerdictStatus::criterion_silent: return "criterion-silent";
        case VerdictStatus::reducible_by_oracle: return "reducible-by-oracle";
        case VerdictStatus::irreducible_by_oracle: return "irreducible-by-oracle";
        case VerdictStatus::oracle_budget_exceeded: return "oracle-budget-exceeded";
    }
    throw std::logic_error("unreachable");
}

ordered_json trace_json(const ConditionTrace& tr) {
    ordered_json rows = ordered_json::array();
    for (const ConditionRow& r : tr.rows) {
        rows.push_back(ordered_json{{"branch", r.four_branch ? "four" : "prime"},
                                    {"p", r.p},
                                    {"u", to_string(r.u)},
                                    {"a_holds", r.a_holds},
                                    {"b_holds", r.b_holds}});
    }
    return ordered_json{{"m", tr.m},           {"a", to_string(tr.a)},
                        {"b", to_string(tr.b)}, {"n", tr.n},
                        {"rows", std::move(rows)}, {"verdict", tr.verdict}};
}

ordered_json factors_json(const PolyFactorization& pf) {
    ordered_json arr = ordered_json::array();
    for (const auto& [g, e] : pf.factors)
        arr.push_back(ordered_json{{"poly", to_string(g)}, {"multiplicity", e}});
    return arr;
}

std::string fraction_text(const Fraction& f) {
    auto wrap = [](const std::string& s) {
        return s.find_first_of("+-", 1) != std::string::npos ? "(" + s + ")" : s;
    };
    if (f.den.is_one()) return to_string(f.num);
    return wrap(to_string(f.num)) + "/" + wrap(to_string(f.den));
}

}  // namespace

nlohmann::ordered_json Report::to_json() const {
    ordered_json out{{"command", command}, {"ring", ring}, {"inputs", inputs}, {"result", result}};
    if (trace) out["trace"] = *trace;
    out["elapsed_ms"] = elapsed_ms;
    return out;
}

std::string Report::to_human() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "ring: " << ring << "\n";
    auto plain = [&os](const std::string& key, const ordered_json& v) {
        if (v.is_string())
            os << key << ": " << v.get<std::string>() << "\n";
        else
            os << key << ": " << v.dump() << "\n";
    };
    for (const auto& [k, v] : inputs.items()) plain(k, v);
    for (const auto& [k, v] : result.items()) {
        if (k == "sections" && v.is_array()) {
            for (std::size_t j = 0; j < v.size(); ++j)
                os << "S" << j << ": " << v[j].get<std::string>() << "\n";
        } else if (k == "factors" && v.is_array()) {
            std::string prod;
            for (const auto& f : v) {
                if (!prod.empty()) prod += " * ";
                prod += "(" + f["poly"].get<std::string>() + ")";
                const auto e = f["multiplicity"].get<unsigned>();
                if (e > 1) prod += "^" + std::to_string(e);
            }
            os << "factors: " << (prod.empty() ? "none" : prod) << "\n";
        } else if (k == "membership" && v.is_array()) {
            std::string line;
            for (const auto& rec : v) {
                if (!line.empty()) line += " ";
                line += "n=" + rec["n"].dump() + ":" + (rec["member"].get<bool>() ? "true" : "false");
            }
            os << "membership: " << line << "\n";
        } else {
            plain(k, v);
        }
    }
    if (trace) {
        const ordered_json& tr = *trace;
        os << "condition: m=" << tr["m"].dump() << " a=" << tr["a"].get<std::string>()
           << " b=" << tr["b"].get<std::string>() << " n=" << tr["n"].dump()
           << " verdict=" << (tr["verdict"].get<bool>() ? "holds" : "fails") << "\n";
        for (const auto& r : tr["rows"]) {
            const bool ok = r["a_holds"].get<bool>() || r["b_holds"].get<bool>();
            os << "row: branch=" << r["branch"].get<std::string>() << " p=" << r["p"].dump()
               << " u=" << r["u"].get<std::string>()
               << " a_holds=" << (r["a_holds"].get<bool>() ? "yes" : "no")
               << " b_holds=" << (r["b_holds"].get<bool>() ? "yes" : "no")
               << (ok ? "" : " violated") << "\n";
        }
    }
    os << "elapsed_ms: " << elapsed_ms << "\n";
    return os.str();
}

Report run_check(const RingDescriptor& ring, const std::string& poly_text, std::int64_t n,
                 bool verify, bool oracle_confirm, std::uint64_t max_work) {
    Stopwatch clock;
    const Polynomial f = parse_poly(ring, poly_text);
    Report rep{"check", ring.name(), ordered_json{{"poly", to_string(f)}, {"n", n}}, {}, {}, 0.0};
    WorkMeter meter{max_work};
    try {
        const Verdict v = criterion_check(f, n, verify, &meter);
        if (v.trace) rep.trace = trace_json(*v.trace);
        if (v.status == VerdictStatus::irreducible_by_criterion) {
            rep.result = ordered_json{
                {"status", status_token(v.status)},
                {"direction", *v.direction == Direction::direct ? "direct" : "dual"}};
        } else if (!oracle_confirm) {
            rep.result = ordered_json{{"status", status_token(v.status)}};
        } else {
            const PolyFactorization pf = factor(inflate(f, static_cast<std::size_t>(n)), meter);
            const bool irr =
                pf.content.is_unit() && pf.factors.size() == 1 && pf.factors[0].second == 1;
            rep.result = ordered_json{{"status", irr ? "irreducible-by-oracle" : "reducible-by-oracle"},
                                      {"criterion", status_token(v.status)}};
            if (!irr) {
                rep.result["content"] = to_string(pf.content);
                rep.result["factors"] = factors_json(pf);
            }
        }
    } catch (const BudgetExceeded&) {
        rep.result = ordered_json{{"status", "oracle-budget-exceeded"}};
    }
    rep.result["work_used"] = meter.used;
    rep.elapsed_ms = clock.ms();
    return rep;
}

Report run_admissible(const RingDescriptor& ring, const std::string& a_text,
                      const std::string& b_text, std::uint64_t m,
                      const std::vector<std::int64_t>& ns) {
    Stopwatch clock;
    const RingElement a = parse_element(ring, a_text);
    const RingElement b = parse_element(ring, b_text);
    Report rep{"admissible", ring.name(),
               ordered_json{{"a", to_string(a)}, {"b", to_string(b)}, {"m", m}}, {}, {}, 0.0};
    const AdmissibleSpec spec = admissible_spec(m, a, b);
    rep.result = ordered_json{{"shape", to_string(spec.shape)},
                              {"e_pair", spec.e_pair},
                              {"units_only", spec.units_only},
                              {"inadmissible_primes", spec.inadmissible_primes},
                              {"excluded_odd", spec.excluded_odd}};
    if (spec.units_only)
        rep.result["note"] = "both coefficients are units; odd primes are tested per n";
    if (!ns.empty()) {
        ordered_json mem = ordered_json::array();
        for (std::int64_t n : ns)
            mem.push_back(ordered_json{{"n", n}, {"member", membership(n, spec)}});
        rep.result["membership"] = std::move(mem);
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

Report run_oracle(const RingDescriptor& ring, const std::string& poly_text,
                  std::uint64_t max_work) {
    Stopwatch clock;
    const Polynomial f = parse_poly(ring, poly_text);
    if (f.is_zero()) throw std::domain_error("oracle: the zero polynomial has no factorization");
    Report rep{"oracle", ring.name(), ordered_json{{"poly", to_string(f)}}, {}, {}, 0.0};
    WorkMeter meter{max_work};
    const PolyFactorization pf = factor(f, meter);
    const bool irr = f.degree() >= 1 && pf.content.is_unit() && pf.factors.size() == 1 &&
                     pf.factors[0].second == 1;
    rep.result = ordered_json{{"irreducible", irr},
                              {"content", to_string(pf.content)},
                              {"factors", factors_json(pf)},
                              {"work_used", meter.used}};
    rep.elapsed_ms = clock.ms();
    return rep;
}

Report run_witness(const RingDescriptor& ring, const std::string& poly_text, std::int64_t n,
                   std::uint64_t max_work) {
    Stopwatch clock;
    const Polynomial f = parse_poly(ring, poly_text);
    Report rep{"witness", ring.name(), ordered_json{{"poly", to_string(f)}, {"n", n}}, {}, {}, 0.0};
    WorkMeter meter{max_work};
    const auto w = extract_witness(f, n, meter);
    if (!w) {
        rep.result = ordered_json{{"found", false},
                                  {"note", "the inflation is irreducible; no decomposition exists"},
                                  {"work_used", meter.used}};
    } else {
        if (!verify_witness(f, n, *w))
            throw std::logic_error("witness failed its independent verification");
        ordered_json secs = ordered_json::array();
        for (const Polynomial& s : w->sections) secs.push_back(to_string(s));
        rep.result =
            ordered_json{{"found", true},
                         {"branch", w->branch == WitnessBranch::four ? "four" : "prime"},
                         {"p", w->p},
                         {"u", to_string(w->u)},
                         {"sections", std::move(secs)},
                         {"factor", to_string(w->factor)},
                         {"cofactor", to_string(w->cofactor)},
                         {"verified", w->branch == WitnessBranch::four ? "eq-2" : "eq-1"},
                         {"work_used", meter.used}};
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

Report run_capelli(const RingDescriptor& ring, const std::string& num_text,
                   const std::string& den_text, std::int64_t n) {
    Stopwatch clock;
    const RingElement num = parse_element(ring, num_text);
    const RingElement den = parse_element(ring, den_text);
    Report rep{"capelli", ring.name(),
               ordered_json{{"a_num", to_string(num)}, {"a_den", to_string(den)}, {"n", n}},
               {}, {}, 0.0};
    const auto cert = binomial_reducible(num, den, n);
    if (!cert) {
        rep.result = ordered_json{{"reducible", false}};
    } else {
        rep.result = ordered_json{
            {"reducible", true},
            {"case", cert->kind == BinomialCertificate::Kind::prime_power ? "i" : "ii"},
            {"t", cert->t},
            {"c", fraction_text(cert->c)},
            {"c_num", to_string(cert->c.num)},
            {"c_den", to_string(cert->c.den)}};
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

Report run_cyclotomic(std::int64_t n, std::optional<std::int64_t> q) {
    Stopwatch clock;
    if (q) {
        const auto [d, count] = cyclotomic_factor_count(n, *q);
        const RingDescriptor ring = RingDescriptor::prime_field(*q);
        const CyclotomicRecord rec = cyclotomic(ring, n);
        Report rep{"cyclotomic", ring.name(), ordered_json{{"n", n}, {"q", *q}},
                   ordered_json{{"phi", to_string(rec.phi)},
                                {"euler_phi", rec.euler_phi},
                                {"d", d},
                                {"count", count}},
                   {}, 0.0};
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    const RingDescriptor ring = RingDescriptor::integers();
    const CyclotomicRecord rec = cyclotomic(ring, n);
    Report rep{"cyclotomic", ring.name(), ordered_json{{"n", n}},
               ordered_json{{"phi", to_string(rec.phi)}, {"euler_phi", rec.euler_phi}}, {}, 0.0};
    rep.elapsed_ms = clock.ms();
    return rep;
}

}  // namespace capelli
