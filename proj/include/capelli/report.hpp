#pragma once

#include <capelli/ring.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace capelli {

// Presentation-layer record shared by every CLI command. The JSON form has
// the stable top-level schema {command, ring, inputs, result, trace?,
// elapsed_ms}; identical inputs produce byte-identical output apart from
// elapsed_ms. The human form repeats the same verdict tokens verbatim.
struct Report {
    std::string command;
    std::string ring;
    nlohmann::ordered_json inputs;
    nlohmann::ordered_json result;
    std::optional<nlohmann::ordered_json> trace;
    double elapsed_ms = 0.0;

    nlohmann::ordered_json to_json() const;
    std::string to_human() const;
};

Report run_check(const RingDescriptor& ring, const std::string& poly_text, std::int64_t n,
                 bool verify, bool oracle_confirm, std::uint64_t max_work);

Report run_admissible(const RingDescriptor& ring, const std::string& a_text,
                      const std::string& b_text, std::uint64_t m,
                      const std::vector<std::int64_t>& ns);

Report run_oracle(const RingDescriptor& ring, const std::string& poly_text,
                  std::uint64_t max_work);

Report run_witness(const RingDescriptor& ring, const std::string& poly_text, std::int64_t n,
                   std::uint64_t max_work);

Report run_capelli(const RingDescriptor& ring, const std::string& num_text,
                   const std::string& den_text, std::int64_t n);

Report run_cyclotomic(std::int64_t n, std::optional<std::int64_t> q);

}  // namespace capelli
