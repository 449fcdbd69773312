#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "plbranch/saito.hpp"
#include "plbranch/topology.hpp"

namespace plbranch {

inline constexpr const char* kSchemaVersion = "1";

// Reports round-trip losslessly through JSON: to_json followed by the
// matching from_json reproduces the struct field by field. Values that can
// outgrow 53-bit doubles are serialized as decimal strings.

struct TopoReport {
    std::vector<unsigned long> exponents;
    ResolutionChain chain;
    mpz_class dg;            // dg_bound(mu)
    bool dimca_greuel_ok = false;  // 4*tau_min > 3*mu

    friend bool operator==(const TopoReport&, const TopoReport&) = default;
};

TopoReport make_topo_report(const std::vector<unsigned long>& exponents);

struct VerifyReport {
    SaitoCheck check;
    InvariantReport invariants;

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct ScanSummary {
    ScanOptions options;
    ScanReport scan;

    friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct BoundReport {
    mpz_class mu;
    mpz_class bound;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

nlohmann::json to_json(const TopoReport& report);
nlohmann::json to_json(const VerifyReport& report);
nlohmann::json to_json(const ScanSummary& report);
nlohmann::json to_json(const BoundReport& report);

TopoReport topo_from_json(const nlohmann::json& j);
VerifyReport verify_from_json(const nlohmann::json& j);
ScanSummary scan_from_json(const nlohmann::json& j);
BoundReport bound_from_json(const nlohmann::json& j);

std::string to_text(const TopoReport& report);
std::string to_text(const VerifyReport& report);
std::string to_text(const ScanSummary& report);
std::string to_text(const BoundReport& report);

}  // namespace plbranch
