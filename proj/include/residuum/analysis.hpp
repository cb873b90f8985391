#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "residuum/numtheory.hpp"

namespace residuum {

/// Everything the CLI reports about one design.
struct AnalysisRecord {
    DesignParams params;
    double gross = 0.0;
    double net = 0.0;
    double approx = 0.0;
    std::uint64_t m = 1;
    std::uint64_t generator = 1;
    std::uint64_t g1 = 1;
    std::uint64_t g2 = 1;
    std::uint64_t doubled_count = 0;
    std::uint64_t degenerate_count = 0;
    std::uint64_t string_count = 0;
    bool is_prime_n = false;
    std::optional<bool> is_primitive_root_a;  // empty unless n is prime and gcd(a, n) = 1
};

namespace analysis {

AnalysisRecord analyze(const DesignParams& params);

/// Rounds to 9 significant digits, the precision used by every serializer.
double round_significant(double value);

std::string to_json(const AnalysisRecord& record);
AnalysisRecord from_json(std::string_view text);

std::string to_text(const AnalysisRecord& record);

inline constexpr std::string_view kCsvHeader =
    "n,a,r,gross,net,approx,m,generator,g1,g2,doubled_count,degenerate_count,string_count,is_prime,"
    "is_primitive_root";

/// One row without trailing newline; is_primitive_root is empty when undefined.
std::string to_csv_row(const AnalysisRecord& record);
/// Throws std::invalid_argument on malformed rows.
AnalysisRecord from_csv_row(std::string_view row);

}  // namespace analysis
}  // namespace residuum
