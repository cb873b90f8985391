#include "residuum/analysis.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "residuum/design_graph.hpp"
#include "residuum/metrics.hpp"

namespace residuum::analysis {
namespace {

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return buffer;
}

std::uint64_t parse_unsigned(const std::string& field) {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(field, &used);
    if (used != field.size()) throw std::invalid_argument("bad integer field: " + field);
    return value;
}

double parse_real(const std::string& field) {
    std::size_t used = 0;
    const double value = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument("bad real field: " + field);
    return value;
}

bool parse_bool(const std::string& field) {
    if (field == "true") return true;
    if (field == "false") return false;
    throw std::invalid_argument("bad boolean field: " + field);
}

}  // namespace

double round_significant(double value) { return std::strtod(format_real(value).c_str(), nullptr); }

AnalysisRecord analyze(const DesignParams& params) {
    validate(params);
    const LengthReport lengths = metrics::net_length(params);
    const SubgroupInfo subgroup = numtheory::doubled_subgroup(params);

    AnalysisRecord record;
    record.params = params;
    record.gross = lengths.gross;
    record.net = lengths.net;
    record.approx = lengths.approx;
    record.m = subgroup.m;
    record.generator = subgroup.generator;
    record.g1 = subgroup.g1;
    record.g2 = subgroup.g2;
    record.doubled_count = lengths.doubled_segment_count;
    record.degenerate_count = lengths.degenerate_count;
    record.string_count = designgraph::string_count(designgraph::build_design(params));
    record.is_prime_n = numtheory::is_prime(params.n);
    if (record.is_prime_n && numtheory::gcd(params.a % params.n, params.n) == 1) {
        record.is_primitive_root_a = numtheory::is_primitive_root(params.a, params.n);
    }
    return record;
}

std::string to_json(const AnalysisRecord& record) {
    nlohmann::ordered_json doc;
    doc["n"] = record.params.n;
    doc["a"] = record.params.a;
    doc["r"] = round_significant(record.params.r);
    doc["gross"] = round_significant(record.gross);
    doc["net"] = round_significant(record.net);
    doc["approx"] = round_significant(record.approx);
    doc["m"] = record.m;
    doc["generator"] = record.generator;
    doc["g1"] = record.g1;
    doc["g2"] = record.g2;
    doc["doubled_count"] = record.doubled_count;
    doc["degenerate_count"] = record.degenerate_count;
    doc["string_count"] = record.string_count;
    doc["is_prime_n"] = record.is_prime_n;
    if (record.is_primitive_root_a) {
        doc["is_primitive_root_a"] = *record.is_primitive_root_a;
    } else {
        doc["is_primitive_root_a"] = nullptr;
    }
    return doc.dump(2);
}

AnalysisRecord from_json(std::string_view text) {
    const auto doc = nlohmann::json::parse(text);
    AnalysisRecord record;
    record.params = DesignParams{doc.at("n").get<std::uint64_t>(), doc.at("a").get<std::uint64_t>(),
                                 doc.at("r").get<double>()};
    record.gross = doc.at("gross").get<double>();
    record.net = doc.at("net").get<double>();
    record.approx = doc.at("approx").get<double>();
    record.m = doc.at("m").get<std::uint64_t>();
    record.generator = doc.at("generator").get<std::uint64_t>();
    record.g1 = doc.at("g1").get<std::uint64_t>();
    record.g2 = doc.at("g2").get<std::uint64_t>();
    record.doubled_count = doc.at("doubled_count").get<std::uint64_t>();
    record.degenerate_count = doc.at("degenerate_count").get<std::uint64_t>();
    record.string_count = doc.at("string_count").get<std::uint64_t>();
    record.is_prime_n = doc.at("is_prime_n").get<bool>();
    if (const auto& root = doc.at("is_primitive_root_a"); !root.is_null()) {
        record.is_primitive_root_a = root.get<bool>();
    }
    return record;
}

std::string to_text(const AnalysisRecord& record) {
    std::ostringstream out;
    out << "residue design n=" << record.params.n << " a=" << record.params.a
        << " r=" << format_real(record.params.r) << '\n'
        << "  gross length   " << format_real(record.gross) << '\n'
        << "  net length     " << format_real(record.net) << '\n'
        << "  approximation  " << format_real(record.approx) << '\n'
        << "  subgroup H     order m=" << record.m << ", generator " << record.generator << '\n'
        << "  g1, g2         " << record.g1 << ", " << record.g2 << '\n'
        << "  doubled        " << record.doubled_count << '\n'
        << "  degenerate     " << record.degenerate_count << '\n'
        << "  strings        " << record.string_count << '\n'
        << "  n prime        " << (record.is_prime_n ? "yes" : "no") << '\n'
        << "  primitive root "
        << (record.is_primitive_root_a ? (*record.is_primitive_root_a ? "yes" : "no") : "n/a") << '\n';
    return out.str();
}

std::string to_csv_row(const AnalysisRecord& record) {
    std::string row;
    row += std::to_string(record.params.n) + ',' + std::to_string(record.params.a) + ',';
    row += format_real(record.params.r) + ',' + format_real(record.gross) + ',' + format_real(record.net) + ',' +
           format_real(record.approx) + ',';
    row += std::to_string(record.m) + ',' + std::to_string(record.generator) + ',' + std::to_string(record.g1) +
           ',' + std::to_string(record.g2) + ',' + std::to_string(record.doubled_count) + ',' +
           std::to_string(record.degenerate_count) + ',' + std::to_string(record.string_count) + ',';
    row += record.is_prime_n ? "true" : "false";
    row += ',';
    if (record.is_primitive_root_a) row += *record.is_primitive_root_a ? "true" : "false";
    return row;
}

AnalysisRecord from_csv_row(std::string_view row) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : row) {
        if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else if (c != '\r' && c != '\n') {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    if (fields.size() != 15) {
        throw std::invalid_argument("expected 15 CSV fields, got " + std::to_string(fields.size()));
    }
    AnalysisRecord record;
    record.params = DesignParams{parse_unsigned(fields[0]), parse_unsigned(fields[1]), parse_real(fields[2])};
    record.gross = parse_real(fields[3]);
    record.net = parse_real(fields[4]);
    record.approx = parse_real(fields[5]);
    record.m = parse_unsigned(fields[6]);
    record.generator = parse_unsigned(fields[7]);
    record.g1 = parse_unsigned(fields[8]);
    record.g2 = parse_unsigned(fields[9]);
    record.doubled_count = parse_unsigned(fields[10]);
    record.degenerate_count = parse_unsigned(fields[11]);
    record.string_count = parse_unsigned(fields[12]);
    record.is_prime_n = parse_bool(fields[13]);
    if (!fields[14].empty()) record.is_primitive_root_a = parse_bool(fields[14]);
    return record;
}

}  // namespace residuum::analysis
