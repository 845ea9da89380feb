#pragma once

#include "kodaira/tamagawa.hpp"
#include "kodaira/tate.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kodaira {

using Json = nlohmann::json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json int_json(const Int& n);
Int json_int(const Json& j);  // accepts both; throws ArgumentError

Json ainvs_json(const Ainvs& a);
Ainvs parse_ainvs(const std::string& csv);  // "a1,a2,a3,a4,a6"

Json to_json(const LocalData& d);
Json to_json(const GlobalReport& r);
std::string localdata_csv_header();
std::string localdata_csv_row(const LocalData& d);

enum class BatchFormat { Csv, JsonLines };

BatchFormat parse_batch_format(const std::string& s);  // csv, json, jsonl, json-lines
BatchFormat format_from_path(const std::string& path);

struct ExpectedLocal {
    Int p;
    std::optional<KodairaType> type;
    std::optional<int> f, c;

    friend bool operator==(const ExpectedLocal&, const ExpectedLocal&) = default;
};

struct BatchRecord {
    long row = 0;  // 1-based line number in the input
    std::optional<std::string> label;
    Ainvs ainvs;
    std::optional<Int> expected_c;
    std::vector<ExpectedLocal> expected_local;
    std::optional<std::string> rejection;  // "singular"

    // Row number is not part of the identity.
    bool same_record(const BatchRecord& o) const;
};

struct BatchError : ArgumentError {
    long row;
    BatchError(long r, const std::string& what)
        : ArgumentError("row " + std::to_string(r) + ": " + what), row(r) {}
};

std::vector<BatchRecord> parse_batch(std::istream& in, BatchFormat fmt);
std::vector<BatchRecord> ingest_batch(const std::string& path, BatchFormat fmt);

struct BatchResult {
    BatchRecord record;
    std::optional<GlobalReport> report;
    std::string status;  // ok, mismatch, rejected: <reason>, error: <what>
};

// Sorted by label, then a-invariants, independent of scheduling.
std::vector<BatchResult> run_batch(const std::vector<BatchRecord>& recs, int jobs = 0);
bool batch_ok(const std::vector<BatchResult>& res);

void write_batch(std::ostream& out, const std::vector<BatchResult>& res, BatchFormat fmt);

}  // namespace kodaira
