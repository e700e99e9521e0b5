#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

#include "hhext/complexes.hpp"

namespace hhext::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchema = "hhext-report/1";

enum class Format { json, csv, text };
enum class Status { pass, fail, skip, finding };

std::string to_string(Status s);

struct RunConfig {
  std::string command;  // dims | verify | ring | cyclic
  std::optional<unsigned> n;
  unsigned n_max = 4;
  unsigned m_max = 6;
  unsigned deg_max = 5;
  std::vector<std::uint32_t> characteristics{0, 2, 3};
  std::string suite = "all";
  Format format = Format::json;
  std::string out;
  std::size_t oracle_cap = complexes::kDefaultOracleCap;
  bool timestamp = true;
  /// Report documented discrepancies as failures instead.
  bool strict_findings = false;
  /// dims: skip the matrix computation and list formula values only.
  bool formula_only = false;

  /// --n if given, else 2..n_max.
  std::vector<unsigned> n_values() const;
  /// Throws DomainError on n < 2, a characteristic that is neither 0 nor prime,
  /// or an unknown command or suite.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

struct Record {
  std::string id;
  nlohmann::json params;  // object; keys sorted
  nlohmann::json expected;
  nlohmann::json computed;
  Status status;
  std::string note;
};

struct Summary {
  std::size_t pass = 0, fail = 0, skip = 0, findings = 0;
};

class Report {
 public:
  explicit Report(RunConfig config);

  const RunConfig& config() const noexcept { return config_; }
  const std::vector<Record>& records() const noexcept { return records_; }

  void add(Record r);
  /// pass when expected == computed, otherwise fail.
  void compare(std::string id, nlohmann::json params, nlohmann::json expected, nlohmann::json computed,
               std::string note = {});
  void check(std::string id, nlohmann::json params, bool ok, std::string note = {});
  void skip(std::string id, nlohmann::json params, std::string reason);
  /// A documented discrepancy; a failure when the config asks for strict findings.
  void finding(std::string id, nlohmann::json params, nlohmann::json expected, nlohmann::json computed,
               std::string note);

  /// Sorts records by (id, params).
  void finalize();
  Summary summary() const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;

  std::string timestamp;

 private:
  RunConfig config_;
  std::vector<Record> records_;
};

/// Integer as a JSON number when it fits in a long, otherwise its decimal string.
nlohmann::json to_json(const mpz_class& v);

Report cmd_dims(const RunConfig& config);
Report cmd_verify(const RunConfig& config);
Report cmd_ring(const RunConfig& config);
Report cmd_cyclic(const RunConfig& config);

std::string render_json(const Report& r);
std::string render_csv(const Report& r);
std::string render_text(const Report& r);
std::string render(const Report& r);

/// Parses arguments, runs the command and writes the report. Returns the exit
/// status: 0 all pass, 1 a check failed, 2 usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hhext::cli
