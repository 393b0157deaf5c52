// json_io.hpp - the batch problem front end: JSON problem documents in,
// JSON reports out, with documented exit statuses.

#ifndef BOXDEC_JSON_IO_HPP
#define BOXDEC_JSON_IO_HPP

#include <json.hpp>

#include "boxdec/branching.hpp"

namespace boxdec {

// Exit statuses of the batch runner.
enum ExitStatus : int {
  kOk = 0,
  kVerificationFailed = 1,
  kSchemaError = 2,
  kEngineError = 3,
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::optional<uint64_t> seed_override;
  std::optional<Rational> window_override;
  int jobs = 0;  // 0 = leave the OpenMP default
};

struct RunOutcome {
  int exit_code;
  nlohmann::ordered_json output;
};

// Executes one problem document. Output is deterministic for a fixed
// document and options (canonical rational strings, sorted vertices and
// points). Never throws: failures are encoded in the exit code and an
// "error" field.
RunOutcome run_problem(const nlohmann::ordered_json& doc,
                       const RunOptions& options = {});

// Parsing helpers shared with tests.
Rational json_to_rational(const nlohmann::ordered_json& j);
QVec json_to_qvec(const nlohmann::ordered_json& j);
nlohmann::ordered_json qvec_to_json(const QVec& v);
nlohmann::ordered_json cyclotomic_to_json(const Cyclotomic& c);

}  // namespace boxdec

#endif
