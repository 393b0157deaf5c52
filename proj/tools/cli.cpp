// boxdec: single-document batch front end. Reads one JSON problem from a
// file or standard input, writes one JSON report to standard output.
// Exit statuses: 0 ok, 1 verification failed, 2 schema error, 3 engine error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "boxdec/json_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact box-spline deconvolution engine"};

  std::string input_path;
  app.add_option("--input", input_path, "problem document (default: stdin)");
  long long seed = -1;
  app.add_option("--seed", seed, "override the payload seed");
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker thread count (0 = default)");
  std::string window;
  app.add_option("--window", window,
                 "support-window inflation margin override, rational");

  CLI11_PARSE(app, argc, argv);

  boxdec::RunOptions options;
  if (seed >= 0) options.seed_override = static_cast<uint64_t>(seed);
  options.jobs = jobs;
  if (!window.empty()) {
    try {
      options.window_override = boxdec::parse_rational(window);
    } catch (const std::exception& e) {
      std::cerr << "boxdec: bad --window: " << e.what() << "\n";
      return boxdec::kSchemaError;
    }
  }

  std::string text;
  if (input_path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "boxdec: cannot open " << input_path << "\n";
      return boxdec::kSchemaError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  nlohmann::ordered_json doc =
      nlohmann::ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    std::cerr << "boxdec: input is not valid JSON\n";
    return boxdec::kSchemaError;
  }

  boxdec::RunOutcome outcome = boxdec::run_problem(doc, options);
  std::cout << outcome.output.dump(2) << "\n";
  if (outcome.exit_code != boxdec::kOk) {
    if (outcome.output.contains("error"))
      std::cerr << "boxdec: " << outcome.output["error"].get<std::string>()
                << "\n";
    else
      std::cerr << "boxdec: verification failed\n";
  }
  return outcome.exit_code;
}
