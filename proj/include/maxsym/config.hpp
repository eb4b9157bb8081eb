#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace maxsym {

// Runtime knobs shared by the CLI commands.  The MAXSYM_WORKERS environment
// variable seeds the worker count; explicit flags override it.
struct RunConfig {
  int workers = default_workers();
  long long degree_cap = 72;
  long long budget_ms = 0;
  std::string format = "text";  // text | json | csv | dot
  std::string output_path;      // empty = stdout

  static int default_workers() {
    if (const char* env = std::getenv("MAXSYM_WORKERS")) {
      int w = std::atoi(env);
      if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
  }

  void validate() const {
    if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
    if (degree_cap < 6) throw std::invalid_argument("degree cap must be >= 6");
    if (format != "text" && format != "json" && format != "csv" && format != "dot")
      throw std::invalid_argument("unknown output format: " + format);
  }
};

}  // namespace maxsym
