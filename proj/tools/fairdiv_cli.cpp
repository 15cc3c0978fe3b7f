// Command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fairdiv/fairdiv.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFalse = 1, kUser = 2, kInternal = 3 };

struct CString {
  char* p = nullptr;
  ~CString() { fd_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using InstancePtr = std::unique_ptr<fd_instance, decltype(&fd_instance_free)>;
using AllocationPtr = std::unique_ptr<fd_allocation, decltype(&fd_allocation_free)>;

int exit_for(fd_status s) {
  switch (s) {
    case FD_OK: return kOk;
    case FD_ERR_INPUT:
    case FD_ERR_HYPOTHESIS:
    case FD_ERR_TOO_LARGE: return kUser;
    case FD_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

int report(fd_status s) {
  std::cerr << "error: " << fd_last_error_code() << ": " << fd_last_error() << "\n";
  return exit_for(s);
}

struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UserError("cannot write '" + path.string() + "'");
  out << text;
}

/// File-name friendly version of an algorithm or family label.
std::string slug(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return s;
}

/// Trace lines go to FAIRDIV_TRACE_DIR when it is set, otherwise to stderr.
void emit_trace(const std::string& trace, const std::string& label) {
  if (const char* dir = std::getenv("FAIRDIV_TRACE_DIR"); dir && *dir) {
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) / (slug(label) + ".trace.jsonl");
    write_file(path, trace);
    std::cerr << "trace written to " << path.string() << "\n";
  } else {
    std::cerr << trace;
  }
}

fd_status load_instance(const std::string& path, InstancePtr& out) {
  const std::string text = read_file(path);
  fd_instance* raw = nullptr;
  const fd_status s = fd_instance_parse(text.c_str(), &raw);
  out.reset(raw);
  return s;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string algorithm;
  bool trace = false;
};

int run_solve(const SolveArgs& a) {
  InstancePtr inst(nullptr, fd_instance_free);
  if (fd_status s = load_instance(a.instance, inst); s != FD_OK) return report(s);
  CString result, trace;
  if (fd_status s = fd_solve(inst.get(), a.algorithm.c_str(), &result.p, a.trace ? &trace.p : nullptr); s != FD_OK)
    return report(s);
  if (a.trace) {
    const std::string stem = a.instance == "-" ? "stdin" : std::filesystem::path(a.instance).stem().string();
    emit_trace(trace.str(), stem + "." + a.algorithm);
  }
  std::cout << Json::parse(result.str()).dump(2) << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string instance;
  std::string allocation;
  std::string property = "efx";
};

int run_verify(const VerifyArgs& a) {
  InstancePtr inst(nullptr, fd_instance_free);
  if (fd_status s = load_instance(a.instance, inst); s != FD_OK) return report(s);
  const std::string text = read_file(a.allocation);
  fd_allocation* raw = nullptr;
  const fd_status ps = fd_allocation_parse(inst.get(), text.c_str(), &raw);
  AllocationPtr alloc(raw, fd_allocation_free);
  if (ps != FD_OK) return report(ps);
  CString out;
  int verdict = 0;
  if (fd_status s = fd_verify(inst.get(), alloc.get(), a.property.c_str(), &out.p, &verdict); s != FD_OK)
    return report(s);
  std::cout << Json::parse(out.str()).dump(2) << "\n";
  return verdict ? kOk : kFalse;
}

struct GenerateArgs {
  std::string family;
  int n = 3;
  int m = 6;
  int lo = 1;
  int hi = 100;
  std::uint64_t seed = 0;
};

int run_generate(const GenerateArgs& a) {
  fd_instance* raw = nullptr;
  const fd_status s = fd_instance_generate(a.family.c_str(), a.n, a.m, a.lo, a.hi, a.seed, &raw);
  InstancePtr inst(raw, fd_instance_free);
  if (s != FD_OK) return report(s);
  CString out;
  if (fd_status t = fd_instance_to_json(inst.get(), &out.p); t != FD_OK) return report(t);
  std::cout << Json::parse(out.str()).dump(2) << "\n";
  return kOk;
}

struct OracleArgs {
  std::string instance;
  std::string mode = "exists-efx";
};

int run_oracle(const OracleArgs& a) {
  InstancePtr inst(nullptr, fd_instance_free);
  if (fd_status s = load_instance(a.instance, inst); s != FD_OK) return report(s);
  CString out;
  if (fd_status s = fd_oracle(inst.get(), a.mode.c_str(), &out.p); s != FD_OK) return report(s);
  const Json doc = Json::parse(out.str());
  std::cout << doc.dump(2) << "\n";
  if (doc.contains("found") && !doc["found"].get<bool>()) return kFalse;
  return kOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string family;
  std::string algorithm;
  std::string out = "bench";
  int seeds = 100;
  std::uint64_t first_seed = 0;
  int n = 3;
  int m = 6;
  int lo = 1;
  int hi = 100;
  int jobs = 0;
};

struct BenchRow {
  std::uint64_t seed = 0;
  std::string status;  // ok, inapplicable, error
  std::string alpha;   // exact "p/q"
  double alpha_num = 0;
  bool ef1 = false;
  bool efx = false;
  int fallbacks = 0;
  double millis = 0;
  std::string message;
};

double to_double(const std::string& rational) {
  const auto slash = rational.find('/');
  if (slash == std::string::npos) return std::stod(rational);
  return std::stod(rational.substr(0, slash)) / std::stod(rational.substr(slash + 1));
}

BenchRow bench_one(const BenchArgs& a, std::uint64_t seed) {
  BenchRow row;
  row.seed = seed;
  fd_instance* raw = nullptr;
  fd_status s = fd_instance_generate(a.family.c_str(), a.n, a.m, a.lo, a.hi, seed, &raw);
  InstancePtr inst(raw, fd_instance_free);
  if (s != FD_OK) {
    row.status = s == FD_ERR_INTERNAL ? "error" : "inapplicable";
    row.message = fd_last_error();
    return row;
  }
  CString result;
  const auto start = std::chrono::steady_clock::now();
  s = fd_solve(inst.get(), a.algorithm.c_str(), &result.p, nullptr);
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (s != FD_OK) {
    row.status = s == FD_ERR_HYPOTHESIS || s == FD_ERR_TOO_LARGE ? "inapplicable" : "error";
    row.message = std::string(fd_last_error_code()) + ": " + fd_last_error();
    return row;
  }
  const Json doc = Json::parse(result.str());
  row.status = "ok";
  row.alpha = doc["verified"]["efx_alpha"].get<std::string>();
  row.alpha_num = to_double(row.alpha);
  row.ef1 = doc["verified"]["ef1"].get<bool>();
  row.efx = row.alpha == "1/1";
  row.fallbacks = doc["stats"]["fallback_activations"].get<int>();
  return row;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int run_bench(const BenchArgs& a) {
  if (a.seeds < 1) throw UserError("--seeds must be positive");
  std::vector<BenchRow> rows(static_cast<std::size_t>(a.seeds));
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const unsigned jobs = a.jobs > 0 ? static_cast<unsigned>(a.jobs) : hw;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < a.seeds; k = next++)
      rows[static_cast<std::size_t>(k)] = bench_one(a, a.first_seed + static_cast<std::uint64_t>(k));
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<unsigned>(jobs, static_cast<unsigned>(a.seeds)); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "seed,status,efx_alpha,ef1,efx,fallback_activations,runtime_ms,message\n";
  std::vector<const BenchRow*> ok;
  int inapplicable = 0, errors = 0, fallbacks = 0, ef1_pass = 0, efx_pass = 0;
  double total_ms = 0;
  for (const BenchRow& r : rows) {
    csv << r.seed << ',' << r.status << ',' << r.alpha << ',' << (r.status == "ok" ? (r.ef1 ? "true" : "false") : "")
        << ',' << (r.status == "ok" ? (r.efx ? "true" : "false") : "") << ',' << r.fallbacks << ',' << r.millis << ','
        << csv_escape(r.message) << "\n";
    total_ms += r.millis;
    if (r.status == "inapplicable") ++inapplicable;
    if (r.status == "error") ++errors;
    if (r.status != "ok") continue;
    ok.push_back(&r);
    fallbacks += r.fallbacks;
    ef1_pass += r.ef1 ? 1 : 0;
    efx_pass += r.efx ? 1 : 0;
  }

  Json summary;
  summary["family"] = a.family;
  summary["algorithm"] = a.algorithm;
  summary["n"] = a.n;
  summary["m"] = a.m;
  summary["seeds"] = a.seeds;
  summary["first_seed"] = a.first_seed;
  summary["applicable"] = ok.size();
  summary["inapplicable"] = inapplicable;
  summary["errors"] = errors;
  if (!ok.empty()) {
    std::vector<const BenchRow*> by_alpha = ok;
    std::stable_sort(by_alpha.begin(), by_alpha.end(),
                     [](const BenchRow* x, const BenchRow* y) { return x->alpha_num < y->alpha_num; });
    std::vector<double> times;
    for (const BenchRow* r : ok) times.push_back(r->millis);
    std::sort(times.begin(), times.end());
    const double count = static_cast<double>(ok.size());
    summary["min_alpha"] = by_alpha.front()->alpha;
    summary["median_alpha"] = by_alpha[by_alpha.size() / 2]->alpha;
    summary["ef1_pass_rate"] = ef1_pass / count;
    summary["efx_pass_rate"] = efx_pass / count;
    summary["median_runtime_ms"] = times[times.size() / 2];
  }
  summary["fallback_activations"] = fallbacks;
  summary["total_runtime_ms"] = total_ms;

  write_file(a.out + ".csv", csv.str());
  write_file(a.out + ".json", summary.dump(2) + "\n");
  std::cout << summary.dump(2) << "\n";
  for (const BenchRow& r : rows)
    if (r.status == "error") std::cerr << "seed " << r.seed << ": " << r.message << "\n";
  return errors > 0 ? kInternal : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair division of indivisible goods: EFX solvers, verifiers and an exhaustive oracle"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fd_version()));

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run a solver on an instance; prints the solver JSON");
  s->add_option("instance", solve.instance, "Instance JSON file, - for stdin")->required();
  s->add_option("--algorithm,-a", solve.algorithm,
                "ece, pick-ece, framework:<builder>, top-n, relaxed-top:<l>, bounded-interval:<l>, "
                "distinct-favorites, tiered, distinct-top-tiers, oracle-exact")
      ->required();
  s->add_flag("--trace", solve.trace, "Emit one JSON line per round or tier (stderr or FAIRDIV_TRACE_DIR)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a fairness property; exit 0 if it holds, 1 if not");
  v->add_option("instance", verify.instance, "Instance JSON file")->required();
  v->add_option("allocation", verify.allocation, "Allocation JSON file")->required();
  v->add_option("--property,-p", verify.property, "ef, ef1, efx, alpha-ef:<p/q>, alpha-efx:<p/q>, max-alpha");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Print a generated instance");
  g->add_option("--family,-f", gen.family, "e.g. random_additive, common_top_n, tiered(3,multiplicative)")->required();
  g->add_option("--n", gen.n, "Agents");
  g->add_option("--m", gen.m, "Items");
  g->add_option("--lo", gen.lo, "Smallest value drawn");
  g->add_option("--hi", gen.hi, "Largest value drawn");
  g->add_option("--seed", gen.seed, "Seed");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exhaustive search over all complete allocations");
  o->add_option("instance", oracle.instance, "Instance JSON file")->required();
  o->add_option("--mode", oracle.mode, "exists-efx or best-alpha");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a solver over generated instances; writes <out>.csv and <out>.json");
  b->add_option("--family,-f", bench.family, "Instance family")->required();
  b->add_option("--algorithm,-a", bench.algorithm, "Solver")->required();
  b->add_option("--seeds", bench.seeds, "Number of seeds");
  b->add_option("--first-seed", bench.first_seed, "First seed");
  b->add_option("--out,-o", bench.out, "Output path prefix");
  b->add_option("--n", bench.n, "Agents");
  b->add_option("--m", bench.m, "Items");
  b->add_option("--lo", bench.lo, "Smallest value drawn");
  b->add_option("--hi", bench.hi, "Largest value drawn");
  b->add_option("--jobs,-j", bench.jobs, "Worker threads (default: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUser;
  }

  try {
    if (*s) return run_solve(solve);
    if (*v) return run_verify(verify);
    if (*g) return run_generate(gen);
    if (*o) return run_oracle(oracle);
    if (*b) return run_bench(bench);
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUser;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUser;
}
