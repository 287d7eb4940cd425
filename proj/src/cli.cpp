#include "branchnum/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <vector>

#include "branchnum/branch.hpp"
#include "branchnum/cost_model.hpp"
#include "branchnum/matrix_file.hpp"
#include "branchnum/report_json.hpp"

namespace branchnum::cli {

namespace {

struct Settings {
  std::string file;
  std::string mode = "both";
  std::string algo = "auto";
  std::string kernel = "auto";
  bool verify = false;
  bool json = false;
  std::string batch_dir;
  std::vector<std::string> cost;
  std::size_t threads = 1;
  bool no_filter = false;
  bool no_budget = false;
  bool no_fast_path = false;
  std::uint64_t guard = kDefaultSearchGuard;
};

// Accepts "256" or "2^8".
BigInt parse_order(const std::string& s) {
  if (const auto caret = s.find('^'); caret != std::string::npos) {
    const BigInt base(s.substr(0, caret));
    return big_pow(base, std::stoull(s.substr(caret + 1)));
  }
  return BigInt(s);
}

struct VerifyResult {
  Json detail;
  bool mismatch = false;
};

// Checks the engine against both oracles in every direction that was computed.
VerifyResult verify(const FqMatrix& m, const BranchReport& report, std::uint64_t guard) {
  VerifyResult result;
  result.detail = Json::object();
  const FqMatrix mt = transpose(m);
  auto check = [&](const char* name, std::size_t value, const FqMatrix& forward, const FqMatrix& code_matrix) {
    const std::size_t exhaustive = *branch_exhaustive(forward, guard).branch_diff;
    const std::size_t coding = min_distance_code(code_matrix, guard);
    Json j;
    j["engine"] = value;
    j["exhaustive"] = exhaustive;
    j["min_distance_code"] = coding;
    j["agree"] = value == exhaustive && value == coding;
    result.mismatch = result.mismatch || !j["agree"].get<bool>();
    result.detail[name] = std::move(j);
  };
  // x . [I | M^T] has weight w(x) + w(Mx), so the code of M^T measures B_d(M).
  if (report.branch_diff) check("differential", *report.branch_diff, m, mt);
  if (report.branch_lin) check("linear", *report.branch_lin, mt, m);
  return result;
}

void print_text(std::ostream& out, const std::string& source, const FqMatrix& m, const BranchReport& r,
                const std::optional<VerifyResult>& verified) {
  out << "matrix: " << source << '\n';
  out << "field: " << m.field().describe() << ", n = " << r.n << '\n';
  out << "algorithm: " << to_string(r.algorithm) << " (kernel " << r.kernel << ", "
      << r.threads << (r.threads == 1 ? " thread" : " threads") << ")\n";
  if (r.branch_diff) out << "differential branch number: " << *r.branch_diff << '\n';
  if (r.branch_lin) out << "linear branch number: " << *r.branch_lin << '\n';
  out << "vectors evaluated: " << r.vectors_evaluated
      << (r.counters_deterministic ? "" : " (varies with thread scheduling)") << '\n';
  for (std::size_t k = 0; k < r.vectors_per_weight.size(); ++k) {
    if (r.vectors_per_weight[k] != 0) out << "  weight " << k + 1 << ": " << r.vectors_per_weight[k] << '\n';
  }
  out << "field multiplications: " << r.field_mults;
  if (r.field_mults_saved != 0) out << " (" << r.field_mults_saved << " skipped by weight budget)";
  out << '\n';
  out << "elapsed: " << std::fixed << std::setprecision(3)
      << std::chrono::duration<double>(r.elapsed).count() << " s\n";
  if (verified) {
    out << "verification: " << (verified->mismatch ? "MISMATCH " : "ok ") << verified->detail.dump() << '\n';
  }
  const auto headline = r.branch_diff ? r.branch_diff : r.branch_lin;
  out << "branch number: " << *headline << " ("
      << (r.classification ? std::string(to_string(*r.classification)) : std::string("undetermined"))
      << ")\n";
}

void print_cost(std::ostream& out, const CostEstimate& e, bool json) {
  if (json) {
    out << to_json(e).dump() << '\n';
    return;
  }
  out << std::fixed << std::setprecision(2);
  out << "n = " << e.n << ", q = " << e.q << '\n';
  out << "exhaustive approach: 2^" << e.log2_exhaustive << " field multiplications ("
      << e.mults_exhaustive << ")\n";
  out << "proposed algorithm: 2^" << e.log2_new << " field multiplications (" << e.mults_new << ")\n";
  out << "involutory/Hadamard path: 2^" << log2_big(e.mults_new_involutory) << " field multiplications ("
      << e.mults_new_involutory << ")\n";
}

struct Outcome {
  int code = kOk;
  Json json;
  std::string message;
};

Outcome process(const std::filesystem::path& path, const Settings& s, std::ostream* text_out) {
  Outcome outcome;
  try {
    const MatrixFile parsed = parse_matrix_file(path);
    EngineOptions options;
    options.class_filter = !s.no_filter;
    options.weight_budget = !s.no_budget;
    options.structural_fast_path = !s.no_fast_path;
    options.threads = s.threads;
    if (s.kernel == "scalar") options.isa = simd::Isa::Scalar;
    if (s.kernel == "avx2") options.isa = simd::Isa::Avx2;
    const Mode mode = s.mode == "diff" ? Mode::Differential : s.mode == "lin" ? Mode::Linear : Mode::Both;
    const AlgoSelector algo = s.algo == "exhaustive" ? AlgoSelector::Exhaustive : AlgoSelector::New;

    const BranchReport report = analyze(parsed.matrix, mode, algo, options, s.guard);
    std::optional<VerifyResult> verified;
    if (s.verify) verified = verify(parsed.matrix, report, s.guard);

    outcome.json = to_json(report);
    outcome.json["file"] = path.string();
    if (verified) outcome.json["verification"] = verified->detail;
    if (text_out) print_text(*text_out, path.string(), parsed.matrix, report, verified);
    if (verified && verified->mismatch) outcome.code = kVerificationMismatch;
  } catch (const Error& e) {
    outcome.code = exit_code_for(e.code());
    outcome.message = e.what();
    outcome.json = Json::object();
    outcome.json["file"] = path.string();
    outcome.json["error"] = std::string(to_string(e.code()));
    outcome.json["message"] = e.what();
    outcome.json["exit_code"] = outcome.code;
  } catch (const std::exception& e) {
    outcome.code = kFailure;
    outcome.message = e.what();
    outcome.json = Json::object();
    outcome.json["file"] = path.string();
    outcome.json["error"] = "Failure";
    outcome.json["message"] = e.what();
    outcome.json["exit_code"] = outcome.code;
  }
  return outcome;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::EntryOutOfField:
    case ErrorCode::NotPrime:
    case ErrorCode::Reducible:
    case ErrorCode::DegreeMismatch:
      return kParseError;
    case ErrorCode::Singular:
      return kSingular;
    case ErrorCode::VerificationMismatch:
      return kVerificationMismatch;
    case ErrorCode::TooLarge:
      return kResourceGuard;
    default:
      return kFailure;
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> argv(args.begin(), args.end());
  if (!argv.empty() && argv.front() == "run") argv.erase(argv.begin());

  Settings s;
  CLI::App app{"Differential and linear branch numbers of matrices over GF(p^m)", "branchnum"};
  app.add_option("file", s.file, "Matrix file");
  app.add_option("--mode", s.mode, "Which branch numbers to compute")
      ->check(CLI::IsMember({"diff", "lin", "both"}));
  app.add_option("--algo", s.algo, "Search algorithm (auto = new)")
      ->check(CLI::IsMember({"new", "exhaustive", "auto"}));
  app.add_flag("--verify", s.verify, "Cross-check against the exhaustive and coding-theory oracles");
  app.add_flag("--json", s.json, "Emit one JSON object per matrix");
  app.add_option("--batch", s.batch_dir, "Process every matrix file in a directory (JSON lines)");
  app.add_option("--cost", s.cost, "Print the cost estimate for order n and field size q")
      ->expected(2);
  app.add_option("--threads", s.threads, "Shard count for the representative search")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
  app.add_flag("--no-filter", s.no_filter, "Disable weight-class filtering");
  app.add_flag("--no-budget", s.no_budget, "Evaluate every output row");
  app.add_flag("--no-fast-path", s.no_fast_path, "Always evaluate both M and its inverse");
  app.add_option("--kernel", s.kernel, "Inner kernel")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  app.add_option("--guard", s.guard, "Largest q^n the exhaustive oracles may enumerate");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  if (s.kernel == "avx2" && !simd::available(simd::Isa::Avx2)) {
    err << "error: this CPU does not support AVX2\n";
    return kFailure;
  }

  if (!s.cost.empty()) {
    try {
      const std::size_t n = std::stoull(s.cost[0]);
      const BigInt q = parse_order(s.cost[1]);
      if (n < 1 || q < 2) throw std::invalid_argument("n >= 1 and q >= 2 required");
      print_cost(out, estimate(n, q), s.json);
      return kOk;
    } catch (const std::exception& e) {
      err << "error: invalid --cost arguments: " << e.what() << '\n';
      return kParseError;
    }
  }

  if (!s.batch_dir.empty()) {
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(s.batch_dir, ec)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    if (ec) {
      err << "error: cannot read directory " << s.batch_dir << ": " << ec.message() << '\n';
      return kParseError;
    }
    std::sort(files.begin(), files.end());
    int worst = kOk;
    for (const auto& f : files) {
      const Outcome o = process(f, s, nullptr);
      out << o.json.dump() << '\n';
      worst = std::max(worst, o.code);
    }
    return worst;
  }

  if (s.file.empty()) {
    err << "error: a matrix file, --batch <dir>, or --cost <n> <q> is required\n" << app.help();
    return kParseError;
  }

  const Outcome o = process(s.file, s, s.json ? nullptr : &out);
  if (s.json) out << o.json.dump() << '\n';
  if (o.code != kOk) {
    if (!o.message.empty()) err << "error: " << o.message << '\n';
    if (o.code == kVerificationMismatch) err << "error: verification mismatch\n";
  }
  return o.code;
}

}  // namespace branchnum::cli
