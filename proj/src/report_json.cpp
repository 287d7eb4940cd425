#include "branchnum/report_json.hpp"

#include <charconv>
#include <string>

#include "branchnum/errors.hpp"

namespace branchnum {

namespace {

std::uint64_t parse_count(const Json& j, const char* key) {
  const auto& s = j.at(key).get_ref<const std::string&>();
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::Parse, std::string("field '") + key + "' is not a decimal count");
  }
  return v;
}

Classification classification_from(const std::string& s) {
  if (s == "MDS") return Classification::MDS;
  if (s == "NearMDS") return Classification::NearMDS;
  if (s == "Other") return Classification::Other;
  throw Error(ErrorCode::Parse, "unknown classification '" + s + "'");
}

Algorithm algorithm_from(const std::string& s) {
  if (s == "NewAlgorithm") return Algorithm::NewAlgorithm;
  if (s == "NewAlgorithmInvolutoryPath") return Algorithm::NewAlgorithmInvolutoryPath;
  if (s == "Exhaustive") return Algorithm::Exhaustive;
  throw Error(ErrorCode::Parse, "unknown algorithm '" + s + "'");
}

}  // namespace

Json to_json(const BranchReport& r) {
  Json j;
  j["n"] = r.n;
  j["q"] = r.q;
  j["branch_diff"] = r.branch_diff ? Json(*r.branch_diff) : Json(nullptr);
  j["branch_lin"] = r.branch_lin ? Json(*r.branch_lin) : Json(nullptr);
  j["classification"] = r.classification ? Json(std::string(to_string(*r.classification))) : Json(nullptr);
  j["algorithm"] = std::string(to_string(r.algorithm));
  j["vectors_evaluated"] = std::to_string(r.vectors_evaluated);
  j["field_mults"] = std::to_string(r.field_mults);
  j["field_mults_saved"] = std::to_string(r.field_mults_saved);
  Json per_weight = Json::array();
  for (auto v : r.vectors_per_weight) per_weight.push_back(std::to_string(v));
  j["vectors_per_weight"] = std::move(per_weight);
  j["counters_deterministic"] = r.counters_deterministic;
  j["kernel"] = r.kernel;
  j["threads"] = r.threads;
  j["elapsed_ns"] = std::to_string(r.elapsed.count());
  return j;
}

BranchReport report_from_json(const Json& j) {
  try {
    BranchReport r;
    r.n = j.at("n").get<std::size_t>();
    r.q = j.at("q").get<std::uint64_t>();
    if (!j.at("branch_diff").is_null()) r.branch_diff = j["branch_diff"].get<std::size_t>();
    if (!j.at("branch_lin").is_null()) r.branch_lin = j["branch_lin"].get<std::size_t>();
    if (!j.at("classification").is_null()) {
      r.classification = classification_from(j["classification"].get<std::string>());
    }
    r.algorithm = algorithm_from(j.at("algorithm").get<std::string>());
    r.vectors_evaluated = parse_count(j, "vectors_evaluated");
    r.field_mults = parse_count(j, "field_mults");
    r.field_mults_saved = parse_count(j, "field_mults_saved");
    for (const auto& v : j.at("vectors_per_weight")) {
      r.vectors_per_weight.push_back(std::stoull(v.get<std::string>()));
    }
    r.counters_deterministic = j.at("counters_deterministic").get<bool>();
    r.kernel = j.at("kernel").get<std::string>();
    r.threads = j.at("threads").get<std::size_t>();
    r.elapsed = std::chrono::nanoseconds(parse_count(j, "elapsed_ns"));
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed report: ") + e.what());
  }
}

Json to_json(const CostEstimate& e) {
  Json j;
  j["n"] = e.n;
  j["q"] = to_decimal(e.q);
  j["mults_exhaustive"] = to_decimal(e.mults_exhaustive);
  j["mults_new"] = to_decimal(e.mults_new);
  j["mults_new_involutory"] = to_decimal(e.mults_new_involutory);
  j["log2_exhaustive"] = e.log2_exhaustive;
  j["log2_new"] = e.log2_new;
  return j;
}

}  // namespace branchnum
