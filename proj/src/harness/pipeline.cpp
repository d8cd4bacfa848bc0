#include "tdpair/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tdpair {

using ojson = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ojson strings(const std::vector<Scalar>& xs) {
  ojson out = ojson::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

ojson subspace_json(const Subspace& w) {
  ojson out = ojson::array();
  for (const auto& v : w.vectors()) out.push_back(strings(v));
  return out;
}

ojson instance_json(const Instance& inst, const RunOptions& options) {
  const Field f = inst.pair.field();
  ojson out;
  out["name"] = inst.name;
  out["field"] = f.is_rational() ? ojson("rational") : ojson{{"prime", f.modulus()}};
  out["dim"] = inst.pair.dim();
  out["reduced_mod"] = options.reduced_mod ? ojson(*options.reduced_mod) : ojson(nullptr);
  return out;
}

ValidationOptions validation_options(std::uint64_t seed) {
  ValidationOptions v;
  v.seed = seed;
  return v;
}

/// Validation and metadata comparison. Fills `section`; returns the system on success.
std::optional<TDSystem> validate_into(const Instance& inst, std::uint64_t seed, ojson& section,
                                      std::optional<BaseInfo>& base) {
  std::ostringstream hex;
  hex << "0x" << std::hex << seed;
  section["seed"] = hex.str();
  try {
    std::vector<TDSystem> systems = validate_td_pair(inst.pair, validation_options(seed));
    TDSystem s = systems.front();
    if (inst.expected_d && *inst.expected_d != s.d) {
      throw Error(ErrorCode::DiameterMismatch, "metadata expects d = " + std::to_string(*inst.expected_d) +
                                                   ", found " + std::to_string(s.d));
    }
    base = compute_base(s);
    if (inst.expected_beta && s.field().parse(*inst.expected_beta) != base->beta) {
      throw Error(ErrorCode::InconsistentBase, "metadata expects beta = " + *inst.expected_beta + ", found " + base->beta.str());
    }
    section["status"] = "valid";
    section["d"] = s.d;
    section["standard_systems"] = systems.size();
    return s;
  } catch (const ReducibleError& e) {
    section["status"] = "invalid";
    section["error"] = to_string(e.code());
    section["message"] = e.what();
    section["witness"] = subspace_json(e.witness());
  } catch (const Error& e) {
    section["status"] = "invalid";
    section["error"] = to_string(e.code());
    section["message"] = e.what();
  }
  return std::nullopt;
}

ojson scalars_json(const TDSystem& s, const BaseInfo& base, const VarthetaSeq* vt) {
  ojson out;
  out["beta"] = base.beta.str();
  out["case"] = to_string(base.kase);
  out["theta"] = strings(s.theta);
  out["theta_star"] = strings(s.theta_star);
  out["vartheta"] = vt ? strings(vt->values) : ojson(nullptr);
  out["shape"] = shape_of(s).rho;
  out["all_nonzero"] = vt ? ojson(vt->all_nonzero) : ojson(nullptr);
  return out;
}

ojson skeleton(const Instance& inst, const RunOptions& options) {
  ojson doc;
  doc["schema_version"] = "1";
  doc["instance"] = instance_json(inst, options);
  doc["validation"] = ojson::object();
  doc["invariants"] = ojson::array();
  doc["scalars"] = nullptr;
  doc["timing_ms"] = nullptr;
  return doc;
}

std::string finish(const ojson& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::uint64_t resolve_seed(const std::string& input_bytes) {
  if (const char* env = std::getenv("TDPAIR_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (end == nullptr || *end != '\0') throw Error(ErrorCode::Usage, std::string("TDPAIR_SEED is not a number: ") + env);
    return v;
  }
  return fnv1a(input_bytes);
}

Report validate_report(const Instance& inst, const RunOptions& options) {
  ojson doc = skeleton(inst, options);
  const auto t0 = Clock::now();
  std::optional<BaseInfo> base;
  const auto s = validate_into(inst, options.seed, doc["validation"], base);
  if (s) doc["scalars"] = scalars_json(*s, *base, nullptr);
  if (options.timing) doc["timing_ms"] = {{"validate", ms_since(t0)}};
  return {finish(doc), s ? kExitOk : kExitInvalid};
}

Report verify_report(const Instance& inst, const RunOptions& options) {
  ojson doc = skeleton(inst, options);
  ojson timing;
  auto t0 = Clock::now();
  std::optional<BaseInfo> base;
  const auto s = validate_into(inst, options.seed, doc["validation"], base);
  timing["validate"] = ms_since(t0);
  if (!s) {
    if (options.timing) doc["timing_ms"] = timing;
    return {finish(doc), kExitInvalid};
  }

  CheckList checks;
  auto stage_failed = [&](const char* id, const Error& e) { checks.expect(id, false, e.what()); };

  // scalars
  t0 = Clock::now();
  std::optional<ScalarData> sd;
  try {
    sd.emplace(scalar_data(*s, *base));
    checks.append(verify_scalar_identities(*s, *sd));
  } catch (const Error& e) {
    stage_failed("SCALAR-BUILD", e);
  }
  timing["scalars"] = ms_since(t0);
  doc["scalars"] = scalars_json(*s, *base, sd ? &sd->vt : nullptr);

  // split decompositions
  t0 = Clock::now();
  const EvaluatedFamily ev(s->A(), s->theta);
  std::optional<SplitApparatus> sa;
  try {
    sa.emplace(build_split_apparatus(*s, ev, PolyFamily(s->theta)));
    checks.append(verify_split_suite(*s, *sa, ev, shape_of(*s)));
  } catch (const Error& e) {
    stage_failed("SPLIT-BUILD", e);
  }
  timing["split"] = ms_since(t0);

  // operators
  t0 = Clock::now();
  if (sa && sd) {
    try {
      const OperatorPair ops = build_operators(*s, *sa, ev, sd->vt);
      checks.append(verify_operator_identities(*s, *sa, ev, sd->vt, ops));
    } catch (const Error& e) {
      stage_failed("OPERATOR-BUILD", e);
    }
  }
  timing["operators"] = ms_since(t0);

  std::vector<CheckResult> results = checks.results();
  if (options.checks) {
    std::set<std::string> present;
    bool stage_failure = false;
    for (const auto& r : results) {
      present.insert(r.id);
      stage_failure = stage_failure || r.id.ends_with("-BUILD");
    }
    // ids of a stage that did not run cannot be told apart from typos
    std::set<std::string> wanted;
    for (const auto& id : *options.checks) {
      if (!present.count(id) && !stage_failure) throw Error(ErrorCode::Usage, "unknown check id: " + id);
      wanted.insert(id);
    }
    std::vector<CheckResult> kept;
    for (const auto& r : results)
      if (wanted.count(r.id) || r.id.ends_with("-BUILD")) kept.push_back(r);
    results = std::move(kept);
  }

  int exit_code = kExitOk;
  for (const auto& r : results) {
    ojson entry;
    entry["id"] = r.id;
    entry["status"] = to_string(r.status);
    if (!r.detail.empty()) entry["witness"] = r.detail;
    doc["invariants"].push_back(entry);
    if (r.status == CheckStatus::Fail) exit_code = kExitCheckFailed;
  }
  if (options.timing) doc["timing_ms"] = timing;
  return {finish(doc), exit_code};
}

Built build_all(const Instance& inst, std::uint64_t seed) {
  TDSystem s = validate_td_pair(inst.pair, validation_options(seed)).front();
  BaseInfo base = compute_base(s);
  VarthetaSeq vt = vartheta(s.theta, base);
  EvaluatedFamily ev(s.A(), s.theta);
  SplitApparatus sa = build_split_apparatus(s, ev, PolyFamily(s.theta));
  OperatorPair ops = build_operators(s, sa, ev, vt);
  return {std::move(s), std::move(base), std::move(vt), std::move(ev), std::move(sa), std::move(ops)};
}

Matrix select_operator(const Built& b, const std::string& which) {
  if (which == "delta") return b.ops.Delta;
  if (which == "delta-inv") return b.ops.Delta_inv;
  if (which == "psi") return b.ops.Psi;
  if (which == "commutator-LPsi") return commutator_L_psi(b.sa, b.ops.Psi);
  throw Error(ErrorCode::Usage, "unknown operator: " + which);
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
    os << "\n";
  }
  return os.str();
}

}  // namespace tdpair
