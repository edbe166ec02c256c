// Copyright 2026 The bbb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bbb/commands.h"

#include <algorithm>
#include <random>

#include "bbb/matroid.h"
#include "bbb/mconvex.h"
#include "bbb/packing.h"
#include "bbb/tdi.h"

namespace bbb {
namespace {

Json Ids(const Digraph& d, const VertexSet& set) {
  Json list = Json::array();
  for (int v : set.Members()) list.push_back(d.vertex_id(v));
  return list;
}

Json VectorJson(const DegreeVector& x) {
  Json list = Json::array();
  for (int v : x) list.push_back(v);
  return list;
}

Json WitnessJson(const Instance& inst, const InfeasibilityWitness& w) {
  Json j;
  j["condition"] = ConditionName(w.condition);
  j["vertex"] = inst.digraph().vertex_id(w.vertex);
  return j;
}

Json ConditionsJson(const Instance& inst, const BibranchingReport& report) {
  Json list = Json::array();
  for (const ConditionResult& c : report.conditions) {
    Json j;
    j["condition"] = ConditionName(c.condition);
    j["holds"] = c.holds;
    if (c.witness) {
      j["witness"] = inst.digraph().vertex_id(*c.witness);
    } else {
      j["witness"] = nullptr;
    }
    list.push_back(std::move(j));
  }
  return list;
}

CommandResult Report(const Instance& inst, const char* status, Json result,
                     Json trace, int exit_code) {
  CommandResult out;
  out.report["instance_hash"] = InstanceHash(inst);
  out.report["status"] = status;
  out.report["result"] = std::move(result);
  out.report["trace"] = std::move(trace);
  out.exit_code = exit_code;
  return out;
}

Json ArcSetsJson(const std::vector<ArcSet>& sets) {
  Json list = Json::array();
  for (const ArcSet& s : sets) list.push_back(ArcsToJson(s));
  return list;
}

Json MinMaxJson(const Instance& inst, const MinMaxWitness& w) {
  const Digraph& d = inst.digraph();
  Json j;
  j["k"] = w.k;
  j["t_min"] = w.t_min;
  j["t_argmin"] = w.t_argmin >= 0 ? Json(d.vertex_id(w.t_argmin)) : Json();
  j["s_min"] = w.s_min;
  j["s_argmin"] = w.s_argmin >= 0 ? Json(d.vertex_id(w.s_argmin)) : Json();
  j["bicut_min"] = w.bicut_min;
  j["bicut_u"] = w.bicut_u.universe() ? Ids(d, w.bicut_u) : Json::array();
  return j;
}

Json TdiSystemJson(const Instance& inst, const TdiSystemReport& r) {
  Json j;
  j["passed"] = r.passed;
  j["primal_value"] = ToString(r.primal_value);
  j["dual_lp_value"] = ToString(r.dual_lp_value);
  j["strong_duality"] = r.strong_duality;
  j["integral_dual_found"] = r.integral_dual_found;
  Json y = Json::array();
  const DualSolution& dual = r.integral_dual;
  for (size_t i = 0; i < dual.y.size(); ++i) {
    if (dual.y[i] == 0) continue;
    Json term;
    term["set"] = Ids(inst.digraph(), dual.family[i]);
    term["y"] = ToString(dual.y[i]);
    y.push_back(std::move(term));
  }
  j["dual_y"] = std::move(y);
  Json z = Json::array();
  for (size_t a = 0; a < dual.z.size(); ++a) {
    if (dual.z[a] == 0) continue;
    Json term;
    term["arc"] = a;
    term["z"] = ToString(dual.z[a]);
    z.push_back(std::move(term));
  }
  j["dual_z"] = std::move(z);
  if (r.integral_dual_found) j["dual_objective"] = ToString(dual.objective);
  j["nodes"] = r.nodes;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

// A random b-branching: arcs in shuffled order, each kept with
// probability 1/2 when it stays independent.
ArcSet RandomBBranching(const Digraph& d, const DegreeVector& b,
                        std::mt19937_64& rng) {
  PartitionMatroid partition(d, b);
  SparsityMatroid sparsity(d, b);
  std::vector<int> order(d.num_arcs());
  for (int a = 0; a < d.num_arcs(); ++a) order[a] = a;
  std::shuffle(order.begin(), order.end(), rng);
  ArcSet arcs = d.NoArcs();
  for (int a : order) {
    if (rng() & 1) continue;
    if (partition.CanAdd(arcs, a) && sparsity.CanAdd(arcs, a)) arcs.Insert(a);
  }
  return arcs;
}

Json MnatJson(const std::string& name, const MnatReport& r) {
  Json j;
  j["function"] = name;
  j["triples"] = r.triples;
  j["pairs"] = r.pairs;
  j["passed"] = r.passed();
  if (r.failure) {
    Json f;
    f["x"] = VectorJson(r.failure->x);
    f["y"] = VectorJson(r.failure->y);
    f["u"] = r.failure->u;
    j["counterexample"] = std::move(f);
  }
  return j;
}

CommandResult CheckMconvex(const Instance& inst, uint64_t seed, long trials) {
  Json functions = Json::array();
  bool passed = true;
  long calls = 0;
  auto run = [&](const std::string& label, BBranchingOracle oracle) {
    DegreeVector upper = oracle.capacity();
    DegreeVector above = upper;
    for (int& u : above) ++u;
    MnatReport rf = CheckMnatExchange(
        [&oracle](const DegreeVector& x) { return oracle.EvalF(x); }, upper,
        seed, trials);
    MnatReport rg = CheckMnatExchange(
        [&oracle](const DegreeVector& x) { return oracle.EvalG(x); }, above,
        seed, trials);
    passed = passed && rf.passed() && rg.passed();
    functions.push_back(MnatJson("f_" + label, rf));
    functions.push_back(MnatJson("g_" + label, rg));
    calls += oracle.oracle_calls();
  };
  run("D", BBranchingOracle(inst.digraph(), inst.b(), inst.weights()));
  run("T", BBranchingOracle::ForSide(inst, OracleSide::kTBranching));
  run("S", BBranchingOracle::ForSide(inst, OracleSide::kSCobranching));
  Json result;
  result["passed"] = passed;
  result["functions"] = std::move(functions);
  Json trace;
  trace["oracle_calls"] = calls;
  return Report(inst, passed ? "ok" : "fail", std::move(result),
                std::move(trace),
                passed ? kExitOk : kExitTheoremViolation);
}

// The source-component condition against exhaustive existence, for every
// prescription pair on the whole arc set.
Json TwoPartitionSweep(const Digraph& d, const DegreeVector& b,
                       bool* passed) {
  Json j;
  if (d.num_arcs() > 14 || !SplitIntoTwoBBranchings(d, b)) {
    j["applicable"] = false;
    return j;
  }
  j["applicable"] = true;
  const int n = d.num_vertices();
  const DegreeVector in = InDegrees(d, d.AllArcs());
  DegreeVector b1(n, 0);
  long checked = 0, mismatches = 0;
  Json first;
  while (true) {
    DegreeVector b2(n);
    bool ok = true;
    for (int v = 0; v < n; ++v) {
      b2[v] = in[v] - b1[v];
      ok = ok && b2[v] >= 0 && b2[v] <= b[v];
    }
    if (ok) {
      ++checked;
      bool predicted = TwoPartition(d, b, b1, b2).feasible;
      bool exists = BruteForceTwoPartitionExists(d, b, b1, b2);
      if (predicted != exists) {
        if (mismatches++ == 0) {
          first["b1"] = VectorJson(b1);
          first["b2"] = VectorJson(b2);
          first["condition"] = predicted;
          first["exists"] = exists;
        }
      }
    }
    int i = 0;
    while (i < n && b1[i] == std::min(b[i], in[i])) b1[i++] = 0;
    if (i == n) break;
    ++b1[i];
  }
  j["prescriptions"] = checked;
  j["mismatches"] = mismatches;
  if (mismatches) {
    j["counterexample"] = std::move(first);
    *passed = false;
  }
  return j;
}

CommandResult CheckExchange(const Instance& inst, uint64_t seed, long trials) {
  const Digraph& d = inst.digraph();
  const DegreeVector& b = inst.b();
  std::mt19937_64 rng(seed);
  long runs = 0, case_a = 0, case_b = 0, draws = 0;
  bool passed = true;
  Json failure;
  while (runs < trials && draws < 50 * trials && passed) {
    ++draws;
    ArcSet b1 = RandomBBranching(d, b, rng);
    ArcSet b2 = RandomBBranching(d, b, rng);
    DegreeVector d1 = InDegrees(d, b1), d2 = InDegrees(d, b2);
    for (int s = 0; s < d.num_vertices() && runs < trials; ++s) {
      if (d1[s] >= d2[s]) continue;
      ++runs;
      try {
        ExchangeResult r = ExchangeBBranchings(d, b, b1, b2, s);
        (r.which_case == 'b' ? case_b : case_a)++;
      } catch (const TheoremViolation& e) {
        passed = false;
        failure["b1"] = ArcsToJson(b1);
        failure["b2"] = ArcsToJson(b2);
        failure["s"] = d.vertex_id(s);
        failure["error"] = e.what();
        break;
      }
    }
  }
  Json result;
  result["exchanges"] = runs;
  result["case_a"] = case_a;
  result["case_b"] = case_b;
  if (!passed) result["counterexample"] = std::move(failure);
  result["two_partition"] = TwoPartitionSweep(d, b, &passed);
  result["passed"] = passed;
  Json trace;
  trace["draws"] = draws;
  return Report(inst, passed ? "ok" : "fail", std::move(result),
                std::move(trace),
                passed ? kExitOk : kExitTheoremViolation);
}

CommandResult CheckIdp(const Instance& inst, uint64_t seed, long trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(-9, 9);
  long done = 0, fallbacks = 0;
  bool passed = true;
  Json failure;
  if (!FindInfeasibility(inst)) {
    for (long i = 0; i < trials && passed; ++i) {
      const int k = 1 + static_cast<int>(i % 3);
      std::vector<Rational> w;
      for (int a = 0; a < inst.num_arcs(); ++a) w.push_back(weight(rng));
      std::optional<std::vector<int>> x = ScaledPolytopeVertex(inst, k, w);
      if (!x) continue;
      DecompositionResult r = IntegerDecompositionCheck(inst, k, *x);
      ++done;
      fallbacks += r.exhaustive_fallback;
      if (!r.precondition_ok || !r.verified) {
        passed = false;
        failure["k"] = k;
        failure["x"] = VectorJson(*x);
        if (!r.failed_row.empty()) failure["failed_row"] = r.failed_row;
      }
    }
  }
  Json result;
  result["passed"] = passed;
  result["decompositions"] = done;
  if (!passed) result["counterexample"] = std::move(failure);
  Json trace;
  trace["exhaustive_fallbacks"] = fallbacks;
  return Report(inst, passed ? "ok" : "fail", std::move(result),
                std::move(trace),
                passed ? kExitOk : kExitTheoremViolation);
}

}  // namespace

CommandResult Execute(const Json& echo,
                      const std::function<CommandResult()>& body) {
  CommandResult inner;
  const char* status = nullptr;
  try {
    inner = body();
  } catch (const InputError& e) {
    status = "input_error";
    inner.exit_code = kExitInputError;
    inner.report["error"] = e.what();
  } catch (const GuardError& e) {
    status = "guard_exceeded";
    inner.exit_code = kExitGuard;
    inner.report["error"] = e.what();
  } catch (const TheoremViolation& e) {
    status = "theorem_violation";
    inner.exit_code = kExitTheoremViolation;
    inner.report["error"] = e.what();
  }
  CommandResult out;
  out.report["command"] = echo;
  if (status) out.report["status"] = status;
  for (auto& item : inner.report.items()) {
    out.report[item.key()] = std::move(item.value());
  }
  out.report["exit_code"] = inner.exit_code;
  out.exit_code = inner.exit_code;
  return out;
}

CommandResult RunValidate(const Instance& inst, const ArcSet& arcs) {
  BibranchingReport report = CheckBBibranching(inst, arcs);
  AlternativeReport alt = CheckAlternativeDescription(inst, arcs);
  Json result;
  result["valid"] = report.valid;
  result["weight"] = ToString(WeightOf(inst, arcs));
  result["conditions"] = ConditionsJson(inst, report);
  Json a;
  a["holds"] = alt.valid;
  a["t_side_branching"] = alt.t_side_branching;
  a["s_side_cobranching"] = alt.s_side_cobranching;
  a["t_indegree"] = alt.t_indegree;
  a["s_outdegree"] = alt.s_outdegree;
  result["alternative_description"] = std::move(a);
  if (report.valid) {
    result["minimal"] = PruneToMinimal(inst, arcs) == arcs;
  }
  return Report(inst, report.valid ? "valid" : "invalid", std::move(result),
                Json::object(), kExitOk);
}

CommandResult RunSolve(const Instance& inst, Method method,
                       const CuttingPlaneOptions& options) {
  ShortestResult r = SolveShortest(inst, method, options);
  Json trace;
  trace["lp_solves"] = r.lp_solves;
  trace["rows_added"] = r.cuts;
  trace["fallback_used"] = r.fallback_used;
  trace["oracle_calls"] = r.oracle_calls;
  trace["cycles_canceled"] = r.cycles_canceled;
  Json result;
  result["method"] = MethodName(method);
  if (!r.solution) {
    result["witness"] = WitnessJson(inst, *r.witness);
    return Report(inst, "infeasible", std::move(result), std::move(trace),
                  kExitInfeasible);
  }
  result["value"] = ToString(r.solution->weight);
  result["arcs"] = ArcsToJson(r.solution->arcs);
  result["certificate"] = ConditionsJson(inst, r.solution->certificate);
  Json agreement = Json::array();
  for (const MethodValue& mv : r.values) {
    Json j;
    j["method"] = MethodName(mv.method);
    j["value"] = ToString(mv.value);
    agreement.push_back(std::move(j));
  }
  result["agreement"] = std::move(agreement);
  CommandResult out = Report(inst, "ok", std::move(result), std::move(trace),
                             kExitOk);
  if (options.dump_lp) out.report["lp_text"] = r.lp_text;
  return out;
}

CommandResult RunPack(const Instance& inst) {
  PackingCertificate cert = PackBBibranchings(inst);
  if (!cert.verified) throw TheoremViolation("packing certificate failed");
  Json result;
  result["k"] = cert.k;
  result["witness"] = MinMaxJson(inst, cert.witness);
  result["bibranchings"] = ArcSetsJson(cert.bibranchings);
  result["cross_classes"] = ArcSetsJson(cert.cross_classes);
  result["t_branchings"] = ArcSetsJson(cert.t_branchings);
  result["s_cobranchings"] = ArcSetsJson(cert.s_cobranchings);
  result["verified"] = cert.verified;
  Json trace;
  trace["peel_lp_solves"] = cert.partition.peel_lp_solves;
  trace["exhaustive_fallback"] = cert.partition.exhaustive_fallback;
  trace["literal_chain_holds"] = cert.partition.literal_chain_holds;
  return Report(inst, "ok", std::move(result), std::move(trace), kExitOk);
}

CommandResult RunPackingNumber(const Instance& inst) {
  MinMaxWitness w = PackingNumber(inst);
  return Report(inst, "ok", MinMaxJson(inst, w), Json::object(), kExitOk);
}

const char* CheckKindName(CheckKind kind) {
  switch (kind) {
    case CheckKind::kTdi:
      return "tdi";
    case CheckKind::kMconvex:
      return "mconvex";
    case CheckKind::kExchange:
      return "exchange";
    case CheckKind::kIdp:
      return "idp";
  }
  return "?";
}

CheckKind ParseCheckKind(const std::string& name) {
  for (CheckKind k : {CheckKind::kTdi, CheckKind::kMconvex,
                      CheckKind::kExchange, CheckKind::kIdp}) {
    if (name == CheckKindName(k)) return k;
  }
  throw InputError("unknown check '" + name + "'");
}

CommandResult RunCheck(const Instance& inst, CheckKind kind, uint64_t seed,
                       long trials) {
  if (trials < 0) throw InputError("trials must be nonnegative");
  switch (kind) {
    case CheckKind::kTdi: {
      TdiReport r = TdiSpotCheck(inst);
      Json result;
      result["passed"] = r.passed;
      result["unboxed"] = TdiSystemJson(inst, r.unboxed);
      result["boxed"] = TdiSystemJson(inst, r.boxed);
      return Report(inst, r.passed ? "ok" : "fail", std::move(result),
                    Json::object(),
                    r.passed ? kExitOk : kExitTheoremViolation);
    }
    case CheckKind::kMconvex:
      return CheckMconvex(inst, seed, trials);
    case CheckKind::kExchange:
      return CheckExchange(inst, seed, trials);
    case CheckKind::kIdp:
      return CheckIdp(inst, seed, trials);
  }
  throw InputError("unknown check");
}

std::string RenderReport(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace bbb
