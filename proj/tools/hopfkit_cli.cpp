// Command-line front end.  Subcommands assemble jobs from JSON inputs (or
// named builtins), run the library audits, and emit deterministic reports:
// sorted keys, string rationals, fixed iteration order.  Exit code 0 iff
// every requested check passed; otherwise the first failing check goes to
// stderr.  Reports are byte-identical across reruns except for timing_ms.

#include "hopfkit/frobenius.hpp"
#include "hopfkit/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace hopfkit;

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

// x ⊗ y ↦ t ·₂ w  (second leg multiplied by w on the right)
Vec second_leg_mul(const FinAlgebra& a, const Vec& t, const Vec& w) {
  std::size_t d = a.dim;
  Vec out(d * d, Rat(0));
  std::vector<Vec> qw(d);
  for (std::size_t e = 0; e < t.size(); ++e) {
    if (rat_is_zero(t[e])) continue;
    std::size_t p = e / d, q = e % d;
    if (qw[q].empty()) qw[q] = a.mul(unit_vec(d, q), w);
    for (std::size_t r = 0; r < d; ++r)
      if (!rat_is_zero(qw[q][r])) out[p * d + r] += t[e] * qw[q][r];
  }
  return out;
}

Vec first_leg_mul(const FinAlgebra& a, const Vec& t, const Vec& v) {
  std::size_t d = a.dim;
  Vec out(d * d, Rat(0));
  std::vector<Vec> vp(d);
  for (std::size_t e = 0; e < t.size(); ++e) {
    if (rat_is_zero(t[e])) continue;
    std::size_t p = e / d, q = e % d;
    if (vp[p].empty()) vp[p] = a.mul(v, unit_vec(d, p));
    for (std::size_t r = 0; r < d; ++r)
      if (!rat_is_zero(vp[p][r])) out[r * d + q] += t[e] * vp[p][r];
  }
  return out;
}

// Quasibase equation on random (x, y), beyond the all-basis-pairs check in
// validate_certificate.  Deterministically seeded; skipped under --seedless.
bool spot_check(const ExtensionPair& p, const TensorSquare& t2, const QuasibaseCertificate& c,
                std::uint32_t seed, int trials) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::size_t d = p.big.dim;
  bool left = c.side == "left";
  for (int tr = 0; tr < trials; ++tr) {
    Vec x(d), y(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = coeff(rng);
    for (std::size_t i = 0; i < d; ++i) y[i] = coeff(rng);
    Vec outer(d * d, Rat(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) outer[i * d + j] = x[i] * y[j];
    Vec sum(d * d, Rat(0));
    for (const QuasibasePair& qp : c.pairs) {
      Vec amb = left ? second_leg_mul(p.big, qp.t, p.big.mul(qp.beta.apply(x), y))
                     : first_leg_mul(p.big, qp.t, p.big.mul(x, qp.beta.apply(y)));
      vec_axpy(sum, Rat(1), amb);
    }
    if (t2.project_vec(outer) != t2.project_vec(sum)) return false;
  }
  return true;
}

std::vector<std::string> side_list(const std::string& side) {
  if (side == "left" || side == "right") return {side};
  if (side == "both") return {"left", "right"};
  throw CLI::ValidationError("--side must be left, right or both");
}

struct PairRun {
  AuditReport checks;
  Json body;
  std::map<std::string, Json> certificates;
};

// The full pipeline behind `group-pair` and `corpus`: normality oracle and
// criteria, Markov audit, Schneider dims, depth-two decisions, and the
// depth2 ⇔ normal biconditional.  `thorough` re-validates each certificate
// from scratch and adds randomized spot checks; the corpus sweep skips both
// (decide_depth2 already validates every certificate it returns).
PairRun run_group_pair(const GroupTable& g, const std::vector<std::size_t>& sub,
                       const std::string& side, bool seedless, bool embed_certs, bool thorough) {
  PairRun out;
  std::string wit;
  if (!check_subgroup(g, sub, &wit)) throw std::invalid_argument("not a subgroup: " + wit);

  bool normal_oracle = is_normal_subgroup(g, sub);
  HopfPair p = group_hopf_pair(g, sub);
  IntegralData ints = find_integrals(p);
  NormalityVerdict nv = check_normality(p, ints);
  FrobeniusSystem fs = build_frobenius_system(p, ints);
  MarkovAudit ma = markov_audit(p, ints, fs);
  TensorSquare t2 = tensor_square(p.pair);
  SchneiderMaps sch = schneider_maps(p, t2);

  out.body["group"] = g.name;
  out.body["subgroup"] = sub;
  out.body["order"] = g.order;
  out.body["subgroup_order"] = sub.size();
  out.body["index"] = rat_to_string(fs.index);
  out.body["normal_oracle"] = normal_oracle;
  out.body["criteria"] = {{"adjoint_right", nv.adjoint_right},
                         {"ideal_eq", nv.ideal_eq},
                         {"central_integral", nv.central_integral}};
  out.body["markov"] = report_to_json(ma.report);
  out.body["schneider"] = {{"dim_h_mod_kh", sch.dim_h_mod_kh},
                          {"dim_h_mod_hk", sch.dim_h_mod_hk},
                          {"right_bijective", sch.right_bijective},
                          {"left_bijective", sch.left_bijective}};

  for (const AuditClause& c : ma.report.clauses)
    out.checks.add("markov/" + c.name, c.pass, c.witness);
  out.checks.add("index_is_order_ratio", fs.index == rat(long(g.order), long(sub.size())),
                 rat_to_string(fs.index));
  out.checks.add("normality_criteria_agree", nv.agree(), "");
  out.checks.add("normality_matches_oracle", nv.agree() && nv.adjoint_right == normal_oracle,
                 normal_oracle ? "oracle: normal" : "oracle: not normal");
  if (normal_oracle)
    out.checks.add("schneider_normal",
                   sch.right_bijective && sch.left_bijective &&
                       Rat(long(sch.dim_h_mod_kh)) == fs.index &&
                       Rat(long(sch.dim_h_mod_hk)) == fs.index,
                   "");

  Json d2;
  for (const std::string& s : side_list(side)) {
    std::optional<QuasibaseCertificate> cert = decide_depth2(p.pair, s, t2);
    Json entry;
    entry["present"] = cert.has_value();
    out.checks.add("depth2_" + s + "_matches_normality", cert.has_value() == normal_oracle,
                   cert ? "certificate with " + std::to_string(cert->pairs.size()) + " pairs"
                        : "no quasibases");
    if (cert) {
      entry["pairs"] = cert->pairs.size();
      if (thorough) {
        AuditReport val = validate_certificate(*cert, p.pair);
        entry["valid"] = val.ok();
        out.checks.add("certificate_" + s + "_valid", val.ok(), val.first_failure());
        if (!seedless)
          out.checks.add("spot_checks_" + s,
                         spot_check(p.pair, t2, *cert,
                                    static_cast<std::uint32_t>(g.order * 131 + sub.size()), 2),
                         "2 random quasibase probes");
      }
      if (embed_certs) out.certificates[s] = certificate_to_json(*cert, p.pair);
    }
    d2[s] = std::move(entry);
  }
  out.body["depth2"] = std::move(d2);
  out.body["checks"] = report_to_json(out.checks);
  return out;
}

Json make_report(Json job, const std::string& input_bytes, Json body, double ms) {
  Json r;
  r["schema"] = "report/v1";
  r["tool"] = "hopfkit";
  r["version"] = toolkit_version;
  r["job"] = std::move(job);
  r["input_hash"] = content_hash(input_bytes);
  r["result"] = std::move(body);
  r["timing_ms"] = ms;
  return r;
}

int finish(const Json& report, const AuditReport& checks, const std::string& out_path,
           bool json_out) {
  if (!out_path.empty()) write_file(out_path, report.dump(2) + "\n");
  if (json_out) {
    std::printf("%s\n", report.dump(2).c_str());
  } else {
    for (const AuditClause& c : checks.clauses)
      std::printf("  [%s] %s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                  c.witness.empty() ? "" : ("  (" + c.witness + ")").c_str());
    std::printf("%s\n", checks.ok() ? "OK" : "FAILED");
  }
  if (!checks.ok()) {
    std::fprintf(stderr, "first failing check: %s\n", checks.first_failure().c_str());
    return 1;
  }
  return 0;
}

GroupTable group_by_name(const std::string& name) {
  for (GroupTable& g : corpus_groups())
    if (g.name == name) return g;
  throw std::invalid_argument("no corpus group named " + name);
}

int run_corpus(const std::string& dir, const std::string& out_path, bool seedless,
               bool json_out) {
  double t0 = now_ms();
  Json index = load_json(dir + "/index.json");
  require_schema(index, "corpus-index/v1");

  struct Job {
    GroupTable group;
    std::vector<std::size_t> sub;
  };
  std::vector<Job> jobs;
  std::string input_bytes;
  for (const Json& f : index.at("files")) {
    std::string bytes = read_file(dir + "/" + f.get<std::string>());
    input_bytes += bytes;
    Json j = Json::parse(bytes);
    GroupTable g = group_from_json(j);
    for (const Json& rep : j.at("subgroup_reps"))
      jobs.push_back({g, rep.get<std::vector<std::size_t>>()});
  }

  std::vector<AuditReport> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs.size()); ++i) {
    try {
      results[i] = run_group_pair(jobs[i].group, jobs[i].sub, "both", seedless, false, false).checks;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  AuditReport all;
  std::size_t normal = 0, failed = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    std::string tag = jobs[i].group.name + " |N|=" + std::to_string(jobs[i].sub.size());
    if (!errors[i].empty()) {
      all.add(tag, false, errors[i]);
      ++failed;
      continue;
    }
    if (const AuditClause* c = results[i].find("normality_matches_oracle"); c && !c->witness.empty())
      normal += c->witness == "oracle: normal" ? 1 : 0;
    if (results[i].ok()) continue;
    all.add(tag, false, results[i].first_failure());
    ++failed;
  }
  all.add("corpus_biconditional", failed == 0,
          std::to_string(jobs.size()) + " pairs, " + std::to_string(normal) + " normal");

  Json body;
  body["pairs"] = jobs.size();
  body["normal_pairs"] = normal;
  body["failures"] = failed;
  body["checks"] = report_to_json(all);
  Json report = make_report({{"kind", "corpus"}, {"in", dir}}, input_bytes, body,
                            now_ms() - t0);
  return finish(report, all, out_path, json_out);
}

AuditReport weakhopf_checks(const WeakHopfStructure& w, Json& body) {
  AuditReport checks = audit_weak_hopf(w);
  if (!checks.ok()) return checks;
  ProjectionData pd = projections(w);
  body["WL_dim"] = pd.WL.dim();
  body["WR_dim"] = pd.WR.dim();
  WeakIntegralData ints = find_integrals_weak(w);
  body["left_integrals_dim"] = ints.left.dim();
  body["right_integrals_dim"] = ints.right.dim();
  body["haar"] = ints.haar ? vec_to_json(*ints.haar) : Json();
  if (ints.haar) {
    checks.add("haar_exists", true, "");
    checks.add("haar_dual_bases", ints.dual_bases_ok,
               ints.dual_left ? "" : "dual integral solve failed");
  }
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfkit: exact audits for Hopf/weak-Hopf algebra extensions"};
  app.require_subcommand(1);

  std::string in_path, out_path, side = "both", subgroup_csv;
  bool json_out = false, seedless = false;
  std::vector<std::size_t> subgroup;
  auto add_common = [&](CLI::App* sub, bool needs_in) {
    auto* o = sub->add_option("--in", in_path, "input file (or builtin name)");
    if (needs_in) o->required();
    sub->add_option("--out", out_path, "write the JSON report/certificate here");
    sub->add_flag("--json", json_out, "print the full JSON report to stdout");
    sub->add_flag("--seedless", seedless, "skip randomized spot checks");
  };

  CLI::App* gp = app.add_subcommand("group-pair", "audit a group-subgroup pair end to end");
  add_common(gp, true);
  gp->add_option("--subgroup", subgroup, "subgroup element indices")->delimiter(',')->required();
  gp->add_option("--side", side, "left, right or both");

  CLI::App* ha = app.add_subcommand("hopf-audit", "audit hopf/v1, group:NAME or sweedler");
  add_common(ha, true);

  CLI::App* fa = app.add_subcommand("frobenius-audit", "Frobenius + Markov audit of a pair");
  add_common(fa, true);
  fa->add_option("--subgroup", subgroup, "subgroup element indices")->delimiter(',')->required();

  CLI::App* d2 = app.add_subcommand("depth2", "decide depth two / validate a certificate");
  add_common(d2, true);
  d2->add_option("--subgroup", subgroup, "subgroup element indices (decision mode)")
      ->delimiter(',');
  d2->add_option("--side", side, "left, right or both");

  CLI::App* wa = app.add_subcommand("weakhopf-audit", "audit weakhopf/v1, hopf/v1 or matrix:n");
  add_common(wa, true);

  CLI::App* ga = app.add_subcommand("galois", "Galois/smash audit of a builtin action");
  add_common(ga, true);

  CLI::App* co = app.add_subcommand("corpus", "sweep the bundled corpus");
  add_common(co, false);

  CLI11_PARSE(app, argc, argv);

  try {
    double t0 = now_ms();
    if (*gp || *fa) {
      std::string bytes = read_file(in_path);
      GroupTable g = group_from_json(Json::parse(bytes));
      bool want_certs = gp->parsed();
      PairRun run = run_group_pair(g, subgroup, want_certs ? side : "both", seedless, want_certs,
                                   true);
      if (*fa) {
        // narrow to the Frobenius/Markov clauses
        AuditReport fr;
        for (const AuditClause& c : run.checks.clauses)
          if (c.name.rfind("markov/", 0) == 0 || c.name == "index_is_order_ratio")
            fr.add(c.name, c.pass, c.witness);
        run.checks = std::move(fr);
        run.body["checks"] = report_to_json(run.checks);
      }
      Json body = std::move(run.body);
      if (*gp && !run.certificates.empty()) {
        Json certs;
        for (auto& [s, cj] : run.certificates) certs[s] = std::move(cj);
        body["certificates"] = std::move(certs);
      }
      Json job = {{"kind", *gp ? "group-pair" : "frobenius-audit"},
                  {"in", in_path},
                  {"subgroup", subgroup},
                  {"side", side}};
      return finish(make_report(job, bytes, std::move(body), now_ms() - t0), run.checks,
                    out_path, json_out);
    }

    if (*ha) {
      std::string bytes;
      HopfStructure h;
      if (in_path == "sweedler") {
        h = sweedler_hopf();
        bytes = in_path;
      } else if (in_path.rfind("group:", 0) == 0) {
        h = group_hopf(group_by_name(in_path.substr(6)));
        bytes = in_path;
      } else {
        bytes = read_file(in_path);
        h = hopf_from_json(Json::parse(bytes));
      }
      AuditReport rep = audit_hopf(h);
      AuditReport checks;
      for (const AuditClause& c : rep.clauses)
        if (c.name == "antipode_involutive")  // informational: S² ≠ id is legal
          checks.add(c.name, true, c.pass ? "S² = id" : "S² ≠ id");
        else
          checks.add(c.name, c.pass, c.witness);
      Json body;
      body["audit"] = report_to_json(rep);
      body["ok"] = audit_hopf_ok(rep);
      return finish(make_report({{"kind", "hopf-audit"}, {"in", in_path}}, bytes,
                                std::move(body), now_ms() - t0),
                    checks, out_path, json_out);
    }

    if (*d2) {
      std::string bytes = read_file(in_path);
      Json j = Json::parse(bytes);
      std::string schema = j.value("schema", "");
      if (schema == "quasibase-cert/v1") {
        CertificateFile f = certificate_from_json(j);
        AuditReport val = validate_certificate(f.cert, f.pair);
        Json body;
        body["side"] = f.cert.side;
        body["pairs"] = f.cert.pairs.size();
        body["validation"] = report_to_json(val);
        return finish(make_report({{"kind", "depth2"}, {"in", in_path}, {"mode", "validate"}},
                                  bytes, std::move(body), now_ms() - t0),
                      val, out_path, json_out);
      }
      GroupTable g = group_from_json(j);
      if (subgroup.empty())
        throw CLI::ValidationError("depth2 decision mode needs --subgroup");
      std::string wit;
      if (!check_subgroup(g, subgroup, &wit))
        throw std::invalid_argument("not a subgroup: " + wit);
      ExtensionPair p = group_algebra_pair(g, subgroup);
      TensorSquare t2 = tensor_square(p);
      AuditReport checks;
      Json body;
      Json cert_json;
      for (const std::string& s : side_list(side)) {
        std::optional<QuasibaseCertificate> cert = decide_depth2(p, s, t2);
        body[s] = cert.has_value();
        if (cert) {
          AuditReport val = validate_certificate(*cert, p);
          checks.add("certificate_" + s + "_valid", val.ok(), val.first_failure());
          if (!seedless)
            checks.add("spot_checks_" + s,
                       spot_check(p, t2, *cert,
                                  static_cast<std::uint32_t>(g.order * 131 + subgroup.size()),
                                  2),
                       "");
          cert_json[s] = certificate_to_json(*cert, p);
        } else {
          checks.add("depth2_" + s, false, "no quasibases (extension is not depth two)");
        }
      }
      if (!out_path.empty()) {
        const std::vector<std::string> sides = side_list(side);
        if (sides.size() != 1)
          throw CLI::ValidationError("--out needs --side left or --side right");
        if (!cert_json.contains(sides[0]))
          throw std::invalid_argument("no certificate to write: pair is not depth two");
        write_file(out_path, cert_json[sides[0]].dump(2) + "\n");
        std::printf("wrote %s certificate to %s\n", sides[0].c_str(), out_path.c_str());
        out_path.clear();  // the certificate is the artifact; no report file on top
      }
      body["checks"] = report_to_json(checks);
      Json job = {{"kind", "depth2"}, {"in", in_path}, {"subgroup", subgroup}, {"side", side}};
      return finish(make_report(job, bytes, std::move(body), now_ms() - t0), checks, out_path,
                    json_out);
    }

    if (*wa) {
      std::string bytes;
      WeakHopfStructure w;
      Json body;
      if (in_path.rfind("matrix:", 0) == 0) {
        w = matrix_groupoid(std::stoul(in_path.substr(7)));
        bytes = in_path;
        body["builtin"] = in_path;
      } else {
        bytes = read_file(in_path);
        Json j = Json::parse(bytes);
        if (j.value("schema", "") == "hopf/v1") {
          HopfStructure h = hopf_from_json(j);
          w = from_hopf(h);
          body["hopf_collapse"] = true;  // Δ(1)=1⊗1 collapses Π^L, Π^R to unit∘ε
        } else {
          w = weakhopf_from_json(j);
        }
      }
      AuditReport checks = weakhopf_checks(w, body);
      if (body.value("hopf_collapse", false))
        checks.add("hopf_collapse_noted", true,
                   "W^L = W^R = Q·1; projections are unit∘counit");
      body["audit"] = report_to_json(checks);
      return finish(make_report({{"kind", "weakhopf-audit"}, {"in", in_path}}, bytes,
                                std::move(body), now_ms() - t0),
                    checks, out_path, json_out);
    }

    if (*ga) {
      WeakAction act;
      if (in_path.rfind("pair-groupoid:", 0) == 0)
        act = pair_groupoid_action(std::stoul(in_path.substr(14)));
      else if (in_path.rfind("translation:", 0) == 0)
        act = group_translation_action(group_by_name(in_path.substr(12)));
      else
        throw CLI::ValidationError("galois --in expects pair-groupoid:n or translation:NAME");
      AuditReport checks = theorem42_report(act);
      Json body;
      body["builtin"] = in_path;
      WeakCoaction co = action_to_coaction(act);
      Subspace inv = action_invariants(act);
      GaloisData gd = galois_beta(co, coaction_coinvariants(co));
      PiData pi = pi_map(act, inv);
      body["invariants_dim"] = inv.dim();
      body["beta_bijective"] = gd.bijective;
      body["beta_image_ok"] = gd.image_ok;
      body["pi_iso"] = pi.iso;
      body["checks"] = report_to_json(checks);
      return finish(make_report({{"kind", "galois"}, {"in", in_path}}, in_path,
                                std::move(body), now_ms() - t0),
                    checks, out_path, json_out);
    }

    if (*co) return run_corpus(in_path.empty() ? "data/corpus" : in_path, out_path, seedless,
                               json_out);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
