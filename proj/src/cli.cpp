// Copyright 2026 The Authors.
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

#include "mforge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mforge/connectivity.hpp"
#include "mforge/construct.hpp"
#include "mforge/geometry.hpp"
#include "mforge/io.hpp"
#include "mforge/subfield.hpp"
#include "mforge/witness.hpp"

namespace mforge {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Inputs read and files written by one invocation.
struct Run {
  std::ostringstream out;
  std::ostream* err = nullptr;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> files;

  std::string read(const std::string& path) {
    std::string text = read_file(path);
    inputs.emplace_back(path, fnv1a_hex(text));
    return text;
  }
  Json json(const std::string& path) { return parse_json(read(path), path); }
  MatroidPtr matroid(const std::string& path) {
    const Json j = json(path);
    try {
      return matroid_from_json(j);
    } catch (const FormatError& e) {
      throw FormatError(path + ": " + e.what());
    }
  }
  Matrix matrix(const std::string& path) {
    const Json j = json(path);
    try {
      return matrix_from_json(j);
    } catch (const FormatError& e) {
      throw FormatError(path + ": " + e.what());
    }
  }
  void write(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError(path + ": cannot write file");
    f << text;
    files.emplace_back(path, fnv1a_hex(text));
  }
  void emit(const Json& j) { out << dump(j); }
};

Set labels_to_set(const Matroid& m, const Labels& ls, const std::string& option) {
  for (const auto& l : ls) {
    if (!m.has(l)) throw FormatError(option + ": unknown label '" + l + "'");
  }
  return m.set_of(ls);
}

int gen_geometry(Run& run, GeometryKind kind, int rank, long long q) {
  const auto m = kind == GeometryKind::kProjective ? pg(rank, q) : ag(rank, q);
  run.emit(matroid_to_json(*m));
  *run.err << to_string({kind, rank, q}) << ": " << m->size() << " elements, rank " << m->rank() << "\n";
  return kExitOk;
}

int gen_counterexample(Run& run, int n, long long q) {
  const Counterexample ce = counterexample(n, q);
  run.emit(matroid_to_json(*ce.relaxed));
  *run.err << "relaxed matroid: " << ce.relaxed->size() << " elements, rank " << ce.relaxed->rank()
           << ", relaxed set {" << [&] {
                std::string s;
                for (const auto& l : ce.base->labels_of(ce.circuit)) s += (s.empty() ? "" : ", ") + l;
                return s;
              }() << "}\n";
  return kExitOk;
}

int check_three_connected(Run& run, const std::string& file) {
  const MatroidPtr m = run.matroid(file);
  const ThreeConnectivity tc = is_3connected(*m);
  Json out{{"property", "three-connected"}, {"holds", tc.three_connected}};
  if (tc.violation) {
    out["violation"] = Json{{"side", m->labels_of(tc.violation->side)}, {"order", tc.violation->order}};
  }
  run.emit(out);
  *run.err << (tc.three_connected ? "3-connected" : "not 3-connected") << "\n";
  return tc.three_connected ? kExitOk : kExitPropertyFailure;
}

int check_line_minor(Run& run, int k, const std::string& file) {
  const MatroidPtr m = run.matroid(file);
  if (k < 2) throw FormatError("--k must be at least 2");
  const LongestLine line = longest_line(m);
  const bool present = line.k >= k;
  Json out{{"k", k}, {"result", present ? "present" : "absent"}, {"longestLine", line.k}};
  if (present) {
    MinorSpec spec = line.witness;
    const auto full = minor(m, spec);
    // Drop points until exactly k remain.
    const Labels& pts = full->ground();
    for (int i = k; i < static_cast<int>(pts.size()); ++i) spec.remove.push_back(pts[static_cast<std::size_t>(i)]);
    spec = normalize_minor_spec(*m, spec);
    out["witness"] = minor_spec_to_json(spec);
  }
  run.emit(out);
  *run.err << "U_{2," << k << "}-minor " << (present ? "present" : "absent") << " (longest line " << line.k << ")\n";
  return kExitOk;
}

int check_rank_axioms_cmd(Run& run, int samples, std::uint64_t seed, const std::string& file) {
  const MatroidPtr m = run.matroid(file);
  std::mt19937_64 rng(seed);
  const AxiomReport report = check_rank_axioms(*m, samples, rng);
  Json out{{"property", "rank-axioms"}, {"seed", seed}, {"checked", report.checked},
           {"violations", report.violations}};
  if (report.violations > 0) out["firstViolation"] = report.first_violation;
  run.emit(out);
  *run.err << report.checked << " checks, " << report.violations << " violations\n";
  return report.violations == 0 ? kExitOk : kExitPropertyFailure;
}

int kappa_cmd(Run& run, const Labels& s, const Labels& t, const std::string& file) {
  const MatroidPtr m = run.matroid(file);
  const Set ss = labels_to_set(*m, s, "--s");
  const Set ts = labels_to_set(*m, t, "--t");
  if ((ss & ts) != 0) throw FormatError("--s and --t must be disjoint");
  const int k = kappa(*m, ss, ts);
  const Linking link = linking_set(*m, ss, ts);
  run.emit(Json{{"kappa", k}, {"linking", m->labels_of(link.z)}, {"linkingValue", link.value}});
  *run.err << "kappa = " << k << "\n";
  return kExitOk;
}

int subfield_cmd(Run& run, long long q, const std::string& file) {
  const Matrix a = run.matrix(file);
  const ScalingCertificate cert = scaled_subfield_check(a, q);
  Json out = scaling_to_json(cert);
  out["q"] = q;
  out["verified"] = verify_scaling_certificate(a, q, cert);
  run.emit(out);
  *run.err << (cert.scaled ? "scaled " : "not a scaled ") << "GF(" << q << ")-matrix\n";
  return kExitOk;
}

int certify_cmd(Run& run, const std::string& file) {
  const MatroidPtr m = run.matroid(file);
  const auto rel = std::dynamic_pointer_cast<const RelaxedMatroid>(m);
  if (!rel) throw FormatError(file + ": certify nonrep expects a relaxed matroid file");
  std::optional<long long> q;
  if (const auto lin = std::dynamic_pointer_cast<const LinearMatroid>(rel->base())) q = lin->matrix().field().order();
  const Certificate cert = q == 2 ? charconflict_certificate(m, rel->relaxed_set(), q)
                                  : pappus_certificate(m, rel->relaxed_set(), q);
  run.emit(certificate_to_json(cert));
  *run.err << (cert.kind == Certificate::Kind::kCharConflict ? "characteristic-conflict" : "Pappus-violation")
           << " certificate emitted\n";
  return kExitOk;
}

int verify_cmd(Run& run, const std::string& cert_file, const std::string& file) {
  const Json j = run.json(cert_file);
  Certificate cert;
  try {
    cert = certificate_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(cert_file + ": " + e.what());
  }
  const MatroidPtr m = run.matroid(file);
  bool valid = false;
  try {
    valid = verify_certificate(cert, m);
  } catch (const PreconditionError& e) {
    *run.err << e.what() << "\n";
  }
  run.emit(Json{{"valid", valid}});
  *run.err << "certificate " << (valid ? "verified" : "rejected") << "\n";
  return valid ? kExitOk : kExitPropertyFailure;
}

int extract_cmd(Run& run, const std::string& x, const std::string& y, const std::string& matrix_file,
                const std::string& trace_file, const std::string& file) {
  const MatroidPtr m = run.matroid(file);
  const Matrix a = run.matrix(matrix_file);
  if (!m->has(x)) throw FormatError("--x: unknown label '" + x + "'");
  if (!y.empty() && !m->has(y)) throw FormatError("--y: unknown label '" + y + "'");
  long long q = 0;
  {
    // N is PG(n-1, q): q + 1 points on every line of N.
    const MatroidPtr n = minor(m, {{x}, y.empty() ? Labels{} : Labels{y}});
    const auto lines = flats(*n, 2);
    if (lines.empty()) throw PreconditionError("M'/x has no lines");
    q = set_size(lines.front()) - 1;
  }
  const std::optional<std::string> yo = y.empty() ? std::nullopt : std::optional<std::string>(y);
  try {
    const ExtractionResult result = extract_long_line(m, x, yo, a, q);
    if (!trace_file.empty()) run.write(trace_file, dump(trace_to_json(result.trace)));
    run.emit(Json{{"minor", minor_spec_to_json(result.spec)}, {"k", result.trace.k}, {"route", result.trace.route},
                  {"trace", trace_to_json(result.trace)}});
    *run.err << "U_{2," << result.trace.k << "} extracted (" << result.trace.route << " route)\n";
    return kExitOk;
  } catch (const StageFailure& f) {
    if (!trace_file.empty()) run.write(trace_file, dump(trace_to_json(f.trace)));
    run.emit(Json{{"failure", f.stage}, {"detail", f.what()}, {"trace", trace_to_json(f.trace)}});
    *run.err << "extraction failed: " << f.what() << "\n";
    return kExitPropertyFailure;
  }
}

int growth_cmd(Run& run, long long q, int maxrank) {
  Json rows = Json::array();
  bool ok = true;
  for (int k = 1; k <= maxrank; ++k) {
    const FieldSpec field = FieldSpec::of_order(q);
    const auto points = projective_points(field, k);
    Labels cols;
    for (const auto& p : points) cols.push_back(point_label(p, field.order()));
    Matrix a(field, Matrix::default_row_labels(k), cols);
    for (std::size_t c = 0; c < points.size(); ++c) {
      for (int r = 0; r < k; ++r) a(r, static_cast<int>(c)) = points[c][static_cast<std::size_t>(r)];
    }
    const int eps = parallel_classes(a);
    long long power = 1;
    for (int i = 0; i < k; ++i) power *= q;
    const long long formula = (power - 1) / (q - 1);
    ok = ok && eps == formula;
    rows.push_back(Json{{"k", k}, {"epsilon", eps}, {"formula", formula}, {"match", eps == formula}});
    *run.err << "PG(" << k - 1 << "," << q << "): " << eps << " points, (q^k-1)/(q-1) = " << formula << "\n";
  }
  run.emit(Json{{"q", q}, {"rows", rows}});
  return ok ? kExitOk : kExitPropertyFailure;
}

int rerun_cmd(Run& run, const std::string& manifest_file) {
  const Json j = run.json(manifest_file);
  bool ok = true;
  for (const auto& in : j.at("inputs")) {
    const std::string path = in.at("path");
    const std::string digest = fnv1a_hex(read_file(path));
    if (digest != in.at("digest").get<std::string>()) {
      *run.err << "input digest differs: " << path << "\n";
      ok = false;
    }
  }
  std::vector<std::string> args = j.at("arguments").get<std::vector<std::string>>();
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  Json outputs = Json::array();
  for (const auto& o : j.at("outputs")) {
    const std::string name = o.at("name");
    const std::string digest = name == "stdout" ? fnv1a_hex(out.str()) : fnv1a_hex(read_file(name));
    const bool same = digest == o.at("digest").get<std::string>();
    ok = ok && same;
    outputs.push_back(Json{{"name", name}, {"identical", same}});
  }
  ok = ok && code == j.at("exitCode").get<int>();
  run.emit(Json{{"reproduced", ok}, {"outputs", outputs}});
  *run.err << (ok ? "run reproduced" : "run not reproduced") << "\n";
  return ok ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Matroid long-line and representability toolkit", "mforge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  std::uint64_t seed = 0;
  std::string manifest;
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--manifest", manifest, "write a run manifest to this path");

  Run run;
  run.err = &err;
  std::function<int()> action;
  std::string command;

  // gen
  auto* gen = app.add_subcommand("gen", "generate matroid files");
  gen->require_subcommand(1);
  int rank = 0, n = 0, k = 0, maxrank = 0, samples = 10000;
  long long q = 0;
  for (auto kind : {GeometryKind::kProjective, GeometryKind::kAffine}) {
    const bool proj = kind == GeometryKind::kProjective;
    auto* sub = gen->add_subcommand(proj ? "pg" : "ag", proj ? "projective geometry" : "affine geometry");
    sub->add_option("--rank", rank, "rank n")->required();
    sub->add_option("--q", q, "field order")->required();
    sub->callback([&, kind, proj] {
      command = proj ? "gen pg" : "gen ag";
      action = [&, kind] { return gen_geometry(run, kind, rank, q); };
    });
  }
  auto* gen_ce = gen->add_subcommand("counterexample", "relaxed PG(n,q) minus a hyperplane");
  gen_ce->add_option("--n", n)->required();
  gen_ce->add_option("--q", q)->required();
  gen_ce->callback([&] {
    command = "gen counterexample";
    action = [&] { return gen_counterexample(run, n, q); };
  });

  // check
  std::string file, file2, matrix_file, trace_file, x, y;
  Labels s_labels, t_labels;
  auto* check = app.add_subcommand("check", "check a property of a matroid");
  check->require_subcommand(1);
  auto* tc = check->add_subcommand("three-connected", "Tutte 3-connectivity");
  tc->add_option("file", file)->required();
  tc->callback([&] {
    command = "check three-connected";
    action = [&] { return check_three_connected(run, file); };
  });
  auto* lm = check->add_subcommand("line-minor", "presence of a U_{2,k}-minor");
  lm->add_option("--k", k)->required();
  lm->add_option("file", file)->required();
  lm->callback([&] {
    command = "check line-minor";
    action = [&] { return check_line_minor(run, k, file); };
  });
  auto* ra = check->add_subcommand("rank-axioms", "sampled rank-axiom check");
  ra->add_option("--samples", samples);
  ra->add_option("file", file)->required();
  ra->callback([&] {
    command = "check rank-axioms";
    action = [&] { return check_rank_axioms_cmd(run, samples, seed, file); };
  });

  auto* kp = app.add_subcommand("kappa", "Tutte linking value and a linking set");
  kp->add_option("--s", s_labels)->required()->delimiter(',');
  kp->add_option("--t", t_labels)->required()->delimiter(',');
  kp->add_option("file", file)->required();
  kp->callback([&] {
    command = "kappa";
    action = [&] { return kappa_cmd(run, s_labels, t_labels, file); };
  });

  auto* sc = app.add_subcommand("subfield-check", "decide whether a matrix is a scaled GF(q)-matrix");
  sc->add_option("--q", q)->required();
  sc->add_option("matrix", file)->required();
  sc->callback([&] {
    command = "subfield-check";
    action = [&] { return subfield_cmd(run, q, file); };
  });

  auto* certify = app.add_subcommand("certify", "emit certificates");
  certify->require_subcommand(1);
  auto* nonrep = certify->add_subcommand("nonrep", "non-representability certificate of a relaxed matroid");
  nonrep->add_option("file", file)->required();
  nonrep->callback([&] {
    command = "certify nonrep";
    action = [&] { return certify_cmd(run, file); };
  });

  auto* verify = app.add_subcommand("verify", "re-check a certificate against a matroid");
  verify->add_option("certificate", file2)->required();
  verify->add_option("file", file)->required();
  verify->callback([&] {
    command = "verify";
    action = [&] { return verify_cmd(run, file2, file); };
  });

  auto* extract = app.add_subcommand("extract", "witness extraction");
  extract->require_subcommand(1);
  auto* ll = extract->add_subcommand("long-line", "extract a U_{2,q^2+1}-minor");
  ll->add_option("--x", x)->required();
  ll->add_option("--y", y);
  ll->add_option("--matrix", matrix_file)->required();
  ll->add_option("--trace", trace_file, "write the witness trace here");
  ll->add_option("file", file)->required();
  ll->callback([&] {
    command = "extract long-line";
    action = [&] { return extract_cmd(run, x, y, matrix_file, trace_file, file); };
  });

  auto* growth = app.add_subcommand("growth-table", "points of PG(k-1,q) against (q^k-1)/(q-1)");
  growth->add_option("--q", q)->required();
  growth->add_option("--maxrank", maxrank)->required();
  growth->callback([&] {
    command = "growth-table";
    action = [&] { return growth_cmd(run, q, maxrank); };
  });

  auto* rerun = app.add_subcommand("rerun", "re-execute a run manifest and compare outputs");
  rerun->add_option("manifest", file)->required();
  rerun->callback([&] {
    command = "rerun";
    action = [&] { return rerun_cmd(run, file); };
  });

  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && !app.get_subcommand_no_throw(args[0])) {
    err << "usage error: unknown command '" << args[0] << "'\n";
    return kExitUsage;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  int code = kExitOk;
  try {
    code = action();
  } catch (const FormatError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    code = kExitPropertyFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = kExitPropertyFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string text = run.out.str();
  out << text;

  if (!manifest.empty()) {
    std::vector<std::string> recorded;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--manifest") {
        ++i;
      } else if (args[i].rfind("--manifest=", 0) != 0) {
        recorded.push_back(args[i]);
      }
    }
    Json inputs = Json::array();
    for (const auto& [path, digest] : run.inputs) inputs.push_back(Json{{"path", path}, {"digest", digest}});
    Json outputs = Json::array({Json{{"name", "stdout"}, {"digest", fnv1a_hex(text)}}});
    for (const auto& [path, digest] : run.files) outputs.push_back(Json{{"name", path}, {"digest", digest}});
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Json m{{"command", command}, {"arguments", recorded}, {"seed", seed},       {"inputs", inputs},
                 {"version", kVersion}, {"outputs", outputs},  {"exitCode", code}, {"wallTimeSeconds", wall}};
    std::ofstream f(manifest, std::ios::binary);
    if (!f) {
      err << "cannot write manifest " << manifest << "\n";
      return kExitUsage;
    }
    f << dump(m);
  }
  return code;
}

}  // namespace mforge
