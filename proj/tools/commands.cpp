// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hopfcat/hopfcat.hpp"

namespace hopfcat::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string vec_text(const Vec& v) {
  std::vector<std::string> parts;
  for (const auto& s : v) parts.push_back(s.to_string());
  return join(parts, " ");
}

/// Writes the report file and its manifest when --report is set.
void emit_artifacts(const GlobalOptions& g, const Report& r, const std::vector<std::pair<fs::path, Document>>& inputs,
                    int code) {
  if (!g.report) return;
  write_atomic(*g.report, report_json_lines(r));
  json m;
  m["command"] = g.argv;
  m["seed"] = g.seed;
  m["report"] = g.report->string();
  m["exit_code"] = code;
  m["field"] = g.field ? g.field->to_string() : "file";
  json ins = json::array();
  for (const auto& [path, doc] : inputs) {
    ins.push_back({{"path", path.string()}, {"kind", to_string(kind_of(doc))},
                   {"sha256", sha256_hex(write_document(doc))}});
  }
  m["inputs"] = ins;
  write_atomic(fs::path(g.report->string() + ".manifest.json"), m.dump(2) + "\n");
}

int code_of(const Report& r) { return r.passed() ? exit_pass : exit_axiom_failure; }

Level default_level(const HopfCategory& a) { return a.has_antipode() ? Level::hopf : Level::semihopf; }

Report verify_any(const Document& doc, std::optional<Level> level, std::uint64_t seed) {
  switch (kind_of(doc)) {
    case Kind::hopf_category: {
      const auto& a = std::get<HopfCategory>(doc);
      return verify_structure(a, level.value_or(default_level(a)));
    }
    case Kind::dual_hopf_category: return verify_dual(std::get<DualHopfCategory>(doc));
    case Kind::weak_hopf: return verify_weak_hopf(std::get<WeakHopf>(doc), static_cast<unsigned>(seed));
    case Kind::groupoid: return validate_groupoid(std::get<GroupoidFile>(doc).groupoid);
    case Kind::graded_hopf: return validate_graded(std::get<GradedHopf>(doc));
    case Kind::module: {
      const auto& m = std::get<ModuleFile>(doc);
      return verify_module(m.base, m.data);
    }
    case Kind::comodule: {
      const auto& m = std::get<ComoduleFile>(doc);
      return verify_comodule(m.base, m.data);
    }
    case Kind::hopf_module: {
      const auto& m = std::get<HopfModuleFile>(doc);
      return verify_hopf_module(m.base, m.data);
    }
    case Kind::bimonoid: return verify_bimonoid(std::get<BimonoidData>(doc));
  }
  throw InvariantBreach("unhandled kind");
}

const HopfCategory& expect_hopf(const Document& d, const std::string& op) {
  if (kind_of(d) != Kind::hopf_category) {
    throw UsageError(op + " expects a hopf-category file, got " + to_string(kind_of(d)));
  }
  return std::get<HopfCategory>(d);
}

void expect_kind(const Document& d, Kind k, const std::string& op) {
  if (kind_of(d) != k) {
    throw UsageError(op + " expects a " + std::string(to_string(k)) + " file, got " + to_string(kind_of(d)));
  }
}

void say(const GlobalOptions& g, std::ostream& out, const std::string& line) {
  if (!g.quiet) out << line << '\n';
}

/// Writes an artifact to `output`, or to stdout when none is given.
void put_artifact(const std::optional<fs::path>& output, std::ostream& out, const std::string& text) {
  if (output) {
    write_atomic(*output, text);
  } else {
    out << text;
  }
}

std::string basis_listing(const std::string& title, const ObjectSet& ob, const std::vector<std::vector<Vec>>& bases) {
  std::ostringstream os;
  os << "# " << title << '\n';
  for (std::size_t x = 0; x < bases.size(); ++x) {
    os << "object " << ob.label(x) << " dimension " << bases[x].size() << '\n';
    for (const auto& v : bases[x]) os << "basis " << vec_text(v) << '\n';
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- helpers

void print_report(std::ostream& os, const Report& r, const std::string& title) {
  std::size_t axiom_w = 5, obj_w = 7;
  std::vector<std::string> objs;
  for (const auto& f : r.items()) {
    objs.push_back(f.objects.empty() ? "-" : "(" + join(f.objects, ",") + ")");
    axiom_w = std::max(axiom_w, f.axiom.size());
    obj_w = std::max(obj_w, objs.back().size());
  }
  os << std::left << std::setw(6) << "status" << "  " << std::setw(static_cast<int>(axiom_w)) << "axiom" << "  "
     << std::setw(static_cast<int>(obj_w)) << "objects" << "  detail\n";
  std::size_t checks = 0, failed = 0;
  for (std::size_t i = 0; i < r.items().size(); ++i) {
    const Finding& f = r.items()[i];
    std::string status = f.status == Status::pass ? "PASS" : f.status == Status::fail ? "FAIL" : "note";
    if (f.status != Status::note) ++checks;
    if (f.status == Status::fail) ++failed;
    std::string detail = f.detail;
    if (f.witness) {
      std::vector<std::string> w;
      for (auto v : *f.witness) w.push_back(std::to_string(v));
      detail += (detail.empty() ? "" : "; ") + std::string("witness [") + join(w, ",") + "]";
      if (f.failures > 1) detail += ", " + std::to_string(f.failures) + " failing";
    }
    os << std::setw(6) << status << "  " << std::setw(static_cast<int>(axiom_w)) << f.axiom << "  "
       << std::setw(static_cast<int>(obj_w)) << objs[i] << "  " << detail << '\n';
  }
  os << title << ": " << checks << " checks, " << failed << " failed, " << (failed ? "FAIL" : "PASS") << '\n';
}

std::string report_json_lines(const Report& r) {
  std::string out;
  for (const auto& f : r.items()) {
    json j;
    j["axiom"] = f.axiom;
    j["objects"] = f.objects;
    j["status"] = to_string(f.status);
    j["failures"] = f.failures;
    j["detail"] = f.detail;
    j["witness"] = f.witness ? json(*f.witness) : json(nullptr);
    out += j.dump() + "\n";
  }
  return out;
}

void write_atomic(const fs::path& path, const std::string& content) {
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw UsageError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw UsageError("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw InvariantBreach("SHA-256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

// ---------------------------------------------------------------- verify

int cmd_verify(const fs::path& input, const VerifyOptions& v, const GlobalOptions& g, std::ostream& out) {
  const Document doc = load_document(input, g.field);
  std::optional<Level> level;
  if (v.level) {
    if (kind_of(doc) != Kind::hopf_category) throw UsageError("--level applies to hopf-category files only");
    try {
      level = parse_level(*v.level);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  Report r = verify_any(doc, level, g.seed);
  for (const auto& c : v.checks) {
    if (c == "block-composition") {
      expect_kind(doc, Kind::weak_hopf, "--check block-composition");
      r.merge(check_block_composition(std::get<WeakHopf>(doc)));
      continue;
    }
    const HopfCategory& a = expect_hopf(doc, "--check " + c);
    if (c == "strictness") {
      r.merge(check_strictness(a));
    } else if (c == "antipode-theorems") {
      r.merge(check_antipode_theorems(a));
    } else if (c == "antipode-bijective") {
      r.merge(check_antipode_bijective(a));
    } else if (c == "fundamental") {
      r.merge(fundamental_conditions(a).report);
    } else {
      throw UsageError("unknown check '" + c + "'");
    }
  }
  const int code = code_of(r);
  if (!g.quiet) print_report(out, r, input.filename().string() + " [" + to_string(kind_of(doc)) + "]");
  emit_artifacts(g, r, {{input, doc}}, code);
  return code;
}

// ---------------------------------------------------------------- transform

namespace {

struct Transformed {
  Document output;
  Report input_check;
};

Transformed apply_transform(const std::string& op, const Document& in) {
  auto hopf_in = [&]() -> const HopfCategory& { return expect_hopf(in, op); };
  if (op == "pack") {
    const auto& a = hopf_in();
    if (!a.has_antipode()) throw MissingAntipode("pack requires an antipode");
    return {pack(a), verify_structure(a, Level::hopf)};
  }
  if (op == "pack-dual") {
    expect_kind(in, Kind::dual_hopf_category, op);
    const auto& c = std::get<DualHopfCategory>(in);
    if (!c.has_antipode()) throw MissingAntipode("pack-dual requires an antipode");
    return {pack_dual(c), verify_dual(c)};
  }
  if (op == "dualize") {
    const auto& a = hopf_in();
    return {dualize(a), verify_structure(a, default_level(a))};
  }
  if (op == "undualize") {
    expect_kind(in, Kind::dual_hopf_category, op);
    const auto& c = std::get<DualHopfCategory>(in);
    return {undualize(c), verify_dual(c)};
  }
  if (op == "from-groupoid") {
    expect_kind(in, Kind::groupoid, op);
    const auto& gf = std::get<GroupoidFile>(in);
    Report r = validate_groupoid(gf.groupoid);
    if (!r.passed()) return {in, r};
    return {linearize_groupoid(gf.groupoid, gf.field), r};
  }
  if (op == "from-graded") {
    expect_kind(in, Kind::graded_hopf, op);
    const auto& h = std::get<GradedHopf>(in);
    Report r = validate_graded(h);
    if (!r.passed()) return {in, r};
    return {from_graded(h), r};
  }
  if (op == "opposite" || op == "coopposite") {
    const auto& a = hopf_in();
    Report r = verify_structure(a, default_level(a));
    if (!r.passed()) return {in, r};
    return {transform(a, parse_variance(op)), r};
  }
  if (op == "bimonoid") {
    const auto& a = hopf_in();
    Report r = verify_structure(a, Level::semihopf);
    if (!r.passed()) return {in, r};
    return {bimonoid_from_category(a), r};
  }
  if (op == "unbimonoid") {
    expect_kind(in, Kind::bimonoid, op);
    const auto& b = std::get<BimonoidData>(in);
    Report r = verify_bimonoid(b);
    if (!r.passed()) return {in, r};
    return {category_from_bimonoid(b), r};
  }
  throw UsageError("unknown transform '" + op + "'");
}

}  // namespace

int cmd_transform(const std::string& op, const fs::path& input, const fs::path& output, const GlobalOptions& g,
                  std::ostream& out) {
  const Document doc = load_document(input, g.field);
  Transformed t = apply_transform(op, doc);
  if (!t.input_check.passed()) {
    if (!g.quiet) print_report(out, t.input_check, "input " + input.filename().string());
    emit_artifacts(g, t.input_check, {{input, doc}}, exit_axiom_failure);
    return exit_axiom_failure;
  }
  const Report check = verify_any(t.output, std::nullopt, g.seed);
  if (!check.passed()) {
    if (!g.quiet) print_report(out, check, "output of " + op);
    emit_artifacts(g, check, {{input, doc}}, exit_invariant_breach);
    return exit_invariant_breach;
  }
  const std::string text = write_document(t.output);
  if (write_document(read_document(text)) != text) throw InvariantBreach("canonical text does not read back");
  write_atomic(output, text);
  say(g, out, op + ": wrote " + std::string(to_string(kind_of(t.output))) + " to " + output.string() + " (" +
                  std::to_string(check.items().size()) + " output checks passed)");
  emit_artifacts(g, check, {{input, doc}}, exit_pass);
  return exit_pass;
}

// ---------------------------------------------------------------- analyze

namespace {

HopfCategory hopf_for_analysis(const Document& d, const std::string& op) {
  switch (kind_of(d)) {
    case Kind::hopf_category: return std::get<HopfCategory>(d);
    case Kind::graded_hopf: return from_graded(std::get<GradedHopf>(d));
    case Kind::groupoid: {
      const auto& gf = std::get<GroupoidFile>(d);
      return linearize_groupoid(gf.groupoid, gf.field);
    }
    default: throw UsageError(op + " expects a hopf-category, graded-hopf or groupoid file");
  }
}

}  // namespace

int cmd_analyze(const std::string& op, const fs::path& input, const std::optional<fs::path>& output,
                const GlobalOptions& g, std::ostream& out) {
  const Document doc = load_document(input, g.field);
  Report r;
  int code = exit_pass;
  if (op == "recover-antipode") {
    const HopfCategory a = hopf_for_analysis(doc, op);
    auto result = recover_antipode(a);
    if (auto* h = std::get_if<HopfCategory>(&result)) {
      r = verify_structure(*h, Level::hopf);
      if (!r.passed()) throw InvariantBreach("recovered antipode does not verify");
      put_artifact(output, out, write_document(*h));
      if (output) say(g, out, "recover-antipode: antipode recovered, wrote " + output->string());
    } else {
      const auto& fail = std::get<RecoveryFailure>(result);
      const auto& ob = a.objects();
      r = fail.sweep;
      r.fail("recover-antipode", ob.tuple({fail.z, fail.x, fail.y}), fail.detail);
      std::ostringstream os;
      os << "# recover-antipode failed\n"
         << "blocking " << ob.label(fail.z) << " " << ob.label(fail.x) << " " << ob.label(fail.y) << "\n"
         << "rank " << fail.rank << " of " << fail.size << "\n"
         << "detail " << fail.detail << "\n";
      put_artifact(output, out, os.str());
      if (output) {
        say(g, out, "recover-antipode: failed at (" + ob.label(fail.z) + "," + ob.label(fail.x) + "," +
                        ob.label(fail.y) + "), rank " + std::to_string(fail.rank) + " of " +
                        std::to_string(fail.size));
      }
      code = exit_axiom_failure;
    }
  } else if (op == "integrals") {
    const HopfCategory a = hopf_for_analysis(doc, op);
    std::vector<std::vector<Vec>> bases;
    for (std::size_t x = 0; x < a.size(); ++x) {
      IntegralSpace s = integrals(a, x);
      r.merge(s.report);
      bases.push_back(std::move(s.basis));
    }
    put_artifact(output, out, basis_listing("left integrals in coordinates of the dual basis of A_{x,x}",
                                            a.objects(), bases));
    code = code_of(r);
  } else if (op == "coinvariants") {
    HopfCategory base;
    HopfModuleData m;
    std::string title;
    if (kind_of(doc) == Kind::hopf_module) {
      const auto& f = std::get<HopfModuleFile>(doc);
      base = f.base;
      m = f.data;
      title = "coinvariants of M_{x,x}";
      r = verify_hopf_module(base, m);
    } else {
      base = hopf_for_analysis(doc, op);
      detail::require_hopf(base, "coinvariants of the dual Hopf module");
      m = dual_hopf_module(base);
      title = "coinvariants of the dual Hopf module at A*_{x,x}";
      r = verify_hopf_module(base, m);
    }
    if (!r.passed()) {
      code = exit_axiom_failure;
    } else {
      put_artifact(output, out, basis_listing(title, base.objects(), coinvariants(base, m).bases));
    }
  } else if (op == "can-ranks") {
    const HopfCategory a = hopf_for_analysis(doc, op);
    const auto& ob = a.objects();
    std::ostringstream os;
    os << "# z x y rows cols rank invertible\n";
    for (const auto& c : can_ranks(a)) {
      os << ob.label(c.z) << " " << ob.label(c.x) << " " << ob.label(c.y) << " " << c.rows << " " << c.cols << " "
         << c.rank << " " << (c.invertible() ? "yes" : "no") << "\n";
      r.expect(c.invertible(), "can-invertible", ob.tuple({c.z, c.x, c.y}),
               "rank " + std::to_string(c.rank) + " of " + std::to_string(c.rows) + "x" + std::to_string(c.cols));
    }
    put_artifact(output, out, os.str());
    code = code_of(r);
  } else if (op == "strictness") {
    const HopfCategory a = hopf_for_analysis(doc, op);
    const Strictness s = strictness(a);
    r = s.report;
    if (s.all_surjective != s.loops_surjective) throw InvariantBreach("strictness conditions disagree");
    std::ostringstream os;
    os << "strict " << (s.all_surjective ? "yes" : "no") << "\n"
       << "all-compositions-surjective " << (s.all_surjective ? "yes" : "no") << "\n"
       << "loop-compositions-surjective " << (s.loops_surjective ? "yes" : "no") << "\n";
    put_artifact(output, out, os.str());
    code = s.all_surjective ? exit_pass : exit_axiom_failure;
  } else {
    throw UsageError("unknown analysis '" + op + "'");
  }
  if (output && !g.quiet) print_report(out, r, op);
  emit_artifacts(g, r, {{input, doc}}, code);
  return code;
}

// ---------------------------------------------------------------- entry

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and constructions for finite Hopf categories", "hopfcat"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  g.argv = args;
  std::string field_text;
  std::string report_path;
  app.add_option("--field", field_text, "q or fp:<p>; rational files are reduced into F_p");
  app.add_option("--seed", g.seed, "seed for randomized audits");
  app.add_option("--report", report_path, "JSON-lines report path; a .manifest.json is written beside it");
  app.add_flag("--quiet", g.quiet, "suppress the text table");

  VerifyOptions vopt;
  std::string in_path, out_path, op;
  auto* verify = app.add_subcommand("verify", "check every axiom of a structure file");
  verify->add_option("input", in_path, "structure file")->required();
  verify->add_option("--level", vopt.level, "category, semihopf or hopf");
  verify->add_option("--check", vopt.checks,
                     "extra checks: strictness, antipode-theorems, antipode-bijective, fundamental, block-composition");

  auto* transform_cmd = app.add_subcommand("transform", "build a new structure file");
  transform_cmd
      ->add_option("op", op,
                   "pack, pack-dual, dualize, undualize, from-groupoid, from-graded, opposite, coopposite, "
                   "bimonoid, unbimonoid")
      ->required();
  transform_cmd->add_option("input", in_path, "structure file")->required();
  transform_cmd->add_option("-o,--output", out_path, "output file")->required();

  auto* analyze = app.add_subcommand("analyze", "run an analysis and write its artifact");
  analyze->add_option("op", op, "recover-antipode, integrals, coinvariants, can-ranks, strictness")->required();
  analyze->add_option("input", in_path, "structure file")->required();
  analyze->add_option("-o,--output", out_path, "artifact path (stdout if omitted)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "hopfcat: " << e.what() << "\n";
    return exit_input_error;
  }

  try {
    if (!field_text.empty()) g.field = Field::parse(field_text);
    if (!report_path.empty()) g.report = report_path;
    if (*verify) return cmd_verify(in_path, vopt, g, out);
    if (*transform_cmd) return cmd_transform(op, in_path, out_path, g, out);
    std::optional<fs::path> o;
    if (!out_path.empty()) o = out_path;
    return cmd_analyze(op, in_path, o, g, out);
  } catch (const ParseError& e) {
    err << "hopfcat: parse error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const MissingAntipode& e) {
    err << "hopfcat: missing antipode: " << e.what() << "\n";
    return exit_input_error;
  } catch (const UsageError& e) {
    err << "hopfcat: " << e.what() << "\n";
    return exit_input_error;
  } catch (const MalformedData& e) {
    err << "hopfcat: malformed data: " << e.what() << "\n";
    return exit_input_error;
  } catch (const PreconditionError& e) {
    err << "hopfcat: " << e.what() << "\n";
    return exit_input_error;
  } catch (const FieldMismatch& e) {
    err << "hopfcat: " << e.what() << "\n";
    return exit_input_error;
  } catch (const InvariantBreach& e) {
    err << "hopfcat: internal invariant breach: " << e.what() << "\n";
    return exit_invariant_breach;
  } catch (const std::exception& e) {
    err << "hopfcat: internal error: " << e.what() << "\n";
    return exit_invariant_breach;
  }
}

}  // namespace hopfcat::cli
