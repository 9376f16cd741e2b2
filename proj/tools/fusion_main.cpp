// Command line front end: verify / analyze / grade / generate / product /
// iso / theorems / ty-modularize.  Exit code 0 = pass, 1 = a check failed
// (invalid ring, non-isomorphic pair, failing theorem), 2 = bad input.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusion/analysis.hpp"
#include "fusion/errors.hpp"
#include "fusion/families.hpp"
#include "fusion/io.hpp"
#include "fusion/isomorphism.hpp"
#include "fusion/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss{s};
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw fusion::param_error(std::string("bad ") + what + ": " + tok);
    }
  }
  if (out.empty()) throw fusion::param_error(std::string(what) + " must be nonempty");
  return out;
}

fusion::GroupTable load_group_table(const std::string& path) {
  std::ifstream in{path};
  if (!in) throw fusion::param_error("cannot open group table " + path);
  int order = 0;
  if (!(in >> order) || order < 1) throw fusion::param_error("group table needs a positive order");
  std::vector<int> mul(static_cast<std::size_t>(order) * order);
  for (int& v : mul)
    if (!(in >> v)) throw fusion::param_error("group table is truncated");
  return fusion::make_group(order, std::move(mul));
}

// --group accepts invariant factors ("4,2"), the literal "S3", or
// table:<file> for an explicit multiplication table.
fusion::GroupTable resolve_group(const std::string& spec) {
  if (spec == "S3" || spec == "s3") return fusion::symmetric_group_3();
  if (spec.rfind("table:", 0) == 0) return load_group_table(spec.substr(6));
  return fusion::abelian_group(parse_int_list(spec, "group factors"));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out{out_path, std::ios::binary};
  if (!out) throw fusion::param_error("cannot open " + out_path + " for writing");
  out << text;
}

struct VerifyArgs {
  std::string file;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  std::ifstream in{a.file, std::ios::binary};
  if (!in) throw fusion::parse_error(0, "cannot open " + a.file);
  std::ostringstream buf;
  buf << in.rdbuf();
  fusion::ValidationReport report{true, "", {}, ""};
  try {
    fusion::parse_ring(buf.str());
  } catch (const fusion::structural_error& e) {
    report = {false, e.identity, e.where, e.what()};
  }
  std::cout << (a.json ? fusion::render_validation_json(report)
                       : fusion::render_validation_text(report));
  return report.ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusion ring toolkit"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check the fusion ring axioms on a ring file");
  verify->add_option("file", verify_args.file, "ring file")->required();
  verify->add_flag("--json", verify_args.json, "JSON output");

  struct {
    std::string file;
    bool json = false;
  } analyze_args, grade_args;
  auto* analyze = app.add_subcommand("analyze", "dimensions, invertibles, subring structure");
  analyze->add_option("file", analyze_args.file, "ring file")->required();
  analyze->add_flag("--json", analyze_args.json, "JSON output");
  auto* grade = app.add_subcommand("grade", "universal grading group and components");
  grade->add_option("file", grade_args.file, "ring file")->required();
  grade->add_flag("--json", grade_args.json, "JSON output");

  struct {
    std::string family;
    std::string group = "2";
    std::string gamma;
    std::string name;
    std::string out;
    std::string key = "S3";
    int kappa = 0;
    int level = 1;
    int coset = 0;
    bool list = false;
  } gen_args;
  auto* gen = app.add_subcommand(
      "generate",
      "emit a named ring (pointed | ty | near-group | verlinde | ising | yang-lee | "
      "moore-read | genty | rep | corpus) in ring-file form");
  gen->add_option("family", gen_args.family, "family name")->required();
  gen->add_option("--group", gen_args.group,
                  "group: invariant factors '4,2', 'S3', or table:<file>");
  gen->add_option("--kappa", gen_args.kappa, "near-group multiplicity");
  gen->add_option("--level", gen_args.level, "verlinde level");
  gen->add_option("--gamma", gen_args.gamma, "genty: generators of the stabilizer, e.g. '0,2'");
  gen->add_option("--coset", gen_args.coset, "genty: coset representative element");
  gen->add_option("--key", gen_args.key, "rep: S3, D4, Q8 or A4");
  gen->add_option("--name", gen_args.name, "corpus: entry name");
  gen->add_flag("--list", gen_args.list, "corpus: list entry names");
  gen->add_option("-o,--out", gen_args.out, "write to a file instead of stdout");

  struct {
    std::string a, b, out;
  } prod_args;
  auto* prod = app.add_subcommand("product", "product ring of two ring files");
  prod->add_option("a", prod_args.a, "first ring file")->required();
  prod->add_option("b", prod_args.b, "second ring file")->required();
  prod->add_option("-o,--out", prod_args.out, "write to a file instead of stdout");

  struct {
    std::string a, b;
    long long budget = 10'000'000;
    bool json = false;
  } iso_args;
  auto* iso = app.add_subcommand("iso", "search for a basis isomorphism between two ring files");
  iso->add_option("a", iso_args.a, "first ring file")->required();
  iso->add_option("b", iso_args.b, "second ring file")->required();
  iso->add_option("--budget", iso_args.budget, "search node budget");
  iso->add_flag("--json", iso_args.json, "JSON output");

  struct {
    std::vector<std::string> files;
    bool corpus = false;
    bool json = false;
    int cap = 12;
  } thm_args;
  auto* thm = app.add_subcommand("theorems", "run the structural check suite");
  thm->add_option("files", thm_args.files, "ring files");
  thm->add_flag("--corpus", thm_args.corpus, "also run over the built-in corpus");
  thm->add_option("--subring-cap", thm_args.cap, "rank cap for subring enumeration");
  thm->add_flag("--json", thm_args.json, "JSON output");

  struct {
    int m = 1;
    std::string bichar;
    double tau = 0.0;
    bool json = false;
  } ty_args;
  auto* tym = app.add_subcommand("ty-modularize",
                                 "predict the modularization shape of a braided "
                                 "Tambara-Yamagami ring over (Z2)^m");
  tym->add_option("--rank", ty_args.m, "m in (Z2)^m")->required();
  tym->add_option("--bichar", ty_args.bichar,
                  "bicharacter rows as bitmasks, e.g. '1,2' for the identity form on (Z2)^2")
      ->required();
  auto* tau_opt = tym->add_option("--tau", ty_args.tau, "sign choice (ignored)");
  tym->add_flag("--json", ty_args.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitInput;
  }

  try {
    if (verify->parsed()) return run_verify(verify_args);

    if (analyze->parsed()) {
      fusion::AnalyzeReport rep =
          fusion::analyze(fusion::load_ring(analyze_args.file), stem_of(analyze_args.file));
      std::cout << (analyze_args.json ? fusion::render_analyze_json(rep)
                                      : fusion::render_analyze_text(rep));
      return kExitPass;
    }

    if (grade->parsed()) {
      fusion::GradeReport rep = fusion::grade(fusion::load_ring(grade_args.file));
      std::cout << (grade_args.json ? fusion::render_grade_json(rep)
                                    : fusion::render_grade_text(rep));
      return kExitPass;
    }

    if (gen->parsed()) {
      const std::string& fam = gen_args.family;
      std::optional<fusion::FusionRing> ring;
      if (fam == "pointed") ring = fusion::gen_pointed(resolve_group(gen_args.group));
      else if (fam == "ty") ring = fusion::gen_ty(resolve_group(gen_args.group));
      else if (fam == "near-group")
        ring = fusion::gen_near_group(resolve_group(gen_args.group), gen_args.kappa);
      else if (fam == "verlinde") ring = fusion::gen_verlinde(gen_args.level);
      else if (fam == "ising") ring = fusion::gen_ising();
      else if (fam == "yang-lee") ring = fusion::gen_yang_lee();
      else if (fam == "moore-read") ring = fusion::gen_moore_read();
      else if (fam == "rep") ring = fusion::rep_corpus(gen_args.key);
      else if (fam == "genty") {
        if (gen_args.gamma.empty())
          throw fusion::param_error("genty needs --gamma");
        ring = fusion::gen_gen_ty(resolve_group(gen_args.group),
                                  parse_int_list(gen_args.gamma, "gamma"), gen_args.coset);
      } else if (fam == "corpus") {
        auto corpus = fusion::standard_corpus();
        if (gen_args.list) {
          std::string names;
          for (const auto& e : corpus) names += e.name + "\n";
          emit(names, gen_args.out);
          return kExitPass;
        }
        for (auto& e : corpus)
          if (e.name == gen_args.name) ring = std::move(e.ring);
        if (!ring)
          throw fusion::param_error("no corpus entry named '" + gen_args.name +
                                    "' (use --list to see them)");
      } else {
        throw fusion::param_error("unknown family: " + fam);
      }
      emit(fusion::serialize_ring(*ring), gen_args.out);
      return kExitPass;
    }

    if (prod->parsed()) {
      fusion::FusionRing p =
          fusion::deligne_product(fusion::load_ring(prod_args.a), fusion::load_ring(prod_args.b));
      emit(fusion::serialize_ring(p), prod_args.out);
      return kExitPass;
    }

    if (iso->parsed()) {
      fusion::FusionRing a = fusion::load_ring(iso_args.a), b = fusion::load_ring(iso_args.b);
      auto sigma = fusion::are_isomorphic(a, b, {iso_args.budget});
      std::cout << (iso_args.json ? fusion::render_iso_json(sigma)
                                  : fusion::render_iso_text(sigma, a, b));
      return sigma ? kExitPass : kExitFail;
    }

    if (thm->parsed()) {
      std::vector<fusion::NamedTheoremReport> reports;
      for (const std::string& f : thm_args.files)
        reports.push_back({stem_of(f), fusion::run_theorem_suite(fusion::load_ring(f), thm_args.cap)});
      if (thm_args.corpus)
        for (const auto& e : fusion::standard_corpus())
          reports.push_back({e.name, fusion::run_theorem_suite(e.ring, thm_args.cap)});
      if (reports.empty())
        throw fusion::param_error("theorems needs ring files or --corpus");
      std::cout << (thm_args.json ? fusion::render_theorems_json(reports)
                                  : fusion::render_theorems_text(reports));
      for (const auto& r : reports)
        if (!r.report.all_pass()) return kExitFail;
      return kExitPass;
    }

    if (tym->parsed()) {
      if (tau_opt->count())
        std::cerr << "warning: --tau does not affect the prediction; ignored\n";
      std::vector<int> raw = parse_int_list(ty_args.bichar, "bicharacter row");
      std::vector<std::uint32_t> rows(raw.begin(), raw.end());
      fusion::TYBraidData braid = fusion::make_ty_braid(ty_args.m, std::move(rows));
      fusion::ModularizationPrediction p = fusion::ty_modularization_predict(braid);
      std::cout << (ty_args.json ? fusion::render_tymod_json(p, braid.m)
                                 : fusion::render_tymod_text(p, braid.m));
      return kExitPass;
    }
  } catch (const fusion::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fusion::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
