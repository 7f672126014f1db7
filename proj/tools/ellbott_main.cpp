#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ellbott/errors.hpp"
#include "ellbott/model_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ellbott;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file \"" + path + "\"");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Outcome& outcome, bool machine) {
  if (machine) {
    std::cout << outcome.report.to_json_string() << "\n";
  } else {
    outcome.report.print_text(std::cout);
  }
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse: return kExitParse;
    case ErrorKind::Model: return kExitModel;
    case ErrorKind::Internal: return kExitInternal;
  }
  return kExitInternal;
}

struct FamilyFlags {
  std::string kind;
  long long beta = 0;
  std::string lambda, mu;
  long long m = 0;
  bool m_set = false;
  long long l = 0, a = 0, b = 0;
  long long r = 0, a_sq = 0;
  std::string declared;
  bool declared_set = false;
};

json family_flags_to_model(const FamilyFlags& f) {
  json j;
  j["kind"] = f.kind;
  if (f.kind == "weierstrass") {
    j["beta"] = f.beta;
    j["lambda"] = split_csv(f.lambda);
    j["mu"] = split_csv(f.mu);
    if (f.m_set) j["m"] = f.m;
  } else if (f.kind == "double_cover") {
    j["l"] = f.l;
    j["m"] = f.m;
  } else if (f.kind == "hypersurface") {
    j["a"] = f.a;
    j["m"] = f.m;
  } else if (f.kind == "complete_intersection") {
    j["a"] = f.a;
    j["b"] = f.b;
    j["m"] = f.m;
  } else if (f.kind == "declared_summary") {
    j["beta"] = f.beta;
    j["r"] = f.r;
    j["A2"] = f.a_sq;
  } else {
    throw ParseError("unknown family kind \"" + f.kind + "\"");
  }
  if (f.declared_set) {
    j["declared_types"] = f.declared == "none" ? std::vector<std::string>{}
                                               : split_csv(f.declared);
  }
  return j;
}

int run_batch(const std::string& dir, bool machine) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) throw ParseError("\"" + dir + "\" is not a directory");
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  bool any_parse = false, any_model = false, any_internal = false;
  json machine_out = json::array();
  for (const fs::path& p : files) {
    try {
      const Outcome outcome = run_analyze(parse_model_text(read_file(p.string())));
      if (machine) {
        json entry;
        entry["file"] = p.string();
        entry["report"] = json::parse(outcome.report.to_json_string());
        machine_out.push_back(std::move(entry));
      } else {
        std::cout << p.string() << ": ";
        if (outcome.exit_code == kExitOk) {
          std::cout << "h1=" << outcome.report.h1_state
                    << " bott=" << outcome.report.bott_state << "\n";
        } else {
          std::cout << "invalid model";
          if (!outcome.report.warnings.empty()) std::cout << " (" << outcome.report.warnings.front() << ")";
          std::cout << "\n";
        }
      }
      if (outcome.exit_code == kExitModel) any_model = true;
      if (outcome.exit_code == kExitInternal) any_internal = true;
    } catch (const Error& e) {
      if (machine) {
        machine_out.push_back({{"file", p.string()}, {"error", e.what()}});
      } else {
        std::cout << p.string() << ": error: " << e.what() << "\n";
      }
      switch (e.kind()) {
        case ErrorKind::Parse: any_parse = true; break;
        case ErrorKind::Model: any_model = true; break;
        case ErrorKind::Internal: any_internal = true; break;
      }
    }
  }
  if (machine) std::cout << machine_out.dump(2) << "\n";
  if (any_internal) return kExitInternal;
  if (any_parse) return kExitParse;
  if (any_model) return kExitModel;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Kodaira classification of singular fibers of elliptic surfaces "
      "over the projective line, and Bott-vanishing decisions for ample "
      "polarizations"};
  app.require_subcommand(1);

  std::string classify_file, analyze_file, batch_dir;
  bool classify_machine = false, analyze_machine = false, family_machine = false,
       lemmas_machine = false, batch_machine = false;

  CLI::App* classify = app.add_subcommand("classify", "classify the singular fibers of a weierstrass model file");
  classify->add_option("file", classify_file, "model file (JSON)")->required();
  classify->add_flag("--machine", classify_machine, "emit the machine-readable report");

  CLI::App* analyze = app.add_subcommand("analyze", "full Bott-vanishing analysis of a model file");
  analyze->add_option("file", analyze_file, "model file (JSON)")->required();
  analyze->add_flag("--machine", analyze_machine, "emit the machine-readable report");

  FamilyFlags ff;
  CLI::App* family = app.add_subcommand("family", "analyze a family member given on the command line");
  family->add_option("--kind", ff.kind,
                     "weierstrass | double_cover | hypersurface | complete_intersection | declared_summary")
      ->required();
  family->add_option("--beta", ff.beta, "chi(O_X) (weierstrass, declared_summary)");
  family->add_option("--lambda", ff.lambda, "comma-separated coefficients, low to high");
  family->add_option("--mu", ff.mu, "comma-separated coefficients, low to high");
  auto* m_opt = family->add_option("--m", ff.m, "polarization twist m");
  family->add_option("--l", ff.l, "double cover branch parameter");
  family->add_option("--a", ff.a, "first bidegree parameter");
  family->add_option("--b", ff.b, "second bidegree parameter");
  family->add_option("--r", ff.r, "declared fiber degree A.E");
  family->add_option("--A2", ff.a_sq, "declared self-intersection A^2");
  auto* declared_opt = family->add_option(
      "--declared-types", ff.declared, "comma-separated subset of II,III,IV, or \"none\"");
  family->add_flag("--machine", family_machine, "emit the machine-readable report");

  unsigned max_n = 5, max_degree = 4;
  CLI::App* lemmas = app.add_subcommand(
      "verify-lemmas", "run the local-geometry oracles against the expected table");
  lemmas->add_option("--max-n", max_n, "largest component count (default 5)");
  lemmas->add_option("--max-degree", max_degree, "largest polarization degree (default 4)");
  lemmas->add_flag("--machine", lemmas_machine, "emit the machine-readable report");

  CLI::App* batch = app.add_subcommand("batch", "analyze every .json model file in a directory");
  batch->add_option("dir", batch_dir, "directory of model files")->required();
  batch->add_flag("--machine", batch_machine, "emit machine-readable reports");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      const Outcome outcome = run_classify(parse_model_text(read_file(classify_file)));
      emit(outcome, classify_machine);
      return outcome.exit_code;
    }
    if (analyze->parsed()) {
      const Outcome outcome = run_analyze(parse_model_text(read_file(analyze_file)));
      emit(outcome, analyze_machine);
      return outcome.exit_code;
    }
    if (family->parsed()) {
      ff.m_set = m_opt->count() > 0;
      ff.declared_set = declared_opt->count() > 0;
      const Outcome outcome =
          run_analyze(parse_model_text(family_flags_to_model(ff).dump()));
      emit(outcome, family_machine);
      return outcome.exit_code;
    }
    if (lemmas->parsed()) {
      if (max_n < 1 || max_degree < 1) throw ParseError("--max-n and --max-degree must be >= 1");
      const Outcome outcome = run_verify_lemmas(max_n, max_degree);
      emit(outcome, lemmas_machine);
      return outcome.exit_code;
    }
    if (batch->parsed()) {
      return run_batch(batch_dir, batch_machine);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
