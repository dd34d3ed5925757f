#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbigeo/classifier.hpp"
#include "orbigeo/extremal.hpp"
#include "orbigeo/report.hpp"
#include "orbigeo/self_intersection.hpp"
#include "orbigeo/triangle_group.hpp"
#include "orbigeo/word.hpp"

namespace orbigeo::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_tolerance(const std::string& text, const char* source) {
  std::size_t used = 0;
  double tol = 0.0;
  try {
    tol = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(tol > 0.0)) {
    throw UsageError(std::string(source) + ": expected a positive number, got '" + text + "'");
  }
  return tol;
}

PairWord require_pair_word(const std::string& token) {
  const auto w = parse_pair_word(token);
  if (!w) throw UsageError("word must be one of ba, bc, ac; got '" + token + "'");
  return *w;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw UsageError("failed writing '" + path + "'");
}

struct Settings {
  bool reproducible = false;
  std::optional<std::string> tol_flag;
  double tol = kDefaultTolerance;
};

Provenance provenance(const Settings& s, std::optional<int> cutoff = std::nullopt,
                      std::optional<int> budget = std::nullopt) {
  Provenance p;
  p.tolerance = s.tol;
  p.cutoff = cutoff;
  p.word_budget = budget;
  if (!s.reproducible) p.generated_at = utc_timestamp();
  return p;
}

void emit(std::ostream& out, const Provenance& p, json result) {
  out << json{{"provenance", to_json(p)}, {"result", std::move(result)}}.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed geodesics on hyperbolic triangle group orbifolds", "orbigeo"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(ORBIGEO_VERSION));

  Settings settings;
  app.add_flag("--reproducible", settings.reproducible, "Omit the timestamp from provenance");
  app.add_option("--tol", settings.tol_flag, "Classification tolerance (default 1e-9, env ORBIGEO_TOL)");

  std::string sig_text;
  std::string word_text;
  std::string out_path;
  std::string punctures_text = "all";
  int cutoff = kDefaultCutoff;
  int budget = kDefaultWordBudget;
  int shift = 0;
  bool serial = false;
  std::optional<std::string> csv_path;
  std::optional<std::string> axis_text;

  auto* classify = app.add_subcommand("classify", "Classify BA^-1, BC^-1, AC^-1");
  classify->add_option("--sig", sig_text, "Signature p,q,r (inf for a puncture)")->required();

  auto* lambda = app.add_subcommand("lambda", "Normalization parameter lambda and E");
  lambda->add_option("--sig", sig_text, "Signature p,q,r")->required();

  auto* length = app.add_subcommand("length", "|trace| and translation length of a pair element");
  length->add_option("--sig", sig_text, "Signature p,q,r")->required();
  length->add_option("--word", word_text, "ba, bc or ac")->required();

  auto* selfint = app.add_subcommand("selfint", "Self-intersection count of a closed geodesic");
  selfint->add_option("--sig", sig_text, "Signature p,q,r")->required();
  selfint->add_option("--word", word_text, "ba, bc, ac or a word in A a B b")->required();
  selfint->add_option("--budget", budget, "Conjugator word length budget")
      ->check(CLI::Range(0, 16));
  selfint->add_option("--shift", shift, "Start the period at g^k of the base point");
  selfint->add_flag("--serial", serial, "Use the serial kernels");

  auto* search = app.add_subcommand("search", "Shortest figure eight geodesic");
  search->add_option("--punctures", punctures_text, "0, 1, 2, 3 or all")
      ->check(CLI::IsMember({"0", "1", "2", "3", "all"}));
  search->add_option("--cutoff", cutoff, "Largest finite order searched")->check(CLI::Range(8, 200));
  search->add_flag("--serial", serial, "Use the serial kernels");

  auto* table1 = app.add_subcommand("table1", "Reproduce the table of extremal geodesics");
  table1->add_option("--csv", csv_path, "Also write the table as CSV (- for stdout)");
  table1->add_option("--cutoff", cutoff, "Largest finite order searched")->check(CLI::Range(8, 200));
  table1->add_option("--budget", budget, "Word budget for the order-two geodesic search")
      ->check(CLI::Range(0, 12));

  auto* render = app.add_subcommand("render", "SVG of the fundamental domain");
  render->add_option("--sig", sig_text, "Signature p,q,r")->required();
  render->add_option("--axis", axis_text, "Overlay the axis of ba, bc or ac");
  render->add_option("--out", out_path, "Output file (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (e.get_name() == "CallForVersion" ? std::string(ORBIGEO_VERSION) + "\n"
                                               : app.help());
      return kSuccess;
    }
    err << "orbigeo: " << e.what() << '\n';
    return kUsageError;
  }

  const Execution exec = serial ? Execution::serial : Execution::parallel;
  try {
    if (settings.tol_flag) {
      settings.tol = parse_tolerance(*settings.tol_flag, "--tol");
    } else if (const char* env = std::getenv("ORBIGEO_TOL"); env && *env) {
      settings.tol = parse_tolerance(env, "ORBIGEO_TOL");
    }
    const double tol = settings.tol;

    if (classify->parsed()) {
      const auto sig = TriangleSignature::parse(sig_text);
      json records = json::array();
      for (const auto& rec : classify_signature(sig, tol)) records.push_back(to_json(rec));
      emit(out, provenance(settings), records);
    } else if (lambda->parsed()) {
      const auto sig = TriangleSignature::parse(sig_text);
      emit(out, provenance(settings),
           {{"signature", sig.to_string()}, {"lambda", lambda_of(sig)}, {"E", lambda_numerator(sig)}});
    } else if (length->parsed()) {
      const auto sig = TriangleSignature::parse(sig_text);
      const auto rec = classify_pair_element(sig, require_pair_word(word_text), tol);
      const json full = to_json(rec);
      emit(out, provenance(settings),
           {{"signature", sig.to_string()},
            {"word", full["word"]},
            {"isometry", full["isometry"]},
            {"trace_abs", full["trace_abs"]},
            {"length", full["length"]}});
    } else if (selfint->parsed()) {
      const auto sig = TriangleSignature::parse(sig_text);
      const TriangleGroup group = build_group(sig);
      MoebiusMap g;
      std::string word_label;
      if (const auto pw = parse_pair_word(word_text)) {
        g = group.pair_element(*pw);
        word_label = to_string(*pw);
      } else {
        const GroupWord w = GroupWord::parse(word_text);
        g = w.evaluate(group);
        word_label = w.to_string();
      }
      const auto result = self_intersection_count(group, g, budget, {shift, exec});
      json doc = to_json(result);
      doc["signature"] = sig.to_string();
      doc["word"] = word_label;
      emit(out, provenance(settings, std::nullopt, budget), doc);
    } else if (search->parsed()) {
      const auto found = punctures_text == "all"
                             ? global_min_figure8(cutoff, exec, tol)
                             : min_figure8(std::stoi(punctures_text), cutoff, exec, tol);
      emit(out, provenance(settings, cutoff), found ? to_json(*found) : json(nullptr));
    } else if (table1->parsed()) {
      const auto rows = reproduce_table1(cutoff, Execution::parallel, tol);
      const Provenance prov = provenance(settings, cutoff, budget);
      if (csv_path && *csv_path == "-") {
        out << table1_csv(rows, prov);
        return kSuccess;
      }
      if (csv_path) write_file(*csv_path, table1_csv(rows, prov));
      json doc{{"rows", json::array()}};
      for (const auto& row : rows) doc["rows"].push_back(to_json(row));
      const auto candidate = gamma_star_search(budget);
      doc["order_two_candidate"] = candidate ? to_json(*candidate) : json(nullptr);
      emit(out, prov, doc);
    } else if (render->parsed()) {
      const auto sig = TriangleSignature::parse(sig_text);
      RenderOptions options;
      if (axis_text) options.axis = require_pair_word(*axis_text);
      const std::string svg = render_svg(build_group(sig), options, provenance(settings));
      if (out_path.empty()) {
        out << svg;
      } else {
        write_file(out_path, svg);
      }
    }
  } catch (const UsageError& e) {
    err << "orbigeo: " << e.what() << '\n';
    return kUsageError;
  } catch (const InconsistentClassification& e) {
    err << "orbigeo: internal inconsistency: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::domain_error& e) {
    err << "orbigeo: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "orbigeo: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "orbigeo: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kSuccess;
}

}  // namespace orbigeo::cli
