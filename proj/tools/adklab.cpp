#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "adklab/json_io.hpp"

using namespace adklab;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return j;
}

DomainModel load_model(const std::string& path_or_name) {
  if (auto m = make_builtin(path_or_name)) return *m;
  Json j = read_json_file(path_or_name);
  return model_from_json(j);
}

struct Output {
  std::string json_path;
  bool quiet = false;

  void emit(const Json& envelope) const {
    std::string text = envelope.dump(2) + "\n";
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      out << text;
      if (!quiet) std::cout << "report written to " << json_path << "\n";
    } else if (!quiet) {
      std::cout << text;
    }
  }
};

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const AdkError& e) {
    Json err;
    err["error"] = error_code_name(e.code());
    err["message"] = e.what();
    if (!e.detail().empty()) err["detail"] = e.detail();
    std::cout << err.dump(2) << "\n";
    bool validation = e.code() == ErrorCode::ParseError ||
                      e.code() == ErrorCode::InvalidModel ||
                      e.code() == ErrorCode::InvalidFunction;
    return validation ? 1 : 2;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "Internal";
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adklab: criticality, factorization and freeness bookkeeping for "
               "almost Dedekind domains presented by valuation data"};
  app.require_subcommand(1);

  std::uint64_t max_n = 16;
  std::uint64_t depth = 200;
  Output out;
  app.add_option("--max-n", max_n, "largest finite criticality level probed");
  app.add_option("--truncation-depth", depth, "point budget for sampled windows");
  app.add_option("--json", out.json_path, "write the report to a file");
  app.add_flag("--quiet", out.quiet, "suppress stdout chatter");

  std::string model_arg, ideal_arg, mode = "radical", export_name, invgroup_element;
  std::uint64_t bound_n = 2;
  std::uint64_t window_depth = 40;

  CLI::App* analyze = app.add_subcommand("analyze", "criticality report and crit chain");
  analyze->add_option("model", model_arg, "model file or builtin name")->required();

  CLI::App* factor = app.add_subcommand("factor", "factor an ideal function");
  factor->add_option("model", model_arg, "model file or builtin name")->required();
  factor->add_option("ideal", ideal_arg, "ideal JSON file")->required();
  factor->add_option("--mode", mode, "radical|bounded")
      ->check(CLI::IsMember({"radical", "bounded"}));
  factor->add_option("--n", bound_n, "bound for --mode bounded");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the theorem suite");
  verify_cmd->add_option("model", model_arg, "model file or builtin name")->required();

  CLI::App* builtin = app.add_subcommand("builtin", "list or export builtin models");
  CLI::App* builtin_list = builtin->add_subcommand("list", "print the catalog");
  CLI::App* builtin_export = builtin->add_subcommand("export", "emit a builtin as JSON");
  builtin_export->add_option("name", export_name, "builtin name")->required();

  CLI::App* invgroup = app.add_subcommand("invgroup", "kernel/profile/rank bookkeeping");
  invgroup->add_option("model", model_arg, "model file or builtin name")->required();
  invgroup->add_option("--element", invgroup_element,
                       "ideal JSON file for kernel/profile queries");
  invgroup->add_option("--window-depth", window_depth, "points in the rank window");

  CLI11_PARSE(app, argc, argv);

  return guarded([&]() -> int {
    if (builtin_list->parsed()) {
      for (const auto& n : builtin_names()) std::cout << n << "\n";
      std::cout << "patterns: example-R (R>=2), ladder-K (1<=K<=6), dedekind-finite-N\n";
      return 0;
    }
    if (builtin_export->parsed()) {
      auto m = make_builtin(export_name);
      if (!m) fail(ErrorCode::ParseError, "unknown builtin '" + export_name + "'");
      std::string text = to_json(*m).dump(2) + "\n";
      if (!out.json_path.empty()) {
        std::ofstream f(out.json_path, std::ios::binary);
        f << text;
      } else {
        std::cout << text;
      }
      return 0;
    }

    DomainModel model = load_model(model_arg);
    auto violations = model.validate();
    if (!violations.empty()) {
      Json err;
      err["error"] = "InvalidModel";
      Json list = Json::array();
      for (const auto& v : violations) {
        Json row;
        row["code"] = v.code;
        if (v.point) row["point"] = v.point->to_string();
        row["message"] = v.message;
        list.push_back(std::move(row));
      }
      err["violations"] = std::move(list);
      std::cout << err.dump(2) << "\n";
      return 1;
    }

    CritConfig cc{max_n, 64};
    if (analyze->parsed()) {
      Json payload;
      payload["crit_report"] = to_json(compute_crit_report(model, cc));
      payload["chain_report"] = to_json(compute_crit_chain(model, cc));
      out.emit(report_envelope("analyze", model, std::move(payload)));
      return 0;
    }
    if (factor->parsed()) {
      IdealFunction f = ideal_from_json(read_json_file(ideal_arg), model);
      Factorization fz = mode == "radical" ? radical_factorization(f)
                                           : n_bounded_factorization(model, f, bound_n);
      out.emit(report_envelope("factor", model, to_json(fz)));
      return 0;
    }
    if (verify_cmd->parsed()) {
      VerifyConfig vc;
      vc.max_n = max_n;
      vc.sample_depth = depth;
      if (const char* seed = std::getenv("ADKLAB_SEED"))
        vc.seed = std::strtoull(seed, nullptr, 0);
      auto checks = run_suite(model, vc);
      out.emit(report_envelope("verify", model, to_json(checks)));
      return all_green(checks) ? 0 : 2;
    }
    if (invgroup->parsed()) {
      Json payload;
      std::vector<GroupElement> elems;
      for (const auto& f : canonical_generators(model, 12))
        elems.push_back({FractionalFunction::from_integral(f), "canonical"});
      payload["canonical_rank"] =
          to_json(zrank(elems, truncation_points(model.space(), window_depth)));
      if (!invgroup_element.empty()) {
        IdealFunction f = ideal_from_json(read_json_file(invgroup_element), model);
        GroupElement g{FractionalFunction::from_integral(f), invgroup_element};
        payload["kernel_omega"] = to_json(kernel_membership(model, g, std::nullopt));
        ComponentProfile prof = component_profile(model, g);
        Json layers = Json::array();
        for (const auto& l : prof.layers) {
          Json row;
          row["alpha"] = l.alpha.to_string();
          row["window"] = to_json(l.window);
          row["zero"] = l.zero;
          layers.push_back(std::move(row));
        }
        payload["component_profile"] = std::move(layers);
      }
      out.emit(report_envelope("invgroup", model, std::move(payload)));
      return 0;
    }
    return 0;
  });
}
