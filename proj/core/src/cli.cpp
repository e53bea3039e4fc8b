#include "elliskernel/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "elliskernel/errors.hpp"
#include "elliskernel/json_io.hpp"
#include "json.hpp"

namespace elliskernel {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open \"" + path + "\"");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonFlags {
  bool json = false;
  unsigned max_power = 64;
  std::optional<std::size_t> complexity_bound;
  std::optional<std::size_t> window;
  std::size_t budget = 10'000'000;
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_flag("--json", flags->json, "emit the JSON report instead of the derived view");
  cmd->add_option("--max-power", flags->max_power, "power budget for simplification")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--complexity-bound", flags->complexity_bound,
                  "aperiodicity complexity bound (default: l^2 |A|^2)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--window", flags->window,
                  "asymptotic pair search window (default: l^2 |A|)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", flags->budget, "isomorphism search budget")
      ->check(CLI::PositiveNumber);
}

AnalyzeOptions analyze_options(const CommonFlags& f) {
  AnalyzeOptions opt;
  opt.max_power = f.max_power;
  opt.complexity_bound = f.complexity_bound;
  opt.iso_budget = f.budget;
  return opt;
}

void emit(std::ostream& out, const std::string& json_text, bool as_json) {
  if (as_json) {
    out << json_text << "\n";
  } else {
    out << render_human(json_text);
  }
}

int do_analyze(const std::string& file, const CommonFlags& flags,
               std::ostream& out) {
  Substitution s = substitution_from_json(slurp(file));
  KernelReport rep = kernel_report(s, analyze_options(flags));
  emit(out, kernel_report_to_json(rep, true), flags.json);
  return 0;
}

int do_compare(const std::string& f1, const std::string& f2,
               const CommonFlags& flags, std::ostream& out) {
  AnalyzeOptions opt = analyze_options(flags);
  KernelReport a = kernel_report(substitution_from_json(slurp(f1)), opt);
  KernelReport b = kernel_report(substitution_from_json(slurp(f2)), opt);
  KernelComparison c = compare_kernels(a, b, flags.budget);
  emit(out, comparison_to_json(c, a, b, true), flags.json);
  return 0;
}

nlohmann::ordered_json cover_entry(const Substitution& base, const GroupTable& g,
                                   const Cocycle& q, std::size_t window) {
  CoverResult c = build_cover(base, g, q);
  std::vector<WordPair> pairs;
  if (c.nontrivial) {
    pairs = asymptotic_pair_words(base, window);
    if (!pairs.empty()) {
      // Column rank stands in for the coincidence rank only at trivial
      // height.
      std::optional<unsigned> cr_base;
      if (base.length() && height(base) == 1) {
        cr_base = static_cast<unsigned>(column_rank(base));
      }
      cover_invariants(c, pairs, cr_base);
    }
  }
  return nlohmann::ordered_json::parse(cover_result_to_json(c, pairs, false));
}

int do_cover(const std::string& file, const std::string& group_file,
             const std::optional<std::string>& cocycle_file, bool search,
             const CommonFlags& flags, std::ostream& out) {
  Substitution base = substitution_from_json(slurp(file));
  GroupTable g = group_from_json(slurp(group_file));
  std::size_t window = flags.window.value_or(default_pair_window(base));
  nlohmann::ordered_json result;
  if (search) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const Cocycle& q : solve_cocycles(base, g)) {
      list.push_back(cover_entry(base, g, q, window));
    }
    result["covers"] = list;
  } else {
    Cocycle q = cocycle_from_json(slurp(*cocycle_file), base, g);
    result = cover_entry(base, g, q, window);
  }
  emit(out, result.dump(2) + "\n", flags.json);
  return 0;
}

int do_sturmian_classify(const std::string& file, const CommonFlags& flags,
                         std::ostream& out) {
  SturmianParams p = sturmian_params_from_json(slurp(file));
  EllisModel m = ellis_model(p);
  nlohmann::ordered_json obj;
  obj["params"] = nlohmann::ordered_json::parse(sturmian_params_to_json(p));
  obj["type"] = static_cast<int>(classify_kappa(p));
  obj["ellis_model"] = {{"idempotents", m.idempotent_count},
                        {"rotation", m.rotation.str()},
                        {"description", m.description}};
  emit(out, obj.dump(2) + "\n", flags.json);
  return 0;
}

int do_sturmian_compare(const std::string& f1, const std::string& f2,
                        const CommonFlags& flags, std::ostream& out) {
  SturmianParams a = sturmian_params_from_json(slurp(f1));
  SturmianParams b = sturmian_params_from_json(slurp(f2));
  nlohmann::ordered_json obj;
  obj["left_type"] = static_cast<int>(classify_kappa(a));
  obj["right_type"] = static_cast<int>(classify_kappa(b));
  obj["verdict"] = factor_verdict_name(factor_verdict(a, b));
  obj["reverse_verdict"] = factor_verdict_name(factor_verdict(b, a));
  emit(out, obj.dump(2) + "\n", flags.json);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"kernel computations for constant-length substitution shifts"};
  app.require_subcommand(1);

  CommonFlags flags;

  std::string analyze_file;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "compute the kernel report of a substitution");
  analyze->add_option("file", analyze_file, "substitution JSON document")
      ->required();
  add_common(analyze, &flags);

  std::string cmp1, cmp2;
  CLI::App* compare = app.add_subcommand(
      "compare", "decide algebraic isomorphism of two kernels");
  compare->add_option("file1", cmp1)->required();
  compare->add_option("file2", cmp2)->required();
  add_common(compare, &flags);

  std::string cover_file, cover_group;
  std::string cocycle_file;
  bool search = false;
  CLI::App* cover = app.add_subcommand(
      "cover", "build group-labelled skew-product covers");
  cover->add_option("file", cover_file)->required();
  cover->add_option("group-file", cover_group)->required();
  CLI::Option* oc = cover->add_option("--cocycle", cocycle_file, "cocycle JSON document");
  CLI::Option* os = cover->add_flag("--search", search, "enumerate all cocycles");
  oc->excludes(os);
  add_common(cover, &flags);

  std::string st_file;
  CLI::App* st_classify = app.add_subcommand(
      "sturmian-classify", "classify the cut value of two-cut parameters");
  st_classify->add_option("params-file", st_file)->required();
  add_common(st_classify, &flags);

  std::string st1, st2;
  CLI::App* st_compare = app.add_subcommand(
      "sturmian-compare", "factor-map verdict between two parameter sets");
  st_compare->add_option("params-file1", st1)->required();
  st_compare->add_option("params-file2", st2)->required();
  add_common(st_compare, &flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*analyze) {
      return do_analyze(analyze_file, flags, out);
    }
    if (*compare) {
      return do_compare(cmp1, cmp2, flags, out);
    }
    if (*cover) {
      if (!search && cocycle_file.empty()) {
        err << "error: cover needs --cocycle FILE or --search\n";
        return 1;
      }
      return do_cover(cover_file, cover_group,
                      cocycle_file.empty() ? std::nullopt
                                           : std::optional<std::string>(cocycle_file),
                      search, flags, out);
    }
    if (*st_classify) {
      return do_sturmian_classify(st_file, flags, out);
    }
    if (*st_compare) {
      return do_sturmian_compare(st1, st2, flags, out);
    }
  } catch (const DomainError& e) {
    nlohmann::ordered_json obj;
    obj["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    out << obj.dump(2) << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace elliskernel
