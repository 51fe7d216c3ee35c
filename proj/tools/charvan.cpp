// charvan: exact character tables, vanishing-element analysis, and the
// theorem verification harness. Exit codes: 0 pass, 1 counterexample,
// 2 input error, 3 resource cap.

#include "charvan/builtin.hpp"
#include "charvan/cache.hpp"
#include "charvan/error.hpp"
#include "charvan/groupfile.hpp"
#include "charvan/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace {

using namespace charvan;

// FILE arguments accept either a path to a group definition file or
// "builtin:NAME" for the built-in catalog.
GroupFile resolve_group(const std::string& source, const Limits& lim) {
  if (source.rfind("builtin:", 0) == 0) {
    BuiltinGroup b = builtin_group(source.substr(8), lim);
    GroupFile gf;
    gf.name = b.name;
    gf.group = std::move(b.group);
    gf.normals = std::move(b.normals);
    return gf;
  }
  return load_group_file(source, lim);
}

int cmd_table(const std::string& file, bool json, const std::string& cache_dir, int jobs) {
  Context ctx;
  ctx.jobs = jobs;
  ctx.cache_dir = cache_dir;
  GroupFile gf = resolve_group(file, ctx.limits);
  auto bundle = ctx.bundle(gf.group, gf.name);
  auto table = bundle->table();
  if (json)
    std::cout << table->to_json(gf.name) << "\n";
  else
    std::cout << table_text(*table, gf.name);
  return 0;
}

int cmd_classes(const std::string& file) {
  Context ctx;
  GroupFile gf = resolve_group(file, ctx.limits);
  auto cd = ClassData::compute(gf.group, ctx.limits);
  std::cout << gf.name << ": order " << cd->order() << ", " << cd->count()
            << " classes, exponent " << cd->exponent() << "\n";
  for (std::size_t i = 0; i < cd->count(); ++i) {
    const auto& c = cd->cls(i);
    std::cout << i << ": rep " << cycle_string(c.rep) << ", size " << c.size
              << ", order " << c.element_order << ", centralizer "
              << c.centralizer_order << "\n";
  }
  return 0;
}

int cmd_vanishing(const std::string& file, const std::string& normal_id) {
  Context ctx;
  GroupFile gf = resolve_group(file, ctx.limits);
  auto bundle = ctx.bundle(gf.group, gf.name);
  const VanishingProfile& vp = bundle->vanishing();
  const ClassData& cd = vp.classes();

  const PermGroup* filter = nullptr;
  if (!normal_id.empty()) {
    filter = gf.normal(normal_id);
    if (!filter) input_error("no normal subgroup '" + normal_id + "' in " + gf.name);
  }

  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cd.count(); ++i) {
    if (filter && !filter->contains(cd.cls(i).rep)) continue;
    nlohmann::ordered_json e;
    e["rep"] = cycle_string(cd.cls(i).rep);
    e["order"] = cd.cls(i).element_order;
    e["size"] = cd.cls(i).size;
    e["vanishing"] = static_cast<bool>(vp.vanishing[i]);
    e["witness"] = vp.witness[i];
    arr.push_back(std::move(e));
  }
  std::cout << arr.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& file, const std::string& theorem, const std::string& p,
               const std::string& pi, const std::string& normal_id) {
  Context ctx;
  GroupFile gf = resolve_group(file, ctx.limits);
  const PermGroup* n = nullptr;
  if (!normal_id.empty()) {
    n = gf.normal(normal_id);
    if (!n) input_error("no normal subgroup '" + normal_id + "' in " + gf.name);
  }
  std::string param = !p.empty() ? p : pi;
  VerificationReport r =
      run_theorem(ctx, theorem, gf.group, gf.name, n, normal_id, param);
  std::cout << report_line(r) << "\n";
  for (const auto& w : r.witnesses) std::cout << "    " << w << "\n";
  return r.counterexample() || r.finding() ? 1 : 0;
}

int cmd_corpus(std::vector<std::string> theorems, int jobs, bool json) {
  Context ctx;
  ctx.jobs = 1; // per-case parallelism comes from the worker pool
  if (theorems.empty()) theorems = theorem_ids;
  CorpusReport r = run_corpus(ctx, theorems, jobs);
  if (json)
    std::cout << corpus_report_json(r) << "\n";
  else
    std::cout << corpus_report_text(r);
  return r.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character tables and vanishing-element theorem checks"};
  app.require_subcommand(1);

  std::string file, cache_dir, normal_id, theorem, p_str, pi_str;
  bool json = false;
  int jobs = 1;
  std::vector<std::string> theorems;

  auto* table = app.add_subcommand("table", "irreducible character table");
  table->add_option("FILE", file, "group file or builtin:NAME")->required();
  table->add_flag("--json", json, "emit the JSON schema");
  table->add_option("--cache-dir", cache_dir, "table cache directory");
  table->add_option("--jobs", jobs, "worker threads");

  auto* classes = app.add_subcommand("classes", "conjugacy classes");
  classes->add_option("FILE", file, "group file or builtin:NAME")->required();

  auto* vanishing = app.add_subcommand("vanishing", "vanishing classes (JSON)");
  vanishing->add_option("FILE", file, "group file or builtin:NAME")->required();
  vanishing->add_option("--normal", normal_id, "restrict to a named normal subgroup");

  auto* verify = app.add_subcommand("verify", "check one theorem instance");
  verify->add_option("FILE", file, "group file or builtin:NAME")->required();
  verify->add_option("--theorem", theorem, "theorem id")->required();
  verify->add_option("--p", p_str, "prime parameter");
  verify->add_option("--pi", pi_str, "comma-separated prime set");
  verify->add_option("--normal", normal_id, "named normal subgroup (default: G)");

  auto* corpus = app.add_subcommand("corpus", "run the built-in verification corpus");
  corpus->add_option("--theorem", theorems, "theorem ids to run (default: all)");
  corpus->add_option("--jobs", jobs, "parallel case workers");
  corpus->add_flag("--json", json, "JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (table->parsed()) return cmd_table(file, json, cache_dir, jobs);
    if (classes->parsed()) return cmd_classes(file);
    if (vanishing->parsed()) return cmd_vanishing(file, normal_id);
    if (verify->parsed()) return cmd_verify(file, theorem, p_str, pi_str, normal_id);
    if (corpus->parsed()) return cmd_corpus(theorems, jobs, json);
  } catch (const charvan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case charvan::Error::Kind::Input: return 2;
      case charvan::Error::Kind::Resource: return 3;
      case charvan::Error::Kind::Internal: return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
