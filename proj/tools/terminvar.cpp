#include <iostream>

#include "CLI11.hpp"
#include "terminvar/reports.hpp"

using namespace terminvar;

namespace {

enum Exit { Ok = 0, Mismatch = 1, Usage = 2, Cap = 3 };

int models_list() {
  for (ModelName id : all_model_names()) {
    const SurfaceModel &m = build_model(id);
    std::cout << m.name << "  " << m.display << "  |L| = " << m.group.size() << "  G0:";
    for (auto &[g0, gens] : m.g0_generators) std::cout << " " << g0;
    std::cout << "\n";
  }
  return Ok;
}

int invariants(const std::string &spec_path, const std::string &catalog, const std::string &format) {
  std::optional<int> k3;
  GroupSpec spec;
  if (!catalog.empty()) {
    spec = catalogue_spec(catalog);
    if (catalog.rfind("k3/", 0) == 0) k3 = k3_row(catalog.substr(3)).i;
  } else {
    spec = load_group_spec(spec_path);
  }
  ActionGroup G = build_group(spec);
  std::cout << format_record(full_record(G, k3), format);
  return Ok;
}

int singularities(const std::string &catalog, const std::string &format) {
  if (catalog.rfind("k3/", 0) == 0) {
    nlohmann::ordered_json j;
    j["census"] = census_json(census_n3(k3_row(catalog.substr(3)).i));
    j["note"] = "n = 3 counts come from closed forms; no point configuration is enumerated";
    std::cout << j.dump(2) << "\n";
    return Ok;
  }
  SingularConfiguration c = configuration_report(build_group(catalogue_spec(catalog)));
  if (format == "json") {
    std::cout << configuration_json(c).dump(2) << "\n";
    return Ok;
  }
  std::cout << "surfaces:\n";
  for (auto &s : c.surfaces) std::cout << "  F" << s.id << " " << s.type << " " << s.pattern << "\n";
  std::cout << "points (one per orbit):\n";
  for (auto &p : c.points) {
    std::cout << "  " << p.local_model << " orbit " << p.orbit_size << (p.translation_type ? " translation" : "")
              << " on {";
    for (size_t i = 0; i < p.on_surfaces.size(); ++i) std::cout << (i ? "," : "") << "F" << p.on_surfaces[i];
    std::cout << "} at " << p.representative << "\n";
  }
  std::cout << "census: a2=" << c.census.a2 << " a3=" << c.census.a3 << " a4=" << c.census.a4 << " a6=" << c.census.a6
            << "\n";
  return Ok;
}

int enumerate(const std::string &model, const std::string &g0, int n, const std::string &filter) {
  ActionGroup A = ambient_group(build_model(model), g0, n);
  std::vector<ActionGroup> subs = subgroup_classes(A);
  std::set<std::string> strings;
  size_t kept = 0;
  for (auto &H : subs) {
    if (filter == "surjective" && !surjects_onto_linear(H, A)) continue;
    ++kept;
    std::string s = invariant_string(invariant_record(H));
    strings.insert(s);
    std::cout << H.order() << " | " << s << " | gens:";
    for (Code c : H.generators()) std::cout << " [" << A.ambient().describe(c) << "]";
    std::cout << "\n";
  }
  std::cout << "ambient order " << A.order() << ", " << subs.size() << " conjugacy classes of subgroups, " << kept
            << " kept, " << strings.size() << " distinct invariant strings\n";
  return Ok;
}

int verify(const std::string &name, int jobs) {
  std::vector<std::string> names = name == "all" ? table_names() : std::vector<std::string>{name};
  size_t total = 0;
  for (auto &t : names) {
    table_caption(t);
    VerifyReport r = verify_table(t, jobs);
    total += r.mismatches.size();
    std::cout << format_verify(r);
  }
  std::cout << total << " mismatches\n";
  return total ? Mismatch : Ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Invariants of terminalized quotients of generalized Kummer varieties and Hilbert squares"};
  app.require_subcommand(1);

  auto *models = app.add_subcommand("models", "Surface models");
  auto *models_ls = models->add_subcommand("list", "List models and their realizable G0");
  models->require_subcommand(1);

  std::string spec_path, catalog, format = "json";
  auto *inv = app.add_subcommand("invariants", "Invariant record of one action");
  auto *spec_opt = inv->add_option("--spec", spec_path, "Group spec JSON file");
  auto *cat_opt = inv->add_option("--catalog", catalog, "Catalogue row, e.g. k2/162,54 or k3/8,5");
  spec_opt->excludes(cat_opt);
  inv->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));

  std::string sing_catalog, sing_format = "json";
  auto *sing = app.add_subcommand("singularities", "Singular configuration of a catalogue row");
  sing->add_option("--catalog", sing_catalog)->required();
  sing->add_option("--format", sing_format)->check(CLI::IsMember({"json", "text"}));

  std::string model, g0, filter;
  int n = 2;
  auto *en = app.add_subcommand("enumerate", "Subgroups of A[n+1] x| G0 up to conjugacy");
  en->add_option("--model", model)->required();
  en->add_option("--g0", g0)->required();
  en->add_option("--n", n)->check(CLI::IsMember({2, 3}));
  en->add_option("--filter", filter)->check(CLI::IsMember({"surjective"}));

  std::string table_name, table_format = "md";
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto *table = app.add_subcommand("table", "Emit a reproduced table");
  table->add_option("name", table_name)->required()->check(CLI::IsMember(table_names()));
  table->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv", "md"}));
  table->add_option("--jobs", jobs);

  std::string verify_name = "all";
  auto *ver = app.add_subcommand("verify", "Compare computed tables with the expected data");
  std::vector<std::string> verify_choices = table_names();
  verify_choices.push_back("all");
  ver->add_option("name", verify_name)->check(CLI::IsMember(verify_choices));
  ver->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return Usage;
  }

  try {
    if (models_ls->parsed()) return models_list();
    if (inv->parsed()) {
      if (spec_path.empty() && catalog.empty()) {
        std::cerr << "invariants needs --spec FILE or --catalog ID\n";
        return Usage;
      }
      return invariants(spec_path, catalog, format);
    }
    if (sing->parsed()) return singularities(sing_catalog, sing_format);
    if (en->parsed()) return enumerate(model, g0, n, filter);
    if (table->parsed()) {
      std::cout << format_table(computed_table(table_name, jobs), table_format);
      return Ok;
    }
    if (ver->parsed()) return verify(verify_name, jobs);
  } catch (const SizeCapExceeded &e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return Cap;
  } catch (const SpecError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}
