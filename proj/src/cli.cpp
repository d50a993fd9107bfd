#include "reprings/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reprings/completion.hpp"
#include "reprings/config.hpp"
#include "reprings/errors.hpp"
#include "reprings/rep_ring.hpp"
#include "reprings/spectrum.hpp"
#include "reprings/twist.hpp"

namespace reprings::cli {

namespace {

using nlohmann::json;

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json group_json(const FinAbGroup& g) {
  json factors = json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(integer_json(d));
  return {{"free_rank", g.free_rank()}, {"invariant_factors", factors}};
}

json vector_json(const IntVector& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(integer_json(z));
  return a;
}

json weight_list_json(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w);
  return a;
}

Weight parse_weight(const std::string& text, std::size_t rank) {
  Weight w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw InputError("");
      w.push_back(v);
    } catch (const std::exception&) {
      throw InputError("invalid weight \"" + text + "\": expected comma-separated integers");
    }
  }
  if (w.size() != rank)
    throw InputError("weight has " + std::to_string(w.size()) + " entries, datum rank is " +
                     std::to_string(rank));
  return w;
}

struct DatumOptions {
  std::string type;
  int rank = -1;
  std::string variant = "simply_connected";
  std::string file;

  void attach(CLI::App* app) {
    app->add_option("--type", type, "Built-in type: A, B, C, D, G2, GL or T");
    app->add_option("--rank", rank, "Rank of the built-in datum");
    app->add_option("--variant", variant, "simply_connected or adjoint")
        ->check(CLI::IsMember({"simply_connected", "adjoint", "sc", "ad"}));
    app->add_option("--datum-file", file, "JSON root datum file");
  }

  RootDatum resolve(json& echo) const {
    const bool builtin = !type.empty();
    if (builtin == !file.empty())
      throw InputError("give exactly one datum source: --type/--rank or --datum-file");
    if (!builtin) {
      echo["datum_file"] = file;
      return datum_from_spec_text(read_text_file(file));
    }
    if (rank < 0) throw InputError("--rank is required with --type");
    if (rank > 8) throw InputError("--rank must be at most 8");
    echo["type"] = type;
    echo["rank"] = rank;
    if (type != "GL" && type != "T") echo["variant"] = to_string(parse_variant(variant));
    return builtin_datum(type, static_cast<std::size_t>(rank), variant);
  }
};

EvalPoint read_point(const std::string& text, const RootDatum& d, json& echo) {
  const EvalPoint p = parse_point_list(text);
  if (p.rank() != d.rank())
    throw InputError("point has " + std::to_string(p.rank()) + " coordinates, datum rank is " +
                     std::to_string(d.rank()));
  echo["point"] = p.to_strings();
  return p;
}

json presentation_report_json(const PresentationReport& r) {
  return {{"images_invariant", r.images_ok},
          {"relations_vanish", r.relations_vanish},
          {"spans", r.spans},
          {"passed", r.passed()}};
}

struct Command {
  CLI::App* app = nullptr;
  std::function<json(json&)> body;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with root data and representation rings", "reprings"};
  app.require_subcommand(1);

  DatumOptions datum;
  std::string point_text, weight_text, config_path, presentation_path;
  std::int64_t height = 3;
  std::size_t cap = kDefaultWeylCap;
  std::map<std::string, Command> commands;

  auto add = [&](const std::string& name, const std::string& help, bool with_datum) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (with_datum) datum.attach(sub);
    commands[name].app = sub;
    return sub;
  };
  auto with_point = [&](CLI::App* sub) {
    sub->add_option("--point", point_text, "Comma-separated coordinates, e.g. \"zeta(4)^1*2,3/5\"")
        ->required();
  };
  auto with_height = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--height", height, what)->check(CLI::Range(0, 12));
  };

  add("pi1", "Fundamental group X_*(T) / coroot lattice", true);

  add("roots", "All roots and coroots", true)->add_option("--cap", cap, "Maximum number of roots");

  {
    CLI::App* sub = add("orbit", "Weyl orbit of a weight", true);
    sub->add_option("--weight", weight_text, "Comma-separated integers")->required();
    sub->add_option("--cap", cap, "Maximum Weyl group order");
  }
  with_point(add("support", "Support of the maximal ideal of a point", true));
  with_point(add("centralizer", "Levi subsystem centralizing the support of a point", true));
  {
    CLI::App* sub = add("fiber", "Maximal ideals of R(T) over the image of a point in R(G)", true);
    with_point(sub);
    with_height(sub, "Orbit sums up to this height are evaluated on the fiber");
  }
  with_point(add("stabilizer", "Geometric, ideal and Levi stabilizers of a point", true));
  {
    CLI::App* sub = add("character", "Irreducible character of a dominant weight", true);
    sub->add_option("--weight", weight_text, "Comma-separated integers")->required();
  }
  {
    CLI::App* sub = add("twist-check", "Augmentation of twisted orbit sums versus evaluation", true);
    with_point(sub);
    with_height(sub, "Orbit sums up to this height are used as probes");
  }
  add("nal-check", "Compare truncated completions of R(G) and R(Z) at a point", false)
      ->add_option("--config", config_path, "Curated case JSON file")
      ->required();
  {
    CLI::App* sub = add("validate", "Validate a presentation of the invariant ring", true);
    sub->add_option("--presentation", presentation_path, "Presentation JSON file")->required();
    with_height(sub, "Orbit sums up to this height must be spanned");
  }

  commands["pi1"].body = [&](json& echo) {
    return group_json(fundamental_group(datum.resolve(echo)));
  };
  commands["roots"].body = [&](json& echo) {
    const RootDatum d = datum.resolve(echo);
    json roots = json::array();
    std::size_t positive = 0;
    for (const auto& r : all_roots(d, cap)) {
      roots.push_back({{"root", r.root}, {"coroot", r.coroot}, {"positive", r.positive()}});
      positive += r.positive() ? 1 : 0;
    }
    return json{{"count", roots.size()}, {"positive_count", positive}, {"roots", roots}};
  };
  commands["orbit"].body = [&](json& echo) {
    const RootDatum d = datum.resolve(echo);
    const Weight v = parse_weight(weight_text, d.rank());
    echo["weight"] = v;
    const auto orb = orbit(weyl_group(d, cap), v);
    return json{{"dominant", dominant_representative(d, v)}, {"orbit", weight_list_json(orb)},
                {"size", orb.size()}};
  };
  commands["support"].body = [&](json& echo) {
    const RootDatum d = datum.resolve(echo);
    const SupportDesc s = support(read_point(point_text, d, echo));
    return json{{"connected", s.connected}, {"quotient", group_json(s.quotient)}};
  };
  commands["centralizer"].body = [&](json& echo) {
    const RootDatum d = datum.resolve(echo);
    const SupportDesc s = support(read_point(point_text, d, echo));
    const LeviDatum levi = centralizer_subsystem(d, s.kernel_lattice);
    json basis = json::array();
    for (const auto& v : s.kernel_lattice.basis()) basis.push_back(vector_json(v));
    json roots = json::array();
    for (const auto& r : levi.roots) roots.push_back(r.root);
    return json{{"kernel_basis", basis},
                {"connected", s.connected},
                {"roots", roots},
                {"weyl_order", levi.weyl_subgroup.order()},
                {"fundamental_group", group_json(fundamental_group(levi.as_root_datum()))}};
  };
  commands["fiber"].body = [&](json& echo) {
    const RootDatum d = datum.resolve(echo);
    const EvalPoint p = read_point(point_text, d, echo);
    echo["height"] = height;
    const auto fiber = fiber_over_rg(d, p);
    json points = json::array();
    for (const auto& q : fiber) points.push_back(q.to_strings());
    return json{{"invariants_agree", fiber_invariants_agree(d, fiber, height)},
                {"points", points},
                {"size", fiber.size()},
                {"weyl_order", weyl_group(d).order()}};
  };
  commands["stabilizer"].body = [&](json& echo) {
    const RootDatum d = datum.resolve(echo);
    const EvalPoint p = read_point(point_text, d, echo);
    const StabilizerReport r = stabilizer_check(d, p);
    return json{{"all_equal", r.all_equal},
                {"fiber_size", fiber_over_rg(d, p).size()},
                {"geometric_order", r.geometric.size()},
                {"ideal_order", r.ideal.size()},
                {"levi_weyl_order", r.levi.weyl_subgroup.order()},
                {"weyl_order", r.weyl_order}};
  };
  commands["character"].body = [&](json& echo) {
    const RootDatum d = datum.resolve(echo);
    const Weight v = parse_weight(weight_text, d.rank());
    echo["weight"] = v;
    const InvariantElement chi = weyl_character(d, DominantWeight::make(d, v));
    // a character's augmentation is a positive integer
    return json{{"dimension", integer_json(augmentation(chi.poly).rational_value().get_num())},
                {"invariant", is_weyl_invariant(d, chi.poly)},
                {"polynomial", chi.poly.to_string()}};
  };
  commands["twist-check"].body = [&](json& echo) {
    const RootDatum d = datum.resolve(echo);
    const EvalPoint p = read_point(point_text, d, echo);
    echo["height"] = height;
    const WeylGroup w = weyl_group(d);
    std::vector<InvariantElement> probes;
    for (const auto& lam : dominant_weights(d, height))
      probes.push_back(orbit_sum(w, DominantWeight::make(d, lam)));
    return json{{"all_passed", twist_augmentation_check(d, p, probes)}};
  };
  commands["nal-check"].body = [&](json& echo) {
    echo["config"] = config_path;
    const CuratedCase c = load_curated_case(config_path);
    const NalReport r = nal_point_check(c.datum, c.point, c.presentation_g, c.presentation_z,
                                        c.restriction, c.j_max);
    json levels = json::array();
    for (const auto& l : r.levels)
      levels.push_back({{"j", l.j},
                        {"dim_G", l.dim_g},
                        {"dim_Z", l.dim_z},
                        {"surjective", l.surjective},
                        {"passed", l.passed()}});
    return json{{"all_passed", r.all_passed},
                {"levels", levels},
                {"levi", r.levi_name},
                {"levi_root_count", r.levi_roots},
                {"point_ideal_G", r.point_ideal_g},
                {"point_ideal_Z", r.point_ideal_z},
                {"restriction_ok", r.restriction_ok},
                {"validation_G", presentation_report_json(r.validation_g)},
                {"validation_Z", presentation_report_json(r.validation_z)}};
  };
  commands["validate"].body = [&](json& echo) {
    const RootDatum d = datum.resolve(echo);
    echo["presentation"] = presentation_path;
    echo["height"] = height;
    const Presentation p = presentation_from_json_text(read_text_file(presentation_path), d.rank());
    return presentation_report_json(validate_presentation(p, d, height));
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  for (auto& [name, cmd] : commands) {
    if (!cmd.app->parsed()) continue;
    try {
      json echo = json::object();
      json result = cmd.body(echo);
      const json doc = {{"command", name}, {"inputs_echo", echo}, {"result", result}};
      out << doc.dump() << "\n";
      return kOk;
    } catch (const InputError& e) {
      err << "input error: " << e.what() << "\n";
      return kInputError;
    } catch (const ResourceError& e) {
      err << "resource limit: " << e.what() << "\n";
      return kResourceError;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << "\n";
      return kInternalError;
    }
  }
  err << "error: no subcommand given\n";
  return kInputError;
}

}  // namespace reprings::cli
