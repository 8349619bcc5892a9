// trilink: census, invariants, realizations and drawings of the three-circle
// link depictions.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "trilink/census.hpp"
#include "trilink/diagram.hpp"
#include "trilink/errors.hpp"
#include "trilink/geometry.hpp"
#include "trilink/invariants.hpp"
#include "trilink/render.hpp"
#include "trilink/symmetry.hpp"

namespace {

using namespace trilink;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(fmt::format("cannot write '{}'", path));
  out << text;
  if (!out.flush()) throw InputError(fmt::format("cannot write '{}'", path));
}

Point3 parse_vector(const std::string& text) {
  Point3 p;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> p.x >> c1 >> p.y >> c2 >> p.z) || c1 != ',' || c2 != ',' ||
      !(in >> std::ws).eof())
    throw InputError(fmt::format("expected x,y,z but got '{}'", text));
  return p;
}

std::string profile_line(const LinkingProfile& p) {
  std::string out;
  for (const auto& pr : p.pairs)
    out += fmt::format("{}{}-{}={}", out.empty() ? "" : " ", pr.first, pr.second,
                       pr.value);
  return out;
}

int run_classify(const std::string& word) {
  const auto asg = assignment_from_text(word);
  const LinkDiagram d = to_diagram(asg);
  const auto lk = pairwise_linking(d).triangle();
  int orbit_id = -1;
  CrossingAssignment rep;
  const auto orbits = orbit_partition();
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if (std::ranges::binary_search(orbits[k].members, asg)) {
      orbit_id = static_cast<int>(k);
      rep = orbits[k].representative();
    }
  std::cout << fmt::format("assignment {}\n", asg.text())
            << fmt::format("type {}\n", to_string(classify(d)))
            << fmt::format("orbit {} (representative {}, size {})\n", orbit_id,
                           rep.text(), orbits[orbit_id].members.size())
            << fmt::format("linking {},{},{}\n", lk[0], lk[1], lk[2])
            << fmt::format("bracket {}\n", kauffman_bracket(d).to_string());
  return kExitOk;
}

int run_invariants(const std::string& builtin, const std::string& word) {
  if (builtin.empty() == word.empty())
    throw InputError("invariants takes exactly one of --builtin NAME or BITWORD");
  const LinkDiagram d =
      builtin.empty() ? to_diagram(assignment_from_text(word)) : builtin_diagram(builtin);
  std::cout << fmt::format("components {}\n", d.component_count())
            << fmt::format("crossings {}\n", d.crossing_count());
  if (d.component_count() >= 2)
    std::cout << fmt::format("linking {}\n", profile_line(pairwise_linking(d)));
  std::cout << fmt::format("writhe {}\n", writhe(d))
            << fmt::format("bracket {}\n", kauffman_bracket(d).to_string())
            << fmt::format("normalized {}\n", normalized_invariant(d).to_string());
  if (d.component_count() == 3)
    std::cout << fmt::format("type {}\n", to_string(classify(d)))
              << fmt::format("brunnian {}\n", is_brunnian(d) ? "yes" : "no");
  return kExitOk;
}

std::map<std::string, double> realization_params(double big_r, double small_r,
                                                 double a, double b) {
  std::map<std::string, double> p;
  if (!std::isnan(big_r)) p["R"] = big_r;
  if (!std::isnan(small_r)) p["r"] = small_r;
  if (!std::isnan(a)) p["a"] = a;
  if (!std::isnan(b)) p["b"] = b;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census, invariants, 3D realizations and SVG drawings of the 64 "
               "three-circle link depictions"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string out_path;

  auto* census = app.add_subcommand("census", "Full census of the 64 depictions");
  census->add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  census->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::string word;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one assignment");
  classify_cmd->add_option("bitword", word, "Six 0/1 characters, site 0 first")
      ->required();

  std::string builtin;
  std::string inv_word;
  auto* inv = app.add_subcommand("invariants", "Linking, writhe and bracket");
  inv->add_option("--builtin", builtin,
                  "unknot, twist-unknot, trefoil, hopf, unlink2 or unlink3");
  inv->add_option("bitword", inv_word, "Census assignment");

  std::string render_word, scene_kind, realize_kind, colors, view = "0,0,1",
                                                           gallery_dir;
  auto* render = app.add_subcommand("render", "Emit SVG");
  render->add_option("bitword", render_word, "Census assignment to draw");
  render->add_option("--scene", scene_kind,
                     "tangent-circles, great-circles, horn-torus or tangent-spheres");
  render->add_option("--realize", realize_kind,
                     "torus-villarceau or borromean-ellipses");
  render->add_option("--gallery", gallery_dir,
                     "Write one SVG per orbit into this directory");
  render->add_option("--color", colors, "Overrides such as A=green,B=blue,C=red");
  render->add_option("--view", view, "Camera direction x,y,z for 3D drawings")
      ->capture_default_str();
  render->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::string kind;
  double big_r = std::nan(""), small_r = std::nan(""), ell_a = std::nan(""),
         ell_b = std::nan("");
  int segments = kDefaultSegments;
  std::string curve_format = "table";
  auto* realize_cmd = app.add_subcommand("realize", "Export 3D curves and linking numbers");
  realize_cmd->add_option("kind", kind, "torus-villarceau or borromean-ellipses")
      ->required();
  realize_cmd->add_option("--R", big_r, "torus-villarceau circle radius (default 2)");
  realize_cmd->add_option("--r", small_r, "torus-villarceau offset (default 1)");
  realize_cmd->add_option("--a", ell_a, "borromean-ellipses long semi-axis (default 1.5)");
  realize_cmd->add_option("--b", ell_b, "borromean-ellipses short semi-axis (default 0.8)");
  realize_cmd->add_option("--segments", segments, "Segments per curve (>= 64)")
      ->capture_default_str();
  realize_cmd->add_option("--format", curve_format, "table or obj")
      ->check(CLI::IsMember({"table", "obj"}))
      ->capture_default_str();
  realize_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run every census and geometry check");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "trilink: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (census->parsed()) {
      const Census c = run_census();
      const std::string text = format == "json"  ? census_to_json(c)
                               : format == "csv" ? census_to_csv(c)
                                                 : census_to_table(c);
      emit(text, out_path);
      return kExitOk;
    }
    if (classify_cmd->parsed()) return run_classify(word);
    if (inv->parsed()) return run_invariants(builtin, inv_word);
    if (render->parsed()) {
      const int chosen = !render_word.empty() + !scene_kind.empty() +
                         !realize_kind.empty() + !gallery_dir.empty();
      if (chosen != 1)
        throw InputError(
            "render takes exactly one of BITWORD, --scene, --realize, --gallery");
      const RenderStyle style = with_colors(RenderStyle{}, colors);
      const Camera cam{parse_vector(view)};
      if (!gallery_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(gallery_dir, ec);
        if (ec) throw InputError(fmt::format("cannot create '{}'", gallery_dir));
        for (const auto& o : run_census().summary.orbits)
          emit(svg_diagram(to_diagram(o.representative), style),
               (std::filesystem::path(gallery_dir) /
                gallery_file_name(o.orbit_id, o.representative))
                   .string());
        return kExitOk;
      }
      std::string svg;
      if (!render_word.empty())
        svg = svg_diagram(to_diagram(assignment_from_text(render_word)), style);
      else if (!scene_kind.empty())
        svg = svg_scene(scene(scene_kind), cam, style);
      else
        svg = svg_scene(realize(realize_kind), cam, style);
      emit(svg, out_path);
      return kExitOk;
    }
    if (realize_cmd->parsed()) {
      const Realization3D r =
          realize(kind, realization_params(big_r, small_r, ell_a, ell_b), segments);
      std::string text =
          curve_format == "obj" ? curves_to_obj(r) : curves_to_table(r);
      text += fmt::format("# min-distance {:.6f}\n", validate_disjoint(r));
      for (std::size_t i = 0; i < r.curves.size(); ++i)
        for (std::size_t j = i + 1; j < r.curves.size(); ++j)
          text += fmt::format(
              "# lk {} {} {} gauss {:.6f}\n", r.curves[i].label(),
              r.curves[j].label(), linking_number_3d(r.curves[i], r.curves[j]),
              gauss_linking_integral(r.curves[i], r.curves[j]));
      emit(text, out_path);
      return kExitOk;
    }
    if (verify->parsed()) {
      const ClaimReport rep = verify_claims();
      std::cout << (verify_format == "json" ? report_to_json(rep) : report_to_text(rep));
      return rep.all_passed() ? kExitOk : kExitFailed;
    }
  } catch (const InputError& e) {
    std::cerr << "trilink: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "trilink: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInput;
}
