// tropmetric: command-line front end for the tropical metric toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 precondition
// violation, 4 internal consistency failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tropical/matrix_io.hpp"
#include "tropical/metric.hpp"
#include "tropical/polytope.hpp"
#include "tropical/regularity.hpp"
#include "tropical/spectral.hpp"
#include "tropical/svg.hpp"
#include "tropical/symmetry.hpp"

namespace {

using namespace tropical;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3, kConsistency = 4 };

bool g_decimal = false;

std::string fmt(const Scalar& s) { return g_decimal ? s.decimal_str() : s.str(); }

void print_matrix(const TropMatrix& m) { std::cout << (g_decimal ? format_rows(m, true) : serialize(m)); }

DistanceTable load_distances(const std::string& file, bool from_matrix_flag) {
  const TropMatrix m = read_matrix_file(file);
  return from_matrix_flag ? from_matrix(m) : DistanceTable(m);
}

void cmd_classify(const std::string& file, bool json) {
  const auto r = classify(read_matrix_file(file));
  if (json) {
    std::cout << to_json(r).dump(2) << "\n";
    return;
  }
  const auto report = to_json(r);
  for (const auto& [key, value] : report.items()) std::cout << key << ": " << value.dump() << "\n";
  std::cout << "class: "
            << (r.is_metric_matrix ? "metric matrix"
                                   : (r.is_semimetric_matrix ? "semimetric matrix" : "not a semimetric matrix"))
            << "\n";
}

void cmd_star(const std::string& file) {
  const auto s = kleene_star(read_matrix_file(file));
  if (!s.converges) {
    std::cout << "diverges (eigenvalue " << fmt(s.eigenvalue) << ")\n";
    return;
  }
  print_matrix(*s.star);
}

void cmd_permanent(const std::string& file) {
  const auto p = permanent(read_matrix_file(file));
  std::cout << "value: " << fmt(p.value) << "\n"
            << "unique: " << (p.attaining_unique ? "true" : "false") << "\n"
            << "witness: " << p.witness.one_line() << "\n";
}

void cmd_validate(const std::string& file, bool from_matrix_flag) {
  const auto v = validate(load_distances(file, from_matrix_flag));
  std::cout << to_string(v.cls);
  if (v.triangle_witness) {
    const auto [i, k, j] = *v.triangle_witness;
    std::cout << " (witness " << i + 1 << " " << k + 1 << " " << j + 1 << ")";
  } else if (v.pair_witness) {
    std::cout << " (witness " << (*v.pair_witness)[0] + 1 << " " << (*v.pair_witness)[1] + 1 << ")";
  }
  std::cout << "\n";
}

void cmd_embed(const std::string& file, bool from_matrix_flag) {
  for (const auto& p : embed(load_distances(file, from_matrix_flag))) std::cout << format_vector(p, g_decimal) << "\n";
}

void cmd_isometries(const std::string& file, bool from_matrix_flag) {
  const auto g = isometry_group(load_distances(file, from_matrix_flag));
  std::cout << "order " << g.order() << ":";
  for (std::size_t i = 0; i < g.elements.size(); ++i) std::cout << (i ? ", " : " ") << g.elements[i].cycles();
  std::cout << "\n";
}

void cmd_extremals(const std::string& file) {
  const TropMatrix e = read_matrix_file(file);
  const auto idx = extremal_columns(e);
  std::cout << "rank " << idx.size() << ":";
  for (std::size_t j : idx) std::cout << " " << j + 1;
  std::cout << "\n";
  for (std::size_t j : idx) std::cout << format_vector(column(e, j), g_decimal) << "\n";
}

void cmd_interior(const std::string& file, const std::string& point) {
  std::cout << (interior_point(read_matrix_file(file), parse_point(point)) ? "interior" : "boundary") << "\n";
}

void cmd_hclass(const std::string& file, const std::string& perm, const std::string& lambda) {
  print_matrix(hclass_element(read_matrix_file(file), Permutation::parse(perm), Scalar::parse(lambda)));
}

void cmd_render(const std::string& file, const std::string& out) {
  const std::string svg = render_svg(read_matrix_file(file));
  if (out.empty() || out == "-") {
    std::cout << svg;
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw PreconditionError("cannot write '" + out + "'");
  os << svg;
}

void cmd_unit(const std::string& file) {
  const auto u = unit_decompose(read_ext_matrix_file(file));
  std::cout << "diagonal:";
  for (const auto& s : u.diagonal) std::cout << " " << fmt(s);
  std::cout << "\npermutation: " << u.perm.cycles() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact max-plus toolkit for finite metric spaces and tropical idempotents"};
  app.require_subcommand(1);
  app.add_flag("--decimal", g_decimal, "Show numbers as decimals (display only)");

  std::string file, point, perm, lambda = "0", out;
  bool json = false, from_matrix_flag = false;
  std::function<void()> action;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Matrix file (tmat 1 format)")->required()->check(CLI::ExistingFile);
    return sub;
  };

  auto* classify_cmd = with_file(app.add_subcommand("classify", "Evaluate the semimetric/metric characterisation"));
  classify_cmd->add_flag("--json", json, "Emit a JSON report");
  classify_cmd->callback([&] { action = [&] { cmd_classify(file, json); }; });

  with_file(app.add_subcommand("star", "Kleene star"))->callback([&] { action = [&] { cmd_star(file); }; });
  with_file(app.add_subcommand("eigenvalue", "Maximum cycle mean"))->callback([&] {
    action = [&] { std::cout << fmt(eigenvalue(read_matrix_file(file))) << "\n"; };
  });
  with_file(app.add_subcommand("permanent", "Tropical permanent and uniqueness"))->callback([&] {
    action = [&] { cmd_permanent(file); };
  });

  for (const auto& [name, help] : {std::pair{"validate", "Classify a distance table"},
                                   std::pair{"embed", "Embed a semimetric space as columns of D"},
                                   std::pair{"isometries", "Isometry group of a semimetric space"}}) {
    auto* sub = with_file(app.add_subcommand(name, help));
    sub->add_flag("--from-matrix", from_matrix_flag, "File holds D = (-d) rather than d");
    const std::string which = name;
    sub->callback([&, which] {
      action = [&, which] {
        if (which == "validate") cmd_validate(file, from_matrix_flag);
        else if (which == "embed") cmd_embed(file, from_matrix_flag);
        else cmd_isometries(file, from_matrix_flag);
      };
    });
  }

  with_file(app.add_subcommand("extremals", "Extremal columns of an idempotent"))->callback([&] {
    action = [&] { cmd_extremals(file); };
  });

  auto* interior_cmd = with_file(app.add_subcommand("interior", "Interior test for a point of C(E)"));
  interior_cmd->add_option("--point", point, "Comma-separated coordinates")->required();
  interior_cmd->callback([&] { action = [&] { cmd_interior(file, point); }; });

  auto* hclass_cmd = with_file(app.add_subcommand("hclass", "H-class element lambda * P_sigma * D"));
  hclass_cmd->add_option("--perm", perm, "One-line 1-based images, e.g. \"1 3 2\"")->required();
  hclass_cmd->add_option("--lambda", lambda, "Scalar component");
  hclass_cmd->callback([&] { action = [&] { cmd_hclass(file, perm, lambda); }; });

  auto* render_cmd = with_file(app.add_subcommand("render", "SVG picture of a 2x2 or 3x3 idempotent"));
  render_cmd->add_option("-o,--output", out, "Output file (default stdout)");
  render_cmd->callback([&] { action = [&] { cmd_render(file, out); }; });

  with_file(app.add_subcommand("unit", "Decompose a unit of M_n(T) (file may contain -inf)"))->callback([&] {
    action = [&] { cmd_unit(file); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}
