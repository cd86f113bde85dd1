// combtile: exact counting, enumeration, metatile inspection, identity
// verification and ASCII rendering for boards tiled with half-squares,
// fences and combs.

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "combtile/bijection.hpp"
#include "combtile/board.hpp"
#include "combtile/identities.hpp"
#include "combtile/metatiles.hpp"
#include "combtile/render.hpp"
#include "combtile/sequences.hpp"

namespace ct = combtile;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

long long parse_integer(const std::string& text) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return value;
}

// Cap precedence: --cap flag, then COMB_ENUM_CAP, then the default.
int resolve_cap(std::optional<int> flag_cap) {
  if (flag_cap) return *flag_cap;
  if (const char* env = std::getenv("COMB_ENUM_CAP")) {
    const long long value = parse_integer(env);
    if (value < 0) throw std::invalid_argument("COMB_ENUM_CAP must be >= 0");
    return static_cast<int>(value);
  }
  return ct::kDefaultEnumerationCap;
}

ct::TileSet parse_tiles(const std::string& symbols) {
  const auto set = ct::TileSet::parse(symbols);
  if (!set) {
    throw std::invalid_argument("bad tile set '" + symbols + "': expected a non-empty subset of \"hfc\"");
  }
  return *set;
}

std::string domain_string(const ct::VerificationReport& r) {
  std::ostringstream out;
  if (r.mode == ct::CheckMode::cross_check) {
    out << "boards<=" << r.n_max;
  } else {
    out << "n=" << r.n_min << ".." << r.n_max;
  }
  if (!r.j_values.empty()) {
    out << " j=";
    for (std::size_t i = 0; i < r.j_values.size(); ++i) {
      if (i) out << ",";
      out << r.j_values[i];
    }
  }
  return out.str();
}

std::string result_string(const ct::VerificationReport& r) {
  if (r.pass) return "pass";
  std::ostringstream out;
  const ct::Counterexample& ce = *r.first_counterexample;
  out << "FAIL at (n=" << ce.n;
  if (ce.j) out << ", j=" << *ce.j;
  out << "): lhs=" << ce.lhs << " rhs=" << ce.rhs;
  return out.str();
}

void print_report_line(const ct::VerificationReport& r) {
  std::ostringstream line;
  line << std::left << std::setw(8) << r.id << std::setw(12) << ct::variant_name(r.variant)
       << std::setw(26) << domain_string(r) + (r.mode == ct::CheckMode::cross_check ? " (cross)" : "")
       << result_string(r);
  std::cout << line.str() << "\n";
}

ordered_json report_to_json(const ct::VerificationReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["variant"] = std::string(ct::variant_name(r.variant));
  j["domain"] = ordered_json{{"n_max", r.n_max}, {"j", r.j_values}};
  j["pass"] = r.pass;
  if (r.first_counterexample) {
    const ct::Counterexample& ce = *r.first_counterexample;
    ordered_json params;
    params["n"] = ce.n;
    if (ce.j) params["j"] = *ce.j;
    j["counterexample"] =
        ordered_json{{"params", params}, {"lhs", ce.lhs.str()}, {"rhs", ce.rhs.str()}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

struct VerifyOptions {
  std::string identity = "all";
  std::string variant = "corrected";
  long long max_n = 50;
  bool with_cross_check = false;
  int cross_max_n = 10;
  bool json_output = false;
  std::optional<int> cap;
  std::string command_echo;
};

int run_verify(const VerifyOptions& opt) {
  std::vector<std::string> ids;
  if (opt.identity == "all") {
    for (const ct::IdentityDescriptor& d : ct::registry()) ids.push_back(d.id);
  } else {
    if (!ct::find_identity(opt.identity)) {
      std::cerr << "error: unknown identity id '" << opt.identity << "'\n";
      return 2;
    }
    ids.push_back(opt.identity);
  }
  const ct::Variant variant =
      opt.variant == "as-stated" ? ct::Variant::as_stated : ct::Variant::corrected;

  const int cap = resolve_cap(opt.cap);
  std::vector<ct::VerificationReport> reports;
  std::vector<ct::VerificationReport> cross_reports;
  for (const std::string& id : ids) {
    reports.push_back(ct::verify(id, variant, opt.max_n));
    if (opt.with_cross_check) {
      const ct::IdentityDescriptor* d = ct::find_identity(id);
      if (d->cross_checkable) {
        cross_reports.push_back(ct::cross_check(id, opt.cross_max_n, cap));
      } else if (opt.identity != "all") {
        std::cerr << "error: identity " << id << " has no enumeration cross-check\n";
        return 2;
      }
    }
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  for (const auto& r : cross_reports) all_pass = all_pass && r.pass;

  if (opt.json_output) {
    ordered_json doc;
    doc["tool"] = "combtile";
    doc["version"] = kVersion;
    doc["command"] = opt.command_echo;
    doc["reports"] = ordered_json::array();
    for (const auto& r : reports) doc["reports"].push_back(report_to_json(r));
    if (opt.with_cross_check) {
      doc["cross_checks"] = ordered_json::array();
      for (const auto& r : cross_reports) doc["cross_checks"].push_back(report_to_json(r));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_line(r);
    for (const auto& r : cross_reports) print_report_line(r);
    const std::size_t total = reports.size() + cross_reports.size();
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass;
    for (const auto& r : cross_reports) passed += r.pass;
    std::cout << passed << "/" << total << " checks passed\n";
  }
  return all_pass ? 0 : 1;
}

void print_tiling_block(const ct::Tiling& t) {
  if (t.placements.empty()) {
    std::cout << "(empty)\n";
    return;
  }
  const ct::RenderedTiling r = ct::render_tiling(t);
  std::cout << r.symbolic << "\n" << r.slot_row << "\n";
  if (!r.boundary_row.empty()) std::cout << r.boundary_row << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact comb-tiling engine: counting, metatiles, bijection-backed identities"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // seq
  std::string seq_name;
  std::string seq_index;
  CLI::App* seq_cmd = app.add_subcommand("seq", "print a sequence value");
  seq_cmd->add_option("name", seq_name, "tribonacci|fibonacci|narayana|padovan")->required();
  seq_cmd->add_option("n", seq_index, "index (may be negative)")->required();

  // count
  int count_cells = 0;
  std::string count_tiles = "hfc";
  CLI::App* count_cmd = app.add_subcommand("count", "count tilings of an n-board");
  count_cmd->add_option("n", count_cells, "board length in cells")->required()
      ->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--tiles", count_tiles, "tile subset, e.g. hf (default hfc)");

  // verify
  VerifyOptions verify_opt;
  int verify_cap = -1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "verify identities exactly");
  verify_cmd->add_option("--identity", verify_opt.identity, "identity id or 'all' (default all)");
  verify_cmd->add_option("--variant", verify_opt.variant,
                         "as-stated|corrected (default corrected where one exists)")
      ->check(CLI::IsMember({"as-stated", "corrected"}));
  verify_cmd->add_option("--max-n", verify_opt.max_n, "largest n to check (default 50)");
  verify_cmd->add_flag("--cross-check", verify_opt.with_cross_check,
                       "also re-count each proof's tiling family by brute force");
  verify_cmd->add_option("--cross-max-n", verify_opt.cross_max_n,
                         "largest board length for --cross-check (default 10)");
  verify_cmd->add_flag("--json", verify_opt.json_output, "machine-readable report");
  verify_cmd->add_option("--cap", verify_cap, "enumeration cap override");

  // metatiles
  int meta_length = 0;
  std::string meta_tiles = "hfc";
  std::string meta_sigma;
  int meta_cap = -1;
  CLI::App* meta_cmd = app.add_subcommand("metatiles", "list metatiles of a given length");
  meta_cmd->add_option("--length", meta_length, "metatile length in cells")->required();
  meta_cmd->add_option("--tiles", meta_tiles, "tile subset (default hfc)");
  meta_cmd->add_option("--sigma", meta_sigma, "filter by final-slot signature, e.g. 12");
  meta_cmd->add_option("--cap", meta_cap, "enumeration cap override");

  // render
  std::string render_spec;
  int render_all = -1;
  std::string render_tiles = "hfc";
  int render_cap = -1;
  CLI::App* render_cmd = app.add_subcommand("render", "ASCII-render tilings");
  render_cmd->add_option("spec", render_spec, "one tiling as kind@slot list, e.g. h@0,f@1,h@2");
  render_cmd->add_option("--all", render_all, "render every tiling of an n-board");
  render_cmd->add_option("--tiles", render_tiles, "tile subset for --all (default hfc)");
  render_cmd->add_option("--cap", render_cap, "enumeration cap override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (seq_cmd->parsed()) {
      const long long n = parse_integer(seq_index);
      ct::Int value;
      if (seq_name == "tribonacci") {
        value = ct::tribonacci(n);
      } else if (seq_name == "fibonacci") {
        value = ct::fibonacci(n);
      } else if (seq_name == "narayana") {
        value = ct::narayana(n);
      } else if (seq_name == "padovan") {
        value = ct::padovan(n);
      } else {
        std::cerr << "error: unknown sequence '" << seq_name
                  << "' (expected tribonacci|fibonacci|narayana|padovan)\n";
        return 2;
      }
      std::cout << value << "\n";
      return 0;
    }

    if (count_cmd->parsed()) {
      std::cout << ct::count_tilings(count_cells, parse_tiles(count_tiles)) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (verify_cap >= 0) verify_opt.cap = verify_cap;
      std::ostringstream echo;
      for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
      verify_opt.command_echo = echo.str();
      return run_verify(verify_opt);
    }

    if (meta_cmd->parsed()) {
      const int cap = meta_cap >= 0 ? meta_cap : resolve_cap(std::nullopt);
      std::optional<ct::SigmaSignature> sigma_filter;
      if (!meta_sigma.empty()) {
        if (meta_sigma.size() != 2 || meta_sigma[0] < '1' || meta_sigma[0] > '3' ||
            meta_sigma[1] < '1' || meta_sigma[1] > '3') {
          std::cerr << "error: --sigma expects two digits from {1,2,3}, e.g. 12\n";
          return 2;
        }
        sigma_filter = ct::SigmaSignature{meta_sigma[0] - '0', meta_sigma[1] - '0'};
      }
      const ct::TileSet tiles = parse_tiles(meta_tiles);
      std::size_t mixed = 0;
      std::size_t total = 0;
      for (const ct::Metatile& m : ct::enumerate_metatiles(meta_length, tiles, cap)) {
        if (sigma_filter && !(m.sigma == *sigma_filter)) continue;
        ++total;
        mixed += m.mixed;
        std::cout << ct::symbolic(m.body) << "  sigma=" << m.sigma.left << m.sigma.right << "  "
                  << (m.mixed ? "mixed" : "unmixed") << "\n";
      }
      std::cout << total << " metatiles of length " << meta_length << " with tiles {"
                << tiles.str() << "}";
      if (sigma_filter) std::cout << " ending with sigma=" << meta_sigma;
      std::cout << ": " << mixed << " mixed, " << (total - mixed) << " unmixed\n";
      return 0;
    }

    if (render_cmd->parsed()) {
      const bool have_spec = !render_spec.empty();
      const bool have_all = render_all >= 0;
      if (have_spec == have_all) {
        std::cerr << "error: render needs exactly one of a tiling spec or --all <n>\n";
        return 2;
      }
      if (have_spec) {
        print_tiling_block(ct::parse_tiling_spec(render_spec));
        return 0;
      }
      const int cap = render_cap >= 0 ? render_cap : resolve_cap(std::nullopt);
      const ct::TileSet tiles = parse_tiles(render_tiles);
      const std::vector<ct::Tiling> tilings = ct::enumerate_tilings(render_all, tiles, cap);
      std::cout << tilings.size() << " tilings of a " << render_all << "-board with tiles {"
                << tiles.str() << "}\n";
      for (const ct::Tiling& t : tilings) {
        std::cout << "\n";
        print_tiling_block(t);
      }
      return 0;
    }
  } catch (const ct::EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
