// mosaic: command-line interface for constructing, verifying, searching and
// converting mosaics of combinatorial designs.
//
// Exit codes: 0 success / verification passed; 1 verification failed, search
// found nothing, or infeasible scheme; 2 usage, parse, or argument errors.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mosaics/construct.hpp"
#include "mosaics/design.hpp"
#include "mosaics/io.hpp"
#include "mosaics/mosaic.hpp"
#include "mosaics/qdesign.hpp"
#include "mosaics/search.hpp"

namespace {

using mosaics::Design;
using mosaics::DesignParams;
using mosaics::Mosaic;
using mosaics::MosaicScheme;
using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    mosaics::write_file(out_path, text);
  }
}

// --- construct ---

struct ConstructOpts {
  int q = 0;
  int v = 0;
  std::string design_name = "kirkman15";
  std::string design_file;
  std::string design_out;
  std::string out;
  bool json = false;
};

int run_construct(const std::string& family, const ConstructOpts& o) {
  Mosaic m = [&]() -> Mosaic {
    if (family == "paley") return mosaics::paley_mosaic(o.q);
    if (family == "affine") return mosaics::affine_plane_mosaic(o.q);
    if (family == "trivial") return mosaics::trivial_cyclic_mosaic(o.v);
    // resolvable
    Design d = [&]() -> Design {
      if (!o.design_file.empty())
        return mosaics::design_from_json_string(
            mosaics::read_file(o.design_file));
      if (o.design_name == "kirkman15") return mosaics::kirkman_15_fixture().first;
      throw mosaics::Error("unknown built-in design '" + o.design_name +
                           "' (available: kirkman15)");
    }();
    if (!d.declared())
      throw mosaics::Error(
          "the design needs declared parameters (params in the JSON)");
    std::optional<mosaics::Resolution> res = mosaics::find_resolution(d);
    if (!res)
      throw mosaics::NotAResolution("the design has no resolution");
    int per_class = d.v() / d.declared()->k;
    mosaics::LatinSquare latin = mosaics::cyclic_latin_square(per_class);
    if (!o.design_out.empty())
      mosaics::write_file(o.design_out, mosaics::design_to_json_string(d));
    return mosaics::resolvable_mosaic(d, *res, latin);
  }();

  emit(o.json ? mosaics::mosaic_to_json_string(m) : mosaics::mosaic_to_text(m),
       o.out);
  return kOk;
}

// --- verify ---

struct VerifyOpts {
  std::string matrix_file;
  std::string scheme;
  std::string json_file;
  bool json = false;
};

ordered_json colour_report(const MosaicScheme& scheme,
                           const mosaics::MosaicCheck& mc) {
  ordered_json arr = ordered_json::array();
  for (int i = 1; i <= scheme.colours(); ++i) {
    const DesignParams& p = scheme.colour(i);
    const mosaics::DesignCheck& dc =
        mc.per_colour[static_cast<size_t>(i) - 1];
    ordered_json cj;
    cj["colour"] = i;
    cj["t"] = p.t;
    cj["k"] = p.k;
    cj["lambda"] = p.lambda;
    cj["ok"] = dc.ok;
    cj["message"] = dc.message;
    if (dc.witness_subset) cj["witness_subset"] = *dc.witness_subset;
    if (dc.witness_count) cj["witness_count"] = *dc.witness_count;
    arr.push_back(std::move(cj));
  }
  return arr;
}

int run_verify(const VerifyOpts& o) {
  Mosaic m = [&]() -> Mosaic {
    if (!o.json_file.empty())
      return mosaics::mosaic_from_json_string(mosaics::read_file(o.json_file));
    if (o.matrix_file.empty() || o.scheme.empty())
      throw mosaics::ParseError(
          "verify needs either --json-file or both --matrix and --scheme");
    mosaics::RawMatrix raw =
        mosaics::parse_mosaic_text(mosaics::read_file(o.matrix_file));
    std::vector<DesignParams> colours = mosaics::parse_colour_list(o.scheme);
    if (static_cast<int>(colours.size()) != raw.c)
      throw mosaics::ParseError("scheme has " +
                                std::to_string(colours.size()) +
                                " colours, matrix header says " +
                                std::to_string(raw.c));
    MosaicScheme scheme(raw.v, raw.b, std::move(colours));
    return Mosaic(std::move(scheme), std::move(raw.cells));
  }();

  mosaics::NecessaryCheck nc = mosaics::check_necessary(m.scheme());
  mosaics::MosaicCheck mc = mosaics::verify_mosaic(m);

  if (o.json) {
    ordered_json j;
    j["command"] = "verify";
    j["ok"] = mc.ok;
    j["v"] = m.v();
    j["b"] = m.b();
    j["c"] = m.colours();
    j["necessary_ok"] = nc.ok;
    j["necessary_failures"] = nc.failures;
    j["message"] = mc.message;
    if (mc.failing_colour) j["failing_colour"] = *mc.failing_colour;
    j["colours"] = colour_report(m.scheme(), mc);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mosaic: v=" << m.v() << " b=" << m.b() << " c="
              << m.colours() << "\n";
    if (!nc.ok) {
      std::cout << "necessary conditions FAILED:\n";
      for (const std::string& f : nc.failures) std::cout << "  - " << f << "\n";
    }
    for (int i = 1; i <= m.colours(); ++i) {
      const DesignParams& p = m.scheme().colour(i);
      const mosaics::DesignCheck& dc =
          mc.per_colour.empty() ? mosaics::DesignCheck{}
                                : mc.per_colour[static_cast<size_t>(i) - 1];
      std::cout << "colour " << i << ": " << p.t << "-(" << m.v() << ","
                << p.k << "," << p.lambda << ") " << dc.message << "\n";
      if (dc.witness_subset) {
        std::cout << "  witness subset:";
        for (int pt : *dc.witness_subset) std::cout << " " << pt;
        std::cout << " (covered " << *dc.witness_count << " times)\n";
      }
    }
    std::cout << (mc.ok ? "result: MOSAIC OK" : "result: NOT A MOSAIC")
              << "\n";
    if (!mc.ok) std::cout << "reason: " << mc.message << "\n";
  }
  return mc.ok ? kOk : kFailed;
}

// --- search ---

struct SearchOpts {
  bool open31 = false;
  int developments = 8;
  int v = 0;
  long long b = 0;
  std::string scheme;
  std::vector<std::string> pool_files;
  long long max_nodes = -1;
  double max_seconds = -1.0;
  uint64_t seed = 0;
  bool exhaustive = false;
  bool break_first_column = false;
  std::string out;
  bool json = false;
};

int run_search(const SearchOpts& o) {
  mosaics::SearchOutcome outcome;
  if (o.open31) {
    outcome = mosaics::search_open_31(
        mosaics::SearchBudget{o.max_nodes, o.max_seconds}, o.seed,
        o.developments);
  } else {
    if (o.v <= 0 || o.b <= 0 || o.scheme.empty())
      throw mosaics::ParseError(
          "search needs --open31 or all of --v, --b and --scheme");
    std::vector<DesignParams> colours = mosaics::parse_colour_list(o.scheme);
    MosaicScheme scheme(o.v, o.b, std::move(colours));
    mosaics::SearchProblem prob(scheme);
    prob.budget = mosaics::SearchBudget{o.max_nodes, o.max_seconds};
    prob.seed = o.seed;
    prob.exhaustive = o.exhaustive;
    prob.break_first_column = o.break_first_column;
    if (!o.pool_files.empty()) {
      if (static_cast<int>(o.pool_files.size()) != scheme.colours())
        throw mosaics::ParseError("need one --pool file per colour");
      for (const std::string& pf : o.pool_files) {
        Design d = mosaics::design_from_json_string(mosaics::read_file(pf));
        if (d.v() != scheme.v())
          throw mosaics::ParseError("pool design v differs from --v");
        prob.pools.push_back(d.blocks());
      }
    } else {
      for (int i = 1; i <= scheme.colours(); ++i)
        prob.pools.push_back(
            mosaics::all_k_subsets_pool(scheme.v(), scheme.colour(i).k));
    }
    outcome = mosaics::search_mosaic(prob);
  }

  const char* status = outcome.status == mosaics::SearchStatus::Found
                           ? "found"
                           : outcome.status == mosaics::SearchStatus::Exhausted
                                 ? "exhausted"
                                 : "budget_exceeded";
  if (o.json) {
    ordered_json j;
    j["command"] = "search";
    j["status"] = status;
    j["nodes"] = outcome.stats.nodes;
    j["solutions"] = outcome.stats.solutions;
    j["columns_completed_best"] = outcome.stats.columns_completed_best;
    j["elapsed_seconds"] = outcome.stats.elapsed_seconds;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "status: " << status << "\n"
              << "nodes: " << outcome.stats.nodes << "\n"
              << "solutions: " << outcome.stats.solutions << "\n"
              << "deepest column completed: "
              << outcome.stats.columns_completed_best << "\n";
  }
  if (outcome.mosaic) {
    std::string text = mosaics::mosaic_to_text(*outcome.mosaic);
    if (!o.out.empty()) {
      mosaics::write_file(o.out, text);
    } else if (!o.json) {
      std::cout << text;
    }
  }
  return outcome.status == mosaics::SearchStatus::Found ? kOk : kFailed;
}

// --- qdesign ---

struct QDesignOpts {
  bool verify = false;
  std::string out;
  std::string file;
  std::string completion_out;
  bool json = false;
};

int run_qdesign_braun(const QDesignOpts& o) {
  mosaics::QDesign d = mosaics::braun_design();
  bool ok = true;
  std::string message = "verification skipped";
  if (o.verify) {
    mosaics::QDesignCheck qc = mosaics::verify_qdesign(d, 2, 1);
    ok = qc.ok;
    message = qc.message;
  }
  if (!o.out.empty()) mosaics::write_file(o.out, mosaics::qdesign_to_text(d));
  if (o.json) {
    ordered_json j;
    j["command"] = "qdesign-braun";
    j["v"] = d.v();
    j["blocks"] = d.b();
    j["ok"] = ok;
    j["message"] = message;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "2-analogue 2-(13,3,1) design over GF(2): " << d.b()
              << " blocks\n"
              << (o.verify ? "verify: " + message : message) << "\n";
  }
  return ok ? kOk : kFailed;
}

int run_qdesign_mosaic13(const QDesignOpts& o) {
  mosaics::PartialQMosaic13 pm = mosaics::partial_qmosaic_13();
  mosaics::QMosaicCheck qm =
      mosaics::verify_qmosaic(pm.copies, 13, /*partial=*/true);
  mosaics::QDesignCheck cc = mosaics::verify_qdesign(pm.completion, 1, 195);
  bool ok = qm.ok && cc.ok;
  if (!o.completion_out.empty())
    mosaics::write_file(o.completion_out,
                        mosaics::qdesign_to_text(pm.completion));
  if (o.json) {
    ordered_json j;
    j["command"] = "qdesign-mosaic13";
    j["ok"] = ok;
    j["columns"] = pm.completion.b();
    j["orbit_sizes"] = pm.orbit_sizes;
    j["orbit_line_multiplicity"] = pm.orbit_line_multiplicity;
    j["partial_mosaic"] = qm.message;
    j["completion"] = cc.message;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "partial 4-mosaic of 2-analogue 2-(13,3,1) designs: "
              << pm.completion.b() << " columns\n"
              << "partial mosaic: " << qm.message << "\n"
              << "completion design: " << cc.message << "\n";
  }
  return ok ? kOk : kFailed;
}

int run_qdesign_verify(const QDesignOpts& o) {
  mosaics::QDesign d = mosaics::qdesign_from_text(mosaics::read_file(o.file));
  if (!d.declared())
    throw mosaics::ParseError("q-design file lacks parameters");
  mosaics::QDesignCheck qc =
      mosaics::verify_qdesign(d, d.declared()->t, d.declared()->lambda);
  if (o.json) {
    ordered_json j;
    j["command"] = "qdesign-verify";
    j["ok"] = qc.ok;
    j["message"] = qc.message;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << qc.message << "\n";
  }
  return qc.ok ? kOk : kFailed;
}

// --- convert ---

struct ConvertOpts {
  std::string in;
  std::string out;
  std::string from = "text";
  std::string to = "json";
  std::string scheme;
};

int run_convert(const ConvertOpts& o) {
  Mosaic m = [&]() -> Mosaic {
    std::string text = mosaics::read_file(o.in);
    if (o.from == "json") return mosaics::mosaic_from_json_string(text);
    if (o.scheme.empty())
      throw mosaics::ParseError("--scheme is required for text input");
    mosaics::RawMatrix raw = mosaics::parse_mosaic_text(text);
    std::vector<DesignParams> colours = mosaics::parse_colour_list(o.scheme);
    if (static_cast<int>(colours.size()) != raw.c)
      throw mosaics::ParseError("scheme colour count does not match header");
    return Mosaic(MosaicScheme(raw.v, raw.b, std::move(colours)),
                  std::move(raw.cells));
  }();
  std::string result = o.to == "json" ? mosaics::mosaic_to_json_string(m)
                                      : mosaics::mosaic_to_text(m);
  emit(result, o.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mosaics of combinatorial designs"};
  app.set_version_flag("--version", "mosaic 0.1.0");
  app.require_subcommand(1);

  // construct
  ConstructOpts copts;
  CLI::App* construct =
      app.add_subcommand("construct", "Build one of the known mosaic families");
  construct->require_subcommand(1);
  construct->add_option("-o,--out", copts.out, "Write to this file");
  construct->add_flag("--json", copts.json, "Emit JSON instead of text");
  CLI::App* c_paley = construct->add_subcommand(
      "paley", "Paley 3-mosaic on q points (prime power q = 3 mod 4)");
  c_paley->add_option("--q", copts.q, "Field size")->required();
  c_paley->fallthrough();
  CLI::App* c_affine = construct->add_subcommand(
      "affine", "Affine-plane q-colour mosaic on q^2 points");
  c_affine->add_option("--q", copts.q, "Plane order (prime power)")->required();
  c_affine->fallthrough();
  CLI::App* c_resolvable = construct->add_subcommand(
      "resolvable", "Mosaic from a resolvable design and a Latin square");
  c_resolvable->add_option("--design", copts.design_name,
                           "Built-in design name (kirkman15)");
  c_resolvable->add_option("--design-file", copts.design_file,
                           "Design JSON file with declared params");
  c_resolvable->add_option("--design-out", copts.design_out,
                           "Also write the underlying design JSON here");
  c_resolvable->fallthrough();
  CLI::App* c_trivial = construct->add_subcommand(
      "trivial", "Cyclic v-colour mosaic of trivial designs");
  c_trivial->add_option("--v", copts.v, "Number of points")->required();
  c_trivial->fallthrough();

  // verify
  VerifyOpts vopts;
  CLI::App* verify =
      app.add_subcommand("verify", "Verify a mosaic against its scheme");
  verify->add_option("--matrix", vopts.matrix_file,
                     "Mosaic matrix text file ('v b c' header)");
  verify->add_option("--scheme", vopts.scheme,
                     "Colour list 't,k,lambda;t,k,lambda;...'");
  verify->add_option("--json-file", vopts.json_file, "Mosaic JSON file");
  verify->add_flag("--json", vopts.json, "Emit a JSON report");

  // search
  SearchOpts sopts;
  CLI::App* search =
      app.add_subcommand("search", "Backtracking search for mosaics");
  search->add_flag("--open31", sopts.open31,
                   "Search the open 31-point constellation "
                   "2-(31,15,7)+2-(31,10,3)+2-(31,6,1)");
  search->add_option("--developments", sopts.developments,
                     "Cyclic developments per colour for --open31");
  search->add_option("--v", sopts.v, "Number of points");
  search->add_option("--b", sopts.b, "Number of columns");
  search->add_option("--scheme", sopts.scheme,
                     "Colour list 't,k,lambda;...'");
  search->add_option("--pool", sopts.pool_files,
                     "Design JSON file with candidate blocks (one per colour)");
  search->add_option("--max-nodes", sopts.max_nodes,
                     "Node budget (-1 = unlimited)");
  search->add_option("--max-seconds", sopts.max_seconds,
                     "Time budget (-1 = unlimited)");
  search->add_option("--seed", sopts.seed, "Seed for randomized pools");
  search->add_flag("--exhaustive", sopts.exhaustive,
                   "Count all solutions instead of stopping at the first");
  search->add_flag("--break-first-column", sopts.break_first_column,
                   "Symmetry break: pin column 0 to the first candidates");
  search->add_option("-o,--out", sopts.out, "Write a found mosaic here");
  search->add_flag("--json", sopts.json, "Emit a JSON report");

  // qdesign
  QDesignOpts qopts;
  CLI::App* qdesign = app.add_subcommand(
      "qdesign", "q-analogue designs over GF(2) and the 13-point mosaic");
  qdesign->require_subcommand(1);
  CLI::App* q_braun = qdesign->add_subcommand(
      "braun", "The 2-analogue 2-(13,3,1) design with 1597245 blocks");
  q_braun->add_flag("--verify", qopts.verify, "Verify the design property");
  q_braun->add_option("-o,--out", qopts.out, "Write the design file here");
  q_braun->add_flag("--json", qopts.json, "Emit a JSON report");
  CLI::App* q_mosaic13 = qdesign->add_subcommand(
      "mosaic13", "Partial 4-mosaic of 2-analogue 2-(13,3,1) designs");
  q_mosaic13->add_option("--completion-out", qopts.completion_out,
                         "Write the completion design file here");
  q_mosaic13->add_flag("--json", qopts.json, "Emit a JSON report");
  CLI::App* q_verify =
      qdesign->add_subcommand("verify", "Verify a q-design file");
  q_verify->add_option("--file", qopts.file, "q-design file")->required();
  q_verify->add_flag("--json", qopts.json, "Emit a JSON report");

  // convert
  ConvertOpts xopts;
  CLI::App* convert =
      app.add_subcommand("convert", "Convert mosaics between text and JSON");
  convert->add_option("--in", xopts.in, "Input file")->required();
  convert->add_option("--out", xopts.out, "Output file (default stdout)");
  convert->add_option("--from", xopts.from, "Input format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  convert->add_option("--to", xopts.to, "Output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  convert->add_option("--scheme", xopts.scheme,
                      "Colour list (required for text input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) {
      if (*c_paley) return run_construct("paley", copts);
      if (*c_affine) return run_construct("affine", copts);
      if (*c_resolvable) return run_construct("resolvable", copts);
      if (*c_trivial) return run_construct("trivial", copts);
    }
    if (*verify) return run_verify(vopts);
    if (*search) return run_search(sopts);
    if (*qdesign) {
      if (*q_braun) return run_qdesign_braun(qopts);
      if (*q_mosaic13) return run_qdesign_mosaic13(qopts);
      if (*q_verify) return run_qdesign_verify(qopts);
    }
    if (*convert) return run_convert(xopts);
  } catch (const mosaics::InfeasibleScheme& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const mosaics::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
