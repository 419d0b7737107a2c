// tabtype — command-line front end for the tableau-types library.
//
// Conventions shared by every command:
//   * JSON goes to stdout (ASCII grids instead under --render), diagnostics
//     to stderr.
//   * exit 0 on success, 2 on any validation problem, 3 when an enumeration
//     was cut off by --limit, 1 when `verify` finds a failing check.
//   * --in accepts a file path, inline JSON (first character '{' or '['),
//     or "-" for stdin.
//   * TABTYPE_BUDGET caps enumeration sizes when no explicit flag is given.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tabtype/bridge.hpp"
#include "tabtype/error.hpp"
#include "tabtype/exchange.hpp"
#include "tabtype/filling.hpp"
#include "tabtype/json_io.hpp"
#include "tabtype/numbers.hpp"
#include "tabtype/partition.hpp"
#include "tabtype/permutation.hpp"
#include "tabtype/schur.hpp"
#include "tabtype/tableau.hpp"
#include "tabtype/type_filling.hpp"
#include "tabtype/verify.hpp"

namespace {

using tabtype::BigInt;
using tabtype::Box;
using tabtype::Diagram;
using tabtype::Json;
using tabtype::Partition;
using tabtype::Permutation;
using tabtype::Tableau;
using tabtype::TypeFilling;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == ',') {
      if (cur.empty()) throw tabtype::error("malformed-input", "empty entry in list: " + text);
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if ((ch >= '0' && ch <= '9') || ch == '-') {
      cur += ch;
    } else {
      throw tabtype::error("malformed-input", std::string("unexpected character '") + ch + "'");
    }
  }
  return out;
}

Permutation parse_perm(const std::string& text) { return Permutation(parse_int_list(text)); }

Partition parse_shape(const std::string& text) { return Partition(parse_int_list(text)); }

// "(1,2);(2,1)" or "1,2;2,1"; empty string means the empty prefix.
std::vector<Box> parse_fixed(const std::string& text) {
  std::vector<Box> out;
  std::string stripped;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')') stripped += ch;
  if (stripped.empty()) return out;
  std::stringstream ss(stripped);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    std::vector<int> rc = parse_int_list(piece);
    if (rc.size() != 2)
      throw tabtype::error("malformed-input", "expected (row,col) but got: " + piece);
    out.push_back({rc[0], rc[1]});
  }
  return out;
}

Json load_json(const std::string& in) {
  std::string text;
  if (in == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else if (!in.empty() && (in.front() == '{' || in.front() == '[')) {
    text = in;
  } else {
    std::ifstream f(in);
    if (!f) throw tabtype::error("malformed-input", "cannot open " + in);
    std::stringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw tabtype::error("malformed-input", std::string("bad JSON: ") + e.what());
  }
}

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

std::size_t env_budget(std::size_t dflt) {
  if (const char* raw = std::getenv("TABTYPE_BUDGET")) {
    try {
      long long v = std::stoll(raw);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
      throw tabtype::error("malformed-input", "TABTYPE_BUDGET is not a positive integer");
    }
  }
  return dflt;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string swap_to_string(const tabtype::SwapStep& s) {
  switch (s.kind) {
    case tabtype::SwapStep::Kind::RowDown: return "row-down " + std::to_string(s.index);
    case tabtype::SwapStep::Kind::RowUp: return "row-up " + std::to_string(s.index);
    case tabtype::SwapStep::Kind::ColRight: return "col-right " + std::to_string(s.index);
    case tabtype::SwapStep::Kind::ColLeft: return "col-left " + std::to_string(s.index);
  }
  return "?";
}

Json mapping_to_json(const tabtype::BoxMapping& m) {
  Json arr = Json::array();
  for (const auto& [result_box, origin_box] : m.forward())
    arr.push_back(Json::array({Json::array({result_box.row, result_box.col}),
                               Json::array({origin_box.row, origin_box.col})}));
  return arr;
}

void print_trace(const std::vector<tabtype::SwapStep>& swaps) {
  for (const auto& s : swaps) std::cerr << swap_to_string(s) << "\n";
}

// Shared by `count` and `enum`: resolve the working type from --in or --perm.
TypeFilling resolve_type(const std::string& in, const std::string& perm, bool exchange,
                         bool trace) {
  if (!in.empty() && !perm.empty())
    throw tabtype::error("malformed-input", "give either --in or --perm, not both");
  if (!in.empty()) {
    if (exchange) {
      tabtype::ExchangeResult r = tabtype::full_exchange(tabtype::type_filling_from_json(load_json(in)));
      if (trace) print_trace(r.swaps);
      return r.type;
    }
    return tabtype::type_filling_from_json(load_json(in));
  }
  if (perm.empty()) throw tabtype::error("malformed-input", "need --in or --perm");
  TypeFilling t = tabtype::type_of_permutation(parse_perm(perm));
  if (exchange) {
    tabtype::ExchangeResult r = tabtype::full_exchange(t);
    if (trace) print_trace(r.swaps);
    return r.type;
  }
  return t;
}

int enum_and_print(const TypeFilling& t, std::size_t limit, bool render) {
  bool truncated = false;
  std::vector<Tableau> all = tabtype::enumerate_tableaux_bounded(t, limit, truncated);
  if (render) {
    for (const Tableau& T : all) std::cout << tabtype::render_tableau(T) << "\n";
  } else {
    Json arr = Json::array();
    for (const Tableau& T : all) arr.push_back(tabtype::to_json(T));
    emit(arr);
  }
  return truncated ? 3 : 0;
}

int run_verify(const std::string& suite, int max_n) {
  tabtype::verify::Suite s = tabtype::verify::run_suite(suite.empty() ? "all" : suite, max_n);
  for (const auto& line : s)
    std::cout << (line.pass ? "PASS" : "FAIL") << "  " << line.name
              << (line.detail.empty() ? "" : "  [" + line.detail + "]") << "\n";
  return tabtype::verify::all_pass(s) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tableau types: fillings, exchange, and reduced words"};
  app.require_subcommand(1);

  std::string arg_in, arg_perm, arg_shape, arg_fixed, arg_mode = "full", arg_suite = "all";
  bool flag_exchange = false, flag_count = false, flag_enum = false, flag_render = false,
       flag_trace = false, flag_classical = false;
  std::size_t arg_limit = 0;
  int arg_vars = 2, arg_max_n = 0;

  auto add_in = [&](CLI::App* c) { c->add_option("--in", arg_in, "JSON file, inline JSON, or -"); };
  auto add_perm = [&](CLI::App* c) {
    c->add_option("--perm", arg_perm, "permutation in one-line notation, comma separated");
  };
  auto add_shape = [&](CLI::App* c) {
    c->add_option("--shape", arg_shape, "partition parts, comma separated");
  };
  auto add_render = [&](CLI::App* c) { c->add_flag("--render", flag_render, "ASCII output"); };
  auto add_limit = [&](CLI::App* c) {
    c->add_option("--limit", arg_limit, "max results before truncating (exit 3)");
  };
  auto add_trace = [&](CLI::App* c) {
    c->add_flag("--trace", flag_trace, "print each swap to stderr");
  };

  CLI::App* c_count = app.add_subcommand("count", "number of tableaux of a type");
  add_in(c_count), add_perm(c_count);
  c_count->add_flag("--exchange", flag_exchange, "apply the full exchange first");

  CLI::App* c_enum = app.add_subcommand("enum", "list the tableaux of a type");
  add_in(c_enum), add_perm(c_enum), add_render(c_enum), add_limit(c_enum);
  c_enum->add_flag("--exchange", flag_exchange, "apply the full exchange first");

  CLI::App* c_typeof = app.add_subcommand("type-of", "type of a given tableau");
  add_in(c_typeof), add_render(c_typeof);

  CLI::App* c_permtype = app.add_subcommand("perm-type", "type attached to a permutation");
  add_perm(c_permtype), add_render(c_permtype), add_trace(c_permtype);
  c_permtype->add_flag("--exchange", flag_exchange, "apply the full exchange first");
  c_permtype->add_flag("--count", flag_count, "report the tableau count instead of the type");

  CLI::App* c_vex = app.add_subcommand("vexillary", "vexillary test and code partitions");
  add_perm(c_vex);

  CLI::App* c_exchange = app.add_subcommand("exchange", "run an exchange pass on a type");
  add_in(c_exchange), add_render(c_exchange), add_trace(c_exchange);
  c_exchange->add_option("--mode", arg_mode, "line | column | full | reverse")
      ->check(CLI::IsMember({"line", "column", "full", "reverse"}));

  CLI::App* c_slambda = app.add_subcommand("s-lambda", "staircase diagram attached to a partition");
  add_shape(c_slambda), add_render(c_slambda);

  CLI::App* c_balanced = app.add_subcommand("balanced", "balanced tableaux of a partition shape");
  add_shape(c_balanced), add_render(c_balanced), add_limit(c_balanced);
  c_balanced->add_flag("--count", flag_count, "print the count (default)");
  c_balanced->add_flag("--enum", flag_enum, "list the tableaux");

  CLI::App* c_standard = app.add_subcommand("standard", "standard tableaux of a partition shape");
  add_shape(c_standard), add_render(c_standard), add_limit(c_standard);
  c_standard->add_flag("--count", flag_count, "print the count (default)");
  c_standard->add_flag("--enum", flag_enum, "list the tableaux");

  CLI::App* c_schur = app.add_subcommand("schur", "column-strict generating polynomial");
  add_in(c_schur), add_shape(c_schur);
  c_schur->add_option("--vars", arg_vars, "number of variables")->required();
  c_schur->add_flag("--classical", flag_classical,
                    "force the classical row/column tableau enumeration for --shape");

  CLI::App* c_partial = app.add_subcommand("partial", "tableaux with pinned low entries");
  add_perm(c_partial);
  c_partial->add_option("--fixed", arg_fixed, "boxes like \"(1,2);(2,1)\"");

  CLI::App* c_stats = app.add_subcommand("stats", "count statistics over all types of a shape");
  add_in(c_stats), add_shape(c_stats);

  CLI::App* c_verify = app.add_subcommand("verify", "run the self-check suites");
  c_verify->add_option("--suite", arg_suite,
                       "oracle | balanced | hook | expectation | exchange | swap | bridge | "
                       "equivalence | schur | partial | all");
  c_verify->add_option("--max-n", arg_max_n, "size bound (0 = suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_count) {
      TypeFilling t = resolve_type(arg_in, arg_perm, flag_exchange, false);
      std::cout << tabtype::count_tableaux(t).str() << "\n";
      return 0;
    }

    if (*c_enum) {
      TypeFilling t = resolve_type(arg_in, arg_perm, flag_exchange, false);
      std::size_t limit = arg_limit ? arg_limit : env_budget(1u << 20);
      return enum_and_print(t, limit, flag_render);
    }

    if (*c_typeof) {
      if (arg_in.empty()) throw tabtype::error("malformed-input", "type-of needs --in");
      Json j = load_json(arg_in);
      if (j.is_array() && !j.empty() && j.front().is_object()) {
        Json arr = Json::array();
        for (const Json& item : j) arr.push_back(tabtype::to_json(tabtype::type_of(tabtype::tableau_from_json(item))));
        if (flag_render)
          for (const Json& item : j)
            std::cout << tabtype::render_type(tabtype::type_of(tabtype::tableau_from_json(item)))
                      << "\n";
        else
          emit(arr);
        return 0;
      }
      TypeFilling t = tabtype::type_of(tabtype::tableau_from_json(j));
      if (flag_render)
        std::cout << tabtype::render_type(t);
      else
        emit(tabtype::to_json(t));
      return 0;
    }

    if (*c_permtype) {
      if (arg_perm.empty()) throw tabtype::error("malformed-input", "perm-type needs --perm");
      Permutation sigma = parse_perm(arg_perm);
      TypeFilling t = tabtype::type_of_permutation(sigma);
      if (flag_exchange) {
        tabtype::ExchangeResult r = tabtype::full_exchange(t);
        if (flag_trace) print_trace(r.swaps);
        t = r.type;
      }
      if (flag_render) {
        std::cout << tabtype::render_type(t);
        return 0;
      }
      Json out;
      Json shape = Json::array();
      for (const Box& b : t.shape().boxes()) shape.push_back(Json::array({b.row, b.col}));
      out["shape"] = shape;
      if (flag_count)
        out["count"] = big_to_json(tabtype::count_tableaux(t));
      else
        out["type"] = tabtype::to_json(t);
      emit(out);
      return 0;
    }

    if (*c_vex) {
      if (arg_perm.empty()) throw tabtype::error("malformed-input", "vexillary needs --perm");
      tabtype::VexillaryData vd = tabtype::vexillary_data(parse_perm(arg_perm));
      Json out;
      out["vexillary"] = vd.is_vexillary;
      out["lambda"] = tabtype::to_json(vd.lambda);
      out["mu"] = tabtype::to_json(vd.mu);
      emit(out);
      return 0;
    }

    if (*c_exchange) {
      if (arg_in.empty()) throw tabtype::error("malformed-input", "exchange needs --in");
      TypeFilling t = tabtype::type_filling_from_json(load_json(arg_in));
      if (arg_mode == "reverse") {
        TypeFilling r = tabtype::reverse_line_exchange(t);
        if (flag_render)
          std::cout << tabtype::render_type(r);
        else {
          Json out;
          out["type"] = tabtype::to_json(r);
          emit(out);
        }
        return 0;
      }
      tabtype::ExchangeResult r = arg_mode == "line"     ? tabtype::line_exchange(t)
                                  : arg_mode == "column" ? tabtype::column_exchange(t)
                                                         : tabtype::full_exchange(t);
      if (flag_trace) print_trace(r.swaps);
      if (flag_render) {
        std::cout << tabtype::render_type(r.type);
        return 0;
      }
      Json out;
      out["type"] = tabtype::to_json(r.type);
      out["mapping"] = mapping_to_json(r.to_origin);
      Json swaps = Json::array();
      for (const auto& s : r.swaps) swaps.push_back(swap_to_string(s));
      out["swaps"] = swaps;
      emit(out);
      return 0;
    }

    if (*c_slambda) {
      if (arg_shape.empty()) throw tabtype::error("malformed-input", "s-lambda needs --shape");
      Partition lambda = parse_shape(arg_shape);
      tabtype::StaircaseEmbedding emb = tabtype::embed_in_staircase(lambda);
      Diagram s = tabtype::build_s_lambda(lambda);
      Permutation sigma = tabtype::sigma_lambda(lambda);
      if (flag_render) {
        std::cout << tabtype::render_diagram(s);
        std::cout << "sigma:";
        for (int i = 1; i <= sigma.n(); ++i) std::cout << " " << sigma.apply(i);
        std::cout << "\n";
        return 0;
      }
      Json out;
      out["k"] = emb.k;
      out["s_lambda"] = tabtype::to_json(s);
      out["sigma"] = tabtype::to_json(sigma);
      out["bridge"] = tabtype::verify_bridge(lambda);
      emit(out);
      return 0;
    }

    if (*c_balanced || *c_standard) {
      if (arg_shape.empty()) throw tabtype::error("malformed-input", "need --shape");
      Partition lambda = parse_shape(arg_shape);
      TypeFilling t = *c_balanced ? tabtype::balanced_type(lambda.ferrers())
                                  : tabtype::standard_type(lambda.ferrers());
      if (flag_enum) {
        std::size_t limit = arg_limit ? arg_limit : env_budget(1u << 20);
        return enum_and_print(t, limit, flag_render);
      }
      std::cout << tabtype::count_tableaux(t).str() << "\n";
      return 0;
    }

    if (*c_schur) {
      std::size_t budget = env_budget(100'000'000);
      tabtype::Polynomial p = [&] {
        if (!arg_in.empty() && !arg_shape.empty())
          throw tabtype::error("malformed-input", "give either --in or --shape, not both");
        if (!arg_in.empty())
          return tabtype::sst_polynomial(tabtype::type_filling_from_json(load_json(arg_in)),
                                         arg_vars, budget);
        if (arg_shape.empty()) throw tabtype::error("malformed-input", "schur needs --in or --shape");
        Partition lambda = parse_shape(arg_shape);
        if (flag_classical) return tabtype::classical_schur(lambda, arg_vars, budget);
        return tabtype::sst_polynomial(tabtype::balanced_type(lambda.ferrers()), arg_vars, budget);
      }();
      emit(tabtype::to_json(p));
      return 0;
    }

    if (*c_partial) {
      if (arg_perm.empty()) throw tabtype::error("malformed-input", "partial needs --perm");
      Permutation sigma = parse_perm(arg_perm);
      std::vector<Box> fixed = parse_fixed(arg_fixed);
      Json out;
      out["count"] = big_to_json(tabtype::partial_fill_count(sigma, fixed));
      if (std::optional<Permutation> omega = tabtype::partial_fill_witness(sigma, fixed))
        out["witness"] = tabtype::to_json(*omega);
      else
        out["witness"] = nullptr;
      if (std::optional<Partition> mu = tabtype::nice_partial(sigma, fixed))
        out["mu"] = tabtype::to_json(*mu);
      else
        out["mu"] = nullptr;
      emit(out);
      return 0;
    }

    if (*c_stats) {
      Diagram d = [&] {
        if (!arg_in.empty()) return tabtype::diagram_from_json(load_json(arg_in));
        if (arg_shape.empty()) throw tabtype::error("malformed-input", "stats needs --in or --shape");
        return parse_shape(arg_shape).ferrers();
      }();
      tabtype::TypeStatistics st = tabtype::type_statistics(d, env_budget(1'000'000));
      Json out;
      out["types"] = big_to_json(st.type_count);
      out["mean"] = st.mean.str();
      out["variance"] = st.variance.str();
      emit(out);
      return 0;
    }

    if (*c_verify) return run_verify(arg_suite, arg_max_n);

    throw tabtype::error("malformed-input", "unknown command");
  } catch (const tabtype::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
