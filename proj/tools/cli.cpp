#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <istream>
#include <iterator>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncfin/acceptance.hpp"
#include "ncfin/arnold.hpp"
#include "ncfin/characters.hpp"
#include "ncfin/doldkan.hpp"
#include "ncfin/invariants.hpp"
#include "ncfin/module.hpp"
#include "ncfin/simples.hpp"

namespace ncfin::cli {

namespace {

using nlohmann::json;

// Bad flags or malformed input: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked property does not hold: exit code 1, after the report is printed.
struct PropertyFailure {
  int code = kPropertyFailed;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string input_path = "-";
  bool as_json = false;

  std::string read_input() const {
    if (input_path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(input_path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + input_path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }

  void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

std::vector<std::size_t> parse_levels(const std::string& text) {
  std::vector<std::size_t> out;
  auto number = [&text](const std::string& token) -> std::size_t {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size() || token.front() == '-')
      throw UsageError("bad level list '" + text + "' (expected a..b, a or a,b,c)");
    return value;
  };
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(part));
      continue;
    }
    const std::size_t lo = number(part.substr(0, dots)), hi = number(part.substr(dots + 2));
    if (lo > hi) throw UsageError("empty level range '" + part + "'");
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw UsageError("empty level list");
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json count_json(const mpz_class& z) {
  if (z.fits_ulong_p()) return z.get_ui();
  return z.get_str();
}

json character_json(const std::vector<std::pair<Partition, Rational>>& table) {
  json out = json::array();
  for (const auto& [p, v] : table) out.push_back({{"partition", p.parts}, {"value", v.str()}});
  return out;
}

// Modules on Delta are taken as given; N- and F-modules are restricted.
CatModule as_delta(const CatModule& v) {
  switch (v.category()) {
    case Category::Delta:
      return v;
    case Category::N:
      return restrict_module(v, Restriction::Psi);
    case Category::F:
      return restrict_module(restrict_module(v, Restriction::Phi), Restriction::Psi);
    case Category::FI:
      break;
  }
  throw UsageError("FI-modules have no Delta structure (no codegeneracies)");
}

CatModule with_symmetric_action(const CatModule& v) {
  if (v.category() == Category::Delta) throw UsageError("Delta-modules carry no symmetric group action");
  return v;
}

void emit_text_or_json(const Context& ctx, const std::string& text, const char* key) {
  if (ctx.as_json) {
    ctx.emit({{key, text}});
  } else {
    ctx.out << text;
  }
}

// ---------------------------------------------------------------------------
// Subcommands. Each one registers its flags and returns the action to run.

using Action = std::function<void(const Context&)>;

Action add_hom(CLI::App& app) {
  auto* cmd = app.add_subcommand("hom", "Size (or list) of Hom([m], [n])");
  auto cat = std::make_shared<std::string>();
  auto m = std::make_shared<std::size_t>(), n = std::make_shared<std::size_t>();
  auto list = std::make_shared<bool>(false);
  cmd->add_option("--cat", *cat, "Delta, N, F or FI")->required();
  cmd->add_option("--from", *m, "source size m")->required();
  cmd->add_option("--to", *n, "target size n")->required();
  cmd->add_flag("--list", *list, "list the morphisms in enumeration order");
  return [=](const Context& ctx) {
    const Category c = parse_category(*cat);
    const mpz_class count = hom_count(c, *m, *n);
    std::vector<std::string> items;
    if (*list)
      for (const NMor& f : enumerate_hom(c, *m, *n)) items.push_back(format_morphism(f));
    if (ctx.as_json) {
      json j{{"category", *cat}, {"from", *m}, {"to", *n}, {"count", count_json(count)}};
      if (*list) j["morphisms"] = items;
      ctx.emit(j);
      return;
    }
    if (!*list) {
      ctx.out << count.get_str() << "\n";
      return;
    }
    for (const auto& s : items) ctx.out << s << "\n";
  };
}

Action add_compose(CLI::App& app) {
  auto* cmd = app.add_subcommand("compose", "Composite g o f in a category");
  auto cat = std::make_shared<std::string>("N");
  auto g = std::make_shared<std::string>(), f = std::make_shared<std::string>();
  cmd->add_option("--cat", *cat, "Delta, N, F or FI")->capture_default_str();
  cmd->add_option("g", *g, "outer morphism")->required();
  cmd->add_option("f", *f, "inner morphism")->required();
  return [=](const Context& ctx) {
    const Category c = parse_category(*cat);
    const NMor gm = normalize_morphism(c, parse_morphism(*g)), fm = normalize_morphism(c, parse_morphism(*f));
    for (const NMor* h : {&gm, &fm})
      if (!in_category(c, *h)) throw UsageError(format_morphism(*h) + " is not a morphism of " + *cat);
    const std::string result = format_morphism(compose_in(c, gm, fm));
    if (ctx.as_json) {
      ctx.emit({{"category", *cat}, {"composite", result}});
    } else {
      ctx.out << result << "\n";
    }
  };
}

Action add_lift(CLI::App& app) {
  auto* cmd = app.add_subcommand("lift", "Lift a set map to a morphism of noncommutative finite sets");
  auto mode = std::make_shared<std::string>("canonical");
  auto map = std::make_shared<std::string>();
  cmd->add_option("--mode", *mode, "delta, injection or canonical")
      ->check(CLI::IsMember({"delta", "injection", "canonical"}))
      ->capture_default_str();
  cmd->add_option("map", *map, "set map, e.g. \"3->2: 1,1,2\"")->required();
  return [=](const Context& ctx) {
    const LiftMode m = *mode == "delta" ? LiftMode::Delta : *mode == "injection" ? LiftMode::Injection : LiftMode::Canonical;
    const std::string result = format_morphism(lift(parse_set_map(*map), m));
    if (ctx.as_json) {
      ctx.emit({{"mode", *mode}, {"lift", result}});
    } else {
      ctx.out << result << "\n";
    }
  };
}

Action add_simple(CLI::App& app) {
  auto* cmd = app.add_subcommand("simple", "Emit a simple N-module (catmod/1)");
  auto which = std::make_shared<std::string>();
  auto k = std::make_shared<std::size_t>(1), max = std::make_shared<std::size_t>(8);
  cmd->add_option("which", *which, "Ck, D0 or D1")->required()->check(CLI::IsMember({"Ck", "D0", "D1"}));
  cmd->add_option("--k", *k, "subset size for Ck")->capture_default_str();
  cmd->add_option("--max", *max, "truncation level")->capture_default_str();
  return [=](const Context& ctx) {
    const SimpleSpec spec = *which == "Ck" ? SimpleSpec::C(*k) : *which == "D0" ? SimpleSpec::D0() : SimpleSpec::D1();
    emit_text_or_json(ctx, write_catmod(make_simple(spec, *max)), "catmod");
  };
}

Action add_doldkan(CLI::App& app) {
  auto* cmd = app.add_subcommand("doldkan", "Dold-Kan: conormalize, realize, dims");
  cmd->require_subcommand(1);
  auto* conorm = cmd->add_subcommand("conormalize", "catmod/1 on stdin -> cochain/1");
  auto* realize_cmd = cmd->add_subcommand("realize", "cochain/1 on stdin -> catmod/1");
  cmd->add_subcommand("dims", "catmod/1 on stdin -> dimension polynomial");
  auto max = std::make_shared<std::size_t>(8);
  realize_cmd->add_option("--max", *max, "truncation level")->capture_default_str();
  return [=](const Context& ctx) {
    if (conorm->parsed()) {
      const CochainComplex c = conormalize(as_delta(read_catmod(ctx.read_input())));
      emit_text_or_json(ctx, write_cochain(c), "cochain");
    } else if (realize_cmd->parsed()) {
      const CochainComplex c = read_cochain(ctx.read_input());
      emit_text_or_json(ctx, write_catmod(realize(c, *max)), "catmod");
    } else {
      const CatModule v = as_delta(read_catmod(ctx.read_input()));
      const DimPolynomial p = dim_polynomial(v);
      std::vector<std::size_t> level_dims(v.dims().begin() + 1, v.dims().end());
      if (ctx.as_json) {
        ctx.emit({{"multiplicities", p.multiplicities},
                  {"binomial_form", p.str()},
                  {"polynomial", p.expand().str()},
                  {"dims", level_dims}});
        return;
      }
      ctx.out << "P(n) = " << p.str() << " = " << p.expand().str() << "\n";
      ctx.out << "dims";
      for (auto d : level_dims) ctx.out << ' ' << d;
      ctx.out << "\n";
    }
  };
}

Action add_fit(CLI::App& app) {
  auto* cmd = app.add_subcommand("fit", "Fit character or dimension polynomials");
  cmd->require_subcommand(1);
  auto* charpoly = cmd->add_subcommand("charpoly", "catmod/1 on stdin -> character polynomial");
  auto* dims = cmd->add_subcommand("dims", "values at n = 1, 2, ... on stdin -> polynomial in n");
  auto d = std::make_shared<std::size_t>(2);
  auto fit = std::make_shared<std::string>(), test = std::make_shared<std::string>();
  charpoly->add_option("--d", *d, "degree bound")->capture_default_str();
  charpoly->add_option("--fit", *fit, "fit levels, e.g. 1..6")->required();
  charpoly->add_option("--test", *test, "test levels, e.g. 7..8");
  auto dd = std::make_shared<std::size_t>(2);
  dims->add_option("--d", *dd, "degree bound")->capture_default_str();
  return [=](const Context& ctx) {
    if (charpoly->parsed()) {
      const CatModule v = with_symmetric_action(read_catmod(ctx.read_input()));
      const auto fit_levels = parse_levels(*fit);
      const auto test_levels = test->empty() ? std::vector<std::size_t>{} : parse_levels(*test);
      const CharacterFit r = fit_character_polynomial(v, *d, fit_levels, test_levels);
      const char* outcome = r.ok() ? "fitted"
                            : r.outcome == CharacterFit::Outcome::Inconsistent ? "inconsistent"
                                                                                : "test mismatch";
      if (ctx.as_json) {
        json j{{"outcome", outcome}, {"unique", r.unique}};
        if (r.polynomial) j["polynomial"] = r.polynomial->str();
        if (r.witness) j["witness"] = r.witness->str();
        ctx.emit(j);
      } else if (r.ok()) {
        ctx.out << r.polynomial->str() << "\n";
      } else {
        ctx.out << outcome << ": " << r.witness->str() << "\n";
      }
      if (!r.unique) ctx.err << "note: fit levels leave free coefficients; they were set to 0\n";
      if (!r.ok()) throw PropertyFailure{};
      return;
    }
    std::vector<Rational> seq;
    std::istringstream values(ctx.read_input());
    for (std::string token; values >> token;) seq.push_back(Rational::parse(token));
    if (seq.size() < *dd + 2)
      throw UsageError("need at least " + std::to_string(*dd + 2) + " values for degree " + std::to_string(*dd));
    const DimensionFit r = fit_dimension_polynomial(seq, *dd);
    if (ctx.as_json) {
      json j{{"polynomial", r.polynomial->str()}, {"ok", r.ok()}};
      if (r.failing_n) j["failing_n"] = *r.failing_n;
      ctx.emit(j);
    } else if (r.ok()) {
      ctx.out << r.polynomial->str() << "\n";
    } else {
      ctx.out << "inconsistent at n = " << *r.failing_n << " (first " << *dd + 1 << " values give "
              << r.polynomial->str() << ")\n";
    }
    if (!r.ok()) throw PropertyFailure{};
  };
}

Action add_char(CLI::App& app) {
  auto* cmd = app.add_subcommand("char", "Character table of a module (catmod/1 on stdin) at level n");
  auto n = std::make_shared<std::size_t>();
  cmd->add_option("--n", *n, "level")->required();
  return [=](const Context& ctx) {
    const auto table = character(with_symmetric_action(read_catmod(ctx.read_input())), *n);
    if (ctx.as_json) {
      ctx.emit({{"n", *n}, {"character", character_json(table)}});
    } else {
      ctx.out << format_character_table(table);
    }
  };
}

Action add_invariants(CLI::App& app) {
  auto* cmd = app.add_subcommand("invariants", "S_n-invariants of a module (catmod/1 on stdin)");
  auto n = std::make_shared<std::size_t>(0);
  auto range = std::make_shared<std::string>();
  auto* n_opt = cmd->add_option("--n", *n, "level: print a basis of the invariants");
  auto* range_opt = cmd->add_option("--range", *range, "levels a..b: check the dimensions are nondecreasing");
  n_opt->excludes(range_opt);
  return [=](const Context& ctx) {
    const CatModule v = with_symmetric_action(read_catmod(ctx.read_input()));
    if (n_opt->count() > 0) {
      const InvariantBasis b = invariants_basis(v, *n);
      if (ctx.as_json) {
        ctx.emit({{"n", *n}, {"dim", b.dim()}, {"basis", matrix_json(b.basis)}});
      } else {
        ctx.out << "dim " << b.dim() << "\n";
        if (b.dim() > 0) ctx.out << format_matrix(b.basis) << "\n";
      }
      return;
    }
    const auto levels = range->empty() ? parse_levels("1.." + std::to_string(v.max_level())) : parse_levels(*range);
    const MonotonicityReport r = monotonicity_check(v, levels.front(), levels.back());
    if (ctx.as_json) {
      json dims = json::array();
      for (const auto& [level, d] : r.dims) dims.push_back({{"n", level}, {"dim", d}});
      ctx.emit({{"dims", dims}, {"nondecreasing", r.pass}});
    } else {
      ctx.out << r.str();
    }
    if (!r.pass) throw PropertyFailure{};
  };
}

Action add_replicate(CLI::App& app) {
  auto* cmd = app.add_subcommand("replicate", "Is the barred replication map [nm] -> [n] invertible?");
  auto n = std::make_shared<std::size_t>(), m = std::make_shared<std::size_t>();
  cmd->add_option("--n", *n, "target size")->required();
  cmd->add_option("--m", *m, "block size")->required();
  return [=](const Context& ctx) {
    const ReplicationReport r = replication_iso_check(with_symmetric_action(read_catmod(ctx.read_input())), *n, *m);
    if (ctx.as_json) {
      ctx.emit({{"n", r.n}, {"m", r.m}, {"barred", matrix_json(r.barred)}, {"invertible", r.pass}});
    } else {
      ctx.out << r.str() << "\n";
    }
    if (!r.pass) throw PropertyFailure{};
  };
}

Action add_arnold(CLI::App& app) {
  auto* cmd = app.add_subcommand("arnold", "Cohomology of ordered configurations in the plane");
  cmd->require_subcommand(1);
  auto* dims = cmd->add_subcommand("dims", "dim H^i at n = 1..max");
  auto* act = cmd->add_subcommand("act", "image of every basis monomial under a map");
  auto* chr = cmd->add_subcommand("char", "character table of H^i at level n");
  auto* module = cmd->add_subcommand("module", "H^i as an F-module (catmod/1)");
  auto i = std::make_shared<std::size_t>(1), max = std::make_shared<std::size_t>(8), n = std::make_shared<std::size_t>();
  auto map = std::make_shared<std::string>();
  for (auto* sub : {dims, act, chr, module}) sub->add_option("--i", *i, "cohomological degree")->required();
  dims->add_option("--max", *max, "largest n")->capture_default_str();
  module->add_option("--max", *max, "truncation level")->capture_default_str();
  act->add_option("--map", *map, "set map or morphism, e.g. \"2->3: 2,3\"")->required();
  chr->add_option("--n", *n, "level")->required();
  return [=](const Context& ctx) {
    if (dims->parsed()) {
      std::vector<std::size_t> values;
      for (std::size_t level = 1; level <= *max; ++level) values.push_back(arnold_dim(*i, level));
      if (ctx.as_json) {
        ctx.emit({{"i", *i}, {"dims", values}});
        return;
      }
      for (std::size_t k = 0; k < values.size(); ++k) ctx.out << (k ? " " : "") << values[k];
      ctx.out << "\n";
    } else if (act->parsed()) {
      const SetMap f = forget(parse_morphism(*map));
      json images = json::array();
      for (const OSMonomial& m : admissible_basis(*i, f.dom())) {
        const std::string image = arnold_image(f, m).str();
        if (ctx.as_json) {
          images.push_back({{"monomial", m.str()}, {"image", image}});
        } else {
          ctx.out << m.str() << " -> " << image << "\n";
        }
      }
      if (ctx.as_json) ctx.emit({{"i", *i}, {"map", format_set_map(f)}, {"images", images}});
    } else if (chr->parsed()) {
      const auto table = character(arnold_module(*i, *n), *n);
      if (ctx.as_json) {
        ctx.emit({{"i", *i}, {"n", *n}, {"character", character_json(table)}});
      } else {
        ctx.out << format_character_table(table);
      }
    } else {
      emit_text_or_json(ctx, write_catmod(arnold_module(*i, *max)), "catmod");
    }
  };
}

Action add_verify(CLI::App& app) {
  auto* cmd = app.add_subcommand("verify", "Run the acceptance checks and print a summary table");
  auto seed = std::make_shared<std::uint64_t>(7);
  cmd->add_option("--seed", *seed, "seed for the randomized checks")->capture_default_str();
  return [=](const Context& ctx) {
    const AcceptanceReport r = run_acceptance(*seed);
    if (ctx.as_json) {
      json results = json::array();
      for (const auto& c : r.results)
        results.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
      ctx.emit({{"seed", r.seed}, {"results", results}, {"pass", r.all_pass()}});
    } else {
      ctx.out << r.str();
    }
    if (!r.all_pass()) throw PropertyFailure{};
  };
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with representations of categories of finite sets", "ncfin"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  Context ctx{in, out, err};
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--in", ctx.input_path, "input file for piped data ('-' is stdin)")->capture_default_str();

  std::vector<std::pair<CLI::App*, Action>> commands;
  auto add = [&](Action (*adder)(CLI::App&)) {
    Action action = adder(app);
    commands.emplace_back(app.get_subcommands({}).back(), std::move(action));
  };
  for (auto* adder : {add_hom, add_compose, add_lift, add_simple, add_doldkan, add_fit, add_char, add_invariants,
                      add_replicate, add_arnold, add_verify})
    add(adder);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  ctx.as_json = format == "json";

  try {
    for (auto& [sub, action] : commands)
      if (sub->parsed()) action(ctx);
    return kOk;
  } catch (const PropertyFailure& f) {
    return f.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kPropertyFailed;
  }
}

}  // namespace ncfin::cli
