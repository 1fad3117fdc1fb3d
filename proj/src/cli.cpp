#include "pprime/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pprime/constructions.hpp"
#include "pprime/errors.hpp"
#include "pprime/group_engine.hpp"
#include "pprime/landau.hpp"
#include "pprime/lie_bounds.hpp"
#include "pprime/partitions.hpp"
#include "pprime/report.hpp"
#include "pprime/symmetric_chars.hpp"
#include "pprime/torus_search.hpp"

namespace pprime::cli
{

namespace
{

Json degree_list(const DegreeMultiset &d) { return Json(d.degrees); }

Report make_report(const std::string &command, Json parameters)
{
  Report r;
  r.command = command;
  r.parameters = std::move(parameters);
  return r;
}

// --- partitions -----------------------------------------------------------

Report partitions_report(std::optional<std::uint64_t> pi, std::vector<std::uint64_t> k)
{
  Json params = Json::object();
  if (pi)
  {
    params["pi"] = *pi;
  }
  if (!k.empty())
  {
    params["k"] = k;
  }
  Report r = make_report("partitions", params);
  if (pi)
  {
    r.rows.push_back({{"kind", "pi"}, {"n", *pi}, {"value", to_string(partition_count(*pi))},
                      {"pass", true}});
  }
  if (!k.empty())
  {
    const std::uint64_t m = k[0];
    const std::uint64_t s = k[1];
    const BigInt value = split_count(m, s);
    Json row{{"kind", "k"}, {"m", m}, {"s", s}, {"value", to_string(value)}};
    bool pass = true;
    if (m > 0 && split_total(m, s) <= big(kNaiveSplitLimit))
    {
      const BigInt naive = split_count_naive(m, s);
      row["naive"] = to_string(naive);
      pass = naive == value;
    }
    row["pass"] = pass;
    r.rows.push_back(row);
  }
  return r;
}

// --- verify-symmetric -----------------------------------------------------

Report symmetric_report(unsigned n_max, const std::vector<std::uint64_t> &primes)
{
  Json params{{"max_n", n_max}};
  if (!primes.empty())
  {
    params["primes"] = primes;
  }
  Report r = make_report("verify-symmetric", params);
  const auto rep = verify_symmetric_bounds(
      n_max, primes.empty() ? std::nullopt : std::optional<std::vector<std::uint64_t>>(primes));
  for (const auto &row : rep.rows)
  {
    r.rows.push_back({{"n", row.n},
                      {"p", row.p},
                      {"macdonald", to_string(row.macdonald)},
                      {"oracle", row.oracle},
                      {"alternating", row.alternating},
                      {"flagged_n6", row.flagged_n6},
                      {"lower_bound", row.lower_bound},
                      {"pass", row.ok()}});
  }
  r.counters["violations"] = rep.violations();
  return r;
}

// --- degrees --------------------------------------------------------------

std::vector<std::string> split(const std::string &s, char sep)
{
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
  {
    out.push_back(item);
  }
  return out;
}

std::uint64_t parse_u64(const std::string &s, const std::string &what)
{
  try
  {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size())
    {
      throw std::invalid_argument(s);
    }
    return v;
  }
  catch (const std::exception &)
  {
    throw ParameterError("bad " + what + " '" + s + "'");
  }
}

FiniteGroup group_from_file(const std::string &path, const EngineLimits &limits)
{
  std::ifstream in(path);
  Json j;
  try
  {
    j = Json::parse(in);
  }
  catch (const Json::exception &e)
  {
    throw ParameterError("cannot parse " + path + ": " + e.what());
  }
  try
  {
    if (j.is_object() && j.contains("table"))
    {
      const auto rows = j["table"].get<std::vector<std::vector<Element>>>();
      std::vector<Element> table;
      for (const auto &row : rows)
      {
        if (row.size() != rows.size())
        {
          throw ParameterError("multiplication table must be square");
        }
        table.insert(table.end(), row.begin(), row.end());
      }
      if (rows.size() > limits.table_bound)
      {
        throw SizeError("table exceeds the engine bound");
      }
      return FiniteGroup::from_table(std::move(table), rows.size());
    }
    const Json &gens = j.is_object() ? j.at("generators") : j;
    const auto perms = gens.get<std::vector<Permutation>>();
    return group_from_permutations(perms, limits).group;
  }
  catch (const Json::exception &e)
  {
    throw ParameterError("unexpected group file layout in " + path + ": " + e.what());
  }
}

FiniteGroup resolve_group(const std::string &spec, const EngineLimits &limits)
{
  const auto parts = split(spec, ':');
  if (parts.size() == 3 && parts[0] == "frob")
  {
    return build_frobenius(parse_u64(parts[1], "p"), parse_u64(parts[2], "m")).group;
  }
  if (parts.size() == 3 && parts[0] == "gammal")
  {
    const std::uint64_t p = parse_u64(parts[1], "p");
    const std::uint64_t r =
        parts[2] == "auto" ? find_construction_prime(p) : parse_u64(parts[2], "r");
    return semidirect_permutation_group(build_gamma_l(p, r).action, limits).group;
  }
  if (std::filesystem::exists(spec))
  {
    return group_from_file(spec, limits);
  }
  return group_from_permutations(builtin_generators(spec), limits).group;
}

Report degrees_report(const std::string &spec, std::optional<std::uint64_t> p,
                      const DixonOptions &options)
{
  Json params{{"group", spec}};
  if (p)
  {
    params["p"] = *p;
  }
  Report r = make_report("degrees", params);
  r.seed = options.seed;
  const FiniteGroup g = resolve_group(spec, options.limits);
  const ConjugacyClasses cc = conjugacy_classes(g);
  const DegreeMultiset d = irreducible_degrees(g, cc, options);
  const std::size_t derived_index = derived_subgroup_index(g);
  Json row{{"group", spec},
           {"order", g.order()},
           {"classes", cc.count()},
           {"degrees", degree_list(d)},
           {"multiset", to_string(d)},
           {"sum_of_squares", d.sum_of_squares()},
           {"linear", d.linear_count()},
           {"derived_index", derived_index}};
  if (p)
  {
    row["pprime_count"] = d.count_coprime(*p);
  }
  row["pass"] = d.sum_of_squares() == g.order() && d.size() == cc.count() &&
                d.linear_count() == derived_index;
  r.rows.push_back(row);
  return r;
}

// --- frobenius / solvable -------------------------------------------------

Report frobenius_report(std::uint64_t p, std::optional<std::uint64_t> m_opt, bool engine,
                        const DixonOptions &options)
{
  const std::uint64_t m = m_opt ? *m_opt : (is_square(p - 1) ? isqrt(p - 1) : 0);
  if (m == 0)
  {
    throw ParameterError("p - 1 is not a square; pass --m");
  }
  Report r = make_report("frobenius", {{"p", p}, {"m", m}, {"engine", engine}});
  r.seed = options.seed;
  const FrobeniusParams params = frobenius_params(p, m);
  const DegreeMultiset closed = frobenius_degree_multiset(params);
  Json row{{"p", p},
           {"m", m},
           {"a", params.a},
           {"order", p * m},
           {"class_count", closed.size()},
           {"degrees", degree_list(closed)},
           {"multiset", to_string(closed)},
           {"pprime_count", closed.count_coprime(p)}};
  bool pass = closed.sum_of_squares() == p * m;
  if (m * m == p - 1)
  {
    row["extremal_value"] = 2 * m;
    pass = pass && closed.count_coprime(p) == 2 * m;
  }
  if (engine && p * m <= options.limits.table_bound)
  {
    const auto h = build_frobenius(p, m);
    const DegreeMultiset e = irreducible_degrees(h.group, options);
    row["engine_degrees"] = degree_list(e);
    row["engine_agrees"] = e == closed;
    pass = pass && e == closed;
  }
  else if (engine)
  {
    row["engine_skipped"] = true;
  }
  row["pass"] = pass;
  r.rows.push_back(row);
  return r;
}

Report solvable_report(std::uint64_t p, const std::string &r_arg, bool cross,
                       const DixonOptions &options)
{
  const std::uint64_t rprime = r_arg == "auto" ? find_construction_prime(p) : parse_u64(r_arg, "r");
  Report rep = make_report("solvable", {{"p", p}, {"r", r_arg}, {"cross_check", cross}});
  rep.seed = options.seed;
  const GammaLConstruction c = build_gamma_l(p, rprime);
  const CliffordResult cl = clifford_pprime_count(c.action, p, Execution::Parallel, options);
  const std::uint64_t order = c.action.space_size() * c.action.group.order();

  auto check = [&rep](const std::string &name, bool pass, Json value = nullptr) {
    Json row{{"check", name}, {"pass", pass}};
    if (!value.is_null())
    {
      row["value"] = std::move(value);
    }
    rep.rows.push_back(row);
  };
  std::uint64_t rm = 1;
  for (std::uint64_t i = 0; i < c.m; ++i)
  {
    rm *= rprime;
  }
  check("p divides r^m - 1", (rm - 1) % p == 0, rm - 1);
  check("order-p subgroup fixed-point-free on nonzero vectors", multiplier_fixed_point_free(c));
  check("Frobenius map normalizes without centralizing",
        frobenius_normalizes_without_centralizing(c));
  check("sum of squared degrees equals group order", cl.degrees.sum_of_squares() == order,
        cl.degrees.sum_of_squares());
  check("p'-count equals 2 sqrt(p - 1)", cl.pprime_count == 2 * c.m, cl.pprime_count);
  bool divisible = true;
  for (std::size_t i = 1; i < cl.orbits.size(); ++i)
  {
    for (auto d : cl.orbits[i].contribution.degrees)
    {
      divisible = divisible && d % p == 0;
    }
  }
  check("nonzero dual orbits carry degrees divisible by p", divisible);
  if (cross)
  {
    try
    {
      const CrossCheck x = engine_cross_check(c.action, p, options);
      check("engine agrees with Clifford count", x.engine == cl.degrees, degree_list(x.engine));
    }
    catch (const SizeError &e)
    {
      rep.rows.push_back({{"check", "engine agrees with Clifford count"},
                          {"skipped", true},
                          {"reason", e.what()}});
    }
  }
  rep.counters["r"] = rprime;
  rep.counters["m"] = c.m;
  rep.counters["group_order"] = order;
  rep.counters["class_count"] = cl.degrees.size();
  rep.counters["orbits"] = cl.orbits.size();
  rep.counters["degrees"] = to_string(cl.degrees);
  rep.counters["pprime_count"] = cl.pprime_count;
  return rep;
}

// --- landau ---------------------------------------------------------------

Report landau_report(std::uint64_t limit)
{
  Report r = make_report("landau", {{"limit", limit}});
  Json primes = Json::array();
  for (const auto &lp : landau_primes(limit))
  {
    r.rows.push_back({{"p", lp.p}, {"m", lp.m}, {"degenerate", lp.degenerate}, {"pass", true}});
    if (!lp.degenerate)
    {
      primes.push_back(lp.p);
    }
  }
  r.counters["primes"] = primes;
  return r;
}

// --- bounds ---------------------------------------------------------------

Json inequality_row(const InequalityRow &row)
{
  Json j{{"family", row.family}, {"q", row.q}, {"r", row.r}, {"f", row.f}, {"d", row.d},
         {"a", row.a},           {"n", row.n}, {"p", row.p}, {"lhs", row.lhs},
         {"rhs", row.rhs},       {"pass", row.holds}};
  if (row.flagged)
  {
    j["flagged"] = true;
  }
  if (!row.note.empty())
  {
    j["note"] = row.note;
  }
  return j;
}

void append(Report &r, const InequalityReport &rep)
{
  for (const auto &row : rep.rows)
  {
    r.rows.push_back(inequality_row(row));
  }
  r.counters[rep.name + "_violations"] = rep.violations();
}

Report table1_report()
{
  Report r = make_report("bounds", {{"check", "table1"}});
  for (const auto &row : table1_data())
  {
    r.rows.push_back({{"group", row.group_tag}, {"p", row.p}, {"count", row.count},
                      {"lhs", static_cast<double>(row.count * row.count) / 4.0 + 1.0},
                      {"pass", row.holds}});
  }
  return r;
}

Report table2_report()
{
  Report r = make_report("bounds", {{"check", "table2"}});
  const auto rep = verify_table2();
  std::size_t strict = 0;
  for (const auto &c : rep.rows)
  {
    r.rows.push_back({{"group", c.row.group_tag},
                      {"d", c.row.d_list},
                      {"count", c.row.count},
                      {"at_least", c.row.at_least},
                      {"cyclic", c.row.cyclic_sylow},
                      {"printed", c.row.stated_p_bound},
                      {"computed", c.computed},
                      {"strict", c.strict},
                      {"pass", c.matches}});
    strict += c.strict_differs ? 1 : 0;
  }
  r.counters["mismatches"] = rep.mismatches();
  r.counters["strict_reading_differs"] = strict;
  return r;
}

std::vector<std::uint64_t> parse_grid(const std::string &s, std::size_t want)
{
  std::vector<std::uint64_t> v;
  for (const auto &part : split(s, ','))
  {
    v.push_back(parse_u64(part, "grid bound"));
  }
  if (v.size() != want)
  {
    throw ParameterError("--grid expects " + std::to_string(want) + " comma-separated bounds");
  }
  return v;
}

Report defining_report(const DefiningGrid &grid)
{
  Report r = make_report(
      "bounds", {{"check", "defining"}, {"grid", {grid.rank_max, grid.r_max, grid.f_max}}});
  append(r, defining_char_check(grid));
  return r;
}

Report classical_report(const std::vector<ClassicalFamily> &families, const ClassicalGrid &grid)
{
  Json names = Json::array();
  for (auto f : families)
  {
    names.push_back(to_string(f));
  }
  Report r = make_report("bounds", {{"check", "classical"},
                                    {"families", names},
                                    {"grid", {grid.q_max, grid.rank_max, grid.f_max}}});
  for (auto f : families)
  {
    append(r, classical_inequality_check(f, grid));
  }
  return r;
}

Report e8_report(std::uint64_t q_min, std::uint64_t q_max)
{
  Report r = make_report("bounds", {{"check", "e8-d1"}, {"qmin", q_min}, {"qmax", q_max}});
  append(r, e8_d1_check(q_min, q_max));
  return r;
}

// --- torus-search ---------------------------------------------------------

Json hit_row(const TorusHit &h)
{
  Json j{{"family", h.family}, {"formula", h.formula}, {"q", h.q}, {"n", h.n},
         {"u", h.u},           {"p", h.p},             {"m", h.m}, {"label", h.label}};
  if (!h.identified.empty())
  {
    j["identified"] = h.identified;
  }
  j["pass"] = h.m * h.m + 1 == h.p && is_prime(h.p);
  return j;
}

Report torus_report(std::uint64_t q_max, std::uint64_t n_max, bool reconcile)
{
  Report r = make_report("torus-search",
                         {{"qmax", q_max}, {"nmax", n_max}, {"reconcile", reconcile}});
  const auto hits = lie_type_hits(q_max, n_max);
  for (const auto &h : hits)
  {
    r.rows.push_back(hit_row(h));
  }
  r.counters["hits"] = hits.size();
  r.counters["bounds"] = "complete only for q <= " + std::to_string(q_max) +
                         " and n <= " + std::to_string(n_max);
  r.counters["sporadic"] = "not searched; no sporadic group gives an example";
  if (reconcile)
  {
    const auto rec = reconcile_with_theorem(hits);
    for (const auto &[p, label] : rec.missing)
    {
      r.rows.push_back({{"p", p}, {"label", label}, {"missing", true}, {"pass", false}});
    }
    for (const auto &[p, label] : rec.extra)
    {
      r.rows.push_back({{"p", p}, {"label", label}, {"extra", true}, {"pass", false}});
    }
    r.counters["missing"] = rec.missing.size();
    r.counters["extra"] = rec.extra.size();
  }
  return r;
}

// Hits within small bounds must all be on the published list.
Report torus_subset_report(std::uint64_t q_max, std::uint64_t n_max)
{
  Report r = torus_report(q_max, n_max, false);
  const auto rec = reconcile_with_theorem(lie_type_hits(q_max, n_max));
  for (const auto &[p, label] : rec.extra)
  {
    r.rows.push_back({{"p", p}, {"label", label}, {"extra", true}, {"pass", false}});
  }
  r.counters["extra"] = rec.extra.size();
  return r;
}

// --- verify-all -----------------------------------------------------------

Report verify_all(bool full, const DixonOptions &options)
{
  Report r = make_report("verify-all", {{"profile", full ? "full" : "quick"}});
  r.seed = options.seed;
  auto add = [&r](const std::string &name, Report sub) {
    sub.finalize();
    r.rows.push_back({{"check", name},
                      {"status", sub.status},
                      {"rows", sub.rows.size()},
                      {"failing", sub.failing()},
                      {"pass", sub.status == "pass"}});
  };
  if (!full)
  {
    add("symmetric n<=15", symmetric_report(15, {}));
    for (std::uint64_t p : {5, 17})
    {
      add("frobenius p=" + std::to_string(p), frobenius_report(p, std::nullopt, true, options));
    }
    add("solvable p=5", solvable_report(5, "auto", true, options));
    add("table2", table2_report());
    add("torus-search qmax=64", torus_subset_report(64, 12));
    return r;
  }
  add("symmetric n<=25", symmetric_report(25, {}));
  for (std::uint64_t p : {5, 17, 37, 101, 197, 257})
  {
    add("frobenius p=" + std::to_string(p), frobenius_report(p, std::nullopt, true, options));
  }
  add("solvable p=5", solvable_report(5, "19", true, options));
  Report landau = landau_report(300);
  landau.rows.push_back({{"check", "six primes"},
                         {"pass", landau.counters["primes"] == Json({5, 17, 37, 101, 197, 257})}});
  add("landau limit=300", landau);
  add("table1", table1_report());
  add("table2", table2_report());
  add("defining", defining_report({}));
  for (auto f : {ClassicalFamily::BC, ClassicalFamily::D, ClassicalFamily::D2, ClassicalFamily::A,
                 ClassicalFamily::A2})
  {
    add("classical " + to_string(f), classical_report({f}, {}));
  }
  add("e8-d1", e8_report(1001, 4096));
  add("torus-search qmax=256 nmax=12", torus_report(256, 12, true));
  return r;
}

void emit(const Report &r, const std::string &format, std::ostream &out)
{
  if (format == "csv")
  {
    out << to_csv(r);
  }
  else
  {
    out << to_json(r).dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Exact verification of p'-degree character counts", "pprime"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::uint64_t seed = DixonOptions{}.seed;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "Seed for the degree engine");

  std::function<Report()> action;

  auto *cmd_part = app.add_subcommand("partitions", "Partition counts pi(n) and k(m, s)");
  std::optional<std::uint64_t> pi;
  std::vector<std::uint64_t> kms;
  cmd_part->add_option("--pi", pi, "n for pi(n)");
  cmd_part->add_option("--k", kms, "m s for k(m, s)")->expected(2);
  cmd_part->callback([&] {
    if (!pi && kms.empty())
    {
      throw CLI::ValidationError("partitions", "give --pi N or --k M S");
    }
    action = [&] { return partitions_report(pi, kms); };
  });

  auto *cmd_sym = app.add_subcommand("verify-symmetric", "Macdonald count against the hook-length oracle");
  unsigned max_n = 25;
  std::vector<std::uint64_t> primes;
  cmd_sym->add_option("--max-n", max_n, "Largest n")->required();
  cmd_sym->add_option("--primes", primes, "Restrict to these primes")->delimiter(',');
  cmd_sym->callback([&] { action = [&] { return symmetric_report(max_n, primes); }; });

  auto *cmd_deg = app.add_subcommand("degrees", "Irreducible character degrees of a small group");
  std::string group;
  std::optional<std::uint64_t> deg_p;
  cmd_deg->add_option("--group", group,
                      "Builtin name (C5, D10, S4, A5, ...), frob:P:M, gammal:P:R, or a JSON file")
      ->required();
  cmd_deg->add_option("--p", deg_p, "Also count degrees prime to p");
  cmd_deg->callback([&] {
    action = [&] {
      DixonOptions o;
      o.seed = seed;
      return degrees_report(group, deg_p, o);
    };
  });

  auto *cmd_frob = app.add_subcommand("frobenius", "The Frobenius group C_p : C_m");
  std::uint64_t frob_p = 0;
  std::optional<std::uint64_t> frob_m;
  bool no_engine = false;
  cmd_frob->add_option("--p", frob_p, "Prime p")->required();
  cmd_frob->add_option("--m", frob_m, "Complement order (default sqrt(p - 1))");
  cmd_frob->add_flag("--no-engine", no_engine, "Skip the degree-engine check");
  cmd_frob->callback([&] {
    action = [&] {
      DixonOptions o;
      o.seed = seed;
      return frobenius_report(frob_p, frob_m, !no_engine, o);
    };
  });

  auto *cmd_solv = app.add_subcommand("solvable", "The semilinear group V : (C_p : C_m)");
  std::uint64_t solv_p = 0;
  std::string solv_r = "auto";
  bool cross = false;
  cmd_solv->add_option("--p", solv_p, "Landau prime p")->required();
  cmd_solv->add_option("--r", solv_r, "Characteristic of V, or auto");
  cmd_solv->add_flag("--cross-check", cross, "Also run the degree engine on V : A");
  cmd_solv->callback([&] {
    action = [&] {
      DixonOptions o;
      o.seed = seed;
      return solvable_report(solv_p, solv_r, cross, o);
    };
  });

  auto *cmd_landau = app.add_subcommand("landau", "Primes p with p - 1 a square");
  std::uint64_t limit = 300;
  cmd_landau->add_option("--limit", limit, "Upper bound");
  cmd_landau->callback([&] { action = [&] { return landau_report(limit); }; });

  auto *cmd_bounds = app.add_subcommand("bounds", "Inequality tables and grids");
  bool t1 = false;
  bool t2 = false;
  bool defining = false;
  bool classical = false;
  bool e8 = false;
  std::string family;
  std::string grid;
  std::uint64_t qmin = 1001;
  std::uint64_t qmax = 4096;
  cmd_bounds->add_flag("--table1", t1, "Counts for p in {5, 7}");
  cmd_bounds->add_flag("--table2", t2, "Bounds on p from invariant character counts");
  cmd_bounds->add_flag("--defining", defining, "Defining-characteristic grid");
  cmd_bounds->add_flag("--classical", classical, "Classical-family grid");
  cmd_bounds->add_flag("--e8-d1", e8, "E8 estimate for d = 1");
  cmd_bounds->add_option("--family", family, "bc, d, 2d, a or 2a (default: all)");
  cmd_bounds->add_option("--grid", grid,
                         "Defining: RANK,R,F (default 8,97,6); classical: Q,RANK,F (default 512,12,9)");
  cmd_bounds->add_option("--qmin", qmin, "Smallest q for --e8-d1");
  cmd_bounds->add_option("--qmax", qmax, "Largest q for --e8-d1");
  cmd_bounds->callback([&] {
    if (t1 + t2 + defining + classical + e8 != 1)
    {
      throw CLI::ValidationError("bounds",
                                 "choose exactly one of --table1 --table2 --defining --classical --e8-d1");
    }
    action = [&]() -> Report {
      if (t1)
      {
        return table1_report();
      }
      if (t2)
      {
        return table2_report();
      }
      if (defining)
      {
        DefiningGrid g;
        if (!grid.empty())
        {
          const auto v = parse_grid(grid, 3);
          g = {v[0], v[1], v[2]};
        }
        return defining_report(g);
      }
      if (classical)
      {
        ClassicalGrid g;
        if (!grid.empty())
        {
          const auto v = parse_grid(grid, 3);
          g = {v[0], v[1], v[2]};
        }
        std::vector<ClassicalFamily> fams;
        if (family.empty())
        {
          fams = {ClassicalFamily::BC, ClassicalFamily::D, ClassicalFamily::D2, ClassicalFamily::A,
                  ClassicalFamily::A2};
        }
        else
        {
          fams = {parse_classical_family(family)};
        }
        return classical_report(fams, g);
      }
      return e8_report(qmin, qmax);
    };
  });

  auto *cmd_torus = app.add_subcommand("torus-search", "Self-centralizing tori of order m^2 + 1");
  std::uint64_t t_qmax = 256;
  std::uint64_t t_nmax = 12;
  bool reconcile = false;
  cmd_torus->add_option("--qmax", t_qmax, "Largest q");
  cmd_torus->add_option("--nmax", t_nmax, "Largest rank");
  cmd_torus->add_flag("--reconcile", reconcile, "Compare with the published list");
  cmd_torus->callback([&] { action = [&] { return torus_report(t_qmax, t_nmax, reconcile); }; });

  auto *cmd_all = app.add_subcommand("verify-all", "Run every verification");
  bool quick = false;
  bool full = false;
  auto *quick_flag = cmd_all->add_flag("--quick", quick, "Seconds-scale profile (default)");
  cmd_all->add_flag("--full", full, "Complete profile")->excludes(quick_flag);
  cmd_all->callback([&] {
    action = [&] {
      DixonOptions o;
      o.seed = seed;
      return verify_all(full, o);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try
  {
    app.parse(reversed);
  }
  catch (const CLI::CallForHelp &)
  {
    out << app.help();
    return kPass;
  }
  catch (const CLI::CallForAllHelp &)
  {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  }
  catch (const CLI::ParseError &e)
  {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kUsage;
  }

  Report report;
  const auto start = std::chrono::steady_clock::now();
  try
  {
    report = action();
  }
  catch (const ParameterError &e)
  {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  catch (const SizeError &e)
  {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  catch (const SearchExhausted &e)
  {
    err << "error: " << e.what() << '\n';
    return kFail;
  }
  catch (const ConsistencyError &e)
  {
    err << "internal consistency failure: " << e.what() << '\n';
    return kConsistency;
  }
  catch (const EngineError &e)
  {
    err << "internal consistency failure: " << e.what() << '\n';
    return kConsistency;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (report.seed == 0)
  {
    report.seed = seed;
  }
  report.finalize();

  emit(report, format, out);
  if (const char *dir = std::getenv("PPRIME_REPORT_DIR"); dir != nullptr && *dir != '\0')
  {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = std::filesystem::path(dir) / (report.command + "." + format);
    std::ofstream file(path);
    if (!file)
    {
      err << "warning: cannot write " << path.string() << '\n';
    }
    else
    {
      emit(report, format, file);
    }
  }
  return report.status == "pass" ? kPass : kFail;
}

}  // namespace pprime::cli
