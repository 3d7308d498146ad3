// sperner: tables, Sperner numbers, generating sets, witnesses, oracles.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sperner/errors.hpp"
#include "sperner/estimates.hpp"
#include "sperner/exact.hpp"
#include "sperner/genset.hpp"
#include "sperner/oracle.hpp"
#include "sperner/tables.hpp"
#include "sperner/witness.hpp"

using namespace sperner;

namespace {

struct Globals {
  bool csv = false;
  std::optional<std::size_t> cap;
  double time_budget = 0;
  std::string dump;
};

std::string render(const SpernerResult& r) {
  const std::string head =
      r.kind == ResultKind::exact ? r.value.get_str(10) : r.lo.get_str(10) + ".." + r.hi.get_str(10);
  return head + " (route: " + r.method + ")";
}

void write_dump(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw BadInput("cannot write dump file '" + path + "'");
  out << text;
}

std::string report_line(const CertifyReport& c) {
  if (!c.ok) return "certify: FAILED (" + c.violation + ")";
  return std::string("certify: ok (") + (c.sampled ? "sampled, " : "exhaustive, ") + std::to_string(c.pairs_checked) +
         " pairs)";
}

// power:<lattice>:<k>; the lattice name may itself contain ':'.
std::optional<std::pair<std::string, std::string>> split_power(const std::string& spec) {
  if (spec.rfind("power:", 0) != 0) return std::nullopt;
  const auto rest = spec.substr(6);
  const auto colon = rest.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == rest.size())
    throw BadInput("expected power:<lattice>:<k>");
  return std::pair{rest.substr(0, colon), rest.substr(colon + 1)};
}

Subset parse_subset_list(const std::string& text, std::size_t n) {
  Subset s;
  std::size_t pos = 0;
  std::string body = text;
  if (!body.empty() && body.front() == '{') body = body.substr(1);
  if (!body.empty() && body.back() == '}') body.pop_back();
  while (pos < body.size()) {
    auto next = body.find(',', pos);
    if (next == std::string::npos) next = body.size();
    const auto item = body.substr(pos, next - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 3)
      throw BadInput("bad subset element '" + item + "'");
    const auto v = std::stoul(item);
    if (v < 1 || v > n) throw BadInput("subset element " + item + " is outside [n]");
    s.insert(v - 1);
    pos = next + 1;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sperner numbers, estimators and minimum generating sets of direct powers"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--csv", g.csv, "comma-separated output for tables");
  app.add_option("--cap", g.cap, "size cap for the command's search (see README)");
  app.add_option("--time-budget", g.time_budget, "seconds before an oracle search stops with a partial result");
  app.add_option("--dump", g.dump, "write a witness family to this path ('-' for stdout)");

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  std::string table_name;
  std::optional<std::uint64_t> from, to;
  auto* table = add("table", "reproduce a value table (t1 adjoints chain4 v-small v-big w-big gmin)");
  table->add_option("id", table_name)->required();
  table->add_option("--from", from, "first row (n, or k for adjoints)");
  table->add_option("--to", to, "last row");

  std::string poset_spec, count_text, formula = "auto";
  auto* sp = add("sp", "Sp(U, n)");
  sp->add_option("poset", poset_spec)->required();
  sp->add_option("n", count_text)->required();
  sp->add_option("--formula", formula, "auto | bounded | length")->check(CLI::IsMember({"auto", "bounded", "length"}));

  auto* asp = add("asp", "Asp(U, k)");
  asp->add_option("poset", poset_spec)->required();
  asp->add_option("k", count_text)->required();

  std::string lattice_spec;
  bool brute = false;
  auto* gmin = add("gmin", "minimum generating set size; power:<lattice>:<k> uses the power formula");
  gmin->add_option("lattice", lattice_spec)->required();
  gmin->add_flag("--brute", brute, "materialize the lattice and search exhaustively");

  std::string pattern;
  auto* witness = add("witness", "constructive family of unrelated copies (w, v, or a bounded poset)");
  witness->add_option("pattern", pattern)->required();
  witness->add_option("n", count_text)->required();

  auto* oracle = add("oracle", "brute-force ground truth");
  oracle->require_subcommand(1);
  auto* o_sp = oracle->add_subcommand("sp", "Sp(U, n) by maximum clique (n <= 5; --cap 6 opts in to n = 6)");
  o_sp->fallthrough();
  o_sp->add_option("poset", poset_spec)->required();
  o_sp->add_option("n", count_text)->required();
  std::string subset_text;
  bool equal_reading = false;
  auto* o_gamma = oracle->add_subcommand("gamma", "permutation class size of X in S_n");
  o_gamma->fallthrough();
  o_gamma->add_option("n", count_text)->required();
  o_gamma->add_option("subset", subset_text, "e.g. 1,2")->required();
  o_gamma->add_flag("--equal", equal_reading, "use the '=' reading");
  auto* o_disjoint = oracle->add_subcommand("disjoint", "incomparable sets have disjoint classes");
  o_disjoint->fallthrough();
  o_disjoint->add_option("n", count_text)->required();
  o_disjoint->add_flag("--equal", equal_reading, "use the '=' reading");
  auto* o_g0 = oracle->add_subcommand("g0", "argmin of (n+2x) x! (n-1-x)! over [n-1]");
  o_g0->fallthrough();
  o_g0->add_option("n", count_text)->required();
  auto* o_gmin = oracle->add_subcommand("gmin", "brute-force gmin of a lattice (power:<lattice>:<k> materialized)");
  o_gmin->fallthrough();
  o_gmin->add_option("lattice", lattice_spec)->required();

  auto* dim = add("dim", "minimum Boolean embedding dimension");
  dim->add_option("poset", poset_spec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto count = [&](const std::string& text) -> std::uint64_t {
    const auto v = parse_bignat(text);
    if (!v.fits_ulong_p()) throw ResourceLimit("count too large: " + text);
    return v.get_ui();
  };
  const std::size_t embed_cap = g.cap.value_or(kDefaultEmbeddingCap);

  try {
    if (*table) {
      const auto id = parse_table_id(table_name);
      if (!id) throw BadInput("unknown table '" + table_name + "'");
      std::cout << render_table(build_table(*id, {from, to, g.csv}), g.csv);
    } else if (*sp) {
      const auto u = poset_from_spec(poset_spec);
      const auto n = count(count_text);
      if (formula == "bounded")
        std::cout << render(sp_bounded(u, n)) << '\n';
      else if (formula == "length")
        std::cout << render(sp_length_matching(u, n)) << '\n';
      else
        std::cout << render(sp_dispatch(u, n, embed_cap)) << '\n';
    } else if (*asp) {
      const auto u = poset_from_spec(poset_spec);
      std::cout << asp_dispatch(u, parse_bignat(count_text), embed_cap).to_string() << '\n';
    } else if (*gmin) {
      const auto power = split_power(lattice_spec);
      if (power && !brute) {
        const auto d = lattice_from_spec(power->first);
        std::cout << gmin_power(d, parse_bignat(power->second), embed_cap).to_string() << '\n';
      } else {
        const auto lattice = power ? direct_power(lattice_from_spec(power->first), count(power->second),
                                                  std::max<std::size_t>(1000, g.cap.value_or(0)))
                                   : lattice_from_spec(lattice_spec);
        const auto r = gmin_bruteforce(lattice, g.cap.value_or(kDefaultBruteForceCap));
        std::cout << r.size << " (route: brute-force)\n";
      }
    } else if (*witness) {
      const auto n = count(count_text);
      const auto max_copies = g.cap.value_or(kDefaultMaxCopies);
      const auto fam = pattern == "w"   ? witness_W(n, max_copies)
                       : pattern == "v" ? witness_V(n, max_copies)
                                        : witness_bounded(poset_from_spec(pattern), n, max_copies);
      const auto report = certify(fam);
      std::cout << "copies: " << fam.copies.size() << "\n" << report_line(report) << '\n';
      write_dump(g.dump, dump_family(fam));
      if (!report.ok) return 1;
    } else if (*o_sp) {
      OracleLimits limits;
      if (g.cap) limits.max_n = *g.cap;
      limits.time_budget_seconds = g.time_budget;
      const auto r = sp_exhaustive(poset_from_spec(poset_spec), count(count_text), limits);
      std::cout << r.value << (r.exact ? "" : " (partial: time budget exhausted, lower bound only)") << '\n';
      const auto report = certify(r.witness);
      std::cout << "copies in graph: " << r.vertices << "\n" << report_line(report) << '\n';
      write_dump(g.dump, dump_family(r.witness));
      if (!report.ok) return 1;
    } else if (*o_gamma) {
      const auto n = count(count_text);
      const auto x = parse_subset_list(subset_text, n);
      const auto reading = equal_reading ? GammaReading::equal : GammaReading::subset;
      std::cout << "closed form: " << gamma_size(x.count(), n).get_str(10) << '\n';
      if (n <= 8) std::cout << "enumerated: " << gamma_enumerate(x, n, reading) << '\n';
    } else if (*o_disjoint) {
      const bool ok = gamma_disjointness_check(count(count_text),
                                               equal_reading ? GammaReading::equal : GammaReading::subset);
      std::cout << (ok ? "disjoint" : "NOT disjoint") << '\n';
      if (!ok) return 1;
    } else if (*o_g0) {
      const auto r = g0_argmin_check(count(count_text));
      std::cout << (r.ok ? "ok" : "FAILED") << " argmin " << r.argmin << " M " << r.minimum.get_str(10) << '\n';
      if (!r.ok) return 1;
    } else if (*o_gmin) {
      const auto power = split_power(lattice_spec);
      const auto lattice = power ? direct_power(lattice_from_spec(power->first), count(power->second),
                                                std::max<std::size_t>(1000, g.cap.value_or(0)))
                                 : lattice_from_spec(lattice_spec);
      const auto r = gmin_bruteforce(lattice, g.cap.value_or(kDefaultBruteForceCap));
      std::cout << r.size << " (route: brute-force)\ngenerators:";
      for (auto x : r.generators) std::cout << ' ' << x;
      std::cout << '\n';
    } else if (*dim) {
      const auto u = poset_from_spec(poset_spec);
      const auto e = minimum_embedding(u, embed_cap);
      std::cout << e.dimension << '\n';
      for (std::size_t x = 0; x < u.size(); ++x) std::cout << "  " << x << " -> " << e.images[x].to_string() << '\n';
    }
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const HypothesisNotMet& e) {
    std::cerr << "hypothesis not met: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
