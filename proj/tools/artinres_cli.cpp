// artinres: Betti numbers, canonical modules, types and claim checks for artinian
// monomial quotients k[x1..xd]/I.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "artinres/claims.hpp"
#include "artinres/errors.hpp"
#include "artinres/ideal_io.hpp"
#include "artinres/koszul.hpp"
#include "artinres/poincare.hpp"
#include "artinres/resolution.hpp"
#include "artinres/verifier.hpp"

using namespace artinres;
using nlohmann::ordered_json;

namespace {

enum class Format { text, tsv, json };

struct Options {
  std::uint32_t p = kDefaultPrime;
  std::size_t steps = 5;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  std::string ideal_file;
  std::string gens;
  std::string vars;
  std::string power;
  std::string module = "k";
  bool p_given = false;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "tsv") return Format::tsv;
  if (s == "json") return Format::json;
  throw InputError("unknown format '" + s + "' (expected text, tsv or json)");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> var_names(const std::string& vars) {
  if (vars.empty()) return {};
  if (vars.find_first_not_of("0123456789") == std::string::npos) {
    std::vector<std::string> names;
    for (int i = 1, n = std::stoi(vars); i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
  }
  return split_list(vars);
}

MonomialIdeal load_ideal(const Options& o) {
  const int sources = !o.ideal_file.empty() + !o.gens.empty() + !o.power.empty();
  if (sources != 1) throw InputError("give exactly one of --ideal, --gens, --power");
  if (!o.power.empty()) {
    const RingParams rp = parse_ring_params(o.power);
    return ideal_power(maximal_ideal(RingSpec(rp.d, o.p)), rp.n);
  }
  IdealSyntax syntax;
  syntax.vars = var_names(o.vars);
  syntax.char_p = o.p;
  syntax.force_char = o.p_given;
  if (!o.gens.empty()) return parse_ideal_text(o.gens, syntax);
  return read_ideal_file(o.ideal_file, syntax);
}

std::string series_list(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string socle_text(const AlgebraPtr& alg, const SocleData& soc) {
  std::string s = "type\t" + std::to_string(soc.type) + "\n";
  for (std::size_t t = 0; t < soc.basis.size(); ++t) {
    const std::size_t degree = static_cast<std::size_t>(soc.lo) + t;
    for (const SparseVec& v : soc.basis[t]) {
      std::string elem;
      for (const Entry& e : v) {
        if (!elem.empty()) elem += " + ";
        if (e.value != 1) elem += std::to_string(e.value) + "*";
        elem += alg->monomial(alg->degree_begin(degree) + e.index).to_string(alg->ring());
      }
      s += std::to_string(degree) + "\t" + elem + "\n";
    }
  }
  return s;
}

ordered_json socle_json(const AlgebraPtr& alg, const SocleData& soc) {
  ordered_json j;
  j["type"] = soc.type;
  j["dims"] = soc.dims;
  j["lo"] = soc.lo;
  ordered_json elems = ordered_json::array();
  for (std::size_t t = 0; t < soc.basis.size(); ++t) {
    const std::size_t degree = static_cast<std::size_t>(soc.lo) + t;
    for (const SparseVec& v : soc.basis[t]) {
      ordered_json terms = ordered_json::array();
      for (const Entry& e : v) {
        terms.push_back({{"coeff", e.value},
                         {"monomial", alg->monomial(alg->degree_begin(degree) + e.index).to_string(alg->ring())}});
      }
      elems.push_back({{"degree", degree}, {"terms", terms}});
    }
  }
  j["basis"] = elems;
  return j;
}

std::string catalog_text() {
  std::string s;
  for (const ClaimSpec& c : default_registry().claims()) {
    s += c.id + "\t" + to_string(c.kind) + "\t" + c.citation + "\t" + c.summary + "\n";
  }
  s += "# out of scope\n";
  for (const OutOfScope& o : out_of_scope_citations()) s += "-\tout-of-scope\t" + o.citation + "\t" + o.reason + "\n";
  return s;
}

ordered_json catalog_json() {
  ordered_json j = ordered_json::array();
  for (const ClaimSpec& c : default_registry().claims()) {
    j.push_back({{"id", c.id}, {"kind", to_string(c.kind)}, {"citation", c.citation}, {"summary", c.summary}});
  }
  for (const OutOfScope& o : out_of_scope_citations()) {
    j.push_back({{"id", nullptr}, {"kind", "out-of-scope"}, {"citation", o.citation}, {"summary", o.reason}});
  }
  return j;
}

void emit(const Options& o, const std::string& body) {
  if (o.out.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot open '" + o.out + "' for writing");
  f << body;
  if (!body.empty() && body.back() != '\n') f << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological invariants of artinian monomial quotients over a prime field"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--p", o.p, "characteristic (prime <= 65521)")->each([&](const std::string&) { o.p_given = true; });
  app.add_option("--steps", o.steps, "resolution length or series order");
  app.add_option("--seed", o.seed, "seed for random modules and fuzz families");
  app.add_option("--format", o.format, "text, tsv or json")->check(CLI::IsMember({"text", "tsv", "json"}));
  app.add_option("--out", o.out, "write the output to this file");
  app.add_option("--ideal", o.ideal_file, "ideal file (text or JSON)");
  app.add_option("--gens", o.gens, "inline generators, e.g. \"x^2,y^2,x*y\"");
  app.add_option("--vars", o.vars, "variable names \"x,y,z\" or a count");
  app.add_option("--power", o.power, "use m^n in d variables, given as d=2,n=3");

  auto* betti = app.add_subcommand("betti", "Betti numbers over R = S/I of a module");
  auto* canonical = app.add_subcommand("canonical", "Betti numbers of the canonical module of R");
  auto* type = app.add_subcommand("type", "Cohen-Macaulay type of S/I");
  auto* socle_cmd = app.add_subcommand("socle", "socle basis of R");
  auto* koszul = app.add_subcommand("koszul", "graded Betti table of S/I over S");
  auto* poincare = app.add_subcommand("poincare", "Poincare series over R = S/m^n via the Golod formula");
  auto* verify = app.add_subcommand("verify", "run the claim registry");

  for (auto* sub : {betti, poincare}) {
    sub->add_option("--module", o.module, "k, R, omega, random:<seed> or R/(<monomials in x1..xd>)");
  }
  bool list = false;
  std::string claims;
  std::string ring;
  std::size_t fuzz = 0;
  verify->add_flag("--list", list, "print the claim catalog with citations");
  verify->add_option("--claims", claims, "comma-separated claim ids");
  verify->add_option("--ring", ring, "restrict ring-parametrized claims to d=<d>,n=<n>");
  verify->add_option("--fuzz", fuzz, "append this many random-ideal invariant checks");

  CLI11_PARSE(app, argc, argv);

  try {
    const Format fmt = parse_format(o.format);
    Limits limits;
    limits.max_steps = std::max<std::size_t>(limits.max_steps, o.steps + 1);

    if (verify->parsed()) {
      if (list) {
        emit(o, fmt == Format::json ? catalog_json().dump(2) : catalog_text());
        return 0;
      }
      VerifyConfig cfg;
      cfg.claims = split_list(claims);
      cfg.run.p = o.p;
      cfg.run.seed = o.seed;
      cfg.run.fuzz = fuzz;
      cfg.run.limits = limits;
      if (!ring.empty()) cfg.run.ring = parse_ring_params(ring);
      const VerifyReport report = verify_all(cfg);
      emit(o, fmt == Format::json ? report.to_json().dump(2) : report.to_text());
      return report.exit_code();
    }

    const MonomialIdeal ideal = load_ideal(o);

    if (koszul->parsed()) {
      const BettiTable t = graded_betti(ideal);
      if (fmt == Format::json) emit(o, betti_table_json(t).dump(2));
      else if (fmt == Format::tsv) emit(o, betti_table_tsv(t));
      else emit(o, betti_staircase(t) + "totals\t" + series_list(t.totals()));
      return 0;
    }
    if (type->parsed()) {
      std::string route;
      const std::uint64_t t = ring_type(ideal, &route);
      if (fmt == Format::json) emit(o, ordered_json{{"ideal", ideal.to_string()}, {"type", t}, {"route", route}}.dump(2));
      else emit(o, "type\t" + std::to_string(t) + "\nroute\t" + route);
      return 0;
    }

    const AlgebraPtr alg = ArtinianAlgebra::build(ideal);
    if (socle_cmd->parsed()) {
      const SocleData soc = socle(ring_module(alg));
      emit(o, fmt == Format::json ? socle_json(alg, soc).dump(2) : socle_text(alg, soc));
      return 0;
    }
    if (canonical->parsed()) {
      const std::vector<std::uint64_t> b = betti_canonical(ideal, o.steps, limits);
      if (fmt == Format::json) emit(o, betti_json(b).dump(2));
      else if (fmt == Format::tsv) emit(o, betti_tsv(b));
      else emit(o, "omega betti\t" + series_list(b));
      return 0;
    }
    const GradedModule m = named_module(alg, o.module);
    if (betti->parsed()) {
      const ResolutionR res = resolve(m, o.steps, limits);
      if (fmt == Format::json) emit(o, betti_json(res.betti()).dump(2));
      else if (fmt == Format::tsv) emit(o, betti_tsv(res.betti()));
      else emit(o, resolution_text(res));
      return 0;
    }
    if (poincare->parsed()) {
      const TruncatedPowerSeries s = poincare_over_R(m, o.steps, limits);
      if (fmt == Format::json) emit(o, s.to_json().dump(2));
      else if (fmt == Format::tsv) {
        std::string body;
        for (std::size_t i = 0; i <= s.order(); ++i) body += std::to_string(i) + "\t" + s[i].str() + "\n";
        emit(o, body);
      } else {
        emit(o, s.to_string());
      }
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis not met: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
