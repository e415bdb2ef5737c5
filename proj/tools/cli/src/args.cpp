#include <algorithm>

#include "CLI11.hpp"
#include "qlc/cli/run.hpp"
#include "qlc/error.hpp"

namespace qlc::cli {

namespace {

struct OptionSpec {
  const char* name;
  const char* help;
};

struct CommandSpec {
  const char* name;
  const char* help;
  std::vector<OptionSpec> options;
  std::vector<OptionSpec> flags;
};

const std::vector<OptionSpec> kPencilInput{{"pencil", "pencil JSON file"}, {"case", "classification table row 1..23"}};

std::vector<OptionSpec> with_pencil(std::vector<OptionSpec> extra) {
  extra.insert(extra.begin(), kPencilInput.begin(), kPencilInput.end());
  return extra;
}

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> specs{
      {"segre", "Segre symbol of a pencil", with_pencil({{"method", "minors | snf | jordan | all"}}), {}},
      {"classify", "geometry and singularity report", with_pencil({{"symbol", "Segre symbol, e.g. [(21)(11)1]"}}), {}},
      {"normal-form", "Segre normal form pencil",
       {{"symbol", "Segre symbol"}, {"roots", "comma-separated roots, one per bracket"}, {"case", "table row 1..23"}},
       {}},
      {"surface", "singular quartic surface and its structure", with_pencil({}), {}},
      {"sigma", "the three quadrics of the singular surface in P^5",
       with_pencil({{"points", "search for up to N rational points and map them to P^3"}}), {}},
      {"stabilizer", "stabilizer dimension", with_pencil({}), {}},
      {"moduli", "moduli dimensions of a Segre symbol", {{"symbol", "Segre symbol"}}, {}},
      {"isomorphic", "isomorphism test for two pencils",
       {{"a", "first pencil file"}, {"b", "second pencil file"}, {"case-a", "first table row"}, {"case-b", "second table row"}},
       {}},
      {"cosingular", "cosingular family member and checks",
       {{"lambdas", "six distinct eigenvalues"}, {"rho", "family parameter"}, {"rho-prime", "substitution parameter for verify-phi"},
        {"limit", "rho0 for the limit pencil"}},
       {{"verify-phi", "check the substitution map between the singular surfaces"}}},
      {"table73", "recompute the classification table", {}, {}},
      {"corpus", "run the golden-file corpus",
       {{"dir", "corpus directory (default $QC_CORPUS_DIR or ./corpus)"}, {"filter", "run only checks whose name or module contains this"}},
       {{"update", "rewrite golden files from current output"}}},
      {"klein-frame", "the Klein/Plücker change of coordinates", {}, {{"show", "include the frame matrices"}}},
  };
  return specs;
}

const CommandSpec kQuadric{"quadric",
                           "semistability of a quadratic complex",
                           with_pencil({{"quadric", "6x6 matrix JSON in Plücker coordinates"}, {"weights", "r1,r2,r3"}}),
                           {}};
const CommandSpec kQuartic{"quartic",
                           "semistability witnesses for a quartic surface",
                           with_pencil({{"quartic", "quartic JSON file"},
                                        {"weights", "r0,r1,r2,r3"},
                                        {"point", "a,b,c,d: triple point report"},
                                        {"cone-point", "a,b,c: cusp test on the tangent cone"}}),
                           {{"search", "search triple points with coordinates in {0,1,-1}"}}};

}  // namespace

Job parse_args(const std::vector<std::string>& args, std::string* help) {
  CLI::App app{"qlc: quadratic line complexes"};
  app.require_subcommand(1);
  std::string format = "json", out;
  app.add_option("--output", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out, "also write the document to this file");

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, CLI::App*> subs;

  auto attach = [&](CLI::App* sub, const CommandSpec& spec, const std::string& key) {
    for (const auto& o : spec.options) sub->add_option(std::string("--") + o.name, values[key][o.name], o.help);
    for (const auto& f : spec.flags) sub->add_flag(std::string("--") + f.name, flags[key][f.name], f.help);
    sub->fallthrough();
    subs[key] = sub;
  };
  for (const auto& spec : commands()) attach(app.add_subcommand(spec.name, spec.help), spec, spec.name);
  CLI::App* stab = app.add_subcommand("stability", "GIT semistability tests");
  stab->require_subcommand(1);
  stab->fallthrough();
  attach(stab->add_subcommand("quadric", kQuadric.help), kQuadric, "stability quadric");
  attach(stab->add_subcommand("quartic", kQuartic.help), kQuartic, "stability quartic");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return Job{"help", "", {}, format, out};
  } catch (const CLI::ParseError& e) {
    throw_invalid("cli.usage", e.what());
  }

  Job job;
  job.output_format = format;
  job.output_path = out;
  for (const auto& [key, sub] : subs) {
    if (!sub->parsed()) continue;
    auto space = key.find(' ');
    job.command = key.substr(0, space);
    if (space != std::string::npos) job.subcommand = key.substr(space + 1);
    for (const auto& [name, v] : values[key])
      if (!v.empty()) job.options[name] = v;
    for (const auto& [name, v] : flags[key])
      if (v) job.options[name] = "true";
  }
  if (job.command.empty()) throw_invalid("cli.usage", "missing command");
  return job;
}

}  // namespace qlc::cli
