#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using bgsig::tool::Path;

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{ "bgsig: lattice signatures (Fiat-Shamir with aborts over module lattices)" };
  app.require_subcommand(1);

  std::string params_path;
  app.add_option("--params", params_path,
                 "key=value parameter file (q,n,k,l,eta,gamma,tau); default set if omitted")
    ->check(CLI::ExistingFile);

  std::optional<std::string> seed;
  std::string pk_path;
  std::string sk_path;
  std::string sig_path;
  std::string msg_path;
  std::string out_path;
  std::optional<std::string> csv_path;
  uint32_t trials = 1000;
  uint32_t count = 100;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool randomized = false;

  auto* keygen = app.add_subcommand("keygen", "generate a key pair");
  keygen->add_option("--seed", seed, "32-byte seed as 64 hex digits (random if omitted)");
  keygen->add_option("--pk", pk_path, "public key output (.bgpk)")->required();
  keygen->add_option("--sk", sk_path, "secret key output (.bgsk)")->required();

  auto* sign = app.add_subcommand("sign", "sign a message file");
  sign->add_option("--sk", sk_path, "secret key (.bgsk)")->required();
  sign->add_option("--msg", msg_path, "message file, '-' for stdin")->required();
  sign->add_option("--out", out_path, "signature output (.bgsig)")->required();
  sign->add_flag("--randomized", randomized, "mix a fresh salt into the mask seed");

  auto* verify = app.add_subcommand("verify", "verify a signature");
  verify->add_option("--pk", pk_path, "public key (.bgpk)")->required();
  verify->add_option("--msg", msg_path, "message file, '-' for stdin")->required();
  verify->add_option("--sig", sig_path, "signature (.bgsig)")->required();

  auto* kat_gen = app.add_subcommand("kat-gen", "generate known-answer records");
  kat_gen->add_option("--seed", seed, "master seed, 64 hex digits")->required();
  kat_gen->add_option("--count", count, "number of records")->capture_default_str();
  kat_gen->add_option("--out", out_path, "output file (.bgkat)")->required();

  auto* kat_check = app.add_subcommand("kat-check", "regenerate and compare a KAT file");
  kat_check->add_option("path", out_path, "KAT file (.bgkat)")->required();

  auto* bench = app.add_subcommand("bench", "measure rejection rates and signing throughput");
  bench->add_option("--trials", trials, "number of signatures")->capture_default_str();
  bench->add_option("--seed", seed, "master seed, 64 hex digits (all-zero if omitted)");
  bench->add_option("--csv", csv_path, "also write a CSV summary here");
  bench->add_option("--threads", threads, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bgsig::tool::kExitMalformed;
  }

  std::optional<bgsig::ValidatedParamSet> params;
  try {
    if (params_path.empty()) {
      params = bgsig::default_params();
    } else {
      std::ifstream f(params_path);
      if (!f) {
        std::cerr << "error: cannot read " << params_path << "\n";
        return bgsig::tool::kExitIo;
      }
      std::stringstream ss;
      ss << f.rdbuf();
      params = bgsig::load_paramset_config(ss.str());
    }
  } catch (const bgsig::ParamError& e) {
    std::cerr << "error: invalid parameter set: " << e.what() << "\n";
    return bgsig::tool::kExitMalformed;
  }

  bgsig::tool::Streams io{ std::cin, std::cout, std::cerr };
  const auto& p = *params;

  if (*keygen) return bgsig::tool::cmd_keygen(seed, pk_path, sk_path, p, io);
  if (*sign) return bgsig::tool::cmd_sign(sk_path, msg_path, out_path, randomized, p, io);
  if (*verify) return bgsig::tool::cmd_verify(pk_path, msg_path, sig_path, p, io);
  if (*kat_gen) return bgsig::tool::cmd_kat_gen(*seed, count, out_path, p, io);
  if (*kat_check) return bgsig::tool::cmd_kat_check(out_path, p, io);
  if (*bench) {
    std::optional<Path> csv;
    if (csv_path) csv = Path(*csv_path);
    return bgsig::tool::cmd_bench(trials, seed, csv, threads, p, io);
  }
  return bgsig::tool::kExitMalformed;
}
