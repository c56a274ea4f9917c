#pragma once

// Command implementations behind the `detachgb` executable, kept in a header
// so the test suites can drive them in-process.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
// 3 disagreement with the reference oracle.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "detachgb/detachgb.hpp"

namespace detachgb::cli {

enum ExitCode : int { ok = 0, usage_error = 1, verification_failure = 2, oracle_disagreement = 3 };

struct Options {
  std::string command;
  std::string file;
  std::string poly;
  bool reps = false;
  bool json = false;
  bool trace = false;
};

using ordered_json = nlohmann::ordered_json;

/// `-x*y*f2 + z^2*f3`; zero vector renders as `0`.
template <FieldElement C>
std::string combination_string(const ModuleVector<C>& u) {
  std::string out;
  for (std::size_t j = 0; j < u.rank(); ++j) {
    if (u[j].is_zero()) continue;
    std::string p = to_string(u[j]);
    std::string fj = "f" + std::to_string(j + 1);
    bool negative = false;
    std::string piece;
    if (u[j].size() == 1) {
      negative = p.front() == '-';
      if (negative) p.erase(0, 1);
      piece = (p == "1" ? "" : p + "*") + fj;
    } else {
      piece = "(" + p + ")*" + fj;
    }
    if (out.empty())
      out = (negative ? "-" : "") + piece;
    else
      out += (negative ? " - " : " + ") + piece;
  }
  return out.empty() ? "0" : out;
}

template <FieldElement C>
ordered_json vector_json(const ModuleVector<C>& u) {
  ordered_json a = ordered_json::array();
  for (const auto& p : u.components()) a.push_back(to_string(p));
  return a;
}

template <FieldElement C>
int cmd_gb(const SystemFile& sys, const Options& opt, std::ostream& out, std::ostream& err) {
  auto ring = sys.ring<C>();
  auto gens = sys.generators(ring);
  EngineOptions eopt;
  if (opt.trace)
    eopt.on_pair = [&](const TraceEntry& e) {
      err << to_string(e.pair_sig, *ring) << " " << to_string(e.verdict) << "\n";
    };
  auto prep = prepare(gens, std::move(eopt));
  for (std::size_t i = 0; i < prep.reduced.size(); ++i)
    if (!verify_representation(prep.reduced[i], prep.reps[i], gens)) {
      err << "error: representation of basis element " << i + 1 << " does not verify\n";
      return verification_failure;
    }
  if (opt.json) {
    ordered_json j;
    j["basis"] = ordered_json::array();
    j["reps"] = ordered_json::array();
    for (std::size_t i = 0; i < prep.reduced.size(); ++i) {
      j["basis"].push_back(to_string(prep.reduced[i]));
      j["reps"].push_back(vector_json(prep.reps[i]));
    }
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "reduced Groebner basis (" << prep.reduced.size() << " elements)\n";
  for (std::size_t i = 0; i < prep.reduced.size(); ++i) {
    out << "  g" << i + 1 << " = " << to_string(prep.reduced[i]) << "\n";
    if (opt.reps) out << "     = " << combination_string(prep.reps[i]) << "\n";
  }
  return ok;
}

template <FieldElement C>
int cmd_detach(const SystemFile& sys, const Options& opt, std::ostream& out, std::ostream& err) {
  auto ring = sys.ring<C>();
  auto gens = sys.generators(ring);
  Polynomial<C> f;
  try {
    f = parse_poly(opt.poly, ring);
  } catch (const ParseError& e) {
    err << "error: --poly: " << e.what() << "\n";
    return usage_error;
  }
  auto prep = prepare(gens);
  auto res = detach(f, prep);
  const bool verified = res.member ? verify_representation(f, *res.cofactors, gens)
                                   : !res.remainder.is_zero();
  if (opt.json) {
    ordered_json j;
    j["member"] = res.member;
    j["remainder"] = to_string(res.remainder);
    j["cofactors"] = res.member ? vector_json(*res.cofactors) : ordered_json(nullptr);
    j["verified"] = verified;
    out << j.dump(2) << "\n";
  } else if (res.member) {
    out << "MEMBER\n";
    out << "cofactors: " << to_string(*res.cofactors) << "\n";
    out << "f = " << combination_string(*res.cofactors) << "\n";
    out << "verification: " << (verified ? "u.F - f = 0 (ok)" : "u.F - f != 0 (FAILED)") << "\n";
  } else {
    out << "NOT-MEMBER\n";
    out << "remainder: " << to_string(res.remainder) << "\n";
  }
  if (!verified) {
    err << "error: certificate failed verification\n";
    return verification_failure;
  }
  return ok;
}

template <FieldElement C>
int cmd_check(const SystemFile& sys, const Options& opt, std::ostream& out, std::ostream& err) {
  auto ring = sys.ring<C>();
  auto gens = sys.generators(ring);
  SignatureEngine<C> engine(gens);
  engine.run();
  const bool certified = engine.certify();
  auto prep = prepare(gens);
  bool reps_ok = true;
  for (std::size_t i = 0; i < prep.reduced.size(); ++i)
    reps_ok = reps_ok && verify_representation(prep.reduced[i], prep.reps[i], gens);
  auto oracle = buchberger_with_cofactors(gens);
  auto expected = interreduce(oracle.polys());
  const bool agree = expected == prep.reduced;

  std::string counterexample;
  if (!agree) {
    std::set<std::string> a, b;
    for (const auto& p : prep.reduced) a.insert(to_string(p));
    for (const auto& p : expected) b.insert(to_string(p));
    for (const auto& s : a)
      if (!b.count(s)) {
        counterexample = "pipeline only: " + s;
        break;
      }
    if (counterexample.empty())
      for (const auto& s : b)
        if (!a.count(s)) {
          counterexample = "oracle only: " + s;
          break;
        }
  }

  if (opt.json) {
    ordered_json j;
    j["agree"] = agree;
    j["certified"] = certified;
    j["reps_verified"] = reps_ok;
    j["basis"] = ordered_json::array();
    for (const auto& p : prep.reduced) j["basis"].push_back(to_string(p));
    j["oracle"] = ordered_json::array();
    for (const auto& p : expected) j["oracle"].push_back(to_string(p));
    if (!agree) j["counterexample"] = counterexample;
    out << j.dump(2) << "\n";
  } else {
    out << (agree ? "AGREE" : "DISAGREE") << ": pipeline " << prep.reduced.size() << " elements, oracle "
        << expected.size() << " elements\n";
    out << "signature basis criteria: " << (certified ? "certified" : "NOT certified") << "\n";
    out << "representations: " << (reps_ok ? "verified" : "FAILED") << "\n";
    if (!agree) out << "counterexample: " << counterexample << "\n";
  }
  if (!reps_ok) {
    err << "error: representation failed verification\n";
    return verification_failure;
  }
  if (!agree || !certified) {
    err << "error: pipeline disagrees with the oracle\n";
    return oracle_disagreement;
  }
  return ok;
}

template <FieldElement C>
int dispatch(const SystemFile& sys, const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.command == "gb") return cmd_gb<C>(sys, opt, out, err);
  if (opt.command == "detach") return cmd_detach<C>(sys, opt, out, err);
  return cmd_check<C>(sys, opt, out, err);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases with signatures and ideal membership certificates", "detachgb"};
  app.require_subcommand(1);
  Options opt;
  auto* gb = app.add_subcommand("gb", "print the reduced Groebner basis");
  gb->add_option("file", opt.file, "system file")->required();
  gb->add_flag("--reps", opt.reps, "print each element as a combination of the generators");
  gb->add_flag("--json", opt.json, "machine-readable output");
  gb->add_flag("--trace", opt.trace, "log every critical pair verdict to stderr");
  auto* dt = app.add_subcommand("detach", "decide membership and print a certificate");
  dt->add_option("file", opt.file, "system file")->required();
  dt->add_option("--poly", opt.poly, "polynomial to test")->required();
  dt->add_flag("--json", opt.json, "machine-readable output");
  auto* ck = app.add_subcommand("check", "cross-check the pipeline against plain Buchberger");
  ck->add_option("file", opt.file, "system file")->required();
  ck->add_flag("--json", opt.json, "machine-readable output");

  std::vector<const char*> argv;
  argv.push_back("detachgb");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    SystemFile sys = load_system(opt.file);
    if (sys.field.is_rational()) return dispatch<Rational>(sys, opt, out, err);
    return dispatch<Zp>(sys, opt, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const SystemFileError& e) {
    err << "error: " << opt.file << ": " << e.what() << "\n";
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return verification_failure;
  }
}

}  // namespace detachgb::cli
