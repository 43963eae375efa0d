// zss: command line front end for the zero-sum sequence library.
// Every subcommand prints a single JSON document (default) or a flat
// key/value table. Identical invocations produce identical JSON except for
// the timing field inside "stats".

#include <charconv>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zerosum/catalog.hpp"
#include "zerosum/detect.hpp"
#include "zerosum/factorize.hpp"
#include "zerosum/search.hpp"
#include "zerosum/seq.hpp"

using nlohmann::json;
using namespace zerosum;

namespace {

// Ordered list of integers for beta-factorize: same term grammar as
// sequences, but unbounded values and order preserved.
std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  const auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string token = text.substr(pos, end - pos);
    pos = end;

    std::string value_part = token;
    std::uint64_t count = 1;
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      value_part = token.substr(0, caret);
      const std::string mult_part = token.substr(caret + 1);
      if (mult_part.empty() || mult_part[0] == '-' || mult_part[0] == '+')
        throw ParseError("malformed multiplicity in '" + token + "'");
      const auto [p, ec] =
          std::from_chars(mult_part.data(), mult_part.data() + mult_part.size(), count);
      if (ec != std::errc{} || p != mult_part.data() + mult_part.size())
        throw ParseError("malformed multiplicity in '" + token + "'");
    }
    std::int64_t value = 0;
    const auto [p, ec] =
        std::from_chars(value_part.data(), value_part.data() + value_part.size(), value);
    if (value_part.empty() || ec != std::errc{} ||
        p != value_part.data() + value_part.size())
      throw ParseError("malformed term '" + token + "'");
    if (count > (std::uint64_t{1} << 24) || out.size() + count > (std::size_t{1} << 24))
      throw ParseError("list too long");
    out.insert(out.end(), count, value);
  }
  return out;
}

json stats_json(const SearchStats& stats) {
  return json{{"nodes", stats.nodes},
              {"pruned_monotone", stats.pruned_monotone},
              {"pruned_sign", stats.pruned_sign},
              {"wall_seconds", stats.wall_seconds}};
}

void emit(const json& doc, const std::string& format) {
  if (format == "table") {
    for (const auto& [key, value] : doc.items()) {
      std::cout << key << ": ";
      if (value.is_string())
        std::cout << value.get<std::string>();
      else
        std::cout << value.dump();
      std::cout << "\n";
    }
    return;
  }
  std::cout << doc.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum sequences over [-k, k]: detection, catalogs, factorization, exact constants"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  int k = 1;
  std::uint64_t t = 0;
  std::string seq_text;
  std::uint64_t beta = 0;
  std::uint64_t xrep = 1;
  std::uint64_t length = 0;
  std::uint64_t budget_seconds = 7200;
  std::uint64_t budget_nodes = 10'000'000'000ULL;
  int threads = 1;

  std::function<json()> action;

  const auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("--k", k, "interval half-width")->required()->check(CLI::Range(1, 64));
  };
  const auto add_t = [&](CLI::App* cmd) {
    cmd->add_option("--t", t, "target subsequence length")->required();
  };
  const auto add_seq = [&](CLI::App* cmd) {
    cmd->add_option("--seq", seq_text, "sequence, e.g. \"3^2,-2^3\"")->required();
  };

  auto* parse_check = app.add_subcommand("parse-check", "parse a sequence and echo the canonical text");
  add_k(parse_check);
  add_seq(parse_check);
  parse_check->callback([&] {
    action = [&]() -> json {
      const Seq s = Seq::parse(seq_text, k);
      return {{"k", k}, {"seq", s.str()}, {"length", s.length()}, {"sum", s.sum()}};
    };
  });

  auto* detect = app.add_subcommand("detect", "is there a zero-sum subsequence of length t?");
  add_k(detect);
  add_t(detect);
  add_seq(detect);
  detect->callback([&] {
    action = [&]() -> json {
      const Seq s = Seq::parse(seq_text, k);
      const bool contains = contains_length(s, t);
      json out{{"contains", contains}, {"witness", nullptr}};
      if (contains) out["witness"] = witness(s, t).str();
      return out;
    };
  });

  auto* spectrum_cmd = app.add_subcommand("spectrum", "every achievable zero-sum subsequence length");
  add_k(spectrum_cmd);
  add_seq(spectrum_cmd);
  spectrum_cmd->callback([&] {
    action = [&]() -> json {
      const Seq s = Seq::parse(seq_text, k);
      return {{"n", s.length()}, {"lengths", spectrum(s).lengths()}};
    };
  });

  auto* witness_cmd = app.add_subcommand("witness", "extract a zero-sum subsequence of length t");
  add_k(witness_cmd);
  add_t(witness_cmd);
  add_seq(witness_cmd);
  witness_cmd->callback([&] {
    action = [&]() -> json {
      const Seq s = Seq::parse(seq_text, k);
      return {{"t", t}, {"witness", witness(s, t).str()}};
    };
  });

  auto* minimal = app.add_subcommand("minimal", "all minimal zero-sum sequences of one length");
  add_k(minimal);
  minimal->add_option("--length", length, "exact sequence length")->required();
  minimal->callback([&] {
    action = [&]() -> json {
      const auto list = enumerate_minimal(k, length);
      std::vector<std::string> seqs;
      seqs.reserve(list.size());
      for (const auto& s : list) seqs.push_back(s.str());
      return {{"k", k}, {"length", length}, {"count", seqs.size()}, {"seqs", seqs}};
    };
  });

  auto* davenport_cmd = app.add_subcommand("davenport", "largest minimal zero-sum sequence length");
  add_k(davenport_cmd);
  davenport_cmd->callback([&] {
    action = [&]() -> json {
      const auto result = davenport(k);
      return {{"k", k},
              {"value", result.value},
              {"witness", result.witness.str()},
              {"cap", result.cap},
              {"verified_empty_above", result.verified_empty_above}};
    };
  });

  auto* factorize_cmd = app.add_subcommand("factorize", "factor into minimal zero-sum parts");
  add_k(factorize_cmd);
  add_seq(factorize_cmd);
  factorize_cmd->callback([&] {
    action = [&]() -> json {
      const Seq s = Seq::parse(seq_text, k);
      const auto f = factorize_minimal(s);
      const auto p = profile(f);
      std::vector<std::string> parts;
      parts.reserve(f.parts.size());
      for (const auto& part : f.parts) parts.push_back(part.str());
      json counts = json::object();
      for (const auto& [len, n] : p.count) counts[std::to_string(len)] = n;
      return {{"source", s.str()},
              {"parts", parts},
              {"profile", {{"lengths", p.lengths}, {"alpha", p.alpha}, {"counts", counts}}}};
    };
  });

  auto* beta_cmd = app.add_subcommand("beta-factorize", "split by divisible-sum parts of bounded size");
  beta_cmd->add_option("--beta", beta, "divisor")->required();
  beta_cmd->add_option("--seq", seq_text, "integer list, e.g. \"5,7,11\"")->required();
  beta_cmd->callback([&] {
    action = [&]() -> json {
      const auto xs = parse_int_list(seq_text);
      const auto bf = beta_factorize(xs, beta);
      return {{"beta", bf.beta}, {"x0", bf.x0}, {"parts", bf.parts}};
    };
  });

  auto* predict = app.add_subcommand("predict37", "length-profile proof of a length-t subsequence");
  add_k(predict);
  add_t(predict);
  add_seq(predict);
  predict->callback([&] {
    action = [&]() -> json {
      const Seq s = Seq::parse(seq_text, k);
      return {{"predict", profile_bound_predict(s, t)}};
    };
  });

  auto* finiteness_cmd = app.add_subcommand("finiteness", "is the constant finite for (k, t)?");
  add_k(finiteness_cmd);
  add_t(finiteness_cmd);
  finiteness_cmd->callback([&] {
    action = [&]() -> json {
      const auto fin = finiteness(k, t);
      json out{{"k", k}, {"t", t}, {"finite", fin.finite}, {"divisor", nullptr}};
      if (!fin.finite) out["divisor"] = fin.violating_divisor;
      return out;
    };
  });

  auto* bounds_cmd = app.add_subcommand("bounds", "proven range for the finite constant");
  add_k(bounds_cmd);
  add_t(bounds_cmd);
  bounds_cmd->callback([&] {
    action = [&]() -> json {
      const auto b = sprime_bounds(k, t);
      return {{"lower", b.lower}, {"upper", b.upper}};
    };
  });

  auto* lemma30 = app.add_subcommand("lemma30", "standard avoiding constructions of length t+k(k-1)-1");
  add_k(lemma30);
  add_t(lemma30);
  lemma30->callback([&] {
    action = [&]() -> json {
      const auto pair = avoiding_constructions(k, t);
      return {{"s", pair.s.str()}, {"r", pair.r.str()}, {"length", pair.s.length()}};
    };
  });

  auto* family = app.add_subcommand("family", "unbounded avoiding family for the infinite case");
  add_k(family);
  add_t(family);
  family->add_option("--x", xrep, "number of block repetitions")->required();
  family->callback([&] {
    action = [&]() -> json {
      const Seq fam = infinite_family(k, t, xrep);
      const Seq block = infinite_family(k, t, 1);
      return {{"block", block.str()},
              {"block_length", block.length()},
              {"x", xrep},
              {"seq", fam.str()},
              {"length", fam.length()}};
    };
  });

  auto* sprime_cmd = app.add_subcommand("sprime", "exact constant with certificate");
  add_k(sprime_cmd);
  add_t(sprime_cmd);
  sprime_cmd->add_option("--budget-seconds", budget_seconds, "wall budget, 0 = unlimited");
  sprime_cmd->add_option("--budget-nodes", budget_nodes, "node budget, 0 = unlimited");
  sprime_cmd->add_option("--threads", threads, "search threads")->check(CLI::Range(1, 256));
  sprime_cmd->callback([&] {
    action = [&]() -> json {
      SprimeOptions opts;
      opts.budget_seconds = static_cast<double>(budget_seconds);
      opts.budget_nodes = budget_nodes;
      opts.threads = threads;
      const auto res = sprime(k, t, opts);
      json out{{"kind", nullptr},    {"value", nullptr},          {"extremal", nullptr},
               {"verified_upper", nullptr}, {"divisor", nullptr}, {"stats", stats_json(res.stats)}};
      if (res.outcome.kind == SprimeOutcome::Kind::finite) {
        out["kind"] = "finite";
        out["value"] = res.outcome.value;
        out["extremal"] = res.outcome.extremal->str();
        out["verified_upper"] = res.outcome.verified_upper;
      } else {
        out["kind"] = "infinite";
        out["divisor"] = res.outcome.divisor;
      }
      return out;
    };
  });

  auto* verify = app.add_subcommand("verify", "one-shot avoidance certificate for a sequence");
  add_k(verify);
  add_t(verify);
  add_seq(verify);
  verify->callback([&] {
    action = [&]() -> json {
      const Seq s = Seq::parse(seq_text, k);
      const auto report = verify_construction(s, t);
      return {{"length", report.length},
              {"sum", report.sum},
              {"contains_t", report.contains_t},
              {"avoiding", report.avoiding}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    emit(action(), format);
    return 0;
  } catch (const BudgetExhausted& e) {
    json out{{"kind", "inconclusive"},
             {"value", nullptr},
             {"extremal", nullptr},
             {"verified_upper", nullptr},
             {"divisor", nullptr},
             {"stats", stats_json(e.stats)}};
    if (e.verified_down_to <= e.upper)
      out["verified_range"] = json::array({e.verified_down_to, e.upper});
    else
      out["verified_range"] = nullptr;
    emit(out, format);
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
