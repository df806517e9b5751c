#include "galmod/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "galmod/algebra/text_format.hpp"
#include "galmod/as/pairing.hpp"
#include "galmod/as/window.hpp"
#include "galmod/error.hpp"
#include "galmod/family/free_family.hpp"
#include "galmod/fpg/serialize.hpp"

namespace galmod::cli {

namespace {

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json j = {{"p", c.p}, {"n", c.n}, {"k", c.k}, {"seed", c.seed}, {"max_enum", c.max_enum}};
  if (c.module_file) j["module_file"] = *c.module_file;
  if (c.builtin) j["builtin"] = *c.builtin;
  if (c.delta) j["delta"] = *c.delta;
  return j;
}

Report new_report(const std::string& command, const RunConfig& c) {
  Report r;
  r.command = command;
  r.config = config_json(c);
  return r;
}

void finish(Report& r) {
  r.passed = true;
  for (const auto& [name, ok] : r.verifications.items()) r.passed = r.passed && ok.get<bool>();
  r.exit_code = r.passed ? kPass : kCheckFailed;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

FpGModule builtin_module(const std::string& name, const GroupContext& ctx, std::size_t k) {
  if (name == "regular") return FpGModule::regular(ctx);
  if (name == "regular-plus-trivial") return direct_sum(FpGModule::regular(ctx), FpGModule::trivial(ctx, 1));
  if (name == "free") return FpGModule::free(ctx, k);
  if (name == "free-plus-trivial") return direct_sum(FpGModule::free(ctx, k), FpGModule::trivial(ctx, 1));
  if (name == "trivial") return FpGModule::trivial(ctx, k);
  throw Error(ErrorKind::ParseError, "unknown built-in module \"" + name +
                                         "\" (regular, regular-plus-trivial, free, free-plus-trivial, trivial)");
}

}  // namespace

nlohmann::json to_json(const Report& r) {
  return {{"command", r.command}, {"config", r.config},   {"result", r.result},
          {"verifications", r.verifications}, {"passed", r.passed}, {"timing_ms", r.timing_ms}};
}

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t line_of(const std::string& text, std::size_t offset) {
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + std::min(offset, text.size()), '\n'));
}

}  // namespace

nlohmann::json read_module_file(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    const std::size_t line_start = text.rfind('\n', offset == 0 ? 0 : offset - 1);
    const std::size_t col = line_start == std::string::npos ? offset + 1 : offset - line_start;
    std::string msg = e.what();
    // drop nlohmann's "[json.exception...] parse error at line L, column C: " prefix
    if (auto pos = msg.find(": "); pos != std::string::npos && msg.find("column") < pos) msg = msg.substr(pos + 2);
    throw Error(ErrorKind::ParseError,
                path + ":" + std::to_string(line_of(text, offset)) + ":" + std::to_string(col) + ": " + msg);
  }
}

namespace {

/// Module from file; schema errors point at the line of the offending field.
FpGModule load_module(const std::string& path) {
  const nlohmann::json j = read_module_file(path);
  try {
    return module_from_json(j);
  } catch (const Error& e) {
    const std::string text = read_text(path);
    std::string where = path;
    for (const char* key : {"sigma", "dim", "p", "n"}) {
      const std::string quoted = std::string("\"") + key + "\"";
      const auto at = text.find(quoted);
      const bool named = e.message().find(quoted) != std::string::npos ||
                         (std::string(key).size() > 1 && e.message().find(key) != std::string::npos);
      if (at != std::string::npos && named) {
        where += ":" + std::to_string(line_of(text, at));
        break;
      }
    }
    throw Error(e.kind(), where + ": " + e.message());
  }
}

}  // namespace

Report cmd_decompose(const RunConfig& c) {
  Report r = new_report("decompose", c);
  const GroupContext ctx(c.p, c.n);
  std::optional<FpGModule> m;
  if (c.module_file) {
    m = load_module(*c.module_file);
  } else {
    m = builtin_module(c.builtin.value_or("regular"), ctx, c.k);
  }
  const std::size_t N = m->context().order();
  const auto lengths = decompose(*m);
  nlohmann::json freeness = nlohmann::json::object();
  for (std::size_t k = 1; k * N <= m->dim(); ++k) freeness[std::to_string(k)] = is_free(*m, k);
  std::size_t total = 0;
  for (auto l : lengths) total += l;
  r.result = {{"p", m->context().p()}, {"n", m->context().n()}, {"dim", m->dim()},
              {"summands", lengths},   {"rank_sequence", rank_sequence(*m)},
              {"free", freeness},      {"h1", cyclic_h1(*m)}, {"h2", cyclic_h2(*m)}};
  r.verifications["summands_fill_dimension"] = total == m->dim();
  r.verifications["summands_within_group_order"] = lengths.empty() || lengths.front() <= N;
  finish(r);
  return r;
}

Report cmd_family(const RunConfig& c) {
  Report r = new_report("family", c);
  const GroupContext ctx(c.p, c.n);
  const FamilyInput in = canonical_family_input(ctx, c.k);
  const FamilyOutput out = build_family(in);
  const FamilyVerification v = verify_family(in, out);
  const std::uint64_t expected = ipow(c.p, c.k);
  bool no_relations = true;
  for (const auto& m : out.members) no_relations = no_relations && no_relation_check(in, m.c);

  r.result = family_to_json(in, out);
  r.result["family_size"] = out.members.size();
  r.result["expected"] = expected;
  r.verifications["size_is_p_to_k"] = out.members.size() == expected;
  r.verifications["hypotheses"] = check_hypotheses(in).all();
  r.verifications["all_free"] = v.all_free;
  r.verifications["pairwise_distinct"] = v.pairwise_distinct;
  r.verifications["delta_outside_members"] = v.delta_outside_members;
  r.verifications["first_member_is_v"] = v.first_is_v;
  r.verifications["no_relations"] = no_relations;
  try {
    const auto found = exhaustive_free_submodules(in.ambient, c.k, c.max_enum);
    bool contains = true;
    for (const auto& m : out.members) {
      contains = contains && std::find(found.begin(), found.end(), m.submodule) != found.end();
    }
    r.result["oracle"] = {{"count", found.size()}};
    r.verifications["oracle_at_least_p_to_k"] = found.size() >= expected;
    r.verifications["oracle_contains_family"] = contains;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    r.result["oracle"] = {{"skipped", e.message()}};
  }
  finish(r);
  return r;
}

Report cmd_group_verify(const RunConfig& c) {
  Report r = new_report("group-verify", c);
  const GroupContext ctx(c.p, c.n);
  VerifyOptions opts;
  opts.cutoff = c.max_enum;
  opts.seed = c.seed;
  r.result = nlohmann::json::object();
  r.result["checks"] = nlohmann::json::array();
  auto run_check = [&](const std::string& name, auto&& fn) {
    try {
      const CheckReport cr = fn();
      r.result["checks"].push_back(galmod::to_json(cr));
      r.verifications[name] = cr.passed;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge && e.kind() != ErrorKind::OutOfRange) throw;
      r.result["checks"].push_back({{"check", name}, {"skipped", e.message()}});
    }
  };
  run_check("group_axioms", [&] { return group_axioms_check(ctx, c.k, opts); });
  run_check("pn_power_formula", [&] { return pn_power_formula_check(ctx, c.k, opts); });
  run_check("exponent", [&] { return exponent_check(ctx, c.k, opts); });
  run_check("index_p_submodules_contain_augmentation_image",
            [&] { return index_p_submodules_contain_augmentation_image(ctx, c.k, opts); });
  run_check("fiber_product_isomorphism", [&] { return fiber_product_isomorphism(ctx, c.k, opts); });

  const std::uint64_t free_count = h2_witness_extension_count(FpGModule::free(ctx, c.k));
  const std::uint64_t trivial_count = h2_witness_extension_count(FpGModule::trivial(ctx, 1));
  r.result["extension_classes"] = {{"free", free_count}, {"trivial", trivial_count}};
  r.verifications["free_module_h2_vanishes"] = free_count == 1;
  r.verifications["trivial_module_h2_is_one"] = trivial_count == c.p;
  finish(r);
  return r;
}

Report cmd_realize(const RunConfig& c) {
  Report r = new_report("realize", c);
  const ASContext ctx(c.p, c.n);
  std::optional<RatFn> delta;
  if (c.delta) delta = parse_ratfn(*c.delta, ctx.field());
  const Realization z = realize(ctx, c.k, delta);
  const HypothesisReport h = check_hypotheses(z.witness.input);
  const FamilyVerification v = verify_family(z.witness.input, z.family);

  // every emitted generator string parses back to its member's class
  bool round_trip = true;
  for (std::size_t i = 0; i < z.sets.size(); ++i) {
    for (std::size_t j = 0; j < z.sets[i].generators.size(); ++j) {
      const auto parsed = reduce(parse_ratfn(z.sets[i].generators[j], ctx.field()), ctx).normal_form;
      round_trip = round_trip && parsed == z.witness.window.normal_form(z.family.members[i].generators[j]);
    }
  }
  r.result = to_json(z, ctx);
  r.verifications["v_free"] = h.v_free;
  r.verifications["delta_in_kernel"] = h.delta_in_kernel;
  r.verifications["delta_outside_v"] = h.delta_outside_v;
  r.verifications["count_is_p_to_k"] = z.sets.size() == ipow(c.p, c.k);
  r.verifications["members_free"] = v.all_free;
  r.verifications["members_distinct"] = v.pairwise_distinct;
  r.verifications["generators_round_trip"] = round_trip;
  finish(r);
  return r;
}

Report cmd_pairing(const RunConfig& c) {
  Report r = new_report("pairing", c);
  const PairingReport pr = pairing_perfect_equivariant(c.p, c.n);
  r.result = to_json(pr);
  r.verifications["values_in_prime_field"] = pr.values_in_prime_field;
  r.verifications["root_choice_independent"] = pr.root_choice_independent;
  r.verifications["bilinear"] = pr.bilinear;
  r.verifications["perfect"] = pr.perfect();
  r.verifications["equivariant"] = pr.equivariant;
  finish(r);
  return r;
}

Report run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    if (config.command == "decompose") {
      r = cmd_decompose(config);
    } else if (config.command == "family") {
      r = cmd_family(config);
    } else if (config.command == "group-verify") {
      r = cmd_group_verify(config);
    } else if (config.command == "realize") {
      r = cmd_realize(config);
    } else if (config.command == "pairing") {
      r = cmd_pairing(config);
    } else {
      throw Error(ErrorKind::ParseError, "unknown command \"" + config.command + "\"");
    }
  } catch (const Error& e) {
    r = new_report(config.command, config);
    r.result = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.message()}}}};
    r.passed = false;
    r.exit_code = kInputError;
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace galmod::cli
