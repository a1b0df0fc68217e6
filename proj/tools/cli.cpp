#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "weyltrunc/affine.hpp"
#include "weyltrunc/errors.hpp"
#include "weyltrunc/kernels.hpp"
#include "weyltrunc/serialize.hpp"
#include "weyltrunc/truncate.hpp"

namespace weyltrunc::cli {

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Indented like dump(2), except that arrays of scalars stay on one line.
void write_json(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close(2 * static_cast<std::size_t>(depth), ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      os << pad << Json(k).dump() << ": ";
      write_json(os, v, depth + 1);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << close << "}";
  } else if (j.is_array() && !j.empty() && !std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); })) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write_json(os, j[i], depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close << "]";
  } else {
    os << j.dump();
  }
}

std::string dump(const Json& j) {
  std::ostringstream os;
  write_json(os, j, 0);
  os << "\n";
  return os.str();
}

std::string csv_weight(const Weight& x) {
  std::string out;
  for (std::size_t i = 0; i < x.rank(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out;
}

AffineContext make_context(const RootSystem& rs, std::int64_t p) { return AffineContext(rs, p); }

std::int64_t single_p(const RunConfig& cfg) {
  auto ps = parse_p_values(cfg.p_text, false);
  return ps.front();
}

std::int64_t single_m(const RunConfig& cfg, const char* command) {
  if (cfg.m.lo != cfg.m.hi) throw ConfigError(std::string(command) + " takes a single m, not a range");
  return cfg.m.lo;
}

void require_emit(const RunConfig& cfg, std::initializer_list<Emit> allowed, const char* command) {
  if (std::find(allowed.begin(), allowed.end(), cfg.emit) == allowed.end())
    throw ConfigError(std::string("--emit format not supported by ") + command);
}

void collect_warnings(Outcome& out, const std::vector<std::string>& w) {
  out.warnings.insert(out.warnings.end(), w.begin(), w.end());
}

Json header(const RootSystem& rs, std::optional<std::int64_t> p) {
  Json j;
  j["type"] = std::string(1, rs.spec().type_letter);
  j["rank"] = rs.rank();
  if (p) j["p"] = *p;
  return j;
}

Json weights_json(const WeightSet& s) {
  Json a = Json::array();
  for (const auto& x : s) a.push_back(to_json(x));
  return a;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const RootSystem& rs, const WeightSet& nodes,
                                                               const OrderKind& order, const Caps& caps) {
  if (nodes.size() > caps.max_hasse_nodes) {
    throw ResourceError("Hasse diagram of " + std::to_string(nodes.size()) + " nodes exceeds the cap of " +
                        std::to_string(caps.max_hasse_nodes));
  }
  auto leq = [&](std::size_t i, std::size_t j) { return order.leq(rs, nodes[i], nodes[j]); };
  return kernels::transitive_reduction(kernels::strict_relation(nodes.size(), leq));
}

OrderKind order_for(const RunConfig& cfg, const AffineContext& ctx, OrderTag fallback) {
  return OrderKind::from_tag(cfg.order.value_or(fallback), ctx, cfg.reading);
}

Outcome cmd_describe(const RunConfig& cfg) {
  require_emit(cfg, {Emit::Json}, "describe");
  auto rs = build_root_system(cfg.spec, {cfg.max_rank});
  Outcome out;
  collect_warnings(out, rs.warnings());
  out.output = dump(describe(rs));
  return out;
}

Outcome cmd_truncate(const RunConfig& cfg) {
  auto rs = build_root_system(cfg.spec, {cfg.max_rank});
  const auto p = single_p(cfg);
  const auto m = single_m(cfg, "truncate");
  const auto ctx = make_context(rs, p);
  Outcome out;
  collect_warnings(out, rs.warnings());
  collect_warnings(out, ctx.warnings());
  const auto pair = build_truncation_pair(ctx, m, cfg.caps);

  std::vector<std::pair<Weight, Weight>> partners;
  if (ctx.above_second_bound())
    for (const auto& nu : pair.lambda_py) partners.emplace_back(nu, bijection_forward(ctx, m, nu));

  switch (cfg.emit) {
    case Emit::Json: {
      auto j = header(rs, p);
      j["m"] = m;
      j["lambda"] = weights_json(pair.lambda);
      j["lambda_pY"] = weights_json(pair.lambda_py);
      j["gamma"] = weights_json(pair.gamma);
      if (ctx.above_second_bound()) {
        Json table = Json::array();
        for (const auto& [nu, g] : partners) table.push_back({{"nu", to_json(nu)}, {"gamma", to_json(g)}});
        j["pairing"] = table;
      } else {
        j["pairing"] = nullptr;
        j["pairing_note"] = "p <= 2h-2: no 1-1 correspondence is claimed";
      }
      out.output = dump(j);
      break;
    }
    case Emit::Csv: {
      std::ostringstream os;
      for (std::size_t i = 0; i < rs.rank(); ++i) os << "c" << i + 1 << ",";
      os << "in_pY,dominant,in_gamma";
      for (std::size_t i = 0; i < rs.rank(); ++i) os << ",partner_c" << i + 1;
      os << "\n";
      for (const auto& y : pair.lambda) {
        os << csv_weight(y) << "," << contains(pair.lambda_py, y) << "," << y.is_dominant() << ","
           << contains(pair.gamma, y);
        auto it = std::find_if(partners.begin(), partners.end(), [&](const auto& e) { return e.first == y; });
        if (it != partners.end()) {
          os << "," << csv_weight(it->second);
        } else {
          for (std::size_t i = 0; i < rs.rank(); ++i) os << ",";
        }
        os << "\n";
      }
      out.output = os.str();
      break;
    }
    case Emit::Dot: {
      const auto order = order_for(cfg, ctx, OrderTag::Excellent);
      out.output = hasse_dot("lambda_" + std::to_string(m), pair.lambda, hasse_covers(rs, pair.lambda, order, cfg.caps));
      break;
    }
  }
  return out;
}

Outcome cmd_verify(const RunConfig& cfg) {
  require_emit(cfg, {Emit::Json}, "verify");
  auto rs = build_root_system(cfg.spec, {cfg.max_rank});
  const auto p = single_p(cfg);
  const auto ctx = make_context(rs, p);
  Outcome out;
  collect_warnings(out, rs.warnings());
  collect_warnings(out, ctx.warnings());
  auto j = header(rs, p);
  j["h"] = ctx.h();
  j["second_bound_holds"] = ctx.above_second_bound();
  Json runs = Json::array();
  bool all = true;
  for (auto m = cfg.m.lo; m <= cfg.m.hi; ++m) {
    auto report = verify_full_suite(ctx, m, cfg.caps);
    if (cfg.strict) {
      for (auto& c : report.checks) c.asserted = true;
      report.passed = std::all_of(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.passed; });
    }
    all = all && report.passed;
    runs.push_back({{"m", m}, {"report", to_json(report, cfg.timing)}});
  }
  j["passed"] = all;
  j["runs"] = runs;
  out.output = dump(j);
  out.exit_code = all ? kExitOk : kExitFailed;
  return out;
}

Outcome cmd_poset(const RunConfig& cfg) {
  require_emit(cfg, {Emit::Json, Emit::Dot}, "poset");
  auto rs = build_root_system(cfg.spec, {cfg.max_rank});
  const auto p = single_p(cfg);
  const auto m = single_m(cfg, "poset");
  const auto ctx = make_context(rs, p);
  Outcome out;
  collect_warnings(out, rs.warnings());
  collect_warnings(out, ctx.warnings());

  WeightSet nodes;
  std::string name;
  OrderTag fallback = OrderTag::Excellent;
  switch (cfg.set) {
    case PosetSet::Lambda:
      nodes = lambda_set(ctx, m, cfg.caps);
      name = "lambda_";
      break;
    case PosetSet::LambdaPY:
      nodes = p_lattice_points(ctx, lambda_set(ctx, m, cfg.caps));
      name = "lambda_pY_";
      break;
    case PosetSet::Gamma:
      nodes = gamma_set(ctx, m, cfg.caps);
      name = "gamma_";
      fallback = OrderTag::Dominance;
      break;
  }
  name += std::to_string(m);
  const auto order = order_for(cfg, ctx, fallback);
  const auto covers = hasse_covers(rs, nodes, order, cfg.caps);
  if (cfg.emit == Emit::Dot) {
    out.output = hasse_dot(name, nodes, covers);
    return out;
  }
  auto j = header(rs, p);
  j["m"] = m;
  j["set"] = name.substr(0, name.rfind('_'));
  j["order"] = std::string(to_string(order.tag()));
  j["nodes"] = weights_json(nodes);
  Json edges = Json::array();
  for (const auto& [a, b] : covers) edges.push_back({a, b});
  j["covers"] = edges;
  out.output = dump(j);
  return out;
}

struct ExploreRow {
  std::int64_t p, m;
  bool in_window;
  VerificationReport suite;
};

const VerificationReport* find_check(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.check_id == id) return &c;
  return nullptr;
}

Outcome cmd_explore(const RunConfig& cfg) {
  require_emit(cfg, {Emit::Json, Emit::Csv}, "explore");
  auto rs = build_root_system(cfg.spec, {cfg.max_rank});
  const auto h = rs.coxeter_number();
  const bool ranged = cfg.p_text.find("..") != std::string::npos;
  Outcome out;
  collect_warnings(out, rs.warnings());

  std::vector<std::int64_t> window;
  for (auto q = h + 1; q <= 2 * h - 2; ++q)
    if (is_prime(q)) window.push_back(q);

  Json skipped = Json::array();
  std::vector<ExploreRow> rows;
  for (auto p : parse_p_values(cfg.p_text, true)) {
    std::string reason;
    if (p <= h) reason = "p <= h";
    else if (p <= 2 * h - 2 && !cfg.allow_small_p) reason = "p <= 2h-2 needs --allow-small-p";
    if (!reason.empty()) {
      if (!ranged) throw ConfigError("p = " + std::to_string(p) + ": " + reason + " (h = " + std::to_string(h) + ")");
      skipped.push_back({{"p", p}, {"reason", reason}});
      continue;
    }
    const auto ctx = make_context(rs, p);
    collect_warnings(out, ctx.warnings());
    for (auto m = cfg.m.lo; m <= cfg.m.hi; ++m)
      rows.push_back({p, m, p <= 2 * h - 2, verify_full_suite(ctx, m, cfg.caps)});
  }

  auto outcome = [](const ExploreRow& r, const char* id) {
    const auto* c = find_check(r.suite, id);
    return c != nullptr && c->passed;
  };
  const char* kColumns[] = {"hypothesis.gamma-to-lambda", "bijection", "cardinality"};

  if (cfg.emit == Emit::Csv) {
    std::ostringstream os;
    os << "p,m,in_window,lambda_pY,gamma";
    for (const auto* c : kColumns) os << "," << c;
    os << "\n";
    for (const auto& r : rows) {
      os << r.p << "," << r.m << "," << r.in_window << "," << r.suite.counts.at("lambda_pY") << ","
         << r.suite.counts.at("gamma");
      for (const auto* c : kColumns) os << "," << outcome(r, c);
      os << "\n";
    }
    out.output = os.str();
    return out;
  }

  auto j = header(rs, std::nullopt);
  j["h"] = h;
  j["second_bound"] = 2 * h - 2;
  j["boundary_window"] = window;
  if (window.empty()) j["boundary_note"] = "no prime p with h < p <= 2h-2: the boundary window is empty";
  Json table = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["p"] = r.p;
    row["m"] = r.m;
    row["in_window"] = r.in_window;
    row["lambda_pY"] = r.suite.counts.at("lambda_pY");
    row["gamma"] = r.suite.counts.at("gamma");
    for (const auto* c : kColumns) row[c] = outcome(r, c);
    row["other_checks_pass"] = std::all_of(r.suite.checks.begin(), r.suite.checks.end(), [&](const auto& c) {
      return c.passed || std::find(std::begin(kColumns), std::end(kColumns), c.check_id) != std::end(kColumns);
    });
    table.push_back(row);
  }
  j["runs"] = table;
  j["skipped"] = skipped;
  out.output = dump(j);
  return out;
}

}  // namespace

IntRange parse_int_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    auto v = parse_int(text);
    if (!v) throw ConfigError(what + " must be an integer or a range a..b, got '" + text + "'");
    r = {*v, *v};
  } else {
    auto a = parse_int(std::string_view(text).substr(0, dots));
    auto b = parse_int(std::string_view(text).substr(dots + 2));
    if (!a || !b) throw ConfigError(what + " range must be a..b with integers, got '" + text + "'");
    if (*a > *b) throw ConfigError(what + " range " + text + " is empty");
    r = {*a, *b};
  }
  if (r.lo < 1) throw ConfigError(what + " must be a positive integer");
  return r;
}

std::vector<std::int64_t> parse_p_values(const std::string& text, bool allow_list) {
  if (text.empty()) throw ConfigError("--p is required");
  std::vector<std::int64_t> out;
  if (text.find("..") != std::string::npos) {
    if (!allow_list) throw ConfigError("a range of p is only accepted by explore");
    auto r = parse_int_range(text, "p");
    for (auto q = r.lo; q <= r.hi; ++q)
      if (is_prime(q)) out.push_back(q);
    if (out.empty()) throw ConfigError("no prime in p range " + text);
    return out;
  }
  std::string_view rest = text;
  for (;;) {
    const auto comma = rest.find(',');
    auto v = parse_int(rest.substr(0, comma));
    if (!v) throw ConfigError("p must be an integer, got '" + text + "'");
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    if (!allow_list) throw ConfigError("a list of p is only accepted by explore");
    rest = rest.substr(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Emit parse_emit(const std::string& text) {
  if (text == "json") return Emit::Json;
  if (text == "dot") return Emit::Dot;
  if (text == "csv") return Emit::Csv;
  throw ConfigError("unknown --emit '" + text + "' (expected json, dot or csv)");
}

PosetSet parse_set(const std::string& text) {
  if (text == "lambda") return PosetSet::Lambda;
  if (text == "lambda-pY") return PosetSet::LambdaPY;
  if (text == "gamma") return PosetSet::Gamma;
  throw ConfigError("unknown --set '" + text + "' (expected lambda, lambda-pY or gamma)");
}

RootSystemSpec parse_type(const std::string& letter, int rank) {
  if (letter.size() != 1) throw ConfigError("invalid root system type/rank (" + letter + ", " + std::to_string(rank) + ")");
  return {static_cast<char>(std::toupper(static_cast<unsigned char>(letter[0]))), rank};
}

std::string hasse_dot(const std::string& name, const std::vector<Weight>& nodes,
                      const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) os << "  n" << i << " [label=\"" << nodes[i].to_string() << "\"];\n";
  for (const auto& [a, b] : covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

Outcome run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Describe: return cmd_describe(cfg);
    case Command::Truncate: return cmd_truncate(cfg);
    case Command::Verify: return cmd_verify(cfg);
    case Command::Poset: return cmd_poset(cfg);
    case Command::Explore: return cmd_explore(cfg);
  }
  throw ConfigError("unknown command");
}

}  // namespace weyltrunc::cli
