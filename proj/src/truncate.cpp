#include "weyltrunc/truncate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iterator>
#include <limits>

#include "weyltrunc/errors.hpp"
#include "weyltrunc/kernels.hpp"
#include "weyltrunc/weyl.hpp"

namespace weyltrunc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::int64_t bound_for(const AffineContext& ctx, std::int64_t m) {
  if (m < 1) throw PreconditionError("m must be a positive integer, got " + std::to_string(m));
  return checked::mul(m, ctx.p());
}

std::int64_t max_abs_pairing(const RootSystem& rs, const Weight& y) {
  std::int64_t best = 0;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) best = std::max(best, std::abs(rs.pairing(y, k)));
  return best;
}

WeightSet difference(const WeightSet& a, const WeightSet& b) {
  WeightSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Weight divide_exact(const Weight& x, std::int64_t p) {
  Weight q(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i) q[i] = x[i] / p;
  return q;
}

void require_second_bound(const AffineContext& ctx) {
  if (!ctx.above_second_bound()) {
    throw PreconditionError("the 1-1 correspondence needs p > 2h-2; p = " + std::to_string(ctx.p()) +
                            ", h = " + std::to_string(ctx.h()));
  }
}

BackwardImage backward_impl(const AffineContext& ctx, std::int64_t m, const Weight& gamma) {
  const auto& rs = ctx.root_system();
  const auto hits = p_lattice_dot_hits(ctx, gamma);
  if (hits.size() != 1) {
    throw InvariantViolation("expected exactly one w with w.gamma in pY for gamma = " + gamma.to_string() +
                             ", found " + std::to_string(hits.size()));
  }
  BackwardImage out;
  out.nu = dot(ctx, hits.front(), gamma);
  out.w = inverse(rs, hits.front());
  const Weight wy = apply(rs, out.w, divide_exact(out.nu, ctx.p()));
  if (!wy.is_dominant()) throw InvariantViolation("w(y) is not dominant for gamma = " + gamma.to_string());
  out.lhs = checked::mul(ctx.p(), rs.pairing_alpha0(wy));
  // w(nu) = w.nu + rho - w(rho) = gamma + rho - w(rho)
  const auto split = rs.pairing_alpha0(gamma) + rs.pairing_alpha0(rs.rho() - rho_image(rs, out.w));
  out.middle = checked::add(checked::mul(m, ctx.p()), 2 * ctx.h() - 2);
  out.right = checked::mul(m + 1, ctx.p());
  if (split != out.lhs) throw InvariantViolation("p<wy, alpha0^v> does not split as <w.nu + rho - w rho, alpha0^v>");
  if (!(out.lhs <= out.middle && out.middle < out.right)) {
    throw InvariantViolation("bound p<wy,alpha0^v> = " + std::to_string(out.lhs) + " <= mp+2h-2 = " +
                             std::to_string(out.middle) + " < (m+1)p = " + std::to_string(out.right) +
                             " fails for gamma = " + gamma.to_string());
  }
  return out;
}

VerificationReport make_report(std::string id, CounterexampleCollector&& cx, Clock::time_point start) {
  VerificationReport r;
  r.check_id = std::move(id);
  r.counts["violations"] = static_cast<std::int64_t>(cx.total());
  r.counterexamples = cx.take();
  r.passed = r.counterexamples.empty();
  r.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace

bool in_lambda(const AffineContext& ctx, std::int64_t m, const Weight& y) {
  const auto bound = bound_for(ctx, m);
  const auto& rs = ctx.root_system();
  for (std::size_t i = 0; i < y.rank(); ++i)
    if (std::abs(y[i]) > bound) return false;
  return max_abs_pairing(rs, y) <= bound && in_root_lattice(rs, y);
}

bool in_gamma(const AffineContext& ctx, std::int64_t m, const Weight& y) {
  const auto bound = bound_for(ctx, m);
  if (!y.is_dominant()) return false;
  return max_abs_pairing(ctx.root_system(), y) <= bound && in_principal_orbit(ctx, y);
}

WeightSet lambda_set(const AffineContext& ctx, std::int64_t m, const Caps& caps) {
  const auto bound = bound_for(ctx, m);
  return kernels::scan_box(
      ctx.root_system().rank(), -bound, bound, [&](const Weight& y) { return in_lambda(ctx, m, y); },
      caps.max_box_volume);
}

WeightSet gamma_set(const AffineContext& ctx, std::int64_t m, const Caps& caps) {
  const auto bound = bound_for(ctx, m);
  return kernels::scan_box(
      ctx.root_system().rank(), 0, bound, [&](const Weight& y) { return in_gamma(ctx, m, y); }, caps.max_box_volume);
}

WeightSet gamma_from_lambda(const AffineContext& ctx, const WeightSet& lambda, std::int64_t m) {
  bound_for(ctx, m);
  const auto& rs = ctx.root_system();
  // y = w.0 + pz with |y_i| <= mp forces |z_i| <= m since |(rho - w rho)_i| <= h < p.
  const auto zbound = m + 1;
  const auto translations = kernels::serial::scan_box(
      rs.rank(), -zbound, zbound, [&](const Weight& z) { return in_root_lattice(rs, z); },
      std::numeric_limits<std::uint64_t>::max());
  std::vector<Weight> out;
  for (const auto& v : ctx.rho_orbit()) {
    const Weight base = v - rs.rho();
    for (const auto& z : translations) {
      Weight y = base + ctx.p() * z;
      if (y.is_dominant() && contains(lambda, y)) out.push_back(y);
    }
  }
  return make_weight_set(std::move(out));
}

WeightSet p_lattice_points(const AffineContext& ctx, const WeightSet& set) {
  WeightSet out;
  std::copy_if(set.begin(), set.end(), std::back_inserter(out),
               [&](const Weight& y) { return in_p_root_lattice(ctx, y); });
  return out;
}

TruncationPair build_truncation_pair(const AffineContext& ctx, std::int64_t m, const Caps& caps) {
  TruncationPair t;
  t.m = m;
  t.lambda = lambda_set(ctx, m, caps);
  t.lambda_py = p_lattice_points(ctx, t.lambda);
  t.gamma = gamma_set(ctx, m, caps);
  return t;
}

Universe lambda_universe(const AffineContext& ctx, std::int64_t m, const Caps& caps) {
  const auto bound = bound_for(ctx, m + 1);
  const auto& rs = ctx.root_system();
  return {"root-lattice points with |coords| <= (m+1)p = " + std::to_string(bound),
          kernels::scan_box(
              rs.rank(), -bound, bound, [&](const Weight& y) { return in_root_lattice(rs, y); },
              caps.max_box_volume)};
}

Universe gamma_universe(const AffineContext& ctx, std::int64_t m, const Caps& caps) {
  const auto bound = bound_for(ctx, m + 1);
  return {"dominant members of W_p.0 with coords <= (m+1)p = " + std::to_string(bound),
          kernels::scan_box(
              ctx.root_system().rank(), 0, bound, [&](const Weight& y) { return in_principal_orbit(ctx, y); },
              caps.max_box_volume)};
}

namespace {

VerificationReport finish_ideal_report(std::string id, const WeightSet& set, const OrderKind& order,
                                       const Universe& universe, std::size_t outside, CounterexampleCollector&& cx,
                                       Clock::time_point start) {
  auto r = make_report(std::move(id), std::move(cx), start);
  r.counts["set"] = static_cast<std::int64_t>(set.size());
  r.counts["universe"] = static_cast<std::int64_t>(universe.points.size());
  r.counts["outside"] = static_cast<std::int64_t>(outside);
  r.note = "order " + std::string(to_string(order.tag())) + " against " + universe.description;
  return r;
}

}  // namespace

VerificationReport verify_ideal(const RootSystem& rs, const WeightSet& set, const OrderKind& order,
                                const Universe& universe, const Caps& caps, std::string check_id) {
  const auto start = Clock::now();
  const auto outside = difference(universe.points, set);
  const bool factored = (order.tag() == OrderTag::Excellent || order.tag() == OrderTag::AntipodalExcellent) &&
                        order.reading() == ExcellentReading::SameOrbit;
  auto cx = factored ? kernels::excellent_violations(rs, outside, set, order.tag() == OrderTag::AntipodalExcellent,
                                                     caps.max_counterexamples)
                     : kernels::pairwise_violations(
                           outside, set, [&](const Weight& x, const Weight& xp) { return order.leq(rs, x, xp); },
                           caps.max_counterexamples);
  return finish_ideal_report(std::move(check_id), set, order, universe, outside.size(), std::move(cx), start);
}

VerificationReport serial::verify_ideal(const RootSystem& rs, const WeightSet& set, const OrderKind& order,
                                        const Universe& universe, const Caps& caps, std::string check_id) {
  const auto start = Clock::now();
  CounterexampleCollector cx(caps.max_counterexamples);
  std::size_t outside = 0;
  for (const auto& x : universe.points) {
    if (contains(set, x)) continue;
    ++outside;
    for (const auto& xp : set)
      if (order.leq(rs, x, xp)) cx.add({x, xp});
  }
  return finish_ideal_report(std::move(check_id), set, order, universe, outside, std::move(cx), start);
}

HypothesesReport verify_hypotheses(const AffineContext& ctx, const WeightSet& lambda, const WeightSet& gamma,
                                   const Caps& caps) {
  const auto& group = enumerate_group(ctx.root_system(), caps.max_group_order);
  HypothesesReport out;

  auto start = Clock::now();
  CounterexampleCollector c1(caps.max_counterexamples);
  std::int64_t images1 = 0;
  const auto lambda_py = p_lattice_points(ctx, lambda);
  for (const auto& nu : lambda_py) {
    for (const auto& w : group) {
      auto g = dot(ctx, w, nu);
      if (!g.is_dominant()) continue;
      ++images1;
      if (!contains(gamma, g)) c1.add({nu, g});
    }
  }
  out.h1 = make_report("hypothesis.lambda-to-gamma", std::move(c1), start);
  out.h1.counts["lambda_pY"] = static_cast<std::int64_t>(lambda_py.size());
  out.h1.counts["dominant_images"] = images1;
  out.h1.note = "W.(Lambda ∩ pY) ∩ X+ ⊆ Gamma";

  start = Clock::now();
  CounterexampleCollector c2(caps.max_counterexamples);
  std::int64_t images2 = 0;
  for (const auto& g : gamma) {
    for (const auto& w : group) {
      auto nu = dot(ctx, w, g);
      if (!in_p_root_lattice(ctx, nu)) continue;
      ++images2;
      if (!contains(lambda, nu)) c2.add({g, nu});
    }
  }
  out.h2 = make_report("hypothesis.gamma-to-lambda", std::move(c2), start);
  out.h2.counts["gamma"] = static_cast<std::int64_t>(gamma.size());
  out.h2.counts["pY_images"] = images2;
  out.h2.note = "W.Gamma ∩ pY ⊆ Lambda";
  return out;
}

std::vector<WeylElement> p_lattice_dot_hits(const AffineContext& ctx, const Weight& gamma) {
  std::vector<WeylElement> hits;
  for (const auto& w : enumerate_group(ctx.root_system()))
    if (in_p_root_lattice(ctx, dot(ctx, w, gamma))) hits.push_back(w);
  return hits;
}

Weight bijection_forward(const AffineContext& ctx, std::int64_t m, const Weight& nu) {
  require_second_bound(ctx);
  if (!in_lambda(ctx, m, nu) || !in_p_root_lattice(ctx, nu))
    throw PreconditionError("weight " + nu.to_string() + " is not in Lambda_m ∩ pY");
  return dominant_dot_rep(ctx, nu).weight;
}

BackwardImage bijection_backward_detail(const AffineContext& ctx, std::int64_t m, const Weight& gamma) {
  require_second_bound(ctx);
  if (!in_gamma(ctx, m, gamma)) throw PreconditionError("weight " + gamma.to_string() + " is not in Gamma_m");
  return backward_impl(ctx, m, gamma);
}

VerificationReport verify_full_suite(const AffineContext& ctx, std::int64_t m, const Caps& caps) {
  const auto& rs = ctx.root_system();
  const auto bound = bound_for(ctx, m);
  const bool strong = ctx.above_second_bound();
  const auto limit = caps.max_counterexamples;
  enumerate_group(rs, caps.max_group_order);
  std::vector<VerificationReport> checks;

  const auto lambda = lambda_set(ctx, m, caps);
  const auto lambda_py = p_lattice_points(ctx, lambda);
  const auto gamma = gamma_set(ctx, m, caps);
  const auto lam_univ = lambda_universe(ctx, m, caps);
  const auto gam_univ = gamma_universe(ctx, m, caps);

  checks.push_back(verify_ideal(rs, lambda, OrderKind::excellent(), lam_univ, caps, "lambda.ideal.excellent"));
  checks.push_back(
      verify_ideal(rs, lambda, OrderKind::antipodal_excellent(), lam_univ, caps, "lambda.ideal.antipodal-excellent"));

  {
    auto start = Clock::now();
    CounterexampleCollector cx(limit);
    for (const auto& y : lambda)
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        auto s = rs.simple_reflection(i, y);
        if (!contains(lambda, s)) cx.add({y, s});
      }
    checks.push_back(make_report("lambda.w-stable", std::move(cx), start));
  }
  {
    auto start = Clock::now();
    CounterexampleCollector cx(limit);
    for (const auto& y : lam_univ.points) {
      const auto top = dominant_weight(rs, y);
      const bool a = contains(lambda, y);
      const bool b = contains(lambda, top);
      const bool c = rs.pairing_alpha0(top) <= bound;
      if (a != b || b != c) cx.add({y, top});
    }
    auto r = make_report("lambda.alpha0-test", std::move(cx), start);
    r.note = "y ∈ Lambda_m iff y+ ∈ Lambda_m iff <y+, alpha0^v> <= mp";
    checks.push_back(std::move(r));
  }

  checks.push_back(verify_ideal(rs, gamma, OrderKind::dominance(), gam_univ, caps, "gamma.ideal.dominance"));
  {
    auto start = Clock::now();
    const auto other = gamma_from_lambda(ctx, lambda, m);
    CounterexampleCollector cx(limit);
    for (const auto& g : difference(gamma, other)) cx.add({g});
    for (const auto& g : difference(other, gamma)) cx.add({g});
    auto r = make_report("gamma.orbit-generation", std::move(cx), start);
    r.counts["direct"] = static_cast<std::int64_t>(gamma.size());
    r.counts["via_lambda"] = static_cast<std::int64_t>(other.size());
    checks.push_back(std::move(r));
  }

  {
    auto start = Clock::now();
    CounterexampleCollector cx(limit);
    for (const auto& nu : lambda_py) {
      try {
        dominant_dot_rep(ctx, nu);
      } catch (const InvariantViolation&) {
        cx.add({nu});
      }
    }
    auto r = make_report("lattice.dot-representative", std::move(cx), start);
    r.counts["lambda_pY"] = static_cast<std::int64_t>(lambda_py.size());
    checks.push_back(std::move(r));
  }

  auto hyp = verify_hypotheses(ctx, lambda, gamma, caps);
  checks.push_back(std::move(hyp.h1));
  hyp.h2.asserted = strong;
  checks.push_back(std::move(hyp.h2));

  {
    auto start = Clock::now();
    CounterexampleCollector cx(limit);
    std::vector<Weight> image;
    for (const auto& nu : lambda_py) {
      try {
        const auto g = dominant_dot_rep(ctx, nu).weight;
        image.push_back(g);
        if (!contains(gamma, g) || backward_impl(ctx, m, g).nu != nu) cx.add({nu, g});
      } catch (const InvariantViolation&) {
        cx.add({nu});
      }
    }
    for (const auto& g : gamma) {
      try {
        const auto nu = backward_impl(ctx, m, g).nu;
        if (!contains(lambda_py, nu) || dominant_dot_rep(ctx, nu).weight != g) cx.add({g, nu});
      } catch (const InvariantViolation&) {
        cx.add({g});
      }
    }
    auto r = make_report("bijection", std::move(cx), start);
    r.asserted = strong;
    r.note = "forward/backward roundtrips; p<wy,alpha0^v> <= mp+2h-2 < (m+1)p at every backward step";
    checks.push_back(std::move(r));

    start = Clock::now();
    CounterexampleCollector card(limit);
    const auto image_set = make_weight_set(image);
    if (lambda_py.size() != gamma.size()) {
      for (const auto& g : difference(gamma, image_set)) card.add({g});
      for (const auto& g : difference(image_set, gamma)) card.add({g});
      if (card.total() == 0) card.add({});  // non-injective forward map
    }
    auto rc = make_report("cardinality", std::move(card), start);
    rc.asserted = strong;
    rc.counts["lambda_pY"] = static_cast<std::int64_t>(lambda_py.size());
    rc.counts["gamma"] = static_cast<std::int64_t>(gamma.size());
    checks.push_back(std::move(rc));
  }

  {
    auto start = Clock::now();
    CounterexampleCollector cx(limit);
    for (const auto& y : lambda)
      if (!in_lambda(ctx, m + 1, y)) cx.add({y});
    for (const auto& g : gamma)
      if (!in_gamma(ctx, m + 1, g)) cx.add({g});
    auto r = make_report("nesting", std::move(cx), start);
    r.note = "Lambda_m ⊆ Lambda_{m+1}, Gamma_m ⊆ Gamma_{m+1}";
    checks.push_back(std::move(r));
  }
  {
    auto start = Clock::now();
    CounterexampleCollector cx(limit);
    const auto level_cap = (m + 1) * (ctx.h() - 1);
    std::int64_t max_level = 0;
    auto level_of = [&](const Weight& y) { return std::max<std::int64_t>(1, (max_abs_pairing(rs, y) + ctx.p() - 1) / ctx.p()); };
    for (const auto& y : lam_univ.points) {
      const auto k = level_of(y);
      max_level = std::max(max_level, k);
      if (k > level_cap || !in_lambda(ctx, k, y) || (k > 1 && in_lambda(ctx, k - 1, y))) cx.add({y});
    }
    for (const auto& g : gam_univ.points) {
      const auto k = level_of(g);
      if (k > level_cap || !in_gamma(ctx, k, g)) cx.add({g});
    }
    auto r = make_report("exhaustion", std::move(cx), start);
    r.counts["max_level"] = max_level;
    r.note = "every point of the (m+1)p test boxes lies in some Lambda_k / Gamma_k";
    checks.push_back(std::move(r));
  }

  auto suite = aggregate("suite", std::move(checks), limit);
  suite.counts["lambda"] = static_cast<std::int64_t>(lambda.size());
  suite.counts["lambda_pY"] = static_cast<std::int64_t>(lambda_py.size());
  suite.counts["gamma"] = static_cast<std::int64_t>(gamma.size());
  suite.counts["lambda_universe"] = static_cast<std::int64_t>(lam_univ.points.size());
  suite.counts["gamma_universe"] = static_cast<std::int64_t>(gam_univ.points.size());
  suite.note = rs.spec().name() + " p=" + std::to_string(ctx.p()) + " m=" + std::to_string(m) +
               (strong ? "" : "; p <= 2h-2, so gamma-to-lambda, bijection and cardinality are informational");
  return suite;
}

}  // namespace weyltrunc
