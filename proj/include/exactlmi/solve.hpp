#pragma once

// Feasibility driver: linear fast path, then incidence systems by increasing
// rank and row subset, solved, certified and deduplicated.

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "certify.hpp"
#include "incidence.hpp"
#include "reduce.hpp"

namespace exactlmi {

struct SolveOptions {
  bool all = false;
  bool rnk = false;
  bool par = false;
  bool deg = false;
  std::vector<std::size_t> ranks;  // empty means 0..m-1
  unsigned digits = 10;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
};

struct SolutionRecord {
  std::vector<Interval> box;
  std::optional<std::size_t> rank;
  std::optional<RUR> rur;
  std::optional<int> deg;
};

struct SolveReport {
  std::vector<SolutionRecord> solutions;
  std::uint64_t seed = 0;
  unsigned digits = 10;
  std::vector<std::size_t> ranks;
  std::vector<std::string> failures;  // per-(r, s) problems, skipped
};

/// Candidate points of one incidence system, each with its certificate.
struct SubsystemResult {
  std::size_t rank = 0;
  RowSubset subset;
  std::optional<RUR> rur;  // in original coordinates; absent if no complex solutions
  std::vector<std::pair<ParamPoint, Certificate>> certified;  // PSD points, by descending root
  std::string failure;
};

inline std::vector<std::size_t> normalize_ranks(const std::vector<std::size_t>& ranks, std::size_t m) {
  std::vector<std::size_t> r = ranks;
  if (r.empty())
    for (std::size_t k = 0; k < m; ++k) r.push_back(k);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  for (auto k : r)
    if (k >= m) throw std::out_of_range("rank " + std::to_string(k) + " outside [0, m-1]");
  return r;
}

/// Parametrization of the x-projection of the rank-r incidence variety for
/// subset s, reduced to finitely many points. Deterministic per seed.
inline std::optional<RUR> solve_incidence(const LinearPencil& P, const IncidenceSystem& S, std::uint64_t seed) {
  const std::size_t n = S.nx;
  ProjectionBasis pb = finite_projection_basis(S.equations, n);
  if (pb.empty) return std::nullopt;
  if (pb.finite) return rur_from_groebner(pb.basis, n, seed, pb.full_system ? &S.equations : nullptr);

  CoordinateChange cc = random_coordinate_change(derive_seed(seed, 1, 0), n);
  std::vector<MultiPolyQ> F = apply_coordinate_change(S.equations, n, cc);
  Reduction red = reduce_to_dimension_zero(F, n, derive_seed(seed, 2, 0));
  if (red.projection.empty) return std::nullopt;
  auto rur = rur_from_groebner(red.projection.basis, n, derive_seed(seed, 3, 0),
                               red.projection.full_system ? &red.equations : nullptr);
  if (!rur) return std::nullopt;
  RUR back = transform_coordinates(*rur, cc.Minv);
  // Points of rank at most r < m make det A vanish.
  const MultiPolyQ& det = P.char_poly_coeffs()(P.m());
  if (!rur_residual_ok(back, {det})) throw RurError("pulled-back parametrization failed the residual test");
  return back;
}

inline SubsystemResult solve_subsystem(const LinearPencil& P, std::size_t r, const RowSubset& s, std::uint64_t seed,
                                       bool all_points) {
  SubsystemResult out;
  out.rank = r;
  out.subset = s;
  try {
    IncidenceSystem S = build_incidence_system(P, r, s);
    out.rur = solve_incidence(P, S, seed);
    if (!out.rur) return out;
    auto pts = real_points(*out.rur);
    const CharPolyCoeffs& C = P.char_poly_coeffs();
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
      Certificate cert = certify_point(C, *it);
      if (!cert.psd) continue;
      out.certified.emplace_back(*it, cert);
      if (!all_points) break;
    }
  } catch (const std::exception& e) {
    out.failure = "rank " + std::to_string(r) + " subset " + s.to_string() + ": " + e.what();
    out.certified.clear();
  }
  return out;
}

inline std::uint64_t draw_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

namespace detail {

struct PointKey {
  std::vector<RealAlgebraic> coords;
};

inline bool same_point(const PointKey& a, const PointKey& b) {
  if (a.coords.size() != b.coords.size()) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (!equal(a.coords[i], b.coords[i])) return false;
  return true;
}

}  // namespace detail

inline SolveReport solve_lmi(const LinearPencil& P, const SolveOptions& opts) {
  SolveReport rep;
  rep.seed = opts.seed ? *opts.seed : draw_seed();
  rep.digits = opts.digits;
  rep.ranks = normalize_ranks(opts.ranks, P.m());
  const std::size_t n = P.n();

  auto finish = [&](SolutionRecord rec, const std::optional<RUR>& rur, std::size_t cert_rank) {
    if (opts.rnk) rec.rank = cert_rank;
    if (opts.par && rur) rec.rur = *rur;
    if (opts.deg) rec.deg = rur ? rur->degree() : 1;
    rep.solutions.push_back(std::move(rec));
  };

  std::vector<std::size_t> ranks = rep.ranks;
  if (!ranks.empty() && ranks.front() == 0) {
    ranks.erase(ranks.begin());
    if (auto x = P.solve_linear_zero()) {
      SolutionRecord rec;
      for (const auto& v : *x) rec.box.push_back({v, v});
      RUR rur;
      rur.q = UniPolyZ{Integer(0), Integer(1)};
      rur.q0 = UniPolyZ{Integer(1)};
      RationalVector vals = *x;
      std::vector<UniPolyQ> coords;
      for (const auto& v : vals) coords.push_back(UniPolyQ::constant(v));
      detail::clear_parametrization(UniPolyQ::constant(1), coords, rur);
      rur.form.assign(n, Rational(0));
      finish(std::move(rec), rur, 0);
      return rep;
    }
  }

  struct Task {
    std::size_t r;
    std::size_t index;
    RowSubset subset;
  };
  std::vector<Task> tasks;
  for (auto r : ranks) {
    auto subsets = enumerate_normalizations(P.m(), r);
    for (std::size_t i = 0; i < subsets.size(); ++i) tasks.push_back({r, i, subsets[i]});
  }
  std::vector<std::optional<SubsystemResult>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{tasks.size()};
  P.char_poly_coeffs();
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      if (!opts.all && k > first_hit.load()) continue;
      const Task& t = tasks[k];
      SubsystemResult res = solve_subsystem(P, t.r, t.subset, derive_seed(rep.seed, t.r, t.index), opts.all);
      if (!res.certified.empty() && !opts.all) {
        std::size_t cur = first_hit.load();
        while (k < cur && !first_hit.compare_exchange_weak(cur, k)) {
        }
      }
      results[k] = std::move(res);
    }
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<detail::PointKey> seen;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (!opts.all && k > first_hit.load()) break;
    if (!results[k]) continue;
    SubsystemResult& res = *results[k];
    if (!res.failure.empty()) rep.failures.push_back(res.failure);
    for (auto& [pt, cert] : res.certified) {
      detail::PointKey key;
      for (std::size_t i = 0; i < n; ++i) key.coords.push_back(coordinate(pt, i));
      bool dup = false;
      for (const auto& s : seen)
        if (detail::same_point(s, key)) dup = true;
      if (dup) continue;
      SolutionRecord rec;
      for (auto& c : key.coords) {
        refine_to_digits(c, opts.digits);
        rec.box.push_back(c.I);
      }
      seen.push_back(std::move(key));
      finish(std::move(rec), res.rur, cert.rank);
      if (!opts.all) return rep;
    }
  }
  return rep;
}

/// Records from the rank-r incidence systems only.
inline SolveReport solve_rank_restricted(const LinearPencil& P, std::size_t r, SolveOptions opts) {
  opts.ranks = {r};
  return solve_lmi(P, opts);
}

}  // namespace exactlmi
