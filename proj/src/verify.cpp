#include "lowlying/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lowlying/binary_word.hpp"
#include "lowlying/counting.hpp"
#include "lowlying/enumerate.hpp"
#include "lowlying/geometry.hpp"

namespace lowlying {
namespace {

/// Prefix marking a passing check's detail as a measurement rather than a witness.
constexpr std::string_view kMeasured = "measured:";

/// Collects results for one suite. A check body returns an empty string on
/// success or a witness description on failure.
class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  void check(std::string name, const std::function<std::string()>& body) {
    CheckResult r{suite_, std::move(name), false, {}};
    try {
      r.detail = body();
      r.passed = r.detail.empty() || r.detail.starts_with(kMeasured);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

std::string fail(const std::string& what) { return what; }

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

template <class Fn>
std::string for_all_words(int t_max, Fn fn) {
  for (int t = 1; t <= t_max; ++t) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
      if (auto why = fn(BinaryWord(bits, t)); !why.empty()) return why;
    }
  }
  return {};
}

template <class Fn>
std::string for_all_half_turn(int t_max, Fn fn) {
  for (int t = 1; t <= t_max; ++t) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
      if (auto why = fn(HalfTurnWord::from_first_half(BinaryWord(bits, t))); !why.empty()) return why;
    }
  }
  return {};
}

void binwords_suite(Recorder& rec, const VerifyOptions& opt) {
  const int cap12 = std::min(opt.tmax, 12);
  const int cap10 = std::min(opt.tmax, 10);

  rec.check("rotation-group-action", [&] {
    return for_all_words(std::min(cap12, 8), [](const BinaryWord& w) -> std::string {
      const BinaryWord canon = canonical_form(w);
      for (int i = 0; i < w.length(); ++i) {
        if (canonical_form(rotate(w, i)) != canon) return fail("canonical_form not rotation invariant at " + w.to_string());
        for (int j = 0; j < w.length(); ++j) {
          if (rotate(rotate(w, i), j) != rotate(w, i + j)) return fail("rotate composition fails at " + w.to_string());
        }
      }
      return {};
    });
  });

  rec.check("orbit-size-equals-period", [&] {
    return for_all_words(cap12, [](const BinaryWord& w) -> std::string {
      std::set<std::uint64_t> orbit;
      for (int k = 0; k < w.length(); ++k) orbit.insert(rotate(w, k).bits());
      const auto root = primitive_root(w);
      if (static_cast<int>(orbit.size()) != w.length() / root.exponent) return fail(w.to_string());
      if (root.root.repeated(root.exponent) != w || !is_primitive(root.root)) return fail(w.to_string());
      return {};
    });
  });

  rec.check("max-run-rotation-invariant", [&] {
    return for_all_words(cap12, [](const BinaryWord& w) -> std::string {
      const int run = max_cyclic_run(w);
      for (int k = 1; k < w.length(); ++k) {
        if (max_cyclic_run(rotate(w, k)) != run) return fail(w.to_string());
      }
      return {};
    });
  });

  rec.check("half-turn-closure", [&] {
    return for_all_half_turn(cap12, [](const HalfTurnWord& h) -> std::string {
      if (!HalfTurnWord::satisfies(rotate(h.word(), h.half_length()))) return fail(h.word().to_string());
      return {};
    });
  });

  rec.check("orbit-meets-half-turn-set-twice", [&] {
    return for_all_half_turn(cap12, [](const HalfTurnWord& h) -> std::string {
      std::set<std::uint64_t> hits;
      for (int k = 0; k < h.word().length(); ++k) {
        const BinaryWord r = rotate(h.word(), k);
        if (HalfTurnWord::satisfies(r)) hits.insert(r.bits());
      }
      const auto pair = half_turn_partner(h);
      if (hits.size() != 2 || !hits.contains(pair.partner.word().bits()) || pair.partner == h) {
        return fail(h.word().to_string() + " meets Y in " + std::to_string(hits.size()) + " points");
      }
      return {};
    });
  });

  rec.check("primitive-iff-k0-equals-t", [&] {
    return for_all_half_turn(cap10, [](const HalfTurnWord& h) -> std::string {
      if (is_primitive(h.word()) != (h.k0() == h.half_length())) return fail(h.word().to_string());
      return {};
    });
  });

  rec.check("runs-map-two-to-one", [&]() -> std::string {
    for (int t = 1; t <= cap12; ++t) {
      std::map<Composition, int> preimages;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) ++preimages[runs_of(BinaryWord(bits, t))];
      if (BigInt(preimages.size()) != pow2(static_cast<unsigned>(t - 1))) return fail("t=" + std::to_string(t));
      for (const auto& [c, n] : preimages) {
        if (n != 2) return fail(c.to_string() + " has " + std::to_string(n) + " preimages");
        if (runs_of(from_composition(c, 1)) != c || runs_of(from_composition(c, -1)) != c) return fail(c.to_string());
      }
    }
    return {};
  });
}

void counting_suite(Recorder& rec, const VerifyOptions&) {
  rec.check("burnside-integrality", []() -> std::string {
    for (int tau = 1; tau <= 200; ++tau) {
      BigInt sum = 0;
      for (int j = 1; j <= tau; ++j) sum += pow2(static_cast<unsigned>(std::gcd(j, tau)));
      if (sum % tau != 0) return fail("tau=" + std::to_string(tau));
    }
    return {};
  });

  rec.check("divisor-recursion-equals-mobius", []() -> std::string {
    for (int tau = 1; tau <= 64; ++tau) {
      if (primitive_class_count(tau) != mobius_primitive_count(tau)) return fail("tau=" + std::to_string(tau));
    }
    return {};
  });

  rec.check("nonprimitive-bounds", []() -> std::string {
    for (int n = 1; n <= 40; ++n) {
      // |W^np| <= (1/2) n 2^{n/2}  <=>  4 np^2 <= n^2 2^n, exactly.
      const BigInt w_np = necklace_count(n) - primitive_class_count(n);
      if (4 * w_np * w_np > BigInt(n) * n * pow2(static_cast<unsigned>(n))) return fail("W tau=" + std::to_string(n));
      const BigInt r_np = reciprocal_count(n, false) - reciprocal_count(n, true);
      if (16 * r_np * r_np > BigInt(n) * n * pow2(static_cast<unsigned>(n))) return fail("R t=" + std::to_string(n));
    }
    return {};
  });

  rec.check("recursion-equals-closed-form", []() -> std::string {
    for (int m = 2; m <= 10; ++m) {
      for (int t = 1; t <= 40; ++t) {
        if (bounded_compositions(t, m) != closed_form_compositions(t, m)) {
          return fail("t=" + std::to_string(t) + " m=" + std::to_string(m));
        }
      }
    }
    return {};
  });

  rec.check("unbounded-parts-degeneration", []() -> std::string {
    for (int t = 1; t <= 40; ++t) {
      for (int m = t; m <= t + 3; ++m) {
        if (bounded_compositions(t, m) != pow2(static_cast<unsigned>(t - 1))) return fail("t=" + std::to_string(t));
      }
    }
    return {};
  });

  rec.check("alpha-root-properties", []() -> std::string {
    HighPrecision previous = 0;
    for (int m = 2; m <= 40; ++m) {
      const AlphaData a = alpha(m);
      const HighPrecision floor_bound = 2 * (1 - pow(HighPrecision(2), -m));
      if (abs(a.residual) > 1e-12) return fail("residual m=" + std::to_string(m));
      if (a.alpha < floor_bound || a.alpha >= 2) return fail("bracket m=" + std::to_string(m));
      if (a.alpha <= previous) return fail("not increasing at m=" + std::to_string(m));
      if (a.d <= 0) return fail("d <= 0 at m=" + std::to_string(m));
      previous = a.alpha;
    }
    if (alpha(40).alpha <= 2 - HighPrecision(1e-11)) return fail("alpha(40) not within 1e-11 of 2");
    return {};
  });

  rec.check("ratio-convergence", []() -> std::string {
    double last_all = 1e300;
    double last_prim = 1e300;
    std::ostringstream measured;
    measured << kMeasured;
    for (int tau : {10, 18, 26}) {
      const double all = static_cast<double>(cumulative(Family::classes, tau, {true, std::nullopt})) / growth_target(3, tau);
      const double prim = static_cast<double>(primitive_class_count(tau)) / static_cast<double>(necklace_count(tau));
      if (std::abs(all - 1) >= last_all || std::abs(prim - 1) >= last_prim) {
        return fail("ratio moved away from 1 at tau=" + std::to_string(tau));
      }
      last_all = std::abs(all - 1);
      last_prim = std::abs(prim - 1);
      measured << " tau=" << tau << " cumulative/target=" << all << " primitive/all=" << prim;
    }
    return measured.str();
  });
}

void enumerate_suite(Recorder& rec, const VerifyOptions& opt) {
  const int ceiling = std::min(opt.tmax, opt.oracle_max);
  const int cap12 = std::min(ceiling, 12);

  rec.check("class-count-equals-burnside", [&]() -> std::string {
    for (int tau = 1; tau <= ceiling; ++tau) {
      if (BigInt(count_classes(tau, ClassFilter::all(), opt.threads)) != necklace_count(tau)) {
        return fail("tau=" + std::to_string(tau));
      }
      if (BigInt(count_classes(tau, ClassFilter::primitive(), opt.threads)) != primitive_class_count(tau)) {
        return fail("primitive tau=" + std::to_string(tau));
      }
    }
    return {};
  });

  rec.check("reciprocal-count", [&]() -> std::string {
    BigInt running = 0;
    for (int t = 1; t <= ceiling; ++t) {
      const BigInt n(count_reciprocal_classes(t, std::nullopt, false, opt.threads));
      running += n;
      if (n != reciprocal_count(t, false)) return fail("t=" + std::to_string(t));
      if (running != cumulative(Family::reciprocal, t)) return fail("cumulative t=" + std::to_string(t));
      if (BigInt(count_reciprocal_classes(t, std::nullopt, true, opt.threads)) != reciprocal_count(t, true)) {
        return fail("primitive t=" + std::to_string(t));
      }
    }
    return {};
  });

  rec.check("reciprocal-pairing", [&]() -> std::string {
    for (int t = 1; t <= cap12; ++t) {
      std::map<std::uint64_t, int> representatives;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
        const HalfTurnWord h = HalfTurnWord::from_first_half(BinaryWord(bits, t));
        ++representatives[std::min(h, half_turn_partner(h).partner).word().bits()];
      }
      for (const auto& [rep, n] : representatives) {
        if (n != 2) return fail("class of " + BinaryWord(rep, 2 * t).to_string() + " has " + std::to_string(n) + " normal forms");
      }
    }
    return {};
  });

  rec.check("phi-bijection", [&]() -> std::string {
    for (int t = 1; t <= cap12; ++t) {
      for (int m = 1; m <= t; ++m) {
        const auto reps = reciprocal_classes(t, m);
        const auto comps = composition_list(t, m);
        if (BigInt(reps.size()) != bounded_compositions(t, m) || reps.size() != comps.size()) {
          return fail("count t=" + std::to_string(t) + " m=" + std::to_string(m));
        }
        std::set<Composition> image;
        for (const auto& h : reps) {
          const Composition c = phi(h);
          if (c.max_part() != max_cyclic_run(h.word())) return fail("max part " + h.word().to_string());
          if (phi_inverse(c) != h) return fail("round trip " + h.word().to_string());
          image.insert(c);
        }
        for (const auto& c : comps) {
          if (!image.contains(c) || phi(phi_inverse(c)) != c) return fail("composition " + c.to_string());
        }
      }
    }
    return {};
  });

  rec.check("lowlying-lower-bound", [&]() -> std::string {
    for (int m : {2, 3, 4}) {
      for (int tau = 1; tau <= ceiling; ++tau) {
        const auto n = count_classes(tau, ClassFilter::lowlying(m), opt.threads);
        if (static_cast<double>(n) < lowlying_lower_bound(tau, m)) {
          return fail("tau=" + std::to_string(tau) + " m=" + std::to_string(m));
        }
        const double floor_bound = std::exp2(tau - tau / m - 1) / tau;
        const auto b = construction_b_class_count(tau, m);
        if (static_cast<double>(b) < std::ceil(floor_bound - 1e-12) || b > n) {
          return fail("construction B tau=" + std::to_string(tau) + " m=" + std::to_string(m));
        }
      }
    }
    return {};
  });

  rec.check("lowlying-filter-monotone", [&]() -> std::string {
    for (int tau = 1; tau <= cap12; ++tau) {
      std::uint64_t previous = 0;
      for (int m = 1; m <= tau; ++m) {
        const auto n = count_classes(tau, ClassFilter::lowlying(m), opt.threads);
        if (n < previous) return fail("tau=" + std::to_string(tau));
        previous = n;
      }
      if (BigInt(previous) != necklace_count(tau)) return fail("m=tau tau=" + std::to_string(tau));
    }
    return {};
  });

  rec.check("power-map-bijection", [&]() -> std::string {
    std::vector<std::vector<BinaryWord>> primitives(static_cast<std::size_t>(ceiling) + 1);
    for (int s = 1; s <= ceiling; ++s) primitives[static_cast<std::size_t>(s)] = classes(s, ClassFilter::primitive());
    for (int tau = 2; tau <= ceiling; ++tau) {
      std::set<BinaryWord> images;
      std::size_t produced = 0;
      for (int s = 1; s < tau; ++s) {
        if (tau % s != 0) continue;
        for (const auto& w : primitives[static_cast<std::size_t>(s)]) {
          images.insert(power_map(w, tau / s));
          ++produced;
        }
      }
      std::set<BinaryWord> nonprimitive;
      for_each_class(tau, ClassFilter::all(), [&](const BinaryWord& w) {
        if (!is_primitive(w)) nonprimitive.insert(w);
      });
      if (images.size() != produced) return fail("collision at tau=" + std::to_string(tau));
      if (images != nonprimitive) return fail("image mismatch at tau=" + std::to_string(tau));
    }
    return {};
  });

  rec.check("primitive-lowlying-half-bound-threshold", [&]() -> std::string {
    std::ostringstream measured;
    measured << kMeasured;
    for (int m : {3, 4}) {
      int first = -1;
      for (int tau = 1; tau <= ceiling; ++tau) {
        const auto n = count_classes(tau, ClassFilter{true, false, m}, opt.threads);
        if (static_cast<double>(n) >= 0.5 * lowlying_lower_bound(tau, m)) {
          if (first < 0) first = tau;
        } else {
          first = -1;
        }
      }
      measured << " m=" << m << " holds-from-tau=" << first;
    }
    return measured.str();
  });
}

void geometry_suite(Recorder& rec, const VerifyOptions& opt) {
  const int cap8 = std::min(opt.tmax, 8);
  const int cap10 = std::min(opt.tmax, 10);
  const int cap12 = std::min(opt.tmax, 12);

  rec.check("encode-homomorphism", [&]() -> std::string {
    for (int total = 2; total <= cap8; ++total) {
      for (int split = 1; split < total; ++split) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total); ++bits) {
          const BinaryWord w(bits, total);
          if (encode(w) != encode(w.slice(0, split)) * encode(w.slice(split, total - split))) {
            return fail(w.to_string());
          }
        }
      }
    }
    return {};
  });

  rec.check("conjugation-invariance", [&] {
    return for_all_words(cap10, [](const BinaryWord& w) -> std::string {
      const BigInt tr = encode(w).trace_abs();
      for (int k = 1; k < w.length(); ++k) {
        if (encode(rotate(w, k)).trace_abs() != tr) return fail(w.to_string());
      }
      return {};
    });
  });

  rec.check("parabolic-classification", [&]() -> std::string {
    for (int tau = 1; tau <= cap12; ++tau) {
      int parabolic = 0;
      std::string why;
      for_each_class(tau, ClassFilter::all(), [&](const BinaryWord& w) {
        const MatrixKind kind = classify(encode(w));
        if (kind == MatrixKind::parabolic) {
          ++parabolic;
          if (!w.is_constant()) why = w.to_string();
        }
        if (tau >= 2 && is_primitive(w) && kind != MatrixKind::hyperbolic) why = w.to_string();
      });
      if (!why.empty()) return fail(why);
      if (parabolic != 2) return fail("tau=" + std::to_string(tau));
    }
    return {};
  });

  rec.check("apex-equals-root-gap", [&]() -> std::string {
    for (int tau = 2; tau <= cap10; ++tau) {
      std::string why;
      for_each_class(tau, ClassFilter{false, true, std::nullopt}, [&](const BinaryWord& w) {
        for (const auto& m : {encode(w), encode(w).conjugated_by(ProjectiveMatrix::generator_a())}) {
          if (m.c() == 0) continue;
          // Fixed points of z -> (az+b)/(cz+d): c z^2 + (d - a) z - b = 0.
          const double qa = static_cast<double>(m.c());
          const double qb = static_cast<double>(m.d() - m.a());
          const double qc = -static_cast<double>(m.b());
          const double disc = std::sqrt(qb * qb - 4 * qa * qc);
          const double gap = std::abs((-qb + disc) / (2 * qa) - (-qb - disc) / (2 * qa)) / 2;
          if (std::abs(gap - apex_height(m)) > 1e-12 * std::max(1.0, gap)) why = w.to_string();
        }
      });
      if (!why.empty()) return fail(why);
    }
    return {};
  });

  rec.check("sign-canonicalization", [&] {
    return for_all_words(cap8, [](const BinaryWord& w) -> std::string {
      const ProjectiveMatrix m = encode(w);
      if (ProjectiveMatrix(-m.a(), -m.b(), -m.c(), -m.d()) != m) return fail(w.to_string());
      return {};
    });
  });

  rec.check("widened-depth-bracket", [&]() -> std::string {
    const AuditReport audit = audit_excursion_brackets(std::max(2, cap10), opt.threads);
    for (const auto& row : audit.rows) {
      if (!row.hits.widened) return fail(row.report.word.to_string());
      if (!row.report.search_agrees) return fail("conjugation search found smaller |c| for " + row.report.word.to_string());
    }
    std::ostringstream measured;
    measured << "measured: classes=" << audit.summary.classes << " paper=" << audit.summary.paper_hits
             << " shifted=" << audit.summary.shifted_hits;
    return measured.str();
  });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  if (name == "binwords") return Suite::binwords;
  if (name == "counting") return Suite::counting;
  if (name == "enumerate") return Suite::enumerate;
  if (name == "geometry") return Suite::geometry;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

BigInt mobius_primitive_count(int tau) {
  if (tau < 1) throw std::domain_error("mobius_primitive_count: tau must be >= 1");
  BigInt sum = 0;
  for (int d = 1; d <= tau; ++d) {
    if (tau % d == 0) sum += mobius(d) * pow2(static_cast<unsigned>(tau / d));
  }
  return sum / tau;
}

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::binwords) {
    Recorder rec("binwords", out);
    binwords_suite(rec, options);
  }
  if (all || suite == Suite::counting) {
    Recorder rec("counting", out);
    counting_suite(rec, options);
  }
  if (all || suite == Suite::enumerate) {
    Recorder rec("enumerate", out);
    enumerate_suite(rec, options);
  }
  if (all || suite == Suite::geometry) {
    Recorder rec("geometry", out);
    geometry_suite(rec, options);
  }
  return out;
}

}  // namespace lowlying
