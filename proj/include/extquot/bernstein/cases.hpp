#pragma once

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "extquot/bernstein/partition.hpp"
#include "extquot/catalog.hpp"

namespace extquot::bernstein {

inline constexpr double kDefaultQ = 9.0;

enum class CaseKind { GLn, SL2, G2Ramified };

inline std::string to_string(CaseKind k) {
  switch (k) {
    case CaseKind::GLn: return "gl";
    case CaseKind::SL2: return "sl2";
    case CaseKind::G2Ramified: return "g2";
  }
  return "?";
}

/// An inertial class reduced to the data the geometry sees: the torus D = (C^x)^r,
/// the finite group W acting on it, q, and one cocharacter per component of D//W.
/// The supercuspidal data for GL(n) is carried only as the block size m.
struct InertialCase {
  CaseKind kind = CaseKind::GLn;
  int m = 1;
  int r = 1;
  double q = kDefaultQ;
  ComponentCatalog catalog;

  const QuotientSetup& setup() const { return catalog.setup; }
};

namespace detail {
inline void require_q(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) throw InvalidArgument("q must be a real number greater than 1");
}
} // namespace detail

/// [GL(m)^r, tau^{(x) r}]: D = (C^x)^r, W = S_r, one component per partition of r.
inline InertialCase make_gl_case(int m, int r, double q = kDefaultQ) {
  detail::require_q(q);
  if (m < 1 || r < 1) throw InvalidArgument("GL case needs m >= 1 and r >= 1");
  InertialCase c{CaseKind::GLn, m, r, q, decompose(symmetric_group_setup(r))};
  c.catalog.setup.label = "gl_m" + std::to_string(m) + "_r" + std::to_string(r);
  TorusPoint ones(std::vector<Complex>(static_cast<std::size_t>(r), Complex(1.0)));
  for (const auto& p : partitions(r)) {
    auto idx = attach_cocharacter(c.catalog, partition_to_class(p), ones, cocharacter_gl(p));
    c.catalog.components[idx].name = p.str();
  }
  return c;
}

/// [T, 1] for SL(2): Z/2 acting on C^x by inversion. The two fixed points carry
/// exponents 2 (at 1) and 0 (at -1), so pi_t sends them to t^2 and -1.
inline InertialCase make_sl2_case(double q = kDefaultQ) {
  detail::require_q(q);
  auto setup = QuotientSetup::from_generators({LatticeAutomorphism{{-1}}}, 1, "sl2");
  InertialCase c{CaseKind::SL2, 1, 1, q, decompose(setup)};
  LatticeAutomorphism inv{{-1}};
  auto& cat = c.catalog;
  auto e = cat.ordinary_component_index;
  cat.components[e].cocharacter = Cocharacter{{0}};
  cat.components[e].name = "D/W";
  auto plus = attach_cocharacter(cat, inv, TorusPoint({Complex(1.0)}), Cocharacter{{2}});
  cat.components[plus].name = "pt_+1";
  auto minus = attach_cocharacter(cat, inv, TorusPoint({Complex(-1.0)}), Cocharacter{{0}});
  cat.components[minus].name = "pt_-1";
  return c;
}

inline LatticeAutomorphism g2_s_alpha() { return LatticeAutomorphism{{0, 1}, {1, 0}}; }
inline LatticeAutomorphism g2_s_3a2b() { return LatticeAutomorphism{{0, -1}, {-1, 0}}; }

/// [T, chi (x) chi] in G2 with chi ramified quadratic: W = Z/2 x Z/2 generated by
/// s_alpha and s_{3alpha+2beta} acting on D = (C^x)^2.
inline InertialCase make_g2_case(double q = kDefaultQ) {
  detail::require_q(q);
  auto sa = g2_s_alpha(), sb = g2_s_3a2b();
  auto setup = QuotientSetup::from_generators({sa, sb}, 2, "g2");
  InertialCase c{CaseKind::G2Ramified, 1, 2, q, decompose(setup)};
  auto& cat = c.catalog;
  auto pt = [](double x, double y) { return TorusPoint({Complex(x), Complex(y)}); };
  auto e = cat.ordinary_component_index;
  cat.components[e].cocharacter = Cocharacter{{0, 0}};
  cat.components[e].name = "D/W";
  auto both = sa * sb;
  struct Entry {
    LatticeAutomorphism element;
    TorusPoint point;
    Cocharacter h;
    const char* name;
  };
  const std::array<Entry, 5> entries{{
      {sa, pt(1, 1), {{1, -1}}, "C_1"},
      {sb, pt(1, 1), {{-1, -1}}, "C_2"},
      {both, pt(1, 1), {{0, -2}}, "pt_1"},
      {both, pt(-1, -1), {{0, -2}}, "pt_2"},
      {both, pt(1, -1), {{0, 0}}, "pt_3"},
  }};
  for (const auto& en : entries) {
    auto idx = attach_cocharacter(cat, en.element, en.point, en.h);
    cat.components[idx].name = en.name;
  }
  return c;
}

/// pi_t(x) = pi(h_c(t) . x) for x on component `component`.
inline OrbitPoint pi_t(const ComponentCatalog& cat, std::size_t component, const TorusPoint& x, Complex t) {
  if (std::abs(t) <= kMachineZero) throw ZeroParameter("pi_t needs t != 0");
  const auto& c = cat.components.at(component);
  extquot::detail::require_rank(cat.setup.rank, x.rank(), "pi_t");
  const auto& fs = cat.fixed_set_of(c);
  if (!fs.contains(x) || !c.contains_label(fs.locate(x)))
    throw NotOnComponent("point " + x.str() + " does not lie on component " + c.name);
  if (!c.cocharacter) throw InvalidArgument("component " + c.name + " has no cocharacter attached");
  return orbit_canonical(cat.setup, c.cocharacter->evaluate(t, x.tolerance()) * x);
}

inline OrbitPoint pi_t(const InertialCase& ic, std::size_t component, const TorusPoint& x, Complex t) {
  return pi_t(ic.catalog, component, x, t);
}

/// True iff z_i = s z_j for some i != j, i.e. prod_{i != j}(z_i - s z_j) vanishes.
inline bool gl_family_test(const TorusPoint& z, Complex s) {
  if (std::abs(s) <= kMachineZero) throw ZeroParameter("family parameter must be nonzero");
  for (std::size_t i = 0; i < z.rank(); ++i)
    for (std::size_t j = 0; j < z.rank(); ++j)
      if (i != j && approx_equal(z[i], s * z[j], z.tolerance())) return true;
  return false;
}

/// Reducibility locus of D/W for GL(n): prod_{i != j}(z_i - q z_j) = 0.
inline bool gl_reducibility_test(const TorusPoint& z, double q) {
  detail::require_q(q);
  return gl_family_test(z, Complex(q));
}

/// A point of the orbit O(phi): one unramified twist value per part of the partition.
struct LParamOrbitPoint {
  Partition partition;
  std::vector<Complex> twists;
};

/// Embeds the twists in the fixed torus of partition_to_class (constant on each cycle block)
/// and takes its orbit under S_r.
inline OrbitPoint lparam_point(const QuotientSetup& sr, const LParamOrbitPoint& p,
                               double tolerance = default_tolerance()) {
  if (!p.partition.valid()) throw InvalidArgument("invalid partition " + p.partition.str());
  if (p.twists.size() != p.partition.length())
    throw SizeMismatch("expected " + std::to_string(p.partition.length()) + " twists, got " +
                       std::to_string(p.twists.size()));
  extquot::detail::require_rank(sr.rank, static_cast<std::size_t>(p.partition.size()), "lparam_point");
  std::vector<Complex> z;
  for (std::size_t b = 0; b < p.twists.size(); ++b)
    for (int i = 0; i < p.partition.parts[b]; ++i) z.push_back(p.twists[b]);
  return orbit_canonical(sr, TorusPoint(std::move(z), tolerance));
}

/// The zero-dimensional family (x + 1)(x - t^2) = 0.
inline std::vector<Complex> sl2_family(Complex t) {
  if (std::abs(t) <= kMachineZero) throw ZeroParameter("sl2_family needs t != 0");
  return {Complex(-1.0), t * t};
}

/// Coefficients (constant first) of (x + 1)(x - t^2) = x^2 + (1 - t^2) x - t^2.
inline std::vector<Complex> sl2_polynomial(Complex t) {
  if (std::abs(t) <= kMachineZero) throw ZeroParameter("sl2_polynomial needs t != 0");
  return {-t * t, Complex(1.0) - t * t, Complex(1.0)};
}

/// The variety X_t of the G2 case: the line x - t^2 y = 0, the hyperbola xy - t^{-2} = 0 and (1,-1).
inline bool g2_on_line(const TorusPoint& p, Complex t) {
  return approx_equal(p[0], t * t * p[1], p.tolerance());
}
inline bool g2_on_hyperbola(const TorusPoint& p, Complex t) {
  return approx_equal(p[0] * p[1], Complex(1.0) / (t * t), p.tolerance());
}
inline bool g2_is_pt3(const TorusPoint& p) {
  return approx_equal(p[0], Complex(1.0), p.tolerance()) && approx_equal(p[1], Complex(-1.0), p.tolerance());
}

/// Membership of a point of D/W in X_t: some member of the W-orbit lies on the union.
inline bool g2_family_contains(const QuotientSetup& g2, const OrbitPoint& p, Complex t) {
  for (const auto& y : orbit(g2, p.representative))
    if (g2_on_line(y, t) || g2_on_hyperbola(y, t) || g2_is_pt3(y)) return true;
  return false;
}

/// The reduced quotient of the G2 case as a subvariety of D: C_1 = {x = y}, C_2 = {xy = 1}, pt_3.
inline bool g2_reduced_locus(const QuotientSetup& g2, const TorusPoint& x) {
  return g2_family_contains(g2, orbit_canonical(g2, x), Complex(1.0));
}

/// Intersection of the line and the hyperbola: (1, t^{-2}) and (-1, -t^{-2}).
inline std::array<TorusPoint, 2> g2_intersection_points(Complex t) {
  if (std::abs(t) <= kMachineZero) throw ZeroParameter("g2 intersection needs t != 0");
  Complex y = Complex(1.0) / (t * t);
  return {TorusPoint({Complex(1.0), y}), TorusPoint({Complex(-1.0), -y})};
}

/// Exact version for rational t: eliminating x = t^2 y from xy = t^{-2} leaves
/// t^2 y^2 - t^{-2} = 0, a quadratic with roots y = +-t^{-2}.
struct ExactIntersection {
  Rational t;
  std::array<std::array<Rational, 2>, 2> points;
  int eliminant_degree = 0;
  bool verified = false;
};

inline ExactIntersection g2_intersection_exact(const Rational& t) {
  if (t == Rational(0)) throw ZeroParameter("g2 intersection needs t != 0");
  const Rational t2 = t * t, tm2 = Rational(1) / t2;
  ExactIntersection out{t, {{{Rational(1), tm2}, {Rational(-1), -tm2}}}, 2, true};
  // eliminant coefficients: t^2 y^2 + 0 y - t^{-2}
  const std::array<Rational, 3> elim{-tm2, Rational(0), t2};
  out.eliminant_degree = elim[2] != Rational(0) ? 2 : (elim[1] != Rational(0) ? 1 : 0);
  for (const auto& [x, y] : out.points) {
    bool line = x - t2 * y == Rational(0);
    bool hyperbola = x * y - tm2 == Rational(0);
    bool root = elim[2] * y * y + elim[1] * y + elim[0] == Rational(0);
    out.verified = out.verified && line && hyperbola && root;
  }
  out.verified = out.verified && out.points[0][1] != out.points[1][1] && out.eliminant_degree == 2;
  return out;
}

/// Golden constituent counts at t = sqrt(q): 4 at each intersection point, 2 tempered at pt_3.
struct G2Constituents {
  int at_intersection_plus = 4;
  int at_intersection_minus = 4;
  int tempered_at_pt3 = 2;
};

inline G2Constituents g2_constituent_counts() { return {}; }

/// How a family parameter is read. Cocharacter: t is the argument of h_c, and the GL
/// equations use t^2. Direct: the parameter s is the one in prod(z_i - s z_j), and h_c is
/// evaluated at sqrt(s).
enum class FamilyConvention { Cocharacter, Direct };

inline std::string to_string(FamilyConvention c) {
  return c == FamilyConvention::Cocharacter ? "cocharacter_t_squared" : "direct_t";
}

struct FamilySample {
  std::size_t component;
  std::string component_name;
  TorusPoint source;
  OrbitPoint image;
  bool equation_ok = false;
};

struct FamilyReport {
  CaseKind kind;
  Complex t;
  Complex cocharacter_parameter;
  FamilyConvention convention;
  std::vector<Complex> family_points; ///< SL2 only: the roots of (x + 1)(x - t^2)
  std::vector<FamilySample> samples;

  bool all_ok() const {
    for (const auto& s : samples)
      if (!s.equation_ok) return false;
    return true;
  }
};

/// Does the image lie on the case's X_t, with tau the argument of the cocharacters.
inline bool family_equation_check(const InertialCase& ic, const OrbitPoint& image, Complex tau) {
  switch (ic.kind) {
    case CaseKind::GLn: return gl_family_test(image.representative, tau * tau);
    case CaseKind::SL2: {
      for (auto root : sl2_family(tau))
        for (const auto& y : orbit(ic.setup(), TorusPoint({root}, image.representative.tolerance())))
          if (y.approx_equals(image.representative)) return true;
      return false;
    }
    case CaseKind::G2Ramified: return g2_family_contains(ic.setup(), image, tau);
  }
  return false;
}

/// Random point of (C^x)^d: log-modulus uniform in [-1, 1], argument uniform.
inline std::vector<Complex> random_torus_params(std::size_t d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> logmod(-1.0, 1.0), angle(0.0, 2.0 * M_PI);
  std::vector<Complex> p(d);
  for (auto& z : p) z = std::polar(std::exp(logmod(rng)), angle(rng));
  return p;
}

/// Samples n points per non-ordinary component, maps them by pi_t and checks the images
/// against the case's defining equations.
inline FamilyReport family_sample(const InertialCase& ic, Complex t, std::size_t n, std::uint64_t seed,
                                  FamilyConvention conv = FamilyConvention::Cocharacter,
                                  double tolerance = default_tolerance()) {
  if (std::abs(t) <= kMachineZero) throw ZeroParameter("family parameter must be nonzero");
  if (n == 0) throw InvalidArgument("family_sample needs at least one sample");
  const Complex tau = conv == FamilyConvention::Cocharacter ? t : std::sqrt(t);
  FamilyReport rep{ic.kind, t, tau, conv, {}, {}};
  if (ic.kind == CaseKind::SL2) rep.family_points = sl2_family(tau);
  std::mt19937_64 rng(seed);
  const auto& cat = ic.catalog;
  for (std::size_t ci = 0; ci < cat.components.size(); ++ci) {
    if (ci == cat.ordinary_component_index) continue;
    const auto& c = cat.components[ci];
    const auto& fs = cat.fixed_set_of(c);
    for (std::size_t s = 0; s < n; ++s) {
      std::uniform_int_distribution<std::size_t> pick(0, c.component_orbit.size() - 1);
      const auto& label = c.component_orbit[pick(rng)];
      auto src = fs.parametrize(label, random_torus_params(c.dimension, rng), tolerance);
      try {
        auto img = pi_t(cat, ci, src, tau);
        bool ok = family_equation_check(ic, img, tau);
        rep.samples.push_back({ci, c.name, src, std::move(img), ok});
      } catch (const NotOnComponent&) {
        // the sample failed its own membership check at this tolerance
        rep.samples.push_back({ci, c.name, src, OrbitPoint{src}, false});
      }
    }
  }
  return rep;
}

} // namespace extquot::bernstein
