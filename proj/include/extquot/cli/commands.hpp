#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "extquot/io/documents.hpp"

namespace extquot::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kResourceBound = 3,
  kFamilyCheckFailed = 4,
  kOracleMismatch = 5,
};

struct Options {
  std::string input;
  std::string out;
  std::string case_kind;
  int m = 1;
  int r = 2;
  double q = bernstein::kDefaultQ;
  std::string t = "1";
  std::string sweep;
  std::size_t samples = 8;
  std::uint64_t seed = 1;
  long long grid = 2;
  std::optional<double> tolerance;
  std::string convention = "cocharacter";

  double resolved_tolerance() const { return tolerance ? *tolerance : default_tolerance(); }
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open output file '" + path + "'");
  f << text;
}

/// "re" or "re,im"
inline Complex parse_complex(const std::string& s) {
  try {
    auto comma = s.find(',');
    std::size_t used = 0;
    if (comma == std::string::npos) {
      double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw InvalidArgument("cannot parse parameter '" + s + "' (expected re or re,im)");
  }
}

/// "t0:t1:steps", inclusive, linear in each of the real and imaginary parts.
inline std::vector<Complex> parse_sweep(const std::string& s) {
  auto a = s.find(':'), b = s.rfind(':');
  if (a == std::string::npos || a == b) throw InvalidArgument("sweep must look like t0:t1:steps");
  Complex t0 = parse_complex(s.substr(0, a)), t1 = parse_complex(s.substr(a + 1, b - a - 1));
  long long steps = 0;
  try {
    steps = std::stoll(s.substr(b + 1));
  } catch (const std::logic_error&) {
    throw InvalidArgument("sweep step count is not an integer");
  }
  if (steps < 1) throw InvalidArgument("sweep needs at least one step");
  std::vector<Complex> ts;
  for (long long i = 0; i < steps; ++i) {
    double f = steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
    ts.push_back(t0 + f * (t1 - t0));
  }
  return ts;
}

inline std::vector<Complex> parameters(const Options& o) {
  return o.sweep.empty() ? std::vector<Complex>{parse_complex(o.t)} : parse_sweep(o.sweep);
}

inline io::CaseSpec case_from_flags(const Options& o) {
  io::CaseSpec c;
  try {
    c.kind = io::parse_case_kind(o.case_kind);
  } catch (const io::ParseError& e) {
    throw InvalidArgument(e.what());
  }
  c.m = o.m;
  c.r = o.r;
  c.q = o.q;
  if (c.kind == bernstein::CaseKind::GLn && (c.m < 1 || c.r < 1)) throw InvalidArgument("--m and --r must be positive");
  if (!(c.q > 1.0)) throw InvalidArgument("--q must be greater than 1");
  return c;
}

inline bernstein::FamilyConvention convention_from_flags(const Options& o) {
  if (o.convention == "cocharacter") return bernstein::FamilyConvention::Cocharacter;
  if (o.convention == "direct") return bernstein::FamilyConvention::Direct;
  throw InvalidArgument("--convention must be cocharacter or direct");
}

/// Maps library errors onto the exit-code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ClosureExceedsBound& e) {
    err << "error: " << e.what() << '\n';
    return kResourceBound;
  } catch (const ArithmeticOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kResourceBound;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

} // namespace detail

inline int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto doc = io::parse_setup(detail::read_file(o.input));
    auto cat = io::build_catalog(doc);
    detail::write_output(o.out, io::decompose_report(doc, cat).dump(2) + "\n", out);
    return kOk;
  });
}

inline int cmd_family(const Options& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto spec = detail::case_from_flags(o);
    auto conv = detail::convention_from_flags(o);
    if (o.samples == 0) throw InvalidArgument("--samples must be positive");
    auto ts = detail::parameters(o);
    auto ic = io::build_case(spec);
    io::Json j;
    j["schema"] = io::kSchema;
    j["command"] = "family";
    j["case"] = io::to_json(spec);
    j["equation_convention"] = bernstein::to_string(conv);
    j["seed"] = o.seed;
    j["samples_per_component"] = o.samples;
    j["records"] = io::Json::array();
    bool ok = true;
    for (auto t : ts) {
      auto rep = bernstein::family_sample(ic, t, o.samples, o.seed, conv, o.resolved_tolerance());
      ok = ok && rep.all_ok();
      j["records"].push_back(io::family_record_json(rep));
    }
    j["all_flags"] = ok;
    detail::write_output(o.out, j.dump(2) + "\n", out);
    if (!ok) {
      err << "verification failed: some family images miss the defining equations\n";
      return kFamilyCheckFailed;
    }
    return kOk;
  });
}

inline int cmd_poincare(const Options& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto doc = io::parse_setup(detail::read_file(o.input));
    auto p = poincare_polynomial(io::build_catalog(doc)).total;
    std::ostringstream s;
    s << "poincare: " << p.str() << '\n' << "coefficients:";
    for (const auto& c : p.coefficients()) s << ' ' << c.str();
    s << '\n' << "even: " << p.even_sum().str() << '\n' << "odd: " << p.odd_sum().str() << '\n';
    detail::write_output(o.out, s.str(), out);
    return kOk;
  });
}

inline int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto doc = io::parse_setup(detail::read_file(o.input));
    auto cat = io::build_catalog(doc);
    if (o.grid < 1 || o.grid > 16) throw InvalidArgument("--grid must be between 1 and 16");
    if (cat.setup.rank > 5) throw InvalidArgument("grid oracle supports rank <= 5");
    auto census = grid_oracle(cat.setup, o.grid);
    auto derived = catalog_grid_census(cat, o.grid);
    bool pass = census.total == derived.total && census.per_class == derived.per_class;
    std::ostringstream s;
    s << "setup: " << cat.setup.label << " (order " << cat.setup.group.order() << ", rank " << cat.setup.rank << ")\n";
    s << "grid: N=" << o.grid << " points=" << census.grid_points << '\n';
    for (std::size_t c = 0; c < cat.classes.size(); ++c)
      s << "class " << c << ' ' << cat.classes[c].representative() << ": oracle " << census.per_class[c] << " catalog "
        << derived.per_class[c] << (census.per_class[c] == derived.per_class[c] ? "" : "  MISMATCH") << '\n';
    s << "stabilizer histogram:";
    for (auto [k, v] : census.stabilizer_histogram) s << ' ' << k << ':' << v;
    s << '\n' << "census: " << census.total << " (catalog " << derived.total << ")\n" << (pass ? "PASS" : "FAIL") << '\n';
    out << s.str();
    if (!o.out.empty()) {
      io::Json j;
      j["schema"] = io::kSchema;
      j["command"] = "oracle";
      j["setup"] = io::to_json(doc);
      j["census"] = io::census_json(census, derived, pass);
      detail::write_output(o.out, j.dump(2) + "\n", out);
    }
    return pass ? kOk : kOracleMismatch;
  });
}

/// CSV rows (component, t, coordinate re/im pairs) of pi_t images before orbit
/// canonicalization, so that curves plot in D's own coordinates.
inline int cmd_plotdata(const Options& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto spec = detail::case_from_flags(o);
    auto ts = detail::parameters(o);
    auto ic = io::build_case(spec);
    const auto& cat = ic.catalog;
    const std::size_t r = cat.setup.rank;
    std::ostringstream s;
    s << std::setprecision(17);
    s << "component,t_re,t_im";
    const char* names[] = {"x", "y"};
    for (std::size_t i = 0; i < r; ++i) {
      std::string n = r <= 2 ? names[i] : "z" + std::to_string(i + 1);
      s << ',' << n << "_re," << n << "_im";
    }
    s << '\n';
    const std::size_t n = std::max<std::size_t>(o.samples, 2);
    for (auto t : ts) {
      for (std::size_t ci = 0; ci < cat.components.size(); ++ci) {
        if (ci == cat.ordinary_component_index) continue;
        const auto& c = cat.components[ci];
        const auto& fs = cat.fixed_set_of(c);
        const std::size_t count = c.dimension == 0 ? 1 : n;
        for (std::size_t k = 0; k < count; ++k) {
          // real parameters on a log-spaced grid over [1/4, 4]
          double lam = c.dimension == 0 ? 1.0 : std::pow(16.0, static_cast<double>(k) / static_cast<double>(n - 1)) / 4.0;
          auto x = fs.parametrize(c.component_orbit.front(), std::vector<Complex>(c.dimension, Complex(lam)));
          auto img = c.cocharacter->evaluate(t) * x;
          s << c.name << ',' << t.real() << ',' << t.imag();
          for (auto z : img.coords()) s << ',' << z.real() << ',' << z.imag();
          s << '\n';
        }
      }
    }
    detail::write_output(o.out, s.str(), out);
    return kOk;
  });
}

} // namespace extquot::cli
