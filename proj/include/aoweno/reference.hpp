#pragma once

// Reference profiles for error measurement: exact formulas, exact Riemann
// sampling, or fine-grid self-computed runs cached on disk.
//
// Cache layout: <cache_dir>/<fnv1a64-of-recipe>.bin, a small header with the
// full recipe string followed by the profile values.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aoweno/riemann.hpp"
#include "aoweno/run.hpp"

namespace aoweno {

namespace detail {

inline std::string recipe_string(const Problem& p) {
  std::ostringstream ss;
  ss << "ref|" << p.name << "|scheme=" << to_string(p.ref.scheme)
     << "|n=" << p.ref.n << "|mode=" << (p.step.mode == StepControl::Mode::Cfl ? "cfl" : "power")
     << "|cfl=" << p.step.cfl << "|t=" << p.t_end
     << "|jump=" << static_cast<int>(p.opt.jump);
  if (p.kind == ProblemKind::euler2) ss << "|slice=" << p.slice_y;
  if (p.name == "kelvin_helmholtz" && p.opt.kh_as_printed) ss << "|as_printed";
  return ss.str();
}

inline std::string cache_path(const std::string& cache_dir, const std::string& recipe) {
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a64(recipe)));
  return cache_dir + "/" + hex + ".bin";
}

constexpr std::uint32_t kCacheMagic = 0x414F5752;  // "AOWR"
constexpr std::uint32_t kCacheVersion = 1;

inline bool load_cached_profile(const std::string& path, const std::string& recipe,
                                std::vector<double>& out) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return false;
  std::uint32_t magic = 0, version = 0;
  std::uint64_t rlen = 0, count = 0;
  is.read(reinterpret_cast<char*>(&magic), sizeof magic);
  is.read(reinterpret_cast<char*>(&version), sizeof version);
  is.read(reinterpret_cast<char*>(&rlen), sizeof rlen);
  if (!is || magic != kCacheMagic || version != kCacheVersion || rlen > 4096)
    return false;
  std::string stored(rlen, '\0');
  is.read(stored.data(), static_cast<std::streamsize>(rlen));
  is.read(reinterpret_cast<char*>(&count), sizeof count);
  if (!is || stored != recipe || count > (1u << 26)) return false;
  out.resize(count);
  is.read(reinterpret_cast<char*>(out.data()),
          static_cast<std::streamsize>(count * sizeof(double)));
  return static_cast<bool>(is);
}

inline void store_cached_profile(const std::string& path, const std::string& recipe,
                                 const std::vector<double>& v) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) return;  // caching is best-effort
    const std::uint32_t magic = kCacheMagic, version = kCacheVersion;
    const std::uint64_t rlen = recipe.size(), count = v.size();
    os.write(reinterpret_cast<const char*>(&magic), sizeof magic);
    os.write(reinterpret_cast<const char*>(&version), sizeof version);
    os.write(reinterpret_cast<const char*>(&rlen), sizeof rlen);
    os.write(recipe.data(), static_cast<std::streamsize>(rlen));
    os.write(reinterpret_cast<const char*>(&count), sizeof count);
    os.write(reinterpret_cast<const char*>(v.data()),
             static_cast<std::streamsize>(count * sizeof(double)));
    if (!os.good()) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

/// Linear interpolation of a profile stored at the nodes of `fine` onto x;
/// exact index pick when x coincides with a fine node division.
inline double sample_profile(const Axis& fine, const std::vector<double>& v, double x) {
  const double s = (x - fine.a) / fine.dx();
  const int j = static_cast<int>(std::floor(s));
  if (j < 0) return v.front();
  if (j + 1 >= static_cast<int>(v.size())) return v.back();
  const double w = s - j;
  if (w < 1e-9) return v[j];
  if (w > 1.0 - 1e-9) return v[j + 1];
  return v[j] * (1.0 - w) + v[j + 1] * w;
}

}  // namespace detail

/// The fine-grid profile (and its axis) backing a `self` reference recipe,
/// computing and caching it if needed.
inline std::pair<Axis, std::vector<double>> self_reference(
    const Problem& p, const std::string& cache_dir) {
  if (p.ref.kind != RefRecipe::Kind::self)
    throw ConfigError("problem '" + p.name + "' has no self-computed reference");
  Axis fine = p.x;
  fine.n = p.ref.n;
  const std::string recipe = detail::recipe_string(p);
  std::vector<double> v;
  if (!cache_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    if (detail::load_cached_profile(detail::cache_path(cache_dir, recipe), recipe, v))
      return {fine, v};
  }
  const SchemeParams sp = SchemeParams::defaults(p.ref.scheme);
  const SimResult r = run_simulation(p, sp, p.ref.n,
                                     p.kind == ProblemKind::euler2 ? p.ref.n : 0);
  v = p.kind == ProblemKind::euler2 ? slice_density(r, p.slice_y)
                                    : solution_values(r);
  if (!cache_dir.empty())
    detail::store_cached_profile(detail::cache_path(cache_dir, recipe), recipe, v);
  return {fine, v};
}

/// Reference values (scalar solution or density) at the stored nodes of `at`,
/// evaluated at the problem's final time.
inline std::vector<double> reference_values(const Problem& p, const Axis& at,
                                            const std::string& cache_dir) {
  std::vector<double> out(at.npts());
  switch (p.ref.kind) {
    case RefRecipe::Kind::exact: {
      if (p.exact_scalar) {
        for (int j = 0; j < at.npts(); ++j)
          out[j] = p.exact_scalar(at.x(j), p.t_end);
      } else if (p.exact_density1) {
        for (int j = 0; j < at.npts(); ++j)
          out[j] = p.exact_density1(at.x(j), p.t_end);
      } else {
        throw ConfigError("problem '" + p.name +
                          "' lacks a 1D exact-profile formula");
      }
      return out;
    }
    case RefRecipe::Kind::riemann: {
      for (int j = 0; j < at.npts(); ++j) {
        const double xi = (at.x(j) - p.riem_x0) / p.t_end;
        out[j] = exact_riemann(p.riem_l, p.riem_r, p.gas, xi).rho;
      }
      return out;
    }
    case RefRecipe::Kind::self: {
      const auto [fine, v] = self_reference(p, cache_dir);
      for (int j = 0; j < at.npts(); ++j)
        out[j] = detail::sample_profile(fine, v, at.x(j));
      return out;
    }
    default:
      throw ConfigError("problem '" + p.name + "' has no reference recipe");
  }
}

}  // namespace aoweno
