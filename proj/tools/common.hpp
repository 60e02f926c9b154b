#pragma once

// Shared plumbing for the repkern command-line tools: config loading, the
// tiny test-function vocabulary, deterministic report serialization.

#include <array>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "repkern/contour.hpp"
#include "repkern/domain.hpp"

namespace repkern::cli {

using json = nlohmann::json;
using cd = std::complex<double>;

inline constexpr const char* kToolVersion = "0.1.0";

// Exit code contract (stable for CI): 0 = all tolerances met,
// 2 = tolerance failure, 3 = config error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitTolerance = 2;
inline constexpr int kExitConfig = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Deterministic serialization helpers

// FNV-1a 64-bit over the canonical (key-sorted, whitespace-free) dump of the
// parsed config; whitespace/formatting changes do not change the hash.
inline std::string config_hash(const json& cfg) {
  const std::string s = cfg.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Round to 12 significant digits (report/golden precision; comparisons use
// relative tolerance 1e-8, so the last four digits absorb platform drift).
inline double round12(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("report value is not finite");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline std::string fmt12(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("report value is not finite");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline json complex_to_json(cd z) {
  return json::array({round12(z.real()), round12(z.imag())});
}

// ---------------------------------------------------------------------------
// Config access

inline json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw ConfigError("malformed config JSON: " + std::string(e.what()));
  }
  if (!cfg.is_object()) throw ConfigError("config root must be a JSON object");
  return cfg;
}

template <typename T>
T require(const json& cfg, const std::string& key) {
  if (!cfg.contains(key)) throw ConfigError("config is missing required key '" + key + "'");
  try {
    return cfg.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

template <typename T>
T value_or(const json& cfg, const std::string& key, T fallback) {
  if (!cfg.contains(key)) return fallback;
  try {
    return cfg.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

// A point: scalar (real), or [re, im].
inline cd parse_complex(const json& j, const std::string& what) {
  if (j.is_number()) return cd(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cd(j[0].get<double>(), j[1].get<double>());
  throw ConfigError(what + " must be a number or [re, im]");
}

inline CnPoint parse_cn_point(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2)
    throw ConfigError(what + " must be a two-entry array [z1, z2]");
  return {parse_complex(j[0], what + "[0]"), parse_complex(j[1], what + "[1]")};
}

// ---------------------------------------------------------------------------
// Domain descriptions: {"kind": "circle"|"ellipse"|"perturbed_circle"|"ball"|"egg", ...}

struct DomainSpec {
  std::string kind;
  json params;
  bool planar() const {
    return kind == "circle" || kind == "ellipse" || kind == "perturbed_circle";
  }
};

inline DomainSpec parse_domain(const json& cfg) {
  if (!cfg.contains("domain")) throw ConfigError("config is missing 'domain'");
  const json& d = cfg.at("domain");
  if (!d.is_object() || !d.contains("kind"))
    throw ConfigError("'domain' must be an object with a 'kind'");
  DomainSpec spec;
  spec.kind = d.at("kind").get<std::string>();
  spec.params = d;
  if (spec.kind != "circle" && spec.kind != "ellipse" && spec.kind != "perturbed_circle" &&
      spec.kind != "ball" && spec.kind != "egg")
    throw ConfigError("unknown domain kind '" + spec.kind + "'");
  return spec;
}

inline PlanarContour make_planar(const DomainSpec& spec, int N) {
  if (N < 4 || N % 2 != 0) throw ConfigError("N must be even and >= 4");
  try {
    if (spec.kind == "circle")
      return make_circle(N, value_or<double>(spec.params, "radius", 1.0));
    if (spec.kind == "ellipse")
      return make_ellipse(N, value_or<double>(spec.params, "a", 1.2),
                          value_or<double>(spec.params, "b", 1.0));
    if (spec.kind == "perturbed_circle")
      return make_perturbed_circle(N, value_or<double>(spec.params, "a", 0.1),
                                   value_or<int>(spec.params, "k", 3));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("domain '" + spec.kind + "' is not a planar contour");
}

inline DefiningDomain make_cn_domain(const DomainSpec& spec) {
  if (spec.kind == "ball") return make_ball(value_or<double>(spec.params, "radius", 1.0));
  if (spec.kind == "egg") return make_egg();
  throw ConfigError("domain '" + spec.kind + "' is not a C^2 domain");
}

// ---------------------------------------------------------------------------
// Test-function vocabulary
//
// Products of the factors
//   planar: 1 | z^p | conj(z)^p | exp(z)
//   C^2:    1 | z1^p | z2^p | conj(z1)^p | conj(z2)^p | exp(z1) | exp(z2)
// written e.g. "z1^2*conj(z2)" or "exp". Every oracle in the reproduction
// suites falls in this set; a general expression language is out of scope.

struct Factor {
  int var = 0;      // 0 or 1 (coordinate index; always 0 for planar)
  bool conj = false;
  bool expf = false;
  int power = 1;
};

struct Expression {
  std::string text;
  std::vector<Factor> factors;  // empty product = constant 1
  int nvars = 1;

  bool holomorphic() const {
    for (const auto& f : factors)
      if (f.conj) return false;
    return true;
  }

  cd eval(cd z1, cd z2 = 0.0) const {
    cd acc = 1.0;
    for (const auto& f : factors) {
      cd base = (f.var == 0) ? z1 : z2;
      if (f.conj) base = std::conj(base);
      if (f.expf)
        acc *= std::exp(base);
      else
        for (int p = 0; p < f.power; ++p) acc *= base;
    }
    return acc;
  }

  // d/d conj(z_var); product rule over the anti-holomorphic factors.
  cd dbar(int var, cd z1, cd z2 = 0.0) const {
    cd total = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      if (!f.conj || f.var != var || f.expf) continue;  // exp factors are holomorphic
      cd term = double(f.power);
      cd base = std::conj(f.var == 0 ? z1 : z2);
      for (int p = 0; p < f.power - 1; ++p) term *= base;
      for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j == i) continue;
        const auto& g = factors[j];
        cd b = (g.var == 0) ? z1 : z2;
        if (g.conj) b = std::conj(b);
        if (g.expf)
          term *= std::exp(b);
        else
          for (int p = 0; p < g.power; ++p) term *= b;
      }
      total += term;
    }
    return total;
  }
};

inline Expression parse_expression(std::string text, int nvars) {
  Expression e;
  e.text = text;
  e.nvars = nvars;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ConfigError("empty test-function expression");
  if (s == "1" || s == "const1") return e;

  auto parse_var = [&](const std::string& name) -> int {
    if (nvars == 1) {
      if (name == "z") return 0;
    } else {
      if (name == "z1") return 0;
      if (name == "z2") return 1;
    }
    throw ConfigError("unknown coordinate '" + name + "' in expression '" + text + "'");
  };

  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t star = s.find('*', pos);
    // '*' only separates factors; "z1*conj(z2)" never contains one inside a factor
    std::string tok = s.substr(pos, star == std::string::npos ? star : star - pos);
    pos = (star == std::string::npos) ? s.size() : star + 1;
    if (tok.empty()) throw ConfigError("empty factor in expression '" + text + "'");

    Factor f;
    std::string head = tok;
    std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      head = tok.substr(0, caret);
      const std::string ps = tok.substr(caret + 1);
      try {
        f.power = std::stoi(ps);
      } catch (...) {
        throw ConfigError("bad power '" + ps + "' in expression '" + text + "'");
      }
      if (f.power < 1) throw ConfigError("powers must be >= 1 in '" + text + "'");
    }
    if (head.rfind("exp(", 0) == 0 && head.back() == ')') {
      if (caret != std::string::npos)
        throw ConfigError("exp factors take no power in '" + text + "'");
      f.expf = true;
      f.var = parse_var(head.substr(4, head.size() - 5));
    } else if (head == "exp") {
      if (nvars != 1) throw ConfigError("bare 'exp' is planar; write exp(z1) or exp(z2)");
      f.expf = true;
      f.var = 0;
    } else if (head.rfind("conj(", 0) == 0 && head.back() == ')') {
      f.conj = true;
      f.var = parse_var(head.substr(5, head.size() - 6));
    } else {
      f.var = parse_var(head);
    }
    e.factors.push_back(f);
  }
  return e;
}

// ---------------------------------------------------------------------------
// Output

inline void write_text(const std::optional<std::string>& path, const std::string& body) {
  if (!path) {
    std::fputs(body.c_str(), stdout);
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open output file: " + *path);
  out << body;
}

// Common report envelope: every report embeds the config hash, the seed, and
// the tool version so identical configs produce byte-identical files.
inline void stamp(json& report, const json& cfg, unsigned long long seed) {
  report["config_hash"] = config_hash(cfg);
  report["seed"] = seed;
  report["version"] = kToolVersion;
}

}  // namespace repkern::cli
