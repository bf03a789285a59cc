// Copyright 2026 The aqc-gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aqc/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "aqc/errors.hpp"

namespace aqc {
namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) {
    return requested;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Mask clamp_bit(Domain domain, const HardClamp& c) {
  if (domain == Domain::binary) {
    if (c.value != 0 && c.value != 1) {
      throw std::invalid_argument("clamp on '" + c.var + "' must be 0 or 1");
    }
    return static_cast<Mask>(c.value);
  }
  if (c.value != 1 && c.value != -1) {
    throw std::invalid_argument("clamp on '" + c.var + "' must be -1 or +1");
  }
  return c.value > 0 ? 1 : 0;
}

struct Fixed {
  Mask mask = 0;
  Mask value = 0;
};

Fixed resolve_clamps(const std::vector<Var>& vars, Domain domain,
                     std::span<const HardClamp> clamps) {
  Fixed f;
  for (const auto& c : clamps) {
    auto it = std::find_if(vars.begin(), vars.end(), [&](const Var& v) { return v.name == c.var; });
    if (it == vars.end()) {
      throw MissingVariableError(c.var);
    }
    const auto bit = Mask{1} << (it - vars.begin());
    const Mask want = clamp_bit(domain, c) ? bit : 0;
    if ((f.mask & bit) && (f.value & bit) != want) {
      throw std::invalid_argument("conflicting clamps on '" + c.var + "'");
    }
    f.mask |= bit;
    f.value |= want;
  }
  return f;
}

/// Integer QUBO restricted to the free variables.
struct Reduced {
  std::vector<int> free;  // model index of each free variable
  std::vector<std::int64_t> lin;
  std::vector<std::int64_t> quad;  // dense, symmetric, n*n
  std::int64_t constant = 0;
  Rational scale = 1;

  std::int64_t q(std::size_t a, std::size_t b) const { return quad[a * free.size() + b]; }
};

std::int64_t checked(const Rational& r) {
  auto v = to_int64(r);
  if (!v || std::abs(*v) > (std::int64_t{1} << 52)) {
    throw SolverLimitError("coefficients too large for exhaustive enumeration");
  }
  return *v;
}

Reduced reduce(const QuboMatrix<Rational>& q, const Fixed& fixed) {
  const Eigen::Index n = q.size();
  std::vector<Rational> all;
  all.push_back(q.offset());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      all.push_back(q.upper()(i, j));
    }
  }
  Reduced r;
  r.scale = common_denominator(all);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!((fixed.mask >> i) & 1)) {
      r.free.push_back(static_cast<int>(i));
    }
  }
  const std::size_t m = r.free.size();
  r.lin.assign(m, 0);
  r.quad.assign(m * m, 0);
  auto on = [&](Eigen::Index i) { return ((fixed.value >> i) & 1) != 0; };
  Rational constant = q.offset();
  std::vector<Rational> lin(m, Rational(0));
  std::vector<int> slot(n, -1);
  for (std::size_t a = 0; a < m; ++a) {
    slot[r.free[a]] = static_cast<int>(a);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const Rational& c = q.upper()(i, j);
      if (c == 0) {
        continue;
      }
      const bool fi = slot[i] < 0;
      const bool fj = slot[j] < 0;
      if (i == j) {
        if (fi) {
          if (on(i)) constant += c;
        } else {
          lin[slot[i]] += c;
        }
      } else if (fi && fj) {
        if (on(i) && on(j)) constant += c;
      } else if (fi) {
        if (on(i)) lin[slot[j]] += c;
      } else if (fj) {
        if (on(j)) lin[slot[i]] += c;
      } else {
        const auto v = checked(c * r.scale);
        r.quad[slot[i] * m + slot[j]] = v;
        r.quad[slot[j] * m + slot[i]] = v;
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    r.lin[a] = checked(lin[a] * r.scale);
  }
  r.constant = checked(constant * r.scale);
  return r;
}

struct Chunk {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Mask> states;  // over free-variable slots
  std::uint64_t visited = 0;
};

/// Gray-code walk over the low `low` free bits with the high bits fixed to `prefix`.
void walk(const Reduced& r, std::size_t low, Mask prefix, Chunk& out) {
  const std::size_t m = r.free.size();
  Mask x = prefix << low;
  std::vector<std::int64_t> field(m);
  std::int64_t e = r.constant;
  for (std::size_t a = 0; a < m; ++a) {
    field[a] = r.lin[a];
    for (std::size_t b = 0; b < m; ++b) {
      if (b != a && ((x >> b) & 1)) {
        field[a] += r.q(a, b);
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if ((x >> a) & 1) {
      e += r.lin[a];
      for (std::size_t b = a + 1; b < m; ++b) {
        if ((x >> b) & 1) {
          e += r.q(a, b);
        }
      }
    }
  }
  auto record = [&] {
    ++out.visited;
    if (e < out.best) {
      out.best = e;
      out.states.clear();
    }
    if (e == out.best) {
      out.states.push_back(x);
    }
  };
  record();
  const Mask steps = Mask{1} << low;
  for (Mask k = 1; k < steps; ++k) {
    const auto b = static_cast<std::size_t>(std::countr_zero(k));
    const bool was = (x >> b) & 1;
    e += was ? -field[b] : field[b];
    x ^= Mask{1} << b;
    const std::int64_t sign = was ? -1 : 1;
    for (std::size_t g = 0; g < m; ++g) {
      if (g != b) {
        field[g] += sign * r.q(b, g);
      }
    }
    record();
  }
}

SolveResult exhaustive_core(const QuboMatrix<Rational>& q, Domain domain, const Fixed& fixed,
                            const SolveOptions& opts) {
  const std::size_t limit = opts.max_free_vars ? opts.max_free_vars : exhaustive_limit();
  const auto free_count = static_cast<std::size_t>(q.size() - std::popcount(fixed.mask));
  if (free_count > limit || free_count > 62) {
    throw SolverLimitError(std::to_string(free_count) + " free variables exceed the exhaustive "
                           "limit of " + std::to_string(limit) + "; use annealing instead");
  }
  const Reduced r = reduce(q, fixed);
  const std::size_t m = r.free.size();
  const unsigned threads = resolve_threads(opts.threads);
  std::size_t high = 0;
  while (high < m && high < 8 && (Mask{1} << high) < threads * 4ull && m - high > 10) {
    ++high;
  }
  const std::size_t low = m - high;
  const std::size_t chunks = std::size_t{1} << high;
  std::vector<Chunk> parts(chunks);
  {
    std::vector<std::jthread> pool;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) {
          walk(r, low, c, parts[c]);
        }
      });
    }
  }
  SolveResult res;
  res.vars = q.vars();
  res.domain = domain;
  res.method = "exhaustive";
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& p : parts) {
    res.states_visited += p.visited;
    best = std::min(best, p.best);
  }
  for (const auto& p : parts) {
    if (p.best != best) {
      continue;
    }
    for (Mask s : p.states) {
      Mask full = fixed.value;
      for (std::size_t a = 0; a < m; ++a) {
        if ((s >> a) & 1) {
          full |= Mask{1} << r.free[a];
        }
      }
      res.ground_states.push_back(full);
    }
  }
  std::sort(res.ground_states.begin(), res.ground_states.end());
  res.ground_value = Rational(best) / r.scale;
  return res;
}

}  // namespace

std::size_t exhaustive_limit() {
  if (const char* env = std::getenv("AQC_EXHAUSTIVE_LIMIT")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return v;
    }
  }
  return 24;
}

int SolveResult::value(std::size_t k, std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].name == name) {
      const bool on = (ground_states.at(k) >> i) & 1;
      return domain == Domain::binary ? (on ? 1 : 0) : (on ? 1 : -1);
    }
  }
  throw MissingVariableError(std::string(name));
}

std::size_t SolveResult::hits(const Rational& target) const {
  return static_cast<std::size_t>(
      std::count(restart_values.begin(), restart_values.end(), target));
}

std::string SolveResult::report(const ModelInfo& info) const {
  std::ostringstream os;
  os << "method: " << method << '\n';
  os << "ground value: " << to_string(ground_value) << '\n';
  os << "ground states: " << ground_states.size() << '\n';
  for (std::size_t k = 0; k < ground_states.size(); ++k) {
    os << " ";
    for (const auto& v : vars) {
      os << ' ' << v.name;
      auto it = info.roles.find(v.name);
      if (it != info.roles.end()) {
        os << '(' << it->second << ')';
      }
      os << '=' << value(k, v.name);
    }
    os << '\n';
  }
  if (method == "exhaustive") {
    os << "states visited: " << states_visited << '\n';
  } else {
    os << "sweeps: " << sweeps << '\n';
    os << "restarts: " << restart_values.size() << ", reaching best: " << hits(ground_value)
       << '\n';
  }
  return os.str();
}

SolveResult solve_exhaustive(const QuboMatrix<Rational>& q, std::span<const HardClamp> clamps,
                             const SolveOptions& opts) {
  return exhaustive_core(q, Domain::binary, resolve_clamps(q.vars(), Domain::binary, clamps), opts);
}

SolveResult solve_exhaustive(const IsingModel<Rational>& m, std::span<const HardClamp> clamps,
                             const SolveOptions& opts) {
  // Bit i set is x_i = 1 is s_i = +1, and the two energies coincide.
  return exhaustive_core(ising_to_qubo(m), Domain::spin,
                         resolve_clamps(m.vars(), Domain::spin, clamps), opts);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double AnnealParams::temperature(std::size_t k) const {
  const double frac = static_cast<double>(k + 1) / static_cast<double>(sweeps);
  return t_initial * std::pow(t_final / t_initial, frac);
}

void AnnealParams::validate() const {
  if (sweeps == 0 || restarts == 0) {
    throw std::invalid_argument("annealing needs at least one sweep and one restart");
  }
  if (!(t_final > 0.0) || !(t_initial > t_final)) {
    throw std::invalid_argument("temperatures must satisfy t_initial > t_final > 0");
  }
}

SolveResult solve_anneal(const IsingModel<Rational>& m, std::span<const HardClamp> clamps,
                         const AnnealParams& params) {
  params.validate();
  const Fixed fixed = resolve_clamps(m.vars(), Domain::spin, clamps);
  const auto n = static_cast<std::size_t>(m.size());
  if (n > 64) {
    throw SolverLimitError("annealer supports at most 64 variables");
  }
  std::vector<double> h(n);
  std::vector<double> J(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = m.h()(i).convert_to<double>();
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = m.J()(i, j).convert_to<double>();
      J[i * n + j] = c;
      J[j * n + i] = c;
    }
  }
  std::vector<std::size_t> movable;
  for (std::size_t i = 0; i < n; ++i) {
    if (!((fixed.mask >> i) & 1)) {
      movable.push_back(i);
    }
  }

  std::vector<Mask> finals(params.restarts);
  auto run = [&](std::size_t restart) {
    std::mt19937_64 rng(splitmix64(params.seed ^ splitmix64(restart)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = ((fixed.mask >> i) & 1) ? (((fixed.value >> i) & 1) ? 1 : -1)
                                     : ((rng() & 1) ? 1 : -1);
    }
    auto local = [&](std::size_t i) {
      double f = h[i];
      for (std::size_t j = 0; j < n; ++j) {
        f += J[i * n + j] * s[j];
      }
      return f;
    };
    for (std::size_t k = 0; k < params.sweeps; ++k) {
      const double beta = 1.0 / params.temperature(k);
      for (std::size_t i : movable) {
        const double delta = -2.0 * s[i] * local(i);
        if (delta <= 0.0 || unit(rng) < std::exp(-beta * delta)) {
          s[i] = -s[i];
        }
      }
    }
    // Zero-temperature quench so each restart ends in a local minimum.
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i : movable) {
        if (-2.0 * s[i] * local(i) < 0.0) {
          s[i] = -s[i];
          moved = true;
        }
      }
    }
    Mask x = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] > 0) {
        x |= Mask{1} << i;
      }
    }
    finals[restart] = x;
  };
  {
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(resolve_threads(params.threads), params.restarts));
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < params.restarts; r += workers) {
          run(r);
        }
      });
    }
  }

  SolveResult res;
  res.vars = m.vars();
  res.domain = Domain::spin;
  res.method = "anneal";
  res.sweeps = params.sweeps;
  res.states_visited = params.sweeps * params.restarts * movable.size();
  std::set<Mask> best;
  for (std::size_t r = 0; r < params.restarts; ++r) {
    Rational e = m.energy(finals[r]);
    if (r == 0 || e < res.ground_value) {
      res.ground_value = e;
      best.clear();
    }
    if (e == res.ground_value) {
      best.insert(finals[r]);
    }
    res.restart_values.push_back(std::move(e));
  }
  res.ground_states.assign(best.begin(), best.end());
  return res;
}

SolveResult solve_anneal(const QuboMatrix<Rational>& q, std::span<const HardClamp> clamps,
                         const AnnealParams& params) {
  std::vector<HardClamp> spins(clamps.begin(), clamps.end());
  for (auto& c : spins) {
    c.value = clamp_bit(Domain::binary, c) ? 1 : -1;
  }
  SolveResult res = solve_anneal(qubo_to_ising(q), spins, params);
  res.domain = Domain::binary;
  return res;
}

}  // namespace aqc
