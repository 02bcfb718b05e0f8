#include "erec/lfp/fixpoint.hpp"

#include <random>

namespace erec {

namespace {

AtomSet checked_step(const MonotoneOperator& op, const AtomSet& x) {
  AtomSet y = op.step(x);
  if (y.size() != op.bound) {
    throw std::invalid_argument(op.name + ": step returned a set of the wrong size");
  }
  return y;
}

std::string atom_text(const MonotoneOperator& op, std::size_t a) {
  return op.describe ? op.describe(a) : std::to_string(a);
}

}  // namespace

std::string probe_monotone(const MonotoneOperator& op, std::size_t probes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < probes; ++i) {
    double dy = unit(rng);
    double dx = unit(rng);
    AtomSet y(op.bound), x(op.bound);
    for (std::size_t a = 0; a < op.bound; ++a) {
      if (unit(rng) < dy) {
        y.set(a);
        if (unit(rng) < dx) x.set(a);
      }
    }
    AtomSet sx = checked_step(op, x);
    AtomSet sy = checked_step(op, y);
    if (!sx.is_subset_of(sy)) {
      AtomSet extra = sx - sy;
      return op.name + ": step(X) has " + atom_text(op, extra.find_first()) + " but step(Y) does not, X <= Y";
    }
  }
  return {};
}

FixpointResult iterate(const MonotoneOperator& op, IterateOptions opts) {
  if (!op.step) throw std::invalid_argument(op.name + ": no step function");
  if (opts.probes > 0) {
    if (auto bad = probe_monotone(op, opts.probes, opts.seed); !bad.empty()) throw NonMonotoneDetected(bad);
  }
  FixpointResult r;
  r.stages.emplace_back(op.bound);
  // A monotone operator on a finite carrier closes within bound + 1 steps.
  for (std::size_t i = 0; i <= op.bound; ++i) {
    AtomSet next = checked_step(op, r.stages.back());
    if (!r.stages.back().is_subset_of(next)) {
      AtomSet lost = r.stages.back() - next;
      throw NonMonotoneDetected(op.name + ": stage " + std::to_string(i + 1) + " drops " +
                                atom_text(op, lost.find_first()));
    }
    if (next == r.stages.back()) {
      r.lfp = next;
      r.closure_stage = i;
      return r;
    }
    r.stages.push_back(std::move(next));
  }
  throw NonMonotoneDetected(op.name + ": no fixed point within the carrier size");
}

bool is_prefixed(const MonotoneOperator& op, const AtomSet& f) { return checked_step(op, f).is_subset_of(f); }

AtomSet atom_set(std::size_t bound, std::initializer_list<std::size_t> atoms) {
  AtomSet s(bound);
  for (auto a : atoms) s.set(a);
  return s;
}

std::vector<std::size_t> atoms_of(const AtomSet& s) {
  std::vector<std::size_t> out;
  for (auto a = s.find_first(); a != AtomSet::npos; a = s.find_next(a)) out.push_back(a);
  return out;
}

std::string dump_stages(const MonotoneOperator& op, const FixpointResult& r, std::size_t per_stage_limit) {
  std::string out = "operator " + op.name + " carrier " + std::to_string(op.bound) + " closure-stage " +
                    std::to_string(r.closure_stage) + " lfp-size " + std::to_string(r.lfp.count()) + "\n";
  for (std::size_t i = 1; i < r.stages.size(); ++i) {
    AtomSet fresh = r.stages[i] - r.stages[i - 1];
    out += "stage " + std::to_string(i) + " +" + std::to_string(fresh.count()) + ":";
    std::size_t shown = 0;
    for (auto a = fresh.find_first(); a != AtomSet::npos; a = fresh.find_next(a)) {
      if (shown++ == per_stage_limit) {
        out += " ...";
        break;
      }
      out += " " + atom_text(op, a);
    }
    out += "\n";
  }
  return out;
}

}  // namespace erec
