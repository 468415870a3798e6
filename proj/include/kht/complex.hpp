#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kht/diagram.hpp"
#include "kht/field.hpp"
#include "kht/resolution.hpp"
#include "kht/sparse.hpp"

namespace kht {

/// Labels for the circle algebra: deg(one) = +1, deg(X) = -1. Every arc of a
/// resolved state carries the single generator w of degree -1.
enum : uint8_t { kLabelOne = 0, kLabelX = 1 };

/// A basis element of the cochain complex: a state plus a label for each
/// circle of its resolution, in circle discovery order.
struct GeneratorLabel {
  State state;
  std::vector<uint8_t> circle_labels;
  int theta = 0;  // (#one) - (#X) - (#arcs)
};

/// k = ell(s) - n_minus: the cube height shifted so homology classes carry
/// their final homological grading.
int homological_degree(const State& s, int n_minus);

/// q = k + n_plus - n_minus + theta.
int quantum_degree(int k, int n_plus, int n_minus, int theta);

int theta_of(const std::vector<uint8_t>& circle_labels, int arc_count);

/// One summand C^{k,q} with its outgoing differential d^{k,q}: C^{k,q} ->
/// C^{k+1,q}. A missing target block means the differential is the zero map
/// to a zero space (rows() == 0).
template <class F>
struct ComplexBlock {
  std::vector<GeneratorLabel> basis;
  SparseMatrix<F> d;

  long long dim() const { return static_cast<long long>(basis.size()); }
};

template <class F>
struct BigradedComplex {
  int n_plus = 0;
  int n_minus = 0;
  std::map<std::pair<int, int>, ComplexBlock<F>> blocks;  // key (k, q)

  long long total_dim() const {
    long long t = 0;
    for (const auto& [k, b] : blocks) t += b.dim();
    return t;
  }
};

/// One term of a saddle image: target circle labels and an unsigned
/// coefficient (the cube edge sign is applied separately).
struct SaddleTerm {
  std::vector<uint8_t> target_labels;
  int coeff = 1;
};

/// Applies the saddle map at crossing i (s.bits[i] == 0) to a generator
/// fragment given by the source circle labels:
///   merge of two circles: one*one -> one, one*X = X*one -> X, X*X -> 0
///   split of a circle:    one -> one(x)X + X(x)one, X -> X(x)X
///   circle merging into an arc: one -> (drop), X -> 0
///   circle splitting off an arc: new circle labeled X
///   two arcs reconnecting: everything -> 0
/// Labels of untouched circles are carried across.
std::vector<SaddleTerm> apply_saddle(const TangleDiagram& d, int i,
                                     const ResolvedDiagram& src,
                                     const ResolvedDiagram& tgt,
                                     const std::vector<uint8_t>& labels);

/// Builds the full bigraded complex over all 2^n states. The cube edge from
/// s to s+e_i carries the sign (-1)^(number of 1-bits of s before i). Basis
/// order inside each block: states ascending, then label words ascending
/// with one < X. Throws CapError when the diagram has more than
/// `max_crossings` crossings.
template <class F>
BigradedComplex<F> build_complex(const TangleDiagram& d, int max_crossings = 16);

/// JSON dump: per (k,q) block the dimension and differential triplets.
template <class F>
std::string complex_to_json(const BigradedComplex<F>& cx);

// --- implementation ---

namespace detail_complex {

/// Position of each generator of one state: block key and ordinal.
struct GenSlot {
  std::pair<int, int> key;
  int ordinal;
};

int match_uninvolved_circle(const ResolvedDiagram& src, const ResolvedDiagram& tgt,
                            int src_circle);

}  // namespace detail_complex

template <class F>
BigradedComplex<F> build_complex(const TangleDiagram& d, int max_crossings) {
  const int n = d.crossing_count();
  if (n > max_crossings)
    throw CapError("diagram has " + std::to_string(n) +
                   " crossings, cap is " + std::to_string(max_crossings));
  validate(d);

  auto [n_plus, n_minus] = crossing_counts(d);
  BigradedComplex<F> cx;
  cx.n_plus = n_plus;
  cx.n_minus = n_minus;

  const uint64_t nstates = uint64_t(1) << n;
  std::vector<ResolvedDiagram> res;
  res.reserve(nstates);
  for (uint64_t m = 0; m < nstates; ++m)
    res.push_back(resolve(d, state_from_index(n, m)));

  const int arcs = d.boundary_count() / 2;
  std::vector<std::vector<detail_complex::GenSlot>> slots(nstates);
  for (uint64_t m = 0; m < nstates; ++m) {
    State s = state_from_index(n, m);
    const int k = homological_degree(s, n_minus);
    const int c = res[m].circle_count;
    slots[m].resize(uint64_t(1) << c);
    for (uint64_t a = 0; a < (uint64_t(1) << c); ++a) {
      GeneratorLabel g;
      g.state = s;
      g.circle_labels.resize(c);
      for (int j = 0; j < c; ++j) g.circle_labels[j] = (a >> (c - 1 - j)) & 1;
      g.theta = theta_of(g.circle_labels, arcs);
      std::pair<int, int> key{k, quantum_degree(k, n_plus, n_minus, g.theta)};
      auto& block = cx.blocks[key];
      slots[m][a] = {key, static_cast<int>(block.basis.size())};
      block.basis.push_back(std::move(g));
    }
  }

  // size the differentials before filling them
  for (auto& [key, block] : cx.blocks) {
    auto up = cx.blocks.find({key.first + 1, key.second});
    int rows = up == cx.blocks.end() ? 0 : static_cast<int>(up->second.dim());
    block.d = SparseMatrix<F>(rows, static_cast<int>(block.dim()));
  }

  for (uint64_t m = 0; m < nstates; ++m) {
    for (int i = 0; i < n; ++i) {
      uint64_t bit = uint64_t(1) << (n - 1 - i);
      if (m & bit) continue;
      uint64_t t = m | bit;
      // (-1)^(number of 1-bits before position i)
      int ones_before = __builtin_popcountll(m >> (n - i));
      long long sign = (ones_before % 2 == 0) ? 1 : -1;
      const int tc = res[t].circle_count;
      for (size_t a = 0; a < slots[m].size(); ++a) {
        const auto& src_slot = slots[m][a];
        const auto& labels =
            cx.blocks[src_slot.key].basis[src_slot.ordinal].circle_labels;
        auto terms = apply_saddle(d, i, res[m], res[t], labels);
        for (const SaddleTerm& term : terms) {
          uint64_t ta = 0;
          for (int j = 0; j < tc; ++j)
            ta = (ta << 1) | term.target_labels[j];
          const auto& tgt_slot = slots[t][ta];
          if (tgt_slot.key != std::pair<int, int>{src_slot.key.first + 1,
                                                  src_slot.key.second})
            throw GeometryError("saddle image does not preserve the quantum degree");
          cx.blocks[src_slot.key].d.add(
              tgt_slot.ordinal, src_slot.ordinal,
              scalar_from_int<F>(sign * term.coeff));
        }
      }
    }
  }
  return cx;
}

}  // namespace kht
