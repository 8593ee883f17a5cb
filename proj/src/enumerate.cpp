#include "wrlat/enumerate.hpp"

#include <algorithm>

#include "wrlat/errors.hpp"

namespace wrlat {

namespace {

// Depth-first Fincke-Pohst traversal in Schnorr-Euchner (zig-zag) order.
// With Q = L D L^T and w_i = v_i + sum_{j>i} L_ji v_j, the form value is
// sum_i D_i w_i^2, so levels run from n-1 down to 0 and every range check
// is an exact rational comparison.  While the higher coordinates are all
// zero, only v_i >= 0 is visited: that picks one representative per +-pair.
class Enumerator {
 public:
  Enumerator(const RatMatrix& lower, const std::vector<Rat>& diag, Rat bound,
             bool shrink_to_min)
      : lower_(lower),
        diag_(diag),
        n_(static_cast<int>(diag.size())),
        bound_(std::move(bound)),
        shrink_(shrink_to_min),
        v_(n_, Int(0)) {}

  std::vector<ShortVector> run() {
    if (bound_ > 0) descend(n_ - 1, Rat(0), true);
    return std::move(hits_);
  }

 private:
  void descend(int level, const Rat& used, bool prefix_zero) {
    if (level < 0) {
      if (prefix_zero) return;  // the zero vector
      record(used);
      return;
    }
    Rat center = 0;  // w_level = v_level + center
    for (int j = level + 1; j < n_; ++j) {
      if (v_[j] == 0) continue;
      center += lower_(j, level) * v_[j];
    }

    if (prefix_zero) {
      // center is 0 here; walk 0, 1, 2, ... until the budget is exceeded.
      for (Int x = 0;; ++x) {
        if (!try_branch(level, used, center, x, prefix_zero && x == 0)) break;
      }
      return;
    }

    // Zig-zag around the real center -center.
    Int first = floor_rat(Rat(1, 2) - center);  // nearest integer to -center
    Int up = first, down = first - 1;
    bool up_alive = true, down_alive = true, take_up = true;
    while (up_alive || down_alive) {
      if (up_alive && (take_up || !down_alive)) {
        up_alive = try_branch(level, used, center, up, false);
        ++up;
        take_up = false;
      } else {
        down_alive = try_branch(level, used, center, down, false);
        --down;
        take_up = true;
      }
    }
  }

  // Returns false when the step cost alone exceeds the remaining budget,
  // which kills the whole direction.
  bool try_branch(int level, const Rat& used, const Rat& center, const Int& x,
                  bool still_zero) {
    Rat w = Rat(x) + center;
    Rat next = used + diag_[level] * w * w;
    if (next > bound_) return false;
    v_[level] = x;
    descend(level - 1, next, still_zero);
    v_[level] = 0;
    return true;
  }

  void record(const Rat& value) {
    if (shrink_ && value < bound_) {
      bound_ = value;
      std::erase_if(hits_, [&](const ShortVector& h) { return h.value_sq > bound_; });
    }
    hits_.push_back({canonical_sign(v_), value});
  }

  const RatMatrix& lower_;
  const std::vector<Rat>& diag_;
  int n_;
  Rat bound_;
  bool shrink_;
  IntVec v_;
  std::vector<ShortVector> hits_;
};

void sort_hits(std::vector<ShortVector>& hits) {
  std::sort(hits.begin(), hits.end(), [](const ShortVector& a, const ShortVector& b) {
    int c = cmp(a.value_sq, b.value_sq);
    if (c != 0) return c < 0;
    return output_lex_less(a.v, b.v);
  });
}

std::vector<ShortVector> enumerate_raw(const SymForm& form, const Rat& bound_sq,
                                       bool shrink_to_min) {
  Enumerator e(form.ldlt_lower(), form.ldlt_diag(), bound_sq, shrink_to_min);
  std::vector<ShortVector> hits = e.run();
  sort_hits(hits);
  return hits;
}

std::vector<ShortVector> enumerate_dispatch(const SymForm& form, const Rat& bound_sq,
                                            bool shrink_to_min,
                                            const EnumOptions& options) {
  if (!options.reduce_first) return enumerate_raw(form, bound_sq, shrink_to_min);
  RatMatrix u = reduce_unimodular(form);
  SymForm reduced = SymForm::from_matrix(u.transposed() * form.to_matrix() * u);
  std::vector<ShortVector> hits = enumerate_raw(reduced, bound_sq, shrink_to_min);
  for (ShortVector& h : hits) h.v = canonical_sign(apply_unimodular(u, h.v));
  sort_hits(hits);
  return hits;
}

}  // namespace

std::vector<ShortVector> enumerate_short(const SymForm& form, const Rat& bound_sq,
                                         const EnumOptions& options) {
  if (bound_sq <= 0) throw OutOfRange("short-vector bound must be positive");
  return enumerate_dispatch(form, bound_sq, false, options);
}

MinimalVectorData minimal_vectors(const SymForm& form, const EnumOptions& options) {
  Rat bound = form(0, 0);
  for (int i = 1; i < form.dim(); ++i) bound = std::min(bound, form(i, i));
  std::vector<ShortVector> hits = enumerate_dispatch(form, bound, true, options);
  // The coordinate vectors realize the initial bound, so hits is nonempty.
  const Rat& best = hits.front().value_sq;
  MinimalVectorData out;
  out.systole_sq = best;
  for (const ShortVector& h : hits) {
    if (h.value_sq != best) break;
    out.vectors.push_back(h.v);
  }
  return out;
}

RatMatrix reduce_unimodular(const SymForm& form) {
  const int n = form.dim();
  RatMatrix g = form.to_matrix();
  RatMatrix u = RatMatrix::identity(n);

  // Gram-Schmidt data straight from the inner-product matrix g.
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
  std::vector<Rat> bstar(n);
  auto gram_schmidt = [&]() {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        Rat s = g(i, j);
        for (int k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * bstar[k];
        mu[i][j] = s / bstar[j];
      }
      Rat b = g(i, i);
      for (int k = 0; k < i; ++k) b -= mu[i][k] * mu[i][k] * bstar[k];
      bstar[i] = b;
    }
  };

  // Column operation b_k <- b_k - q b_j applied to g and u.
  auto translate = [&](int k, int j, const Int& q) {
    for (int i = 0; i < n; ++i) u(i, k) -= q * u(i, j);
    Rat gkk = g(k, k) - 2 * q * g(k, j) + q * q * g(j, j);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      g(k, i) -= q * g(j, i);
      g(i, k) = g(k, i);
    }
    g(k, k) = gkk;
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < n; ++i) std::swap(u(i, a), u(i, b));
    for (int i = 0; i < n; ++i) std::swap(g(a, i), g(b, i));
    for (int i = 0; i < n; ++i) std::swap(g(i, a), g(i, b));
  };

  const Rat delta(99, 100);
  gram_schmidt();
  int k = 1;
  while (k < n) {
    for (int j = k - 1; j >= 0; --j) {
      Int q = floor_rat(mu[k][j] + Rat(1, 2));
      if (q != 0) {
        translate(k, j, q);
        gram_schmidt();
      }
    }
    if (bstar[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      ++k;
    } else {
      swap_cols(k, k - 1);
      gram_schmidt();
      k = std::max(k - 1, 1);
    }
  }
  return u;
}

IntVec apply_unimodular(const RatMatrix& u, const IntVec& v) {
  IntVec out(u.rows(), Int(0));
  for (int i = 0; i < u.rows(); ++i) {
    Rat s = 0;
    for (int j = 0; j < u.cols(); ++j) {
      if (v[j] == 0) continue;
      s += u(i, j) * v[j];
    }
    out[i] = s.get_num();  // unimodular matrices stay integral
  }
  return out;
}

}  // namespace wrlat
