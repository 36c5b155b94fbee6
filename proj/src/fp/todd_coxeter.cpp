#include "qplab/fp/todd_coxeter.hpp"

#include <algorithm>

#include "qplab/errors.hpp"

namespace qplab::fp {

int CosetTable::act(int coset, const Word& w) const {
  for (int l : w) coset = act(coset, l);
  return coset;
}

std::vector<Word> CosetTable::transversal() const {
  std::vector<Word> rep(ncosets);
  std::vector<char> seen(ncosets, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int c = queue[h];
    for (int g = 0; g < ngens; ++g) {
      for (int l : {g + 1, -(g + 1)}) {
        int d = act(c, l);
        if (!seen[d]) {
          seen[d] = 1;
          rep[d] = rep[c];
          rep[d].push_back(l);
          queue.push_back(d);
        }
      }
    }
  }
  return rep;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, int max_live)
      : ncols_(2 * p.ngens()), max_live_(max_live), rels_(p.relators) {
    phys_cap_ = std::min<std::int64_t>(std::max<std::int64_t>(4LL * max_live, 4096), 4LL * kHardCosetCap);
    new_row();
  }

  static int col(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

  CosetTable run(const std::vector<Word>& subgroup, EnumerationStats* stats) {
    for (const auto& w : subgroup) scan_and_fill(0, w);
    for (int alpha = 0; alpha < static_cast<int>(parent_.size()); ++alpha) {
      if (static_cast<std::int64_t>(parent_.size()) >= phys_cap_) alpha = compact(alpha);
      if (alpha >= static_cast<int>(parent_.size())) break;
      for (std::size_t r = 0; r < rels_.size() && live(alpha); ++r) scan_and_fill(alpha, rels_[r]);
      if (!live(alpha)) continue;
      for (int x = 0; x < ncols_ && live(alpha); ++x)
        if (at(alpha, x) < 0) define(alpha, x);
    }
    if (stats) {
      stats->defined = defined_;
      stats->max_live = max_seen_;
      stats->lookaheads = lookaheads_;
    }
    return standardize(subgroup);
  }

 private:
  int ncols_;
  int max_live_;
  std::int64_t phys_cap_;
  const std::vector<Word>& rels_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<int> queue_;
  std::int64_t live_count_ = 0;
  std::int64_t defined_ = 0;
  std::int64_t max_seen_ = 0;
  int lookaheads_ = 0;

  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }
  bool live(int c) const { return parent_[c] == c; }

  int new_row() {
    int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + ncols_, -1);
    ++live_count_;
    max_seen_ = std::max(max_seen_, live_count_);
    return c;
  }

  int find(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int n = parent_[c];
      parent_[c] = r;
      c = n;
    }
    return r;
  }

  void define(int c, int x) {
    if (live_count_ >= max_live_) {
      lookahead();
      if (!live(c)) return;
      if (live_count_ >= max_live_)
        throw Error(ErrorCode::CosetLimitExceeded,
                    "coset enumeration exceeded " + std::to_string(max_live_) + " live cosets");
    }
    int d = new_row();
    ++defined_;
    at(c, x) = d;
    at(d, x ^ 1) = c;
  }

  void scan_and_fill(int alpha, const Word& w) {
    if (w.empty()) return;
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, col(w[i])) >= 0) {
        f = at(f, col(w[i]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, col(w[j]) ^ 1) >= 0) {
        b = at(b, col(w[j]) ^ 1);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, col(w[i])) = b;
        at(b, col(w[i]) ^ 1) = f;
        return;
      }
      const int la = lookaheads_;
      define(f, col(w[i]));
      if (lookaheads_ != la) {
        // a lookahead may have merged cosets on this path; rescan
        if (!live(alpha)) return;
        f = b = alpha;
        i = 0;
        j = static_cast<int>(w.size()) - 1;
      }
    }
  }

  // Scan without defining; records deductions and coincidences.
  void scan(int alpha, const Word& w) {
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (i <= j && at(f, col(w[i])) >= 0) {
      f = at(f, col(w[i]));
      ++i;
    }
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && at(b, col(w[j]) ^ 1) >= 0) {
      b = at(b, col(w[j]) ^ 1);
      --j;
    }
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      at(f, col(w[i])) = b;
      at(b, col(w[i]) ^ 1) = f;
    }
  }

  void lookahead() {
    ++lookaheads_;
    for (int beta = 0; beta < static_cast<int>(parent_.size()); ++beta) {
      for (std::size_t r = 0; r < rels_.size() && live(beta); ++r) scan(beta, rels_[r]);
    }
  }

  void merge(int k, int l) {
    int a = find(k), b = find(l);
    if (a == b) return;
    int lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    --live_count_;
    queue_.push_back(hi);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      int g = queue_[i];
      for (int x = 0; x < ncols_; ++x) {
        int d = at(g, x);
        if (d < 0) continue;
        if (at(d, x ^ 1) == g) at(d, x ^ 1) = -1;
        int mu = find(g), nu = find(d);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x));
        } else if (at(nu, x ^ 1) >= 0) {
          merge(mu, at(nu, x ^ 1));
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
        }
      }
    }
    queue_.clear();
  }

  // Renumber live cosets consecutively, preserving order; returns the new
  // index of the first live coset at or after alpha.
  int compact(int alpha) {
    std::vector<int> newidx(parent_.size(), -1);
    int n = 0;
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c)
      if (live(c)) newidx[c] = n++;
    std::vector<int> nt(static_cast<std::size_t>(n) * ncols_, -1);
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < ncols_; ++x) {
        int d = at(c, x);
        if (d >= 0) nt[static_cast<std::size_t>(newidx[c]) * ncols_ + x] = newidx[find(d)];
      }
    }
    int a = alpha;
    while (a < static_cast<int>(parent_.size()) && !live(a)) ++a;
    int remapped = a < static_cast<int>(parent_.size()) ? newidx[a] : n;
    table_ = std::move(nt);
    parent_.resize(n);
    for (int c = 0; c < n; ++c) parent_[c] = c;
    if (static_cast<std::int64_t>(n) * 2 > phys_cap_) phys_cap_ = std::min<std::int64_t>(phys_cap_ * 2, 8LL * kHardCosetCap);
    return remapped;
  }

  CosetTable standardize(const std::vector<Word>& subgroup) {
    const int ng = ncols_ / 2;
    std::vector<int> order;
    std::vector<int> newidx(parent_.size(), -1);
    order.push_back(0);
    newidx[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
      int c = order[h];
      for (int x = 0; x < ncols_; ++x) {
        int d = at(c, x);
        if (d < 0) throw Error(ErrorCode::Internal, "incomplete coset table after enumeration");
        d = find(d);
        if (newidx[d] < 0) {
          newidx[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    CosetTable t;
    t.ncosets = static_cast<int>(order.size());
    t.ngens = ng;
    t.subgroup_words = subgroup;
    t.action.assign(ng, std::vector<int>(t.ncosets));
    t.inv_action.assign(ng, std::vector<int>(t.ncosets));
    for (int i = 0; i < t.ncosets; ++i) {
      int c = order[i];
      for (int g = 0; g < ng; ++g) {
        t.action[g][i] = newidx[find(at(c, 2 * g))];
        t.inv_action[g][i] = newidx[find(at(c, 2 * g + 1))];
      }
    }
    return t;
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words, int max_cosets,
                        EnumerationStats* stats) {
  if (max_cosets < 1) throw Error(ErrorCode::InvalidArgument, "max_cosets must be positive");
  max_cosets = std::min(max_cosets, kHardCosetCap);
  std::vector<Word> sub;
  for (const auto& w : subgroup_words) sub.push_back(free_reduce(w));
  Enumerator e(p, max_cosets);
  CosetTable t = e.run(sub, stats);
  if (!verify_coset_table(p, t)) throw Error(ErrorCode::Internal, "coset table failed post-hoc verification");
  return t;
}

bool verify_coset_table(const Presentation& p, const CosetTable& t) {
  for (int g = 0; g < t.ngens; ++g)
    for (int c = 0; c < t.ncosets; ++c)
      if (t.inv_action[g][t.action[g][c]] != c) return false;
  for (const auto& r : p.relators)
    for (int c = 0; c < t.ncosets; ++c)
      if (t.act(c, r) != c) return false;
  for (const auto& w : t.subgroup_words)
    if (t.act(0, w) != 0) return false;
  return true;
}

groups::FiniteGroup cayley_from_presentation(const Presentation& p, int max_cosets) {
  CosetTable t = todd_coxeter(p, {}, max_cosets);
  const int n = t.ncosets;
  auto reps = t.transversal();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = t.act(i, reps[j]);
  std::map<std::string, int> dist;
  for (int g = 0; g < p.ngens(); ++g) dist[p.gen_names[g]] = t.action[g][0];
  return groups::FiniteGroup(n, std::move(table), {}, std::move(dist));
}

bool is_normal_finite_index(const Presentation& p, const CosetTable& t) {
  (void)p;
  for (const auto& w : t.subgroup_words)
    for (int c = 0; c < t.ncosets; ++c)
      if (t.act(c, w) != c) return false;
  return true;
}

}  // namespace qplab::fp
