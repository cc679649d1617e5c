#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "hrcv/sat/cnf.hpp"

namespace hrcv::sat {

namespace {

constexpr std::int8_t kUndef = -1;
constexpr int kNoReason = -1;

// Max-heap of unassigned variables on (activity desc, index asc).
class VarOrder {
 public:
  explicit VarOrder(const std::vector<double>& activity) : activity_(activity) {}

  void reset(int n) {
    heap_.clear();
    pos_.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) insert(v);
  }
  bool empty() const { return heap_.empty(); }
  bool contains(int v) const { return pos_[static_cast<std::size_t>(v)] >= 0; }

  void insert(int v) {
    if (contains(v)) return;
    pos_[static_cast<std::size_t>(v)] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(heap_.size() - 1);
  }
  void bumped(int v) {
    if (contains(v)) up(static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)]));
  }
  int pop() {
    int top = heap_.front();
    swap_nodes(0, heap_.size() - 1);
    heap_.pop_back();
    pos_[static_cast<std::size_t>(top)] = -1;
    if (!heap_.empty()) down(0);
    return top;
  }

 private:
  bool before(int a, int b) const {
    double x = activity_[static_cast<std::size_t>(a)], y = activity_[static_cast<std::size_t>(b)];
    return x > y || (x == y && a < b);
  }
  void swap_nodes(std::size_t i, std::size_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
    pos_[static_cast<std::size_t>(heap_[j])] = static_cast<int>(j);
  }
  void up(std::size_t i) {
    while (i > 0) {
      std::size_t p = (i - 1) / 2;
      if (!before(heap_[i], heap_[p])) break;
      swap_nodes(i, p);
      i = p;
    }
  }
  void down(std::size_t i) {
    for (;;) {
      std::size_t l = 2 * i + 1, r = l + 1, best = i;
      if (l < heap_.size() && before(heap_[l], heap_[best])) best = l;
      if (r < heap_.size() && before(heap_[r], heap_[best])) best = r;
      if (best == i) return;
      swap_nodes(i, best);
      i = best;
    }
  }

  const std::vector<double>& activity_;
  std::vector<int> heap_;
  std::vector<int> pos_;
};

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

class Cdcl {
 public:
  explicit Cdcl(const Cnf& cnf) : n_(cnf.num_vars), order_(activity_) {
    assigns_.assign(static_cast<std::size_t>(n_), kUndef);
    level_.assign(static_cast<std::size_t>(n_), 0);
    reason_.assign(static_cast<std::size_t>(n_), kNoReason);
    activity_.assign(static_cast<std::size_t>(n_), 0.0);
    seen_.assign(static_cast<std::size_t>(n_), 0);
    watches_.assign(2 * static_cast<std::size_t>(n_), {});
    order_.reset(n_);
    ok_ = !cnf.trivially_unsat;
    for (const auto& c : cnf.clauses) {
      if (!ok_) break;
      add_input(c);
    }
  }

  SolveResult run() {
    if (!ok_ || propagate() != kNoReason) return SolveResult::unsat();
    int restart = 0;
    for (;;) {
      long budget = static_cast<long>(luby(2.0, restart++) * 100);
      switch (search(budget)) {
        case Status::Sat: return SolveResult::sat(model());
        case Status::Unsat: return SolveResult::unsat();
        case Status::Restart: backtrack(0); break;
      }
    }
  }

 private:
  enum class Status { Sat, Unsat, Restart };

  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }
  static int var0(Lit l) { return l.var() - 1; }

  // 1 true, 0 false, -1 unassigned.
  std::int8_t value(Lit l) const {
    std::int8_t a = assigns_[idx(var0(l))];
    if (a == kUndef) return kUndef;
    return static_cast<std::int8_t>(l.positive() ? a : 1 - a);
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void add_input(Clause c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] == ~c[i - 1]) return;  // tautology
    // Drop literals already false at level 0; skip clauses already satisfied.
    Clause kept;
    for (Lit l : c) {
      if (value(l) == 1) return;
      if (value(l) == kUndef) kept.push_back(l);
    }
    if (kept.empty()) {
      ok_ = false;
    } else if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      if (propagate() != kNoReason) ok_ = false;
    } else {
      attach(std::move(kept));
    }
  }

  int attach(Clause c) {
    int ci = static_cast<int>(clauses_.size());
    watches_[c[0].code()].push_back(ci);
    watches_[c[1].code()].push_back(ci);
    clauses_.push_back(std::move(c));
    return ci;
  }

  void enqueue(Lit l, int reason) {
    int v = var0(l);
    assigns_[idx(v)] = l.positive() ? 1 : 0;
    level_[idx(v)] = decision_level();
    reason_[idx(v)] = reason;
    trail_.push_back(l);
  }

  // Returns the index of a conflicting clause or kNoReason.
  int propagate() {
    while (qhead_ < trail_.size()) {
      Lit p = trail_[qhead_++];
      Lit false_lit = ~p;
      auto& ws = watches_[false_lit.code()];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        int ci = ws[i];
        Clause& c = clauses_[idx(ci)];
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (value(c[0]) == 1) {
          ws[j++] = ws[i++];
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[c[1].code()].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) {
          ++i;
          continue;
        }
        ws[j++] = ws[i++];
        if (value(c[0]) == 0) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c[0], ci);
      }
      ws.resize(j);
    }
    return kNoReason;
  }

  void bump(int v) {
    if ((activity_[idx(v)] += var_inc_) > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    order_.bumped(v);
  }

  // First-UIP learning; returns the backjump level.
  int analyze(int confl, Clause& learnt) {
    learnt.assign(1, Lit{});
    int counter = 0;
    Lit p{};
    bool have_p = false;
    std::size_t index = trail_.size();
    do {
      const Clause& c = clauses_[idx(confl)];
      for (std::size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
        Lit q = c[k];
        int v = var0(q);
        if (seen_[idx(v)] || level_[idx(v)] == 0) continue;
        seen_[idx(v)] = 1;
        bump(v);
        if (level_[idx(v)] >= decision_level())
          ++counter;
        else
          learnt.push_back(q);
      }
      do {
        p = trail_[--index];
      } while (!seen_[idx(var0(p))]);
      have_p = true;
      confl = reason_[idx(var0(p))];
      seen_[idx(var0(p))] = 0;
      --counter;
      // Reason clauses keep their implied literal in slot 0.
      if (counter > 0) {
        assert(confl != kNoReason);
        Clause& rc = clauses_[idx(confl)];
        if (rc[0] != p) {
          auto it = std::find(rc.begin(), rc.end(), p);
          std::iter_swap(rc.begin(), it);
        }
      }
    } while (counter > 0);
    learnt[0] = ~p;

    int bt = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k)
        if (level_[idx(var0(learnt[k]))] > level_[idx(var0(learnt[max_i]))]) max_i = k;
      std::swap(learnt[1], learnt[max_i]);
      bt = level_[idx(var0(learnt[1]))];
    }
    for (std::size_t k = 1; k < learnt.size(); ++k) seen_[idx(var0(learnt[k]))] = 0;
    return bt;
  }

  void backtrack(int level) {
    if (decision_level() <= level) return;
    for (std::size_t c = trail_.size(); c > trail_lim_[idx(level)]; --c) {
      int v = var0(trail_[c - 1]);
      assigns_[idx(v)] = kUndef;
      reason_[idx(v)] = kNoReason;
      order_.insert(v);
    }
    trail_.resize(trail_lim_[idx(level)]);
    trail_lim_.resize(idx(level));
    qhead_ = trail_.size();
  }

  Status search(long budget) {
    long conflicts = 0;
    Clause learnt;
    for (;;) {
      int confl = propagate();
      if (confl != kNoReason) {
        ++conflicts;
        if (decision_level() == 0) return Status::Unsat;
        int bt = analyze(confl, learnt);
        backtrack(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          int ci = attach(learnt);
          enqueue(learnt[0], ci);
        }
        var_inc_ /= 0.95;
        continue;
      }
      if (conflicts >= budget) return Status::Restart;
      int next = -1;
      while (!order_.empty()) {
        int v = order_.pop();
        if (assigns_[idx(v)] == kUndef) {
          next = v;
          break;
        }
      }
      if (next < 0) return Status::Sat;
      trail_lim_.push_back(trail_.size());
      enqueue(Lit::neg(next + 1), kNoReason);
    }
  }

  Model model() const {
    Model m(n_);
    for (int v = 0; v < n_; ++v) m.set(v + 1, assigns_[idx(v)] == 1);
    return m;
  }

  int n_;
  bool ok_ = true;
  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::int8_t> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  double var_inc_ = 1.0;
  VarOrder order_;
};

}  // namespace

SolveResult solve(const Cnf& cnf) {
  SolveResult r = Cdcl(cnf).run();
  if (r.is_sat() && !satisfies(cnf, r.model())) throw Error("internal solver error: model violates a clause");
  return r;
}

}  // namespace hrcv::sat
