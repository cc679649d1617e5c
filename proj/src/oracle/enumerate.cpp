#include "hrcv/oracle/enumerate.hpp"

#include <algorithm>
#include <vector>

#include "hrcv/logic/evaluator.hpp"

namespace hrcv::oracle {

using logic::Formula;
using logic::Op;

namespace {

void flatten(const Formula& f, std::vector<Formula>& out) {
  if (f.op() == Op::And) {
    flatten(f.lhs(), out);
    flatten(f.rhs(), out);
  } else if (f.op() == Op::Alw && f.lhs().op() == Op::And) {
    flatten(logic::Alw(f.lhs().lhs()), out);
    flatten(logic::Alw(f.lhs().rhs()), out);
  } else {
    out.push_back(f);
  }
}

struct Ref {
  std::size_t symbol;
  std::int64_t offset;
};

void refs(const Formula& f, std::int64_t offset, const logic::SymbolTable& symbols, std::vector<Ref>& out) {
  switch (f.op()) {
    case Op::Atom:
    case Op::Eq:
    case Op::LeConst: out.push_back({symbols.index_of(f.name()), offset}); break;
    case Op::EqVar:
      out.push_back({symbols.index_of(f.name()), offset});
      out.push_back({symbols.index_of(f.other()), offset});
      break;
    case Op::Dist: refs(f.lhs(), offset + f.integer(), symbols, out); break;
    default:
      for (std::size_t i = 0; i < f.arity(); ++i) refs(f.child(i), offset, symbols, out);
  }
}

struct Check {
  std::size_t evaluator;
  int instant;
};

class Search {
 public:
  Search(std::span<const Formula> conjuncts, const logic::SymbolTable& symbols, logic::Bound bound,
         std::uint64_t max_nodes)
      : trace_(symbols, bound), width_(symbols.size()), max_nodes_(max_nodes) {
    const int k = bound.k;
    cells_ = width_ * static_cast<std::size_t>(bound.instants());
    buckets_.resize(cells_ + 1);  // bucket 0: checks that read no cell

    std::vector<Formula> flat;
    for (const auto& f : conjuncts) flatten(f, flat);
    for (const auto& f : flat) {
      const bool alw_local = f.op() == Op::Alw && logic::is_local(f.lhs());
      if (!alw_local && !logic::is_local(f)) {
        global_.push_back(evals_.size());
        evals_.emplace_back(f, symbols);
        continue;
      }
      const Formula& body = alw_local ? f.lhs() : f;
      std::vector<Ref> rs;
      refs(body, 0, symbols, rs);
      const std::size_t e = evals_.size();
      evals_.emplace_back(body, symbols);
      const int last = alw_local ? k : 0;
      for (int u = 0; u <= last; ++u) {
        std::size_t ready = 0;
        for (const auto& r : rs) {
          auto at = static_cast<std::int64_t>(u) + r.offset;
          if (at < 0 || at > k) continue;
          ready = std::max(ready, static_cast<std::size_t>(at) * width_ + r.symbol + 1);
        }
        buckets_[ready].push_back({e, u});
      }
    }
    for (std::size_t s = 0; s < width_; ++s) cards_.push_back(symbols.at(s).cardinality());
  }

  std::optional<logic::Trace> run(Stats* stats) {
    std::optional<logic::Trace> out;
    if (passes(0) && dfs(0)) out = trace_;
    if (stats) *stats = stats_;
    return out;
  }

 private:
  bool passes(std::size_t bucket) const {
    for (const auto& c : buckets_[bucket])
      if (!evals_[c.evaluator](trace_, c.instant)) return false;
    return true;
  }

  bool dfs(std::size_t cell) {
    if (cell == cells_) {
      ++stats_.leaves;
      for (auto e : global_)
        if (!evals_[e](trace_, 0)) return false;
      return true;
    }
    const std::size_t symbol = cell % width_;
    const int t = static_cast<int>(cell / width_);
    for (std::size_t v = 0; v < cards_[symbol]; ++v) {
      if (++stats_.nodes > max_nodes_) throw BudgetExceeded("brute-force enumeration exceeded its node budget");
      trace_.set_raw(symbol, t, static_cast<std::uint16_t>(v));
      if (passes(cell + 1) && dfs(cell + 1)) return true;
    }
    return false;
  }

  logic::Trace trace_;
  std::size_t width_;
  std::size_t cells_ = 0;
  std::uint64_t max_nodes_;
  std::vector<logic::Evaluator> evals_;
  std::vector<std::size_t> global_;
  std::vector<std::vector<Check>> buckets_;
  std::vector<std::size_t> cards_;
  Stats stats_;
};

}  // namespace

std::optional<logic::Trace> find_witness(std::span<const Formula> conjuncts, const logic::SymbolTable& symbols,
                                         logic::Bound bound, Stats* stats, std::uint64_t max_nodes) {
  if (symbols.empty()) {
    // Single empty trace: evaluate directly.
    logic::Trace tr(symbols, bound);
    for (const auto& f : conjuncts)
      if (!logic::Evaluator(f, symbols)(tr, 0)) return std::nullopt;
    return tr;
  }
  return Search(conjuncts, symbols, bound, max_nodes).run(stats);
}

}  // namespace hrcv::oracle
