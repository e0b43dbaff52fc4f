#pragma once

// Homomorphisms from a finitely presented group into Sym(n), and their
// classes under simultaneous conjugation.
//
// The search assigns generator images depth first.  A relator is checked as
// soon as every generator in it has an image; a relator whose only unassigned
// generator occurs in it exactly once determines that image directly.  Class
// counts come either from explicit orbit enumeration or from Burnside's lemma
// over the conjugacy classes of Sym(n).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "borromean/errors.hpp"
#include "borromean/permutation.hpp"
#include "borromean/wirtinger.hpp"

namespace borromean {

struct SearchOptions {
  unsigned threads = 1;
  unsigned long long budget = 10'000'000'000ULL;  // visited search nodes
};

enum class CountMethod { enumerate, burnside };

inline const char* to_string(CountMethod m) {
  return m == CountMethod::enumerate ? "enumerate" : "burnside";
}

struct HomClassCount {
  int n = 0;
  unsigned long long total_homs = 0;
  unsigned long long class_count = 0;
  CountMethod method = CountMethod::enumerate;
};

struct Homomorphism {
  std::vector<Permutation> images;  // one per generator, in presentation order
};

namespace detail {

using Index = SymmetricGroup::Index;

// One relator laid out for evaluation at the step where its last generator
// is fixed: rotated to start with that generator, with the other letters
// grouped into runs whose product is computed once per parent node.
struct CompiledCheck {
  int relator = 0;
  std::vector<int> exponents;             // exponent of each occurrence of the step generator
  std::vector<Word> runs;                 // run following each occurrence
};

struct Step {
  int generator = 0;
  int solve_from = -1;   // relator index when the image is forced, else -1
  // For forced steps the relator reads prefix g^solve_exponent suffix.
  Word solve_prefix;
  Word solve_suffix;
  int solve_exponent = 1;
  std::vector<CompiledCheck> checks;
  std::size_t run_count = 0;  // total runs over all checks
};

struct Plan {
  std::vector<Step> steps;
  std::vector<int> branch_generators;  // generators chosen freely, in step order
};

inline CompiledCheck compile_check(int relator_index, const Word& r, int g) {
  CompiledCheck c;
  c.relator = relator_index;
  const auto first = std::find_if(r.begin(), r.end(), [g](Letter l) { return generator_of(l) == g; });
  Word rot(first, r.end());
  rot.insert(rot.end(), r.begin(), first);
  for (Letter l : rot) {
    if (generator_of(l) == g) {
      c.exponents.push_back(l > 0 ? 1 : -1);
      c.runs.emplace_back();
    } else {
      c.runs.back().push_back(l);
    }
  }
  return c;
}

inline Plan make_plan(const FinitePresentation& p) {
  const auto gens = static_cast<int>(p.generators.size());
  std::vector<int> freq(static_cast<std::size_t>(gens), 0);
  for (const auto& r : p.relators) {
    for (Letter l : r) freq[static_cast<std::size_t>(generator_of(l))]++;
  }
  std::vector<char> assigned(static_cast<std::size_t>(gens), 0);
  std::vector<char> done(p.relators.size(), 0);

  auto unassigned_in = [&](const Word& r) {
    std::vector<int> u;
    for (Letter l : r) {
      const int g = generator_of(l);
      if (!assigned[static_cast<std::size_t>(g)] && std::find(u.begin(), u.end(), g) == u.end()) u.push_back(g);
    }
    return u;
  };

  // Relators that some step would close if `g` were fixed next and every
  // forced image were then propagated.
  auto lookahead = [&](int g) {
    std::vector<char> a = assigned;
    std::vector<char> used = done;
    a[static_cast<std::size_t>(g)] = 1;
    int closed = 0, forced = 0;
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        if (used[ri]) continue;
        std::vector<int> u;
        for (Letter l : p.relators[ri]) {
          const int h = generator_of(l);
          if (!a[static_cast<std::size_t>(h)] && std::find(u.begin(), u.end(), h) == u.end()) u.push_back(h);
        }
        if (u.empty()) {
          used[ri] = 1;
          ++closed;
          progress = true;
        } else if (u.size() == 1 && detail::occurrences(p.relators[ri], u[0]) == 1) {
          used[ri] = 1;
          a[static_cast<std::size_t>(u[0])] = 1;
          ++forced;
          progress = true;
        }
      }
    }
    return std::pair{closed, forced};
  };

  Plan plan;
  for (int placed = 0; placed < gens; ++placed) {
    Step step;
    step.generator = -1;
    for (std::size_t ri = 0; ri < p.relators.size() && step.generator < 0; ++ri) {
      if (done[ri]) continue;
      auto u = unassigned_in(p.relators[ri]);
      if (u.size() == 1 && detail::occurrences(p.relators[ri], u[0]) == 1) {
        step.generator = u[0];
        step.solve_from = static_cast<int>(ri);
        done[ri] = 1;
      }
    }
    if (step.generator < 0) {
      // Branch on the generator that closes the most relators, then forces
      // the most images; remaining ties go to the most frequent generator,
      // then to the smaller name.
      std::pair<int, int> best{-1, -1};
      for (int g = 0; g < gens; ++g) {
        if (assigned[static_cast<std::size_t>(g)]) continue;
        const auto score = lookahead(g);
        const auto gi = static_cast<std::size_t>(g);
        const auto bi = static_cast<std::size_t>(std::max(step.generator, 0));
        if (step.generator < 0 || score > best ||
            (score == best &&
             (freq[gi] > freq[bi] || (freq[gi] == freq[bi] && p.generators[gi] < p.generators[bi])))) {
          step.generator = g;
          best = score;
        }
      }
      plan.branch_generators.push_back(step.generator);
    }
    assigned[static_cast<std::size_t>(step.generator)] = 1;
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
      if (done[ri] || !unassigned_in(p.relators[ri]).empty()) continue;
      done[ri] = 1;
      if (!p.relators[ri].empty()) {
        step.checks.push_back(compile_check(static_cast<int>(ri), p.relators[ri], step.generator));
      }
    }
    if (step.solve_from >= 0) {
      const Word& r = p.relators[static_cast<std::size_t>(step.solve_from)];
      const int g = step.generator;
      const auto pos = std::find_if(r.begin(), r.end(), [g](Letter l) { return generator_of(l) == g; });
      step.solve_prefix.assign(r.begin(), pos);
      step.solve_suffix.assign(pos + 1, r.end());
      step.solve_exponent = *pos > 0 ? 1 : -1;
    }
    for (const auto& c : step.checks) step.run_count += c.runs.size();
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

class Searcher {
public:
  using Visit = std::function<void(std::span<const Index>)>;

  Searcher(const SymmetricGroup& group, const Plan& plan, std::size_t generators,
           std::span<const Index> domain, std::atomic<unsigned long long>& nodes,
           unsigned long long budget)
      : g_(group), plan_(plan), domain_(domain), nodes_(nodes), budget_(budget),
        image_(generators, SymmetricGroup::identity()), runs_(plan.steps.size()) {
    for (std::size_t s = 0; s < plan.steps.size(); ++s) runs_[s].resize(plan.steps[s].run_count);
  }

  // Runs the search with the first step pinned to `first` (when the first
  // step branches) and reports each complete assignment.
  void run_from(Index first, const Visit& visit) {
    visit_ = &visit;
    if (plan_.steps.empty() || plan_.steps[0].solve_from >= 0) {
      descend(0);
    } else {
      prepare(0);
      try_value(0, first);
    }
    flush();
  }

  void run_all(const Visit& visit) {
    visit_ = &visit;
    descend(0);
    flush();
  }

private:
  Index eval(const Word& w) const {
    Index acc = SymmetricGroup::identity();
    for (Letter l : w) {
      const Index x = image_[static_cast<std::size_t>(generator_of(l))];
      acc = g_.mul(acc, l > 0 ? x : g_.inv(x));
    }
    return acc;
  }

  void tick() {
    if (++local_ >= 1u << 16) flush();
  }

  void flush() {
    const auto total = nodes_.fetch_add(local_) + local_;
    local_ = 0;
    if (total > budget_) throw BudgetExceeded(budget_);
  }

  // Products of the runs between occurrences of the step generator; these
  // only involve generators fixed at earlier steps.
  void prepare(std::size_t s) {
    auto& out = runs_[s];
    std::size_t k = 0;
    for (const auto& c : plan_.steps[s].checks) {
      for (const auto& run : c.runs) out[k++] = eval(run);
    }
  }

  bool passes(std::size_t s, Index x) const {
    const Index xi = g_.inv(x);
    const auto& runs = runs_[s];
    std::size_t k = 0;
    for (const auto& c : plan_.steps[s].checks) {
      Index acc = SymmetricGroup::identity();
      for (int e : c.exponents) {
        acc = g_.mul(g_.mul(acc, e > 0 ? x : xi), runs[k++]);
      }
      if (acc != SymmetricGroup::identity()) return false;
    }
    return true;
  }

  void try_value(std::size_t s, Index x) {
    tick();
    if (!passes(s, x)) return;
    image_[static_cast<std::size_t>(plan_.steps[s].generator)] = x;
    descend(s + 1);
  }

  void descend(std::size_t s) {
    if (s == plan_.steps.size()) {
      tick();
      (*visit_)(image_);
      return;
    }
    const Step& step = plan_.steps[s];
    prepare(s);
    if (step.solve_from >= 0) {
      // u g^e v = 1  =>  g^e = u^-1 v^-1
      Index value = g_.mul(g_.inv(eval(step.solve_prefix)), g_.inv(eval(step.solve_suffix)));
      if (step.solve_exponent < 0) value = g_.inv(value);
      try_value(s, value);
      return;
    }
    for (Index x : domain_) try_value(s, x);
  }

  const SymmetricGroup& g_;
  const Plan& plan_;
  std::span<const Index> domain_;
  std::atomic<unsigned long long>& nodes_;
  unsigned long long budget_;
  unsigned long long local_ = 0;
  std::vector<Index> image_;
  std::vector<std::vector<Index>> runs_;
  const Visit* visit_ = nullptr;
};

// Runs the search over `domain` (all of Sym(n), or a subgroup) and hands
// back, per value of the first branching generator, whatever `Collect`
// gathered.  Chunks are processed by `threads` workers but returned in domain
// order, so results do not depend on scheduling.
template <typename Collect>
std::vector<Collect> partitioned_search(
    const FinitePresentation& p, const SymmetricGroup& group, const Plan& plan,
    std::span<const Index> domain, const SearchOptions& opt,
    const std::function<void(Collect&, std::span<const Index>)>& collect) {
  std::atomic<unsigned long long> nodes{0};
  const bool branches_first = !plan.steps.empty() && plan.steps[0].solve_from < 0;
  if (!branches_first) {
    std::vector<Collect> out(1);
    Searcher s(group, plan, p.generators.size(), domain, nodes, opt.budget);
    s.run_all([&](std::span<const Index> img) { collect(out[0], img); });
    return out;
  }

  std::vector<Collect> out(domain.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= domain.size()) return;
        Searcher s(group, plan, p.generators.size(), domain, nodes, opt.budget);
        s.run_from(domain[k], [&](std::span<const Index> img) { collect(out[k], img); });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = domain.size();
    }
  };
  const unsigned workers = std::max(1u, opt.threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

inline std::vector<Index> whole_group(const SymmetricGroup& g) {
  std::vector<Index> all(g.order());
  std::iota(all.begin(), all.end(), Index{0});
  return all;
}

inline unsigned long long count_homs_into(const FinitePresentation& p, const SymmetricGroup& g,
                                          const Plan& plan, std::span<const Index> domain,
                                          const SearchOptions& opt) {
  auto parts = partitioned_search<unsigned long long>(
      p, g, plan, domain, opt, [](unsigned long long& c, std::span<const Index>) { ++c; });
  return std::accumulate(parts.begin(), parts.end(), 0ULL);
}

}  // namespace detail

// Every homomorphism p -> Sym(n), in a fixed order (lexicographic in the
// images of the branching generators).
inline void for_each_hom(const FinitePresentation& p, int n,
                         const std::function<void(const Homomorphism&)>& visit,
                         const SearchOptions& opt = {}) {
  const SymmetricGroup group(n);
  const auto plan = detail::make_plan(p);
  const auto domain = detail::whole_group(group);
  std::atomic<unsigned long long> nodes{0};
  detail::Searcher s(group, plan, p.generators.size(), domain, nodes, opt.budget);
  Homomorphism h;
  s.run_all([&](std::span<const detail::Index> img) {
    h.images.clear();
    for (auto x : img) h.images.push_back(group.element(x));
    visit(h);
  });
}

inline std::vector<Homomorphism> enumerate_homs(const FinitePresentation& p, int n,
                                                const SearchOptions& opt = {}) {
  std::vector<Homomorphism> out;
  for_each_hom(p, n, [&](const Homomorphism& h) { out.push_back(h); }, opt);
  return out;
}

inline unsigned long long count_homs(const FinitePresentation& p, int n, const SearchOptions& opt = {}) {
  const SymmetricGroup group(n);
  const auto plan = detail::make_plan(p);
  const auto domain = detail::whole_group(group);
  return detail::count_homs_into(p, group, plan, domain, opt);
}

// Orbits of the conjugation action, found by closing each hom under
// conjugation by the adjacent transpositions.  Homs are keyed by the images
// of the branching generators, which determine the rest.
inline HomClassCount count_classes_enumerate(const FinitePresentation& p, int n,
                                             const SearchOptions& opt = {}) {
  using detail::Index;
  const SymmetricGroup group(n);
  const auto plan = detail::make_plan(p);
  const auto domain = detail::whole_group(group);
  const std::size_t width = plan.branch_generators.size();

  struct Chunk {
    std::vector<Index> keys;
    unsigned long long homs = 0;
  };
  auto parts = detail::partitioned_search<Chunk>(
      p, group, plan, domain, opt, [&](Chunk& c, std::span<const Index> img) {
        ++c.homs;
        for (int g : plan.branch_generators) c.keys.push_back(img[static_cast<std::size_t>(g)]);
      });
  HomClassCount out;
  out.n = n;
  out.method = CountMethod::enumerate;
  std::vector<Index> keys;
  for (auto& part : parts) {
    out.total_homs += part.homs;
    keys.insert(keys.end(), part.keys.begin(), part.keys.end());
  }
  parts.clear();

  if (width == 0) {
    out.class_count = out.total_homs;
    return out;
  }

  // Keys arrive in lexicographic order; the orbit search starts from the
  // least unvisited key, which is then the least member of its orbit.
  const std::size_t count = keys.size() / width;
  auto key_at = [&](std::size_t i) { return std::span<const Index>(keys.data() + i * width, width); };
  auto find = [&](std::span<const Index> k) {
    std::size_t lo = 0, hi = count;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto m = key_at(mid);
      if (std::lexicographical_compare(m.begin(), m.end(), k.begin(), k.end())) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo == count || !std::equal(k.begin(), k.end(), key_at(lo).begin())) {
      throw IntegrityError("conjugate of a homomorphism is missing from the enumeration");
    }
    return lo;
  };

  const auto moves = group.adjacent_transpositions();
  std::vector<char> seen(count, 0);
  std::vector<std::size_t> stack;
  std::vector<Index> buf(width);
  for (std::size_t i = 0; i < count; ++i) {
    if (seen[i]) continue;
    ++out.class_count;
    seen[i] = 1;
    stack.push_back(i);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (Index t : moves) {
        auto k = key_at(cur);
        for (std::size_t j = 0; j < width; ++j) buf[j] = group.conjugate(k[j], t);
        const std::size_t nb = find(buf);
        if (!seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
      }
    }
  }
  return out;
}

// Burnside: #classes = (1/n!) sum over pi of #homs into the centralizer of pi,
// taken once per conjugacy class and weighted by its size.
inline HomClassCount count_classes_burnside(const FinitePresentation& p, int n,
                                            const SearchOptions& opt = {}) {
  const SymmetricGroup group(n);
  const auto plan = detail::make_plan(p);
  HomClassCount out;
  out.n = n;
  out.method = CountMethod::burnside;
  unsigned long long weighted = 0;
  for (const auto& cls : group.conjugacy_classes()) {
    const auto centralizer = group.centralizer(cls.representative);
    const auto homs = detail::count_homs_into(p, group, plan, centralizer, opt);
    if (cls.representative == SymmetricGroup::identity()) out.total_homs = homs;
    weighted += homs * cls.size;
  }
  if (weighted % group.order() != 0) {
    throw IntegrityError("Burnside sum is not divisible by the group order");
  }
  out.class_count = weighted / group.order();
  return out;
}

inline HomClassCount count_classes(const FinitePresentation& p, int n, CountMethod m,
                                   const SearchOptions& opt = {}) {
  return m == CountMethod::enumerate ? count_classes_enumerate(p, n, opt)
                                     : count_classes_burnside(p, n, opt);
}

}  // namespace borromean
