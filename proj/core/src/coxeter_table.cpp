#include "klcells/coxeter_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace klcells {

int coxeter_order(std::int64_t p) {
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

CoxeterTable::CoxeterTable(const RootDatum& d, std::vector<AffineRoot> generators, int bound)
    : datum_(&d), generators_(std::move(generators)), bound_(bound) {
  if (bound < 0) throw std::invalid_argument("CoxeterTable: negative bound");
  if (generators_.size() > 31) throw std::invalid_argument("CoxeterTable: too many generators");
  const int ng = num_generators();
  for (const auto& g : generators_) gen_elements_.push_back(WeylElement::reflection(d, g));

  auto left_mask = [&](const WeylElement& w) {
    WeylElement inv = klcells::inverse(w);
    unsigned m = 0;
    for (int s = 0; s < ng; ++s)
      if (sends_negative(d, inv, generators_[s])) m |= 1U << s;
    return m;
  };
  auto right_mask = [&](const WeylElement& w) {
    unsigned m = 0;
    for (int s = 0; s < ng; ++s)
      if (sends_negative(d, w, generators_[s])) m |= 1U << s;
    return m;
  };
  auto add = [&](const WeylElement& w, int len, std::vector<int> word, unsigned lmask) {
    int id = size();
    index_[w] = id;
    elements_.push_back(w);
    lengths_.push_back(len);
    words_.push_back(std::move(word));
    left_desc_.push_back(lmask);
    right_desc_.push_back(right_mask(w));
  };

  WeylElement e = WeylElement::identity(d);
  add(e, 0, {}, 0);
  int level_begin = 0, level_end = 1;
  complete_ = true;
  for (int len = 0; len < bound_; ++len) {
    struct Candidate {
      WeylElement w;
      std::vector<int> word;
      unsigned lmask;
    };
    std::map<WeylElement, bool> fresh;
    std::vector<Candidate> next;
    for (int id = level_begin; id < level_end; ++id)
      for (int s = 0; s < ng; ++s) {
        if (is_left_descent(s, id)) continue;
        WeylElement sw = compose(gen_elements_[s], elements_[id]);
        if (fresh.count(sw)) continue;
        fresh[sw] = true;
        unsigned lm = left_mask(sw);
        int t = 0;
        while (!((lm >> t) & 1U)) ++t;
        int below = find(compose(gen_elements_[t], sw));
        std::vector<int> word{t};
        word.insert(word.end(), words_[below].begin(), words_[below].end());
        next.push_back({sw, std::move(word), lm});
      }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), [](const Candidate& a, const Candidate& b) { return a.word < b.word; });
    level_begin = level_end;
    for (auto& c : next) add(c.w, len + 1, std::move(c.word), c.lmask);
    level_end = size();
  }
  // Anything at the bound with an ascent means the group continues.
  for (int id = level_begin; id < level_end; ++id)
    if (lengths_[id] == bound_ && left_desc_[id] != (1U << ng) - 1U) complete_ = false;
  if (bound_ == 0 && ng > 0) complete_ = false;

  left_.assign(size(), std::vector<int>(ng, -1));
  right_.assign(size(), std::vector<int>(ng, -1));
  inverse_.assign(size(), -1);
  for (int id = 0; id < size(); ++id) {
    for (int s = 0; s < ng; ++s) {
      left_[id][s] = find(compose(gen_elements_[s], elements_[id]));
      right_[id][s] = find(compose(elements_[id], gen_elements_[s]));
    }
    inverse_[id] = find(klcells::inverse(elements_[id]));
  }

  coxeter_.assign(ng, std::vector<int>(ng, 1));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b) {
      if (a == b) continue;
      const AffineRoot& x = generators_[a];
      const AffineRoot& y = generators_[b];
      std::int64_t p = dot(d.vector_of(x), d.coroot_of(y), d.dim()) * dot(d.vector_of(y), d.coroot_of(x), d.dim());
      coxeter_[a][b] = coxeter_order(p);
    }
}

int CoxeterTable::find(const WeylElement& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

int CoxeterTable::first_left_descent(int id) const {
  for (int s = 0; s < num_generators(); ++s)
    if (is_left_descent(s, id)) return s;
  return -1;
}

int CoxeterTable::multiply(int a, int b) const {
  if (a < 0 || b < 0) return -1;
  return find(compose(elements_[a], elements_[b]));
}

int CoxeterTable::from_word(const std::vector<int>& word) const {
  WeylElement w = WeylElement::identity(*datum_);
  for (int s : word) w = compose(w, gen_elements_.at(s));
  return find(w);
}

}  // namespace klcells
