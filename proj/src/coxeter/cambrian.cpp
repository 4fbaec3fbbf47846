#include "cambrep/coxeter/cambrian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cambrep::coxeter {

CoxeterElement CoxeterElement::parse(const std::string& text, int rank) {
  CoxeterElement c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit) || tok.size() > 3) {
      throw std::invalid_argument("bad Coxeter element '" + text + "'");
    }
    c.order.push_back(std::stoi(tok) - 1);
  }
  std::vector<int> sorted = c.order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(static_cast<std::size_t>(rank));
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) {
    throw std::invalid_argument("Coxeter element '" + text + "' is not a permutation of 1.." +
                                std::to_string(rank));
  }
  return c;
}

CoxeterElement CoxeterElement::standard(int rank) {
  CoxeterElement c;
  c.order.resize(static_cast<std::size_t>(rank));
  std::iota(c.order.begin(), c.order.end(), 0);
  return c;
}

std::string CoxeterElement::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) s += (i ? "," : "") + std::to_string(order[i] + 1);
  return s;
}

std::vector<CoxeterElement> distinct_coxeter_elements(const CoxeterGroup& g) {
  std::vector<CoxeterElement> out;
  std::set<GroupElem> seen;
  auto c = CoxeterElement::standard(g.rank());
  do {
    if (seen.insert(g.from_word(c.order)).second) out.push_back(c);
  } while (std::next_permutation(c.order.begin(), c.order.end()));
  return out;
}

std::vector<int> SortingWord::word() const {
  std::vector<int> w;
  for (const auto& p : passes) w.insert(w.end(), p.begin(), p.end());
  return w;
}

SortingWord c_sorting_word(const CoxeterGroup& g, GroupElem w, const CoxeterElement& c) {
  SortingWord out;
  GroupElem u = w;
  while (u != g.identity()) {
    std::vector<int> pass;
    for (int s : c.order) {
      const GroupElem su = g.left_mul(s, u);
      if (g.length(su) < g.length(u)) {
        pass.push_back(s);
        u = su;
      }
    }
    out.passes.push_back(std::move(pass));
  }
  return out;
}

bool is_c_sortable(const CoxeterGroup& g, GroupElem w, const CoxeterElement& c) {
  const auto sw = c_sorting_word(g, w, c);
  for (std::size_t k = 1; k < sw.passes.size(); ++k) {
    for (int s : sw.passes[k]) {
      const auto& prev = sw.passes[k - 1];
      if (std::find(prev.begin(), prev.end(), s) == prev.end()) return false;
    }
  }
  return true;
}

std::vector<GroupElem> sortable_elements(const CoxeterGroup& g, const CoxeterElement& c) {
  std::vector<GroupElem> out;
  for (GroupElem w = 0; w < g.order(); ++w) {
    if (is_c_sortable(g, w, c)) out.push_back(w);
  }
  return out;
}

CambrianLattice cambrian(const CoxeterGroup& g, const CoxeterElement& c) {
  CambrianLattice out;
  out.elements = sortable_elements(g, c);
  std::vector<std::string> labels;
  for (GroupElem w : out.elements) labels.push_back(g.word_label(w));
  out.poset = poset::Poset::from_order(std::move(labels), [&](poset::Elem i, poset::Elem j) {
    return weak_leq(g, out.elements[static_cast<std::size_t>(i)], out.elements[static_cast<std::size_t>(j)]);
  });
  return out;
}

namespace {

GroupElem max_sortable_below(const CoxeterGroup& g, const std::vector<GroupElem>& sortables, GroupElem w) {
  std::vector<GroupElem> below;
  for (GroupElem v : sortables) {
    if (weak_leq(g, v, w)) below.push_back(v);
  }
  for (GroupElem top : below) {
    if (std::all_of(below.begin(), below.end(), [&](GroupElem v) { return weak_leq(g, v, top); })) {
      return top;
    }
  }
  throw std::logic_error("sortable elements below " + g.word_label(w) + " have no maximum");
}

}  // namespace

GroupElem pi_down(const CoxeterGroup& g, const CoxeterElement& c, GroupElem w) {
  return max_sortable_below(g, sortable_elements(g, c), w);
}

poset::PosetMorphism cambrian_projection(const CoxeterGroup& g, const CoxeterElement& c) {
  auto lat = cambrian(g, c);
  std::vector<poset::Elem> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < lat.elements.size(); ++i) position[lat.elements[i]] = static_cast<poset::Elem>(i);
  poset::PosetMorphism f;
  f.source = weak_order(g);
  f.map.resize(static_cast<std::size_t>(g.order()));
  for (GroupElem w = 0; w < g.order(); ++w) f.map[w] = position[max_sortable_below(g, lat.elements, w)];
  f.target = std::move(lat.poset);
  return f;
}

}  // namespace cambrep::coxeter
