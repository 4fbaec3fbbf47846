#include "cambrep/coxeter/group.hpp"

#include <algorithm>
#include <cctype>

namespace cambrep::coxeter {

using exact::QuadraticScalar;
using exact::Rational;

std::string CoxeterFactor::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::H: return "H" + std::to_string(rank);
    case Family::I: return "I2(" + std::to_string(h) + ")";
  }
  return "?";
}

namespace {

CoxeterFactor parse_factor(const std::string& tok) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("unsupported Coxeter type '" + tok + "': " + why);
  };
  if (tok.size() < 2) throw bad("expected a family letter and a rank");
  const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
  if (fam == 'I') {
    // I2(h)
    if (tok.size() < 5 || tok[1] != '2' || tok[2] != '(' || tok.back() != ')') throw bad("expected I2(h)");
    const std::string digits = tok.substr(3, tok.size() - 4);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 4) {
      throw bad("bad dihedral parameter");
    }
    const int h = std::stoi(digits);
    if (h < 3) throw bad("dihedral parameter must be at least 3");
    return {Family::I, 2, h};
  }
  const std::string digits = tok.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 2) throw bad("bad rank");
  const int n = std::stoi(digits);
  switch (fam) {
    case 'A':
      if (n < 1 || n > 4) throw bad("type A needs 1 <= n <= 4");
      return {Family::A, n};
    case 'B':
      if (n < 2 || n > 4) throw bad("type B needs 2 <= n <= 4");
      return {Family::B, n};
    case 'C':
      if (n < 2 || n > 4) throw bad("type C needs 2 <= n <= 4");
      return {Family::C, n};
    case 'H':
      if (n != 3) throw bad("only H3 is supported");
      return {Family::H, 3};
    default:
      throw bad("unknown family");
  }
}

std::vector<std::vector<int>> factor_coxeter_matrix(const CoxeterFactor& f) {
  const int n = f.rank;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto bond = [&](int i, int j, int v) { m[i][j] = m[j][i] = v; };
  switch (f.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case Family::B:
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, i + 2 == n ? 4 : 3);
      break;
    case Family::H:
      bond(0, 1, 5);
      bond(1, 2, 3);
      break;
    case Family::I:
      bond(0, 1, f.h);
      break;
  }
  return m;
}

// cos(pi / m) in the smallest quadratic field that holds it.
QuadraticScalar cos_pi_over(int m) {
  switch (m) {
    case 2: return QuadraticScalar(0);
    case 3: return QuadraticScalar(Rational(1, 2));
    case 4: return QuadraticScalar(Rational(0), Rational(1, 2), 2);
    case 5: return QuadraticScalar(Rational(1, 4), Rational(1, 4), 5);
    case 6: return QuadraticScalar(Rational(0), Rational(1, 2), 3);
    default: throw std::invalid_argument("no quadratic expression for cos(pi/" + std::to_string(m) + ")");
  }
}

struct FactorRoots {
  std::vector<std::vector<QuadraticScalar>> coords;  // empty for dihedral factors
  std::vector<bool> positive;
  std::vector<std::vector<int>> gens;  // permutation of roots per generator
};

FactorRoots geometric_roots(const std::vector<std::vector<int>>& m) {
  const auto n = m.size();
  std::vector<std::vector<QuadraticScalar>> gram(n, std::vector<QuadraticScalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = i == j ? QuadraticScalar(1) : -cos_pi_over(m[i][j]);
  }
  auto reflect = [&](std::size_t i, const std::vector<QuadraticScalar>& v) {
    QuadraticScalar pairing(0);
    for (std::size_t j = 0; j < n; ++j) pairing += gram[i][j] * v[j];
    auto out = v;
    out[i] -= QuadraticScalar(2) * pairing;
    return out;
  };

  FactorRoots fr;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<QuadraticScalar> e(n, QuadraticScalar(0));
    e[i] = QuadraticScalar(1);
    fr.coords.push_back(std::move(e));
  }
  auto find = [&](const std::vector<QuadraticScalar>& v) -> int {
    for (std::size_t r = 0; r < fr.coords.size(); ++r) {
      if (fr.coords[r] == v) return static_cast<int>(r);
    }
    return -1;
  };
  for (std::size_t r = 0; r < fr.coords.size(); ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      auto image = reflect(i, fr.coords[r]);
      if (find(image) < 0) fr.coords.push_back(std::move(image));
      if (fr.coords.size() > 256) throw std::length_error("root system too large");
    }
  }
  fr.gens.assign(n, std::vector<int>(fr.coords.size()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < fr.coords.size(); ++r) fr.gens[i][r] = find(reflect(i, fr.coords[r]));
  }
  for (const auto& v : fr.coords) {
    // All coordinates of a root share one sign.
    bool pos = std::any_of(v.begin(), v.end(), [](const QuadraticScalar& x) { return x.sign() > 0; });
    bool neg = std::any_of(v.begin(), v.end(), [](const QuadraticScalar& x) { return x.sign() < 0; });
    if (pos == neg) throw std::logic_error("root with mixed-sign coordinates");
    fr.positive.push_back(pos);
  }
  return fr;
}

FactorRoots dihedral_roots(int h) {
  // Root k sits at angle k*pi/h; alpha_1 at k = 0, alpha_2 at k = h - 1.
  FactorRoots fr;
  const int count = 2 * h;
  for (int k = 0; k < count; ++k) fr.positive.push_back(k < h);
  for (int a : {0, h - 1}) {
    std::vector<int> perm(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) perm[k] = ((h + 2 * a - k) % count + count) % count;
    fr.gens.push_back(std::move(perm));
  }
  return fr;
}

}  // namespace

CoxeterType CoxeterType::parse(const std::string& text) {
  CoxeterType t;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('x', start);
    if (end == std::string::npos) end = text.size();
    const std::string tok = text.substr(start, end - start);
    if (tok.empty()) throw std::invalid_argument("empty factor in Coxeter type '" + text + "'");
    t.factors.push_back(parse_factor(tok));
    start = end + 1;
  }
  return t;
}

int CoxeterType::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

std::string CoxeterType::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].name();
  return s;
}

bool CoxeterType::crystallographic() const {
  return std::all_of(factors.begin(), factors.end(), [](const CoxeterFactor& f) {
    return f.family == Family::A || f.family == Family::B || f.family == Family::C;
  });
}

CoxeterGroup CoxeterGroup::build(const CoxeterType& type) {
  if (type.factors.empty()) throw std::invalid_argument("Coxeter type has no factors");
  CoxeterGroup g;
  g.type_ = type;
  g.rank_ = type.rank();
  g.m_.assign(static_cast<std::size_t>(g.rank_), std::vector<int>(static_cast<std::size_t>(g.rank_), 2));

  int gen_offset = 0;
  std::vector<std::vector<int>> gens;
  for (const auto& f : type.factors) {
    const auto fm = factor_coxeter_matrix(f);
    for (int i = 0; i < f.rank; ++i) {
      for (int j = 0; j < f.rank; ++j) g.m_[gen_offset + i][gen_offset + j] = fm[i][j];
    }
    FactorRoots fr = f.family == Family::I ? dihedral_roots(f.h) : geometric_roots(fm);
    const int root_offset = static_cast<int>(g.positive_.size());
    const int count = static_cast<int>(fr.positive.size());
    for (int r = 0; r < count; ++r) {
      g.positive_.push_back(fr.positive[r]);
      std::vector<QuadraticScalar> global;
      if (!fr.coords.empty()) {
        global.assign(static_cast<std::size_t>(g.rank_), QuadraticScalar(0));
        for (int i = 0; i < f.rank; ++i) global[gen_offset + i] = fr.coords[r][i];
      }
      g.coords_.push_back(std::move(global));
    }
    // Extend every existing generator by the identity on the new roots.
    for (auto& perm : gens) {
      for (int r = 0; r < count; ++r) perm.push_back(root_offset + r);
    }
    for (const auto& local : fr.gens) {
      std::vector<int> perm(static_cast<std::size_t>(root_offset));
      for (int r = 0; r < root_offset; ++r) perm[r] = r;
      for (int r = 0; r < count; ++r) perm.push_back(root_offset + local[r]);
      gens.push_back(std::move(perm));
    }
    gen_offset += f.rank;
  }
  if (g.positive_.size() > 255) throw std::length_error("root system too large for this representation");

  g.positive_index_.assign(g.positive_.size(), -1);
  for (std::size_t r = 0; r < g.positive_.size(); ++r) {
    if (g.positive_[r]) g.positive_index_[r] = g.num_positive_++;
  }
  for (const auto& perm : gens) g.generator_perms_.emplace_back(perm.begin(), perm.end());

  const auto nroots = g.positive_.size();
  Perm id(nroots);
  for (std::size_t r = 0; r < nroots; ++r) id[r] = static_cast<std::uint8_t>(r);
  g.perms_.push_back(id);
  g.index_.emplace(id, 0);
  for (std::size_t k = 0; k < g.perms_.size(); ++k) {
    std::vector<GroupElem> row;
    for (const auto& s : g.generator_perms_) {
      Perm ws(nroots);
      for (std::size_t r = 0; r < nroots; ++r) ws[r] = g.perms_[k][s[r]];
      auto [it, inserted] = g.index_.emplace(ws, static_cast<GroupElem>(g.perms_.size()));
      if (inserted) {
        g.perms_.push_back(std::move(ws));
        if (g.perms_.size() > static_cast<std::size_t>(kMaxGroupOrder)) {
          throw std::length_error("group " + type.name() + " exceeds the order bound " +
                                  std::to_string(kMaxGroupOrder));
        }
      }
      row.push_back(it->second);
    }
    g.right_.push_back(std::move(row));
  }

  const auto order = g.perms_.size();
  g.length_.resize(order);
  g.inversions_.assign(order, poset::Bitset(static_cast<std::size_t>(g.num_positive_)));
  g.left_.resize(order);
  for (std::size_t k = 0; k < order; ++k) {
    const Perm& w = g.perms_[k];
    int len = 0;
    Perm inv(nroots);
    for (std::size_t r = 0; r < nroots; ++r) {
      inv[w[r]] = static_cast<std::uint8_t>(r);
      if (g.positive_[r] && !g.positive_[w[r]]) ++len;
    }
    g.length_[k] = len;
    for (std::size_t r = 0; r < nroots; ++r) {
      if (g.positive_[r] && !g.positive_[inv[r]]) {
        g.inversions_[k].set(static_cast<std::size_t>(g.positive_index_[r]));
      }
    }
    for (const auto& s : g.generator_perms_) {
      Perm sw(nroots);
      for (std::size_t r = 0; r < nroots; ++r) sw[r] = s[w[r]];
      g.left_[k].push_back(g.lookup(sw));
    }
  }
  g.longest_ = static_cast<GroupElem>(std::max_element(g.length_.begin(), g.length_.end()) - g.length_.begin());
  if (std::count(g.length_.begin(), g.length_.end(), g.length_[g.longest_]) != 1) {
    throw std::logic_error("longest element is not unique");
  }
  return g;
}

GroupElem CoxeterGroup::lookup(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::logic_error("permutation outside the enumerated group");
  return it->second;
}

GroupElem CoxeterGroup::multiply(GroupElem u, GroupElem v) const {
  const Perm& pu = perms_[static_cast<std::size_t>(u)];
  const Perm& pv = perms_[static_cast<std::size_t>(v)];
  Perm out(pu.size());
  for (std::size_t r = 0; r < pu.size(); ++r) out[r] = pu[pv[r]];
  return lookup(out);
}

GroupElem CoxeterGroup::inverse(GroupElem w) const {
  const Perm& p = perms_[static_cast<std::size_t>(w)];
  Perm out(p.size());
  for (std::size_t r = 0; r < p.size(); ++r) out[p[r]] = static_cast<std::uint8_t>(r);
  return lookup(out);
}

GroupElem CoxeterGroup::from_word(const std::vector<int>& word) const {
  GroupElem w = identity();
  for (int s : word) {
    if (s < 0 || s >= rank_) throw std::out_of_range("generator index out of range");
    w = right_mul(w, s);
  }
  return w;
}

std::vector<int> CoxeterGroup::reduced_word(GroupElem w) const {
  std::vector<int> word;
  while (length(w) > 0) {
    for (int s = 0; s < rank_; ++s) {
      const GroupElem sw = left_mul(s, w);
      if (length(sw) < length(w)) {
        word.push_back(s);
        w = sw;
        break;
      }
    }
  }
  return word;
}

std::string CoxeterGroup::word_label(GroupElem w) const {
  auto word = reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (int g : word) s += std::to_string(g + 1);
  return s;
}

poset::Poset weak_order(const CoxeterGroup& g) {
  std::vector<std::string> labels;
  std::vector<poset::Cover> covers;
  for (GroupElem w = 0; w < g.order(); ++w) {
    labels.push_back(g.word_label(w));
    for (int s = 0; s < g.rank(); ++s) {
      const GroupElem ws = g.right_mul(w, s);
      if (g.length(ws) == g.length(w) + 1) covers.emplace_back(w, ws);
    }
  }
  return poset::Poset::from_covers(std::move(labels), covers);
}

bool weak_leq(const CoxeterGroup& g, GroupElem u, GroupElem w) {
  return g.inversions(u).is_subset_of(g.inversions(w));
}

}  // namespace cambrep::coxeter
