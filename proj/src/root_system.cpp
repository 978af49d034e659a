#include "cxg/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cxg {

namespace {

struct DiagramData {
  uint32_t rank;
  // Gram matrix of the simple roots (exact, Z[phi] entries). Short roots
  // have norm 2; the long F4 roots have norm 4.
  std::vector<std::vector<GoldenInt>> gram;
  // Coxeter matrix m(i,j).
  std::vector<std::vector<uint32_t>> coxeter;
};

DiagramData make_diagram(CoxeterType t) {
  const GoldenInt phi = GoldenInt::phi();
  auto simply_laced = [](uint32_t rank,
                         std::vector<std::pair<uint32_t, uint32_t>> edges) {
    DiagramData d;
    d.rank = rank;
    d.gram.assign(rank, std::vector<GoldenInt>(rank, GoldenInt(0)));
    d.coxeter.assign(rank, std::vector<uint32_t>(rank, 2));
    for (uint32_t i = 0; i < rank; ++i) {
      d.gram[i][i] = GoldenInt(2);
      d.coxeter[i][i] = 1;
    }
    for (auto [i, j] : edges) {
      d.gram[i][j] = d.gram[j][i] = GoldenInt(-1);
      d.coxeter[i][j] = d.coxeter[j][i] = 3;
    }
    return d;
  };

  switch (t) {
    case CoxeterType::H3: {
      DiagramData d = simply_laced(3, {{1, 2}});
      d.gram[0][0] = GoldenInt(2);
      d.gram[0][1] = d.gram[1][0] = -phi;
      d.coxeter[0][1] = d.coxeter[1][0] = 5;
      return d;
    }
    case CoxeterType::H4: {
      DiagramData d = simply_laced(4, {{1, 2}, {2, 3}});
      d.gram[0][1] = d.gram[1][0] = -phi;
      d.coxeter[0][1] = d.coxeter[1][0] = 5;
      return d;
    }
    case CoxeterType::F4: {
      DiagramData d;
      d.rank = 4;
      d.gram = {{GoldenInt(4), GoldenInt(-2), GoldenInt(0), GoldenInt(0)},
                {GoldenInt(-2), GoldenInt(4), GoldenInt(-2), GoldenInt(0)},
                {GoldenInt(0), GoldenInt(-2), GoldenInt(2), GoldenInt(-1)},
                {GoldenInt(0), GoldenInt(0), GoldenInt(-1), GoldenInt(2)}};
      d.coxeter = {{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}};
      return d;
    }
    case CoxeterType::E6:
      return simply_laced(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
    case CoxeterType::E7:
      return simply_laced(7, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}});
  }
  throw StructuralError("unknown Coxeter type");
}

using Coeffs = std::vector<GoldenInt>;

// s_i(c): subtract 2 (Gc)_i / G_ii from the i-th coefficient. Exact by
// crystallography (or Z[phi]-integrality for the H types).
Coeffs reflect(const DiagramData& d, uint32_t i, const Coeffs& c) {
  GoldenInt ip(0);
  for (uint32_t j = 0; j < d.rank; ++j) ip += d.gram[i][j] * c[j];
  GoldenInt two_ip = ip + ip;
  GoldenInt k;
  if (d.gram[i][i] == GoldenInt(2))
    k = two_ip.divide_exact(2);
  else if (d.gram[i][i] == GoldenInt(4))
    k = two_ip.divide_exact(4);
  else
    throw InvariantError("unexpected simple root norm");
  Coeffs out = c;
  out[i] = out[i] - k;
  return out;
}

}  // namespace

const char* coxeter_type_name(CoxeterType t) {
  switch (t) {
    case CoxeterType::H3: return "H3";
    case CoxeterType::H4: return "H4";
    case CoxeterType::F4: return "F4";
    case CoxeterType::E6: return "E6";
    case CoxeterType::E7: return "E7";
  }
  return "?";
}

RootSystem RootSystem::build(CoxeterType type) {
  DiagramData d = make_diagram(type);

  std::set<Coeffs> closed;
  std::vector<Coeffs> queue;
  for (uint32_t i = 0; i < d.rank; ++i) {
    Coeffs e(d.rank, GoldenInt(0));
    e[i] = GoldenInt(1);
    if (closed.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    Coeffs c = std::move(queue.back());
    queue.pop_back();
    for (uint32_t i = 0; i < d.rank; ++i) {
      Coeffs r = reflect(d, i, c);
      if (closed.insert(r).second) queue.push_back(r);
    }
  }

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = d.rank;
  rs.roots_.assign(closed.begin(), closed.end());  // sorted by set order

  std::map<Coeffs, uint32_t> index;
  for (uint32_t i = 0; i < rs.roots_.size(); ++i) index[rs.roots_[i]] = i;

  rs.reflection_.assign(d.rank, {});
  for (uint32_t i = 0; i < d.rank; ++i) {
    rs.reflection_[i].resize(rs.roots_.size());
    for (uint32_t r = 0; r < rs.roots_.size(); ++r) {
      auto it = index.find(reflect(d, i, rs.roots_[r]));
      if (it == index.end())
        throw InvariantError("root system not closed under reflection");
      rs.reflection_[i][r] = it->second;
    }
  }
  return rs;
}

uint32_t RootSystem::negative_of(uint32_t root_index) const {
  Coeffs neg = roots_[root_index];
  for (auto& x : neg) x = -x;
  auto it = std::lower_bound(roots_.begin(), roots_.end(), neg);
  if (it == roots_.end() || *it != neg)
    throw InvariantError("root list is missing a negative");
  return static_cast<uint32_t>(it - roots_.begin());
}

uint32_t RootSystem::coxeter_label(uint32_t i, uint32_t j) const {
  return make_diagram(type_).coxeter[i][j];
}

std::vector<Permutation> RootSystem::simple_reflection_perms() const {
  std::vector<Permutation> gens;
  gens.reserve(rank_);
  for (uint32_t i = 0; i < rank_; ++i) {
    std::vector<uint32_t> img(reflection_[i].begin(), reflection_[i].end());
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return gens;
}

std::string RootSystem::dump() const {
  std::ostringstream os;
  os << coxeter_type_name(type_) << " rank=" << rank_
     << " roots=" << roots_.size() << "\n";
  for (const auto& r : roots_) {
    for (uint32_t j = 0; j < rank_; ++j)
      os << (j ? " " : "") << r[j].to_string();
    os << "\n";
  }
  for (uint32_t i = 0; i < rank_; ++i) {
    os << "s" << (i + 1) << ":";
    for (uint32_t v : reflection_[i]) os << " " << (v + 1);
    os << "\n";
  }
  return os.str();
}

}  // namespace cxg
