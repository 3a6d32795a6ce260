#include "dfinv/tcone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "dfinv/error.hpp"

namespace dfinv {

std::vector<Exponent> support(const LaurentPoly& f) {
  std::vector<Exponent> s;
  s.reserve(f.size());
  for (const auto& [a, c] : f.terms()) s.push_back(a);
  return s;
}

bool is_admissible(const AdmissiblePartition& p, const LaurentPoly& f) {
  std::vector<Rational> coeffs;
  for (const auto& [a, c] : f.terms()) coeffs.push_back(c);
  std::vector<int> seen(coeffs.size(), 0);
  for (const auto& part : p.parts) {
    if (part.empty()) return false;
    Rational s = 0;
    for (auto i : part) {
      if (i >= coeffs.size() || seen[i]++) return false;
      s += coeffs[i];
    }
    if (!is_zero(s)) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
}

RationalSubspace partition_subspace(const AdmissiblePartition& p, const LaurentPoly& f) {
  const auto s = support(f);
  const std::size_t n = f.num_vars();
  std::vector<RationalVector> eqs;
  for (const auto& part : p.parts)
    for (std::size_t k = 1; k < part.size(); ++k) {
      RationalVector d(n);
      for (std::size_t v = 0; v < n; ++v) d[v] = s.at(part[k])[v] - s.at(part[0])[v];
      eqs.push_back(std::move(d));
    }
  if (eqs.empty()) return RationalSubspace::full(n);
  return RationalSubspace::solutions(RationalMatrix::from_rows(eqs, n));
}

namespace {

using Mask = std::uint32_t;

class PartitionSearch {
 public:
  explicit PartitionSearch(const LaurentPoly& f) {
    std::vector<Rational> c;
    for (const auto& [a, v] : f.terms()) c.push_back(v);
    const std::size_t k = c.size();
    const Mask total = Mask(1) << k;
    std::vector<Rational> sums(total);
    zero_.assign(total, false);
    std::vector<char> has_zero(total, false);
    for (Mask m = 1; m < total; ++m) {
      Mask low = m & (~m + 1);
      sums[m] = sums[m ^ low] + c[std::countr_zero(low)];
      zero_[m] = is_zero(sums[m]);
    }
    // has_zero[m]: some non-empty submask of m has zero sum.
    for (Mask m = 1; m < total; ++m) {
      bool any = zero_[m];
      for (Mask r = m; r && !any; r &= r - 1) any = has_zero[m ^ (r & (~r + 1))];
      has_zero[m] = any;
    }
    minimal_.assign(total, false);
    for (Mask m = 1; m < total; ++m) {
      if (!zero_[m]) continue;
      bool minimal = true;
      for (Mask r = m; r && minimal; r &= r - 1) {
        Mask rest = m ^ (r & (~r + 1));
        if (rest && has_zero[rest]) minimal = false;
      }
      minimal_[m] = minimal;
    }
    all_ = total - 1;
  }

  std::vector<std::vector<Mask>> run() {
    std::vector<Mask> current;
    dfs(all_, current);
    return found_;
  }

 private:
  void dfs(Mask remaining, std::vector<Mask>& current) {
    if (remaining == 0) {
      found_.push_back(current);
      return;
    }
    Mask anchor = remaining & (~remaining + 1);
    Mask rest = remaining ^ anchor;
    // Enumerate submasks of `rest` in increasing order, each with the anchor.
    Mask sub = 0;
    for (;;) {
      Mask part = sub | anchor;
      // The rest of `remaining` then sums to zero as well.
      if (minimal_[part]) {
        current.push_back(part);
        dfs(remaining ^ part, current);
        current.pop_back();
      }
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
  }

  std::vector<char> zero_;
  std::vector<char> minimal_;
  Mask all_ = 0;
  std::vector<std::vector<Mask>> found_;
};

AdmissiblePartition to_partition(const std::vector<Mask>& masks) {
  AdmissiblePartition p;
  for (Mask m : masks) {
    std::vector<std::size_t> part;
    for (Mask r = m; r; r &= r - 1) part.push_back(static_cast<std::size_t>(std::countr_zero(r)));
    p.parts.push_back(std::move(part));
  }
  return p;
}

}  // namespace

std::vector<AdmissiblePartition> admissible_partitions_maximal(const LaurentPoly& f,
                                                               std::size_t max_support) {
  if (f.is_zero()) throw PreconditionError("tangent cone of the zero polynomial is everything");
  if (f.size() > max_support || f.size() > 30)
    throw GuardExceeded("support of size " + std::to_string(f.size()) +
                        " exceeds the limit " + std::to_string(max_support));
  if (!is_zero(f.value_at_one())) return {};

  std::vector<AdmissiblePartition> candidates;
  for (const auto& masks : PartitionSearch(f).run()) candidates.push_back(to_partition(masks));
  std::vector<RationalSubspace> spaces;
  for (const auto& p : candidates) spaces.push_back(partition_subspace(p, f));

  std::vector<AdmissiblePartition> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j)
      if (spaces[j] != spaces[i] && contains(spaces[j], spaces[i])) maximal = false;
    if (maximal) out.push_back(candidates[i]);
  }
  return out;
}

SubspaceArrangement::SubspaceArrangement(std::size_t ambient_dim,
                                         const std::vector<RationalSubspace>& members)
    : n_(ambient_dim) {
  for (const auto& l : members) add(l);
}

void SubspaceArrangement::add(const RationalSubspace& l) {
  if (l.ambient_dim() != n_) throw DimensionMismatch("SubspaceArrangement: subspace dimension");
  for (const auto& m : members_)
    if (contains(m, l)) return;
  std::erase_if(members_, [&](const RationalSubspace& m) { return contains(l, m); });
  members_.insert(std::upper_bound(members_.begin(), members_.end(), l), l);
}

bool SubspaceArrangement::contains_vector(const RationalVector& v) const {
  return std::any_of(members_.begin(), members_.end(),
                     [&](const RationalSubspace& m) { return m.contains_vector(v); });
}

SubspaceArrangement unite(const SubspaceArrangement& a, const SubspaceArrangement& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("unite");
  SubspaceArrangement out = a;
  for (const auto& l : b.subspaces()) out.add(l);
  return out;
}

SubspaceArrangement intersect(const SubspaceArrangement& a, const SubspaceArrangement& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect");
  SubspaceArrangement out(a.ambient_dim());
  for (const auto& x : a.subspaces())
    for (const auto& y : b.subspaces()) out.add(intersect(x, y));
  return out;
}

SubspaceArrangement tangent_cone_polys(const std::vector<LaurentPoly>& polys,
                                       std::size_t max_support) {
  if (polys.empty()) throw PreconditionError("tangent_cone_polys: no polynomials given");
  const std::size_t n = polys.front().num_vars();
  SubspaceArrangement acc(n, {RationalSubspace::full(n)});
  for (const auto& f : polys) {
    if (f.num_vars() != n) throw DimensionMismatch("tangent_cone_polys: variable counts differ");
    SubspaceArrangement cone(n);
    for (const auto& p : admissible_partitions_maximal(f, max_support))
      cone.add(partition_subspace(p, f));
    acc = intersect(acc, cone);
  }
  return acc;
}

SubspaceArrangement tangent_cone_description(const VarietyDescription& w) {
  SubspaceArrangement out(w.ambient_dim());
  for (const auto& c : w.components())
    if (c.contains_identity()) out.add(c.subspace());
  return out;
}

}  // namespace dfinv
