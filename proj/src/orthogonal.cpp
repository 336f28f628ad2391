#include "padic/orthogonal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

namespace {

std::int64_t floor_of(const Exponent& q) {
  const std::int64_t n = q.numerator();
  const std::int64_t d = q.denominator();  // always positive
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

// Depth-first walk over digit tuples of one group in lexicographic order,
// restricted to tuples whose first nonzero digit is 1. Scaling a tuple by a
// unit does not change whether it violates, so the smallest violating tuple
// always has this form.
class GroupSearch {
 public:
  GroupSearch(const Norm& norm, const std::vector<Vector>& scaled, const std::vector<Scalar>& digits,
              const NormValue& group_norm)
      : norm_(norm), scaled_(scaled), digits_(digits), group_norm_(group_norm), chosen_(scaled.size(), 0) {}

  std::optional<std::pair<std::vector<std::uint64_t>, Vector>> run(const Vector& zero) {
    Vector partial = zero;
    if (walk(0, partial, false)) return std::pair{chosen_, found_};
    return std::nullopt;
  }

 private:
  bool walk(std::size_t pos, const Vector& partial, bool started) {
    if (pos == scaled_.size()) {
      if (!started) return false;
      if (norm_.eval(partial) < group_norm_) {
        found_ = partial;
        return true;
      }
      return false;
    }
    const std::size_t limit = started ? digits_.size() : 2;
    for (std::size_t d = 0; d < limit; ++d) {
      chosen_[pos] = d;
      if (d == 0) {
        if (walk(pos + 1, partial, started)) return true;
        continue;
      }
      Vector next = partial;
      axpy(next, digits_[d], scaled_[pos]);
      if (walk(pos + 1, next, true)) return true;
    }
    chosen_[pos] = 0;
    return false;
  }

  const Norm& norm_;
  const std::vector<Vector>& scaled_;
  const std::vector<Scalar>& digits_;
  const NormValue& group_norm_;
  std::vector<std::uint64_t> chosen_;
  Vector found_;
};

}  // namespace

std::optional<OrthogonalityViolation> find_violation(std::span<const Vector> vectors, const Norm& norm) {
  if (vectors.empty()) return std::nullopt;
  const FieldConfig f = vectors.front().front().field();
  const std::size_t n = vectors.size();

  std::vector<Exponent> orders;
  orders.reserve(n);
  for (const auto& v : vectors) {
    const NormValue nv = norm.eval(v);
    if (nv.is_zero()) throw MathError("orthogonality test on a zero vector");
    orders.push_back(nv.order());
  }

  // Groups keyed by the fractional part of the order, in order of first member.
  std::vector<std::vector<std::size_t>> groups;
  std::map<Exponent, std::size_t> group_of;
  for (std::size_t i = 0; i < n; ++i) {
    const Exponent frac = orders[i] - Exponent(floor_of(orders[i]));
    auto [it, inserted] = group_of.try_emplace(frac, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }

  std::vector<Scalar> digits;
  for (std::uint64_t d = 0; d < f.p; ++d) digits.push_back(Scalar::from_integer(f, static_cast<long long>(d)));

  for (const auto& group : groups) {
    if (group.size() < 2) continue;
    Exponent top = orders[group.front()];
    for (std::size_t i : group) top = std::min(top, orders[i]);
    std::vector<Vector> scaled;
    std::vector<std::int64_t> shifts;
    for (std::size_t i : group) {
      const Exponent k = top - orders[i];  // integral and <= 0
      shifts.push_back(k.numerator());
      scaled.push_back(shifted(vectors[i], k.numerator()));
    }
    const NormValue group_norm = NormValue::from_order(top);
    GroupSearch search(norm, scaled, digits, group_norm);
    auto hit = search.run(zero_vector(f, vectors.front().size()));
    if (!hit) continue;
    OrthogonalityViolation v;
    v.digits.assign(n, 0);
    v.shifts.assign(n, 0);
    for (std::size_t g = 0; g < group.size(); ++g) {
      v.digits[group[g]] = hit->first[g];
      v.shifts[group[g]] = shifts[g];
    }
    v.combination = std::move(hit->second);
    v.norm = norm.eval(v.combination);
    v.group_norm = group_norm;
    return v;
  }
  return std::nullopt;
}

bool is_orthogonal(std::span<const Vector> vectors, const Norm& norm) {
  if (vectors.empty()) return true;
  if (rank(Matrix::from_columns(vectors)) != vectors.size()) throw MathError("orthogonality test on dependent vectors");
  return !find_violation(vectors, norm).has_value();
}

OrthogonalBasis orthogonalize(const Lattice& lattice, const Norm& norm) {
  OrthogonalBasis out;
  std::vector<Vector> basis = lattice.basis_vectors();

  auto product = [&] {
    NormValue prod = NormValue::one();
    for (const auto& v : basis) prod *= norm.eval(v);
    return prod;
  };

  out.norm_products.push_back(product());
  // The product of norms strictly decreases in a discrete set bounded below,
  // so this terminates; the cap only guards against a broken norm.
  constexpr std::size_t kMaxReplacements = 100000;
  while (auto violation = find_violation(basis, norm)) {
    if (out.replacements == kMaxReplacements) throw std::logic_error("orthogonalize did not terminate");
    // The unit-coefficient members are those with the most negative shift.
    std::int64_t min_shift = 0;
    bool any = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (violation->digits[i] == 0) continue;
      if (!any || violation->shifts[i] < min_shift) min_shift = violation->shifts[i];
      any = true;
    }
    std::size_t target = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (violation->digits[i] != 0 && violation->shifts[i] == min_shift) target = i;
    }
    basis[target] = shifted(violation->combination, -min_shift);
    ++out.replacements;
    out.norm_products.push_back(product());
  }

  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<NormValue> norms;
  for (const auto& v : basis) norms.push_back(norm.eval(v));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });
  for (std::size_t i : order) {
    out.vectors.push_back(basis[i]);
    out.maxima.push_back(norms[i]);
  }
  out.certified = true;
  return out;
}

std::vector<NormValue> successive_maxima(const Lattice& lattice, const Norm& norm) {
  return orthogonalize(lattice, norm).maxima;
}

}  // namespace padic
