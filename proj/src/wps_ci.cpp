#include "horo/wps_ci.hpp"

#include <numeric>

#include "horo/errors.hpp"

namespace horo {

namespace {

Integer power_sum(const std::vector<std::int64_t>& values, unsigned long k) {
  Integer sum = 0;
  Integer term;
  for (auto v : values) {
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(v), k);
    sum += term;
  }
  return sum;
}

void require_well_formed(const CompleteIntersection& x) {
  if (!x.ambient().well_formed())
    throw DomainError(x.descriptor() + ": ambient weighted projective space is not well-formed");
}

}  // namespace

bool is_well_formed(std::span<const std::int64_t> weights) {
  if (weights.empty()) throw DomainError("empty weight list");
  for (std::size_t skip = 0; skip < weights.size(); ++skip) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (i != skip) g = std::gcd(g, weights[i]);
    // A single weight leaves an empty gcd of 0; P(a) is a point, not well-formed.
    if (g != 1) return false;
  }
  return true;
}

WeightedProjectiveSpace::WeightedProjectiveSpace(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw DomainError("weighted projective space needs at least 2 weights");
  for (auto a : weights_)
    if (a <= 0) throw DomainError("weights must be positive, got " + std::to_string(a));
}

CompleteIntersection::CompleteIntersection(WeightedProjectiveSpace ambient,
                                           std::vector<std::int64_t> degrees)
    : ambient_(std::move(ambient)), degrees_(std::move(degrees)) {
  for (auto d : degrees_)
    if (d <= 0) throw DomainError("degrees must be positive, got " + std::to_string(d));
  if (codim() >= ambient_.n())
    throw DomainError("complete intersection of " + std::to_string(codim()) +
                      " hypersurfaces in a " + std::to_string(ambient_.n()) +
                      "-dimensional space has no positive dimension");
}

std::string CompleteIntersection::descriptor() const {
  std::string s = "WCI(";
  for (std::size_t i = 0; i < ambient_.weights().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ambient_.weights()[i]);
  }
  s += ';';
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    s += i ? "," : " ";
    s += std::to_string(degrees_[i]);
  }
  return s + ')';
}

Rational ch_coefficient(const CompleteIntersection& x, int k) {
  if (k < 1 || k > x.ambient().n())
    throw DomainError("ch coefficient index " + std::to_string(k) + " out of range 1.." +
                      std::to_string(x.ambient().n()));
  const auto uk = static_cast<unsigned long>(k);
  Integer factorial;
  mpz_fac_ui(factorial.get_mpz_t(), uk);
  return make_rational(power_sum(x.ambient().weights(), uk) - power_sum(x.degrees(), uk),
                       factorial);
}

bool is_fano(const CompleteIntersection& x) {
  require_well_formed(x);
  return power_sum(x.degrees(), 1) < power_sum(x.ambient().weights(), 1);
}

bool is_two_fano(const CompleteIntersection& x) {
  return is_fano(x) && power_sum(x.degrees(), 2) < power_sum(x.ambient().weights(), 2);
}

}  // namespace horo
