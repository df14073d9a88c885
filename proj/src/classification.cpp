#include "horo/classification.hpp"

#include "horo/chern.hpp"
#include "horo/errors.hpp"

namespace horo {

namespace {

constexpr const char* kRuleSeparator = " + ";

std::string join_rules(std::initializer_list<std::string> ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += kRuleSeparator;
    out += id;
  }
  return out;
}

Verdict homogeneous_verdict(bool two_fano, std::string rule) {
  // Every rational homogeneous space is K-polystable with stable tangent bundle.
  return {two_fano, std::move(rule), true, true};
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

const std::map<std::string, std::string>& rule_registry() {
  static const std::map<std::string, std::string> registry{
      {"homogeneous.A.end_nodes", "A_n/P^k is 2-Fano for k = 1, n"},
      {"homogeneous.A.middle",
       "A_n/P^k is 2-Fano for n = 2k-1, 2k when 2 <= k <= (n+1)/2 (k read up to k <-> n+1-k)"},
      {"homogeneous.A.unlisted", "A_n/P^k outside the 2-Fano list"},
      {"homogeneous.B.end_nodes", "B_n/P^k is 2-Fano for k = 1, n"},
      {"homogeneous.B.middle", "B_n/P^k is 2-Fano for 2n = 3k+1 when 2 <= k <= n-1"},
      {"homogeneous.B.unlisted", "B_n/P^k outside the 2-Fano list"},
      {"homogeneous.C.end_nodes", "C_n/P^k is 2-Fano for k = 1, n"},
      {"homogeneous.C.middle", "C_n/P^k is 2-Fano for 2n = 3k-2 when 2 <= k <= n-1"},
      {"homogeneous.C.unlisted", "C_n/P^k outside the 2-Fano list"},
      {"homogeneous.D.end_nodes", "D_n/P^k is 2-Fano for k = 1, n-1, n"},
      {"homogeneous.D.middle", "D_n/P^k is 2-Fano for 2n = 3k+2 when 2 <= k < n-1"},
      {"homogeneous.D.unlisted", "D_n/P^k outside the 2-Fano list"},
      {"homogeneous.E.listed", "E_n/P^k is 2-Fano for n = 6,7,8 and k = 1, 2, n"},
      {"homogeneous.E.unlisted", "E_n/P^k outside the 2-Fano list"},
      {"homogeneous.F.listed", "F_4/P^4 is 2-Fano"},
      {"homogeneous.F.unlisted", "F_4/P^k, k != 4, outside the 2-Fano list"},
      {"homogeneous.G.listed", "G_2/P^k is 2-Fano for k = 1, 2"},
      {"horospherical.two_orbit_list",
       "the non-homogeneous 2-Fano horospherical varieties of Picard rank 1 are X2 and "
       "X3(3k, 2k+1), k >= 1"},
      {"horospherical.ch2_derivation",
       "ch2.S_Y and ch2.S_Z derived from the blow-up and projective-bundle formulas; both "
       "positive iff 2-Fano"},
      {"linear_section.grassmannian",
       "a general codimension-c linear section of G(k,n), 2 <= k <= n/2, is 2-Fano iff n = 2k "
       "and c <= 1"},
      {"linear_section.orthogonal",
       "a general codimension-c linear section of OG+(k,2k), k >= 4, is 2-Fano iff c <= 3"},
      {"wci.criterion",
       "a smooth weighted complete intersection is 2-Fano iff sum d_i^2 < sum a_i^2 (and Fano)"},
      {"wci.not_fano", "sum d_i >= sum a_i: not Fano, hence not 2-Fano"},
  };
  return registry;
}

std::vector<std::string> rule_ids(const std::string& rule) {
  std::vector<std::string> ids;
  const std::string sep = kRuleSeparator;
  std::size_t start = 0;
  while (true) {
    const auto pos = rule.find(sep, start);
    ids.push_back(rule.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return ids;
}

Verdict homogeneous_two_fano(const LieType& t, int k) {
  const HomogeneousSpace space(t, k);  // validates k
  const int n = t.rank();
  switch (t.series()) {
    case Series::A: {
      if (k == 1 || k == n) return homogeneous_verdict(true, "homogeneous.A.end_nodes");
      const int kk = std::min(k, n + 1 - k);
      if (kk >= 2 && (n == 2 * kk - 1 || n == 2 * kk))
        return homogeneous_verdict(true, "homogeneous.A.middle");
      return homogeneous_verdict(false, "homogeneous.A.unlisted");
    }
    case Series::B:
      if (k == 1 || k == n) return homogeneous_verdict(true, "homogeneous.B.end_nodes");
      if (2 * n == 3 * k + 1) return homogeneous_verdict(true, "homogeneous.B.middle");
      return homogeneous_verdict(false, "homogeneous.B.unlisted");
    case Series::C:
      if (k == 1 || k == n) return homogeneous_verdict(true, "homogeneous.C.end_nodes");
      if (2 * n == 3 * k - 2) return homogeneous_verdict(true, "homogeneous.C.middle");
      return homogeneous_verdict(false, "homogeneous.C.unlisted");
    case Series::D:
      if (k == 1 || k == n - 1 || k == n)
        return homogeneous_verdict(true, "homogeneous.D.end_nodes");
      if (2 * n == 3 * k + 2) return homogeneous_verdict(true, "homogeneous.D.middle");
      return homogeneous_verdict(false, "homogeneous.D.unlisted");
    case Series::E:
      if (k == 1 || k == 2 || k == n) return homogeneous_verdict(true, "homogeneous.E.listed");
      return homogeneous_verdict(false, "homogeneous.E.unlisted");
    case Series::F:
      if (k == 4) return homogeneous_verdict(true, "homogeneous.F.listed");
      return homogeneous_verdict(false, "homogeneous.F.unlisted");
    case Series::G: return homogeneous_verdict(true, "homogeneous.G.listed");
  }
  throw DomainError("unknown series");
}

bool in_two_orbit_two_fano_list(const HorosphericalFamily& f) {
  switch (f.kind()) {
    case FamilyKind::X2: return true;
    case FamilyKind::X3: return f.n() % 3 == 0 && f.m() == 2 * (f.n() / 3) + 1;
    default: return false;
  }
}

StabilityAnnotations stability_annotations(const HorosphericalFamily& f) {
  StabilityAnnotations s;
  switch (f.kind()) {
    case FamilyKind::X1: s.tangent_stable = f.n() == 3; break;
    case FamilyKind::X2:
    case FamilyKind::X3:
    case FamilyKind::X5: s.tangent_stable = true; break;
    case FamilyKind::X4: s.tangent_stable = false; break;
  }
  // Aut(X) is not reductive for a two-orbit variety.
  s.k_polystable = false;
  return s;
}

Verdict horospherical_two_fano(const HorosphericalFamily& f) {
  const bool listed = in_two_orbit_two_fano_list(f);
  const Ch2Report derived = ch2_surfaces(f);
  if (listed != derived.two_fano) {
    throw ConsistencyError(f.descriptor() + ": column two_fano: derived " +
                           (derived.two_fano ? "true" : "false") + " (ch2.S_Y = " +
                           to_string(derived.ch2_dot_sy) + ", ch2.S_Z = " +
                           to_string(derived.ch2_dot_sz) + "), expected " +
                           (listed ? "true" : "false"));
  }
  const auto stability = stability_annotations(f);
  return {listed, join_rules({"horospherical.two_orbit_list", "horospherical.ch2_derivation"}),
          stability.tangent_stable, stability.k_polystable};
}

LinearSection LinearSection::grassmannian(int k, int n, int codim) {
  if (k < 2 || 2 * k > n)
    throw DomainError("G(k,n) sections need 2 <= k <= n/2, got G(" + std::to_string(k) + "," +
                      std::to_string(n) + ")");
  if (n > rank_cap() + 1)
    throw CapExceeded("G(" + std::to_string(k) + "," + std::to_string(n) +
                      ") exceeds rank cap " + std::to_string(rank_cap()));
  LinearSection s(SectionKind::Grassmannian, k, n, codim);
  if (codim < 0 || codim >= s.ambient_dim())
    throw DomainError("section codimension must lie in [0, " + std::to_string(s.ambient_dim()) +
                      "), got " + std::to_string(codim));
  return s;
}

LinearSection LinearSection::orthogonal(int k, int codim) {
  if (k < 4) throw DomainError("OG(k,2k) sections need k >= 4, got k=" + std::to_string(k));
  if (k > rank_cap())
    throw CapExceeded("OG(" + std::to_string(k) + "," + std::to_string(2 * k) +
                      ") exceeds rank cap " + std::to_string(rank_cap()));
  LinearSection s(SectionKind::OrthogonalGrassmannian, k, 2 * k, codim);
  if (codim < 0 || codim >= s.ambient_dim())
    throw DomainError("section codimension must lie in [0, " + std::to_string(s.ambient_dim()) +
                      "), got " + std::to_string(codim));
  return s;
}

int LinearSection::ambient_dim() const {
  if (kind_ == SectionKind::Grassmannian) return k_ * (n_ - k_);
  return k_ * (k_ - 1) / 2;
}

std::string LinearSection::descriptor() const {
  const std::string head = kind_ == SectionKind::Grassmannian ? "G(" : "OG(";
  return head + std::to_string(k_) + "," + std::to_string(n_) + ")+c" + std::to_string(codim_);
}

Verdict linear_section_two_fano(const LinearSection& s) {
  if (s.kind() == SectionKind::Grassmannian) {
    if (s.codim() == 0) {
      // G(k,n) itself: the homogeneous list decides, A_{n-1}/P^k.
      Verdict v = homogeneous_two_fano(LieType(Series::A, s.n() - 1), s.k());
      v.rule = join_rules({v.rule, "linear_section.grassmannian"});
      return v;
    }
    return {s.n() == 2 * s.k() && s.codim() <= 1, "linear_section.grassmannian", std::nullopt,
            std::nullopt};
  }
  if (s.codim() == 0) {
    // OG+(k,2k) = D_k/P^k.
    Verdict v = homogeneous_two_fano(LieType(Series::D, s.k()), s.k());
    v.rule = join_rules({v.rule, "linear_section.orthogonal"});
    return v;
  }
  return {s.codim() <= 3, "linear_section.orthogonal", std::nullopt, std::nullopt};
}

Verdict wci_two_fano(const CompleteIntersection& x) {
  Verdict v;
  const bool fano = is_fano(x);
  v.two_fano = is_two_fano(x);
  v.rule = fano ? "wci.criterion" : "wci.not_fano";
  if (x.dimension() >= 3) v.tangent_stable = true;
  return v;
}

Verdict classify(const ClassifiedVariety& v) {
  return std::visit(
      overloaded{
          [](const HomogeneousSpace& h) { return homogeneous_two_fano(h.type, h.node); },
          [](const HorosphericalFamily& f) { return horospherical_two_fano(f); },
          [](const LinearSection& s) { return linear_section_two_fano(s); },
          [](const CompleteIntersection& x) { return wci_two_fano(x); },
      },
      v);
}

std::string descriptor(const ClassifiedVariety& v) {
  return std::visit([](const auto& x) { return x.descriptor(); }, v);
}

std::string kind_name(const ClassifiedVariety& v) {
  return std::visit(overloaded{
                        [](const HomogeneousSpace&) { return std::string("homogeneous"); },
                        [](const HorosphericalFamily&) { return std::string("horospherical"); },
                        [](const LinearSection&) { return std::string("linear_section"); },
                        [](const CompleteIntersection&) { return std::string("wci"); },
                    },
                    v);
}

std::vector<Classified> enumerate(const EnumerationBounds& b) {
  for (int bound : {b.max_rank, b.max_n, b.max_codim, b.max_degree}) {
    if (bound > b.cap)
      throw CapExceeded("enumeration bound " + std::to_string(bound) + " exceeds cap " +
                        std::to_string(b.cap));
    if (bound < 0) throw DomainError("enumeration bounds must be non-negative");
  }
  if (b.cap > rank_cap())
    throw CapExceeded("enumeration cap " + std::to_string(b.cap) + " exceeds rank cap " +
                      std::to_string(rank_cap()));

  std::vector<ClassifiedVariety> grid;

  if (b.homogeneous) {
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G}) {
      if (b.series && *b.series != s) continue;
      for (int r = LieType::min_rank(s); r <= b.max_rank; ++r) {
        if (!LieType::valid(s, r)) continue;
        const LieType t(s, r);
        for (int k = 1; k <= r; ++k) grid.emplace_back(HomogeneousSpace(t, k));
      }
    }
  }

  if (b.horospherical) {
    for (int n = 3; n <= b.max_n; ++n) grid.emplace_back(HorosphericalFamily::X1(n));
    if (b.max_n >= 3) grid.emplace_back(HorosphericalFamily::X2());
    for (int n = 2; n <= b.max_n; ++n)
      for (int m = 2; m <= n; ++m) grid.emplace_back(HorosphericalFamily::X3(n, m));
    if (b.max_n >= 4) grid.emplace_back(HorosphericalFamily::X4());
    if (b.max_n >= 2) grid.emplace_back(HorosphericalFamily::X5());
  }

  if (b.linear_sections) {
    for (int n = 4; n <= b.max_n; ++n)
      for (int k = 2; 2 * k <= n; ++k)
        for (int c = 0; c <= b.max_codim && c < k * (n - k); ++c)
          grid.emplace_back(LinearSection::grassmannian(k, n, c));
    for (int k = 4; 2 * k <= b.max_n; ++k)
      for (int c = 0; c <= b.max_codim && c < k * (k - 1) / 2; ++c)
        grid.emplace_back(LinearSection::orthogonal(k, c));
  }

  if (b.hypersurfaces) {
    for (int n = 2; n <= b.max_n; ++n)
      for (int d = 1; d <= b.max_degree; ++d)
        grid.emplace_back(CompleteIntersection(
            WeightedProjectiveSpace(std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 1)),
            {d}));
  }

  std::vector<Classified> out;
  out.reserve(grid.size());
  for (auto& v : grid) {
    Verdict verdict = classify(v);
    out.emplace_back(std::move(v), std::move(verdict));
  }
  return out;
}

}  // namespace horo
