#include "burniat/delpezzo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "burniat/numerics.hpp"

namespace burniat {

std::string DPClass::to_string() const {
  std::ostringstream os;
  os << "(" << n << "; " << a << ", " << b << ", " << c << ")";
  return os.str();
}

Int intersect(const DPClass& x, const DPClass& y) { return x.n * y.n - x.a * y.a - x.b * y.b - x.c * y.c; }

DPClass canonical_Y() { return {-3, -1, -1, -1}; }

DPClass to_dp(const DivClass& D) { return {D.n(), D.a0(), D.b0(), D.c0()}; }

DivClass lift_to_X(const DPClass& D, TorsionClass t) { return DivClass(3 * D.n - D.a - D.b - D.c, D.a, D.b, D.c, t); }

DPClass curve_class_Y(Curve c) { return to_dp(generator(c)); }

DPClass pencil(int i) {
  switch (i) {
    case 1: return curve_class_Y(Curve::A1);
    case 2: return curve_class_Y(Curve::B1);
    case 3: return curve_class_Y(Curve::C1);
  }
  throw std::out_of_range("pencil index must be 1..3");
}

DPClass contraction(int j) {
  switch (j) {
    case 1: return {1, 0, 0, 0};
    case 2: return {2, 1, 1, 1};
  }
  throw std::out_of_range("contraction index must be 1..2");
}

namespace {

constexpr std::array<Ray, 6> kRays = {{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};

bool relations_hold(const std::array<Curve, 6>& curves) {
  for (const Ray m : {Ray{1, 0}, Ray{0, 1}}) {
    DPClass sum;
    for (int i = 0; i < 6; ++i) sum = sum + (m.x * kRays[i].x + m.y * kRays[i].y) * curve_class_Y(curves[i]);
    if (sum != DPClass{}) return false;
  }
  return true;
}

int ray_index(Ray r) {
  for (int i = 0; i < 6; ++i)
    if (kRays[i] == r) return i;
  throw std::logic_error("missing coordinate ray");
}

}  // namespace

std::array<std::array<Int, 6>, 6> ToricModel::toric_gram() const {
  std::array<std::array<Int, 6>, 6> g{};
  for (int i = 0; i < 6; ++i) {
    const Ray prev = rays[(i + 5) % 6], next = rays[(i + 1) % 6], v = rays[i];
    // v_{i-1} + v_{i+1} = b v_i and D_i^2 = -b on a smooth complete toric surface.
    const Ray s{prev.x + next.x, prev.y + next.y};
    const Int b = v.x != 0 ? s.x / v.x : s.y / v.y;
    g[i][i] = -b;
    g[i][(i + 1) % 6] = g[(i + 1) % 6][i] = 1;
  }
  return g;
}

std::array<Int, 6> ToricModel::decompose(const DPClass& D) const {
  // A0, B0, C0 and A3 = H - B0 - C0 form a basis of Pic Y.
  std::array<Int, 6> a{};
  for (int i = 0; i < 6; ++i) {
    switch (curves[i]) {
      case Curve::A0: a[i] = -D.a; break;
      case Curve::B0: a[i] = D.n - D.b; break;
      case Curve::C0: a[i] = D.n - D.c; break;
      case Curve::A3: a[i] = D.n; break;
      default: a[i] = 0;
    }
  }
  return a;
}

Int ToricModel::count_sections(const std::array<Int, 6>& a) const {
  const int px = ray_index({1, 0}), nx = ray_index({-1, 0}), py = ray_index({0, 1}), ny = ray_index({0, -1});
  const Int x0 = -a[px], x1 = a[nx], y0 = -a[py], y1 = a[ny];
  Int count = 0;
  for (Int x = x0; x <= x1; ++x)
    for (Int y = y0; y <= y1; ++y) {
      bool in = true;
      for (int i = 0; in && i < 6; ++i) in = rays[i].x * x + rays[i].y * y >= -a[i];
      count += in;
    }
  return count;
}

std::vector<std::array<Curve, 6>> valid_toric_assignments() {
  std::array<Curve, 6> perm = {Curve::A0, Curve::B0, Curve::C0, Curve::A3, Curve::B3, Curve::C3};
  std::sort(perm.begin(), perm.end());
  ToricModel probe{kRays, {}};
  const auto gram = probe.toric_gram();
  std::vector<std::array<Curve, 6>> out;
  do {
    bool ok = relations_hold(perm);
    for (int i = 0; ok && i < 6; ++i)
      for (int j = 0; ok && j < 6; ++j) ok = intersect(curve_class_Y(perm[i]), curve_class_Y(perm[j])) == gram[i][j];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

const ToricModel& toric_model() {
  static const ToricModel model = [] {
    const auto all = valid_toric_assignments();
    if (all.empty()) throw std::logic_error("no toric assignment matches the hexagon");
    return ToricModel{kRays, all.front()};
  }();
  return model;
}

Int h0_Y(const DPClass& D) {
  const ToricModel& m = toric_model();
  return m.count_sections(m.decompose(D));
}

Int chi_Y(const DPClass& D) {
  const Int q = intersect(D, D - canonical_Y());
  return 1 + q / 2;
}

std::array<Int, 3> h_all_Y(const DPClass& D) {
  const Int h0 = h0_Y(D), h2 = h0_Y(canonical_Y() - D);
  const Int h1 = h0 + h2 - chi_Y(D);
  if (h1 < 0) throw std::logic_error("h_all_Y: negative h1 for " + D.to_string());
  return {h0, h1, h2};
}

DPCollectionReport check_dp_collection(const std::vector<DPClass>& classes, const std::vector<std::string>& labels,
                                       const std::vector<int>& blocks,
                                       const std::vector<std::vector<Int>>& expected_hom) {
  const std::size_t n = classes.size();
  DPCollectionReport rep;
  rep.classes = classes;
  rep.labels = labels;
  rep.blocks = blocks;
  rep.cohomology.assign(n, std::vector<std::array<Int, 3>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rep.cohomology[i][j] = h_all_Y(classes[j] - classes[i]);

  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int k = 0; k < blocks[b]; ++k) block_of.push_back(b);
  if (block_of.size() != n) throw std::invalid_argument("block sizes must sum to the collection length");

  auto name = [&](std::size_t i) { return i < labels.size() ? labels[i] : "D" + std::to_string(i + 1); };
  auto pair = [&](std::size_t i, std::size_t j) { return "(" + name(i) + "," + name(j) + ")"; };
  auto fmt = [](const std::array<Int, 3>& h) {
    return "(" + std::to_string(h[0]) + "," + std::to_string(h[1]) + "," + std::to_string(h[2]) + ")";
  };

  DPCheck diag{"diagonal", true, ""}, strong{"strong", true, ""}, exc{"exceptional", true, ""},
      orth{"block-orthogonal", true, ""};
  for (std::size_t i = 0; i < n; ++i) {
    if (rep.cohomology[i][i] != std::array<Int, 3>{1, 0, 0}) {
      diag.passed = false;
      diag.detail += pair(i, i) + "=" + fmt(rep.cohomology[i][i]) + " ";
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& h = rep.cohomology[i][j];
      if (i < j && (h[1] != 0 || h[2] != 0)) {
        strong.passed = false;
        strong.detail += pair(i, j) + "=" + fmt(h) + " ";
      }
      if (i > j && h != std::array<Int, 3>{0, 0, 0}) {
        exc.passed = false;
        exc.detail += pair(i, j) + "=" + fmt(h) + " ";
      }
      if (i < j && block_of[i] == block_of[j] &&
          (h != std::array<Int, 3>{0, 0, 0} || rep.cohomology[j][i] != std::array<Int, 3>{0, 0, 0})) {
        orth.passed = false;
        orth.detail += pair(i, j) + " ";
      }
    }
  }
  rep.checks = {diag, strong, exc, orth};
  if (!expected_hom.empty()) {
    DPCheck homs{"hom-table", true, ""};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rep.cohomology[i][j][0] != expected_hom.at(i).at(j)) {
          homs.passed = false;
          homs.detail += pair(i, j) + " ";
        }
    rep.checks.push_back(homs);
  }
  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(), [](const DPCheck& c) { return c.passed; });
  return rep;
}

std::vector<DPClass> sigma_collection() {
  return {DPClass{}, pencil(1), pencil(2), pencil(3), contraction(1), contraction(2)};
}

std::vector<std::string> sigma_labels() { return {"O", "f1", "f2", "f3", "h1", "h2"}; }

std::vector<std::vector<Int>> sigma_expected_hom() {
  return {{1, 2, 2, 2, 3, 3},
          {0, 1, 0, 0, 1, 1},
          {0, 0, 1, 0, 1, 1},
          {0, 0, 0, 1, 1, 1},
          {0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 1}};
}

DPCollectionReport verify_sigma() {
  return check_dp_collection(sigma_collection(), sigma_labels(), {1, 3, 2}, sigma_expected_hom());
}

bool lift_chi_check(const DPClass& D, TorsionClass t) { return chi(lift_to_X(D, t)) == chi_Y(-D); }

}  // namespace burniat
