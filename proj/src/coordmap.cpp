#include "prymlab/coordmap.hpp"

#include <algorithm>
#include <sstream>

#include "prymlab/errors.hpp"

namespace prymlab {

CoordMap::CoordMap(std::vector<std::string> sources, std::vector<CycPoly> images)
    : sources_(std::move(sources)), images_(std::move(images)) {
  if (sources_.size() != images_.size()) throw PreconditionError("coordinate map needs one image per variable");
  if (!images_.empty()) targets_ = images_.front().variables();
  for (const auto& im : images_)
    if (im.variables() != targets_) throw PreconditionError("coordinate map images over different variables");
}

CoordMap CoordMap::identity(const std::vector<std::string>& vars) {
  std::vector<CycPoly> images;
  for (const auto& v : vars) images.push_back(CycPoly::variable(vars, v));
  return CoordMap(vars, std::move(images));
}

const CycPoly& CoordMap::image_of(const std::string& var) const {
  auto it = std::find(sources_.begin(), sources_.end(), var);
  if (it == sources_.end()) throw PreconditionError("missing image for variable '" + var + "'");
  return images_[static_cast<std::size_t>(it - sources_.begin())];
}

std::string CoordMap::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < sources_.size(); ++i) {
    if (i) os << ", ";
    os << sources_[i] << " -> " << images_[i].to_string();
  }
  return os.str();
}

CycPoly apply_map(const CycPoly& p, const CoordMap& m) {
  std::vector<const CycPoly*> imgs;
  for (const auto& v : p.variables()) imgs.push_back(&m.image_of(v));
  CycPoly result(m.targets());
  // powers are cached per (variable, exponent)
  std::map<std::pair<std::size_t, int>, CycPoly> cache;
  for (const auto& [e, c] : p.terms()) {
    CycPoly term = CycPoly::constant(m.targets(), c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && imgs[i]->term_count() != 1)
        throw PreconditionError("non-monomial denominator for variable '" + p.variables()[i] + "'");
      auto key = std::make_pair(i, e[i]);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, imgs[i]->pow(e[i])).first;
      term *= it->second;
    }
    result += term;
  }
  return result;
}

Substitution substitute(const CycPoly& p, const CoordMap& m) {
  CycPoly image = apply_map(p, m);
  Exponents clearing = image.min_exponents();
  for (int& x : clearing) x = std::max(0, -x);
  return {image.shifted(clearing), clearing};
}

CoordMap compose(const CoordMap& first, const CoordMap& second) {
  std::vector<CycPoly> images;
  images.reserve(first.images().size());
  for (const auto& im : first.images()) images.push_back(apply_map(im, second));
  return CoordMap(first.sources(), std::move(images));
}

namespace {

// Common scalar lambda with m(x_i) = lambda * x_i for all i, if any.
std::optional<CycNum> common_scalar(const CoordMap& m) {
  std::optional<CycNum> lambda;
  for (std::size_t i = 0; i < m.sources().size(); ++i) {
    const auto& name = m.sources()[i];
    if (std::find(m.targets().begin(), m.targets().end(), name) == m.targets().end()) return std::nullopt;
    auto x = CycPoly::variable(m.targets(), name);
    auto s = is_scalar_multiple(m.images()[i], x);
    if (!s) return std::nullopt;
    if (lambda && !(*lambda == *s)) return std::nullopt;
    lambda = s;
  }
  return lambda;
}

}  // namespace

int projective_order(const CoordMap& m, int max_order) {
  CoordMap power = m;
  for (int k = 1; k <= max_order; ++k) {
    if (common_scalar(power)) return k;
    power = compose(power, m);
  }
  return 0;
}

int exact_order(const CoordMap& m, int max_order) {
  CoordMap power = m;
  for (int k = 1; k <= max_order; ++k) {
    auto s = common_scalar(power);
    if (s && *s == CycNum(1)) return k;
    power = compose(power, m);
  }
  return 0;
}

}  // namespace prymlab
