#include "softtopo/soft_map.hpp"

#include "softtopo/bits.hpp"
#include "softtopo/semi.hpp"

namespace softtopo {

SoftFunction::SoftFunction(SpaceSignature source, SpaceSignature target,
                           std::vector<std::size_t> point_map,
                           std::vector<std::size_t> param_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      point_map_(std::move(point_map)),
      param_map_(std::move(param_map)) {
  if (point_map_.size() != source_.universe_size() ||
      param_map_.size() != source_.parameter_count()) {
    throw InvalidInput("soft function maps must be total on the source");
  }
  for (std::size_t y : point_map_) {
    if (y >= target_.universe_size()) {
      throw InvalidInput("point map leaves the target universe");
    }
  }
  for (std::size_t b : param_map_) {
    if (b >= target_.parameter_count()) {
      throw InvalidInput("parameter map leaves the target parameters");
    }
  }
  cell_map_.resize(source_.bit_count());
  for (std::size_t a = 0; a < param_map_.size(); ++a) {
    for (std::size_t x = 0; x < point_map_.size(); ++x) {
      cell_map_[source_.cell(a, x)] = target_.cell(param_map_[a], point_map_[x]);
    }
  }
}

SoftFunction SoftFunction::identity(const SpaceSignature& sig) {
  std::vector<std::size_t> points(sig.universe_size());
  std::vector<std::size_t> params(sig.parameter_count());
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = i;
  for (std::size_t i = 0; i < params.size(); ++i) params[i] = i;
  return SoftFunction(sig, sig, std::move(points), std::move(params));
}

bool SoftFunction::is_surjective() const {
  return image(source_.full_mask()) == target_.full_mask();
}

Mask SoftFunction::image(Mask source_set) const noexcept {
  Mask out = 0;
  bits::for_each_cell(source_set,
                      [&](std::size_t c) { out |= Mask{1} << cell_map_[c]; });
  return out;
}

Mask SoftFunction::preimage(Mask target_set) const noexcept {
  Mask out = 0;
  for (std::size_t c = 0; c < cell_map_.size(); ++c) {
    if ((target_set >> cell_map_[c]) & 1U) out |= Mask{1} << c;
  }
  return out;
}

SoftSet image(const SoftFunction& f, const SoftSet& g) {
  require_same_signature(f.source(), g.signature(), "image");
  return SoftSet(f.target(), f.image(g.bits()));
}

SoftSet preimage(const SoftFunction& f, const SoftSet& g) {
  require_same_signature(f.target(), g.signature(), "preimage");
  return SoftSet(f.source(), f.preimage(g.bits()));
}

MapClassification classify_map(const SoftFunction& f,
                               const SoftTopology& source,
                               const SoftTopology& target) {
  require_same_signature(f.source(), source.signature(), "classify_map source");
  require_same_signature(f.target(), target.signature(), "classify_map target");
  MapClassification out;
  auto fail = [](MapProperty& p, const SpaceSignature& sig, Mask m) {
    if (p.holds) {
      p.holds = false;
      p.counterwitness = SoftSet(sig, m);
    }
  };
  for (Mask o : target.open_masks()) {
    const Mask pre = f.preimage(o);
    if (!source.is_open(pre)) fail(out.continuous, target.signature(), o);
    if (!raw::semiopen(source, pre)) fail(out.semicontinuous, target.signature(), o);
  }
  for (Mask s : raw::soss(target)) {
    if (!raw::semiopen(source, f.preimage(s))) {
      fail(out.irresolute, target.signature(), s);
      break;
    }
  }
  for (Mask o : source.open_masks()) {
    if (!raw::semiopen(target, f.image(o))) {
      fail(out.semiopen_map, source.signature(), o);
      break;
    }
  }
  for (Mask o : source.open_masks()) {
    const Mask closed = source.complement(o);
    if (!raw::semiclosed(target, f.image(closed))) {
      fail(out.semiclosed_map, source.signature(), closed);
      break;
    }
  }
  return out;
}

}  // namespace softtopo
