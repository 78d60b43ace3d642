#include "qp/dedupe.hpp"

#include <algorithm>
#include <set>

#include "qp/errors.hpp"

namespace qp {

std::optional<RelElement> embed_extension(const RelQuadExt& from, const ExtPtr& to) {
  // s1 = (-b1 + w)/2 with w^2 = disc(from), solved inside `to`.
  RelElement disc = RelElement::from_base(to, from.disc());
  auto w = rel_sqrt(disc);
  if (!w) return std::nullopt;
  RelElement b1 = RelElement::from_base(to, from.lin_coeff());
  RelElement img = *w - b1;
  img = RelElement(to, img.c0().scaled(Rational(1, 2)), img.c1().scaled(Rational(1, 2)));
  // img must be a root of from's polynomial
  RelElement check = img * img + b1 * img + RelElement::from_base(to, from.const_coeff());
  if (!check.is_zero()) throw Error("extension embedding failed verification");
  return img;
}

namespace {

QuadraticPointRecord map_record(const QuadraticPointRecord& rec,
                                const ExtPtr& target, const RelElement& gen_img) {
  RelElement x = RelElement::from_base(target, rec.coords.x0) +
                 gen_img * RelElement::from_base(target, rec.coords.x1);
  RelElement y = RelElement::from_base(target, rec.coords.y0) +
                 gen_img * RelElement::from_base(target, rec.coords.y1);
  return make_record(rec.base, target, PointCoords{x.c0(), x.c1(), y.c0(), y.c1()},
                     rec.source, rec.provenance);
}

}  // namespace

std::vector<DedupeGroup> dedupe_points(const std::vector<QuadraticPointRecord>& records) {
  std::vector<DedupeGroup> groups;
  // Embeddings of already-seen source presentations into group presentations,
  // cached so each isomorphism test runs once.
  struct Known {
    ExtPtr src;
    size_t group;
    RelElement gen_img;
  };
  std::vector<Known> known;

  for (const auto& rec : records) {
    if (!rec.ext) {
      // K-rational group is always group of its own.
      size_t gi = groups.size();
      for (size_t i = 0; i < groups.size(); ++i)
        if (!groups[i].ext) gi = i;
      if (gi == groups.size()) groups.push_back(DedupeGroup{nullptr, {}});
      groups[gi].records.push_back(rec);
      continue;
    }

    // Same presentation seen before?
    size_t target_group = groups.size();
    std::optional<RelElement> gen_img;
    for (const auto& k : known) {
      if (k.src->same_ext(*rec.ext)) {
        target_group = k.group;
        gen_img = k.gen_img;
        break;
      }
    }
    if (target_group == groups.size()) {
      // New presentation: try to embed into an existing group.
      for (size_t i = 0; i < groups.size(); ++i) {
        if (!groups[i].ext) continue;
        if (auto img = embed_extension(*rec.ext, groups[i].ext)) {
          target_group = i;
          gen_img = img;
          break;
        }
      }
      if (target_group == groups.size()) {
        groups.push_back(DedupeGroup{rec.ext, {}});
        gen_img = RelElement::gen(rec.ext);
      }
      known.push_back(Known{rec.ext, target_group, *gen_img});
    }

    const DedupeGroup& g = groups[target_group];
    if (g.ext->same_ext(*rec.ext)) {
      groups[target_group].records.push_back(rec);
    } else {
      groups[target_group].records.push_back(map_record(rec, g.ext, *gen_img));
    }
  }

  // Exact dedupe within each group.
  for (auto& g : groups) {
    std::set<PointCoords> seen;
    std::vector<QuadraticPointRecord> unique;
    for (auto& r : g.records) {
      if (seen.insert(r.coords).second) unique.push_back(std::move(r));
    }
    std::sort(unique.begin(), unique.end(),
              [](const QuadraticPointRecord& a, const QuadraticPointRecord& b) {
                return a.coords < b.coords;
              });
    g.records = std::move(unique);
  }
  return groups;
}

}  // namespace qp
