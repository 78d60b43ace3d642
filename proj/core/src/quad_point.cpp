#include "qp/quad_point.hpp"

#include <algorithm>
#include <set>

#include "qp/errors.hpp"

namespace qp {

bool operator<(const PointCoords& a, const PointCoords& b) {
  if (a.x0 < b.x0) return true;
  if (b.x0 < a.x0) return false;
  if (a.x1 < b.x1) return true;
  if (b.x1 < a.x1) return false;
  if (a.y0 < b.y0) return true;
  if (b.y0 < a.y0) return false;
  return a.y1 < b.y1;
}

RelElement QuadraticPointRecord::x_rel() const {
  if (!ext) throw InputError("record has no extension");
  return RelElement(ext, coords.x0, coords.x1);
}

RelElement QuadraticPointRecord::y_rel() const {
  if (!ext) throw InputError("record has no extension");
  return RelElement(ext, coords.y0, coords.y1);
}

QuadraticPointRecord make_record(const FieldPtr& base, ExtPtr ext,
                                 PointCoords coords, PointSource source,
                                 std::string provenance) {
  QuadraticPointRecord r;
  r.base = base;
  if (ext && coords.x1.is_zero() && coords.y1.is_zero()) ext = nullptr;
  r.ext = std::move(ext);
  r.coords = std::move(coords);
  r.source = source;
  r.provenance = std::move(provenance);

  if (r.ext) {
    RelElement x = r.x_rel(), y = r.y_rel();
    RelElement x2 = x * x, y2 = y * y;
    if (x2 * x2 + y2 * y2 != RelElement::one(r.ext))
      throw Error("point fails x^4 + y^4 = 1");
    r.trivial = (x * y).is_zero();
    r.degree_over_q = generated_degree(x, y);
    r.primitive = r.degree_over_q == 2 * base->degree();
  } else {
    const FieldElement& x = r.coords.x0;
    const FieldElement& y = r.coords.y0;
    FieldElement x2 = x * x, y2 = y * y;
    if (x2 * x2 + y2 * y2 != FieldElement::one(base))
      throw Error("point fails x^4 + y^4 = 1");
    r.trivial = (x * y).is_zero();
    r.degree_over_q = generated_degree(x, y);
    r.primitive = r.degree_over_q == base->degree();
  }
  return r;
}

std::vector<PointCoords> sign_swap_orbit(const PointCoords& p) {
  std::set<PointCoords> out;
  const PointCoords swapped{p.y0, p.y1, p.x0, p.x1};
  for (const PointCoords* base : {&p, &swapped}) {
    for (int sx = 0; sx < 2; ++sx) {
      for (int sy = 0; sy < 2; ++sy) {
        PointCoords q = *base;
        if (sx) {
          q.x0 = -q.x0;
          q.x1 = -q.x1;
        }
        if (sy) {
          q.y0 = -q.y0;
          q.y1 = -q.y1;
        }
        out.insert(std::move(q));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<PointCoords> assemble_orbit(const ExtPtr& ext, const PointCoords& p) {
  std::set<PointCoords> out;
  for (auto& q : sign_swap_orbit(p)) out.insert(q);
  if (ext) {
    // conjugate: s -> -B - s, so c0 + c1 s -> (c0 - B c1) - c1 s
    const FieldElement& B = ext->lin_coeff();
    auto conj = [&](const FieldElement& c0, const FieldElement& c1) {
      return std::pair<FieldElement, FieldElement>(c0 - B * c1, -c1);
    };
    std::vector<PointCoords> snapshot(out.begin(), out.end());
    for (const auto& q : snapshot) {
      auto [cx0, cx1] = conj(q.x0, q.x1);
      auto [cy0, cy1] = conj(q.y0, q.y1);
      out.insert(PointCoords{cx0, cx1, cy0, cy1});
    }
  }
  return {out.begin(), out.end()};
}

bool verify_bielliptic(const QuadraticPointRecord& record) {
  if (record.ext) {
    RelElement x = record.x_rel(), y = record.y_rel();
    if (x.is_zero()) throw DivisionByZero("parameter t undefined at x = 0");
    RelElement one = RelElement::one(record.ext);
    RelElement four = RelElement::from_base(
        record.ext, FieldElement::from_rational(record.base, Rational(4)));
    RelElement t = (one + y * y) / (x * x);
    RelElement s = t + t;
    RelElement s2p4 = s * s + four;
    RelElement u = x * s2p4;
    u = RelElement(record.ext, u.c0().scaled(Rational(1, 2)),
                   u.c1().scaled(Rational(1, 2)));
    RelElement v = x * y * s2p4;
    v = RelElement(record.ext, v.c0().scaled(Rational(1, 2)),
                   v.c1().scaled(Rational(1, 2)));
    RelElement s3 = s * s * s;
    RelElement four_s = s * four;
    return u * u == s3 + four_s && v * v == s3 - four_s;
  }
  const FieldElement& x = record.coords.x0;
  const FieldElement& y = record.coords.y0;
  if (x.is_zero()) throw DivisionByZero("parameter t undefined at x = 0");
  const FieldPtr& base = record.base;
  FieldElement one = FieldElement::one(base);
  FieldElement four = FieldElement::from_rational(base, Rational(4));
  FieldElement t = (one + y * y) / (x * x);
  FieldElement s = t + t;
  FieldElement s2p4 = s * s + four;
  FieldElement u = (x * s2p4).scaled(Rational(1, 2));
  FieldElement v = (x * y * s2p4).scaled(Rational(1, 2));
  FieldElement s3 = s * s * s;
  FieldElement four_s = s * four;
  return u * u == s3 + four_s && v * v == s3 - four_s;
}

}  // namespace qp
