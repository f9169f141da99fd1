#pragma once

/**
 * @file oval_geometry.hpp
 * @brief Exact angular predicates and certified arc-length enclosures on a
 *        bounded conic (ellipse). Angular order around the rational center is
 *        decided by interval refinement; the only zero cases (equal or
 *        antipodal points) are detected exactly first.
 */

#include "clband/curve.hpp"

namespace clband {

class OvalFrame {
  public:
    explicit OvalFrame(Curve conic);

    const Curve& conic() const { return c_; }
    const Rational& cx() const { return cx_; }
    const Rational& cy() const { return cy_; }
    bool is_circle() const { return c_.B == 0 && c_.A == c_.C; }

    /// Central antipode (lies on the conic).
    AlgebraicPoint antipode(const AlgebraicPoint& p) const;

    enum class Ray { Ccw, Cw, Opposite };
    /// Position of q relative to p, as rays from the center; p != q.
    Ray ray_relation(const AlgebraicPoint& p, const AlgebraicPoint& q) const;

    /// Moving clockwise from a, does b appear strictly before c? (all distinct)
    bool cw_between(const AlgebraicPoint& a, const AlgebraicPoint& b,
                    const AlgebraicPoint& c) const;

    /// Conic point on the open ray from the center with direction (dx, dy).
    AlgebraicPoint point_at_direction(const Rational& dx, const Rational& dy) const;

    /// Some exact conic point strictly clockwise-between a and b.
    AlgebraicPoint point_in_cw_gap(const AlgebraicPoint& a, const AlgebraicPoint& b) const;

    /// Certified enclosure of the arc length from `from` clockwise to `to`;
    /// tightens as effort grows.
    QInterval arc_length_cw(const AlgebraicPoint& from, const AlgebraicPoint& to,
                            int effort) const;

  private:
    int cross_sign(const AlgebraicPoint& p, const AlgebraicPoint& q) const;
    Curve c_;
    Rational cx_, cy_;
};

}  // namespace clband
