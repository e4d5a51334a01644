//! Points and lines of the plane encoded by binary quadratics.
//!
//! A nonzero quadratic `G = (g0, g1, g2)` names the point `[g0, g1, g2]` and
//! the line `<g2, -2 g1, g0>`. Incidence is the second transvectant, joins and
//! meets are the first. The conic is `z1^2 = z0 z2`; the points on it are the
//! squares of linear forms.
//!
//! Representatives are never normalized here; every predicate is
//! scale-invariant.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::QForm;
use crate::scalar::{int, ratio, Scalar};

fn check_quadratic(form: &QForm) -> Result<()> {
    if form.degree() != 2 {
        return Err(Error::DegreeMismatch { expected: 2, found: form.degree() });
    }
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    Ok(())
}

#[derive(Clone, PartialEq)]
pub struct Point(QForm);

#[derive(Clone, PartialEq)]
pub struct Line(QForm);

impl Point {
    pub fn new(form: QForm) -> Result<Self> {
        check_quadratic(&form)?;
        Ok(Point(form))
    }

    /// The point with homogeneous coordinates `[z0, z1, z2]`.
    pub fn from_coords(z: [Scalar; 3]) -> Result<Self> {
        Self::new(QForm::cayley(z.to_vec())?)
    }

    pub fn form(&self) -> &QForm {
        &self.0
    }

    pub fn into_form(self) -> QForm {
        self.0
    }

    pub fn coords(&self) -> [Scalar; 3] {
        let c = self.0.coeffs();
        [c[0].clone(), c[1].clone(), c[2].clone()]
    }

    pub fn on_conic(&self) -> bool {
        on_conic(&self.0)
    }

    /// Polar line with respect to the conic: same form, read as a line.
    pub fn polar(&self) -> Line {
        Line(self.0.clone())
    }

    /// Same projective point.
    pub fn same_as(&self, other: &Point) -> bool {
        self.0.proportional(&other.0).expect("points are nonzero quadratics")
    }
}

impl Line {
    pub fn new(form: QForm) -> Result<Self> {
        check_quadratic(&form)?;
        Ok(Line(form))
    }

    /// The line `l0 z0 + l1 z1 + l2 z2 = 0`.
    pub fn from_coords(l: [Scalar; 3]) -> Result<Self> {
        let [l0, l1, l2] = l;
        Self::new(QForm::cayley(vec![l2, l1 * ratio(-1, 2), l0])?)
    }

    pub fn form(&self) -> &QForm {
        &self.0
    }

    pub fn into_form(self) -> QForm {
        self.0
    }

    /// Line coordinates `<g2, -2 g1, g0>`.
    pub fn coords(&self) -> [Scalar; 3] {
        let c = self.0.coeffs();
        [c[2].clone(), &c[1] * int(-2), c[0].clone()]
    }

    /// Pole with respect to the conic.
    pub fn pole(&self) -> Point {
        Point(self.0.clone())
    }

    pub fn same_as(&self, other: &Line) -> bool {
        self.0.proportional(&other.0).expect("lines are nonzero quadratics")
    }
}

/// `P_G` lies on `L_H` iff `(G, H)_2 = 0`.
pub fn incident(point: &Point, line: &Line) -> bool {
    point
        .0
        .transvectant(&line.0, 2)
        .expect("quadratics admit order 2")
        .is_zero()
}

/// Line through two distinct points, represented by `(G, H)_1`.
pub fn join(p: &Point, q: &Point) -> Result<Line> {
    let t = p.0.transvectant(&q.0, 1)?;
    if t.is_zero() {
        return Err(Error::CoincidentPoints);
    }
    Ok(Line(t))
}

/// Intersection of two distinct lines, represented by `(G, H)_1`.
pub fn meet(l: &Line, m: &Line) -> Result<Point> {
    let t = l.0.transvectant(&m.0, 1)?;
    if t.is_zero() {
        return Err(Error::CoincidentLines);
    }
    Ok(Point(t))
}

/// `(G, G)_2 = 2 (g0 g2 - g1^2) = 0`.
pub fn on_conic(form: &QForm) -> bool {
    form.transvectant(form, 2)
        .expect("quadratics admit order 2")
        .is_zero()
}

/// The conic point `[1, t, t^2]`, i.e. the square of `x1 + t x2`.
pub fn conic_point(t: &Scalar) -> Point {
    Point(QForm::cayley(vec![int(1), t.clone(), t * t]).expect("three coefficients"))
}

/// Parameter `t` of a conic point `[1, t, t^2]`; `None` off the conic or at
/// `[0, 0, 1]`.
pub fn conic_parameter(p: &Point) -> Option<Scalar> {
    let [z0, z1, _] = p.coords();
    if !p.on_conic() || z0.is_zero() {
        return None;
    }
    Some(z1 / z0)
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.coords();
        write!(f, "[{a}, {b}, {c}]")
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.coords();
        write!(f, "<{a}, {b}, {c}>")
    }
}
