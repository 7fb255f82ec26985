//! Log discrepancies of toric divisors and the exhaustive lattice oracle.
//!
//! A toric divisor is indexed by an integer vector p >= (1,1); its log
//! discrepancy with respect to an R-ideal with Newton polygon G is
//! p_x + p_y - support(G, p). The oracle enumerates every divisor up to a
//! taxicab radius and is the ground truth the constructive witnesses are
//! checked against.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::geom::Rat;
use crate::newton::NewtonPolygon;

/// Index vector of a toric divisor whose center is the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor {
    x: u64,
    y: u64,
}

impl Divisor {
    pub fn new(x: u64, y: u64) -> Result<Self> {
        if x == 0 || y == 0 {
            return Err(Error::ZeroDivisorComponent);
        }
        Ok(Divisor { x, y })
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    /// The log discrepancy of the divisor over the bare plane: p_x + p_y.
    pub fn sum(&self) -> u64 {
        self.x + self.y
    }

    pub fn swapped(&self) -> Divisor {
        Divisor {
            x: self.y,
            y: self.x,
        }
    }
}

impl std::fmt::Display for Divisor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A minimal log discrepancy: either a nonnegative rational or minus
/// infinity. Negative totals collapse to minus infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MldValue {
    Finite(Rat),
    MinusInfinity,
}

impl MldValue {
    pub fn from_total(value: Rat) -> MldValue {
        if value.is_negative() {
            MldValue::MinusInfinity
        } else {
            MldValue::Finite(value)
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, MldValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            MldValue::Finite(v) => Some(v),
            MldValue::MinusInfinity => None,
        }
    }
}

impl std::fmt::Display for MldValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MldValue::Finite(v) => write!(f, "{v}"),
            MldValue::MinusInfinity => write!(f, "-inf"),
        }
    }
}

/// Exact log discrepancy p_x + p_y - support(poly, p).
pub fn log_discrepancy(poly: &NewtonPolygon, p: &Divisor) -> Rat {
    let px = Rat::from_integer(BigInt::from(p.x));
    let py = Rat::from_integer(BigInt::from(p.y));
    let support = poly
        .support(&px, &py)
        .expect("divisor components are positive");
    px + py - support
}

/// Result of enumerating all divisors with p_x + p_y <= radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub radius: u64,
    pub min_value: Rat,
    /// All divisors attaining the minimum, sorted lexicographically.
    pub argmins: Vec<Divisor>,
    pub any_negative: bool,
}

/// Vertices scaled to integer numerators over a common denominator, with an
/// i128 fast path when magnitudes allow. Comparing scaled numerators is
/// exact, so the fast path changes nothing but speed.
pub(crate) struct ScaledPolygon {
    pub(crate) den: BigInt,
    pub(crate) verts: Vec<(BigInt, BigInt)>,
    small: Option<(i128, Vec<(i128, i128)>)>,
}

const SMALL_COORD_BOUND: i128 = 1 << 56;
const SMALL_RADIUS_BOUND: u64 = 1 << 24;

impl ScaledPolygon {
    pub(crate) fn new(poly: &NewtonPolygon) -> Self {
        let den = poly.vertices().iter().fold(BigInt::from(1), |acc, v| {
            acc.lcm(v.x().denom()).lcm(v.y().denom())
        });
        let verts: Vec<(BigInt, BigInt)> = poly
            .vertices()
            .iter()
            .map(|v| ((v.x() * &den).to_integer(), (v.y() * &den).to_integer()))
            .collect();
        let small_den = den.to_i128().filter(|d| *d < SMALL_COORD_BOUND);
        let small = small_den.and_then(|d| {
            let mut out = Vec::with_capacity(verts.len());
            for (x, y) in &verts {
                let x = x.to_i128().filter(|v| v.abs() < SMALL_COORD_BOUND)?;
                let y = y.to_i128().filter(|v| v.abs() < SMALL_COORD_BOUND)?;
                out.push((x, y));
            }
            Some((d, out))
        });
        ScaledPolygon { den, verts, small }
    }

    fn small_for_radius(&self, radius: u64) -> Option<(i128, &[(i128, i128)])> {
        if radius > SMALL_RADIUS_BOUND {
            return None;
        }
        self.small.as_ref().map(|(d, v)| (*d, v.as_slice()))
    }

    /// Numerator of the log discrepancy of (px, py) over `den`.
    pub(crate) fn value_num_big(&self, px: u64, py: u64) -> BigInt {
        let px = BigInt::from(px);
        let py = BigInt::from(py);
        let min_dot = self
            .verts
            .iter()
            .map(|(vx, vy)| &px * vx + &py * vy)
            .min()
            .expect("polygon is nonempty");
        (px + py) * &self.den - min_dot
    }
}

fn value_num_small(verts: &[(i128, i128)], den: i128, px: i128, py: i128) -> i128 {
    let min_dot = verts
        .iter()
        .map(|&(vx, vy)| px * vx + py * vy)
        .min()
        .expect("polygon is nonempty");
    (px + py) * den - min_dot
}

/// Evaluates the log discrepancy at every divisor with p_x + p_y <= radius
/// and reports the exact minimum with all its argmins.
pub fn brute_force_oracle(poly: &NewtonPolygon, radius: u64) -> Result<OracleReport> {
    if radius < 2 {
        return Err(Error::RadiusTooSmall);
    }
    let scaled = ScaledPolygon::new(poly);
    let (min_num, argmins) = match scaled.small_for_radius(radius) {
        Some((den, verts)) => {
            let mut min_num: Option<i128> = None;
            let mut argmins: Vec<Divisor> = Vec::new();
            for s in 2..=radius {
                for x in 1..s {
                    let y = s - x;
                    let num = value_num_small(verts, den, x as i128, y as i128);
                    match &min_num {
                        Some(m) if num > *m => {}
                        Some(m) if num == *m => argmins.push(Divisor { x, y }),
                        _ => {
                            min_num = Some(num);
                            argmins = vec![Divisor { x, y }];
                        }
                    }
                }
            }
            (
                BigInt::from(min_num.expect("radius >= 2 yields at least one divisor")),
                argmins,
            )
        }
        None => {
            let mut min_num: Option<BigInt> = None;
            let mut argmins: Vec<Divisor> = Vec::new();
            for s in 2..=radius {
                for x in 1..s {
                    let y = s - x;
                    let num = scaled.value_num_big(x, y);
                    match &min_num {
                        Some(m) if &num > m => {}
                        Some(m) if &num == m => argmins.push(Divisor { x, y }),
                        _ => {
                            min_num = Some(num);
                            argmins = vec![Divisor { x, y }];
                        }
                    }
                }
            }
            (
                min_num.expect("radius >= 2 yields at least one divisor"),
                argmins,
            )
        }
    };
    let min_value = Rat::new(min_num, scaled.den.clone());
    let mut argmins = argmins;
    argmins.sort();
    Ok(OracleReport {
        radius,
        any_negative: min_value.is_negative(),
        min_value,
        argmins,
    })
}

/// Early-exit scan: does any divisor within the radius have negative log
/// discrepancy?
pub fn has_negative_within(poly: &NewtonPolygon, radius: u64) -> bool {
    if radius < 2 {
        return false;
    }
    let scaled = ScaledPolygon::new(poly);
    match scaled.small_for_radius(radius) {
        Some((den, verts)) => {
            for s in 2..=radius {
                for x in 1..s {
                    if value_num_small(verts, den, x as i128, (s - x) as i128) < 0 {
                        return true;
                    }
                }
            }
            false
        }
        None => {
            for s in 2..=radius {
                for x in 1..s {
                    if scaled.value_num_big(x, s - x).is_negative() {
                        return true;
                    }
                }
            }
            false
        }
    }
}

/// Exact minimum of the log discrepancy over the box [1..=bx] x [1..=by]
/// together with its lexicographically smallest argmin.
pub(crate) fn box_min(poly: &NewtonPolygon, bx: u64, by: u64) -> (Rat, Divisor) {
    debug_assert!(bx >= 1 && by >= 1);
    let scaled = ScaledPolygon::new(poly);
    let mut best: Option<(BigInt, Divisor)> = None;
    match scaled.small_for_radius(bx + by) {
        Some((den, verts)) => {
            let mut small_best: Option<(i128, Divisor)> = None;
            for x in 1..=bx {
                for y in 1..=by {
                    let num = value_num_small(verts, den, x as i128, y as i128);
                    if small_best.as_ref().is_none_or(|(m, _)| num < *m) {
                        small_best = Some((num, Divisor { x, y }));
                    }
                }
            }
            best = small_best.map(|(num, d)| (BigInt::from(num), d));
        }
        None => {
            for x in 1..=bx {
                for y in 1..=by {
                    let num = scaled.value_num_big(x, y);
                    if best.as_ref().is_none_or(|(m, _)| &num < m) {
                        best = Some((num, Divisor { x, y }));
                    }
                }
            }
        }
    }
    let (num, argmin) = best.expect("box is nonempty");
    (Rat::new(num, scaled.den), argmin)
}

/// Smallest p_x + p_y over all divisors within the radius that compute the
/// minimal log discrepancy: those attaining the minimum when (1,1) lies in
/// the polygon, those with negative value otherwise. The caller must supply
/// a radius large enough to contain a computing divisor.
pub fn minimal_computing_logdisc(poly: &NewtonPolygon, radius: u64) -> Result<(u64, Divisor)> {
    if radius < 2 {
        return Err(Error::NoComputingDivisorInRadius(radius));
    }
    if poly.contains_one() {
        let report = brute_force_oracle(poly, radius)?;
        let best = report
            .argmins
            .iter()
            .min_by_key(|d| (d.sum(), d.x, d.y))
            .expect("oracle reports at least one argmin");
        Ok((best.sum(), *best))
    } else {
        let scaled = ScaledPolygon::new(poly);
        // scan in (sum, lexicographic) order; the first negative hit is the
        // answer
        match scaled.small_for_radius(radius) {
            Some((den, verts)) => {
                for s in 2..=radius {
                    for x in 1..s {
                        if value_num_small(verts, den, x as i128, (s - x) as i128) < 0 {
                            return Ok((s, Divisor { x, y: s - x }));
                        }
                    }
                }
            }
            None => {
                for s in 2..=radius {
                    for x in 1..s {
                        if scaled.value_num_big(x, s - x).is_negative() {
                            return Ok((s, Divisor { x, y: s - x }));
                        }
                    }
                }
            }
        }
        Err(Error::NoComputingDivisorInRadius(radius))
    }
}
