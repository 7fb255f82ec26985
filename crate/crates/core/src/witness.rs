//! Constructive witness divisors.
//!
//! Given a monomial R-ideal, produces a divisor that computes the minimal
//! log discrepancy and whose own log discrepancy respects the explicit
//! bound derived from the exponent set. The construction follows the shape
//! of the polygon: either the diagonal divisor (1,1) already computes the
//! mld, or a primitive lattice step along a distinguished facet pins down a
//! finite search box (nonnegative mld), or a shifted facet line separates
//! (1,1) from the polygon and its primitive normal is the witness
//! (mld = minus infinity).

use std::cmp::Ordering;

use num_traits::{One, Signed};

use crate::coeffs::{bound_minus_inf, bound_nonneg, gamma_of, CoefficientSet};
use crate::error::{Error, Result};
use crate::geom::{in_triangle, line_side, LineSide, Point, Rat};
use crate::mld::{box_min, log_discrepancy, Divisor, MldValue};
use crate::newton::{facet_lattice_step, Facet, NewtonPolygon, RIdeal};

/// Shape classification of a polygon containing (1,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// The diagonal direction is supported strictly between the facet
    /// normals around the unit box; (1,1) computes the mld.
    CaseOne,
    /// Some facet normal on one side of the diagonal: the witness lives in
    /// the lattice box of that facet's primitive step. `zone_a` is the
    /// number of vertices with x <= 1 < y on the oriented polygon.
    CaseTwo { reflected: bool, zone_a: usize },
}

/// Which construction produced the witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessCase {
    One,
    Two { reflected: bool, zone_a: usize },
    MinusInfinity { reflected: bool, diagonal: bool },
}

impl From<CaseTag> for WitnessCase {
    fn from(tag: CaseTag) -> Self {
        match tag {
            CaseTag::CaseOne => WitnessCase::One,
            CaseTag::CaseTwo { reflected, zone_a } => WitnessCase::Two { reflected, zone_a },
        }
    }
}

/// A witness divisor with its exact mld and the bound it was checked
/// against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessResult {
    pub mld: MldValue,
    pub divisor: Divisor,
    pub logdisc: u64,
    pub bound: u64,
    pub case: WitnessCase,
}

/// Vertex counts by region: (x <= 1 < y), (x <= 1, y <= 1), (y <= 1 < x).
fn zone_counts(poly: &NewtonPolygon) -> Result<(usize, usize, usize)> {
    let one = Rat::one();
    let (mut n, mut m, mut t) = (0, 0, 0);
    for v in poly.vertices() {
        match (v.x() <= &one, v.y() <= &one) {
            (true, false) => n += 1,
            (true, true) => m += 1,
            (false, true) => t += 1,
            (false, false) => {
                return Err(Error::ProofInvariantViolated(
                    "no vertex may dominate (1,1) when the polygon contains it",
                ))
            }
        }
    }
    Ok((n, m, t))
}

/// Compares the extended run/drop ratio of the i-th inter-vertex normal
/// with 1. Index 0 is the vertical sentinel ray (ratio 0) and index
/// `vertices.len()` the horizontal one (ratio infinity).
fn ratio_cmp_one(poly: &NewtonPolygon, i: usize) -> Ordering {
    let verts = poly.vertices();
    if i == 0 {
        Ordering::Less
    } else if i >= verts.len() {
        Ordering::Greater
    } else {
        let run = verts[i].x() - verts[i - 1].x();
        let drop = verts[i - 1].y() - verts[i].y();
        run.cmp(&drop)
    }
}

/// Classifies a polygon containing (1,1) by where the diagonal direction
/// sits relative to the facet normals around the unit box.
pub fn classify(poly: &NewtonPolygon) -> Result<CaseTag> {
    if !poly.contains_one() {
        return Err(Error::PolygonWithoutOne);
    }
    let (n, m, _t) = zone_counts(poly)?;
    let low = ratio_cmp_one(poly, n) == Ordering::Less;
    let high = ratio_cmp_one(poly, n + m) == Ordering::Greater;
    if low && high {
        return Ok(CaseTag::CaseOne);
    }
    let reflected = low;
    let zone_a = if reflected {
        zone_counts(&poly.reflect())?.0
    } else {
        n
    };
    if zone_a == 0 {
        return Err(Error::ProofInvariantViolated(
            "case two requires a vertex above the unit box",
        ));
    }
    Ok(CaseTag::CaseTwo { reflected, zone_a })
}

/// Witness for a polygon containing (1,1): the mld is finite and attained
/// by (1,1) itself or inside the facet step box.
pub fn witness_nonnegative(rideal: &RIdeal) -> Result<WitnessResult> {
    let set = CoefficientSet::new(rideal.exponents())?;
    let g = gamma_of(&set);
    let poly = NewtonPolygon::of_rideal(rideal)?;
    solve_nonnegative(rideal, &poly, bound_nonneg(&g.e, &g.gamma)?)
}

fn solve_nonnegative(rideal: &RIdeal, poly: &NewtonPolygon, bound: u64) -> Result<WitnessResult> {
    let tag = classify(poly)?;
    match tag {
        CaseTag::CaseOne => {
            let divisor = Divisor::new(1, 1)?;
            let value = log_discrepancy(poly, &divisor);
            if value.is_negative() {
                return Err(Error::ProofInvariantViolated(
                    "(1,1) must have nonnegative value when the polygon contains it",
                ));
            }
            Ok(WitnessResult {
                mld: MldValue::Finite(value),
                divisor,
                logdisc: 2,
                bound,
                case: tag.into(),
            })
        }
        CaseTag::CaseTwo { reflected, zone_a } => {
            let working = if reflected {
                poly.reflect()
            } else {
                poly.clone()
            };
            let verts = working.vertices();
            if zone_a >= verts.len() {
                return Err(Error::ProofInvariantViolated(
                    "a facet must follow the last vertex above the unit box",
                ));
            }
            let facet = Facet::new(verts[zone_a - 1].clone(), verts[zone_a].clone())?;
            let step = facet_lattice_step(&facet, &rideal.exponents())?;
            let (value, argmin) = box_min(&working, step.step.0, step.step.1);
            if value.is_negative() {
                return Err(Error::ProofInvariantViolated(
                    "box minimum must be nonnegative when the polygon contains (1,1)",
                ));
            }
            let divisor = if reflected { argmin.swapped() } else { argmin };
            Ok(WitnessResult {
                mld: MldValue::Finite(value),
                logdisc: divisor.sum(),
                divisor,
                bound,
                case: tag.into(),
            })
        }
    }
}

/// Witness for a polygon not containing (1,1): a divisor with strictly
/// negative log discrepancy on the original polygon.
pub fn witness_minus_infinity(rideal: &RIdeal) -> Result<WitnessResult> {
    let set = CoefficientSet::new(rideal.exponents())?;
    let g = gamma_of(&set);
    let poly = NewtonPolygon::of_rideal(rideal)?;
    if poly.contains_one() {
        return Err(Error::PolygonContainsOne);
    }
    solve_minus_infinity(rideal, &poly, bound_minus_inf(&g.e, &g.gamma)?)
}

fn solve_minus_infinity(
    rideal: &RIdeal,
    original: &NewtonPolygon,
    bound: u64,
) -> Result<WitnessResult> {
    if original.contains_one() {
        return Err(Error::PolygonContainsOne);
    }
    // Work on a convenient enlargement: the polygon must meet both axes.
    // m starts above every generator coordinate and doubles whenever the
    // enlargement accidentally captures (1,1); negativity transfers back to
    // the original polygon because enlarging can only lower the support.
    let mut m = rideal.max_generator_coordinate().saturating_add(1).max(2);
    for _ in 0..64 {
        let convenient = rideal.make_convenient(m);
        let poly = NewtonPolygon::of_rideal(&convenient)?;
        if !poly.contains_one() {
            let (divisor, case) = negative_divisor(&poly, &rideal.exponents())?;
            if log_discrepancy(original, &divisor).is_negative() {
                return Ok(WitnessResult {
                    mld: MldValue::MinusInfinity,
                    logdisc: divisor.sum(),
                    divisor,
                    bound,
                    case,
                });
            }
        }
        m = m
            .checked_mul(2)
            .ok_or(Error::ProofInvariantViolated("convenient-ization overflow"))?;
    }
    Err(Error::ProofInvariantViolated(
        "convenient-ization did not stabilize",
    ))
}

fn facet_clears_one(top: &Point, bottom: &Point) -> bool {
    matches!(line_side(top, bottom, &Point::one()), Ok(LineSide::Minus))
}

/// Divisor with negative value on a convenient polygon not containing (1,1).
fn negative_divisor(poly: &NewtonPolygon, exponents: &[Rat]) -> Result<(Divisor, WitnessCase)> {
    let one = Rat::one();
    if poly.support_at_one() > &one + &one {
        // the diagonal divisor is already negative
        return Ok((
            Divisor::new(1, 1)?,
            WitnessCase::MinusInfinity {
                reflected: false,
                diagonal: true,
            },
        ));
    }
    // Vertices inside the triangle x + y <= 2 all sit on one side of the
    // diagonal; orient so that they sit above height 1.
    let has_high_triangle_vertex = poly
        .vertices()
        .iter()
        .any(|v| in_triangle(v) && v.y() > &one);
    let reflected = !has_high_triangle_vertex;
    let working = if reflected {
        poly.reflect()
    } else {
        poly.clone()
    };
    let verts = working.vertices();
    let j0 = verts
        .iter()
        .rposition(in_triangle)
        .ok_or(Error::ProofInvariantViolated(
            "a vertex must lie in the triangle when the diagonal support is at most 2",
        ))?;
    if verts[j0].y() <= &one {
        return Err(Error::ProofInvariantViolated(
            "the last triangle vertex must lie above height 1",
        ));
    }
    if j0 + 1 >= verts.len() {
        return Err(Error::ProofInvariantViolated(
            "a facet must follow the last triangle vertex of a convenient polygon",
        ));
    }
    let l0 = (0..verts.len() - 1)
        .find(|&i| facet_clears_one(&verts[i], &verts[i + 1]))
        .ok_or(Error::ProofInvariantViolated(
            "some facet line must pass strictly above (1,1)",
        ))?;
    if !in_triangle(&verts[l0]) {
        return Err(Error::ProofInvariantViolated(
            "the pivot vertex must lie in the triangle",
        ));
    }
    let pivot = verts[l0].clone();
    let lower = verts[l0 + 1].clone();
    let step = facet_lattice_step(&Facet::new(pivot.clone(), lower.clone())?, exponents)?;
    let lambda = &exponents[step.factor];
    let cut = Point::unchecked(
        pivot.x() + &step.alpha * (lower.x() - pivot.x()),
        pivot.y() + &step.alpha * (lower.y() - pivot.y()),
    );
    if !facet_clears_one(&pivot, &cut) {
        return Err(Error::ProofInvariantViolated(
            "the cut point must keep (1,1) strictly below the pivot line",
        ));
    }
    // Shift the cut point left in lambda steps while (1,1) stays strictly
    // below the line through the pivot. The rotation is monotone while the
    // shifted point stays right of the pivot, so the first failure is final.
    let mut shifts: u64 = 0;
    loop {
        let next = shifts + 1;
        let dx = cut.x() - Rat::from_integer(next.into()) * lambda;
        if dx <= *pivot.x() {
            break;
        }
        let shifted = Point::unchecked(dx, cut.y().clone());
        if facet_clears_one(&pivot, &shifted) {
            shifts = next;
        } else {
            break;
        }
    }
    // The witness components are the primitive step with the x-advance
    // reduced by the shift count.
    let divisor = Divisor::new(step.step.0, step.step.1 - shifts)?;
    if !log_discrepancy(&working, &divisor).is_negative() {
        return Err(Error::ProofInvariantViolated(
            "the shifted facet normal must have negative value",
        ));
    }
    let divisor = if reflected {
        divisor.swapped()
    } else {
        divisor
    };
    Ok((
        divisor,
        WitnessCase::MinusInfinity {
            reflected,
            diagonal: false,
        },
    ))
}

/// Dispatches on membership of (1,1): finite mld with witness, or minus
/// infinity with a negative-value witness.
pub fn full_solve(rideal: &RIdeal) -> Result<WitnessResult> {
    let set = CoefficientSet::new(rideal.exponents())?;
    full_solve_with(rideal, &set)
}

/// Like `full_solve`, with the coefficient set overridden by a declared
/// superset of the exponents (the bound may grow but stays valid).
pub fn full_solve_with(rideal: &RIdeal, coefficients: &CoefficientSet) -> Result<WitnessResult> {
    let g = gamma_of(coefficients);
    let poly = NewtonPolygon::of_rideal(rideal)?;
    if poly.contains_one() {
        solve_nonnegative(rideal, &poly, bound_nonneg(&g.e, &g.gamma)?)
    } else {
        solve_minus_infinity(rideal, &poly, bound_minus_inf(&g.e, &g.gamma)?)
    }
}
