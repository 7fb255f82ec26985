//! Exact rational scalars, points of the nonnegative quadrant, and the
//! line-side predicate that the rest of the crate is built on.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals and
//! predicates are decided by sign of a cross product, never by division.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored reduced with a positive denominator.
pub type Rat = BigRational;

/// Shorthand constructor for small rationals, mostly used in tests.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for integral rationals.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses "p/q" or "n". Rejects zero denominators and malformed input.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}, expected \"p/q\" or \"n\""));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::Parse(format!(
                    "invalid rational {s:?}: zero denominator"
                )));
            }
            Ok(Rat::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(num))
        }
    }
}

/// A point of the closed nonnegative quadrant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    x: Rat,
    y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Result<Self> {
        if x.is_negative() || y.is_negative() {
            return Err(Error::NegativeCoordinate);
        }
        Ok(Point { x, y })
    }

    /// Constructor for coordinates already known to be nonnegative.
    pub(crate) fn unchecked(x: Rat, y: Rat) -> Self {
        debug_assert!(!x.is_negative() && !y.is_negative());
        Point { x, y }
    }

    pub fn from_ints(x: u64, y: u64) -> Self {
        Point {
            x: Rat::from_integer(BigInt::from(x)),
            y: Rat::from_integer(BigInt::from(y)),
        }
    }

    /// The point (1,1).
    pub fn one() -> Self {
        Point {
            x: Rat::one(),
            y: Rat::one(),
        }
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    pub fn y(&self) -> &Rat {
        &self.y
    }

    /// Coordinate swap.
    pub fn swapped(&self) -> Self {
        Point {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub(crate) fn add(&self, other: &Point) -> Point {
        Point {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub(crate) fn scale(&self, k: &Rat) -> Point {
        debug_assert!(!k.is_negative());
        Point {
            x: k * &self.x,
            y: k * &self.y,
        }
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &Point) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn dot(&self, px: &Rat, py: &Rat) -> Rat {
        px * &self.x + py * &self.y
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Position of a query point relative to a non-vertical line: above, on, or
/// below the line at the query's x-coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineSide {
    Plus,
    On,
    Minus,
}

/// Side of the line through `a` and `b` that `q` lies on.
///
/// Decided by the sign of the cross product (b - a) x (q - a), corrected for
/// the horizontal orientation of the segment; no division is performed.
pub fn line_side(a: &Point, b: &Point, q: &Point) -> Result<LineSide> {
    if a == b {
        return Err(Error::DegenerateLine);
    }
    if a.x == b.x {
        return Err(Error::VerticalLine);
    }
    let cross = (&b.x - &a.x) * (&q.y - &a.y) - (&b.y - &a.y) * (&q.x - &a.x);
    let sign = if b.x > a.x { cross } else { -cross };
    Ok(if sign.is_positive() {
        LineSide::Plus
    } else if sign.is_zero() {
        LineSide::On
    } else {
        LineSide::Minus
    })
}

/// Whether `q` lies in the closed triangle cut from the quadrant by x + y <= 2.
pub fn in_triangle(q: &Point) -> bool {
    q.y <= rat_int(2) - &q.x
}

/// Largest multiple of `lambda` that is <= `a`.
pub fn floor_lambda(a: &Rat, lambda: &Rat) -> Result<Rat> {
    if !lambda.is_positive() {
        return Err(Error::NonPositiveLambda);
    }
    Ok((a / lambda).floor() * lambda)
}

/// Smallest multiple of `lambda` that is >= `a`.
pub fn ceil_lambda(a: &Rat, lambda: &Rat) -> Result<Rat> {
    if !lambda.is_positive() {
        return Err(Error::NonPositiveLambda);
    }
    Ok((a / lambda).ceil() * lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(x: Rat, y: Rat) -> Point {
        Point::new(x, y).unwrap()
    }

    #[test]
    fn line_side_examples() {
        // line value at x=1 is 4/3, and (1,1) lies under it
        let a = pt(rat_int(0), rat_int(2));
        let b = pt(rat_int(3), rat_int(0));
        assert_eq!(line_side(&a, &b, &Point::one()).unwrap(), LineSide::Minus);

        let a = pt(rat_int(1), rat_int(0));
        let b = pt(rat_int(0), rat_int(1));
        assert_eq!(line_side(&a, &b, &Point::one()).unwrap(), LineSide::Plus);

        let a = pt(rat_int(0), rat(5, 4));
        let b = pt(rat_int(5), rat_int(0));
        assert_eq!(line_side(&a, &b, &Point::one()).unwrap(), LineSide::On);
    }

    #[test]
    fn line_side_rejects_degenerate_inputs() {
        let a = pt(rat_int(1), rat_int(2));
        assert_eq!(
            line_side(&a, &a.clone(), &Point::one()),
            Err(Error::DegenerateLine)
        );
        let b = pt(rat_int(1), rat_int(5));
        assert_eq!(line_side(&a, &b, &Point::one()), Err(Error::VerticalLine));
    }

    #[test]
    fn in_triangle_examples() {
        assert!(in_triangle(&Point::one()));
        assert!(in_triangle(&pt(rat_int(0), rat(5, 4))));
        assert!(!in_triangle(&pt(rat_int(3), rat_int(0))));
    }

    #[test]
    fn floor_ceil_examples() {
        assert_eq!(floor_lambda(&rat(5, 3), &rat(1, 2)).unwrap(), rat(3, 2));
        assert_eq!(ceil_lambda(&rat(5, 4), &rat(5, 4)).unwrap(), rat(5, 4));
        assert_eq!(floor_lambda(&rat_int(2), &rat(1, 2)).unwrap(), rat_int(2));
        assert_eq!(
            floor_lambda(&rat_int(1), &rat_int(0)),
            Err(Error::NonPositiveLambda)
        );
        assert_eq!(
            ceil_lambda(&rat_int(1), &rat(-1, 2)),
            Err(Error::NonPositiveLambda)
        );
    }

    #[test]
    fn point_rejects_negative_coordinates() {
        assert_eq!(
            Point::new(rat_int(-1), rat_int(0)),
            Err(Error::NegativeCoordinate)
        );
        assert_eq!(
            Point::new(rat_int(0), rat(-1, 3)),
            Err(Error::NegativeCoordinate)
        );
    }

    /// Random rationals with moderate numerators and denominators.
    fn arb_rat(max_num: i64, max_den: i64) -> impl Strategy<Value = Rat> {
        (0..=max_num, 1..=max_den).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_pos_rat(max_num: i64, max_den: i64) -> impl Strategy<Value = Rat> {
        (1..=max_num, 1..=max_den).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn floor_ceil_bracket(a in arb_rat(400, 20), lambda in arb_pos_rat(40, 12)) {
            let fl = floor_lambda(&a, &lambda).unwrap();
            let ce = ceil_lambda(&a, &lambda).unwrap();
            prop_assert!(fl <= a && a < &fl + &lambda);
            prop_assert!(&ce - &lambda < a && a <= ce);
            // both are genuine multiples of lambda
            prop_assert!((&fl / &lambda).is_integer());
            prop_assert!((&ce / &lambda).is_integer());
        }

        #[test]
        fn scaled_floor_matches_plain_floor(a in arb_rat(400, 20), lambda in arb_pos_rat(40, 12)) {
            prop_assert_eq!(floor_lambda(&a, &lambda).unwrap() / &lambda, (&a / &lambda).floor());
            prop_assert_eq!(ceil_lambda(&a, &lambda).unwrap() / &lambda, (&a / &lambda).ceil());
        }

        #[test]
        fn line_side_detects_vertical_perturbations(
            ax in arb_rat(20, 6), ay in arb_rat(20, 6),
            run in arb_pos_rat(20, 6), rise in arb_rat(20, 6),
            t in arb_rat(30, 8), eps in arb_pos_rat(5, 9),
        ) {
            let a = pt(ax.clone(), ay.clone());
            let b = pt(&ax + &run, &ay + &rise);
            // q on the line through a and b at parameter t >= 0
            let q_on = pt(&ax + &t * &run, &ay + &t * &rise);
            prop_assert_eq!(line_side(&a, &b, &q_on).unwrap(), LineSide::On);
            let q_up = pt(q_on.x().clone(), q_on.y() + &eps);
            prop_assert_eq!(line_side(&a, &b, &q_up).unwrap(), LineSide::Plus);
            if q_on.y() >= &eps {
                let q_down = pt(q_on.x().clone(), q_on.y() - &eps);
                prop_assert_eq!(line_side(&a, &b, &q_down).unwrap(), LineSide::Minus);
            }
        }
    }

    // For all lambda = 1/k (k <= 8) and all a,b in lambda*Z with 1 < a <= b <= 2:
    // floor_lambda(a/(a-1)) + a >= floor_lambda(b/(b-1)) + b.
    // Exhaustive over the whole valid range.
    #[test]
    fn staircase_decay_inequality_exhaustive() {
        for k in 1i64..=8 {
            let lambda = rat(1, k);
            let steps: Vec<Rat> = (k + 1..=2 * k).map(|i| rat(i, k)).collect();
            for a in &steps {
                for b in &steps {
                    if a > b {
                        continue;
                    }
                    let fa = floor_lambda(&(a / (a - rat_int(1))), &lambda).unwrap() + a;
                    let fb = floor_lambda(&(b / (b - rat_int(1))), &lambda).unwrap() + b;
                    assert!(
                        fa >= fb,
                        "failed for lambda=1/{k}, a={a}, b={b}: {fa} < {fb}"
                    );
                }
            }
        }
    }

    #[test]
    fn parse_rat_accepts_both_forms() {
        assert_eq!(parse_rat("5/4").unwrap(), rat(5, 4));
        assert_eq!(parse_rat(" 7 ").unwrap(), rat_int(7));
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x/4").is_err());
        assert!(parse_rat("").is_err());
    }
}
