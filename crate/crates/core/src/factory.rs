//! Instance generators: the lower-bound staircase, the quadratic
//! construction and seeded random corpora.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::{rat, Point, Rational};
use crate::rng::DetRng;
use crate::visibility::{Instance, Ranking};

/// Grid pitch of [`random_instance`] coordinates.
pub const RANDOM_PITCH: i64 = 64;

/// Where the extra square of an odd quadratic instance goes; far from the
/// rest, so it sees nothing.
pub const FILLER_CENTER: (i64, i64) = (100, 100);

fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `n − 2` "bunch" squares on a diagonal staircase with step `delta`,
/// followed by two special squares up-left and down-right of it.
///
/// With `D = (n − 3)·delta` the bunch is `((i−1)δ, (i−1)δ)` for
/// `i = 1..=n−2`, then `A = (−1 + D/2, 1 + D/2)` and `B = (1 + D/2, −1 + D/2)`.
/// Requires `n ≥ 4`, `delta > 0` and `D ≤ 1/2`.
pub fn lower_bound_instance(n: usize, delta: &Rational) -> Result<Instance> {
    if n < 4 {
        return Err(Error::BadParams(format!("lowerbound needs n >= 4, got {n}")));
    }
    if !delta.is_positive() {
        return Err(Error::BadParams(format!("delta must be positive, got {delta}")));
    }
    let extent = int(n - 3) * delta;
    if extent > rat(1, 2) {
        return Err(Error::BadParams(format!(
            "staircase extent (n-3)*delta = {extent} exceeds 1/2"
        )));
    }
    let half_extent = &extent / int(2);
    let one = Rational::one();
    let mut centers: Vec<Point> = (0..n - 2)
        .map(|i| {
            let v = int(i) * delta;
            Point::new(v.clone(), v)
        })
        .collect();
    centers.push(Point::new(&half_extent - &one, &one + &half_extent));
    centers.push(Point::new(&one + &half_extent, &half_extent - &one));
    Ok(Instance::new(centers))
}

/// `m = ⌊n/2⌋` lower squares `L_i = (iδ, 0)` and `m` upper squares
/// `U_j = (δ, v − jδ)` with `v = 2 − (m+1)δ`, plus a far filler when `n` is
/// odd. The returned ranking `L_1..L_m, U_1..U_m, filler` makes every
/// lower square see every upper one. Requires `n ≥ 2` and
/// `0 < delta ≤ 1/(n+2)`.
pub fn quadratic_instance(n: usize, delta: &Rational) -> Result<(Instance, Ranking)> {
    if n < 2 {
        return Err(Error::BadParams(format!("quadratic needs n >= 2, got {n}")));
    }
    if !delta.is_positive() || *delta > Rational::new(BigInt::one(), BigInt::from(n + 2)) {
        return Err(Error::BadParams(format!("quadratic needs 0 < delta <= 1/{}, got {delta}", n + 2)));
    }
    let m = n / 2;
    let top = int(2) - int(m + 1) * delta;
    let lower = (1..=m).map(|i| Point::new(int(i) * delta, Rational::zero()));
    let upper = (1..=m).map(|j| Point::new(delta.clone(), &top - int(j) * delta));
    let mut centers: Vec<Point> = lower.chain(upper).collect();
    if n % 2 == 1 {
        centers.push(Point::new(rat(FILLER_CENTER.0, 1), rat(FILLER_CENTER.1, 1)));
    }
    Ok((Instance::new(centers), Ranking::identity(n)))
}

/// `n` distinct centers drawn uniformly from the grid of pitch 1/64 over
/// `[0, span]²`. Draws use [`DetRng`]; a repeated center is redrawn.
pub fn random_instance(n: usize, span: &Rational, seed: u64) -> Result<Instance> {
    if !span.is_positive() {
        return Err(Error::BadParams(format!("span must be positive, got {span}")));
    }
    let steps = (span * Rational::from_integer(BigInt::from(RANDOM_PITCH))).floor().to_integer();
    let points_per_axis = steps
        .to_u64()
        .and_then(|s| s.checked_add(1))
        .ok_or_else(|| Error::BadParams(format!("span {span} too large")))?;
    if (points_per_axis as u128).pow(2) < n as u128 {
        return Err(Error::BadParams(format!(
            "span {span} has fewer than {n} distinct grid points"
        )));
    }
    let mut rng = DetRng::new(seed);
    let mut seen = std::collections::HashSet::new();
    let mut centers = Vec::with_capacity(n);
    while centers.len() < n {
        let gx = rng.below(points_per_axis);
        let gy = rng.below(points_per_axis);
        if seen.insert((gx, gy)) {
            centers.push(Point::new(
                Rational::new(BigInt::from(gx), BigInt::from(RANDOM_PITCH)),
                Rational::new(BigInt::from(gy), BigInt::from(RANDOM_PITCH)),
            ));
        }
    }
    Ok(Instance::new(centers))
}

/// The largest staircase step allowed for `lower_bound_instance(n, _)`.
pub fn max_lower_bound_delta(n: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2 * n.saturating_sub(3).max(1)))
}
