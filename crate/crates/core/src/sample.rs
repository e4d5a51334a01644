//! Random rational sextuples for property checks.
//!
//! Numerators are uniform in `[-20, 20]` and denominators in `[1, 10]`; draws
//! with a repeated value or a degenerate Pascal configuration are rejected.

use rand::Rng;

use crate::hexagram::{four_special_pascals, SextupleParams};
use crate::scalar::{ratio, Scalar};

pub const NUMERATOR_RANGE: (i64, i64) = (-20, 20);
pub const DENOMINATOR_RANGE: (i64, i64) = (1, 10);

pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    let n = rng.gen_range(NUMERATOR_RANGE.0..=NUMERATOR_RANGE.1);
    let d = rng.gen_range(DENOMINATOR_RANGE.0..=DENOMINATOR_RANGE.1);
    ratio(n, d)
}

/// One raw draw; may have repeated values.
pub fn draw_values<R: Rng + ?Sized>(rng: &mut R) -> [Scalar; 6] {
    std::array::from_fn(|_| random_scalar(rng))
}

/// Draws until the sextuple is distinct and its four special Pascals are
/// well defined. Returns the parameters and the number of rejected draws.
pub fn random_generic_sextuple<R: Rng + ?Sized>(rng: &mut R) -> (SextupleParams, usize) {
    let mut rejected = 0;
    loop {
        if let Ok(p) = SextupleParams::new(draw_values(rng)) {
            if four_special_pascals(&p).is_ok() {
                return (p, rejected);
            }
        }
        rejected += 1;
    }
}
