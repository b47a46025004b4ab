//! Closed-form upper bounds on the independent isolation number.
//!
//! * [`sequence_bound`]: `−ι²/ℓ + ι(Δ+2) − ℓΔ`, where `ℓ` is the length of
//!   the greedy minimum-degree sequence through an optimal isolating set.
//! * [`ratio_bound`]: `Δ − 2√Δ + 2`, the supremum of `sequence_bound / ι`
//!   over real `ℓ`, attained at `ℓ = ι/√Δ`.
//! * [`star_free_bound`]: `(r−2)(ι−1)+1` for `K_{1,r}`-free graphs.

use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

fn check_sequence_domain(iota: usize, ell: usize) -> Result<()> {
    if ell == 0 || ell > iota {
        return Err(Error::InvalidParameter(format!("sequence length {ell} must lie in 1..={iota}")));
    }
    Ok(())
}

/// `−ι²/ℓ + ι(Δ+2) − ℓΔ`, exactly.
pub fn sequence_bound(iota: usize, ell: usize, delta: usize) -> Result<Rational> {
    check_sequence_domain(iota, ell)?;
    let (i, l, d) = (iota as i64, ell as i64, delta as i64);
    let value = -Rational::new(i * i, l) + Rational::from_integer(i * (d + 2) - l * d);
    debug_assert_eq!(Ok(value), sequence_bound_maximum_form(iota, ell, delta));
    Ok(value)
}

/// The same bound in its maximiser form `ℓ + (ι/ℓ − 1)(ℓΔ − ι + ℓ)`: the
/// value of `ℓ + Σ xᵢ(Δ − xᵢ)` when every `xᵢ = ι/ℓ − 1`.
pub fn sequence_bound_maximum_form(iota: usize, ell: usize, delta: usize) -> Result<Rational> {
    check_sequence_domain(iota, ell)?;
    let (i, l, d) = (iota as i64, ell as i64, delta as i64);
    let share = Rational::new(i, l) - 1;
    Ok(Rational::from_integer(l) + share * Rational::from_integer(l * d - i + l))
}

/// [`sequence_bound`] with real-valued arguments.
pub fn sequence_bound_real(iota: f64, ell: f64, delta: f64) -> f64 {
    -iota * iota / ell + iota * (delta + 2.0) - ell * delta
}

/// `Δ − 2√Δ + 2`.
pub fn ratio_bound(delta: usize) -> f64 {
    let d = delta as f64;
    d - 2.0 * d.sqrt() + 2.0
}

/// `(r−2)(ι−1)+1`.
pub fn star_free_bound(iota: usize, r: usize) -> Result<usize> {
    if iota == 0 || r < 3 {
        return Err(Error::InvalidParameter(format!(
            "star-free bound needs iota >= 1 and r >= 3, got iota={iota}, r={r}"
        )));
    }
    Ok((r - 2) * (iota - 1) + 1)
}
