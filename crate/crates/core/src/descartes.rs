//! The Descartes relation on four bends and its linear (Boyd) form.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::numerics::{isqrt_exact, Int};

/// Bends of four pairwise tangent circles; an enclosing circle carries a
/// negative bend.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BendQuadruple([Int; 4]);

impl BendQuadruple {
    pub fn new(a: Int, b: Int, c: Int, d: Int) -> Result<Self> {
        if !descartes_holds(&a, &b, &c, &d) {
            return Err(Error::InvalidQuadruple(Box::new([a, b, c, d])));
        }
        Ok(Self([a, b, c, d]))
    }

    pub fn bends(&self) -> &[Int; 4] {
        &self.0
    }

    /// Replaces bend `i` by its Boyd dual.
    pub fn reflect(&self, i: usize) -> Self {
        let mut out = self.0.clone();
        let others: Int = (0..4).filter(|&j| j != i).map(|j| &self.0[j]).sum();
        out[i] = others * 2 - &self.0[i];
        Self(out)
    }
}

/// `2(a²+b²+c²+d²) == (a+b+c+d)²`, exactly.
pub fn descartes_holds(a: &Int, b: &Int, c: &Int, d: &Int) -> bool {
    let squares = a * a + b * b + c * c + d * d;
    let sum = a + b + c + d;
    squares * 2 == &sum * &sum
}

/// The other root of the Descartes quadratic: `2(a+b+c) - d`.
pub fn boyd_dual(a: &Int, b: &Int, c: &Int, d: &Int) -> Result<Int> {
    if !descartes_holds(a, b, c, d) {
        return Err(Error::InvalidQuadruple(Box::new([
            a.clone(),
            b.clone(),
            c.clone(),
            d.clone(),
        ])));
    }
    let dual = (a + b + c) * 2 - d;
    debug_assert!(descartes_holds(a, b, c, &dual));
    Ok(dual)
}

/// Both integral solutions `d` of the Descartes relation for a tangent triple,
/// ascending: `(a+b+c) ∓ 2·sqrt(ab+bc+ca)`.
pub fn fourth_bends(a: &Int, b: &Int, c: &Int) -> Result<(Int, Int)> {
    let disc = a * b + b * c + c * a;
    if disc.is_negative() {
        return Err(Error::NegativeDiscriminant(disc));
    }
    let s = isqrt_exact(&disc).ok_or(Error::NotIntegral(disc))?;
    let sum = a + b + c;
    let lo = &sum - &s * 2;
    let hi = sum + s * 2;
    Ok((lo, hi))
}
