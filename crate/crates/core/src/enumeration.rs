//! Enumeration of integral Apollonian gaskets through the master equation
//!
//! ```text
//!     B² + µ² = k·n,    3µ² ≤ B²,    2µ ≤ k ≤ n
//! ```
//!
//! Each solution with `gcd(B, k, n) = 1` is one irreducible integral gasket,
//! whose five largest circles have bends
//! `(-B, B+k, B+n, B+k+n-2µ, B+k+n+2µ)`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::descartes::descartes_holds;
use crate::error::{Error, Result};
use crate::numerics::{gcd3, int, Int, Rat};

/// A solution `(B, µ, k, n)` of the master equation; the canonical name of a
/// gasket.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GasketKey {
    b: Int,
    mu: Int,
    k: Int,
    n: Int,
}

impl GasketKey {
    /// Validates the master equation and both constraints. Reducible keys
    /// (`gcd(B, k, n) > 1`) are accepted; see [`GasketKey::is_irreducible`].
    pub fn new(b: Int, mu: Int, k: Int, n: Int) -> Result<Self> {
        let violation = |msg: String| Err(Error::MasterEquationViolation(msg));
        if b.is_negative() || mu.is_negative() || k.is_negative() || n.is_negative() {
            return violation(format!("({b},{mu},{k},{n}) has a negative entry"));
        }
        let lhs = &b * &b + &mu * &mu;
        let rhs = &k * &n;
        if lhs != rhs {
            return violation(format!("B²+µ² = {lhs} ≠ k·n = {rhs}"));
        }
        if &mu * &mu * 3 > &b * &b {
            return violation(format!("3µ² = {} > B² = {}", &mu * &mu * 3, &b * &b));
        }
        if &mu * 2 > k {
            return violation(format!("2µ = {} > k = {k}", &mu * 2));
        }
        if k > n {
            return violation(format!("k = {k} > n = {n}"));
        }
        if b.is_zero() && n.is_zero() {
            return violation("B = k = n = 0 is not a gasket".to_string());
        }
        Ok(Self { b, mu, k, n })
    }

    pub fn from_i64s(b: i64, mu: i64, k: i64, n: i64) -> Result<Self> {
        Self::new(int(b), int(mu), int(k), int(n))
    }

    /// The irreducible strip key `(0, 0, 0, 1)`.
    pub fn strip() -> Self {
        Self {
            b: Int::zero(),
            mu: Int::zero(),
            k: Int::zero(),
            n: Int::one(),
        }
    }

    /// Root bend `B`; the enclosing circle has bend `-B`.
    pub fn b(&self) -> &Int {
        &self.b
    }

    pub fn mu(&self) -> &Int {
        &self.mu
    }

    pub fn k(&self) -> &Int {
        &self.k
    }

    pub fn n(&self) -> &Int {
        &self.n
    }

    pub fn is_strip(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_irreducible(&self) -> bool {
        gcd3(&self.b, &self.k, &self.n).is_one()
    }

    /// Half-width of the strip preimage, `k / B²`. `None` for the strip.
    pub fn rho(&self) -> Option<Rat> {
        (!self.is_strip()).then(|| Rat::new(self.k.clone(), &self.b * &self.b))
    }

    /// Height of the second circle's preimage above the axis, `2µ / B²`.
    pub fn height(&self) -> Option<Rat> {
        (!self.is_strip()).then(|| Rat::new(&self.mu * 2, &self.b * &self.b))
    }

    /// `m = 2µ`.
    pub fn m(&self) -> Int {
        &self.mu * 2
    }

    /// The key multiplied through by `factor`.
    pub fn scaled(&self, factor: &Int) -> Self {
        Self {
            b: &self.b * factor,
            mu: &self.mu * factor,
            k: &self.k * factor,
            n: &self.n * factor,
        }
    }

    pub fn quintet(&self) -> BendQuintet {
        quintet(self)
    }
}

impl fmt::Display for GasketKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.b, self.mu, self.k, self.n)
    }
}

/// Bends of the five largest disks, `b0 ≤ 0` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BendQuintet(pub [Int; 5]);

impl BendQuintet {
    pub fn from_i64s(bends: [i64; 5]) -> Self {
        Self(bends.map(int))
    }

    pub fn bends(&self) -> &[Int; 5] {
        &self.0
    }

    /// Both principal quadruples satisfy the Descartes relation and the two
    /// largest bends are Boyd duals.
    pub fn is_consistent(&self) -> bool {
        let [b0, b1, b2, b3, b4] = &self.0;
        descartes_holds(b0, b1, b2, b3)
            && descartes_holds(b0, b1, b2, b4)
            && b3 + b4 == (b0 + b1 + b2) * 2
    }
}

impl fmt::Display for BendQuintet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [b0, b1, b2, b3, b4] = &self.0;
        write!(f, "({b0},{b1},{b2},{b3},{b4})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryClass {
    Strip,
    Window,
    /// Mirror symmetric with exactly three circles on the axis.
    Odd,
    /// Mirror symmetric with infinitely many circles on the axis.
    Even,
    /// Mirror symmetry from two congruent largest circles (`k = n`).
    EvenStar,
    Skew,
}

impl SymmetryClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SymmetryClass::Strip => "strip",
            SymmetryClass::Window => "window",
            SymmetryClass::Odd => "odd",
            SymmetryClass::Even => "even",
            SymmetryClass::EvenStar => "even*",
            SymmetryClass::Skew => "skew",
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One row of the gasket table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GasketRecord {
    pub key: GasketKey,
    pub quintet: BendQuintet,
    pub shift: Rat,
    pub symmetry: SymmetryClass,
    /// 1 for an irreducible gasket, λ ≥ 2 for the λ-fold multiple of one.
    pub scale: u64,
}

impl GasketRecord {
    pub fn irreducible(key: GasketKey) -> Self {
        Self {
            quintet: quintet(&key),
            shift: shift(&key),
            symmetry: classify(&key),
            key,
            scale: 1,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.scale == 1
    }
}

/// All irreducible keys with root bend `b`, ordered by µ then k.
///
/// # Panics
///
/// Panics if `b` is negative.
pub fn solve_master(b: &Int) -> Vec<GasketKey> {
    assert!(!b.is_negative(), "root bend must be nonnegative");
    if b.is_zero() {
        return vec![GasketKey::strip()];
    }
    let b2 = b * b;
    let mut keys = Vec::new();
    let mut mu = Int::zero();
    while &mu * &mu * 3 <= b2 {
        let target = &b2 + &mu * &mu;
        let mut k = std::cmp::max(&mu * 2, Int::one());
        // k ≤ n  ⇔  k² ≤ k·n
        while &k * &k <= target {
            if target.is_multiple_of(&k) {
                let n = &target / &k;
                if gcd3(b, &k, &n).is_one() {
                    keys.push(GasketKey {
                        b: b.clone(),
                        mu: mu.clone(),
                        k: k.clone(),
                        n,
                    });
                }
            }
            k += 1;
        }
        mu += 1;
    }
    keys
}

/// `(-B, B+k, B+n, B+k+n-2µ, B+k+n+2µ)`.
pub fn quintet(key: &GasketKey) -> BendQuintet {
    let GasketKey { b, mu, k, n } = key;
    let base = b + k + n;
    BendQuintet([-b.clone(), b + k, b + n, &base - mu * 2, &base + mu * 2])
}

/// Inverse of [`quintet`].
pub fn key_from_quintet(q: &BendQuintet) -> Result<GasketKey> {
    let [b0, b1, b2, b3, b4] = &q.0;
    let b = -b0.clone();
    let k = b1 - &b;
    let n = b2 - &b;
    let gap = b4 - b3;
    if !gap.is_multiple_of(&int(4)) {
        return Err(Error::MasterEquationViolation(format!(
            "b4 - b3 = {gap} is not divisible by 4"
        )));
    }
    if b3 + b4 != (b0 + b1 + b2) * 2 {
        return Err(Error::MasterEquationViolation(format!(
            "b3 + b4 = {} ≠ 2(b0+b1+b2) = {}",
            b3 + b4,
            (b0 + b1 + b2) * 2
        )));
    }
    let mu = gap / 4;
    let key = GasketKey::new(b, mu, k, n)?;
    debug_assert_eq!(&quintet(&key), q);
    Ok(key)
}

/// `2µ/k`, or 0 for the strip.
pub fn shift(key: &GasketKey) -> Rat {
    if key.k.is_zero() {
        return Rat::zero();
    }
    Rat::new(&key.mu * 2, key.k.clone())
}

/// Symmetry type of an irreducible key. Precedence is
/// strip, window, odd, even, even*, skew.
pub fn classify(key: &GasketKey) -> SymmetryClass {
    if key.is_strip() {
        SymmetryClass::Strip
    } else if key.b.is_one() && key.mu.is_zero() && key.k.is_one() && key.n.is_one() {
        SymmetryClass::Window
    } else if key.mu.is_zero() {
        SymmetryClass::Odd
    } else if key.mu.clone() * 2 == key.k {
        SymmetryClass::Even
    } else if key.k == key.n {
        SymmetryClass::EvenStar
    } else {
        SymmetryClass::Skew
    }
}

/// Every gasket with root bend `0..=b_max`, in (B, µ, k) order.
///
/// With `irreducible_only == false` the λ-fold multiples (λ ≥ 2) of each
/// irreducible gasket whose root bend stays within `b_max` are included too.
/// The strip has no multiples here since λ·strip never leaves root bend 0.
///
/// Root bends are solved in parallel on the current rayon pool.
pub fn enumerate(b_max: u64, irreducible_only: bool) -> Vec<GasketRecord> {
    let per_bend: Vec<Vec<GasketKey>> = (0..=b_max)
        .into_par_iter()
        .map(|b| solve_master(&Int::from(b)))
        .collect();
    let mut records: Vec<GasketRecord> = per_bend
        .into_iter()
        .flatten()
        .map(GasketRecord::irreducible)
        .collect();
    if irreducible_only {
        return records;
    }

    let mut multiples = Vec::new();
    for rec in records.iter().filter(|r| !r.key.is_strip()) {
        let root = rec.key.b.to_u64().expect("root bend within b_max");
        for factor in 2..=(b_max / root) {
            let f = Int::from(factor);
            let key = rec.key.scaled(&f);
            multiples.push(GasketRecord {
                quintet: quintet(&key),
                shift: rec.shift.clone(),
                symmetry: rec.symmetry,
                key,
                scale: factor,
            });
        }
    }
    records.extend(multiples);
    records.sort_by(|x, y| (&x.key.b, &x.key.mu, &x.key.k).cmp(&(&y.key.b, &y.key.mu, &y.key.k)));
    records
}
