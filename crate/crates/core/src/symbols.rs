//! Circle symbols and packing generation.
//!
//! A circle is carried as its symbol `(ẋ, ẏ) / b`: the bend `b` together with
//! the reduced coordinates `ẋ = b·x`, `ẏ = b·y` of its center. In a Descartes
//! configuration all three components obey the same linear reflection rule
//! as the bends, so a whole packing can be grown from its largest circles by
//! exact integer and rational arithmetic.

use std::collections::HashSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::descartes::descartes_holds;
use crate::enumeration::{quintet, GasketKey};
use crate::error::{Error, Result};
use crate::numerics::{rat_int, Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleSymbol {
    // Field order gives the (bend, ẋ, ẏ) sort order used for output.
    bend: Int,
    x_dot: Rat,
    y_dot: Rat,
}

impl CircleSymbol {
    /// # Panics
    ///
    /// Panics on a zero bend; lines have no symbol.
    pub fn new(x_dot: Rat, y_dot: Rat, bend: Int) -> Self {
        assert!(!bend.is_zero(), "circle symbols need a nonzero bend");
        Self { bend, x_dot, y_dot }
    }

    pub fn bend(&self) -> &Int {
        &self.bend
    }

    pub fn x_dot(&self) -> &Rat {
        &self.x_dot
    }

    pub fn y_dot(&self) -> &Rat {
        &self.y_dot
    }

    pub fn center(&self) -> (Rat, Rat) {
        let b = rat_int(&self.bend);
        (&self.x_dot / &b, &self.y_dot / &b)
    }

    pub fn radius(&self) -> Rat {
        Rat::new(Int::from(1), self.bend.abs())
    }

    /// Reduced coordinates are both integers.
    pub fn has_integral_coordinates(&self) -> bool {
        self.x_dot.is_integer() && self.y_dot.is_integer()
    }

    /// True when this circle lies inside the enclosing circle `outer`
    /// (`|center - outer.center| + r ≤ R`), decided exactly.
    pub fn lies_within(&self, outer: &CircleSymbol) -> bool {
        let (cx, cy) = self.center();
        let (ox, oy) = outer.center();
        let slack = outer.radius() - self.radius();
        if slack.is_negative() {
            return false;
        }
        let dx = cx - ox;
        let dy = cy - oy;
        &dx * &dx + &dy * &dy <= &slack * &slack
    }
}

impl fmt::Display for CircleSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})/{}", self.x_dot, self.y_dot, self.bend)
    }
}

/// Exact tangency: `(b1ẋ2 - b2ẋ1)² + (b1ẏ2 - b2ẏ1)² = (b1 + b2)²`.
pub fn tangent(c1: &CircleSymbol, c2: &CircleSymbol) -> bool {
    let (lhs, rhs) = tangency_sides(c1, c2);
    lhs == rhs
}

pub(crate) fn tangency_sides(c1: &CircleSymbol, c2: &CircleSymbol) -> (Rat, Rat) {
    let b1 = rat_int(&c1.bend);
    let b2 = rat_int(&c2.bend);
    let dx = &b1 * &c2.x_dot - &b2 * &c1.x_dot;
    let dy = &b1 * &c2.y_dot - &b2 * &c1.y_dot;
    let h = &b1 + &b2;
    (&dx * &dx + &dy * &dy, &h * &h)
}

/// Four pairwise tangent circles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescartesConfig {
    circles: [CircleSymbol; 4],
}

impl DescartesConfig {
    /// Checks the Descartes relation on the bends and tangency of all six pairs.
    pub fn new(circles: [CircleSymbol; 4]) -> Result<Self> {
        let config = Self { circles };
        config.validate()?;
        Ok(config)
    }

    pub fn circles(&self) -> &[CircleSymbol; 4] {
        &self.circles
    }

    pub fn circle(&self, slot: usize) -> &CircleSymbol {
        &self.circles[slot]
    }

    pub fn validate(&self) -> Result<()> {
        let [a, b, c, d] = &self.circles;
        if !descartes_holds(&a.bend, &b.bend, &c.bend, &d.bend) {
            return Err(Error::InvalidConfig(format!(
                "bends {}, {}, {}, {} fail the Descartes relation",
                a.bend, b.bend, c.bend, d.bend
            )));
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                if !tangent(&self.circles[i], &self.circles[j]) {
                    return Err(Error::InvalidConfig(format!(
                        "{} and {} are not tangent",
                        self.circles[i], self.circles[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The circle that would replace slot `slot` under reflection.
    pub fn dual_circle(&self, slot: usize) -> CircleSymbol {
        let mut bend = Int::zero();
        let mut x_dot = Rat::zero();
        let mut y_dot = Rat::zero();
        for (j, c) in self.circles.iter().enumerate() {
            if j != slot {
                bend += &c.bend;
                x_dot += &c.x_dot;
                y_dot += &c.y_dot;
            }
        }
        let old = &self.circles[slot];
        CircleSymbol {
            bend: bend * 2 - &old.bend,
            x_dot: x_dot * rat_int(&Int::from(2)) - &old.x_dot,
            y_dot: y_dot * rat_int(&Int::from(2)) - &old.y_dot,
        }
    }

    /// Replaces the circle in `slot` (0-based) by its Boyd dual; every
    /// component becomes twice the sum of the other three minus its old value.
    pub fn reflect(&self, slot: usize) -> DescartesConfig {
        let mut circles = self.circles.clone();
        circles[slot] = self.dual_circle(slot);
        DescartesConfig { circles }
    }

    fn canonical(&self) -> [CircleSymbol; 4] {
        let mut c = self.circles.clone();
        c.sort();
        c
    }
}

/// The five largest circles `B0..B4` of a gasket, centered on the enclosing
/// circle, with `B1` on the negative x-axis and `B2` above the axis.
pub fn principal_symbols(key: &GasketKey) -> Result<[CircleSymbol; 5]> {
    if key.is_strip() {
        return Err(Error::StripUnsupported);
    }
    let (b, mu, k) = (key.b(), key.mu(), key.k());
    let bends = quintet(key).0;
    let bk = b * k;
    let b2 = b * b;
    let x_of = |offset: &Int| Rat::new(&b2 - offset * offset, bk.clone());
    let y_of = |num: Int| Rat::new(num, k.clone());
    let [b0, b1, bn, b3, b4] = bends;

    let symbols = [
        CircleSymbol::new(Rat::zero(), Rat::zero(), b0),
        CircleSymbol::new(Rat::new(-k.clone(), b.clone()), Rat::zero(), b1),
        CircleSymbol::new(x_of(mu), y_of(mu * 2), bn),
        CircleSymbol::new(x_of(&(k - mu)), y_of(-(k - mu) * 2), b3),
        CircleSymbol::new(x_of(&(k + mu)), y_of((k + mu) * 2), b4),
    ];
    let [s0, s1, s2, s3, s4] = &symbols;
    DescartesConfig::new([s0.clone(), s1.clone(), s2.clone(), s3.clone()])?;
    DescartesConfig::new([s0.clone(), s1.clone(), s2.clone(), s4.clone()])?;
    Ok(symbols)
}

/// `(B0, B1, B2, B3)` and `(B0, B1, B2, B4)`.
pub fn root_configs(key: &GasketKey) -> Result<(DescartesConfig, DescartesConfig)> {
    let [s0, s1, s2, s3, s4] = principal_symbols(key)?;
    Ok((
        DescartesConfig {
            circles: [s0.clone(), s1.clone(), s2.clone(), s3],
        },
        DescartesConfig {
            circles: [s0, s1, s2, s4],
        },
    ))
}

/// Every circle of a gasket with bend up to `max_bend`, with the Descartes
/// configurations that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    key: GasketKey,
    max_bend: Int,
    circles: Vec<CircleSymbol>,
    configs: Vec<DescartesConfig>,
}

impl Packing {
    pub fn key(&self) -> &GasketKey {
        &self.key
    }

    pub fn max_bend(&self) -> &Int {
        &self.max_bend
    }

    /// Sorted by bend, then `ẋ`, then `ẏ`; the enclosing circle comes first.
    pub fn circles(&self) -> &[CircleSymbol] {
        &self.circles
    }

    /// In discovery order; the two root configurations come first.
    pub fn configs(&self) -> &[DescartesConfig] {
        &self.configs
    }

    pub fn enclosing(&self) -> &CircleSymbol {
        &self.circles[0]
    }

    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }
}

/// Breadth-first closure of the two root configurations under reflection,
/// dropping any reflection whose new circle has bend above `max_bend`.
pub fn generate(key: &GasketKey, max_bend: &Int) -> Result<Packing> {
    let (first, second) = root_configs(key)?;
    let b4 = quintet(key).0[4].clone();
    if *max_bend < b4 {
        return Err(Error::MaxBendTooSmall {
            max_bend: max_bend.clone(),
            b4,
        });
    }

    let mut seen: HashSet<[CircleSymbol; 4]> = HashSet::new();
    let mut circles: HashSet<CircleSymbol> = HashSet::new();
    let mut configs = Vec::new();
    let mut frontier = Vec::new();
    for root in [first, second] {
        if seen.insert(root.canonical()) {
            circles.extend(root.circles.iter().cloned());
            frontier.push(root.clone());
            configs.push(root);
        }
    }

    while !frontier.is_empty() {
        let mut next: Vec<(CircleSymbol, [CircleSymbol; 4], DescartesConfig)> = Vec::new();
        for config in &frontier {
            for slot in 0..4 {
                let fresh = config.dual_circle(slot);
                if fresh.bend > *max_bend {
                    continue;
                }
                let mut reflected = config.clone();
                reflected.circles[slot] = fresh.clone();
                let canon = reflected.canonical();
                if seen.contains(&canon) {
                    continue;
                }
                next.push((fresh, canon, reflected));
            }
        }
        next.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        frontier.clear();
        for (fresh, canon, config) in next {
            if seen.insert(canon) {
                circles.insert(fresh);
                frontier.push(config.clone());
                configs.push(config);
            }
        }
    }

    let mut circles: Vec<CircleSymbol> = circles.into_iter().collect();
    circles.sort();
    Ok(Packing {
        key: key.clone(),
        max_bend: max_bend.clone(),
        circles,
        configs,
    })
}
