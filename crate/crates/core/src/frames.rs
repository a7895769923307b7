//! Pythagorean triples carried by tangent circle pairs, and how they move
//! when a Descartes configuration is reflected.
//!
//! For tangent circles with symbols `(ẋ1, ẏ1)/b1` and `(ẋ2, ẏ2)/b2` the triple
//! `(Δ, Γ, H) = (b1ẋ2 - b2ẋ1, b1ẏ2 - b2ẏ1, b1 + b2)` satisfies
//! `Δ² + Γ² = H²`; the right triangle joining the two centers has sides
//! `(Δ, Γ, H) / (b1·b2)`.
//!
//! A configuration `(C1, C2, C3, C4)` has six such triangles, its frame. Frame
//! entries follow the pair convention `Δij = ẋi·bj - ẋj·bi` and are stored in
//! the order `41, 42, 43, 12, 23, 31`.

use std::fmt::{self, Write as _};

use num_integer::Integer;
use num_traits::Zero;

use crate::enumeration::GasketKey;
use crate::error::{Error, Result};
use crate::numerics::{int, is_integral, rat_int, Int, Rat};
use crate::symbols::{root_configs, tangency_sides, CircleSymbol, DescartesConfig};

/// Frame pairs as 0-based slots, in storage order.
pub const PAIRS: [(usize, usize); 6] = [(3, 0), (3, 1), (3, 2), (0, 1), (1, 2), (2, 0)];

pub const PAIR_LABELS: [&str; 6] = ["41", "42", "43", "12", "23", "31"];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriangleTriple {
    pub delta: Rat,
    pub gamma: Rat,
    pub h: Int,
}

impl TriangleTriple {
    pub fn is_integral(&self) -> bool {
        is_integral(&self.delta) && is_integral(&self.gamma)
    }

    pub fn is_pythagorean(&self) -> bool {
        let h = rat_int(&self.h);
        &self.delta * &self.delta + &self.gamma * &self.gamma == &h * &h
    }

    pub fn reversed(&self) -> Self {
        Self {
            delta: -self.delta.clone(),
            gamma: -self.gamma.clone(),
            h: self.h.clone(),
        }
    }
}

impl fmt::Display for TriangleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.delta, self.gamma, self.h)
    }
}

/// `(b1ẋ2 - b2ẋ1, b1ẏ2 - b2ẏ1, b1 + b2)` for a tangent pair.
pub fn triple(c1: &CircleSymbol, c2: &CircleSymbol) -> Result<TriangleTriple> {
    let b1 = rat_int(c1.bend());
    let b2 = rat_int(c2.bend());
    let t = TriangleTriple {
        delta: &b1 * c2.x_dot() - &b2 * c1.x_dot(),
        gamma: &b1 * c2.y_dot() - &b2 * c1.y_dot(),
        h: c1.bend() + c2.bend(),
    };
    if !t.is_pythagorean() {
        let (lhs, rhs) = tangency_sides(c1, c2);
        return Err(Error::NotTangent {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    entries: [TriangleTriple; 6],
}

impl Frame {
    pub fn entries(&self) -> &[TriangleTriple; 6] {
        &self.entries
    }

    /// The triple for slots `(i, j)`, reversing a stored pair when needed.
    pub fn get(&self, i: usize, j: usize) -> TriangleTriple {
        match pair_index(i, j) {
            (idx, true) => self.entries[idx].clone(),
            (idx, false) => self.entries[idx].reversed(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(TriangleTriple::is_integral)
    }

    pub fn deltas(&self) -> [Rat; 6] {
        self.entries.clone().map(|t| t.delta)
    }

    pub fn gammas(&self) -> [Rat; 6] {
        self.entries.clone().map(|t| t.gamma)
    }

    pub fn hs(&self) -> [Int; 6] {
        self.entries.clone().map(|t| t.h)
    }

    pub fn from_vectors(deltas: [Rat; 6], gammas: [Rat; 6], hs: [Int; 6]) -> Self {
        let mut it = deltas.into_iter().zip(gammas).zip(hs);
        let entries = std::array::from_fn(|_| {
            let ((delta, gamma), h) = it.next().unwrap();
            TriangleTriple { delta, gamma, h }
        });
        Frame { entries }
    }
}

/// Storage index of the slot pair and whether it is stored in this orientation.
fn pair_index(i: usize, j: usize) -> (usize, bool) {
    for (idx, &(a, b)) in PAIRS.iter().enumerate() {
        if (a, b) == (i, j) {
            return (idx, true);
        }
        if (b, a) == (i, j) {
            return (idx, false);
        }
    }
    panic!("no frame pair for slots ({i}, {j})");
}

/// The six triples of a configuration.
pub fn frame_of(config: &DescartesConfig) -> Result<Frame> {
    let mut entries = Vec::with_capacity(6);
    for &(i, j) in &PAIRS {
        // Δij = ẋi·bj - ẋj·bi is the triple of (Cj, Ci).
        entries.push(triple(config.circle(j), config.circle(i))?);
    }
    Ok(Frame {
        entries: entries.try_into().unwrap(),
    })
}

/// The principal frame: the frame of `(B0, B1, B2, B3)`.
pub fn principal_frame(key: &GasketKey) -> Result<Frame> {
    let (root, _) = root_configs(key)?;
    frame_of(&root)
}

/// Frame of the configuration reflected in `replaced`, from the old frame
/// alone: for every other slot `j`,
/// `Δ'ij = -Δij + 2·Σ Δlj` and `H'ij = -Hij + 2·Σ Hlj` over the two remaining
/// slots `l`. Pairs not touching `replaced` are unchanged.
pub fn frame_transition(frame: &Frame, replaced: usize) -> Frame {
    assert!(replaced < 4, "slot {replaced} out of range");
    let two = rat_int(&int(2));
    let mut entries = frame.entries.clone();
    for j in (0..4).filter(|&j| j != replaced) {
        let own = frame.get(replaced, j);
        let mut delta = -own.delta;
        let mut gamma = -own.gamma;
        let mut h = -own.h;
        for l in (0..4).filter(|&l| l != replaced && l != j) {
            let t = frame.get(l, j);
            delta += &two * t.delta;
            gamma += &two * t.gamma;
            h += t.h * 2;
        }
        let new = TriangleTriple { delta, gamma, h };
        match pair_index(replaced, j) {
            (idx, true) => entries[idx] = new,
            (idx, false) => entries[idx] = new.reversed(),
        }
    }
    Frame { entries }
}

/// Integrality test: every triple of the gasket is integral when
/// `k` divides `2B²`. The strip (`k = 0`) returns `false`.
pub fn integral_frames_predicate(key: &GasketKey) -> bool {
    if key.k().is_zero() {
        return false;
    }
    let twice_b2: Int = key.b() * key.b() * 2;
    twice_b2.is_multiple_of(key.k())
}

pub type Matrix6 = [[i64; 6]; 6];

/// Linear action of one reflection on the frame vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub replaced: usize,
    /// Acts on the Δ vector and, identically, on the Γ vector.
    pub delta: Matrix6,
    /// Acts on the H vector.
    pub h: Matrix6,
}

impl TransitionMatrix {
    pub fn apply_rat(m: &Matrix6, v: &[Rat; 6]) -> [Rat; 6] {
        std::array::from_fn(|r| {
            (0..6).fold(Rat::zero(), |acc, c| acc + rat_int(&int(m[r][c])) * &v[c])
        })
    }

    pub fn apply_int(m: &Matrix6, v: &[Int; 6]) -> [Int; 6] {
        std::array::from_fn(|r| (0..6).fold(Int::zero(), |acc, c| acc + int(m[r][c]) * &v[c]))
    }

    pub fn apply(&self, frame: &Frame) -> Frame {
        Frame::from_vectors(
            Self::apply_rat(&self.delta, &frame.deltas()),
            Self::apply_rat(&self.delta, &frame.gammas()),
            Self::apply_int(&self.h, &frame.hs()),
        )
    }

    /// Entrywise absolute value of the Δ matrix.
    pub fn abs_delta(&self) -> Matrix6 {
        self.delta.map(|row| row.map(i64::abs))
    }
}

/// Symbolic derivation of the matrices for replacing slot `replaced`.
///
/// Each row is written as a combination of unit vectors `e(x, y)`, where
/// `e(x, y)` is `±` the basis vector of the stored pair, negative when the
/// pair is stored as `(y, x)`. The H row uses the same combination without
/// the orientation signs since `H` is symmetric.
pub fn transition_matrix(replaced: usize) -> TransitionMatrix {
    assert!(replaced < 4, "slot {replaced} out of range");
    let mut delta = [[0i64; 6]; 6];
    let mut h = [[0i64; 6]; 6];
    for (row, &(a, b)) in PAIRS.iter().enumerate() {
        if a != replaced && b != replaced {
            delta[row][row] = 1;
            h[row][row] = 1;
            continue;
        }
        // row pair is (replaced, j) up to orientation
        let j = if a == replaced { b } else { a };
        let row_sign = if a == replaced { 1 } else { -1 };
        let mut add = |x: usize, y: usize, coeff: i64| {
            let (col, same) = pair_index(x, y);
            let orient = if same { 1 } else { -1 };
            delta[row][col] += row_sign * orient * coeff;
            h[row][col] += coeff;
        };
        add(replaced, j, -1);
        for l in (0..4).filter(|&l| l != replaced && l != j) {
            add(l, j, 2);
        }
    }
    TransitionMatrix { replaced, delta, h }
}

/// Matrices for replacing `C1`, `C2` and `C3` with `C4` held fixed.
pub fn transition_matrices() -> [TransitionMatrix; 3] {
    [
        transition_matrix(0),
        transition_matrix(1),
        transition_matrix(2),
    ]
}

/// Plain-text dump: one 6×6 grid per block, row-major, blocks separated by a
/// blank line. Only the Δ/Γ matrices are written.
pub fn format_matrices(matrices: &[Matrix6]) -> String {
    let mut out = String::new();
    for (i, m) in matrices.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for row in m {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Reference transition matrices A, B, C that the derived ones are checked
/// against. They are kept verbatim; see [`comparison_report`].
pub const REFERENCE_MATRICES: [(&str, Matrix6); 3] = [
    (
        "A",
        [
            [1, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, -1, 0],
            [0, 0, 0, 1, -2, -2],
            [2, 0, 1, 0, 2, 0],
            [-2, -1, 0, 0, 0, 2],
        ],
    ),
    (
        "B",
        [
            [0, 0, 0, 0, 0, -1],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, -2, -1, 2, 0, 0],
            [0, 0, 0, -2, 1, -2],
            [1, 2, 0, 0, 0, 2],
        ],
    ),
    (
        "C",
        [
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, -1, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 1, 2, 2, 0, 0],
            [-1, 0, -2, 0, 2, 0],
            [0, 0, 0, -2, 2, 1],
        ],
    ),
];

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&x| seen[x] = true);
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn sample_configs() -> Vec<DescartesConfig> {
    let mut out = Vec::new();
    for key in [(6, 2, 5, 8), (12, 3, 9, 17), (3, 1, 2, 5)] {
        let key = GasketKey::from_i64s(key.0, key.1, key.2, key.3).expect("sample key");
        let (root, _) = root_configs(&key).expect("sample root");
        out.push(root.reflect(0).reflect(2));
        out.push(root);
    }
    out
}

/// How a reference matrix relates to the reflections it is meant to encode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixComparison {
    pub label: &'static str,
    /// Derived fixed-label matrices (by replaced slot) equal to the reference one.
    pub equal_to: Vec<usize>,
    /// `(replaced slot, relabeling)` pairs for which the reference matrix maps
    /// the Δ and Γ vectors of every sample frame onto those of the reflected,
    /// relabeled configuration. `relabel[s]` is the old slot placed in new slot `s`.
    pub reproduces: Vec<(usize, [usize; 4])>,
    /// Whether the entrywise absolute value also carries H for those matches.
    pub abs_carries_h: Vec<bool>,
    /// Same search with the reference matrix transposed (row-vector action).
    pub transposed_reproduces: Vec<(usize, [usize; 4])>,
}

fn transpose(m: &Matrix6) -> Matrix6 {
    std::array::from_fn(|r| std::array::from_fn(|c| m[c][r]))
}

/// `(replaced, relabeling, abs carries H)` for every reflection that `m`
/// reproduces on the Δ and Γ vectors of all sample frames.
fn reproduced_reflections(m: &Matrix6) -> Vec<(usize, [usize; 4], bool)> {
    let samples = sample_configs();
    let abs = m.map(|row| row.map(i64::abs));
    let mut out = Vec::new();
    for replaced in 0..4 {
        for perm in permutations4() {
            let mut all_dg = true;
            let mut all_h = true;
            for config in &samples {
                let before = frame_of(config).expect("sample frame");
                let reflected = config.reflect(replaced);
                let relabeled = DescartesConfig::new(perm.map(|s| reflected.circle(s).clone()))
                    .expect("relabeling keeps a configuration");
                let after = frame_of(&relabeled).expect("sample frame");
                all_dg &= TransitionMatrix::apply_rat(m, &before.deltas()) == after.deltas()
                    && TransitionMatrix::apply_rat(m, &before.gammas()) == after.gammas();
                all_h &= TransitionMatrix::apply_int(&abs, &before.hs()) == after.hs();
            }
            if all_dg {
                out.push((replaced, perm, all_h));
            }
        }
    }
    out
}

pub fn compare_reference() -> Vec<MatrixComparison> {
    let derived: Vec<TransitionMatrix> = (0..4).map(transition_matrix).collect();
    REFERENCE_MATRICES
        .iter()
        .map(|(label, m)| {
            let found = reproduced_reflections(m);
            MatrixComparison {
                label,
                equal_to: derived
                    .iter()
                    .filter(|d| d.delta == *m)
                    .map(|d| d.replaced)
                    .collect(),
                reproduces: found.iter().map(|&(r, p, _)| (r, p)).collect(),
                abs_carries_h: found.iter().map(|&(_, _, h)| h).collect(),
                transposed_reproduces: reproduced_reflections(&transpose(m))
                    .into_iter()
                    .map(|(r, p, _)| (r, p))
                    .collect(),
            }
        })
        .collect()
}

/// Human-readable discrepancy report between the derived and reference
/// matrices.
pub fn comparison_report() -> String {
    let mut out = String::new();
    let derived: Vec<TransitionMatrix> = (0..4).map(transition_matrix).collect();
    writeln!(
        out,
        "Derived transition matrices (fixed labels, slots C1..C4):"
    )
    .unwrap();
    for d in &derived {
        let abs_ok = d.abs_delta() == d.h;
        writeln!(
            out,
            "  replace C{}: H matrix {} |Δ matrix|",
            d.replaced + 1,
            if abs_ok { "equals" } else { "differs from" }
        )
        .unwrap();
        if !abs_ok {
            let abs = d.abs_delta();
            for (r, (h_row, abs_row)) in d.h.iter().zip(&abs).enumerate() {
                for (c, (h, a)) in h_row.iter().zip(abs_row).enumerate() {
                    if h != a {
                        let (pr, pc) = (PAIR_LABELS[r], PAIR_LABELS[c]);
                        writeln!(out, "    H[{pr}][{pc}] = {h} but |Δ[{pr}][{pc}]| = {a}").unwrap();
                    }
                }
            }
        }
    }
    writeln!(out).unwrap();
    for cmp in compare_reference() {
        writeln!(out, "Reference matrix {}:", cmp.label).unwrap();
        if cmp.equal_to.is_empty() {
            writeln!(out, "  differs from every derived fixed-label matrix").unwrap();
            let (_, m) = REFERENCE_MATRICES
                .iter()
                .find(|(l, _)| *l == cmp.label)
                .unwrap();
            for d in &derived {
                let diffs: Vec<String> = (0..6)
                    .flat_map(|r| (0..6).map(move |c| (r, c)))
                    .filter(|&(r, c)| m[r][c] != d.delta[r][c])
                    .map(|(r, c)| {
                        format!(
                            "[{}][{}] {}≠{}",
                            PAIR_LABELS[r], PAIR_LABELS[c], m[r][c], d.delta[r][c]
                        )
                    })
                    .collect();
                writeln!(
                    out,
                    "  vs replace C{}: {} entries differ: {}",
                    d.replaced + 1,
                    diffs.len(),
                    diffs.join(", ")
                )
                .unwrap();
            }
        } else {
            for r in &cmp.equal_to {
                writeln!(out, "  equals derived matrix for replacing C{}", r + 1).unwrap();
            }
        }
        if cmp.reproduces.is_empty() {
            writeln!(
                out,
                "  reproduces no reflection under any relabeling of the result"
            )
            .unwrap();
        }
        if cmp.transposed_reproduces.is_empty() {
            writeln!(
                out,
                "  transposed, reproduces no reflection under any relabeling either"
            )
            .unwrap();
        }
        for (replaced, perm) in &cmp.transposed_reproduces {
            let names: Vec<String> = perm.iter().map(|s| format!("C{}", s + 1)).collect();
            writeln!(
                out,
                "  transposed, reproduces replacing C{} with result relabeled as ({})",
                replaced + 1,
                names.join(", ")
            )
            .unwrap();
        }
        for ((replaced, perm), h_ok) in cmp.reproduces.iter().zip(&cmp.abs_carries_h) {
            let names: Vec<String> = perm.iter().map(|s| format!("C{}", s + 1)).collect();
            writeln!(
                out,
                "  reproduces replacing C{} with result relabeled as ({}); |entries| on H: {}",
                replaced + 1,
                names.join(", "),
                if *h_ok { "correct" } else { "incorrect" }
            )
            .unwrap();
        }
    }
    out
}
