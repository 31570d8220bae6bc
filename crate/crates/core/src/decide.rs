//! Decision procedures.
//!
//! * Schubert varieties: `X_λ ≅ X'_μ` exactly when `μ ∈ {λ, λᵀ}`.
//!   [`schubert_distinguishing_invariants`] additionally explains a negative
//!   answer with the invariants an isomorphism would have to preserve.
//! * Richardson varieties: semi-isomorphic skew posets give isomorphic
//!   varieties. The converse is only conjectured, so
//!   [`richardson_isomorphic_sufficient`] never reports non-isomorphism.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::partition::Partition;
use crate::poset::{
    build_poset, canonical_skew_class, order_ideal_counts, InvariantSignature, Limits,
};
use crate::singular::{lambda_zero, sing_components};
use crate::skew::SkewShape;

pub fn schubert_isomorphic(lambda: &Partition, mu: &Partition) -> bool {
    lambda == mu || &lambda.transpose() == mu
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SchubertReport {
    /// `λ = μ`.
    Equal,
    /// `λᵀ = μ`.
    Transposed,
    NotIsomorphic {
        witness: Witness,
    },
}

impl SchubertReport {
    pub fn is_isomorphic(&self) -> bool {
        !matches!(self, SchubertReport::NotIsomorphic { .. })
    }
}

/// The first invariant found that separates two partitions. Variants are
/// listed in the order they are tried.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rung", rename_all = "snake_case")]
pub enum Witness {
    /// Different dimensions `|λ| ≠ |μ|`.
    Size { left: usize, right: usize },
    /// Different numbers of subdiagrams of size `size` (Chow group ranks).
    SubdiagramCount {
        size: usize,
        left: u128,
        right: u128,
    },
    /// Different numbers of rectangles, hence of singular components.
    RectangleCount { left: usize, right: usize },
    /// Different numbers of rectangles in `λ⁰` and `μ⁰`.
    LambdaZeroRectangleCount { left: usize, right: usize },
    /// Different hook sizes `{ξ(λ¹), ξ(λ^{r-1})}`, compared as multisets.
    ExtremeXi { left: Vec<usize>, right: Vec<usize> },
    /// `λ⁰` and `μ⁰` are separated.
    LambdaZero {
        left: Partition,
        right: Partition,
        inner: Box<Witness>,
    },
    /// Both ways of pairing `{λ¹, λ^{r-1}}` with `{μ¹, μ^{r-1}}` contain a
    /// separated pair.
    ExtremeComponents {
        straight: Box<PairWitness>,
        crossed: Box<PairWitness>,
    },
    /// Nothing in this signature separates the pair.
    NoneFound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub left: Partition,
    pub right: Partition,
    pub witness: Witness,
}

impl Witness {
    pub fn is_found(&self) -> bool {
        !matches!(self, Witness::NoneFound)
    }

    fn write_trace(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        match self {
            Witness::Size { left, right } => writeln!(f, "{pad}sizes differ: {left} vs {right}"),
            Witness::SubdiagramCount { size, left, right } => writeln!(
                f,
                "{pad}number of size-{size} subdiagrams differs: {left} vs {right}"
            ),
            Witness::RectangleCount { left, right } => writeln!(
                f,
                "{pad}rectangle counts differ: {left} vs {right} (singular loci have different numbers of components)"
            ),
            Witness::LambdaZeroRectangleCount { left, right } => {
                writeln!(f, "{pad}rectangle counts of lambda^0 differ: {left} vs {right}")
            }
            Witness::ExtremeXi { left, right } => writeln!(
                f,
                "{pad}hook sizes of the extreme singular components differ: {left:?} vs {right:?}"
            ),
            Witness::LambdaZero { left, right, inner } => {
                writeln!(f, "{pad}lambda^0 = {left} and mu^0 = {right} are separated:")?;
                inner.write_trace(f, depth + 1)
            }
            Witness::ExtremeComponents { straight, crossed } => {
                writeln!(f, "{pad}no pairing of the extreme singular components survives:")?;
                for pair in [straight, crossed] {
                    writeln!(f, "{pad}  {} vs {}:", pair.left, pair.right)?;
                    pair.witness.write_trace(f, depth + 2)?;
                }
                Ok(())
            }
            Witness::NoneFound => writeln!(f, "{pad}no witness found by this signature"),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_trace(f, 0)
    }
}

/// Explains why `X_λ` and `X'_μ` are (or are not) isomorphic.
///
/// For a non-isomorphic pair the checks run in the order of the
/// isomorphism proof: dimension, subdiagram counts, rectangle counts,
/// rectangle count of `λ⁰`, hook sizes of the extreme singular
/// components, then recursion into `(λ⁰, μ⁰)` and the extreme components.
pub fn schubert_distinguishing_invariants(
    lambda: &Partition,
    mu: &Partition,
) -> Result<SchubertReport> {
    if lambda == mu {
        return Ok(SchubertReport::Equal);
    }
    if &lambda.transpose() == mu {
        return Ok(SchubertReport::Transposed);
    }
    let mut memo = HashMap::new();
    let witness = separate(lambda, mu, &mut memo)?;
    Ok(SchubertReport::NotIsomorphic { witness })
}

type Memo = HashMap<(Partition, Partition), Witness>;

fn separate(lambda: &Partition, mu: &Partition, memo: &mut Memo) -> Result<Witness> {
    debug_assert!(!schubert_isomorphic(lambda, mu));
    let key = (lambda.clone(), mu.clone());
    if let Some(w) = memo.get(&key) {
        return Ok(w.clone());
    }
    let w = separate_uncached(lambda, mu, memo)?;
    memo.insert(key, w.clone());
    Ok(w)
}

fn separate_uncached(lambda: &Partition, mu: &Partition, memo: &mut Memo) -> Result<Witness> {
    if lambda.size() != mu.size() {
        return Ok(Witness::Size {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let (cl, cm) = (lambda.subdiagram_counts()?, mu.subdiagram_counts()?);
    if let Some(size) = (0..cl.len()).find(|&i| cl[i] != cm[i]) {
        return Ok(Witness::SubdiagramCount {
            size,
            left: cl[size],
            right: cm[size],
        });
    }
    let (rl, rm) = (lambda.rectangle_count(), mu.rectangle_count());
    if rl != rm {
        return Ok(Witness::RectangleCount {
            left: rl,
            right: rm,
        });
    }
    if rl < 2 {
        return Ok(Witness::NoneFound);
    }
    let (zl, zm) = (lambda_zero(lambda)?, lambda_zero(mu)?);
    let (r0l, r0m) = (zl.rectangle_count(), zm.rectangle_count());
    if r0l != r0m {
        return Ok(Witness::LambdaZeroRectangleCount {
            left: r0l,
            right: r0m,
        });
    }
    let (sl, sm) = (sing_components(lambda)?, sing_components(mu)?);
    let extremes = |s: &[Partition]| (s[0].clone(), s[s.len() - 1].clone());
    let ((l1, ll), (m1, ml)) = (extremes(&sl), extremes(&sm));
    let xi_pair = |a: &Partition, b: &Partition| -> Result<Vec<usize>> {
        // the extreme components may be empty, whose longest hook is 0
        let xi = |p: &Partition| if p.is_empty() { Ok(0) } else { p.xi() };
        let mut v = vec![xi(a)?, xi(b)?];
        v.sort_unstable();
        Ok(v)
    };
    let (xl, xm) = (xi_pair(&l1, &ll)?, xi_pair(&m1, &ml)?);
    if xl != xm {
        return Ok(Witness::ExtremeXi {
            left: xl,
            right: xm,
        });
    }
    if !schubert_isomorphic(&zl, &zm) {
        let inner = separate(&zl, &zm, memo)?;
        if inner.is_found() {
            return Ok(Witness::LambdaZero {
                left: zl,
                right: zm,
                inner: Box::new(inner),
            });
        }
    }
    let straight = refute_pairing([(&l1, &m1), (&ll, &ml)], memo)?;
    let crossed = refute_pairing([(&l1, &ml), (&ll, &m1)], memo)?;
    if let (Some(straight), Some(crossed)) = (straight, crossed) {
        return Ok(Witness::ExtremeComponents {
            straight: Box::new(straight),
            crossed: Box::new(crossed),
        });
    }
    Ok(Witness::NoneFound)
}

fn refute_pairing(
    pairs: [(&Partition, &Partition); 2],
    memo: &mut Memo,
) -> Result<Option<PairWitness>> {
    for (a, b) in pairs {
        if schubert_isomorphic(a, b) {
            continue;
        }
        let witness = separate(a, b, memo)?;
        if witness.is_found() {
            return Ok(Some(PairWitness {
                left: a.clone(),
                right: b.clone(),
                witness,
            }));
        }
    }
    Ok(None)
}

/// Outcome of the Richardson test. Only the positive answer is proved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RichardsonVerdict {
    Isomorphic,
    /// No semi-isomorphism exists. If the converse conjecture holds the
    /// varieties are not isomorphic; this crate does not claim so.
    UnknownConjecturedNot {
        /// Component classes of the left shape left over after matching.
        unmatched_left: Vec<SkewShape>,
        /// Component classes of the right shape left over after matching.
        unmatched_right: Vec<SkewShape>,
    },
}

impl RichardsonVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, RichardsonVerdict::Isomorphic)
    }
}

pub fn richardson_isomorphic_sufficient(a: &SkewShape, b: &SkewShape) -> RichardsonVerdict {
    let mut left = crate::poset::component_classes(a);
    let mut right = crate::poset::component_classes(b);
    // both sorted: strip the common sub-multiset
    let (mut i, mut j) = (0, 0);
    let (mut only_left, mut only_right) = (Vec::new(), Vec::new());
    while i < left.len() && j < right.len() {
        match left[i].cmp(&right[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => {
                only_left.push(left[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                only_right.push(right[j].clone());
                j += 1;
            }
        }
    }
    only_left.extend(left.drain(i..));
    only_right.extend(right.drain(j..));
    if only_left.is_empty() && only_right.is_empty() {
        RichardsonVerdict::Isomorphic
    } else {
        RichardsonVerdict::UnknownConjecturedNot {
            unmatched_left: only_left,
            unmatched_right: only_right,
        }
    }
}

/// Longest hook `1 + arm + leg` over all boxes of a connected shape.
fn longest_hook(shape: &SkewShape) -> usize {
    shape
        .cells()
        .iter()
        .map(|&(r, c)| {
            let arm = (c + 1..)
                .take_while(|&j| shape.contains_cell((r, j)))
                .count();
            let leg = (r + 1..)
                .take_while(|&i| shape.contains_cell((i, c)))
                .count();
            1 + arm + leg
        })
        .max()
        .unwrap_or(0)
}

pub fn invariant_signature(shape: &SkewShape, limits: &Limits) -> Result<InvariantSignature> {
    let components = shape.connected_components();
    let mut component_sizes: Vec<usize> = components.iter().map(SkewShape::len).collect();
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));

    let mut ideals: Vec<u128> = vec![1];
    let mut xi_profile = Vec::with_capacity(components.len());
    for component in &components {
        debug_assert!(canonical_skew_class(component).is_ok());
        let forward = order_ideal_counts(&build_poset(component), limits)?;
        let mut backward = forward.clone();
        backward.reverse();
        ideals = convolve(&ideals, &forward.min(backward))?;
        let hooks = (
            longest_hook(component),
            longest_hook(&component.rotate180()),
        );
        xi_profile.push((hooks.0.min(hooks.1), hooks.0.max(hooks.1)));
    }
    xi_profile.sort_unstable();
    Ok(InvariantSignature {
        cell_count: shape.len(),
        component_sizes,
        order_ideal_counts: ideals,
        xi_profile,
    })
}

fn convolve(a: &[u128], b: &[u128]) -> Result<Vec<u128>> {
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            let term = x.checked_mul(y).ok_or(crate::Error::Overflow)?;
            out[i + j] = out[i + j].checked_add(term).ok_or(crate::Error::Overflow)?;
        }
    }
    Ok(out)
}
