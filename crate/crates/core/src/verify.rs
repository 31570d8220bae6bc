//! Exhaustive small-scale verification sweeps.
//!
//! Each sweep checks identities over every instance up to a size bound and
//! returns a [`Report`] listing counterexamples. Instances are independent
//! and evaluated with rayon; failures are sorted before reporting, so the
//! report does not depend on scheduling.
//!
//! Sweeps are written against the [`Subject`] trait rather than calling the
//! library directly. [`Reference`] forwards to the real implementations;
//! tests swap in deliberately broken formulas to confirm each sweep notices.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::decide::invariant_signature;
use crate::error::{Error, Result};
use crate::partition::{BoxFrame, Partition};
use crate::poset::{self, is_isomorphic, perfect_matching, CellPoset, Limits};
use crate::singular;
use crate::skew::SkewShape;

/// Outcome of one sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<String>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn finish(checked: usize, failures: Vec<Vec<String>>, started: Instant) -> Report {
        let mut failures: Vec<String> = failures.into_iter().flatten().collect();
        failures.sort();
        Report {
            checked,
            failures,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}

/// The operations a sweep exercises. Every method defaults to the library.
pub trait Subject: Sync {
    fn transpose(&self, lambda: &Partition) -> Partition {
        lambda.transpose()
    }

    fn sing_components(&self, lambda: &Partition) -> Result<Vec<Partition>> {
        singular::sing_components(lambda)
    }

    fn lambda_zero(&self, lambda: &Partition) -> Result<Partition> {
        singular::lambda_zero(lambda)
    }

    fn subdiagram_counts(&self, lambda: &Partition) -> Result<Vec<u128>> {
        lambda.subdiagram_counts()
    }

    fn build_poset(&self, shape: &SkewShape) -> CellPoset {
        poset::build_poset(shape)
    }

    fn connected_components(&self, shape: &SkewShape) -> Vec<SkewShape> {
        shape.connected_components()
    }

    fn transpose_skew(&self, shape: &SkewShape) -> SkewShape {
        shape.transpose()
    }

    fn rotate180(&self, shape: &SkewShape) -> SkewShape {
        shape.rotate180()
    }

    /// Sorted canonical classes of the components; two shapes of equal size
    /// are semi-isomorphic exactly when these agree.
    fn component_classes(&self, shape: &SkewShape) -> Vec<SkewShape> {
        poset::component_classes(shape)
    }
}

/// The library itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct Reference;

impl Subject for Reference {}

/// Iterator over all partitions inside a box, in lexicographic order of
/// their part sequences.
#[derive(Clone, Debug)]
pub struct PartitionsInBox {
    frame: BoxFrame,
    current: Option<Vec<usize>>,
}

impl Iterator for PartitionsInBox {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.as_mut()?;
        let out = Partition::from_sorted_unchecked(current.clone());
        let cap = |parts: &[usize], i: usize| {
            if i == 0 {
                self.frame.cols
            } else {
                parts[i - 1]
            }
        };
        // lexicographic successor: extend by 1, else bump the last part
        // that can grow, dropping everything after it
        if current.len() < self.frame.rows && cap(current, current.len()) >= 1 {
            current.push(1);
        } else {
            loop {
                match current.len() {
                    0 => {
                        self.current = None;
                        break;
                    }
                    n if current[n - 1] < cap(current, n - 1) => {
                        current[n - 1] += 1;
                        break;
                    }
                    _ => {
                        current.pop();
                    }
                }
            }
        }
        Some(out)
    }
}

/// All partitions fitting in `frame`; there are `C(m + k, m)` of them.
pub fn enumerate_partitions_in_box(frame: BoxFrame) -> PartitionsInBox {
    PartitionsInBox {
        frame,
        current: Some(Vec::new()),
    }
}

/// Every normalized skew shape with `cells` boxes that fits in a
/// `cells x cells` square, sorted by cell set. Generated from all pairs
/// `λ ⊆ ν` inside that square and deduplicated.
///
/// Each connected shape with `cells` boxes fits in the square, and so does
/// every shape whose components sit diagonally adjacent to each other;
/// only shapes with wider gaps between components are left out.
pub fn enumerate_skew_shapes(
    cells: usize,
    connected_only: bool,
    limits: &Limits,
) -> Result<Vec<SkewShape>> {
    skew_bound(cells, limits)?;
    let side = cells;
    let inners: Vec<Partition> = enumerate_partitions_in_box(BoxFrame::new(side, side)).collect();
    let mut found: Vec<SkewShape> = inners
        .par_iter()
        .flat_map_iter(|inner| {
            let mut local = Vec::new();
            let mut outer = Vec::with_capacity(side);
            extend_outer(inner, side, cells, &mut outer, &mut local);
            local
        })
        .filter(|s| !connected_only || s.is_connected())
        .collect();
    found.par_sort_unstable();
    found.dedup();
    Ok(found)
}

fn skew_bound(cells: usize, limits: &Limits) -> Result<()> {
    if cells > limits.skew_cells {
        return Err(Error::ResourceBound {
            what: "skew shape cell count",
            size: cells,
            limit: limits.skew_cells,
        });
    }
    Ok(())
}

/// Chooses `ν` row by row above `inner` until `budget` boxes are placed.
fn extend_outer(
    inner: &Partition,
    side: usize,
    budget: usize,
    outer: &mut Vec<usize>,
    out: &mut Vec<SkewShape>,
) {
    let row = outer.len();
    if budget == 0 {
        let mut full = outer.clone();
        full.extend((row..inner.len()).map(|r| inner.part(r)));
        let nu = Partition::new(full).expect("outer rows decrease");
        out.push(SkewShape::from_partitions(inner, &nu).expect("inner ⊆ outer"));
        return;
    }
    if row >= side {
        return;
    }
    let lo = inner.part(row);
    let hi = if row == 0 { side } else { outer[row - 1] };
    if hi == 0 {
        return;
    }
    for value in lo..=hi.min(lo + budget) {
        outer.push(value);
        extend_outer(inner, side, budget - (value - lo), outer, out);
        outer.pop();
    }
}

/// All skew shapes with at most `max_cells` boxes.
fn shapes_up_to(
    max_cells: usize,
    connected_only: bool,
    limits: &Limits,
) -> Result<Vec<Vec<SkewShape>>> {
    skew_bound(max_cells, limits)?;
    (0..=max_cells)
        .map(|n| enumerate_skew_shapes(n, connected_only, limits))
        .collect()
}

/// Coefficients of the Gaussian binomial `[n choose k]_q`, by the q-Pascal
/// rule `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn gaussian_binomial(n: usize, k: usize) -> Result<Vec<u128>> {
    if k > n {
        return Ok(vec![0]);
    }
    // row[j] = [i choose j]_q for the current i
    let mut row: Vec<Vec<u128>> = vec![vec![1]];
    for i in 1..=n {
        let mut next: Vec<Vec<u128>> = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let mut poly = if j == 0 { vec![0] } else { row[j - 1].clone() };
            if j < i {
                let shifted = &row[j];
                if poly.len() < shifted.len() + j {
                    poly.resize(shifted.len() + j, 0);
                }
                for (d, &c) in shifted.iter().enumerate() {
                    poly[d + j] = poly[d + j].checked_add(c).ok_or(Error::Overflow)?;
                }
            }
            next.push(poly);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// `(λᵀ)^i = (λ^{r-i})ᵀ`, `λ⁰ = λ¹ ∩ ... ∩ λ^{r-1}`, `(λ⁰)ᵀ = (λᵀ)⁰` and,
/// for `r ≥ 4`, `λ = λ¹ ∪ λ^{r-1}`, over every partition in `frame`. For
/// `r = 3` the union is checked to be `λ` less exactly one cell.
pub fn verify_sing_identities(frame: BoxFrame, subject: &dyn Subject) -> Report {
    let started = Instant::now();
    let all: Vec<Partition> = enumerate_partitions_in_box(frame).collect();
    let failures = all
        .par_iter()
        .map(|lambda| sing_failures(lambda, subject))
        .collect();
    Report::finish(all.len(), failures, started)
}

fn sing_failures(lambda: &Partition, subject: &dyn Subject) -> Vec<String> {
    let mut out = Vec::new();
    let r = lambda.rectangle_count();
    if r < 2 {
        return out;
    }
    let mut fail = |what: String| out.push(format!("{lambda}: {what}"));
    let lt = subject.transpose(lambda);
    let (comps, comps_t) = match (
        subject.sing_components(lambda),
        subject.sing_components(&lt),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            fail(format!(
                "singular components failed: {:?} / {:?}",
                a.err(),
                b.err()
            ));
            return out;
        }
    };
    if comps.len() != r - 1 || comps_t.len() != r - 1 {
        fail(format!(
            "expected {} singular components, got {} and {}",
            r - 1,
            comps.len(),
            comps_t.len()
        ));
        return out;
    }
    for i in 1..r {
        let lhs = &comps_t[i - 1];
        let rhs = subject.transpose(&comps[r - i - 1]);
        if *lhs != rhs {
            fail(format!("(λᵀ)^{i} = {lhs} but (λ^{})ᵀ = {rhs}", r - i));
        }
    }
    let meet = comps[1..]
        .iter()
        .fold(comps[0].clone(), |acc, c| acc.intersect(c));
    match (subject.lambda_zero(lambda), subject.lambda_zero(&lt)) {
        (Ok(zero), Ok(zero_t)) => {
            if zero != meet {
                fail(format!("λ⁰ = {zero} but ∩λⁱ = {meet}"));
            }
            let zt = subject.transpose(&zero);
            if zt != zero_t {
                fail(format!("(λ⁰)ᵀ = {zt} but (λᵀ)⁰ = {zero_t}"));
            }
        }
        (a, b) => fail(format!("λ⁰ failed: {:?} / {:?}", a.err(), b.err())),
    }
    // with r = 3 the two hooks share one cell, which the union misses
    if r >= 3 {
        let join = comps[0].union(&comps[r - 2]);
        let expected = if r == 3 { 1 } else { 0 };
        if !lambda.contains(&join) || lambda.size() - join.size() != expected {
            fail(format!("λ¹ ∪ λ^{} = {join}", r - 1));
        }
    }
    out
}

/// Diagonal connectivity against Hasse-diagram connectivity, for every
/// skew shape with at most `max_cells` boxes.
pub fn verify_connectivity(
    max_cells: usize,
    subject: &dyn Subject,
    limits: &Limits,
) -> Result<Report> {
    let started = Instant::now();
    let shapes: Vec<SkewShape> = shapes_up_to(max_cells, false, limits)?.concat();
    let failures = shapes
        .par_iter()
        .map(|shape| {
            let diagonal = subject.connected_components(shape);
            let poset = subject.build_poset(shape);
            let hasse = poset.component_indices();
            let mut out = Vec::new();
            if (diagonal.len() <= 1) != poset.is_connected() {
                out.push(format!(
                    "{shape}: diagonally {} but poset {}",
                    if diagonal.len() <= 1 {
                        "connected"
                    } else {
                        "disconnected"
                    },
                    if poset.is_connected() {
                        "connected"
                    } else {
                        "disconnected"
                    },
                ));
            }
            let mut a: Vec<usize> = diagonal.iter().map(SkewShape::len).collect();
            let mut b: Vec<usize> = hasse.iter().map(Vec::len).collect();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                out.push(format!(
                    "{shape}: diagonal component sizes {a:?} vs poset {b:?}"
                ));
            }
            out
        })
        .collect();
    Ok(Report::finish(shapes.len(), failures, started))
}

/// `P(θ†) ≅ P(θ)^op` and `P(θᵀ) ≅ P(θ)` for every shape with at most
/// `max_cells` boxes.
pub fn verify_opposite(max_cells: usize, subject: &dyn Subject, limits: &Limits) -> Result<Report> {
    let started = Instant::now();
    let shapes: Vec<SkewShape> = shapes_up_to(max_cells, false, limits)?.concat();
    let failures: Result<Vec<Vec<String>>> = shapes
        .par_iter()
        .map(|shape| {
            let mut out = Vec::new();
            let p = subject.build_poset(shape);
            let rotated = subject.build_poset(&subject.rotate180(shape));
            if !is_isomorphic(&rotated, &p.opposite(), limits)? {
                out.push(format!("{shape}: P(θ†) is not isomorphic to P(θ)^op"));
            }
            let transposed = subject.build_poset(&subject.transpose_skew(shape));
            if !is_isomorphic(&transposed, &p, limits)? {
                out.push(format!("{shape}: P(θᵀ) is not isomorphic to P(θ)"));
            }
            Ok(out)
        })
        .collect();
    Ok(Report::finish(shapes.len(), failures?, started))
}

/// For all ordered pairs of connected shapes of equal size: an isomorphism
/// `P(θ) → P(θ')` exists iff `θ' ∈ {θ, θᵀ}`, and each one found is the
/// identity or the transposition of cells. Automorphism groups therefore
/// have order 1 or 2.
pub fn verify_strongskew(
    max_cells: usize,
    subject: &dyn Subject,
    limits: &Limits,
) -> Result<Report> {
    let started = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for shapes in shapes_up_to(max_cells, true, limits)? {
        let prepared: Vec<(SkewShape, SkewShape, CellPoset)> = shapes
            .into_iter()
            .map(|s| {
                let t = subject.transpose_skew(&s);
                let p = subject.build_poset(&s);
                (s, t, p)
            })
            .collect();
        checked += prepared.len() * prepared.len();
        let batch: Result<Vec<Vec<String>>> = prepared
            .par_iter()
            .map(|left| {
                let mut out = Vec::new();
                for right in &prepared {
                    out.extend(strongskew_pair(left, right, limits)?);
                }
                Ok(out)
            })
            .collect();
        failures.extend(batch?);
    }
    Ok(Report::finish(checked, failures, started))
}

fn strongskew_pair(
    (a, a_t, pa): &(SkewShape, SkewShape, CellPoset),
    (b, _, pb): &(SkewShape, SkewShape, CellPoset),
    limits: &Limits,
) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let isos = poset::find_isomorphisms(pa, pb, limits)?;
    let equal = a == b;
    let transposed = a_t == b;
    if isos.is_empty() == (equal || transposed) {
        out.push(format!(
            "{a} vs {b}: {} isomorphisms, shapes equal={equal}, transposed={transposed}",
            isos.len()
        ));
    }
    // the two admissible cell maps, as index maps into b
    let index_in_b = |cell| pb.cells().binary_search(&cell).ok();
    let identity: Option<Vec<usize>> = if equal {
        pa.cells().iter().map(|&c| index_in_b(c)).collect()
    } else {
        None
    };
    let transposition: Option<Vec<usize>> = if transposed {
        pa.cells()
            .iter()
            .map(|&(r, c)| index_in_b((c, r)))
            .collect()
    } else {
        None
    };
    for iso in &isos {
        if Some(iso) != identity.as_ref() && Some(iso) != transposition.as_ref() {
            out.push(format!(
                "{a} vs {b}: isomorphism {iso:?} is neither the identity nor the transposition"
            ));
        }
    }
    if equal {
        let mut allowed: Vec<&Vec<usize>> = identity.iter().chain(transposition.iter()).collect();
        allowed.dedup();
        if isos.len() != allowed.len() || !(1..=2).contains(&isos.len()) {
            out.push(format!(
                "{a}: {} automorphisms, expected {} (self-transpose={transposed})",
                isos.len(),
                allowed.len()
            ));
        }
    }
    Ok(out)
}

/// Subdiagram counts are transpose-invariant for every partition in
/// `frame`, and for every rectangle `(a^b)` in `frame` they are the
/// coefficients of `[a + b choose b]_q`.
pub fn verify_betti_identities(frame: BoxFrame, subject: &dyn Subject) -> Report {
    let started = Instant::now();
    let all: Vec<Partition> = enumerate_partitions_in_box(frame).collect();
    let failures = all
        .par_iter()
        .map(|lambda| {
            let mut out = Vec::new();
            let counts = subject.subdiagram_counts(lambda);
            let counts_t = subject.subdiagram_counts(&subject.transpose(lambda));
            if counts != counts_t {
                out.push(format!(
                    "{lambda}: counts {counts:?} but transpose gives {counts_t:?}"
                ));
            }
            if lambda.rectangle_count() <= 1 {
                let (a, b) = (lambda.first(), lambda.len());
                match gaussian_binomial(a + b, b) {
                    Ok(q) if counts.as_ref() == Ok(&q) => {}
                    q => out.push(format!(
                        "{lambda}: counts {counts:?} but [{} choose {b}]_q = {q:?}",
                        a + b
                    )),
                }
            }
            out
        })
        .collect();
    Report::finish(all.len(), failures, started)
}

/// Interns connected components by normalized cell set so that the
/// literal semi-isomorphism test compares each pair of distinct components
/// only once.
struct ComponentTable {
    ids: HashMap<Vec<(usize, usize)>, usize>,
    posets: Vec<CellPoset>,
}

impl ComponentTable {
    fn new() -> Self {
        ComponentTable {
            ids: HashMap::new(),
            posets: Vec::new(),
        }
    }

    /// Component ids of `p`, found from the Hasse diagram alone.
    fn intern(&mut self, p: &CellPoset) -> Vec<usize> {
        p.components()
            .into_iter()
            .map(|c| {
                let min_r = c.cells().iter().map(|x| x.0).min().unwrap_or(0);
                let min_c = c.cells().iter().map(|x| x.1).min().unwrap_or(0);
                let mut key: Vec<(usize, usize)> = c
                    .cells()
                    .iter()
                    .map(|&(r, k)| (r - min_r, k - min_c))
                    .collect();
                key.sort_unstable();
                let next = self.posets.len();
                *self.ids.entry(key).or_insert_with(|| {
                    self.posets.push(c);
                    next
                })
            })
            .collect()
    }
}

/// The canonical-class test for semi-isomorphism against the literal
/// definition (component isomorphism search plus bipartite matching), on
/// all pairs of shapes with the same number of boxes, at most `max_cells`.
pub fn verify_semi_isomorphism(
    max_cells: usize,
    subject: &dyn Subject,
    limits: &Limits,
) -> Result<Report> {
    let started = Instant::now();
    let by_size = shapes_up_to(max_cells, false, limits)?;
    let mut table = ComponentTable::new();
    let mut checked = 0;
    let mut failures = Vec::new();
    for shapes in &by_size {
        let classes: Vec<Vec<SkewShape>> = shapes
            .par_iter()
            .map(|s| subject.component_classes(s))
            .collect();
        let components: Vec<Vec<usize>> = shapes
            .iter()
            .map(|s| table.intern(&subject.build_poset(s)))
            .collect();
        let n = table.posets.len();
        let sizes: Vec<usize> = table.posets.iter().map(CellPoset::len).collect();
        let compatible: Vec<Vec<bool>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let op = table.posets[i].opposite();
                (0..n)
                    .map(|j| {
                        Ok(sizes[i] == sizes[j]
                            && (is_isomorphic(&table.posets[i], &table.posets[j], limits)?
                                || is_isomorphic(&op, &table.posets[j], limits)?))
                    })
                    .collect::<Result<Vec<bool>>>()
            })
            .collect::<Result<_>>()?;
        checked += shapes.len() * (shapes.len() + 1) / 2;
        let batch: Vec<Vec<String>> = (0..shapes.len())
            .into_par_iter()
            .map(|i| {
                let mut out = Vec::new();
                for j in i..shapes.len() {
                    let fast = classes[i] == classes[j];
                    let (ci, cj) = (&components[i], &components[j]);
                    let literal = ci.len() == cj.len() && {
                        let adj: Vec<Vec<bool>> = ci
                            .iter()
                            .map(|&x| cj.iter().map(|&y| compatible[x][y]).collect())
                            .collect();
                        perfect_matching(&adj).is_some()
                    };
                    if fast != literal {
                        out.push(format!(
                            "{} vs {}: canonical classes say {fast}, matching says {literal}",
                            shapes[i], shapes[j]
                        ));
                    }
                }
                out
            })
            .collect();
        failures.extend(batch);
    }
    Ok(Report::finish(checked, failures, started))
}

/// Unordered pairs of shapes (at most `max_cells` boxes) that are not
/// semi-isomorphic yet share an [`InvariantSignature`](crate::poset::InvariantSignature).
/// Purely observational.
pub fn conjecture_collision_search(
    max_cells: usize,
    limits: &Limits,
) -> Result<Vec<(SkewShape, SkewShape)>> {
    let shapes = shapes_up_to(max_cells, false, limits)?.concat();
    let signatures: Vec<_> = shapes
        .par_iter()
        .map(|s| invariant_signature(s, limits))
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for (i, sig) in signatures.into_iter().enumerate() {
        groups.entry(sig).or_default().push(i);
    }
    let mut out = Vec::new();
    for members in groups.values() {
        // one representative per semi-isomorphism class
        let mut reps: Vec<(Vec<SkewShape>, usize)> = Vec::new();
        for &i in members {
            let classes = poset::component_classes(&shapes[i]);
            if !reps.iter().any(|(c, _)| *c == classes) {
                reps.push((classes, i));
            }
        }
        for x in 0..reps.len() {
            for y in x + 1..reps.len() {
                out.push((shapes[reps[x].1].clone(), shapes[reps[y].1].clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn partitions_in_box_counts_and_order() {
        let small: Vec<String> = enumerate_partitions_in_box(BoxFrame::new(2, 2))
            .map(|p| p.to_string())
            .collect();
        assert_eq!(small, ["0", "1", "1,1", "2", "2,1", "2,2"]);
        let zero: Vec<Partition> = enumerate_partitions_in_box(BoxFrame::new(0, 4)).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        let row: Vec<String> = enumerate_partitions_in_box(BoxFrame::new(1, 3))
            .map(|p| p.to_string())
            .collect();
        assert_eq!(row, ["0", "1", "2", "3"]);
        for m in 0..=7 {
            for k in 0..=7 {
                let all: Vec<Partition> =
                    enumerate_partitions_in_box(BoxFrame::new(m, k)).collect();
                assert_eq!(
                    all.len() as u64,
                    binomial((m + k) as u64, m as u64),
                    "{m}x{k}"
                );
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|p| BoxFrame::new(m, k).fits(p)));
            }
        }
    }

    #[test]
    fn skew_enumeration_small_cases() {
        let limits = Limits::default();
        assert_eq!(
            enumerate_skew_shapes(0, false, &limits).unwrap(),
            vec![SkewShape::empty()]
        );
        assert_eq!(enumerate_skew_shapes(1, false, &limits).unwrap().len(), 1);
        let two = enumerate_skew_shapes(2, false, &limits).unwrap();
        let cells: Vec<&[(usize, usize)]> = two.iter().map(|s| s.cells()).collect();
        assert_eq!(
            cells,
            vec![&[(0, 0), (0, 1)][..], &[(0, 0), (1, 0)], &[(0, 1), (1, 0)]]
        );
        assert_eq!(enumerate_skew_shapes(2, true, &limits).unwrap().len(), 2);
        assert!(matches!(
            enumerate_skew_shapes(11, false, &limits),
            Err(Error::ResourceBound { .. })
        ));
    }

    #[test]
    fn connected_counts_are_parallelogram_polyomino_numbers() {
        let limits = Limits::default();
        let counts: Vec<usize> = (1..=7)
            .map(|n| enumerate_skew_shapes(n, true, &limits).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 9, 20, 46, 105]);
    }

    #[test]
    fn enumeration_is_duplicate_free_and_skew() {
        let limits = Limits::default();
        for n in 0..=6 {
            let shapes = enumerate_skew_shapes(n, false, &limits).unwrap();
            assert!(shapes.windows(2).all(|w| w[0] < w[1]));
            for s in &shapes {
                assert_eq!(s.len(), n);
                assert!(crate::skew::is_skew(s.cells()));
                assert!(s.height() <= n && s.width() <= n);
            }
        }
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2).unwrap(), vec![1, 1, 2, 1, 1]);
        assert_eq!(gaussian_binomial(0, 0).unwrap(), vec![1]);
        assert_eq!(gaussian_binomial(5, 0).unwrap(), vec![1]);
        assert_eq!(gaussian_binomial(5, 5).unwrap(), vec![1]);
        assert_eq!(gaussian_binomial(3, 1).unwrap(), vec![1, 1, 1]);
        let total: u128 = gaussian_binomial(10, 4).unwrap().iter().sum();
        assert_eq!(total, 210);
    }

    #[test]
    fn tiny_sweeps_pass() {
        let limits = Limits::default();
        let sing = verify_sing_identities(BoxFrame::new(1, 1), &Reference);
        assert!(sing.passed());
        assert_eq!(sing.checked, 2);
        assert!(verify_connectivity(1, &Reference, &limits)
            .unwrap()
            .passed());
        let conn2 = verify_connectivity(2, &Reference, &limits).unwrap();
        assert!(conn2.passed());
        assert_eq!(conn2.checked, 1 + 1 + 3);
        assert!(verify_strongskew(4, &Reference, &limits).unwrap().passed());
        assert!(verify_betti_identities(BoxFrame::new(3, 3), &Reference).passed());
        assert!(verify_opposite(4, &Reference, &limits).unwrap().passed());
        assert!(verify_semi_isomorphism(4, &Reference, &limits)
            .unwrap()
            .passed());
    }

    #[test]
    fn collision_search_basics() {
        let limits = Limits::default();
        let pairs = conjecture_collision_search(3, &limits).unwrap();
        for (a, b) in &pairs {
            assert_eq!(a.len(), b.len());
            assert!(!poset::semi_isomorphic(a, b));
            assert_ne!(a, &b.rotate180());
        }
    }

    #[test]
    fn report_json_shape() {
        let r = Report {
            checked: 3,
            failures: vec!["x".into()],
            elapsed_ms: 7,
        };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"checked":3,"failures":["x"],"elapsedMs":7}"#
        );
    }
}
