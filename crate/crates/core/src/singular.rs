//! Combinatorics of the singular locus of a Grassmannian Schubert variety.
//!
//! For `λ = (a_1^b_1, ..., a_r^b_r)` the singular locus has `r - 1`
//! irreducible components, indexed by the partitions
//!
//! ```text
//! λ^i = (a_1^b_1, ..., a_i^(b_i - 1), (a_{i+1} - 1)^(b_{i+1} + 1), a_{i+2}^b_{i+2}, ..., a_r^b_r)
//! ```
//!
//! Each `λ^i` is `λ` with one boundary hook removed: the hook whose corner
//! sits diagonally inside the `i`-th inner corner of `λ`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `(row, col)`, 0-based, rows increasing downward.
pub type Cell = (usize, usize);

/// `[λ^1, ..., λ^{r-1}]`; empty when `λ` is a single rectangle.
pub fn sing_components(lambda: &Partition) -> Result<Vec<Partition>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition("sing_components"));
    }
    let blocks: Vec<(usize, usize)> = lambda
        .rect_decomposition()
        .blocks()
        .iter()
        .map(|b| (b.cols, b.rows))
        .collect();
    let r = blocks.len();
    let mut out = Vec::with_capacity(r.saturating_sub(1));
    for i in 0..r.saturating_sub(1) {
        let (ai, bi) = blocks[i];
        let (an, bn) = blocks[i + 1];
        let modified = blocks[..i]
            .iter()
            .copied()
            .chain([(ai, bi - 1), (an - 1, bn + 1)])
            .chain(blocks[i + 2..].iter().copied());
        out.push(Partition::from_blocks(modified)?);
    }
    Ok(out)
}

/// `λ^0`, the partition of the intersection of all singular components:
/// `(a_1^(b_1-1), (a_2-1)^b_2, ..., (a_{r-1}-1)^b_{r-1}, (a_r-1)^(b_r+1))`.
pub fn lambda_zero(lambda: &Partition) -> Result<Partition> {
    let decomposition = lambda.rect_decomposition();
    let blocks = decomposition.blocks();
    let r = blocks.len();
    if r < 2 {
        return Err(Error::Smooth(lambda.to_string()));
    }
    let mut spec = Vec::with_capacity(r);
    spec.push((blocks[0].cols, blocks[0].rows - 1));
    for b in &blocks[1..r - 1] {
        spec.push((b.cols - 1, b.rows));
    }
    spec.push((blocks[r - 1].cols - 1, blocks[r - 1].rows + 1));
    Partition::from_blocks(spec)
}

pub fn is_smooth(lambda: &Partition) -> bool {
    lambda.rectangle_count() <= 1
}

fn cells(lambda: &Partition) -> BTreeSet<Cell> {
    lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(row, &len)| (0..len).map(move |col| (row, col)))
        .collect()
}

fn check_index(lambda: &Partition, i: usize) -> Result<usize> {
    let max = lambda.rectangle_count().saturating_sub(1);
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    Ok(i)
}

/// Cells of `λ \ λ^i` (1-based `i`).
pub fn removed_hook(lambda: &Partition, i: usize) -> Result<BTreeSet<Cell>> {
    check_index(lambda, i)?;
    let component = &sing_components(lambda)?[i - 1];
    let kept = cells(component);
    Ok(cells(lambda).difference(&kept).copied().collect())
}

/// Whether the components `X_{λ^i}` and `X_{λ^j}` meet properly, i.e.
/// whether their removed hooks are disjoint.
pub fn components_intersect_properly(lambda: &Partition, i: usize, j: usize) -> Result<bool> {
    check_index(lambda, i)?;
    check_index(lambda, j)?;
    if i == j {
        return Err(Error::SameIndex(i));
    }
    let a = removed_hook(lambda, i)?;
    let b = removed_hook(lambda, j)?;
    Ok(a.is_disjoint(&b))
}
