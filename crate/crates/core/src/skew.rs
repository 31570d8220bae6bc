//! Skew diagrams `ν/λ`, identified up to translation.
//!
//! A [`SkewShape`] remembers only its boxes and their relative positions:
//! the cell set is translated so that its minimum row and minimum column are
//! both `0`, and stored sorted. `(λ, ν)` pairs are constructors only.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{parse_partition, Partition};
use crate::singular::Cell;

/// A translation-normalized skew diagram. Cells are sorted by `(row, col)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    cells: Vec<Cell>,
}

/// Translates `cells` so both minima are 0, then sorts and dedups.
fn normalize(cells: impl IntoIterator<Item = (i64, i64)>) -> Vec<Cell> {
    let raw: Vec<(i64, i64)> = cells.into_iter().collect();
    let Some(min_r) = raw.iter().map(|c| c.0).min() else {
        return Vec::new();
    };
    let min_c = raw.iter().map(|c| c.1).min().unwrap_or(0);
    let mut out: Vec<Cell> = raw
        .into_iter()
        .map(|(r, c)| ((r - min_r) as usize, (c - min_c) as usize))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn signed(cells: &[Cell]) -> impl Iterator<Item = (i64, i64)> + '_ {
    cells.iter().map(|&(r, c)| (r as i64, c as i64))
}

/// Half-open column interval `[left, right)` of each row, `None` for a row
/// with no cells.
fn row_intervals(cells: &[Cell]) -> Option<Vec<Option<(usize, usize)>>> {
    let height = cells.iter().map(|c| c.0 + 1).max().unwrap_or(0);
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); height];
    for &(r, c) in cells {
        rows[r].push(c);
    }
    let mut out = Vec::with_capacity(height);
    for mut cols in rows {
        if cols.is_empty() {
            out.push(None);
            continue;
        }
        cols.sort_unstable();
        cols.dedup();
        let (lo, hi) = (cols[0], cols[cols.len() - 1]);
        if hi - lo + 1 != cols.len() {
            return None;
        }
        out.push(Some((lo, hi + 1)));
    }
    Some(out)
}

/// Whether some pair `λ ⊆ ν` generates a translate of `cells`.
///
/// Rows and columns must be contiguous, and the left and right endpoints of
/// the nonempty rows must weakly decrease going down.
pub fn is_skew(cells: &[Cell]) -> bool {
    let norm = normalize(signed(cells));
    let Some(rows) = row_intervals(&norm) else {
        return false;
    };
    let transposed: Vec<Cell> = norm.iter().map(|&(r, c)| (c, r)).collect();
    if row_intervals(&transposed).is_none() {
        return false;
    }
    let nonempty: Vec<(usize, usize)> = rows.into_iter().flatten().collect();
    nonempty
        .windows(2)
        .all(|w| w[1].0 <= w[0].0 && w[1].1 <= w[0].1)
}

impl SkewShape {
    pub fn empty() -> Self {
        SkewShape { cells: Vec::new() }
    }

    /// Validates and normalizes an arbitrary cell set.
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let cells: Vec<Cell> = cells.into_iter().collect();
        if !is_skew(&cells) {
            return Err(Error::NotSkew);
        }
        Ok(SkewShape {
            cells: normalize(signed(&cells)),
        })
    }

    /// The cells of `ν/λ`.
    pub fn from_partitions(inner: &Partition, outer: &Partition) -> Result<Self> {
        if !outer.contains(inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        let cells = (0..outer.len())
            .flat_map(|r| (inner.part(r)..outer.part(r)).map(move |c| (r as i64, c as i64)));
        Ok(SkewShape {
            cells: normalize(cells),
        })
    }

    /// The straight shape of `λ`.
    pub fn straight(lambda: &Partition) -> Self {
        Self::from_partitions(&Partition::empty(), lambda).expect("∅ ⊆ λ")
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    pub fn height(&self) -> usize {
        self.cells.last().map_or(0, |c| c.0 + 1)
    }

    pub fn width(&self) -> usize {
        self.cells.iter().map(|c| c.1 + 1).max().unwrap_or(0)
    }

    /// Reflection in the main diagonal.
    pub fn transpose(&self) -> SkewShape {
        SkewShape {
            cells: normalize(signed(&self.cells).map(|(r, c)| (c, r))),
        }
    }

    /// Rotation by 180 degrees (`θ†`).
    pub fn rotate180(&self) -> SkewShape {
        SkewShape {
            cells: normalize(signed(&self.cells).map(|(r, c)| (-r, -c))),
        }
    }

    /// Connected components, split along NW-SE diagonals, ordered from the
    /// south-west to the north-east.
    ///
    /// A box `(r, c)` lies on diagonal `c - r`. Inside a skew shape two
    /// boxes are joined by a path of neighbours exactly when every diagonal
    /// between theirs is occupied, so the components are the maximal runs of
    /// occupied diagonals.
    pub fn connected_components(&self) -> Vec<SkewShape> {
        let mut by_diagonal: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for (r, c) in signed(&self.cells) {
            by_diagonal.entry(c - r).or_default().push((r, c));
        }
        let mut out = Vec::new();
        let mut current: Vec<(i64, i64)> = Vec::new();
        let mut last: Option<i64> = None;
        for (d, cells) in by_diagonal {
            if last.is_some_and(|l| d > l + 1) {
                out.push(SkewShape {
                    cells: normalize(current.drain(..)),
                });
            }
            current.extend(cells);
            last = Some(d);
        }
        if !current.is_empty() {
            out.push(SkewShape {
                cells: normalize(current),
            });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// A generating pair `(ν, λ)` for this shape, with the shape's top row
    /// as the first row of `ν`.
    pub fn to_partitions(&self) -> (Partition, Partition) {
        let rows = row_intervals(&self.cells).expect("stored shapes are skew");
        let mut outer = Vec::with_capacity(rows.len());
        let mut inner = Vec::with_capacity(rows.len());
        let mut above = 0;
        for row in rows {
            let (lo, hi) = row.unwrap_or((above, above));
            inner.push(lo);
            outer.push(hi);
            above = lo;
        }
        (
            Partition::new(outer).expect("right endpoints decrease"),
            Partition::new(inner).expect("left endpoints decrease"),
        )
    }

    /// Half-open `[left, right)` intervals per row. Empty rows repeat the
    /// left endpoint of the row above as a zero-width interval.
    pub fn rows(&self) -> Vec<[usize; 2]> {
        let (outer, inner) = self.to_partitions();
        (0..outer.len().max(inner.len()))
            .map(|r| [inner.part(r), outer.part(r)])
            .collect()
    }
}

/// `ν / λ` in the partition grammar.
impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (outer, inner) = self.to_partitions();
        write!(f, "{outer} / {inner}")
    }
}

/// Parses `ν / λ`, or a bare partition for a straight shape.
pub fn parse_skew(text: &str) -> Result<SkewShape> {
    match text.split_once('/') {
        Some((outer, inner)) => {
            let outer = parse_partition(outer)?;
            let inner = parse_partition(inner).map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse {
                    position,
                    message: format!("in inner partition: {message}"),
                },
                other => other,
            })?;
            SkewShape::from_partitions(&inner, &outer)
        }
        None => Ok(SkewShape::straight(&parse_partition(text)?)),
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_skew(s)
    }
}

#[derive(Serialize, Deserialize)]
struct RowsForm {
    rows: Vec<[usize; 2]>,
}

impl Serialize for SkewShape {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        RowsForm { rows: self.rows() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let form = RowsForm::deserialize(deserializer)?;
        let cells = form
            .rows
            .iter()
            .enumerate()
            .flat_map(|(r, &[lo, hi])| (lo..hi).map(move |c| (r, c)));
        SkewShape::from_cells(cells).map_err(serde::de::Error::custom)
    }
}
