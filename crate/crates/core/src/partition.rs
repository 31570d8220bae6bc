//! Partitions (Young diagrams) and their arithmetic.
//!
//! A [`Partition`] is stored canonically: weakly decreasing, strictly
//! positive parts, no trailing zeros. Every constructor strips zeros, so
//! two partitions are equal exactly when they draw the same diagram.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Young diagram whose `i`-th row (from the top) holds `parts[i]` boxes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// The unique run-length encoding `(a_1^b_1, ..., a_r^b_r)` of a partition
/// with `a_1 > ... > a_r > 0` and every `b_i > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RectangleDecomposition {
    blocks: Vec<Block>,
}

/// One rectangle of a [`RectangleDecomposition`]: `rows` rows of `cols` boxes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub cols: usize,
    pub rows: usize,
}

/// The ambient `m x k` rectangle of a Grassmannian `Gr(m, m + k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxFrame {
    pub rows: usize,
    pub cols: usize,
}

impl BoxFrame {
    pub fn new(rows: usize, cols: usize) -> Self {
        BoxFrame { rows, cols }
    }

    /// `n` of `Gr(m, n)`.
    pub fn n(&self) -> usize {
        self.rows + self.cols
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.len() <= self.rows && p.first() <= self.cols
    }
}

impl fmt::Display for BoxFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

impl FromStr for BoxFrame {
    type Err = Error;

    /// Parses `MxK`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: &str| Error::Parse {
            position: 1,
            message: format!("{message} in box `{s}` (expected MxK)"),
        };
        let (m, k) = s
            .trim()
            .split_once(['x', 'X'])
            .ok_or_else(|| bad("missing `x`"))?;
        let m = m.trim().parse().map_err(|_| bad("bad row count"))?;
        let k = k.trim().parse().map_err(|_| bad("bad column count"))?;
        Ok(BoxFrame::new(m, k))
    }
}

impl Partition {
    /// The empty diagram.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a weakly decreasing sequence. Trailing zeros
    /// are stripped; a zero followed by a positive part is an increase and
    /// is rejected like any other.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing { position: i + 2 });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Expands `(a_1^b_1, a_2^b_2, ...)`. Blocks with zero width or zero
    /// height may appear and are dropped; the widths must be weakly
    /// decreasing once those are removed.
    pub fn from_blocks<I>(blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut parts = Vec::new();
        for (cols, rows) in blocks {
            parts.extend(std::iter::repeat_n(cols, rows));
        }
        Partition::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part (`0` for the empty diagram).
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Row `i` (0-based), reading missing rows as `0`.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes, `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Conjugate partition: its `i`-th part counts the rows of length `≥ i`.
    pub fn transpose(&self) -> Partition {
        let mut out = Vec::with_capacity(self.first());
        for c in 1..=self.first() {
            out.push(self.parts.iter().take_while(|&&p| p >= c).count());
        }
        Partition::from_sorted_unchecked(out)
    }

    /// Whether `inner` is a subdiagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Partition::from_sorted_unchecked(parts)
    }

    /// Componentwise maximum.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (0..n).map(|i| self.part(i).max(other.part(i))).collect();
        Partition::from_sorted_unchecked(parts)
    }

    pub fn rect_decomposition(&self) -> RectangleDecomposition {
        let mut blocks: Vec<Block> = Vec::new();
        for &p in &self.parts {
            match blocks.last_mut() {
                Some(b) if b.cols == p => b.rows += 1,
                _ => blocks.push(Block { cols: p, rows: 1 }),
            }
        }
        RectangleDecomposition { blocks }
    }

    /// Number of rectangles `r`.
    pub fn rectangle_count(&self) -> usize {
        self.rect_decomposition().len()
    }

    /// Poincaré dual `(k - λ_m, ..., k - λ_1)` inside `frame`.
    pub fn dual_in_box(&self, frame: BoxFrame) -> Result<Partition> {
        if !frame.fits(self) {
            return Err(Error::DoesNotFit {
                partition: self.to_string(),
                rows: frame.rows,
                cols: frame.cols,
            });
        }
        let parts = (0..frame.rows)
            .rev()
            .map(|i| frame.cols - self.part(i))
            .collect();
        Partition::new(parts)
    }

    /// Size of the longest hook in the diagram, `λ_1 + ℓ(λ) - 1`.
    pub fn xi(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyPartition("xi"));
        }
        Ok(self.first() + self.len() - 1)
    }

    /// `counts[i]` is the number of subdiagrams `μ ⊆ λ` with `|μ| = i`.
    ///
    /// Rows are processed bottom-up; `table[b]` holds the size generating
    /// polynomial of the admissible tails whose first row is at most `b`.
    pub fn subdiagram_counts(&self) -> Result<Vec<u128>> {
        let width = self.first();
        let mut table: Vec<Vec<u128>> = vec![vec![1]; width + 1];
        for &row in self.parts.iter().rev() {
            let mut next: Vec<Vec<u128>> = Vec::with_capacity(width + 1);
            for bound in 0..=width {
                let poly = if bound == 0 {
                    table[0].clone()
                } else if bound > row {
                    next[row].clone()
                } else {
                    let mut poly = next[bound - 1].clone();
                    add_shifted(&mut poly, &table[bound], bound)?;
                    poly
                };
                next.push(poly);
            }
            table = next;
        }
        let mut counts = table.swap_remove(width);
        counts.resize(self.size() + 1, 0);
        Ok(counts)
    }
}

/// `acc += q^shift * poly`, with overflow detection.
fn add_shifted(acc: &mut Vec<u128>, poly: &[u128], shift: usize) -> Result<()> {
    if acc.len() < poly.len() + shift {
        acc.resize(poly.len() + shift, 0);
    }
    for (i, &c) in poly.iter().enumerate() {
        let slot = &mut acc[i + shift];
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
    }
    Ok(())
}

impl RectangleDecomposition {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// `r`, the number of rectangles.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.cols, b.rows))
            .collect();
        Partition::from_sorted_unchecked(parts)
    }
}

impl fmt::Display for RectangleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}^{}", b.cols, b.rows)?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Comma-separated parts; the empty diagram prints as `0`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses `part ("," part)*` with `part := int | int "^" int`. Whitespace
/// is ignored; blank input and `∅` denote the empty diagram.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "∅" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    let mut prev: Option<usize> = None;
    for (idx, token) in compact.split(',').enumerate() {
        let position = idx + 1;
        let int = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                position,
                message: format!("malformed part `{token}`"),
            })
        };
        let (value, reps) = match token.split_once('^') {
            Some((v, r)) => (int(v)?, int(r)?),
            None => (int(token)?, 1),
        };
        if reps == 0 {
            continue;
        }
        if prev.is_some_and(|p| p < value) {
            return Err(Error::Parse {
                position,
                message: format!(
                    "part {value} exceeds the preceding part; partitions are weakly decreasing"
                ),
            });
        }
        prev = Some(value);
        parts.extend(std::iter::repeat_n(value, reps));
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_plain_and_repeated() {
        assert_eq!(p("4,4,3,3,1").parts(), &[4, 4, 3, 3, 1]);
        assert_eq!(p("4^2,3^2,1"), p("4,4,3,3,1"));
        assert_eq!(p(" 4 ^ 2 , 3^2, 1 "), p("4,4,3,3,1"));
        assert_eq!(p("3,1,0,0"), p("3,1"));
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("0"), Partition::empty());
    }

    #[test]
    fn parse_rejects_increase_and_junk() {
        match parse_partition("3,4") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_partition("3,x"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_partition("3^"),
            Err(Error::Parse { position: 1, .. })
        ));
        assert!(matches!(
            parse_partition("2,0,1"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(parse_partition("-1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn display_round_trips() {
        for s in ["4,4,3,3,1", "1", "0", "7,2^3"] {
            let q = p(s);
            assert_eq!(p(&q.to_string()), q);
        }
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("4,4,3,3,1").transpose(), p("5,4,4,2"));
        assert_eq!(p("3,1").transpose(), p("2,1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn containment_examples() {
        let lam = p("4,4,3,3,1");
        assert!(lam.contains(&p("3,2")));
        assert!(!p("2,2").contains(&p("3")));
        assert!(lam.contains(&lam));
        assert!(lam.contains(&Partition::empty()));
        assert!(!p("1").contains(&p("1,1")));
    }

    #[test]
    fn meet_and_join_examples() {
        assert_eq!(p("4,2,2,2,1").intersect(&p("4,4,3")), p("4,2,2"));
        assert_eq!(p("3,1").union(&p("2,2")), p("3,2"));
        let lam = p("5,3,3");
        assert_eq!(lam.intersect(&Partition::empty()), Partition::empty());
        assert_eq!(lam.union(&Partition::empty()), lam);
    }

    #[test]
    fn rectangles() {
        let d = p("4,4,3,3,1").rect_decomposition();
        let blocks: Vec<_> = d.blocks().iter().map(|b| (b.cols, b.rows)).collect();
        assert_eq!(blocks, vec![(4, 2), (3, 2), (1, 1)]);
        assert_eq!(d.to_partition(), p("4,4,3,3,1"));
        assert_eq!(p("5,5,5").rectangle_count(), 1);
        assert_eq!(Partition::empty().rectangle_count(), 0);
        assert_eq!(d.to_string(), "(4^2,3^2,1^1)");
    }

    #[test]
    fn from_blocks_drops_degenerate_blocks() {
        assert_eq!(
            Partition::from_blocks([(2, 0), (0, 2)]).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            Partition::from_blocks([(4, 1), (2, 3), (1, 1)]).unwrap(),
            p("4,2,2,2,1")
        );
        assert!(Partition::from_blocks([(1, 1), (2, 1)]).is_err());
    }

    #[test]
    fn box_duality() {
        let frame = BoxFrame::new(2, 3);
        assert_eq!(p("2,1").dual_in_box(frame).unwrap(), p("2,1"));
        assert_eq!(Partition::empty().dual_in_box(frame).unwrap(), p("3,3"));
        assert_eq!(p("3,3").dual_in_box(frame).unwrap(), Partition::empty());
        assert!(matches!(
            p("4").dual_in_box(frame),
            Err(Error::DoesNotFit { .. })
        ));
        assert!(matches!(
            p("1,1,1").dual_in_box(frame),
            Err(Error::DoesNotFit { .. })
        ));
        assert_eq!("6x4".parse::<BoxFrame>().unwrap(), BoxFrame::new(6, 4));
        assert!("6by4".parse::<BoxFrame>().is_err());
    }

    #[test]
    fn xi_examples() {
        assert_eq!(p("4,4,3,3,1").xi().unwrap(), 8);
        assert_eq!(p("1").xi().unwrap(), 1);
        assert_eq!(p("5,5,5").xi().unwrap(), 7);
        assert_eq!(Partition::empty().xi(), Err(Error::EmptyPartition("xi")));
    }

    #[test]
    fn xi_matches_block_formula() {
        // a_1 + b_1 + ... + b_r - 1
        let lam = p("4,4,3,3,1");
        let d = lam.rect_decomposition();
        let formula = d.blocks()[0].cols + d.blocks().iter().map(|b| b.rows).sum::<usize>() - 1;
        assert_eq!(lam.xi().unwrap(), formula);
    }

    #[test]
    fn subdiagram_count_examples() {
        // (2,1) has 5 subdiagrams: ∅, (1), (2), (1,1), (2,1).
        assert_eq!(p("2,1").subdiagram_counts().unwrap(), vec![1, 1, 2, 1]);
        // coefficients of [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
        assert_eq!(p("2,2").subdiagram_counts().unwrap(), vec![1, 1, 2, 1, 1]);
        assert_eq!(Partition::empty().subdiagram_counts().unwrap(), vec![1]);
        assert_eq!(p("2,1,1").subdiagram_counts().unwrap(), vec![1, 1, 2, 2, 1]);
    }

    #[test]
    fn subdiagram_counts_overflow_is_reported() {
        // The middle coefficient of [160 choose 80]_q is about 1e44 > 2^128.
        let big = Partition::from_blocks([(80, 80)]).unwrap();
        assert_eq!(big.subdiagram_counts(), Err(Error::Overflow));
    }

    #[test]
    fn json_form_is_an_integer_array() {
        let lam = p("3,1");
        let json = serde_json::to_string(&lam).unwrap();
        assert_eq!(json, "[3,1]");
        let back: Partition = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(back, lam);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
