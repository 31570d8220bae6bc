//! The cell poset `P(θ)` of a skew shape and the machinery around it:
//! opposite posets, connectivity, a backtracking isomorphism search,
//! canonical classes of connected shapes, semi-isomorphism and order-ideal
//! counting.
//!
//! Production semi-isomorphism goes through [`canonical_skew_class`]: two
//! connected skew posets are isomorphic exactly when the shapes agree up
//! to transposition, and `P(θ†) = P(θ)^op`, so a connected component's class
//! under semi-isomorphism is its orbit under transpose and 180° rotation.
//! The generic search ([`find_isomorphisms`], [`semi_isomorphic_by_search`])
//! never looks at shapes and is kept as the oracle for that shortcut.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::singular::Cell;
use crate::skew::SkewShape;

/// Size bounds for the exponential searches. Configuration, not semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest poset handed to [`find_isomorphisms`].
    pub iso_elements: usize,
    /// Largest poset handed to [`order_ideal_counts`].
    pub ideal_elements: usize,
    /// Largest cell count for skew-shape enumeration.
    pub skew_cells: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            iso_elements: 24,
            ideal_elements: 20,
            skew_cells: 10,
        }
    }
}

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::ResourceBound { what, size, limit });
    }
    Ok(())
}

/// A finite poset on labelled cells, stored as its Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPoset {
    cells: Vec<Cell>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl CellPoset {
    fn assemble(cells: Vec<Cell>, mut covers: Vec<(usize, usize)>) -> Self {
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); cells.len()];
        let mut down = vec![Vec::new(); cells.len()];
        for &(x, y) in &covers {
            up[x].push(y);
            down[y].push(x);
        }
        CellPoset {
            cells,
            covers,
            up,
            down,
        }
    }

    /// Builds a poset from an explicit cover relation, checking that it is
    /// acyclic and transitively reduced.
    pub fn from_covers(cells: Vec<Cell>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = cells.len();
        if covers.iter().any(|&(x, y)| x >= n || y >= n || x == y) {
            return Err(Error::NotSkew);
        }
        let p = CellPoset::assemble(cells, covers);
        let order = p.topological_order().ok_or(Error::NotSkew)?;
        // reachability in topological order; a cover x -> y is redundant when
        // y is reachable from another upper cover of x
        let mut reach = vec![vec![false; n]; n];
        for &x in order.iter().rev() {
            for &y in &p.up[x] {
                let below = reach[y].clone();
                let row = &mut reach[x];
                row[y] = true;
                for (r, b) in row.iter_mut().zip(below) {
                    *r |= b;
                }
            }
        }
        for &(x, y) in &p.covers {
            if p.up[x].iter().any(|&z| z != y && reach[z][y]) {
                return Err(Error::NotSkew);
            }
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Cover pairs `(x, y)` meaning `x ⋖ y`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// The same elements with every cover reversed.
    pub fn opposite(&self) -> CellPoset {
        let covers = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        CellPoset::assemble(self.cells.clone(), covers)
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = self.down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..self.len()).filter(|&x| indeg[x] == 0).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &self.up[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        (order.len() == self.len()).then_some(order)
    }

    /// Length of the longest chain from a minimal element to each element.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.len()];
        for x in self.topological_order().expect("covers are acyclic") {
            for &y in &self.up[x] {
                rank[y] = rank[y].max(rank[x] + 1);
            }
        }
        rank
    }

    /// Connected components of the Hasse diagram, as lists of element
    /// indices in increasing order.
    pub fn component_indices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in self.up[x].iter().chain(&self.down[x]) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components as induced sub-posets.
    pub fn components(&self) -> Vec<CellPoset> {
        self.component_indices()
            .into_iter()
            .map(|comp| {
                let mut index = HashMap::with_capacity(comp.len());
                for (i, &x) in comp.iter().enumerate() {
                    index.insert(x, i);
                }
                let cells = comp.iter().map(|&x| self.cells[x]).collect();
                let covers = self
                    .covers
                    .iter()
                    .filter_map(|(x, y)| Some((*index.get(x)?, *index.get(y)?)))
                    .collect();
                CellPoset::assemble(cells, covers)
            })
            .collect()
    }

    /// Connected iff the Hasse diagram has at most one component.
    pub fn is_connected(&self) -> bool {
        self.component_indices().len() <= 1
    }

    /// Graphviz rendering with elements labelled `r,c`.
    pub fn to_dot(&self) -> String {
        let label = |x: usize| format!("\"{},{}\"", self.cells[x].0, self.cells[x].1);
        let mut out = String::from("digraph P {\n  rankdir=BT;\n");
        for x in 0..self.len() {
            let _ = writeln!(out, "  {};", label(x));
        }
        for &(x, y) in &self.covers {
            let _ = writeln!(out, "  {} -> {};", label(x), label(y));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct PosetForm {
    elements: Vec<[usize; 2]>,
    covers: Vec<[usize; 2]>,
}

impl Serialize for CellPoset {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        PosetForm {
            elements: self.cells.iter().map(|&(r, c)| [r, c]).collect(),
            covers: self.covers.iter().map(|&(x, y)| [x, y]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CellPoset {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let form = PosetForm::deserialize(deserializer)?;
        let cells = form.elements.iter().map(|&[r, c]| (r, c)).collect();
        let covers = form.covers.iter().map(|&[x, y]| (x, y)).collect();
        CellPoset::from_covers(cells, covers).map_err(serde::de::Error::custom)
    }
}

/// `P(θ)`: `x ⋖ y` when `y` is the box immediately right of or below `x`.
/// Elements are indexed in the shape's sorted cell order.
pub fn build_poset(shape: &SkewShape) -> CellPoset {
    let cells = shape.cells().to_vec();
    let index = |cell: Cell| cells.binary_search(&cell).ok();
    let mut covers = Vec::new();
    for (x, &(r, c)) in cells.iter().enumerate() {
        if let Some(y) = index((r, c + 1)) {
            covers.push((x, y));
        }
        if let Some(y) = index((r + 1, c)) {
            covers.push((x, y));
        }
    }
    CellPoset::assemble(cells, covers)
}

/// Every order-isomorphism `P → Q`, as `map[p_index] = q_index`.
pub fn find_isomorphisms(p: &CellPoset, q: &CellPoset, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    guard("poset", p.len().max(q.len()), limits.iso_elements)?;
    Ok(IsoSearch::new(p, q)
        .map(|s| s.run(None))
        .unwrap_or_default())
}

/// Whether `P ≅ Q`; stops at the first isomorphism.
pub fn is_isomorphic(p: &CellPoset, q: &CellPoset, limits: &Limits) -> Result<bool> {
    guard("poset", p.len().max(q.len()), limits.iso_elements)?;
    Ok(IsoSearch::new(p, q).is_some_and(|s| !s.run(Some(1)).is_empty()))
}

/// `|Aut(P)|`.
pub fn automorphism_count(p: &CellPoset, limits: &Limits) -> Result<usize> {
    Ok(find_isomorphisms(p, p, limits)?.len())
}

type Key = (usize, usize, usize);

struct IsoSearch<'a> {
    p: &'a CellPoset,
    q: &'a CellPoset,
    order: Vec<usize>,
    candidates: HashMap<Key, Vec<usize>>,
    p_keys: Vec<Key>,
}

impl<'a> IsoSearch<'a> {
    /// `None` when a cheap invariant already rules out an isomorphism.
    fn new(p: &'a CellPoset, q: &'a CellPoset) -> Option<Self> {
        if p.len() != q.len() || p.covers.len() != q.covers.len() {
            return None;
        }
        let keys = |g: &CellPoset| -> Vec<Key> {
            let rank = g.ranks();
            (0..g.len())
                .map(|x| (rank[x], g.up[x].len(), g.down[x].len()))
                .collect()
        };
        let p_keys = keys(p);
        let q_keys = keys(q);
        let mut a = p_keys.clone();
        let mut b = q_keys.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        let mut candidates: HashMap<Key, Vec<usize>> = HashMap::new();
        for (y, &k) in q_keys.iter().enumerate() {
            candidates.entry(k).or_default().push(y);
        }
        // rank first, so lower covers are always placed before an element
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.sort_by_key(|&x| (p_keys[x], x));
        Some(IsoSearch {
            p,
            q,
            order,
            candidates,
            p_keys,
        })
    }

    fn run(&self, stop_after: Option<usize>) -> Vec<Vec<usize>> {
        let mut map = vec![usize::MAX; self.p.len()];
        let mut used = vec![false; self.q.len()];
        let mut found = Vec::new();
        self.extend(0, &mut map, &mut used, &mut found, stop_after);
        found
    }

    fn extend(
        &self,
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<usize>>,
        stop_after: Option<usize>,
    ) -> bool {
        if depth == self.order.len() {
            found.push(map.clone());
            return stop_after.is_some_and(|n| found.len() >= n);
        }
        let x = self.order[depth];
        for &y in &self.candidates[&self.p_keys[x]] {
            if used[y] {
                continue;
            }
            // equal lower-cover counts, so images landing inside Q's lower
            // covers of y already match them exactly
            let compatible = self.p.down[x]
                .iter()
                .all(|&a| self.q.down[y].contains(&map[a]));
            if !compatible {
                continue;
            }
            map[x] = y;
            used[y] = true;
            let stop = self.extend(depth + 1, map, used, found, stop_after);
            used[y] = false;
            map[x] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }
}

/// Lexicographically least cell set among `θ`, `θᵀ`, `θ†` and `(θ†)ᵀ`.
pub fn canonical_skew_class(shape: &SkewShape) -> Result<SkewShape> {
    let components = shape.connected_components().len();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    let rotated = shape.rotate180();
    let orbit = [shape.transpose(), rotated.transpose(), rotated];
    Ok(orbit.into_iter().fold(shape.clone(), |best, s| best.min(s)))
}

/// Canonical classes of the connected components, sorted.
pub fn component_classes(shape: &SkewShape) -> Vec<SkewShape> {
    let mut classes: Vec<SkewShape> = shape
        .connected_components()
        .iter()
        .map(|c| canonical_skew_class(c).expect("components are connected"))
        .collect();
    classes.sort_unstable();
    classes
}

/// `P(θ) ∼ P(θ')`: some bijection of connected components pairs each
/// component with an isomorphic or opposite one.
pub fn semi_isomorphic(a: &SkewShape, b: &SkewShape) -> bool {
    a.len() == b.len() && component_classes(a) == component_classes(b)
}

/// The definition of semi-isomorphism, run literally: component posets are
/// compared with [`is_isomorphic`] (directly and against the opposite) and
/// a perfect matching is sought on the resulting compatibility relation.
pub fn semi_isomorphic_by_search(a: &CellPoset, b: &CellPoset, limits: &Limits) -> Result<bool> {
    let left = a.components();
    let right = b.components();
    if left.len() != right.len() {
        return Ok(false);
    }
    let mut compatible = vec![vec![false; right.len()]; left.len()];
    for (i, x) in left.iter().enumerate() {
        let x_op = x.opposite();
        for (j, y) in right.iter().enumerate() {
            compatible[i][j] = is_isomorphic(x, y, limits)? || is_isomorphic(&x_op, y, limits)?;
        }
    }
    Ok(perfect_matching(&compatible).is_some())
}

/// Perfect matching of a square bipartite relation by augmenting paths,
/// trying right vertices in index order. Returns `match[left] = right`.
pub fn perfect_matching(compatible: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = compatible.len();
    let mut owner: Vec<Option<usize>> = vec![None; n];

    fn augment(
        i: usize,
        adj: &[Vec<bool>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for j in 0..adj[i].len() {
            if !adj[i][j] || seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|k| augment(k, adj, owner, seen)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }

    for i in 0..n {
        let mut seen = vec![false; n];
        if compatible[i].len() != n || !augment(i, compatible, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut out = vec![0; n];
    for (j, i) in owner.into_iter().enumerate() {
        out[i?] = j;
    }
    Some(out)
}

/// `counts[i]` is the number of down-closed subsets of size `i`.
///
/// Elements are swept along a linear extension. The state is the set of
/// included elements that still have an unvisited upper cover (the
/// frontier); everything else about the past is irrelevant to what may be
/// added later, so states are merged on that set.
pub fn order_ideal_counts(p: &CellPoset, limits: &Limits) -> Result<Vec<u128>> {
    guard("poset", p.len(), limits.ideal_elements.min(64))?;
    let order = p.topological_order().expect("covers are acyclic");
    let mut position = vec![0; p.len()];
    for (t, &x) in order.iter().enumerate() {
        position[x] = t;
    }
    // elements whose last upper cover is visited at step t
    let mut retire: Vec<Vec<usize>> = vec![Vec::new(); p.len()];
    for x in 0..p.len() {
        if let Some(last) = p.up[x].iter().map(|&y| position[y]).max() {
            retire[last].push(x);
        }
    }

    let mut states: HashMap<u64, Vec<u128>> = HashMap::from([(0, vec![1])]);
    for (t, &x) in order.iter().enumerate() {
        let bit = 1u64 << x;
        let tracked = !p.up[x].is_empty();
        let needed: u64 = p.down[x].iter().fold(0, |m, &a| m | (1 << a));
        let mut retired: u64 = retire[t].iter().fold(0, |m, &a| m | (1 << a));
        if !tracked {
            retired |= bit;
        }
        let mut next: HashMap<u64, Vec<u128>> = HashMap::with_capacity(states.len() * 2);
        for (mask, counts) in states {
            if mask & needed == needed {
                let mut shifted = Vec::with_capacity(counts.len() + 1);
                shifted.push(0);
                shifted.extend_from_slice(&counts);
                merge(&mut next, (mask | bit) & !retired, shifted)?;
            }
            merge(&mut next, mask & !retired, counts)?;
        }
        states = next;
    }
    debug_assert!(states.len() <= 1);
    let mut counts = states.remove(&0).unwrap_or_else(|| vec![1]);
    counts.resize(p.len() + 1, 0);
    Ok(counts)
}

fn merge(states: &mut HashMap<u64, Vec<u128>>, mask: u64, counts: Vec<u128>) -> Result<()> {
    match states.get_mut(&mask) {
        None => {
            states.insert(mask, counts);
        }
        Some(acc) => {
            if acc.len() < counts.len() {
                acc.resize(counts.len(), 0);
            }
            for (a, c) in acc.iter_mut().zip(counts) {
                *a = a.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(())
}

/// Computable invariants of a skew shape under semi-isomorphism, used to
/// look for pairs that no cheap invariant separates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantSignature {
    pub cell_count: usize,
    /// Component sizes, largest first.
    pub component_sizes: Vec<usize>,
    /// Ideal counts by size of the disjoint union of the components, each
    /// component taken in whichever of its two orientations has the
    /// lexicographically smaller ideal sequence.
    pub order_ideal_counts: Vec<u128>,
    /// Per component, the longest hook and longest reversed hook (arm to
    /// the left, leg upward) as a sorted pair; the list itself sorted.
    pub xi_profile: Vec<(usize, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn shape(cells: &[Cell]) -> SkewShape {
        SkewShape::from_cells(cells.iter().copied()).unwrap()
    }

    fn chain(n: usize) -> CellPoset {
        build_poset(&SkewShape::straight(&Partition::new(vec![n]).unwrap()))
    }

    const L: Limits = Limits {
        iso_elements: 24,
        ideal_elements: 20,
        skew_cells: 12,
    };

    #[test]
    fn build_examples() {
        let single = build_poset(&shape(&[(0, 0)]));
        assert_eq!(single.len(), 1);
        assert!(single.covers().is_empty());
        let hook = build_poset(&SkewShape::straight(&p("2,1")));
        let covers: Vec<(Cell, Cell)> = hook
            .covers()
            .iter()
            .map(|&(x, y)| (hook.cells()[x], hook.cells()[y]))
            .collect();
        assert_eq!(covers, vec![((0, 0), (0, 1)), ((0, 0), (1, 0))]);
        let domino = build_poset(&shape(&[(0, 1), (1, 0)]));
        assert_eq!(domino.len(), 2);
        assert!(domino.covers().is_empty());
    }

    #[test]
    fn opposite_examples() {
        let c3 = chain(3);
        assert_eq!(c3.opposite().opposite(), c3);
        assert!(is_isomorphic(&c3, &c3.opposite(), &L).unwrap());
        let hook = build_poset(&SkewShape::straight(&p("2,1"))).opposite();
        let minima = (0..3).filter(|&x| hook.lower_covers(x).is_empty()).count();
        let maxima = (0..3).filter(|&x| hook.upper_covers(x).is_empty()).count();
        assert_eq!((minima, maxima), (2, 1));
        let empty = build_poset(&SkewShape::empty());
        assert!(empty.opposite().is_empty());
    }

    #[test]
    fn connectivity_examples() {
        assert!(!build_poset(&shape(&[(0, 1), (1, 0)])).is_connected());
        assert!(build_poset(&SkewShape::straight(&p("2,2"))).is_connected());
        assert!(build_poset(&SkewShape::empty()).is_connected());
        assert_eq!(
            build_poset(&SkewShape::empty()).component_indices().len(),
            0
        );
    }

    #[test]
    fn isomorphism_examples() {
        assert_eq!(
            find_isomorphisms(&chain(2), &chain(2), &L).unwrap().len(),
            1
        );
        let hook = build_poset(&SkewShape::straight(&p("2,1")));
        let isos = find_isomorphisms(&hook, &hook, &L).unwrap();
        assert_eq!(isos.len(), 2);
        assert!(isos.contains(&vec![0, 1, 2]));
        assert!(isos.contains(&vec![0, 2, 1]));
        let antichain = build_poset(&shape(&[(0, 1), (1, 0)]));
        assert!(find_isomorphisms(&chain(2), &antichain, &L)
            .unwrap()
            .is_empty());
        assert_eq!(
            automorphism_count(&build_poset(&shape(&[(0, 0)])), &L).unwrap(),
            1
        );
        assert_eq!(
            automorphism_count(&build_poset(&SkewShape::straight(&p("3,1"))), &L).unwrap(),
            1
        );
    }

    #[test]
    fn isomorphism_size_guard() {
        let big = chain(25);
        assert_eq!(
            find_isomorphisms(&big, &big, &L),
            Err(Error::ResourceBound {
                what: "poset",
                size: 25,
                limit: 24
            })
        );
        let loose = Limits {
            iso_elements: 30,
            ..L
        };
        assert_eq!(automorphism_count(&big, &loose).unwrap(), 1);
    }

    #[test]
    fn from_covers_validates() {
        let cells = vec![(0, 0), (0, 1), (0, 2)];
        assert!(CellPoset::from_covers(cells.clone(), vec![(0, 1), (1, 2)]).is_ok());
        assert!(CellPoset::from_covers(cells.clone(), vec![(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(CellPoset::from_covers(cells.clone(), vec![(0, 1), (1, 0)]).is_err());
        assert!(CellPoset::from_covers(cells, vec![(0, 3)]).is_err());
    }

    #[test]
    fn canonical_class_examples() {
        let horizontal = shape(&[(0, 0), (0, 1)]);
        let vertical = shape(&[(0, 0), (1, 0)]);
        let a = canonical_skew_class(&horizontal).unwrap();
        assert_eq!(a, canonical_skew_class(&vertical).unwrap());
        assert_eq!(a, horizontal);
        let hook = SkewShape::straight(&p("2,1"));
        assert_eq!(canonical_skew_class(&hook).unwrap(), hook);
        assert_eq!(canonical_skew_class(&hook.rotate180()).unwrap(), hook);
        let square = SkewShape::straight(&p("2,2"));
        assert_eq!(canonical_skew_class(&square).unwrap(), square);
        assert!(matches!(
            canonical_skew_class(&shape(&[(0, 1), (1, 0)])),
            Err(Error::Disconnected { components: 2 })
        ));
    }

    #[test]
    fn semi_isomorphism_examples() {
        let t: SkewShape = "4,3,1 / 2".parse().unwrap();
        assert!(semi_isomorphic(&t, &t.rotate180()));
        let horizontal = shape(&[(0, 0), (0, 1)]);
        assert!(semi_isomorphic(&horizontal, &horizontal.transpose()));
        let two_boxes = shape(&[(0, 1), (1, 0)]);
        assert!(!semi_isomorphic(&two_boxes, &horizontal));
        for (x, y) in [(&t, &t.rotate180()), (&two_boxes, &horizontal)] {
            assert_eq!(
                semi_isomorphic(x, y),
                semi_isomorphic_by_search(&build_poset(x), &build_poset(y), &L).unwrap()
            );
        }
    }

    #[test]
    fn matching() {
        assert_eq!(perfect_matching(&[]), Some(vec![]));
        let adj = vec![vec![true, true], vec![true, false]];
        assert_eq!(perfect_matching(&adj), Some(vec![1, 0]));
        let adj = vec![vec![true, false], vec![true, false]];
        assert_eq!(perfect_matching(&adj), None);
    }

    #[test]
    fn order_ideal_examples() {
        let antichain = build_poset(&shape(&[(0, 1), (1, 0)]));
        assert_eq!(order_ideal_counts(&antichain, &L).unwrap(), vec![1, 2, 1]);
        assert_eq!(order_ideal_counts(&chain(2), &L).unwrap(), vec![1, 1, 1]);
        let hook = build_poset(&SkewShape::straight(&p("2,1")));
        assert_eq!(order_ideal_counts(&hook, &L).unwrap(), vec![1, 1, 2, 1]);
        assert_eq!(
            order_ideal_counts(&build_poset(&SkewShape::empty()), &L).unwrap(),
            vec![1]
        );
        assert!(matches!(
            order_ideal_counts(&chain(21), &L),
            Err(Error::ResourceBound { .. })
        ));
    }

    /// Brute force over all subsets.
    fn ideals_by_subsets(p: &CellPoset) -> Vec<u128> {
        let n = p.len();
        let mut counts = vec![0u128; n + 1];
        for mask in 0u32..(1 << n) {
            let closed = p
                .covers()
                .iter()
                .all(|&(x, y)| mask & (1 << y) == 0 || mask & (1 << x) != 0);
            if closed {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        counts
    }

    #[test]
    fn frontier_dp_matches_subset_enumeration() {
        for text in [
            "4,3,1 / 2",
            "3,3,3",
            "5,2,2,1 / 3,1",
            "4,4 / 2",
            "3,3,1 / 2,2",
            "6,1 / 2",
        ] {
            let poset = build_poset(&text.parse().unwrap());
            let expected = ideals_by_subsets(&poset);
            assert_eq!(order_ideal_counts(&poset, &L).unwrap(), expected, "{text}");
            let mut reversed = expected.clone();
            reversed.reverse();
            assert_eq!(
                order_ideal_counts(&poset.opposite(), &L).unwrap(),
                reversed,
                "{text}"
            );
        }
    }

    #[test]
    fn straight_shape_ideals_are_subdiagrams() {
        for text in ["4,4,3,3,1", "3,2,1", "5,5", "2,2,2,1"] {
            let lam = p(text);
            let poset = build_poset(&SkewShape::straight(&lam));
            assert_eq!(
                order_ideal_counts(&poset, &L).unwrap(),
                lam.subdiagram_counts().unwrap()
            );
        }
    }

    #[test]
    fn poset_json_and_dot() {
        let hook = build_poset(&SkewShape::straight(&p("2,1")));
        let json = serde_json::to_string(&hook).unwrap();
        assert_eq!(
            json,
            r#"{"elements":[[0,0],[0,1],[1,0]],"covers":[[0,1],[0,2]]}"#
        );
        let back: CellPoset = serde_json::from_str(&json).unwrap();
        assert_eq!(back, hook);
        let dot = hook.to_dot();
        assert!(dot.starts_with("digraph P {"));
        assert!(dot.contains("\"0,0\" -> \"0,1\";"));
        assert!(dot.contains("\"0,0\" -> \"1,0\";"));
    }
}
