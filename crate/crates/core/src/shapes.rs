//! Partitions, bipartitions and their boxes; skew diagrams whose cell
//! contents live in Q(t); standard tableaux on skew diagrams.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::ParamScalar;
use crate::error::{Error, Result};

/// A partition, stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The hook `(k, 1^m)`.
    pub fn hook(k: u32, m: u32) -> Self {
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, m as usize));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_rectangular(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&p| p == self.0[0])
    }

    /// 1-based membership test.
    pub fn contains(&self, row: u32, col: u32) -> bool {
        row >= 1 && col >= 1 && self.0.get(row as usize - 1).is_some_and(|&p| col <= p)
    }

    /// Boxes whose removal leaves a partition, by decreasing content.
    pub fn removable_boxes(&self, beta: u8) -> Vec<BBox> {
        let mut out = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            let next = self.0.get(i + 1).copied().unwrap_or(0);
            if p > next {
                out.push(BBox::new(beta, i as u32 + 1, p));
            }
        }
        // rows go down, contents go down
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An ordered pair of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub p0: Partition,
    pub p1: Partition,
}

impl Bipartition {
    pub fn new(p0: Partition, p1: Partition) -> Self {
        Bipartition { p0, p1 }
    }

    /// `(p, ∅)`.
    pub fn first(p: Partition) -> Self {
        Bipartition::new(p, Partition::empty())
    }

    pub fn size(&self) -> usize {
        self.p0.size() + self.p1.size()
    }

    pub fn component(&self, beta: u8) -> &Partition {
        if beta.is_multiple_of(2) {
            &self.p0
        } else {
            &self.p1
        }
    }

    /// All boxes, those of `p0` first, each component in row-major order.
    /// This order is the box indexing used by fillings.
    pub fn boxes(&self) -> Vec<BBox> {
        let mut out = Vec::with_capacity(self.size());
        for beta in 0..2u8 {
            for (i, &p) in self.component(beta).parts().iter().enumerate() {
                for j in 1..=p {
                    out.push(BBox::new(beta, i as u32 + 1, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Partition| if p.is_empty() { "∅".to_string() } else { p.to_string() };
        write!(f, "({}, {})", show(&self.p0), show(&self.p1))
    }
}

/// A box of a bipartition: component index `beta` and 1-based row/column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BBox {
    pub beta: u8,
    pub row: u32,
    pub col: u32,
}

impl BBox {
    pub fn new(beta: u8, row: u32, col: u32) -> Self {
        BBox { beta, row, col }
    }

    /// Column minus row.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// Same component and weakly above and to the left of `other`.
    pub fn leq(&self, other: &BBox) -> bool {
        self.beta == other.beta && self.row <= other.row && self.col <= other.col
    }
}

impl fmt::Display for BBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ{}({},{})", self.beta, self.row, self.col)
    }
}

/// Column minus row of a skew-diagram cell.
pub fn cell_content(cell: (i64, i64)) -> i64 {
    cell.1 - cell.0
}

/// One connected component of a skew diagram. The cell at `(row, col)` has
/// content `base_content + (col - row)`; only relative positions matter, and
/// a diagonal slide `(row, col) -> (row + k, col + k)` changes nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewComponent {
    pub base_content: ParamScalar,
    pub cells: Vec<(i64, i64)>,
}

impl SkewComponent {
    pub fn new(base_content: ParamScalar, mut cells: Vec<(i64, i64)>) -> Result<Self> {
        cells.sort_unstable();
        cells.dedup();
        let comp = SkewComponent { base_content, cells };
        comp.validate()?;
        Ok(comp)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn content(&self, cell: (i64, i64)) -> ParamScalar {
        &self.base_content + &ParamScalar::from_int(cell_content(cell))
    }

    pub fn contents(&self) -> Vec<ParamScalar> {
        self.cells.iter().map(|&c| self.content(c)).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.cells.is_empty() {
            return Err(Error::InvalidShape("empty skew component".into()));
        }
        if !is_skew(&self.cells) {
            return Err(Error::InvalidShape(format!("{:?} is not skew", self.cells)));
        }
        if !is_connected(&self.cells) {
            return Err(Error::InvalidShape(format!("{:?} is not connected", self.cells)));
        }
        Ok(())
    }

    /// Diagonal slide by `k`.
    pub fn slide(&self, k: i64) -> Self {
        SkewComponent {
            base_content: self.base_content.clone(),
            cells: self.cells.iter().map(|&(r, c)| (r + k, c + k)).collect(),
        }
    }

    /// Translates by an arbitrary integer vector, compensating the base
    /// content so every cell keeps its content.
    pub fn translate(&self, dr: i64, dc: i64) -> Self {
        SkewComponent {
            base_content: &self.base_content - &ParamScalar::from_int(dc - dr),
            cells: self.cells.iter().map(|&(r, c)| (r + dr, c + dc)).collect(),
        }
    }

    /// Anchors the component at minimal row 0 and minimal `col - row` 0,
    /// so `base_content` becomes the smallest cell content.
    pub fn normalized(&self) -> Self {
        let min_off = self.cells.iter().map(|&c| cell_content(c)).min().unwrap_or(0);
        let min_row = self.cells.iter().map(|c| c.0).min().unwrap_or(0);
        let mut out = self.translate(-min_row, -min_row - min_off);
        out.cells.sort_unstable();
        out
    }

    pub fn has_two_cells_in_a_row(&self) -> bool {
        let mut seen = HashSet::new();
        self.cells.iter().any(|&(r, _)| !seen.insert(r))
    }

    fn sort_key(&self) -> (ParamScalar, usize, &[(i64, i64)], &ParamScalar) {
        (self.base_content.coset_rep(), self.cells.len(), &self.cells, &self.base_content)
    }
}

/// Rectangle closure: whenever `(a, b)` and `(a + s, b + t)` are cells with
/// `s, t >= 0`, every cell between them is present.
pub fn is_skew(cells: &[(i64, i64)]) -> bool {
    let set: HashSet<_> = cells.iter().copied().collect();
    for &(a, b) in cells {
        for &(a2, b2) in cells {
            if a2 >= a && b2 >= b {
                for i in a..=a2 {
                    for j in b..=b2 {
                        if !set.contains(&(i, j)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Connectivity under row/column adjacency.
pub fn is_connected(cells: &[(i64, i64)]) -> bool {
    let Some(&start) = cells.first() else {
        return true;
    };
    let set: HashSet<_> = cells.iter().copied().collect();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((r, c)) = queue.pop_front() {
        for nb in [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)] {
            if set.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == set.len()
}

/// A pair of skew diagrams `(D0, D1)`, each a list of connected components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SkewPair {
    pub d0: Vec<SkewComponent>,
    pub d1: Vec<SkewComponent>,
}

impl SkewPair {
    pub fn new(d0: Vec<SkewComponent>, d1: Vec<SkewComponent>) -> Self {
        SkewPair { d0, d1 }
    }

    pub fn list(&self, which: u8) -> &[SkewComponent] {
        if which == 0 {
            &self.d0
        } else {
            &self.d1
        }
    }

    fn list_mut(&mut self, which: u8) -> &mut Vec<SkewComponent> {
        if which == 0 {
            &mut self.d0
        } else {
            &mut self.d1
        }
    }

    pub fn size(&self) -> usize {
        self.d0.iter().chain(&self.d1).map(SkewComponent::len).sum()
    }
}

/// True iff no component of the selected diagram has two cells in one row.
pub fn is_vertical_strip(d: &SkewPair, which: u8) -> bool {
    d.list(which).iter().all(|comp| !comp.has_two_cells_in_a_row())
}

/// A standard filling of a [`SkewPair`]: `labels[w][i][j]` is the entry
/// (1-based) of cell `j` of component `i` in diagram `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewTableau {
    pub labels: [Vec<Vec<usize>>; 2],
}

impl SkewTableau {
    /// For each entry `1..=n` (index `entry - 1`), the diagram index and
    /// content of the cell holding it.
    pub fn content_sequence(&self, shape: &SkewPair) -> Vec<(u8, ParamScalar)> {
        let n = shape.size();
        let mut out = vec![(0u8, ParamScalar::zero()); n];
        for which in 0..2u8 {
            for (comp, labels) in shape.list(which).iter().zip(&self.labels[which as usize]) {
                for (&cell, &label) in comp.cells.iter().zip(labels) {
                    out[label - 1] = (which, comp.content(cell));
                }
            }
        }
        out
    }

    /// Entries form a bijection onto `1..=n` and increase along rows and
    /// down columns of every component.
    pub fn is_standard(&self, shape: &SkewPair) -> bool {
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for which in 0..2u8 {
            let comps = shape.list(which);
            let labels = &self.labels[which as usize];
            if comps.len() != labels.len() {
                return false;
            }
            for (comp, labels) in comps.iter().zip(labels) {
                if comp.cells.len() != labels.len() {
                    return false;
                }
                let at: BTreeMap<_, _> = comp.cells.iter().copied().zip(labels.iter().copied()).collect();
                for (&(r, c), &l) in &at {
                    if l == 0 || l > n || std::mem::replace(&mut seen[l], true) {
                        return false;
                    }
                    for nb in [(r, c + 1), (r + 1, c)] {
                        if at.get(&nb).is_some_and(|&l2| l2 <= l) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn component_order(a: &SkewComponent, b: &SkewComponent) -> std::cmp::Ordering {
    a.sort_key().cmp(&b.sort_key())
}

/// Normalizes every component and sorts each component list; the result is
/// the same for any two diagrams that differ by diagonal slides.
pub fn canonical_form(d: &SkewPair) -> SkewPair {
    let mut out = SkewPair::default();
    for which in 0..2u8 {
        let mut comps: Vec<_> = d.list(which).iter().map(SkewComponent::normalized).collect();
        comps.sort_by(component_order);
        *out.list_mut(which) = comps;
    }
    out
}

/// [`canonical_form`] that carries a tableau along. Components that are
/// identical after normalization are ordered by their labels.
pub fn canonical_form_with_tableau(d: &SkewPair, t: &SkewTableau) -> (SkewPair, SkewTableau) {
    let mut shape = SkewPair::default();
    let mut tab = SkewTableau { labels: [Vec::new(), Vec::new()] };
    for which in 0..2u8 {
        let mut items: Vec<(SkewComponent, Vec<usize>)> = d
            .list(which)
            .iter()
            .zip(&t.labels[which as usize])
            .map(|(comp, labels)| {
                let norm = comp.normalized();
                let min_row = comp.cells.iter().map(|c| c.0).min().unwrap_or(0);
                let min_off = comp.cells.iter().map(|&c| cell_content(c)).min().unwrap_or(0);
                let mut pairs: Vec<((i64, i64), usize)> = comp
                    .cells
                    .iter()
                    .map(|&(r, c)| (r - min_row, c - min_row - min_off))
                    .zip(labels.iter().copied())
                    .collect();
                pairs.sort_unstable();
                debug_assert!(pairs.iter().map(|p| p.0).eq(norm.cells.iter().copied()));
                (norm, pairs.into_iter().map(|p| p.1).collect())
            })
            .collect();
        items.sort_by(|a, b| component_order(&a.0, &b.0).then_with(|| a.1.cmp(&b.1)));
        let (comps, labels) = items.into_iter().unzip();
        *shape.list_mut(which) = comps;
        tab.labels[which as usize] = labels;
    }
    (shape, tab)
}

/// Cap on the content multiset size accepted by [`enumerate_skew_shapes`].
pub const MAX_SHAPE_ENUMERATION: usize = 8;
/// Cap on the diagram size accepted by [`enumerate_standard_tableaux`].
pub const MAX_TABLEAU_ENUMERATION: usize = 10;

/// Every connected skew shape with `size` cells, up to translation, anchored
/// at minimal row 0 and minimal column 0.
pub fn connected_skew_shapes(size: usize) -> Vec<Vec<(i64, i64)>> {
    if size == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<Vec<(i64, i64)>> = BTreeSet::from([vec![(0, 0)]]);
    for _ in 1..size {
        let mut next = BTreeSet::new();
        for shape in &level {
            let set: HashSet<_> = shape.iter().copied().collect();
            for &(r, c) in shape {
                for nb in [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)] {
                    if set.contains(&nb) {
                        continue;
                    }
                    let mut grown = shape.clone();
                    grown.push(nb);
                    if is_skew(&grown) {
                        next.insert(anchor(grown));
                    }
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

fn anchor(mut cells: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    let r0 = cells.iter().map(|c| c.0).min().unwrap_or(0);
    let c0 = cells.iter().map(|c| c.1).min().unwrap_or(0);
    for c in &mut cells {
        c.0 -= r0;
        c.1 -= c0;
    }
    cells.sort_unstable();
    cells
}

/// All ways to arrange cells with exactly the given content multiset into
/// connected skew components, up to slides. Contents whose difference is not
/// an integer can never share a component. Each returned arrangement is a
/// canonically sorted component list; the list of arrangements is sorted.
pub fn enumerate_skew_shapes(contents: &[ParamScalar]) -> Result<Vec<Vec<SkewComponent>>> {
    if contents.len() > MAX_SHAPE_ENUMERATION {
        return Err(Error::TooLarge {
            what: "content multiset",
            size: contents.len(),
            limit: MAX_SHAPE_ENUMERATION,
        });
    }
    let mut cosets: BTreeMap<ParamScalar, BTreeMap<i64, usize>> = BTreeMap::new();
    for x in contents {
        let rep = x.coset_rep();
        let off = x.integer_difference(&rep).expect("coset representative");
        let off = i64::try_from(off).map_err(|_| Error::InvalidShape("content too large".into()))?;
        *cosets.entry(rep).or_default().entry(off).or_default() += 1;
    }
    let catalog: Vec<Vec<Vec<(i64, i64)>>> =
        (0..=contents.len()).map(connected_skew_shapes).collect();

    let mut arrangements: Vec<Vec<SkewComponent>> = vec![Vec::new()];
    for (rep, offsets) in &cosets {
        let mut found = BTreeMap::new();
        partition_offsets(rep, offsets.clone(), &catalog, &mut Vec::new(), &mut found);
        let mut next = Vec::new();
        for prefix in &arrangements {
            for tail in found.values() {
                let mut all = prefix.clone();
                all.extend(tail.iter().cloned());
                next.push(all);
            }
        }
        arrangements = next;
    }
    let mut out: Vec<Vec<SkewComponent>> = arrangements
        .into_iter()
        .map(|mut comps| {
            comps.sort_by(component_order);
            comps
        })
        .collect();
    out.sort_by(|a, b| {
        let ka: Vec<_> = a.iter().map(SkewComponent::sort_key).collect();
        let kb: Vec<_> = b.iter().map(SkewComponent::sort_key).collect();
        ka.cmp(&kb)
    });
    out.dedup();
    Ok(out)
}

type ComponentKey = Vec<(i64, Vec<(i64, i64)>)>;

fn partition_offsets(
    rep: &ParamScalar,
    remaining: BTreeMap<i64, usize>,
    catalog: &[Vec<Vec<(i64, i64)>>],
    chosen: &mut ComponentKey,
    found: &mut BTreeMap<ComponentKey, Vec<SkewComponent>>,
) {
    let Some((&m, _)) = remaining.iter().next() else {
        let mut key = chosen.clone();
        key.sort();
        let comps = key
            .iter()
            .map(|(base, cells)| {
                SkewComponent {
                    base_content: rep + &ParamScalar::from_int(*base),
                    cells: cells.clone(),
                }
                .normalized()
            })
            .collect();
        found.insert(key, comps);
        return;
    };
    let total: usize = remaining.values().sum();
    for shapes in catalog.iter().take(total + 1).skip(1) {
        for shape in shapes {
            // the component holding the smallest remaining content
            let cmin = shape.iter().map(|&c| cell_content(c)).min().unwrap_or(0);
            let shift = m - cmin;
            let mut rest = remaining.clone();
            let fits = shape.iter().all(|&c| {
                let off = cell_content(c) + shift;
                match rest.get_mut(&off) {
                    Some(k) => {
                        *k -= 1;
                        if *k == 0 {
                            rest.remove(&off);
                        }
                        true
                    }
                    None => false,
                }
            });
            if fits {
                chosen.push((shift, shape.clone()));
                partition_offsets(rep, rest, catalog, chosen, found);
                chosen.pop();
            }
        }
    }
}

/// Every standard Young tableau on `d`.
pub fn enumerate_standard_tableaux(d: &SkewPair) -> Result<Vec<SkewTableau>> {
    let n = d.size();
    if n > MAX_TABLEAU_ENUMERATION {
        return Err(Error::TooLarge {
            what: "skew diagram",
            size: n,
            limit: MAX_TABLEAU_ENUMERATION,
        });
    }
    // flat cell list with the indices of the cells that must be filled first
    let mut slots = Vec::with_capacity(n);
    let mut preds: Vec<Vec<usize>> = Vec::with_capacity(n);
    for which in 0..2u8 {
        for (ci, comp) in d.list(which).iter().enumerate() {
            let base = slots.len();
            let index: BTreeMap<_, _> = comp.cells.iter().enumerate().map(|(j, &c)| (c, base + j)).collect();
            for (j, &(r, c)) in comp.cells.iter().enumerate() {
                slots.push((which, ci, j));
                preds.push(
                    [(r, c - 1), (r - 1, c)]
                        .iter()
                        .filter_map(|nb| index.get(nb).copied())
                        .collect(),
                );
            }
        }
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fill(1, n, &preds, &mut labels, &mut |labels| {
        let mut tab = SkewTableau {
            labels: [
                d.d0.iter().map(|c| vec![0; c.len()]).collect(),
                d.d1.iter().map(|c| vec![0; c.len()]).collect(),
            ],
        };
        for (slot, &(which, ci, j)) in slots.iter().enumerate() {
            tab.labels[which as usize][ci][j] = labels[slot];
        }
        out.push(tab);
    });
    Ok(out)
}

fn fill(
    next: usize,
    n: usize,
    preds: &[Vec<usize>],
    labels: &mut [usize],
    emit: &mut impl FnMut(&[usize]),
) {
    if next > n {
        emit(labels);
        return;
    }
    for s in 0..n {
        if labels[s] == 0 && preds[s].iter().all(|&p| labels[p] != 0) {
            labels[s] = next;
            fill(next + 1, n, preds, labels, emit);
            labels[s] = 0;
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    which: u8,
    base_content: ParamScalar,
    cells: Vec<[i64; 2]>,
}

impl Serialize for SkewPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let items: Vec<ComponentJson> = (0..2u8)
            .flat_map(|which| {
                self.list(which).iter().map(move |comp| ComponentJson {
                    which,
                    base_content: comp.base_content.clone(),
                    cells: comp.cells.iter().map(|&(r, c)| [r, c]).collect(),
                })
            })
            .collect();
        items.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<ComponentJson>::deserialize(d)?;
        let mut pair = SkewPair::default();
        for item in items {
            if item.which > 1 {
                return Err(serde::de::Error::custom("`which` must be 0 or 1"));
            }
            let comp = SkewComponent::new(
                item.base_content,
                item.cells.into_iter().map(|[r, c]| (r, c)).collect(),
            )
            .map_err(serde::de::Error::custom)?;
            pair.list_mut(item.which).push(comp);
        }
        Ok(pair)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(base: i64, cells: &[(i64, i64)]) -> SkewComponent {
        SkewComponent::new(ParamScalar::from_int(base), cells.to_vec()).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<ParamScalar> {
        xs.iter().map(|&x| ParamScalar::from_int(x)).collect()
    }

    #[test]
    fn contents() {
        assert_eq!(BBox::new(0, 1, 3).content(), 2);
        assert_eq!(BBox::new(0, 1, 1).content(), 0);
        assert_eq!(BBox::new(0, 3, 1).content(), -2);
    }

    #[test]
    fn removable_boxes_by_decreasing_content() {
        let p = Partition::new(vec![3, 1, 1]).unwrap();
        assert_eq!(p.removable_boxes(0), vec![BBox::new(0, 1, 3), BBox::new(0, 3, 1)]);
        let row = Partition::new(vec![5]).unwrap();
        assert_eq!(row.removable_boxes(0), vec![BBox::new(0, 1, 5)]);
        let sq = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(sq.removable_boxes(0), vec![BBox::new(0, 2, 2)]);
        assert!(Partition::empty().removable_boxes(0).is_empty());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::hook(3, 2).parts(), &[3, 1, 1]);
    }

    #[test]
    fn box_order() {
        let a = BBox::new(0, 1, 1);
        assert!(a.leq(&BBox::new(0, 2, 2)));
        let (x, y) = (BBox::new(0, 1, 2), BBox::new(0, 2, 1));
        assert!(!x.leq(&y) && !y.leq(&x));
        assert!(!a.leq(&BBox::new(1, 2, 2)));
    }

    #[test]
    fn skew_closure_and_connectivity() {
        assert!(SkewComponent::new(ParamScalar::zero(), vec![(0, 1), (1, 0), (1, 1)]).is_ok());
        // missing (0,1) between (0,0) and (1,1)
        assert!(SkewComponent::new(ParamScalar::zero(), vec![(0, 0), (1, 0), (1, 1)]).is_err());
        assert!(SkewComponent::new(ParamScalar::zero(), vec![(0, 0), (1, 1)]).is_err());
        assert!(SkewComponent::new(ParamScalar::zero(), vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn vertical_strips() {
        let column = SkewPair::new(vec![comp(0, &[(0, 0), (1, 0), (2, 0)])], vec![]);
        assert!(is_vertical_strip(&column, 0));
        let row = SkewPair::new(vec![comp(0, &[(0, 0), (0, 1)])], vec![]);
        assert!(!is_vertical_strip(&row, 0));
        assert!(is_vertical_strip(&row, 1));
    }

    #[test]
    fn canonical_form_is_slide_invariant() {
        let c = comp(0, &[(0, 1), (1, 0), (1, 1)]);
        let d = SkewPair::new(vec![c.clone()], vec![comp(3, &[(0, 0)])]);
        let slid = SkewPair::new(vec![c.slide(1)], vec![comp(3, &[(0, 0)]).slide(-4)]);
        assert_eq!(canonical_form(&d), canonical_form(&slid));
        let canon = canonical_form(&d);
        assert_eq!(canonical_form(&canon), canon);
        // translation that keeps contents
        let moved = SkewPair::new(vec![c.translate(2, 5)], d.d1.clone());
        assert_eq!(canonical_form(&moved), canon);
    }

    #[test]
    fn canonical_order_of_singletons() {
        let a = SkewComponent::new(ParamScalar::ratio(5, 3), vec![(0, 0)]).unwrap();
        let b = SkewComponent::new(ParamScalar::ratio(4, 3), vec![(0, 0)]).unwrap();
        let ab = canonical_form(&SkewPair::new(vec![a.clone(), b.clone()], vec![]));
        let ba = canonical_form(&SkewPair::new(vec![b.clone(), a.clone()], vec![]));
        assert_eq!(ab, ba);
        // coset 1/3 sorts before coset 2/3
        assert_eq!(ab.d0[0].base_content, ParamScalar::ratio(4, 3));
    }

    #[test]
    fn connected_shape_counts() {
        // 1, 2 (row, column), 4 (row, column, (2,1), (2,2)/(1))
        assert_eq!(connected_skew_shapes(1).len(), 1);
        assert_eq!(connected_skew_shapes(2).len(), 2);
        assert_eq!(connected_skew_shapes(3).len(), 4);
        for s in 1..=6 {
            for shape in connected_skew_shapes(s) {
                assert!(is_skew(&shape) && is_connected(&shape) && shape.len() == s);
            }
        }
    }

    #[test]
    fn skew_shapes_from_contents() {
        // equal contents can never be adjacent: two singletons
        let two_zero = enumerate_skew_shapes(&ints(&[0, 0])).unwrap();
        assert_eq!(two_zero.len(), 1);
        assert_eq!(two_zero[0].len(), 2);
        // {0,1}: horizontal domino, vertical domino, two singletons
        assert_eq!(enumerate_skew_shapes(&ints(&[0, 1])).unwrap().len(), 3);
        // {0,1,2}: four connected shapes, 2 + 2 with a split-off singleton,
        // one with three singletons
        assert_eq!(enumerate_skew_shapes(&ints(&[0, 1, 2])).unwrap().len(), 9);
        // different cosets never mix
        let mixed = vec![ParamScalar::zero(), ParamScalar::ratio(1, 2)];
        let shapes = enumerate_skew_shapes(&mixed).unwrap();
        assert_eq!(shapes.len(), 1);
        assert!(enumerate_skew_shapes(&ints(&[0; 9])).is_err());
    }

    #[test]
    fn every_enumerated_component_is_skew() {
        for arrangement in enumerate_skew_shapes(&ints(&[0, 1, 1, 2, 3])).unwrap() {
            for c in &arrangement {
                c.validate().unwrap();
            }
            let mut got: Vec<ParamScalar> = arrangement.iter().flat_map(|c| c.contents()).collect();
            got.sort();
            let mut want = ints(&[0, 1, 1, 2, 3]);
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn standard_tableaux_small() {
        let row = SkewPair::new(vec![comp(0, &[(0, 0), (0, 1)])], vec![]);
        assert_eq!(enumerate_standard_tableaux(&row).unwrap().len(), 1);
        let col = SkewPair::new(vec![], vec![comp(0, &[(0, 0), (1, 0)])]);
        assert_eq!(enumerate_standard_tableaux(&col).unwrap().len(), 1);
        let two = SkewPair::new(vec![comp(0, &[(0, 0)])], vec![comp(5, &[(0, 0)])]);
        let tabs = enumerate_standard_tableaux(&two).unwrap();
        assert_eq!(tabs.len(), 2);
        assert!(tabs.iter().all(|t| t.is_standard(&two)));
        let square = SkewPair::new(vec![comp(0, &[(0, 0), (0, 1), (1, 0), (1, 1)])], vec![]);
        assert_eq!(enumerate_standard_tableaux(&square).unwrap().len(), 2);
    }

    #[test]
    fn json_shape() {
        let d = SkewPair::new(vec![comp(0, &[(0, 0), (0, 1)])], vec![comp(2, &[(0, 0)])]);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"[{"which":0,"base_content":"0","cells":[[0,0],[0,1]]},{"which":1,"base_content":"2","cells":[[0,0]]}]"#
        );
        let back: SkewPair = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }
}
