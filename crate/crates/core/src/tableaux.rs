//! Admissible fillings of a lowest weight, the order they impose on basis
//! labels, weight sequences, and reconstruction of the skew diagram that
//! carries each simple summand.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::ParamScalar;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::shapes::{
    canonical_form_with_tableau, is_skew, BBox, Bipartition, SkewComponent, SkewPair, SkewTableau,
};

/// A filling of the boxes of a bipartition by non-negative integers, stored
/// in [`Bipartition::boxes`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QFilling {
    values: Vec<u32>,
}

impl QFilling {
    /// Checks weak increase along rows and down columns of each component.
    pub fn new(lambda: &Bipartition, values: Vec<u32>) -> Result<Self> {
        let layout = Layout::new(lambda);
        if values.len() != layout.boxes.len() {
            return Err(Error::InvalidShape(format!(
                "filling has {} entries, {} has {} boxes",
                values.len(),
                lambda,
                layout.boxes.len()
            )));
        }
        for (i, nbs) in layout.right_down.iter().enumerate() {
            if nbs.iter().flatten().any(|&j| values[j] < values[i]) {
                return Err(Error::InvalidShape(format!(
                    "filling {values:?} decreases after {}",
                    layout.boxes[i]
                )));
            }
        }
        Ok(QFilling { values })
    }

    /// Builds a filling from rows, components listed as `[rows of λ0, rows of λ1]`.
    pub fn from_nested(lambda: &Bipartition, nested: &[Vec<Vec<u32>>]) -> Result<Self> {
        let mut values = Vec::new();
        for beta in 0..2u8 {
            let rows = nested.get(beta as usize).map(Vec::as_slice).unwrap_or(&[]);
            let parts = lambda.component(beta).parts();
            if rows.len() != parts.len() || rows.iter().zip(parts).any(|(r, &p)| r.len() != p as usize) {
                return Err(Error::InvalidShape(format!(
                    "rows {rows:?} do not match component {beta} of {lambda}"
                )));
            }
            values.extend(rows.iter().flatten().copied());
        }
        QFilling::new(lambda, values)
    }

    pub fn to_nested(&self, lambda: &Bipartition) -> [Vec<Vec<u32>>; 2] {
        let mut it = self.values.iter().copied();
        let mut take = |beta: u8| -> Vec<Vec<u32>> {
            lambda
                .component(beta)
                .parts()
                .iter()
                .map(|&p| it.by_ref().take(p as usize).collect())
                .collect()
        };
        let first = take(0);
        [first, take(1)]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Sum of entries: the polynomial degree of the basis vectors `f_{P,Q}`.
    pub fn degree(&self) -> u64 {
        self.values.iter().map(|&v| v as u64).sum()
    }

    pub fn is_row_strict(&self, lambda: &Bipartition) -> bool {
        let layout = Layout::new(lambda);
        layout
            .right_down
            .iter()
            .enumerate()
            .all(|(i, [right, _])| right.is_none_or(|j| self.values[j] > self.values[i]))
    }
}

/// A bijection from boxes (in [`Bipartition::boxes`] order) to `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PFilling {
    values: Vec<usize>,
}

impl PFilling {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidShape(format!("{values:?} is not a bijection onto 1..={n}")));
            }
        }
        Ok(PFilling { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `inverse()[i - 1]` is the box index labelled `i`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.values.len()];
        for (b, &v) in self.values.iter().enumerate() {
            inv[v - 1] = b;
        }
        inv
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

/// `Q(b) < kappa`, found with the self-referential index resolved to the
/// given parity of `kappa`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxBound {
    pub b: BBox,
    pub kappa: u64,
    pub parity: Parity,
}

/// `Q(b) <= Q(b2) + kappa`, where `kappa = ct_c(b) - ct_c(b2) + sign * 2c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairBound {
    pub b: BBox,
    pub b2: BBox,
    pub kappa: u64,
    pub sign: i8,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSet {
    pub box_bounds: Vec<BoxBound>,
    pub pair_bounds: Vec<PairBound>,
}

/// Box indexing and neighbour structure of a bipartition.
#[derive(Clone, Debug)]
struct Layout {
    boxes: Vec<BBox>,
    index: HashMap<BBox, usize>,
    /// `[right neighbour, lower neighbour]` of each box.
    right_down: Vec<[Option<usize>; 2]>,
}

impl Layout {
    fn new(lambda: &Bipartition) -> Self {
        let boxes = lambda.boxes();
        let index: HashMap<BBox, usize> = boxes.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let right_down = boxes
            .iter()
            .map(|b| {
                [
                    index.get(&BBox::new(b.beta, b.row, b.col + 1)).copied(),
                    index.get(&BBox::new(b.beta, b.row + 1, b.col)).copied(),
                ]
            })
            .collect();
        Layout { boxes, index, right_down }
    }

    fn left_up(&self, i: usize) -> [Option<usize>; 2] {
        let b = self.boxes[i];
        [
            (b.col > 1).then(|| self.index[&BBox::new(b.beta, b.row, b.col - 1)]),
            (b.row > 1).then(|| self.index[&BBox::new(b.beta, b.row - 1, b.col)]),
        ]
    }
}

fn as_small_positive(x: &ParamScalar) -> Option<u64> {
    x.as_positive_integer().and_then(|k| k.to_u64())
}

/// The bounds of conditions (b) and (c) on admissible fillings.
///
/// For (b) the index `d_{β(b)-k}` depends on the parity of `k`, so both cases
/// are tested: even `k = 2 ct(b) c` and odd `k = 2 d_{β(b)} + 2 ct(b) c`; a
/// bound is recorded when the value is a positive integer of that parity.
/// For (c) a pair bound is recorded when `k = ct_c(b) - ct_c(b2) ± 2c` is a
/// positive integer and `β(b2) ≡ β(b) - k (mod 2)`.
pub fn resolve_constraints(lambda: &Bipartition, p: &Params) -> Result<ConstraintSet> {
    if lambda.size() != p.n {
        return Err(Error::InvalidParams(format!("{lambda} does not have {} boxes", p.n)));
    }
    let boxes = lambda.boxes();
    let two_c = ParamScalar::from_int(2) * &p.c;
    let mut cs = ConstraintSet::default();
    for b in &boxes {
        let even = ParamScalar::from_int(2 * b.content()) * &p.c;
        let odd = ParamScalar::from_int(2) * p.d_alt(b.beta as i64) + &even;
        for (value, parity) in [(even, Parity::Even), (odd, Parity::Odd)] {
            if let Some(kappa) = as_small_positive(&value) {
                if (kappa % 2 == 1) == (parity == Parity::Odd) {
                    cs.box_bounds.push(BoxBound { b: *b, kappa, parity });
                }
            }
        }
    }
    let charged: Vec<ParamScalar> = boxes.iter().map(|b| p.charged_content(b)).collect();
    for (i, b) in boxes.iter().enumerate() {
        for (j, b2) in boxes.iter().enumerate() {
            if i == j {
                continue;
            }
            let diff = &charged[i] - &charged[j];
            for sign in [1i8, -1] {
                let value = if sign > 0 { &diff + &two_c } else { &diff - &two_c };
                let Some(kappa) = as_small_positive(&value) else {
                    continue;
                };
                if (b2.beta as i64 - b.beta as i64 + kappa as i64).rem_euclid(2) == 0 {
                    cs.pair_bounds.push(PairBound { b: *b, b2: *b2, kappa, sign });
                }
            }
        }
    }
    Ok(cs)
}

/// Strict-precedence constraints between boxes: an edge `u -> v` forces
/// `P(u) < P(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dag {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Vertex limit for [`count_linear_extensions`].
pub const MAX_DAG_VERTICES: usize = 20;
/// Vertex limit for [`Dag::linear_extensions`].
pub const MAX_ENUMERATED_EXTENSIONS: usize = 10;

impl Dag {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let dag = Dag {
            n,
            edges: edges.into_iter().collect(),
        };
        if let Some(&(u, v)) = dag.edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::InvalidShape(format!("edge ({u}, {v}) outside {n} vertices")));
        }
        if let Some(v) = dag.find_cycle_vertex() {
            return Err(Error::Cycle(v.to_string()));
        }
        Ok(dag)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    fn preds(&self) -> Vec<Vec<usize>> {
        let mut preds = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            preds[v].push(u);
        }
        preds
    }

    fn find_cycle_vertex(&self) -> Option<usize> {
        let preds = self.preds();
        let mut indeg: Vec<usize> = preds.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut done = vec![false; self.n];
        while let Some(u) = queue.pop_front() {
            done[u] = true;
            for &(a, v) in &self.edges {
                if a == u {
                    indeg[v] -= 1;
                    if indeg[v] == 0 {
                        queue.push_back(v);
                    }
                }
            }
        }
        done.iter().position(|&d| !d)
    }

    /// The lexicographically first compatible labelling: repeatedly give the
    /// next label to the smallest available vertex.
    pub fn minimal_linear_extension(&self) -> PFilling {
        let preds = self.preds();
        let mut labels = vec![0usize; self.n];
        for next in 1..=self.n {
            let v = (0..self.n)
                .find(|&v| labels[v] == 0 && preds[v].iter().all(|&u| labels[u] != 0))
                .expect("acyclic");
            labels[v] = next;
        }
        PFilling { values: labels }
    }

    /// Every compatible labelling, in lexicographic order of the label
    /// assignment sequence.
    pub fn linear_extensions(&self) -> Result<Vec<PFilling>> {
        if self.n > MAX_ENUMERATED_EXTENSIONS {
            return Err(Error::TooLarge {
                what: "constraint graph",
                size: self.n,
                limit: MAX_ENUMERATED_EXTENSIONS,
            });
        }
        fn rec(next: usize, preds: &[Vec<usize>], labels: &mut Vec<usize>, out: &mut Vec<PFilling>) {
            let n = labels.len();
            if next > n {
                out.push(PFilling { values: labels.clone() });
                return;
            }
            for v in 0..n {
                if labels[v] == 0 && preds[v].iter().all(|&u| labels[u] != 0) {
                    labels[v] = next;
                    rec(next + 1, preds, labels, out);
                    labels[v] = 0;
                }
            }
        }
        let mut out = Vec::new();
        rec(1, &self.preds(), &mut vec![0; self.n], &mut out);
        Ok(out)
    }
}

/// Number of bijections onto `1..=n` compatible with every edge, by dynamic
/// programming over down-closed vertex subsets.
pub fn count_linear_extensions(g: &Dag) -> Result<u128> {
    if g.n > MAX_DAG_VERTICES {
        return Err(Error::TooLarge {
            what: "constraint graph",
            size: g.n,
            limit: MAX_DAG_VERTICES,
        });
    }
    let mut pred_mask = vec![0u32; g.n];
    for &(u, v) in &g.edges {
        pred_mask[v] |= 1 << u;
    }
    let full = (1usize << g.n) - 1;
    let mut ways = vec![0u128; full + 1];
    ways[0] = 1;
    for mask in 0..full {
        let w = ways[mask];
        if w == 0 {
            continue;
        }
        for (v, &pm) in pred_mask.iter().enumerate() {
            if mask & (1 << v) == 0 && (pm as usize) & !mask == 0 {
                ways[mask | (1 << v)] += w;
            }
        }
    }
    Ok(ways[full])
}

/// One `t`-weight component `(a_i, b_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightEntry {
    pub a: ParamScalar,
    pub b: u8,
}

/// Weight of a basis vector `f_{P,Q}`; entry `i - 1` belongs to label `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightSeq {
    pub entries: Vec<WeightEntry>,
}

impl WeightSeq {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `a_i / 2c` for each label, the cell contents of the diagram.
    pub fn contents(&self, p: &Params) -> Result<Vec<ParamScalar>> {
        let two_c = ParamScalar::from_int(2) * &p.c;
        self.entries.iter().map(|e| e.a.checked_div(&two_c)).collect()
    }
}

/// A lowest weight `λ` at parameters `(c, d)` with its resolved constraints:
/// the combinatorial model of the `t`-diagonalizable module `L_{c,d}(λ)`.
#[derive(Clone, Debug)]
pub struct LowestWeight {
    lambda: Bipartition,
    params: Params,
    layout: Layout,
    constraints: ConstraintSet,
    /// Pair bounds as box indices `(b, b2, kappa)`.
    pairs: Vec<(usize, usize, u64)>,
}

/// Per-box restriction used to prune enumeration.
#[derive(Clone, Copy, Debug, Default)]
pub struct FillingFilter {
    /// Required parity of `Q(b) - β(b)`.
    pub parity_offset: Option<u32>,
    pub row_strict: bool,
}

impl LowestWeight {
    pub fn new(lambda: Bipartition, params: Params) -> Result<Self> {
        let constraints = resolve_constraints(&lambda, &params)?;
        let layout = Layout::new(&lambda);
        let pairs = constraints
            .pair_bounds
            .iter()
            .map(|pb| (layout.index[&pb.b], layout.index[&pb.b2], pb.kappa))
            .collect();
        Ok(LowestWeight {
            lambda,
            params,
            layout,
            constraints,
            pairs,
        })
    }

    pub fn lambda(&self) -> &Bipartition {
        &self.lambda
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn constraints(&self) -> &ConstraintSet {
        &self.constraints
    }

    pub fn boxes(&self) -> &[BBox] {
        &self.layout.boxes
    }

    pub fn box_index(&self, b: &BBox) -> Option<usize> {
        self.layout.index.get(b).copied()
    }

    /// Largest value each box can take in an admissible filling.
    pub fn upper_bounds(&self) -> Result<Vec<u64>> {
        let n = self.layout.boxes.len();
        let mut ub = vec![u64::MAX; n];
        for bb in &self.constraints.box_bounds {
            let i = self.layout.index[&bb.b];
            ub[i] = ub[i].min(bb.kappa - 1);
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut best = ub[i];
                for j in self.layout.right_down[i].iter().flatten() {
                    best = best.min(ub[*j]);
                }
                for &(b, b2, kappa) in &self.pairs {
                    if b == i && ub[b2] != u64::MAX {
                        best = best.min(ub[b2] + kappa);
                    }
                }
                if best < ub[i] {
                    ub[i] = best;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(i) = ub.iter().position(|&u| u == u64::MAX) {
            return Err(Error::Unbounded(self.layout.boxes[i].to_string()));
        }
        Ok(ub)
    }

    /// Every admissible filling, in lexicographic order.
    pub fn enumerate_tab(&self) -> Result<Vec<QFilling>> {
        self.enumerate_filtered(FillingFilter::default())
    }

    /// Admissible fillings that also pass `filter`; equal to filtering the
    /// output of [`enumerate_tab`](Self::enumerate_tab), without visiting
    /// the rejected fillings.
    pub fn enumerate_filtered(&self, filter: FillingFilter) -> Result<Vec<QFilling>> {
        let ub = self.upper_bounds()?;
        let n = self.layout.boxes.len();
        let mut checks: Vec<Vec<(usize, usize, u64)>> = vec![Vec::new(); n];
        for &(b, b2, kappa) in &self.pairs {
            checks[b.max(b2)].push((b, b2, kappa));
        }
        let mut out = Vec::new();
        let mut values = vec![0u32; n];
        self.fill(0, &ub, &checks, filter, &mut values, &mut out);
        Ok(out)
    }

    fn fill(
        &self,
        i: usize,
        ub: &[u64],
        checks: &[Vec<(usize, usize, u64)>],
        filter: FillingFilter,
        values: &mut Vec<u32>,
        out: &mut Vec<QFilling>,
    ) {
        if i == values.len() {
            out.push(QFilling { values: values.clone() });
            return;
        }
        let [left, up] = self.layout.left_up(i);
        let mut lo = 0u32;
        if let Some(l) = left {
            lo = lo.max(values[l] + u32::from(filter.row_strict));
        }
        if let Some(u) = up {
            lo = lo.max(values[u]);
        }
        let beta = self.layout.boxes[i].beta as u32;
        let hi = ub[i] as u32;
        let mut v = lo;
        while v <= hi {
            if let Some(off) = filter.parity_offset {
                if (v + 2 - beta % 2) % 2 != off % 2 {
                    v += 1;
                    continue;
                }
            }
            values[i] = v;
            let ok = checks[i]
                .iter()
                .all(|&(b, b2, kappa)| values[b] as u64 <= values[b2] as u64 + kappa);
            if ok {
                self.fill(i + 1, ub, checks, filter, values, out);
            }
            v += if filter.parity_offset.is_some() { 2 } else { 1 };
        }
    }

    /// Membership in the admissible set (weak increase plus all bounds).
    pub fn contains(&self, q: &QFilling) -> bool {
        let v = &q.values;
        v.len() == self.layout.boxes.len()
            && self.layout.right_down.iter().enumerate().all(|(i, nbs)| nbs.iter().flatten().all(|&j| v[j] >= v[i]))
            && self
                .constraints
                .box_bounds
                .iter()
                .all(|bb| (v[self.layout.index[&bb.b]] as u64) < bb.kappa)
            && self.pairs.iter().all(|&(b, b2, k)| v[b] as u64 <= v[b2] as u64 + k)
    }

    /// All pair inequalities hold strictly.
    pub fn is_generic(&self, q: &QFilling) -> bool {
        self.pairs
            .iter()
            .all(|&(b, b2, kappa)| (q.values[b] as u64) < q.values[b2] as u64 + kappa)
    }

    /// Precedence forced on `P` by `Q`: equal entries on comparable boxes
    /// (the lower-right box gets the smaller label), and pair bounds met
    /// with equality.
    pub fn p_dag(&self, q: &QFilling) -> Result<Dag> {
        let boxes = &self.layout.boxes;
        let v = &q.values;
        let mut edges = Vec::new();
        for (i, b) in boxes.iter().enumerate() {
            for (j, b2) in boxes.iter().enumerate() {
                if i != j && b.leq(b2) && v[i] == v[j] {
                    edges.push((j, i));
                }
            }
        }
        for &(b, b2, kappa) in &self.pairs {
            if v[b] as u64 == v[b2] as u64 + kappa {
                edges.push((b2, b));
            }
        }
        Dag::new(boxes.len(), edges).map_err(|e| match e {
            Error::Cycle(v) => Error::Cycle(boxes[v.parse::<usize>().unwrap_or(0)].to_string()),
            other => other,
        })
    }

    /// `dim L_Q`.
    pub fn dim_lq(&self, q: &QFilling) -> Result<u128> {
        count_linear_extensions(&self.p_dag(q)?)
    }

    /// `a_i = Q(b) + 1 - (d_β - d_{β-Q(b)-1}) - 2 ct(b) c` and
    /// `b_i = β - Q(b) mod 2` for the box `b` labelled `i` by `P`.
    pub fn weight_sequence(&self, pf: &PFilling, q: &QFilling) -> WeightSeq {
        let p = &self.params;
        let entries = pf
            .inverse()
            .into_iter()
            .map(|bi| {
                let b = self.layout.boxes[bi];
                let qv = q.values[bi] as i64;
                let beta = b.beta as i64;
                let shift = p.d_alt(beta) - p.d_alt(beta - qv - 1);
                let a = ParamScalar::from_int(qv + 1)
                    - shift
                    - ParamScalar::from_int(2 * b.content()) * &p.c;
                WeightEntry {
                    a,
                    b: (beta - qv).rem_euclid(2) as u8,
                }
            })
            .collect();
        WeightSeq { entries }
    }

    /// The precedence of `dag` carried over to labels by `pf`.
    pub fn label_order(dag: &Dag, pf: &PFilling) -> Vec<(usize, usize)> {
        dag.edges().map(|(u, v)| (pf.values[u], pf.values[v])).collect()
    }

    /// The diagram `D_{Q,c,d}`, reconstructed from the minimal compatible `P`.
    pub fn diagram_of_q(&self, q: &QFilling) -> Result<SkewPair> {
        Ok(self.diagram_with_tableau(q)?.0)
    }

    pub fn diagram_with_tableau(&self, q: &QFilling) -> Result<(SkewPair, SkewTableau)> {
        let dag = self.p_dag(q)?;
        let pf = dag.minimal_linear_extension();
        let w = self.weight_sequence(&pf, q);
        reconstruct_diagram(&w, &Self::label_order(&dag, &pf), &self.params)
    }

    /// Reconstructs the diagram from every compatible `P` and fails unless
    /// all agree. Limited to [`MAX_ENUMERATED_EXTENSIONS`] boxes.
    pub fn diagram_of_q_exhaustive(&self, q: &QFilling) -> Result<SkewPair> {
        let dag = self.p_dag(q)?;
        let mut shape: Option<SkewPair> = None;
        for pf in dag.linear_extensions()? {
            let w = self.weight_sequence(&pf, q);
            let (d, _) = reconstruct_diagram(&w, &Self::label_order(&dag, &pf), &self.params)?;
            match &shape {
                None => shape = Some(d),
                Some(s) if *s != d => {
                    return Err(Error::Reconstruction(format!(
                        "diagram depends on the choice of P for {:?}",
                        q.values
                    )))
                }
                _ => {}
            }
        }
        shape.ok_or_else(|| Error::Reconstruction("no compatible P".into()))
    }
}

/// Convenience wrapper for [`LowestWeight::enumerate_tab`].
pub fn enumerate_tab(lambda: &Bipartition, p: &Params) -> Result<Vec<QFilling>> {
    LowestWeight::new(lambda.clone(), p.clone())?.enumerate_tab()
}

/// Builds the skew diagram and standard tableau of a weight.
///
/// The weight alone fixes each cell's content `a_i / 2c` and diagram index
/// `b_i` but not which cells share a component: a horizontal domino and two
/// loose cells carry the same weight. `order` supplies the missing data as
/// pairs of labels `(i, j)` that precede each other in every weight of the
/// module; in the diagram these are exactly the pairs of cells with `i`
/// weakly above and left of `j`. Covering pairs become adjacent cells: right
/// when the content grows by one, below when it drops by one.
pub fn reconstruct_diagram(
    w: &WeightSeq,
    order: &[(usize, usize)],
    p: &Params,
) -> Result<(SkewPair, SkewTableau)> {
    let n = w.len();
    if n > 64 {
        return Err(Error::TooLarge { what: "weight", size: n, limit: 64 });
    }
    let contents = w.contents(p)?;
    let sheet: Vec<u8> = w.entries.iter().map(|e| e.b).collect();
    let fail = |msg: String| Error::Reconstruction(msg);

    // transitive closure over 0-based labels
    let mut above = vec![0u64; n];
    for &(i, j) in order {
        if i == 0 || j == 0 || i > n || j > n || i >= j {
            return Err(fail(format!("label pair ({i}, {j}) is not increasing")));
        }
        above[i - 1] |= 1 << (j - 1);
    }
    for k in 0..n {
        for i in 0..n {
            if above[i] >> k & 1 == 1 {
                above[i] |= above[k];
            }
        }
    }
    let related = |i: usize, j: usize| above[i] >> j & 1 == 1;

    let one = ParamScalar::one();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    // covering pairs with their step direction
    let mut steps: Vec<(usize, usize, (i64, i64))> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !related(i, j) || (i + 1..j).any(|k| related(i, k) && related(k, j)) {
                continue;
            }
            if sheet[i] != sheet[j] {
                return Err(fail(format!("labels {} and {} are ordered across diagrams", i + 1, j + 1)));
            }
            let delta = &contents[j] - &contents[i];
            let step = if delta == one {
                (0, 1)
            } else if delta == -&one {
                (1, 0)
            } else {
                return Err(fail(format!(
                    "labels {} and {} are ordered but their contents differ by {delta}",
                    i + 1,
                    j + 1
                )));
            };
            steps.push((i, j, step));
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }

    // place cells component by component
    let mut pos: Vec<Option<(i64, i64)>> = vec![None; n];
    let mut comps: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        comps.entry(r).or_default().push(i);
    }
    let mut roots: Vec<usize> = comps.keys().copied().collect();
    roots.sort_unstable_by_key(|r| comps[r][0]);
    for r in &roots {
        let members = &comps[r];
        pos[members[0]] = Some((0, 0));
        let mut queue = VecDeque::from([members[0]]);
        while let Some(u) = queue.pop_front() {
            let (ur, uc) = pos[u].expect("placed");
            for &(i, j, (dr, dc)) in &steps {
                let (other, at) = if i == u {
                    (j, (ur + dr, uc + dc))
                } else if j == u {
                    (i, (ur - dr, uc - dc))
                } else {
                    continue;
                };
                match pos[other] {
                    None => {
                        pos[other] = Some(at);
                        queue.push_back(other);
                    }
                    Some(existing) if existing != at => {
                        return Err(fail(format!("label {} has two positions", other + 1)));
                    }
                    _ => {}
                }
            }
        }
    }

    let mut pair = SkewPair::default();
    let mut tab = SkewTableau { labels: [Vec::new(), Vec::new()] };
    for r in &roots {
        let members = &comps[r];
        let cells: Vec<(i64, i64)> = members.iter().map(|&i| pos[i].expect("placed")).collect();
        let distinct: BTreeSet<_> = cells.iter().collect();
        if distinct.len() != cells.len() {
            return Err(fail("two labels land on the same cell".into()));
        }
        if !is_skew(&cells) {
            return Err(fail(format!("cells {cells:?} do not form a skew shape")));
        }
        for &i in members {
            for &j in members {
                let (a, b) = (pos[i].expect("placed"), pos[j].expect("placed"));
                let weakly_nw = i != j && a.0 <= b.0 && a.1 <= b.1;
                if weakly_nw != related(i, j) {
                    return Err(fail(format!(
                        "cell order of labels {} and {} disagrees with the label order",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let first = members[0];
        let (fr, fc) = pos[first].expect("placed");
        let base = &contents[first] - &ParamScalar::from_int(fc - fr);
        let comp = SkewComponent::new(base, cells.clone())?;
        // SkewComponent::new sorts cells; keep labels aligned with it
        let label_of: HashMap<(i64, i64), usize> =
            members.iter().map(|&i| (pos[i].expect("placed"), i + 1)).collect();
        let labels = comp.cells.iter().map(|c| label_of[c]).collect();
        let which = sheet[first];
        if which == 0 {
            pair.d0.push(comp);
        } else {
            pair.d1.push(comp);
        }
        tab.labels[which as usize].push(labels);
    }
    let (pair, tab) = canonical_form_with_tableau(&pair, &tab);
    if !tab.is_standard(&pair) {
        return Err(fail("reconstructed tableau is not standard".into()));
    }
    Ok((pair, tab))
}

impl fmt::Display for QFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

/// JSON form of a filling: `[[rows of λ0], [rows of λ1]]`.
pub fn q_filling_json(lambda: &Bipartition, q: &QFilling) -> serde_json::Value {
    serde_json::json!(q.to_nested(lambda))
}
