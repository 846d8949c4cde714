//! Exact rank computation over the rationals on sparse integer rows.
//!
//! Rows are kept primitive (content divided out) and are reduced against
//! existing pivots by fraction-free cross-multiplication, so no rational
//! arithmetic or rounding is ever involved.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Sparse vector: `(column, nonzero coefficient)` sorted by column.
pub type SparseVec = Vec<(u32, BigInt)>;

/// Rows in echelon form, one per distinct leading column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot: HashMap<u32, usize>,
}

fn make_primitive(v: &mut SparseVec) {
    let mut g = BigInt::zero();
    for (_, c) in v.iter() {
        g = g.gcd(c);
        if g == BigInt::from(1) {
            break;
        }
    }
    if v.first().is_some_and(|(_, c)| c.is_negative()) {
        g = -g;
    }
    if g != BigInt::from(1) && !g.is_zero() {
        for (_, c) in v.iter_mut() {
            *c /= &g;
        }
    }
}

/// `a * v - b * r`.
fn combine(v: &SparseVec, a: &BigInt, r: &SparseVec, b: &BigInt) -> SparseVec {
    let mut out = Vec::with_capacity(v.len() + r.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < r.len() {
        let take_v = j == r.len() || (i < v.len() && v[i].0 < r[j].0);
        let take_r = i == v.len() || (j < r.len() && r[j].0 < v[i].0);
        if take_v {
            out.push((v[i].0, &v[i].1 * a));
            i += 1;
        } else if take_r {
            out.push((r[j].0, -(&r[j].1 * b)));
            j += 1;
        } else {
            let c = &v[i].1 * a - &r[j].1 * b;
            if !c.is_zero() {
                out.push((v[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Leading columns of the stored rows.
    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.pivot.keys().copied()
    }

    /// Reduces `v` against the stored rows; keeps and returns `true` if it is
    /// independent of them.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        v.retain(|(_, c)| !c.is_zero());
        make_primitive(&mut v);
        while let Some((lead, coeff)) = v.first().cloned() {
            match self.pivot.get(&lead) {
                None => {
                    self.pivot.insert(lead, self.rows.len());
                    self.rows.push(v);
                    return true;
                }
                Some(&r) => {
                    let row = &self.rows[r];
                    let g = coeff.gcd(&row[0].1);
                    let a = &row[0].1 / &g;
                    let b = &coeff / &g;
                    v = combine(&v, &a, row, &b);
                    make_primitive(&mut v);
                }
            }
        }
        false
    }
}

/// Rank of a list of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
