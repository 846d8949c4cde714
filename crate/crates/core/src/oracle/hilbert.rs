//! Graded dimensions of the diagonal coinvariant ring `R/I` of the
//! hyperoctahedral group, by exact linear algebra one bidegree at a time.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::group::SignedPerm;
use super::linalg::{rank, Echelon, SparseVec};
use super::poly::Monomial;
use crate::characters::{eps_chi_bound, LinearChar};
use crate::error::{Error, Result};

/// Largest rank the oracle accepts.
pub const MAX_ORACLE_RANK: usize = 3;
/// Default cap on the total degree swept.
pub const DEFAULT_MAX_DEGREE: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BidegreeDims {
    pub x_degree: usize,
    pub y_degree: usize,
    pub quotient_dim: usize,
    pub isotypic: BTreeMap<LinearChar, usize>,
}

/// Dimensions of one graded piece (by total or by Euler degree).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    pub degree: i64,
    pub quotient_dim: usize,
    pub isotypic: BTreeMap<LinearChar, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedReport {
    pub n: usize,
    /// By total degree `deg_x + deg_y`.
    pub per_degree: Vec<GradedDims>,
    /// By Euler degree `deg_x - deg_y`.
    pub per_euler_degree: Vec<GradedDims>,
    pub bigraded: Vec<BidegreeDims>,
    pub total: usize,
    /// First total degree with a zero piece (or the cap, if not complete).
    pub stop_degree: usize,
    /// False when the degree cap was hit before a zero piece.
    pub complete: bool,
}

impl GradedReport {
    fn from_bigraded(n: usize, bigraded: Vec<BidegreeDims>, stop_degree: usize, complete: bool) -> Self {
        let group = |key: &dyn Fn(&BidegreeDims) -> i64| {
            let mut acc: BTreeMap<i64, GradedDims> = BTreeMap::new();
            for b in &bigraded {
                let k = key(b);
                let e = acc.entry(k).or_insert_with(|| GradedDims {
                    degree: k,
                    quotient_dim: 0,
                    isotypic: LinearChar::ALL.iter().map(|&c| (c, 0)).collect(),
                });
                e.quotient_dim += b.quotient_dim;
                for (c, d) in &b.isotypic {
                    *e.isotypic.get_mut(c).expect("all characters") += d;
                }
            }
            acc.into_values().collect::<Vec<_>>()
        };
        let per_degree = group(&|b| (b.x_degree + b.y_degree) as i64);
        let per_euler_degree = group(&|b| b.x_degree as i64 - b.y_degree as i64);
        let total = bigraded.iter().map(|b| b.quotient_dim).sum();
        GradedReport {
            n,
            per_degree,
            per_euler_degree,
            bigraded,
            total,
            stop_degree,
            complete,
        }
    }

    pub fn isotypic_total(&self, sigma: LinearChar) -> usize {
        self.per_degree.iter().map(|d| d.isotypic[&sigma]).sum()
    }

    /// Per-total-degree dimensions of the `σ`-isotypic component.
    pub fn isotypic_by_degree(&self, sigma: LinearChar) -> BTreeMap<i64, usize> {
        self.per_degree.iter().map(|d| (d.degree, d.isotypic[&sigma])).collect()
    }

    pub fn isotypic_by_euler_degree(&self, sigma: LinearChar) -> BTreeMap<i64, usize> {
        self.per_euler_degree.iter().map(|d| (d.degree, d.isotypic[&sigma])).collect()
    }

    /// One line per bidegree: `x_degree,y_degree,quotient_dim,triv,det,chi,chi_prime`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x_degree,y_degree,quotient_dim");
        for c in LinearChar::ALL {
            out.push(',');
            out.push_str(c.name());
        }
        out.push('\n');
        for b in &self.bigraded {
            out.push_str(&format!("{},{},{}", b.x_degree, b.y_degree, b.quotient_dim));
            for c in LinearChar::ALL {
                out.push_str(&format!(",{}", b.isotypic[&c]));
            }
            out.push('\n');
        }
        out
    }
}

/// Monomials of one bidegree with the ideal's piece in that bidegree.
struct Slice {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    ideal: Echelon,
}

impl Slice {
    fn empty(n: usize, a: usize, b: usize) -> Self {
        let monos = Monomial::of_bidegree(n, a, b);
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
        Slice {
            monos,
            index,
            ideal: Echelon::new(),
        }
    }

    fn full(&self) -> bool {
        self.ideal.rank() == self.monos.len()
    }

    fn to_sparse(&self, terms: HashMap<Monomial, i64>) -> SparseVec {
        let mut v: SparseVec = terms
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (self.index[&m], BigInt::from(c)))
            .collect();
        v.sort_unstable_by_key(|e| e.0);
        v
    }

    /// `Σ_w σ(w) w·m` over the orbit of each monomial, one per orbit.
    fn orbit_projections(&self, group: &[SignedPerm], sigma: LinearChar) -> Vec<SparseVec> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for m in &self.monos {
            if seen.contains(m) {
                continue;
            }
            let mut terms: HashMap<Monomial, i64> = HashMap::new();
            for w in group {
                let (s, image) = m.act(w);
                seen.insert(image.clone());
                *terms.entry(image).or_insert(0) += (s * w.character(sigma)) as i64;
            }
            let v = self.to_sparse(terms);
            if !v.is_empty() {
                out.push(v);
            }
        }
        out
    }

    /// `Σ_w σ(w) w·v` for a vector of this slice.
    fn project(&self, v: &SparseVec, group: &[SignedPerm], sigma: LinearChar) -> SparseVec {
        let mut terms: HashMap<u32, BigInt> = HashMap::new();
        for w in group {
            let chi = w.character(sigma);
            for (col, c) in v {
                let (s, image) = self.monos[*col as usize].act(w);
                let e = terms.entry(self.index[&image]).or_default();
                if s * chi > 0 {
                    *e += c;
                } else {
                    *e -= c;
                }
            }
        }
        let mut out: SparseVec = terms.into_iter().filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign).collect();
        out.sort_unstable_by_key(|e| e.0);
        out
    }

    /// Rows of `prev`'s ideal multiplied by the variable `var`.
    fn shifted(&self, prev: &Slice, var: &Monomial) -> Vec<SparseVec> {
        let table: Vec<u32> = prev.monos.iter().map(|m| self.index[&m.mul(var)]).collect();
        prev.ideal
            .rows()
            .iter()
            .map(|row| {
                let mut v: SparseVec = row.iter().map(|(c, k)| (table[*c as usize], k.clone())).collect();
                v.sort_unstable_by_key(|e| e.0);
                v
            })
            .collect()
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParams("rank must be positive".into()));
    }
    if n > MAX_ORACLE_RANK {
        return Err(Error::TooLarge {
            what: "oracle rank",
            size: n,
            limit: MAX_ORACLE_RANK,
        });
    }
    Ok(())
}

/// Builds the bidegree `(a, b)` piece of the ideal from the pieces one
/// degree lower: `I_{a,b} = Σ x_i I_{a-1,b} + Σ y_i I_{a,b-1} + Inv_{a,b}`.
/// Any product `f g` with `g` an invariant generator either has `f`
/// constant, in which case it lies in `Inv_{a,b}`, or is divisible by a
/// variable, so the three terms span the whole piece.
fn build_slice(
    n: usize,
    a: usize,
    b: usize,
    prev: &HashMap<(usize, usize), Slice>,
    group: &[SignedPerm],
) -> (Slice, BidegreeDims) {
    let mut slice = Slice::empty(n, a, b);
    if a + b > 0 {
        for inv in slice.orbit_projections(group, LinearChar::Triv) {
            slice.ideal.insert(inv);
        }
        let mut sources = Vec::new();
        if a > 0 {
            sources.extend((0..n).map(|i| (&prev[&(a - 1, b)], Monomial::x(n, i))));
        }
        if b > 0 {
            sources.extend((0..n).map(|i| (&prev[&(a, b - 1)], Monomial::y(n, i))));
        }
        'outer: for (src, var) in sources {
            for v in slice.shifted(src, &var) {
                if slice.full() {
                    break 'outer;
                }
                slice.ideal.insert(v);
            }
        }
    }
    let quotient_dim = slice.monos.len() - slice.ideal.rank();
    let isotypic = LinearChar::ALL
        .iter()
        .map(|&sigma| {
            if quotient_dim == 0 {
                return (sigma, 0);
            }
            let r_sigma = slice.orbit_projections(group, sigma).len();
            let i_sigma = rank(slice.ideal.rows().iter().map(|row| slice.project(row, group, sigma)));
            (sigma, r_sigma - i_sigma)
        })
        .collect();
    let dims = BidegreeDims {
        x_degree: a,
        y_degree: b,
        quotient_dim,
        isotypic,
    };
    (slice, dims)
}

/// Sweeps total degree `0, 1, 2, ...` and stops at the first degree whose
/// quotient piece is zero. Stopping there is sound: the quotient is
/// generated by its degree-one piece, so a zero piece in degree `D` forces
/// every piece above `D` to vanish. If `max_degree` is passed first the
/// report is returned with `complete = false`.
pub fn quotient_hilbert(n: usize, max_degree: usize) -> Result<GradedReport> {
    check_rank(n)?;
    let group = SignedPerm::all(n);
    let mut bigraded = Vec::new();
    let mut prev: HashMap<(usize, usize), Slice> = HashMap::new();
    for degree in 0..=max_degree {
        let built: Vec<(Slice, BidegreeDims)> = (0..=degree)
            .into_par_iter()
            .map(|a| build_slice(n, a, degree - a, &prev, &group))
            .collect();
        let piece: usize = built.iter().map(|(_, d)| d.quotient_dim).sum();
        prev = HashMap::new();
        for (slice, dims) in built {
            prev.insert((dims.x_degree, dims.y_degree), slice);
            if piece > 0 {
                bigraded.push(dims);
            }
        }
        if piece == 0 {
            return Ok(GradedReport::from_bigraded(n, bigraded, degree, true));
        }
    }
    Ok(GradedReport::from_bigraded(n, bigraded, max_degree, false))
}

/// Per-degree quotient dimensions by the unrefined route: the degree-`D`
/// piece of the ideal is spanned by `f · g`, `g` running over a basis of the
/// invariants of degree `1..=D` and `f` over monomials of the complementary
/// degree. Used as a cross-check of [`quotient_hilbert`].
pub fn quotient_dims_direct(n: usize, max_degree: usize) -> Result<Vec<usize>> {
    check_rank(n)?;
    let group = SignedPerm::all(n);
    let index_of = |d: usize| -> (Vec<Monomial>, HashMap<Monomial, u32>) {
        let monos = Monomial::of_degree(n, d);
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
        (monos, index)
    };
    // invariant bases, as explicit term lists
    let mut invariants: Vec<Vec<Vec<(Monomial, BigInt)>>> = vec![Vec::new()];
    let mut dims = Vec::new();
    for degree in 0..=max_degree {
        let (monos, index) = index_of(degree);
        if degree > 0 {
            let mut ech = Echelon::new();
            let mut seen = HashSet::new();
            for m in &monos {
                if !seen.insert(m.clone()) {
                    continue;
                }
                let mut terms: HashMap<u32, i64> = HashMap::new();
                for w in &group {
                    let (s, image) = m.act(w);
                    seen.insert(image.clone());
                    *terms.entry(index[&image]).or_insert(0) += s as i64;
                }
                let mut v: SparseVec =
                    terms.into_iter().filter(|e| e.1 != 0).map(|(c, k)| (c, BigInt::from(k))).collect();
                v.sort_unstable_by_key(|e| e.0);
                ech.insert(v);
            }
            invariants.push(
                ech.rows()
                    .iter()
                    .map(|row| row.iter().map(|(c, k)| (monos[*c as usize].clone(), k.clone())).collect())
                    .collect(),
            );
        }
        let mut ech = Echelon::new();
        for (e, basis) in invariants.iter().enumerate().skip(1) {
            for f in Monomial::of_degree(n, degree - e) {
                for g in basis {
                    let mut v: SparseVec = g.iter().map(|(m, k)| (index[&m.mul(&f)], k.clone())).collect();
                    v.sort_unstable_by_key(|t| t.0);
                    ech.insert(v);
                }
            }
        }
        let q = monos.len() - ech.rank();
        dims.push(q);
        if q == 0 {
            break;
        }
    }
    Ok(dims)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonReport {
    pub n: usize,
    pub dim: usize,
    /// `(2n+1)^n`.
    pub principal: usize,
    pub epsilon: i64,
    pub chi_prime_dim: usize,
    pub complete: bool,
}

/// `dim R/I` against `(h+1)^n`, `h = 2n`, with the consistency checks the
/// lower bounds impose.
pub fn epsilon_report(n: usize, max_degree: usize) -> Result<EpsilonReport> {
    let report = quotient_hilbert(n, max_degree)?;
    epsilon_from(&report)
}

pub fn epsilon_from(report: &GradedReport) -> Result<EpsilonReport> {
    let n = report.n;
    let principal = (2 * n + 1).pow(n as u32);
    let epsilon = report.total as i64 - principal as i64;
    let chi_prime_dim = report.isotypic_total(LinearChar::ChiPrime);
    if report.complete {
        if epsilon < 0 {
            return Err(Error::Oracle(format!(
                "dimension {} is below (2n+1)^n = {principal}",
                report.total
            )));
        }
        let bound = eps_chi_bound(n, true)?;
        let needed = bound.eps_chi_lower + n as i64 + 1;
        if (chi_prime_dim as i64) < needed {
            return Err(Error::Oracle(format!(
                "chi' component has dimension {chi_prime_dim}, below the lower bound {needed}"
            )));
        }
    }
    Ok(EpsilonReport {
        n,
        dim: report.total,
        principal,
        epsilon,
        chi_prime_dim,
        complete: report.complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one() {
        let r = quotient_hilbert(1, DEFAULT_MAX_DEGREE).unwrap();
        assert!(r.complete);
        let dims: Vec<usize> = r.per_degree.iter().map(|d| d.quotient_dim).collect();
        assert_eq!(dims, vec![1, 2]);
        assert_eq!(r.stop_degree, 2);
        assert_eq!(r.total, 3);
        assert_eq!(r.isotypic_total(LinearChar::Det), 2);
        assert_eq!(r.isotypic_total(LinearChar::Triv), 1);
        assert_eq!(quotient_dims_direct(1, 10).unwrap(), vec![1, 2, 0]);
    }

    #[test]
    fn rank_two_agrees_with_direct_route() {
        let r = quotient_hilbert(2, DEFAULT_MAX_DEGREE).unwrap();
        let mut dims: Vec<usize> = r.per_degree.iter().map(|d| d.quotient_dim).collect();
        dims.push(0);
        assert_eq!(quotient_dims_direct(2, DEFAULT_MAX_DEGREE).unwrap(), dims);
        assert_eq!(dims[0], 1);
        assert_eq!(dims[1], 4);
        for d in &r.per_degree {
            assert!(d.isotypic.values().all(|&v| v <= d.quotient_dim));
            assert!(d.isotypic.values().sum::<usize>() <= d.quotient_dim);
            let refined: usize = r
                .bigraded
                .iter()
                .filter(|b| (b.x_degree + b.y_degree) as i64 == d.degree)
                .map(|b| b.quotient_dim)
                .sum();
            assert_eq!(refined, d.quotient_dim);
        }
    }

    #[test]
    fn rank_limits() {
        assert!(matches!(quotient_hilbert(4, 3), Err(Error::TooLarge { .. })));
        let partial = quotient_hilbert(2, 1).unwrap();
        assert!(!partial.complete);
        assert_eq!(partial.total, 5);
    }

    #[test]
    fn csv_header() {
        let r = quotient_hilbert(1, 5).unwrap();
        let csv = r.to_csv();
        assert!(csv.starts_with("x_degree,y_degree,quotient_dim,triv,det,chi,chi_prime\n0,0,1,1,0,1,0\n"));
    }
}
