use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::SignedPerm;
use crate::arith::Rational;
use crate::characters::LinearChar;

/// Exponents of `x_1..x_n` followed by `y_1..y_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        debug_assert!(exps.len().is_multiple_of(2));
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; 2 * n] }
    }

    pub fn x(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    pub fn y(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[n + i] = 1;
        m
    }

    pub fn rank(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// `(deg_x, deg_y)`.
    pub fn bidegree(&self) -> (usize, usize) {
        let n = self.rank();
        let dx = self.exps[..n].iter().map(|&e| e as usize).sum();
        (dx, self.degree() - dx)
    }

    /// `deg_x - deg_y`.
    pub fn euler_degree(&self) -> i64 {
        let (a, b) = self.bidegree();
        a as i64 - b as i64
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Image under `w`, with its sign.
    pub fn act(&self, w: &SignedPerm) -> (i8, Monomial) {
        let n = self.rank();
        let mut exps = vec![0; 2 * n];
        let mut sign = 1i8;
        for i in 0..n {
            let (ex, ey) = (self.exps[i], self.exps[n + i]);
            exps[w.perm()[i]] = ex;
            exps[n + w.perm()[i]] = ey;
            if w.signs()[i] < 0 && (ex + ey) % 2 == 1 {
                sign = -sign;
            }
        }
        (sign, Monomial { exps })
    }

    /// All monomials of bidegree `(a, b)` in rank `n`, sorted.
    pub fn of_bidegree(n: usize, a: usize, b: usize) -> Vec<Monomial> {
        let xs = compositions(a, n);
        let ys = compositions(b, n);
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            for y in &ys {
                let mut exps = x.clone();
                exps.extend_from_slice(y);
                out.push(Monomial { exps });
            }
        }
        out.sort();
        out
    }

    /// All monomials of total degree `d`, sorted.
    pub fn of_degree(n: usize, d: usize) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = (0..=d).flat_map(|a| Self::of_bidegree(n, a, d - a)).collect();
        out.sort();
        out
    }
}

/// Weak compositions of `total` into `parts` parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<u16>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first as u16);
            out.push(rest);
        }
    }
    out
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank();
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let var = if i < n { 'x' } else { 'y' };
            write!(f, "{var}{}", i % n + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A polynomial with rational coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyQ {
    terms: BTreeMap<Monomial, Rational>,
}

impl PolyQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> PolyQ {
        PolyQ::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c * k)))
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        let mut out = PolyQ::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        degrees.next().is_none_or(|d| degrees.all(|e| e == d))
    }
}

/// `w · p`.
pub fn act(w: &SignedPerm, p: &PolyQ) -> PolyQ {
    PolyQ::from_terms(p.terms.iter().map(|(m, c)| {
        let (s, image) = m.act(w);
        (image, if s < 0 { -c } else { c.clone() })
    }))
}

/// `(1/|W|) Σ_w σ(w) w · p` over the whole group of rank `n`; `σ = triv`
/// gives the Reynolds operator.
pub fn project(p: &PolyQ, n: usize, sigma: LinearChar) -> PolyQ {
    let group = SignedPerm::all(n);
    let mut out = PolyQ::zero();
    for w in &group {
        let image = act(w, p);
        let k = Rational::from_integer(BigInt::from(w.character(sigma)));
        out = out.add(&image.scale(&k));
    }
    out.scale(&Rational::new(BigInt::one(), BigInt::from(group.len())))
}

pub fn reynolds(p: &PolyQ, n: usize) -> PolyQ {
    project(p, n, LinearChar::Triv)
}
