use crate::characters::LinearChar;
use crate::error::{Error, Result};

/// A signed permutation: `x_i ↦ signs[i] · x_{perm[i]}` and likewise for `y`.
/// Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        let bijective = perm.iter().all(|&p| p < n && !std::mem::replace(&mut seen[p], true));
        if !bijective || signs.len() != n || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidParams(format!("({perm:?}, {signs:?}) is not a signed permutation")));
        }
        Ok(SignedPerm { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// The transposition `(i j)`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm.swap(i, j);
        w
    }

    /// `ζ_i`, the sign change of coordinate `i`.
    pub fn sign_change(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.signs[i] = -1;
        w
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `self ∘ other`: acting by the result equals acting by `other`, then `self`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let signs = other
            .perm
            .iter()
            .zip(&other.signs)
            .map(|(&p, &s)| s * self.signs[p])
            .collect();
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    pub fn perm_sign(&self) -> i8 {
        let mut visited = vec![false; self.rank()];
        let mut sign = 1;
        for start in 0..self.rank() {
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.perm[i];
                len += 1;
            }
            if len > 0 && len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn sign_product(&self) -> i8 {
        self.signs.iter().product()
    }

    pub fn character(&self, sigma: LinearChar) -> i8 {
        sigma.value(self.perm_sign(), self.sign_product())
    }

    /// All `2^n n!` elements, identity first.
    pub fn all(n: usize) -> Vec<SignedPerm> {
        let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
        for k in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    (0..=k).map(move |pos| {
                        let mut q = p.clone();
                        q.insert(pos, k);
                        q
                    })
                })
                .collect();
        }
        perms.sort();
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for mask in 0..1u32 << n {
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedPerm { perm: p.clone(), signs });
            }
        }
        out
    }
}
