//! Deformation parameters `(c, d)` and the three parameter regimes used by
//! the bound scenarios: Gordon's point, generic rectangles and hook points.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::ParamScalar;
use crate::error::{Error, Result};
use crate::shapes::{BBox, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub c: ParamScalar,
    pub d: ParamScalar,
    pub n: usize,
}

impl Params {
    pub fn new(c: ParamScalar, d: ParamScalar, n: usize) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidParams("c must be nonzero".into()));
        }
        if n == 0 {
            return Err(Error::InvalidParams("rank must be positive".into()));
        }
        Ok(Params { c, d, n })
    }

    /// Parses assignments such as `["c=3/5", "d=27/10"]` or `["c=t", "d=5/2-t"]`.
    pub fn parse(assignments: &[&str], n: usize) -> Result<Self> {
        let mut c = None;
        let mut d = None;
        for a in assignments {
            let (name, expr) = a
                .split_once('=')
                .ok_or_else(|| Error::InvalidParams(format!("`{a}` is not of the form name=value")))?;
            let value: ParamScalar = expr.trim().parse()?;
            match name.trim() {
                "c" => c = Some(value),
                "d" => d = Some(value),
                other => return Err(Error::InvalidParams(format!("unknown parameter `{other}`"))),
            }
        }
        let c = c.ok_or_else(|| Error::InvalidParams("missing c".into()))?;
        let d = d.ok_or_else(|| Error::InvalidParams("missing d".into()))?;
        Params::new(c, d, n)
    }

    /// `d_i`: `d` for even `i`, `-d` for odd `i`.
    pub fn d_alt(&self, i: i64) -> ParamScalar {
        if i.rem_euclid(2) == 0 {
            self.d.clone()
        } else {
            -&self.d
        }
    }

    /// `d_{β(b)} + 2 ct(b) c`.
    pub fn charged_content(&self, b: &BBox) -> ParamScalar {
        self.d_alt(b.beta as i64) + ParamScalar::from_int(2 * b.content()) * &self.c
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={}, d={}, n={}", self.c, self.d, self.n)
    }
}

/// `c = d = (2n+1)/2n`, which satisfies `2n+1 = 2(d + (n-1)c)`.
pub fn gordon_params(n: usize) -> Result<Params> {
    if n == 0 {
        return Err(Error::InvalidParams("rank must be positive".into()));
    }
    let v = ParamScalar::ratio(2 * n as i64 + 1, 2 * n as i64);
    let p = Params::new(v.clone(), v, n)?;
    let rhs = ParamScalar::from_int(2) * (&p.d + &(ParamScalar::from_int(n as i64 - 1) * &p.c));
    debug_assert_eq!(rhs, ParamScalar::from_int(2 * n as i64 + 1));
    Ok(p)
}

/// Generic parameters for a rectangular lowest weight `(shape, ∅)`:
/// `c = t` and `d` solved from `target = 2(d + ct(b) c)` with `b` the
/// removable box.
pub fn rect_params(shape: &Partition, target: u32, n: usize) -> Result<Params> {
    if !shape.is_rectangular() {
        return Err(Error::InvalidShape(format!("{shape} is not a rectangle")));
    }
    if target.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("target {target} must be odd")));
    }
    if shape.size() != n {
        return Err(Error::InvalidParams(format!("{shape} does not have {n} boxes")));
    }
    let b = shape.removable_boxes(0)[0];
    let c = ParamScalar::tau();
    let d = ParamScalar::ratio(target as i64, 2) - ParamScalar::from_int(b.content()) * &c;
    Params::new(c, d, n)
}

/// Parameters for the hook `(k, 1^m)`, `m = n - k`: `c = k/n` and `d` with
/// `3 = 2d + 2 ct(b') c`, where `b'` is the bottom box (content `-m`).
pub fn hook_params(n: usize, k: usize) -> Result<Params> {
    if k == 0 || k > n {
        return Err(Error::InvalidParams(format!("arm length {k} outside 1..={n}")));
    }
    if k.gcd(&n) != 1 {
        return Err(Error::InvalidParams(format!("k = {k} is not coprime to n = {n}")));
    }
    let m = (n - k) as i64;
    let c = ParamScalar::ratio(k as i64, n as i64);
    let d = ParamScalar::ratio(3, 2) + ParamScalar::from_int(m) * &c;
    Params::new(c, d, n)
}

/// Arm length of the hook used for rank `n`: `n/2+1`, `n/2+2` or `(n+1)/2`
/// for `n ≡ 0 (mod 4)`, `n ≡ 2 (mod 4)` and odd `n`.
pub fn hook_k(n: usize) -> usize {
    match n % 4 {
        0 => n / 2 + 1,
        2 => n / 2 + 2,
        _ => n.div_ceil(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> ParamScalar {
        x.parse().unwrap()
    }

    #[test]
    fn alternating_d() {
        let p = Params::new(s("t"), s("5/2"), 4).unwrap();
        assert_eq!(p.d_alt(0), s("5/2"));
        assert_eq!(p.d_alt(1), s("-5/2"));
        assert_eq!(p.d_alt(-2), s("5/2"));
        // -q-1 with q odd is even
        assert_eq!(p.d_alt(-3 - 1), s("5/2"));
    }

    #[test]
    fn charged_contents() {
        let p = Params::new(s("t"), s("5/2"), 4).unwrap();
        assert_eq!(p.charged_content(&BBox::new(0, 1, 1)), p.d);
        assert_eq!(p.charged_content(&BBox::new(0, 1, 3)), s("5/2 + 4t"));
        assert_eq!(p.charged_content(&BBox::new(1, 1, 1)), s("-5/2"));
        let h = hook_params(5, 3).unwrap();
        assert_eq!(h.charged_content(&BBox::new(0, 3, 1)), s("3/10"));
    }

    #[test]
    fn gordon() {
        let p = gordon_params(4).unwrap();
        assert_eq!(p.c, s("9/8"));
        assert_eq!(p.d, s("9/8"));
        assert_eq!(gordon_params(1).unwrap().c, s("3/2"));
        assert_eq!(gordon_params(2).unwrap().d, s("5/4"));
        for n in 1..=12 {
            let p = gordon_params(n).unwrap();
            let lhs = ParamScalar::from_int(2 * n as i64 + 1);
            let rhs = ParamScalar::from_int(2) * (&p.d + &(ParamScalar::from_int(n as i64 - 1) * &p.c));
            assert!((lhs - rhs).is_zero());
        }
    }

    #[test]
    fn rectangles() {
        let sq = Partition::new(vec![2, 2]).unwrap();
        let p = rect_params(&sq, 5, 4).unwrap();
        assert_eq!((p.c.clone(), p.d.clone()), (s("t"), s("5/2")));
        let r33 = Partition::new(vec![3, 3]).unwrap();
        assert_eq!(rect_params(&r33, 7, 6).unwrap().d, s("7/2 - t"));
        assert_eq!(rect_params(&Partition::new(vec![1]).unwrap(), 3, 1).unwrap().d, s("3/2"));
        assert!(rect_params(&Partition::new(vec![2, 1]).unwrap(), 5, 3).is_err());
        assert!(rect_params(&sq, 4, 4).is_err());
    }

    #[test]
    fn hooks() {
        let p = hook_params(5, 3).unwrap();
        assert_eq!((p.c.clone(), p.d.clone()), (s("3/5"), s("27/10")));
        let p = hook_params(7, 4).unwrap();
        assert_eq!((p.c.clone(), p.d.clone()), (s("4/7"), s("45/14")));
        assert!(hook_params(4, 2).is_err());
        assert_eq!(hook_k(8), 5);
        assert_eq!(hook_k(10), 7);
        assert_eq!(hook_k(9), 5);
    }

    #[test]
    fn hook_defining_equations_hold() {
        for n in 2..=64usize {
            let k = hook_k(n);
            assert_eq!(k.gcd(&n), 1, "n = {n}");
            if k >= n {
                continue;
            }
            let p = hook_params(n, k).unwrap();
            let m = (n - k) as i64;
            let two = ParamScalar::from_int(2);
            let lhs = &two * &p.d + two.clone() * ParamScalar::from_int(-m) * &p.c;
            assert_eq!(lhs, ParamScalar::from_int(3));
            assert_eq!(two * ParamScalar::from_int(n as i64) * &p.c, ParamScalar::from_int(2 * k as i64));
        }
    }

    #[test]
    fn parse_assignments() {
        let p = Params::parse(&["c=3/5", "d=27/10"], 5).unwrap();
        assert_eq!(p, hook_params(5, 3).unwrap());
        let p = Params::parse(&["c=t", "d=5/2-t"], 4).unwrap();
        assert_eq!(p.d, s("5/2-t"));
        assert!(Params::parse(&["c=0", "d=1"], 1).is_err());
        assert!(Params::parse(&["c=1"], 1).is_err());
        assert!(Params::parse(&["e=1", "c=1", "d=1"], 1).is_err());
    }
}
