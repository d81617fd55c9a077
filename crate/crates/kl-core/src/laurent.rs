//! Exact integer Laurent polynomials in `v = q^{1/2}` and ordinary
//! polynomials in `q`.
//!
//! Coefficients are checked `i64`; an overflow aborts with a panic rather
//! than wrapping silently.

use std::fmt;

use serde::{Deserialize, Serialize};

#[inline]
fn cadd(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow in Laurent arithmetic")
}

#[inline]
fn cmul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow in Laurent arithmetic")
}

/// Laurent polynomial in `v`.
///
/// Canonical form: `coeffs` is empty for the zero polynomial; otherwise the
/// first and last entries are nonzero and `coeffs[i]` is the coefficient of
/// `v^(min_deg + i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LaurentPoly {
    min_deg: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_deg: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * v^deg`.
    pub fn monomial(deg: i64, c: i64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            LaurentPoly { min_deg: deg, coeffs: vec![c] }
        }
    }

    pub fn from_parts(min_deg: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { min_deg, coeffs };
        p.canonicalize();
        p
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_deg += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, deg: i64) -> i64 {
        if self.is_zero() || deg < self.min_deg {
            return 0;
        }
        let idx = (deg - self.min_deg) as usize;
        self.coeffs.get(idx).copied().unwrap_or(0)
    }

    pub fn min_deg(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg)
        }
    }

    pub fn max_deg(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.min_deg + i as i64, c))
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let max = self.max_deg().unwrap();
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_parts(-max, coeffs)
    }

    /// Multiply by `v^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_deg: self.min_deg + k, coeffs: self.coeffs.clone() }
    }

    pub fn scaled(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|&x| cmul(x, c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_deg.min(other.min_deg);
        let hi = self.max_deg().unwrap().max(other.max_deg().unwrap());
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (d, c) in self.iter() {
            coeffs[(d - lo) as usize] = cadd(coeffs[(d - lo) as usize], c);
        }
        for (d, c) in other.iter() {
            coeffs[(d - lo) as usize] = cadd(coeffs[(d - lo) as usize], c);
        }
        Self::from_parts(lo, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                coeffs[i + j] = cadd(coeffs[i + j], cmul(a, b));
            }
        }
        Self::from_parts(self.min_deg + other.min_deg, coeffs)
    }

    /// Add `c * v^k * other` into `self`.
    pub fn add_scaled(&mut self, other: &Self, c: i64, k: i64) {
        if c == 0 || other.is_zero() {
            return;
        }
        *self = self.add(&other.scaled(c).shifted(k));
    }

    /// Render in `v`-form, ascending powers: `v^-3+2v^-1+v`.
    pub fn to_v_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.iter() {
            let mag = c.abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push(if c < 0 { '-' } else { '+' });
            }
            let show_coeff = mag != 1 || d == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if d != 0 {
                out.push('v');
                if d != 1 {
                    out.push_str(&format!("^{}", d));
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_v_string())
    }
}

/// Polynomial in `q` with nonnegative exponents; `coeffs[i]` is the
/// coefficient of `q^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Embed via `q = v^2`.
    pub fn to_laurent(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; 2 * self.coeffs.len() - 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c;
        }
        LaurentPoly::from_parts(0, coeffs)
    }

    /// Inverse of [`QPoly::to_laurent`]; `None` if an odd or negative power
    /// of `v` has a nonzero coefficient.
    pub fn try_from_laurent(p: &LaurentPoly) -> Option<Self> {
        if p.is_zero() {
            return Some(Self::zero());
        }
        if p.min_deg().unwrap() < 0 {
            return None;
        }
        let mut coeffs = vec![0i64; (p.max_deg().unwrap() / 2 + 1) as usize];
        for (d, c) in p.iter() {
            if d % 2 != 0 {
                return None;
            }
            coeffs[(d / 2) as usize] = c;
        }
        Some(Self::from_coeffs(coeffs))
    }

    /// Render in `q`-form, ascending powers: `1+2q+q^2`.
    pub fn to_q_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push(if c < 0 { '-' } else { '+' });
            }
            if mag != 1 || d == 0 {
                out.push_str(&mag.to_string());
            }
            if d != 0 {
                out.push('q');
                if d != 1 {
                    out.push_str(&format!("^{}", d));
                }
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_q_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_zero() {
        let p = LaurentPoly::from_parts(-3, vec![0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn bar_is_involutive() {
        let p = LaurentPoly::from_parts(-2, vec![1, 0, 3, -1]);
        assert_eq!(p.bar().bar(), p);
        assert_eq!(p.bar().coeff(2), 1);
        assert_eq!(p.bar().coeff(-1), -1);
    }

    #[test]
    fn display_forms() {
        let p = LaurentPoly::from_parts(-3, vec![1, 0, 2, 0, 1]);
        assert_eq!(p.to_v_string(), "v^-3+2v^-1+v");
        let q = QPoly::from_coeffs(vec![1, 2, 1]);
        assert_eq!(q.to_q_string(), "1+2q+q^2");
        assert_eq!(QPoly::zero().to_q_string(), "0");
    }

    #[test]
    fn q_laurent_round_trip() {
        let q = QPoly::from_coeffs(vec![1, 0, 5, 7]);
        let l = q.to_laurent();
        assert_eq!(QPoly::try_from_laurent(&l), Some(q));
        assert_eq!(QPoly::try_from_laurent(&LaurentPoly::monomial(1, 1)), None);
        assert_eq!(QPoly::try_from_laurent(&LaurentPoly::monomial(-2, 1)), None);
    }

    #[test]
    fn mul_matches_distribution() {
        let a = LaurentPoly::from_parts(-1, vec![1, 1]); // v^-1 + 1
        let b = LaurentPoly::from_parts(0, vec![1, 1]); // 1 + v
        let ab = a.mul(&b);
        assert_eq!(ab, LaurentPoly::from_parts(-1, vec![1, 2, 1]));
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn overflow_panics() {
        let big = LaurentPoly::monomial(0, i64::MAX);
        let _ = big.add(&LaurentPoly::one());
    }
}
