//! Sparse Hecke algebra elements in the standard T-basis.
//!
//! The defining relations used throughout: for a simple reflection `s`,
//! `T_s T_w = T_{sw}` if `l(sw) > l(w)` and `q T_{sw} + (q-1) T_w`
//! otherwise; `T_omega T_w = T_{omega w}` since `omega` has length zero.

use std::collections::BTreeMap;

use crate::error::{KlError, Result};
use crate::laurent::LaurentPoly;
use crate::weyl::{ExtAffElem, RootDatum};

/// Finitely supported map from group elements to Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeckeElem {
    terms: BTreeMap<ExtAffElem, LaurentPoly>,
}

impl HeckeElem {
    pub fn zero() -> Self {
        HeckeElem { terms: BTreeMap::new() }
    }

    pub fn unit(w: ExtAffElem) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: ExtAffElem, c: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        HeckeElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &ExtAffElem) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExtAffElem, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExtAffElem> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, w: ExtAffElem, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &HeckeElem) {
        for (w, c) in other.iter() {
            self.add_term(w.clone(), c);
        }
    }

    /// `self += c * v^k * other`.
    pub fn add_scaled(&mut self, other: &HeckeElem, c: i64, k: i64) {
        if c == 0 {
            return;
        }
        for (w, p) in other.iter() {
            self.add_term(w.clone(), &p.scaled(c).shifted(k));
        }
    }

    pub fn sub_assign(&mut self, other: &HeckeElem) {
        for (w, c) in other.iter() {
            self.add_term(w.clone(), &c.neg());
        }
    }

    pub fn scaled(&self, c: &LaurentPoly) -> HeckeElem {
        let mut out = HeckeElem::zero();
        for (w, p) in self.iter() {
            out.add_term(w.clone(), &p.mul(c));
        }
        out
    }

    /// Left product `T_{s_i} * self`.
    pub fn lmul_simple(&self, i: usize) -> HeckeElem {
        let q = LaurentPoly::monomial(2, 1);
        let qm1 = LaurentPoly::from_parts(0, vec![-1, 0, 1]); // q - 1
        let mut out = HeckeElem::zero();
        for (w, c) in self.iter() {
            let sw = w.mul_simple_left(i);
            if sw.length() > w.length() {
                out.add_term(sw, c);
            } else {
                out.add_term(sw, &c.mul(&q));
                out.add_term(w.clone(), &c.mul(&qm1));
            }
        }
        out
    }

    /// Right product `self * T_{s_i}`.
    pub fn rmul_simple(&self, i: usize) -> HeckeElem {
        let q = LaurentPoly::monomial(2, 1);
        let qm1 = LaurentPoly::from_parts(0, vec![-1, 0, 1]);
        let mut out = HeckeElem::zero();
        for (w, c) in self.iter() {
            let ws = w.mul_simple_right(i);
            if ws.length() > w.length() {
                out.add_term(ws, c);
            } else {
                out.add_term(ws, &c.mul(&q));
                out.add_term(w.clone(), &c.mul(&qm1));
            }
        }
        out
    }

    /// Left product `T_{omega^k} * self`.
    pub fn lmul_omega(&self, k: i64) -> HeckeElem {
        if k == 0 {
            return self.clone();
        }
        let datum = RootDatum::new(self.rank().expect("nonzero element")).unwrap();
        let om = datum.omega_pow(k);
        let mut out = HeckeElem::zero();
        for (w, c) in self.iter() {
            out.add_term(om.multiply(w), c);
        }
        out
    }

    /// Right product `self * T_{omega^k}`.
    pub fn rmul_omega(&self, k: i64) -> HeckeElem {
        if k == 0 {
            return self.clone();
        }
        let datum = RootDatum::new(self.rank().expect("nonzero element")).unwrap();
        let om = datum.omega_pow(k);
        let mut out = HeckeElem::zero();
        for (w, c) in self.iter() {
            out.add_term(w.multiply(&om), c);
        }
        out
    }

    fn rank(&self) -> Option<usize> {
        self.terms.keys().next().map(|w| w.rank())
    }

    /// Maximal-length term, ties broken by window order; the pivot of the
    /// C-basis elimination.
    pub fn max_term(&self) -> Option<(&ExtAffElem, &LaurentPoly)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.length().cmp(&b.length()).then_with(|| a.cmp(b)))
    }
}

/// Product in the T-basis: `a * b = sum_y b_y (a * T_y)`, peeling a reduced
/// word of each `y` on the right.
pub fn t_mul(a: &HeckeElem, b: &HeckeElem) -> Result<HeckeElem> {
    if let (Some(ra), Some(rb)) = (a.rank(), b.rank()) {
        if ra != rb {
            return Err(KlError::RankMismatch(ra, rb));
        }
    }
    let mut out = HeckeElem::zero();
    for (y, c) in b.iter() {
        let (k, word) = y.reduced_word();
        let mut acc = a.rmul_omega(k as i64);
        for &s in &word {
            acc = acc.rmul_simple(s);
        }
        for (w, p) in acc.iter() {
            out.add_term(w.clone(), &p.mul(c));
        }
    }
    Ok(out)
}

/// `(sum_{u in W0} T_u) * h`, via the coset factorization
/// `sum_{S_{m+1}} = sum_{S_m} * (1 + T_{s_m} + T_{s_m s_{m-1}} + ...)`.
///
/// This is the cheap path for products with `C_{w0}` on the left: it costs
/// `O(n^3)` simple-reflection passes instead of `|W0|` word peels.
pub fn w0_sum_lmul(n: usize, h: &HeckeElem) -> HeckeElem {
    let mut acc = h.clone();
    for m in (1..=n).rev() {
        // G_m * acc with G_m = 1 + T_{s_m} + T_{s_m s_{m-1}} + ... + T_{s_m ... s_1}
        let mut sum = acc.clone();
        for j in (1..=m).rev() {
            // chain s_m s_{m-1} ... s_j applied to acc: innermost first
            let mut t = acc.clone();
            for s in j..=m {
                t = t.lmul_simple(s);
            }
            sum.add_assign(&t);
        }
        acc = sum;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::RootDatum;

    #[test]
    fn quadratic_relation() {
        let datum = RootDatum::new(2).unwrap();
        let s = HeckeElem::unit(datum.simple(1));
        let ss = t_mul(&s, &s).unwrap();
        // T_s T_s = q T_e + (q-1) T_s
        assert_eq!(ss.coeff(&datum.identity()), LaurentPoly::monomial(2, 1));
        assert_eq!(ss.coeff(&datum.simple(1)), LaurentPoly::from_parts(0, vec![-1, 0, 1]));
        assert_eq!(ss.len(), 2);
    }

    #[test]
    fn identity_neutral() {
        let datum = RootDatum::new(2).unwrap();
        let e = HeckeElem::unit(datum.identity());
        let x = {
            let mut h = HeckeElem::unit(datum.simple(0));
            h.add_term(datum.omega(), &LaurentPoly::from_parts(-1, vec![2, 0, 3]));
            h
        };
        assert_eq!(t_mul(&e, &x).unwrap(), x);
        assert_eq!(t_mul(&x, &e).unwrap(), x);
    }

    #[test]
    fn braid_associativity() {
        let datum = RootDatum::new(2).unwrap();
        let a = HeckeElem::unit(datum.simple(1));
        let b = HeckeElem::unit(datum.simple(2));
        let lhs = t_mul(&t_mul(&a, &b).unwrap(), &a).unwrap();
        let rhs = t_mul(&a, &t_mul(&b, &a).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_unit() {
        let datum = RootDatum::new(2).unwrap();
        let om = HeckeElem::unit(datum.omega());
        let s = HeckeElem::unit(datum.simple(1));
        let prod = t_mul(&om, &s).unwrap();
        assert_eq!(prod, HeckeElem::unit(datum.omega().multiply(&datum.simple(1))));
    }

    #[test]
    fn w0_sum_matches_direct() {
        let datum = RootDatum::new(2).unwrap();
        let mut full = HeckeElem::zero();
        for u in datum.finite_elements() {
            full.add_term(u, &LaurentPoly::one());
        }
        let h = {
            let mut h = HeckeElem::unit(datum.simple(0));
            h.add_term(datum.w0(), &LaurentPoly::monomial(-1, 1));
            h
        };
        let fast = w0_sum_lmul(2, &h);
        let slow = t_mul(&full, &h).unwrap();
        assert_eq!(fast, slow);
    }
}
