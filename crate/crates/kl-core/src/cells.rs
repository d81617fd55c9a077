//! The lowest two-sided cell and the left cell `Gamma_0`.
//!
//! Every element of the lowest cell factors uniquely as
//! `d_u * t_x * w0 * d_w^{-1}` with `u, w` in the finite Weyl group and `x`
//! dominant; lengths add across the four factors. `Gamma_0` is the slice
//! with trivial right component, equivalently the elements whose window is
//! strictly decreasing.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{KlError, Result};
use crate::hecke::HeckeElem;
use crate::kl::{dominant_weights_of_translation_length, DElem, KlEngine};
use crate::tensor::{tensor_mult, weyl_dim, DominantWeight};
use crate::weyl::{ExtAffElem, Weight};

/// `z` lies in `Gamma_0` iff `z = z' w0` with additive lengths, iff every
/// finite simple reflection is a right descent, iff the window is strictly
/// decreasing.
pub fn gamma0_contains(z: &ExtAffElem) -> bool {
    z.window().windows(2).all(|p| p[0] > p[1])
}

/// Factorization of a lowest-cell element as `d_u * t_x * w0 * d_w^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct C0Factorization {
    /// One-line notation of the finite Weyl element indexing the left
    /// `d`-factor.
    pub u: Vec<i64>,
    /// Dominant translation part.
    pub x: Vec<i64>,
    /// One-line notation of the finite Weyl element indexing the right
    /// `d`-factor.
    pub w: Vec<i64>,
}

/// Membership verdict for the lowest two-sided cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellQuery {
    InCell(C0Factorization),
    NotInCell,
}

impl CellQuery {
    pub fn factorization(&self) -> Option<&C0Factorization> {
        match self {
            CellQuery::InCell(f) => Some(f),
            CellQuery::NotInCell => None,
        }
    }
}

impl KlEngine {
    pub(crate) fn d_elements(&self) -> Arc<Vec<DElem>> {
        self.d_elems
            .get_or_init(|| {
                let datum = self.datum();
                let n = datum.rank();
                let mut out = Vec::new();
                for perm in datum.finite_elements() {
                    let chi: Vec<i64> = (1..=n)
                        .map(|i| if perm.window()[i - 1] > perm.window()[i] { 1 } else { 0 })
                        .collect();
                    let d = perm.multiply(&datum.translation(&Weight::new(chi)));
                    let len = d.length();
                    out.push(DElem { perm, d, len });
                }
                out.sort_by(|a, b| a.perm.cmp(&b.perm));
                Arc::new(out)
            })
            .clone()
    }

    /// `d_w = w * prod x_alpha` over the simple roots sent negative by `w`.
    pub fn d_of(&self, w: &ExtAffElem) -> Result<ExtAffElem> {
        if !w.is_finite() {
            return Err(KlError::NotFinite);
        }
        let n = self.rank();
        let chi: Vec<i64> = (1..=n)
            .map(|i| if w.window()[i - 1] > w.window()[i] { 1 } else { 0 })
            .collect();
        Ok(w.multiply(&self.datum().translation(&Weight::new(chi))))
    }

    /// Assemble `d_u * t_x * w0 * d_w^{-1}` from a factorization triple.
    pub fn assemble_c0(&self, u: &ExtAffElem, x: &Weight, w: &ExtAffElem) -> Result<ExtAffElem> {
        let du = self.d_of(u)?;
        let dw = self.d_of(w)?;
        Ok(du
            .multiply(&self.datum().translation(x))
            .multiply(self.w0_elem())
            .multiply(&dw.inverse()))
    }

    /// Decide membership in the lowest two-sided cell by searching for the
    /// unique length-additive factorization.
    pub fn c0_factorize(&self, z: &ExtAffElem) -> CellQuery {
        let a = self.w0_elem().length();
        let lz = z.length();
        if lz < a {
            return CellQuery::NotInCell;
        }
        let ds = self.d_elements();
        for left in ds.iter() {
            if left.len > lz - a {
                continue;
            }
            let m1 = left.d.inverse().multiply(z);
            if m1.length() != lz - left.len {
                continue;
            }
            for right in ds.iter() {
                if left.len + right.len + a > lz {
                    continue;
                }
                let m2 = m1.multiply(&right.d);
                if m2.length() != m1.length() - right.len {
                    continue;
                }
                let trans = m2.multiply(self.w0_elem());
                if trans.length() != m2.length() - a {
                    continue;
                }
                let Some(x) = trans.as_translation() else { continue };
                if !x.is_dominant() {
                    continue;
                }
                return CellQuery::InCell(C0Factorization {
                    u: left.perm.window().to_vec(),
                    x: x.coords().to_vec(),
                    w: right.perm.window().to_vec(),
                });
            }
        }
        CellQuery::NotInCell
    }

    /// The distinguished involutions of the lowest cell:
    /// `d_w w0 d_w^{-1}`, one per finite Weyl element.
    pub fn dist_involutions(&self) -> Vec<ExtAffElem> {
        let mut out: Vec<ExtAffElem> = self
            .d_elements()
            .iter()
            .map(|de| de.d.multiply(self.w0_elem()).multiply(&de.d.inverse()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The alternative description of the `d_w` set:
    /// `{z : z w0 in c0, z w0 s not in c0 for all s in W0 - {e}}`, searched
    /// over the bounded length range where the `d_w` live.
    pub fn d_set_characterization(&self) -> Result<Vec<ExtAffElem>> {
        let n = self.rank();
        if n > 3 {
            return Err(KlError::ResourceLimit(
                "d-set characterization search is exhaustive only for n <= 3".into(),
            ));
        }
        let datum = self.datum().clone();
        let w0 = self.w0_elem().clone();
        let a = w0.length();
        let ds = self.d_elements();
        let max_len = ds.iter().map(|d| d.len).max().unwrap();
        // candidates z with z w0 in c0: z = y w0 with y in c0 and
        // l(y) <= max_len + l(w0)
        let finite: Vec<ExtAffElem> = datum.finite_elements();
        let mut out = Vec::new();
        for lu in 0..=max_len {
            for du in ds.iter().filter(|d| d.len == lu) {
                for dv in ds.iter() {
                    if du.len + dv.len + a > max_len + a {
                        continue;
                    }
                    let rem = max_len - du.len - dv.len;
                    for tl in 0..=rem {
                        for x in dominant_weights_of_translation_length(n, tl) {
                            let y = du
                                .d
                                .multiply(&datum.translation(&x))
                                .multiply(&w0)
                                .multiply(&dv.d.inverse());
                            let z = y.multiply(&w0);
                            if z.length() > max_len {
                                continue;
                            }
                            let good = finite.iter().filter(|s| !s.is_identity()).all(|s| {
                                let t = y.multiply(s);
                                self.c0_factorize(&t) == CellQuery::NotInCell
                            });
                            if good {
                                out.push(z);
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// `E_{d_w} = v^{-l(d_w)} sum P_{y w0, d_w w0} T_y` over
    /// `{y <= d_w : l(y w0) = l(y) + l(w0)}`.
    pub fn e_elem(&self, w: &ExtAffElem) -> Result<HeckeElem> {
        self.ef_elem(w, false)
    }

    /// `F_{d_w}`: same coefficients on `T_{y^{-1}}`.
    pub fn f_elem(&self, w: &ExtAffElem) -> Result<HeckeElem> {
        self.ef_elem(w, true)
    }

    fn ef_elem(&self, w: &ExtAffElem, invert: bool) -> Result<HeckeElem> {
        let d = self.d_of(w)?;
        let w0 = self.w0_elem();
        let dw0 = d.multiply(w0);
        let cb = self.c_basis(&d)?;
        let mut out = HeckeElem::zero();
        let shift = -(d.length() as i64);
        for y in cb.support() {
            if y.multiply(w0).length() != y.length() + w0.length() {
                continue;
            }
            let p = self.kl_poly_gamma0(&y.multiply(w0), &dw0)?;
            let idx = if invert { y.inverse() } else { y.clone() };
            out.add_term(idx, &p.to_laurent().shifted(shift));
        }
        Ok(out)
    }

    /// `delta_{w0 d_u^{-1}, d_{u'} w0, z1 w0}` for `u != u'`, read off as a
    /// KL coefficient of a `Gamma_0` pair.
    ///
    /// For elements in different right cells the top coefficient of the
    /// structure constant vanishes and the subleading one equals a mu-value;
    /// specializing the decomposition below to a trivial second weight
    /// isolates exactly one delta.
    pub fn delta_c0(&self, u: &ExtAffElem, uprime: &ExtAffElem, z1: &Weight) -> Result<i64> {
        let du = self.d_of(u)?;
        let dup = self.d_of(uprime)?;
        let w0 = self.w0_elem();
        let lhs = du.multiply(&self.datum().translation(z1)).multiply(w0);
        let rhs = dup.multiply(w0);
        self.mu(&lhs, &rhs)
    }

    /// Kazhdan-Lusztig coefficient of a lowest-cell pair through the
    /// tensor-multiplicity decomposition
    /// `mu(y, w) = sum_{z1} m_{x*, x', z1*} delta_{w0 d_u^{-1}, d_{u'} w0, z1 w0}`.
    ///
    /// Pairs in different left and right cells give zero; pairs in the same
    /// right cell are transported through inversion; pairs in the same left
    /// and right cell give zero by the parity of the translation lattice.
    pub fn mu_c0_decomposed(&self, y: &ExtAffElem, w: &ExtAffElem) -> Result<i64> {
        let fy = match self.c0_factorize(y) {
            CellQuery::InCell(f) => f,
            CellQuery::NotInCell => return Err(KlError::NotInC0),
        };
        let fw = match self.c0_factorize(w) {
            CellQuery::InCell(f) => f,
            CellQuery::NotInCell => return Err(KlError::NotInC0),
        };
        if fy.w == fw.w {
            if fy.u == fw.u {
                // same left and right cell: translation parts differ by a
                // root-lattice element, so the length gap is even
                return Ok(0);
            }
            let uy = ExtAffElem::normalized(fy.u.clone());
            let uw = ExtAffElem::normalized(fw.u.clone());
            let xy = Weight::new(fy.x.clone());
            let xw = Weight::new(fw.x.clone());
            self.mu_gamma0_pair(&uy, &xy, &uw, &xw)
        } else if fy.u == fw.u {
            self.mu_c0_decomposed(&y.inverse(), &w.inverse())
        } else {
            Ok(0)
        }
    }

    /// The decomposition for a stripped pair `d_u t_x w0`, `d_{u'} t_{x'} w0`
    /// in the same left cell with `u != u'`.
    fn mu_gamma0_pair(
        &self,
        u: &ExtAffElem,
        x: &Weight,
        uprime: &ExtAffElem,
        xprime: &Weight,
    ) -> Result<i64> {
        let n = self.rank();
        let du_len = self.d_of(u)?.length();
        let dup_len = self.d_of(uprime)?.length();
        // nonzero delta forces l(t_{z1}) <= l(d_u) + l(d_{u'}) + 1 by the
        // degree bound on structure constants
        let max_tlen = du_len + dup_len + 1;
        let xd = DominantWeight::new(x.dual().coords().to_vec())?;
        let xp = DominantWeight::new(xprime.coords().to_vec())?;
        let mut total: i64 = 0;
        for tl in 0..=max_tlen {
            for z1 in dominant_weights_of_translation_length(n, tl) {
                let z1d = DominantWeight::new(z1.dual().coords().to_vec())?;
                let m = tensor_mult(&xd, &xp, &z1d)? as i64;
                if m == 0 {
                    continue;
                }
                let delta = self.delta_c0(u, uprime, &z1)?;
                if delta != 0 {
                    total = total
                        .checked_add(m.checked_mul(delta).expect("mu overflow"))
                        .expect("mu overflow");
                }
            }
        }
        assert!(total >= 0, "mu must be nonnegative");
        Ok(total)
    }

    /// The uniform bound
    /// `B = max_{u,u'} sum_{z1} dim V(z1) * delta_{w0 d_u^{-1}, d_{u'} w0, z1 w0}`,
    /// with the structure constants expanded directly. Exhaustive only at
    /// tiny rank.
    pub fn bound_b(&self) -> Result<u64> {
        let n = self.rank();
        if n > 2 {
            return Err(KlError::ResourceLimit(
                "bound B is computed exhaustively only for n <= 2".into(),
            ));
        }
        let datum = self.datum().clone();
        let w0 = self.w0_elem().clone();
        let a = w0.length();
        let finite = datum.finite_elements();
        let mut best: u64 = 0;
        for u in &finite {
            let lhs = w0.multiply(&self.d_of(u)?.inverse());
            for uprime in &finite {
                let rhs = self.d_of(uprime)?.multiply(&w0);
                let h_all = self.h_const_all(&lhs, &rhs)?;
                let mut sum: u64 = 0;
                for (z, h) in &h_all {
                    let trans = z.multiply(&w0);
                    let x = trans
                        .as_translation()
                        .expect("lowest-cell product support must be translation dressed");
                    assert!(x.is_dominant());
                    let delta = h.coeff(a as i64 - 1);
                    assert!(delta >= 0, "negative structure coefficient");
                    if delta > 0 {
                        let dim = weyl_dim(&DominantWeight::new(x.coords().to_vec())?)?;
                        sum += dim * delta as u64;
                    }
                }
                best = best.max(sum);
            }
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::RootDatum;

    fn engine(n: usize) -> KlEngine {
        KlEngine::new(n).unwrap()
    }

    #[test]
    fn gamma0_examples() {
        let datum = RootDatum::new(3).unwrap();
        assert!(gamma0_contains(&datum.w0()));
        let x = datum.translation(&Weight::new(vec![2, 0, 1]));
        assert!(gamma0_contains(&x.multiply(&datum.w0())));
        assert!(!gamma0_contains(&datum.identity()));
        assert!(!gamma0_contains(&datum.simple(1)));
    }

    #[test]
    fn d_of_examples() {
        let eng = engine(2);
        let datum = eng.datum().clone();
        assert_eq!(eng.d_of(&datum.identity()).unwrap(), datum.identity());
        let dw0 = eng.d_of(&datum.w0()).unwrap();
        let expected = datum.w0().multiply(&datum.translation(&Weight::rho(2)));
        assert_eq!(dw0, expected);
        assert!(eng.d_of(&datum.omega()).is_err());
    }

    #[test]
    fn factorize_w0_and_small() {
        let eng = engine(2);
        let datum = eng.datum().clone();
        let q = eng.c0_factorize(&datum.w0());
        let f = q.factorization().expect("w0 is in the lowest cell");
        assert_eq!(f.u, vec![1, 2, 3]);
        assert_eq!(f.x, vec![0, 0]);
        assert_eq!(f.w, vec![1, 2, 3]);
        assert_eq!(eng.c0_factorize(&datum.simple(1)), CellQuery::NotInCell);
    }

    #[test]
    fn factorization_round_trip_small() {
        let eng = engine(2);
        let datum = eng.datum().clone();
        for u in datum.finite_elements() {
            for w in datum.finite_elements() {
                for x in [Weight::new(vec![0, 0]), Weight::new(vec![1, 0]), Weight::new(vec![1, 2])]
                {
                    let z = eng.assemble_c0(&u, &x, &w).unwrap();
                    let f = eng.c0_factorize(&z);
                    let f = f.factorization().expect("assembled element is in the cell");
                    assert_eq!(f.u, u.window().to_vec());
                    assert_eq!(f.x, x.coords().to_vec());
                    assert_eq!(f.w, w.window().to_vec());
                    // length additivity across the four factors
                    let du = eng.d_of(&u).unwrap();
                    let dw = eng.d_of(&w).unwrap();
                    assert_eq!(
                        z.length(),
                        du.length()
                            + x.translation_length() as usize
                            + eng.w0_elem().length()
                            + dw.length()
                    );
                }
            }
        }
    }

    #[test]
    fn dist_involutions_small() {
        for n in [1usize, 2, 3] {
            let eng = engine(n);
            let datum = eng.datum().clone();
            let invs = eng.dist_involutions();
            let mut fact: Vec<usize> = vec![1];
            for i in 1..=n + 1 {
                fact.push(fact.last().unwrap() * i);
            }
            assert_eq!(invs.len(), fact[n + 1], "cardinality (n+1)!");
            assert!(invs.contains(&datum.w0()));
            for m in &invs {
                assert!(m.multiply(m).is_identity(), "{} squared", m);
                let f = eng.c0_factorize(m);
                let f = f.factorization().expect("distinguished involutions live in the cell");
                assert_eq!(f.u, f.w, "factorization is (w, 0, w)");
                assert!(f.x.iter().all(|&c| c == 0));
            }
        }
    }
}
